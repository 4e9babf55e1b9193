//! Order-search methods.
//!
//! | method | idea |
//! |--------|------|
//! | EC | concatenate the color classes of a proper edge-coloring |
//! | E-EC | EC, searching over permutations of the non-fixed color classes |
//! | LDF | longest-distance-first graph growth, then fewest-short-cycles |
//! | EBG | greedily append the edge that minimizes the partial bound |
//! | exhaustive | all orders, first edge pinned by symmetry |
//! | directed random | color-class prefix, uniformly random suffix |
//!
//! Parallel searches merge by (bound, lexicographic edge-index order), so
//! their results do not depend on the worker count.

mod ebg;
mod eec;
mod exhaustive;
mod ldf;
mod paths;
mod random;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::bound::{capacity_outer_bound, BoundParams, BoundReport};
use crate::coloring::{default_color_order, ec_order, ColorOrder};
use crate::edge::{Edge, MonomialOrder};
use crate::entropy::EntropyEngine;
use crate::error::{Error, Result};
use crate::graph::chromatic_index;

pub use ebg::{ebg_order, EBG_TIE_TOLERANCE};
pub use eec::e_ec_search;
pub use exhaustive::{
    exhaustive_search, ExhaustiveOptions, ExhaustiveOutcome, EXHAUSTIVE_DEFAULT_LIMIT,
};
pub use ldf::{ldf_order, order_inner_edges, LdfStart};
pub use paths::{count_distinct_paths, count_graph_classes, PATH_COUNT_LIMIT};
pub use random::directed_random_search;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Ec,
    EnhancedEc,
    Ldf,
    Ebg,
    Exhaustive,
    DirectedRandom,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Ec,
        Method::EnhancedEc,
        Method::Ldf,
        Method::Ebg,
        Method::Exhaustive,
        Method::DirectedRandom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Ec => "ec",
            Method::EnhancedEc => "e-ec",
            Method::Ldf => "ldf",
            Method::Ebg => "ebg",
            Method::Exhaustive => "exhaustive",
            Method::DirectedRandom => "random",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown method `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TiePolicy {
    /// Smallest edge index among tied candidates.
    #[default]
    Lexicographic,
    /// Uniform choice among tied candidates, from the configured seed.
    SeededRandom,
}

/// Default cap on E-EC color permutations (`9!`).
pub const DEFAULT_PERMUTATION_CAP: u128 = 362_880;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub method: Method,
    pub params: BoundParams,
    pub seed: u64,
    /// Number of random orders drawn by directed random search.
    pub budget: u64,
    /// Leading color classes held fixed (E-EC, directed random search).
    pub fixed_colors: usize,
    pub tie_policy: TiePolicy,
    /// Color-class order of the EC method.
    pub color_order: ColorOrder,
    /// Cap on `(chi' - fixed_colors)!` for E-EC.
    pub permutation_cap: u128,
    /// Lift the exhaustive-search size guard.
    pub force: bool,
    /// Record per-step choices (EBG, LDF).
    pub trace: bool,
}

impl SearchConfig {
    pub fn new(method: Method, params: BoundParams) -> Self {
        Self {
            method,
            params,
            seed: 0,
            budget: 10_000,
            fixed_colors: default_fixed_colors(method, params.f),
            tie_policy: TiePolicy::Lexicographic,
            color_order: default_color_order(params.f),
            permutation_cap: DEFAULT_PERMUTATION_CAP,
            force: false,
            trace: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let colors = chromatic_index(self.params.f);
        if self.fixed_colors == 0 || self.fixed_colors > colors {
            return Err(Error::InvalidConfig(format!(
                "fixed_colors must lie in 1..={colors}, got {}",
                self.fixed_colors
            )));
        }
        if self.budget == 0 {
            return Err(Error::InvalidConfig("budget must be at least 1".into()));
        }
        if self.method == Method::DirectedRandom && self.fixed_colors < 2 {
            return Err(Error::InvalidConfig(
                "directed random search fixes at least two color classes".into(),
            ));
        }
        Ok(())
    }
}

/// One color class for E-EC up to `f = 10`, two above (the full
/// `(chi' - 1)!` sweep is impractical there). Directed random search pins two.
pub fn default_fixed_colors(method: Method, f: usize) -> usize {
    let colors = chromatic_index(f.max(2));
    match method {
        Method::DirectedRandom => 2.min(colors),
        Method::EnhancedEc if f >= 11 => 2,
        _ => 1,
    }
}

/// Candidate scores at one greedy step.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep {
    pub chosen: Edge,
    pub scores: Vec<(Edge, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best: BoundReport,
    /// Full or partial bound evaluations performed.
    pub evaluations: u64,
    pub trace: Option<Vec<TraceStep>>,
}

/// Runs the configured method.
pub fn run(config: &SearchConfig, engine: &EntropyEngine) -> Result<SearchResult> {
    config.validate()?;
    let params = &config.params;
    match config.method {
        Method::Ec => {
            let order = ec_order(params.f, &config.color_order)?;
            single(order, params, engine)
        }
        Method::EnhancedEc => e_ec_search(config, engine),
        Method::Ldf => {
            let start = match config.tie_policy {
                TiePolicy::Lexicographic => LdfStart::default(),
                TiePolicy::SeededRandom => LdfStart::Seeded(config.seed),
            };
            single(ldf_order(params.f, start)?, params, engine)
        }
        Method::Ebg => ebg_order(params, engine, config.tie_policy, config.seed, config.trace),
        Method::Exhaustive => {
            let opts = ExhaustiveOptions {
                force: config.force,
                ..ExhaustiveOptions::default()
            };
            Ok(exhaustive_search(params, engine, &opts)?.result)
        }
        Method::DirectedRandom => directed_random_search(config, engine),
    }
}

fn single(
    order: MonomialOrder,
    params: &BoundParams,
    engine: &EntropyEngine,
) -> Result<SearchResult> {
    Ok(SearchResult {
        best: capacity_outer_bound(&order, params, engine)?,
        evaluations: 1,
        trace: None,
    })
}

/// A candidate order during a parallel search.
#[derive(Debug, Clone)]
pub(crate) struct Candidate {
    pub bound: f64,
    pub indices: Vec<u8>,
}

impl Candidate {
    /// Smaller bound first, then lexicographically smaller order.
    pub fn cmp_key(&self, other: &Candidate) -> Ordering {
        self.bound
            .total_cmp(&other.bound)
            .then_with(|| self.indices.cmp(&other.indices))
    }

    pub fn better(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
        match (a, b) {
            (Some(a), Some(b)) => Some(if b.cmp_key(&a) == Ordering::Less {
                b
            } else {
                a
            }),
            (a, b) => a.or(b),
        }
    }

    pub fn into_order(self, f: usize) -> Result<MonomialOrder> {
        let edges = self
            .indices
            .iter()
            .map(|&i| Edge::from_index(i as usize, f))
            .collect::<Result<Vec<_>>>()?;
        MonomialOrder::new(f, edges)
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}
