use rayon::prelude::*;

use super::{factorial, Candidate, SearchResult};
use crate::bound::{capacity_outer_bound, BoundParams};
use crate::edge::{mu, MonomialOrder};
use crate::entropy::{EntropyEngine, Partition};
use crate::error::{Error, Result};
use crate::summation::NeumaierSum;

/// Largest `f` searched without `force`.
pub const EXHAUSTIVE_DEFAULT_LIMIT: usize = 5;

/// Largest `f` whose subset-entropy table (`2^mu` entries) is built at all.
const TABLE_LIMIT: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExhaustiveOptions {
    pub force: bool,
    /// Pin the first edge to `(1,2)`; every single edge is equivalent under
    /// relabeling, so the minimum is unchanged.
    pub fix_first_edge: bool,
    pub collect_argmin: bool,
    /// Orders within this of the minimum belong to the argmin set.
    pub tolerance: f64,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        Self {
            force: false,
            fix_first_edge: true,
            collect_argmin: false,
            tolerance: 1e-12,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExhaustiveOutcome {
    pub result: SearchResult,
    /// All minimizing orders, lexicographic; present when requested.
    pub argmin: Option<Vec<MonomialOrder>>,
}

pub fn exhaustive_search(
    params: &BoundParams,
    engine: &EntropyEngine,
    opts: &ExhaustiveOptions,
) -> Result<ExhaustiveOutcome> {
    let f = params.f;
    if f > TABLE_LIMIT || (f > EXHAUSTIVE_DEFAULT_LIMIT && !opts.force) {
        let limit = if opts.force {
            TABLE_LIMIT
        } else {
            EXHAUSTIVE_DEFAULT_LIMIT
        };
        return Err(Error::SearchSpaceTooLarge { f, limit });
    }
    let m = mu(f);
    let mut table = vec![0.0f64; 1 << m];
    fill_table(engine, &mut table, 0, &engine.root(), 0, m);

    let inv = 1.0 / params.n as f64;
    let weights: Vec<f64> = (0..m)
        .map(|v| {
            if params.n == 1 {
                1.0
            } else {
                inv.powi(v as i32)
            }
        })
        .collect();
    let ctx = Ctx {
        table: &table,
        weights: &weights,
        h_min: engine.h_min(),
        m,
        collect: opts.collect_argmin,
        tolerance: opts.tolerance,
    };

    let roots: Vec<Vec<u8>> = if opts.fix_first_edge && m > 1 {
        (1..m).map(|i| vec![0, i as u8]).collect()
    } else if opts.fix_first_edge {
        vec![vec![0]]
    } else {
        (0..m).map(|i| vec![i as u8]).collect()
    };
    let found = roots
        .par_iter()
        .map(|prefix| {
            let mut state = Found::default();
            let mut sum = NeumaierSum::new();
            let mut mask = 0usize;
            for (v, &i) in prefix.iter().enumerate() {
                let next = mask | 1 << i;
                sum.add(weights[v] * (table[next] - table[mask]));
                mask = next;
            }
            let mut stack = prefix.clone();
            ctx.dfs(mask, sum, &mut stack, &mut state);
            state
        })
        .reduce(Found::default, |a, b| a.merge(b, opts.tolerance));

    let best = found.best.expect("at least one order");
    let argmin = if opts.collect_argmin {
        let cut = best.bound + opts.tolerance;
        let mut orders: Vec<Vec<u8>> = found
            .ties
            .into_iter()
            .filter(|(b, _)| *b <= cut)
            .map(|(_, o)| o)
            .collect();
        orders.sort();
        Some(
            orders
                .into_iter()
                .map(|indices| {
                    Candidate {
                        bound: 0.0,
                        indices,
                    }
                    .into_order(f)
                })
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let leaves = if opts.fix_first_edge {
        factorial(m - 1)
    } else {
        factorial(m)
    };
    Ok(ExhaustiveOutcome {
        result: SearchResult {
            best: capacity_outer_bound(&best.into_order(f)?, params, engine)?,
            evaluations: leaves as u64,
            trace: None,
        },
        argmin,
    })
}

/// `table[mask]` = joint entropy of the monomials in `mask`; each entry is
/// one refinement away from its parent (mask without the top bit).
fn fill_table(
    engine: &EntropyEngine,
    table: &mut [f64],
    mask: usize,
    p: &Partition,
    from: usize,
    m: usize,
) {
    for b in from..m {
        let child = mask | 1 << b;
        let q = engine.refine(p, b);
        table[child] = engine.partition_entropy(&q);
        fill_table(engine, table, child, &q, b + 1, m);
    }
}

struct Ctx<'a> {
    table: &'a [f64],
    weights: &'a [f64],
    h_min: f64,
    m: usize,
    collect: bool,
    tolerance: f64,
}

#[derive(Default)]
struct Found {
    best: Option<Candidate>,
    ties: Vec<(f64, Vec<u8>)>,
}

impl Found {
    fn offer(&mut self, bound: f64, stack: &[u8], collect: bool, tolerance: f64) {
        let current = self.best.as_ref().map_or(f64::INFINITY, |b| b.bound);
        if bound < current {
            self.best = Some(Candidate {
                bound,
                indices: stack.to_vec(),
            });
        }
        if collect && bound <= current + tolerance {
            if bound < current - tolerance {
                self.ties.clear();
            }
            self.ties.push((bound, stack.to_vec()));
        }
    }

    fn merge(mut self, other: Found, tolerance: f64) -> Found {
        self.best = Candidate::better(self.best, other.best);
        self.ties.extend(other.ties);
        if let Some(b) = &self.best {
            let cut = b.bound + tolerance;
            self.ties.retain(|(x, _)| *x <= cut);
        }
        self
    }
}

impl Ctx<'_> {
    fn dfs(&self, mask: usize, sum: NeumaierSum, stack: &mut Vec<u8>, found: &mut Found) {
        let v = stack.len();
        if v == self.m {
            found.offer(
                self.h_min / sum.value(),
                stack,
                self.collect,
                self.tolerance,
            );
            return;
        }
        for i in 0..self.m {
            if mask >> i & 1 == 1 {
                continue;
            }
            let next = mask | 1 << i;
            let mut s = sum;
            s.add(self.weights[v] * (self.table[next] - self.table[mask]));
            stack.push(i as u8);
            self.dfs(next, s, stack, found);
            stack.pop();
        }
    }
}
