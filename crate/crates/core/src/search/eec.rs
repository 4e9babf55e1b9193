use rayon::prelude::*;

use super::{factorial, Candidate, Method, SearchConfig, SearchResult};
use crate::bound::{bound_from_conditionals, capacity_outer_bound};
use crate::coloring::color_partition;
use crate::entropy::{EntropyEngine, Partition};
use crate::error::{Error, Result};

/// Sweeps all orders of the color classes after the first `fixed_colors`.
pub fn e_ec_search(config: &SearchConfig, engine: &EntropyEngine) -> Result<SearchResult> {
    if config.method != Method::EnhancedEc {
        return Err(Error::InvalidConfig(format!(
            "E-EC search run with method {}",
            config.method
        )));
    }
    config.validate()?;
    let params = &config.params;
    let f = params.f;
    let colors = color_partition(f)?;
    let free = colors.color_count() - config.fixed_colors;
    let required = factorial(free);
    if required > config.permutation_cap {
        return Err(Error::InfeasibleBudget {
            required,
            cap: config.permutation_cap,
        });
    }

    let classes: Vec<Vec<usize>> = colors
        .sets()
        .iter()
        .map(|s| s.iter().map(|e| e.index_unchecked(f)).collect())
        .collect();
    let mut walk = Walk::new(engine, &classes, params.n);
    let mut root = engine.root();
    for c in 0..config.fixed_colors {
        root = walk.push_class(&root, c);
    }
    let rest: Vec<usize> = (config.fixed_colors..colors.color_count()).collect();

    let best = if rest.is_empty() {
        Some(walk.leaf())
    } else {
        rest.par_iter()
            .map(|&first| {
                let mut w = walk.clone();
                let p = w.push_class(&root, first);
                let others: Vec<usize> = rest.iter().copied().filter(|&c| c != first).collect();
                let mut best = None;
                w.dfs(&p, &others, &mut best);
                best
            })
            .reduce(|| None, Candidate::better)
    };
    let best = best.expect("at least one permutation");
    let order = best.into_order(f)?;
    Ok(SearchResult {
        best: capacity_outer_bound(&order, params, engine)?,
        evaluations: required as u64,
        trace: None,
    })
}

#[derive(Clone)]
struct Walk<'a> {
    engine: &'a EntropyEngine,
    classes: &'a [Vec<usize>],
    n: u32,
    h_min: f64,
    indices: Vec<u8>,
    conds: Vec<f64>,
    joint: f64,
}

impl<'a> Walk<'a> {
    fn new(engine: &'a EntropyEngine, classes: &'a [Vec<usize>], n: u32) -> Self {
        Self {
            engine,
            classes,
            n,
            h_min: engine.h_min(),
            indices: Vec::new(),
            conds: Vec::new(),
            joint: 0.0,
        }
    }

    fn push_class(&mut self, p: &Partition, c: usize) -> Partition {
        let mut p = p.clone();
        for &i in &self.classes[c] {
            p = self.engine.refine(&p, i);
            let h = self.engine.partition_entropy(&p);
            self.conds.push(h - self.joint);
            self.joint = h;
            self.indices.push(i as u8);
        }
        p
    }

    fn pop_class(&mut self, c: usize, joint: f64) {
        let len = self.indices.len() - self.classes[c].len();
        self.indices.truncate(len);
        self.conds.truncate(len);
        self.joint = joint;
    }

    fn leaf(&self) -> Candidate {
        Candidate {
            bound: bound_from_conditionals(self.h_min, &self.conds, self.n),
            indices: self.indices.clone(),
        }
    }

    fn dfs(&mut self, p: &Partition, rest: &[usize], best: &mut Option<Candidate>) {
        if rest.is_empty() {
            *best = Candidate::better(best.take(), Some(self.leaf()));
            return;
        }
        for (slot, &c) in rest.iter().enumerate() {
            let joint = self.joint;
            let child = self.push_class(p, c);
            let mut others = rest.to_vec();
            others.remove(slot);
            self.dfs(&child, &others, best);
            self.pop_class(c, joint);
        }
    }
}
