use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Candidate, Method, SearchConfig, SearchResult};
use crate::bound::{bound_from_conditionals, capacity_outer_bound};
use crate::coloring::color_partition;
use crate::edge::{mu, EdgeSet};
use crate::entropy::EntropyEngine;
use crate::error::{Error, Result};

/// Pins the first `fixed_colors` color classes and draws `budget` uniform
/// orders of the remaining edges. Draw `i` uses stream `i` of a ChaCha8
/// generator keyed by the seed, so the result does not depend on threading.
pub fn directed_random_search(
    config: &SearchConfig,
    engine: &EntropyEngine,
) -> Result<SearchResult> {
    if config.method != Method::DirectedRandom {
        return Err(Error::InvalidConfig(format!(
            "directed random search run with method {}",
            config.method
        )));
    }
    config.validate()?;
    let params = &config.params;
    let f = params.f;
    let colors = color_partition(f)?;

    let mut prefix = Vec::new();
    let mut conds = Vec::new();
    let mut p = engine.root();
    let mut joint = 0.0;
    for set in &colors.sets()[..config.fixed_colors] {
        for e in set {
            let i = e.index_unchecked(f);
            p = engine.refine(&p, i);
            let h = engine.partition_entropy(&p);
            conds.push(h - joint);
            joint = h;
            prefix.push(i as u8);
        }
    }
    let pinned = EdgeSet::from_mask(f, prefix.iter().fold(0u128, |m, &i| m | 1 << i))?;
    let rest: Vec<u8> = (0..mu(f))
        .filter(|&i| !pinned.contains_index(i))
        .map(|i| i as u8)
        .collect();
    let h_min = engine.h_min();

    let best = (0..config.budget)
        .into_par_iter()
        .map(|draw| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(draw);
            let mut tail = rest.clone();
            tail.shuffle(&mut rng);
            let mut q = p.clone();
            let mut prev = joint;
            let mut cs = conds.clone();
            for &i in &tail {
                q = engine.refine(&q, i as usize);
                let h = engine.partition_entropy(&q);
                cs.push(h - prev);
                prev = h;
            }
            let mut indices = prefix.clone();
            indices.extend(tail);
            Some(Candidate {
                bound: bound_from_conditionals(h_min, &cs, params.n),
                indices,
            })
        })
        .reduce(|| None, Candidate::better)
        .expect("budget is at least one");

    Ok(SearchResult {
        best: capacity_outer_bound(&best.into_order(f)?, params, engine)?,
        evaluations: config.budget,
        trace: None,
    })
}
