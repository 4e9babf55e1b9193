use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{SearchResult, TiePolicy, TraceStep};
use crate::bound::{capacity_outer_bound, BoundParams};
use crate::edge::{mu, Edge, MonomialOrder};
use crate::entropy::EntropyEngine;
use crate::error::Result;
use crate::summation::NeumaierSum;

/// Candidates whose conditional entropy is within this of the best are tied.
pub const EBG_TIE_TOLERANCE: f64 = 1e-12;

/// Entropy-based greedy order starting from `(1,2)`.
///
/// Minimizing the partial bound over candidates is the same as maximizing
/// `H(candidate | prefix)`, and the selection is made on the latter: for
/// `n >= 2` the weighted term `n^-(v-1) h` falls below the resolution of
/// the partial bound long before the last step.
pub fn ebg_order(
    params: &BoundParams,
    engine: &EntropyEngine,
    tie_policy: TiePolicy,
    seed: u64,
    trace: bool,
) -> Result<SearchResult> {
    let f = params.f;
    let total = mu(f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut remaining: Vec<usize> = (1..total).collect();
    let mut order = vec![0usize];
    let mut p = engine.refine(&engine.root(), 0);
    let mut joint = engine.partition_entropy(&p);
    let inv = 1.0 / params.n as f64;
    let mut denom = NeumaierSum::new();
    denom.add(joint);
    let h_min = engine.h_min();
    let mut steps = trace.then(Vec::new);
    let mut evaluations = 0u64;

    while !remaining.is_empty() {
        let v = order.len();
        let weight = if params.n == 1 {
            1.0
        } else {
            inv.powi(v as i32)
        };
        let conds: Vec<f64> = remaining
            .iter()
            .map(|&i| engine.refined_entropy(&p, i) - joint)
            .collect();
        evaluations += remaining.len() as u64;
        let best = conds.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let tied: Vec<usize> = (0..remaining.len())
            .filter(|&j| best - conds[j] <= EBG_TIE_TOLERANCE)
            .collect();
        let slot = match tie_policy {
            TiePolicy::Lexicographic => tied[0],
            TiePolicy::SeededRandom => tied[rng.gen_range(0..tied.len())],
        };
        let chosen = remaining[slot];
        if let Some(steps) = steps.as_mut() {
            let scores = remaining
                .iter()
                .zip(&conds)
                .map(|(&i, &h)| {
                    let mut d = denom;
                    d.add(weight * h);
                    (
                        Edge::from_index(i, f).expect("valid index"),
                        h_min / d.value(),
                    )
                })
                .collect();
            steps.push(TraceStep {
                chosen: Edge::from_index(chosen, f)?,
                scores,
            });
        }
        p = engine.refine(&p, chosen);
        let next = engine.partition_entropy(&p);
        denom.add(weight * (next - joint));
        joint = next;
        order.push(chosen);
        remaining.remove(slot);
    }

    let edges = order
        .iter()
        .map(|&i| Edge::from_index(i, f))
        .collect::<Result<Vec<_>>>()?;
    let best = capacity_outer_bound(&MonomialOrder::new(f, edges)?, params, engine)?;
    Ok(SearchResult {
        best,
        evaluations: evaluations.max(1),
        trace: steps,
    })
}
