//! The order-dependent capacity outer bound
//!
//! ```text
//!            n^mu * H_min                              H_min
//! C(S) = ----------------------------------- = ---------------------------
//!        sum_v n^(mu-v+1) H(s_v | s_1..s_v-1)   sum_v n^-(v-1) H(s_v | ...)
//! ```
//!
//! The right-hand form (numerator and denominator divided by `n^mu`) is what
//! gets evaluated: it never overflows and the weights are exact for `n = 2`.

use crate::edge::{check_vertex_count, Edge, MonomialOrder};
use crate::entropy::EntropyEngine;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::summation::NeumaierSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundParams {
    /// Number of databases.
    pub n: u32,
    /// Number of messages.
    pub f: usize,
    pub field: FieldSpec,
}

impl BoundParams {
    pub fn new(n: u32, f: usize, field: FieldSpec) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig("n must be at least 1".into()));
        }
        check_vertex_count(f)?;
        Ok(Self { n, f, field })
    }

    pub fn engine(&self) -> Result<EntropyEngine> {
        EntropyEngine::new(self.f, self.field)
    }

    fn check_engine(&self, engine: &EntropyEngine) -> Result<()> {
        if engine.vertex_count() != self.f || engine.field() != self.field {
            return Err(Error::InvalidConfig(format!(
                "engine for (f={}, q={}) used with parameters (f={}, q={})",
                engine.vertex_count(),
                engine.field().q(),
                self.f,
                self.field.q()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub order: MonomialOrder,
    pub bound: f64,
    pub h_min: f64,
    /// `H(s_v | s_1, ..., s_{v-1})` for `v = 1..=mu`.
    pub cond_entropies: Vec<f64>,
}

impl BoundReport {
    /// Joint entropy of all monomials, via the chain rule.
    pub fn total_entropy(&self) -> f64 {
        self.cond_entropies
            .iter()
            .copied()
            .collect::<NeumaierSum>()
            .value()
    }
}

/// `sum_v n^-(v-1) h_v`, compensated.
pub fn weighted_denominator(cond_entropies: &[f64], n: u32) -> f64 {
    let inv = 1.0 / n as f64;
    let mut sum = NeumaierSum::new();
    for (v, &h) in cond_entropies.iter().enumerate() {
        let weight = if n == 1 { 1.0 } else { inv.powi(v as i32) };
        sum.add(weight * h);
    }
    sum.value()
}

/// `H_min / sum_v n^-(v-1) h_v`.
pub fn bound_from_conditionals(h_min: f64, cond_entropies: &[f64], n: u32) -> f64 {
    h_min / weighted_denominator(cond_entropies, n)
}

pub fn capacity_outer_bound(
    order: &MonomialOrder,
    params: &BoundParams,
    engine: &EntropyEngine,
) -> Result<BoundReport> {
    params.check_engine(engine)?;
    if order.vertex_count() != params.f {
        return Err(Error::NotAPermutation {
            f: params.f,
            expected: crate::edge::mu(params.f),
        });
    }
    // re-validate: MonomialOrder is always a permutation, but keep the
    // contract explicit for orders built from raw parts
    let order = MonomialOrder::new(params.f, order.edges().to_vec())?;
    let cond_entropies = engine.conditional_profile(order.edges())?;
    let h_min = engine.h_min();
    Ok(BoundReport {
        bound: bound_from_conditionals(h_min, &cond_entropies, params.n),
        order,
        h_min,
        cond_entropies,
    })
}

/// The bound restricted to a prefix: `mu` replaced by `prefix.len()`.
pub fn partial_bound(prefix: &[Edge], params: &BoundParams, engine: &EntropyEngine) -> Result<f64> {
    params.check_engine(engine)?;
    if prefix.is_empty() {
        return Err(Error::EmptyPrefix);
    }
    let cond = engine.conditional_profile(prefix)?;
    Ok(bound_from_conditionals(engine.h_min(), &cond, params.n))
}
