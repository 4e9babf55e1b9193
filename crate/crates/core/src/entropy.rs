//! Exact entropies of quadratic monomials of i.i.d. uniform `F_q` symbols.
//!
//! Every joint law is obtained by enumerating the `q^f` message assignments
//! `(w_1, ..., w_f)`, so probabilities are integer counts over `q^f` until the
//! final logarithm. Entropies are reported in `q`-ary units.
//!
//! The engine works on partitions of the assignment space: the joint law of a
//! set of monomials is the partition of `F_q^f` into the level sets of the
//! monomial vector, and adding a monomial refines the partition. The entropy
//! depends only on the multiset of class sizes, which is accumulated in a fixed
//! (ascending size) order. Any route to the same edge set therefore yields the
//! same `f64`, bit for bit.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use crate::edge::{all_edges, check_vertex_count, mu, Edge, EdgeSet};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::canonical_form;
use crate::summation::NeumaierSum;

/// Guard on `q^f` for explicit enumeration.
pub const ENUMERATION_LIMIT: u64 = 1 << 34;

/// Guard on `q^f` for the tabulated engine, which stores one byte per
/// (monomial, assignment).
pub const ENGINE_LIMIT: u64 = 1 << 24;

/// Largest `f` for which isomorphism-canonical cache keys are available.
pub const CANONICAL_CACHE_MAX_F: usize = 8;

/// Exact joint law of an ordered list of monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointDistribution {
    /// Outcome vectors with their assignment counts, in lexicographic order.
    pub support: Vec<(Vec<u32>, u64)>,
    /// `q^f`.
    pub total: u64,
    pub q: u32,
}

impl JointDistribution {
    pub fn probability(&self, outcome: &[u32]) -> (u64, u64) {
        let count = self
            .support
            .iter()
            .find(|(o, _)| o.as_slice() == outcome)
            .map_or(0, |(_, c)| *c);
        (count, self.total)
    }

    /// Entropy in `q`-ary units.
    pub fn entropy(&self) -> f64 {
        let mut counts: Vec<u64> = self.support.iter().map(|(_, c)| *c).collect();
        counts.sort_unstable();
        let ln_total = (self.total as f64).ln();
        let sum: NeumaierSum = counts
            .iter()
            .map(|&c| c as f64 * (ln_total - (c as f64).ln()))
            .collect();
        sum.value() / (self.total as f64 * (self.q as f64).ln())
    }
}

/// Joint law of `edges` under `f` i.i.d. uniform symbols over `spec`.
pub fn joint_distribution(edges: &[Edge], f: usize, spec: FieldSpec) -> Result<JointDistribution> {
    check_vertex_count(f)?;
    for e in edges {
        e.check(f)?;
    }
    let q = spec.q();
    let total = spec
        .assignment_count(f, ENUMERATION_LIMIT)
        .ok_or(Error::EnumerationTooLarge { q, f })?;

    let mut tally: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    let mut symbols = vec![0u32; f];
    let mut outcome = vec![0u32; edges.len()];
    for _ in 0..total {
        for (slot, e) in outcome.iter_mut().zip(edges) {
            *slot = spec.mul(symbols[e.k() - 1], symbols[e.l() - 1]);
        }
        *tally.entry(outcome.clone()).or_insert(0) += 1;
        // next assignment, little-endian base q
        for s in symbols.iter_mut() {
            *s += 1;
            if *s < q {
                break;
            }
            *s = 0;
        }
    }
    Ok(JointDistribution {
        support: tally.into_iter().collect(),
        total,
        q,
    })
}

/// Memoized joint entropies keyed by edge set.
#[derive(Debug)]
pub struct EntropyCache {
    entries: RwLock<HashMap<EdgeSet, f64>>,
}

impl EntropyCache {
    pub fn new(f: usize) -> Self {
        let mut entries = HashMap::new();
        entries.insert(EdgeSet::empty(f), 0.0);
        Self {
            entries: RwLock::new(entries),
        }
    }

    pub fn get(&self, set: EdgeSet) -> Option<f64> {
        self.entries.read().expect("cache lock").get(&set).copied()
    }

    pub fn insert(&self, set: EdgeSet, h: f64) {
        self.entries.write().expect("cache lock").insert(set, h);
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Folds another cache in; values for shared keys must agree.
    pub fn merge(&self, other: &EntropyCache) {
        let theirs = other.entries.read().expect("cache lock");
        let mut ours = self.entries.write().expect("cache lock");
        for (k, v) in theirs.iter() {
            let prev = ours.insert(*k, *v);
            debug_assert!(prev.map_or(true, |p| p.to_bits() == v.to_bits()));
        }
    }
}

/// Level-set partition of the assignment space.
#[derive(Debug, Clone)]
pub struct Partition {
    labels: Vec<u32>,
    sizes: Vec<u32>,
}

impl Partition {
    fn trivial(assignments: usize) -> Self {
        Self {
            labels: vec![0; assignments],
            sizes: vec![assignments as u32],
        }
    }

    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }
}

#[derive(Default)]
struct Scratch {
    slots: Vec<u32>,
    hist: Vec<u32>,
}

thread_local! {
    static SCRATCH: RefCell<Scratch> = RefCell::new(Scratch::default());
}

/// Tabulated monomial values plus the entropy cache for one `(f, q)`.
#[derive(Debug)]
pub struct EntropyEngine {
    f: usize,
    field: FieldSpec,
    assignments: usize,
    /// `values[e * assignments + w]` = value of monomial `e` at assignment `w`.
    values: Vec<u8>,
    /// `c * (ln N - ln c)` for class size `c`, `N = q^f`.
    class_terms: Vec<f64>,
    norm: f64,
    cache: EntropyCache,
    canonical_keys: bool,
    h_min: f64,
}

impl EntropyEngine {
    pub fn new(f: usize, field: FieldSpec) -> Result<Self> {
        check_vertex_count(f)?;
        let q = field.q();
        let n = field
            .assignment_count(f, ENGINE_LIMIT)
            .ok_or(Error::EnumerationTooLarge { q, f })? as usize;
        let edges = all_edges(f);
        let mut values = vec![0u8; edges.len() * n];
        let mut symbols = vec![0u32; f];
        for w in 0..n {
            for (i, e) in edges.iter().enumerate() {
                values[i * n + w] = field.mul(symbols[e.k() - 1], symbols[e.l() - 1]) as u8;
            }
            for s in symbols.iter_mut() {
                *s += 1;
                if *s < q {
                    break;
                }
                *s = 0;
            }
        }
        let ln_n = (n as f64).ln();
        let class_terms = (0..=n)
            .map(|c| {
                if c == 0 {
                    0.0
                } else {
                    c as f64 * (ln_n - (c as f64).ln())
                }
            })
            .collect();
        let mut engine = Self {
            f,
            field,
            assignments: n,
            values,
            class_terms,
            norm: n as f64 * (q as f64).ln(),
            cache: EntropyCache::new(f),
            canonical_keys: false,
            h_min: 0.0,
        };
        engine.h_min = engine.compute(EdgeSet::empty(f).with_index(0));
        Ok(engine)
    }

    /// Keys the cache by isomorphism class instead of labeled edge set.
    /// Values are unchanged because entropy is invariant under relabeling.
    pub fn with_canonical_cache(mut self, enabled: bool) -> Result<Self> {
        if enabled && self.f > CANONICAL_CACHE_MAX_F {
            return Err(Error::InvalidConfig(format!(
                "canonical cache keys need f <= {CANONICAL_CACHE_MAX_F}"
            )));
        }
        self.canonical_keys = enabled;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.f
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn cache(&self) -> &EntropyCache {
        &self.cache
    }

    /// `H_min`: the entropy of any single monomial (all are equal).
    pub fn h_min(&self) -> f64 {
        self.h_min
    }

    pub fn joint_entropy(&self, set: EdgeSet) -> Result<f64> {
        if set.vertex_count() != self.f {
            return Err(Error::InvalidConfig(format!(
                "edge set over {} vertices given to an engine for {}",
                set.vertex_count(),
                self.f
            )));
        }
        let key = if self.canonical_keys {
            canonical_form(set)
        } else {
            set
        };
        if let Some(h) = self.cache.get(key) {
            return Ok(h);
        }
        let h = self.compute(set);
        self.cache.insert(key, h);
        Ok(h)
    }

    /// `H(X^edge | X^given)`.
    pub fn conditional_entropy(&self, edge: Edge, given: EdgeSet) -> Result<f64> {
        edge.check(self.f)?;
        if given.contains(edge) {
            return Err(Error::EdgeAlreadyConditioned(edge));
        }
        let joint = self.joint_entropy(given.with(edge)?)?;
        Ok(joint - self.joint_entropy(given)?)
    }

    fn compute(&self, set: EdgeSet) -> f64 {
        let mut p = self.root();
        for i in set.indices() {
            p = self.refine(&p, i);
        }
        self.partition_entropy(&p)
    }

    pub fn root(&self) -> Partition {
        Partition::trivial(self.assignments)
    }

    #[inline]
    fn column(&self, edge_index: usize) -> &[u8] {
        &self.values[edge_index * self.assignments..(edge_index + 1) * self.assignments]
    }

    /// Refines `p` by the monomial with lexicographic index `edge_index`.
    pub fn refine(&self, p: &Partition, edge_index: usize) -> Partition {
        let q = self.field.q() as usize;
        let column = self.column(edge_index);
        SCRATCH.with(|s| {
            let s = &mut *s.borrow_mut();
            s.slots.clear();
            s.slots.resize(p.sizes.len() * q, u32::MAX);
            let mut labels = Vec::with_capacity(self.assignments);
            let mut sizes: Vec<u32> = Vec::with_capacity(p.sizes.len() * 2);
            for (&label, &v) in p.labels.iter().zip(column) {
                let slot = &mut s.slots[label as usize * q + v as usize];
                if *slot == u32::MAX {
                    *slot = sizes.len() as u32;
                    sizes.push(0);
                }
                sizes[*slot as usize] += 1;
                labels.push(*slot);
            }
            Partition { labels, sizes }
        })
    }

    /// Entropy of `p` refined by `edge_index`, without materializing labels.
    pub fn refined_entropy(&self, p: &Partition, edge_index: usize) -> f64 {
        let q = self.field.q() as usize;
        let column = self.column(edge_index);
        SCRATCH.with(|s| {
            let s = &mut *s.borrow_mut();
            s.slots.clear();
            s.slots.resize(p.sizes.len() * q, 0);
            for (&label, &v) in p.labels.iter().zip(column) {
                s.slots[label as usize * q + v as usize] += 1;
            }
            let Scratch { slots, hist } = s;
            self.entropy_of_sizes(slots.iter().copied(), hist)
        })
    }

    pub fn partition_entropy(&self, p: &Partition) -> f64 {
        SCRATCH.with(|s| {
            let hist = &mut s.borrow_mut().hist;
            self.entropy_of_sizes(p.sizes.iter().copied(), hist)
        })
    }

    fn entropy_of_sizes(&self, sizes: impl Iterator<Item = u32>, hist: &mut Vec<u32>) -> f64 {
        hist.clear();
        hist.resize(self.assignments + 1, 0);
        for c in sizes {
            hist[c as usize] += 1;
        }
        let mut sum = NeumaierSum::new();
        // c = N contributes exactly zero; skipping it keeps H(empty) = 0.
        for (c, &m) in hist.iter().enumerate().take(self.assignments).skip(1) {
            if m != 0 {
                sum.add(m as f64 * self.class_terms[c]);
            }
        }
        sum.value() / self.norm
    }

    /// Conditional entropies `H(s_v | s_1..s_{v-1})` along an edge sequence,
    /// computed as differences of prefix joint entropies.
    pub fn conditional_profile(&self, edges: &[Edge]) -> Result<Vec<f64>> {
        let mut seen = EdgeSet::empty(self.f);
        let mut p = self.root();
        let mut prev = 0.0;
        let mut out = Vec::with_capacity(edges.len());
        for &e in edges {
            let i = e.index(self.f)?;
            if seen.contains_index(i) {
                return Err(Error::DuplicateEdge(e));
            }
            seen = seen.with_index(i);
            p = self.refine(&p, i);
            let h = self.partition_entropy(&p);
            out.push(h - prev);
            prev = h;
        }
        Ok(out)
    }

    /// Number of monomials, `mu(f)`.
    pub fn monomial_count(&self) -> usize {
        mu(self.f)
    }
}

/// `H_min` for `(f, q)`.
pub fn h_min(f: usize, spec: FieldSpec) -> Result<f64> {
    check_vertex_count(f)?;
    // The marginal of W_k W_l does not depend on f.
    Ok(EntropyEngine::new(2, spec)?.h_min())
}
