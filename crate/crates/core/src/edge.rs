//! Edges of `K_f` (one per quadratic monomial), edge sets, and monomial orders.
//!
//! Vertices are 1-based. Edge `(k, l)` with `k < l` names the monomial
//! `W^(k) W^(l)`. Edges are ranked lexicographically, `(1,2) -> 0`,
//! `(1,3) -> 1`, ..., `(f-1,f) -> mu-1`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; `mu(16) = 120` fits a 128-bit mask.
pub const MAX_VERTICES: usize = 16;

/// Number of candidate monomials, `f(f-1)/2`.
#[inline]
pub const fn mu(f: usize) -> usize {
    f * f.saturating_sub(1) / 2
}

pub(crate) fn check_vertex_count(f: usize) -> Result<()> {
    if (2..=MAX_VERTICES).contains(&f) {
        Ok(())
    } else {
        Err(Error::UnsupportedVertexCount(f))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    k: u8,
    l: u8,
}

impl Edge {
    /// Builds `(k, l)`; requires `1 <= k < l <= MAX_VERTICES`.
    pub fn new(k: usize, l: usize) -> Result<Self> {
        if k >= 1 && k < l && l <= MAX_VERTICES {
            Ok(Self {
                k: k as u8,
                l: l as u8,
            })
        } else {
            Err(Error::InvalidEdge {
                k,
                l,
                f: MAX_VERTICES,
            })
        }
    }

    /// Unordered constructor: `(u, v)` and `(v, u)` give the same edge.
    pub fn between(u: usize, v: usize) -> Result<Self> {
        Self::new(u.min(v), u.max(v))
    }

    #[inline]
    pub fn k(self) -> usize {
        self.k as usize
    }

    #[inline]
    pub fn l(self) -> usize {
        self.l as usize
    }

    pub fn check(self, f: usize) -> Result<()> {
        if self.l() <= f {
            Ok(())
        } else {
            Err(Error::InvalidEdge {
                k: self.k(),
                l: self.l(),
                f,
            })
        }
    }

    /// Lexicographic rank in `[0, mu(f))`.
    pub fn index(self, f: usize) -> Result<usize> {
        self.check(f)?;
        Ok(self.index_unchecked(f))
    }

    #[inline]
    pub(crate) fn index_unchecked(self, f: usize) -> usize {
        let k = self.k() - 1;
        k * f - k * (k + 1) / 2 + (self.l() - self.k() - 1)
    }

    pub fn from_index(index: usize, f: usize) -> Result<Self> {
        check_vertex_count(f)?;
        if index >= mu(f) {
            return Err(Error::InvalidEdgeIndex { index, f });
        }
        let mut rest = index;
        let mut k = 1;
        loop {
            let row = f - k;
            if rest < row {
                return Ok(Self {
                    k: k as u8,
                    l: (k + 1 + rest) as u8,
                });
            }
            rest -= row;
            k += 1;
        }
    }

    pub fn touches(self, v: usize) -> bool {
        self.k() == v || self.l() == v
    }

    pub fn is_adjacent(self, other: Edge) -> bool {
        self != other && (self.touches(other.k()) || self.touches(other.l()))
    }

    /// Image under a vertex relabeling; `perm[v - 1]` is the new label of `v`.
    pub fn relabel(self, perm: &[usize]) -> Edge {
        Edge::between(perm[self.k() - 1], perm[self.l() - 1]).expect("permutation of [f]")
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

pub fn edge_index(edge: Edge, f: usize) -> Result<usize> {
    edge.index(f)
}

/// All edges of `K_f` in lexicographic order.
pub fn all_edges(f: usize) -> Vec<Edge> {
    (1..=f)
        .flat_map(|k| {
            ((k + 1)..=f).map(move |l| Edge {
                k: k as u8,
                l: l as u8,
            })
        })
        .collect()
}

/// A set of edges of `K_f`, keyed by lexicographic edge index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    mask: u128,
    f: u8,
}

impl EdgeSet {
    pub fn empty(f: usize) -> Self {
        debug_assert!(f <= MAX_VERTICES);
        Self {
            mask: 0,
            f: f as u8,
        }
    }

    pub fn complete(f: usize) -> Self {
        let m = mu(f);
        let mask = if m == 128 {
            u128::MAX
        } else {
            (1u128 << m) - 1
        };
        Self { mask, f: f as u8 }
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(f: usize, edges: I) -> Result<Self> {
        let mut set = Self::empty(f);
        for e in edges {
            set.mask |= 1u128 << e.index(f)?;
        }
        Ok(set)
    }

    pub fn from_mask(f: usize, mask: u128) -> Result<Self> {
        check_vertex_count(f)?;
        if mask & !Self::complete(f).mask != 0 {
            return Err(Error::InvalidEdgeIndex {
                index: 127 - mask.leading_zeros() as usize,
                f,
            });
        }
        Ok(Self { mask, f: f as u8 })
    }

    #[inline]
    pub fn mask(self) -> u128 {
        self.mask
    }

    #[inline]
    pub fn vertex_count(self) -> usize {
        self.f as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(self, e: Edge) -> bool {
        e.l() <= self.vertex_count() && self.mask >> e.index_unchecked(self.vertex_count()) & 1 == 1
    }

    #[inline]
    pub(crate) fn contains_index(self, i: usize) -> bool {
        self.mask >> i & 1 == 1
    }

    pub fn insert(&mut self, e: Edge) -> Result<bool> {
        let bit = 1u128 << e.index(self.vertex_count())?;
        let fresh = self.mask & bit == 0;
        self.mask |= bit;
        Ok(fresh)
    }

    #[inline]
    pub(crate) fn with_index(self, i: usize) -> Self {
        Self {
            mask: self.mask | 1u128 << i,
            f: self.f,
        }
    }

    pub fn with(self, e: Edge) -> Result<Self> {
        Ok(self.with_index(e.index(self.vertex_count())?))
    }

    pub fn remove(&mut self, e: Edge) -> bool {
        if !self.contains(e) {
            return false;
        }
        self.mask &= !(1u128 << e.index_unchecked(self.vertex_count()));
        true
    }

    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.f, other.f);
        Self {
            mask: self.mask | other.mask,
            f: self.f,
        }
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.mask & !other.mask == 0
    }

    /// Edges of `K_f` not in this set.
    pub fn complement(self) -> Self {
        Self {
            mask: Self::complete(self.vertex_count()).mask & !self.mask,
            f: self.f,
        }
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.mask;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// Edges in lexicographic order.
    pub fn iter(self) -> impl Iterator<Item = Edge> {
        let f = self.vertex_count();
        let table = all_edges(f);
        self.indices().map(move |i| table[i])
    }

    pub fn relabel(self, perm: &[usize]) -> Self {
        let f = self.vertex_count();
        Self::from_edges(f, self.iter().map(|e| e.relabel(perm))).expect("relabeling stays in K_f")
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An ordered sequence `S = (s_1, ..., s_mu)` of edges of `K_f`.
///
/// Constructed orders are always permutations of all `mu` edges; prefixes
/// are plain slices of [`Edge`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    f: usize,
    edges: Vec<Edge>,
}

impl MonomialOrder {
    pub fn new(f: usize, edges: Vec<Edge>) -> Result<Self> {
        check_vertex_count(f)?;
        let not_perm = Error::NotAPermutation { f, expected: mu(f) };
        if edges.len() != mu(f) {
            return Err(not_perm);
        }
        let mut seen = EdgeSet::empty(f);
        for &e in &edges {
            if e.check(f).is_err() || !seen.insert(e)? {
                return Err(not_perm);
            }
        }
        Ok(Self { f, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.f
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.edges
            .iter()
            .map(|e| e.index_unchecked(self.f))
            .collect()
    }

    pub fn relabel(&self, perm: &[usize]) -> Self {
        Self {
            f: self.f,
            edges: self.edges.iter().map(|e| e.relabel(perm)).collect(),
        }
    }

    /// Wire form: semicolon separated `k,l` pairs, e.g. `1,5;2,4;3,6`.
    pub fn to_wire(&self) -> String {
        self.edges
            .iter()
            .map(|e| format!("{},{}", e.k(), e.l()))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn from_wire(f: usize, s: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for pair in s.split(';').filter(|p| !p.trim().is_empty()) {
            let mut it = pair.split(',').map(|x| x.trim().parse::<usize>());
            let (Some(Ok(k)), Some(Ok(l)), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::InvalidConfig(format!("malformed edge `{pair}`")));
            };
            edges.push(Edge::new(k, l)?);
        }
        Self::new(f, edges)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(k: usize, l: usize) -> Edge {
        Edge::new(k, l).unwrap()
    }

    #[test]
    fn index_examples() {
        assert_eq!(edge_index(e(1, 2), 6), Ok(0));
        assert_eq!(edge_index(e(5, 6), 6), Ok(14));
        assert_eq!(edge_index(e(2, 4), 6), Ok(6));
        assert!(matches!(
            edge_index(e(2, 7), 6),
            Err(Error::InvalidEdge { .. })
        ));
    }

    #[test]
    fn index_is_lexicographic_bijection() {
        for f in 2..=MAX_VERTICES {
            let mut count = 0;
            for k in 1..=f {
                for l in (k + 1)..=f {
                    // number of lexicographic predecessors
                    let before = (1..k).map(|a| f - a).sum::<usize>() + (l - k - 1);
                    assert_eq!(e(k, l).index(f).unwrap(), before);
                    assert_eq!(Edge::from_index(before, f).unwrap(), e(k, l));
                    count += 1;
                }
            }
            assert_eq!(count, mu(f));
            assert!(Edge::from_index(mu(f), f).is_err());
        }
    }

    #[test]
    fn invalid_edges() {
        assert!(Edge::new(2, 2).is_err());
        assert!(Edge::new(3, 2).is_err());
        assert!(Edge::new(0, 2).is_err());
        assert!(Edge::new(1, 17).is_err());
        assert_eq!(Edge::between(4, 2).unwrap(), e(2, 4));
    }

    #[test]
    fn edge_set_basics() {
        let mut s = EdgeSet::empty(6);
        assert!(s.insert(e(3, 4)).unwrap());
        assert!(!s.insert(e(3, 4)).unwrap());
        s.insert(e(1, 2)).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![e(1, 2), e(3, 4)]);
        assert!(s.contains(e(1, 2)));
        assert!(!s.contains(e(1, 3)));
        assert_eq!(s.complement().len(), 13);
        assert_eq!(EdgeSet::complete(16).len(), 120);
        assert!(EdgeSet::from_mask(4, 1 << 6).is_err());
    }

    #[test]
    fn order_must_be_permutation() {
        let edges = all_edges(4);
        assert!(MonomialOrder::new(4, edges.clone()).is_ok());
        let mut dup = edges.clone();
        dup[5] = dup[0];
        assert!(matches!(
            MonomialOrder::new(4, dup),
            Err(Error::NotAPermutation { .. })
        ));
        assert!(MonomialOrder::new(4, edges[..5].to_vec()).is_err());
    }

    #[test]
    fn wire_format() {
        let order = MonomialOrder::new(3, vec![e(1, 3), e(1, 2), e(2, 3)]).unwrap();
        assert_eq!(order.to_wire(), "1,3;1,2;2,3");
        assert_eq!(MonomialOrder::from_wire(3, "1,3;1,2;2,3").unwrap(), order);
        assert!(MonomialOrder::from_wire(3, "1,3;1;2,3").is_err());
    }
}
