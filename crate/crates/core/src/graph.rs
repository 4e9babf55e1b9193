//! Simple undirected graphs on `[f]`: distances, components, periphery,
//! matchings, cycle counting, and brute-force canonical forms.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use crate::edge::{all_edges, check_vertex_count, mu, Edge, EdgeSet, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    edges: EdgeSet,
}

impl Graph {
    /// The null graph `N_f`.
    pub fn empty(f: usize) -> Result<Self> {
        check_vertex_count(f)?;
        Ok(Self {
            edges: EdgeSet::empty(f),
        })
    }

    /// `K_f`.
    pub fn complete(f: usize) -> Result<Self> {
        check_vertex_count(f)?;
        Ok(Self {
            edges: EdgeSet::complete(f),
        })
    }

    pub fn from_edge_set(edges: EdgeSet) -> Self {
        Self { edges }
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(f: usize, edges: I) -> Result<Self> {
        check_vertex_count(f)?;
        Ok(Self {
            edges: EdgeSet::from_edges(f, edges)?,
        })
    }

    /// Cycle `1 - 2 - ... - f - 1`.
    pub fn cycle(f: usize) -> Result<Self> {
        Self::from_edges(f, (1..=f).map(|v| Edge::between(v, v % f + 1).unwrap()))
    }

    /// Path `1 - 2 - ... - f`.
    pub fn path(f: usize) -> Result<Self> {
        Self::from_edges(f, (1..f).map(|v| Edge::new(v, v + 1).unwrap()))
    }

    pub fn vertex_count(&self) -> usize {
        self.edges.vertex_count()
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == mu(self.vertex_count())
    }

    pub fn add_edge(&mut self, e: Edge) -> Result<()> {
        if !self.edges.insert(e)? {
            return Err(Error::EdgePresent(e));
        }
        Ok(())
    }

    pub fn with_edge(&self, e: Edge) -> Result<Self> {
        let mut g = *self;
        g.add_edge(e)?;
        Ok(g)
    }

    /// Missing edges of `K_f`, lexicographic.
    pub fn non_edges(&self) -> Vec<Edge> {
        self.edges.complement().iter().collect()
    }

    /// Neighbor bitmasks, bit `v-1` for vertex `v`.
    pub(crate) fn adjacency(&self) -> [u16; MAX_VERTICES] {
        let mut adj = [0u16; MAX_VERTICES];
        for e in self.edges.iter() {
            adj[e.k() - 1] |= 1 << (e.l() - 1);
            adj[e.l() - 1] |= 1 << (e.k() - 1);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency()[v - 1].count_ones() as usize)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if (1..=self.vertex_count()).contains(&v) {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                f: self.vertex_count(),
            })
        }
    }

    fn bfs(&self, adj: &[u16; MAX_VERTICES], source: usize) -> [Distance; MAX_VERTICES] {
        let mut dist = [Distance::Infinite; MAX_VERTICES];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let Distance::Finite(d) = dist[x] else {
                unreachable!()
            };
            let mut nbrs = adj[x];
            while nbrs != 0 {
                let y = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if dist[y] == Distance::Infinite {
                    dist[y] = Distance::Finite(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(f={}, {:?})", self.vertex_count(), self.edges)
    }
}

/// Shortest-path length; vertices in different components are at
/// infinite distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Distance> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(g.bfs(&g.adjacency(), u - 1)[v - 1])
}

/// Connected components as sorted vertex lists, ordered ascending by
/// (minimum degree inside the component, size, smallest vertex).
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let f = g.vertex_count();
    let adj = g.adjacency();
    let mut seen = 0u16;
    let mut comps = Vec::new();
    for s in 0..f {
        if seen >> s & 1 == 1 {
            continue;
        }
        let mut members = 1u16 << s;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let fresh = adj[x] & !members;
            members |= fresh;
            let mut rest = fresh;
            while rest != 0 {
                stack.push(rest.trailing_zeros() as usize);
                rest &= rest - 1;
            }
        }
        seen |= members;
        comps.push(
            (0..f)
                .filter(|v| members >> v & 1 == 1)
                .map(|v| v + 1)
                .collect::<Vec<_>>(),
        );
    }
    comps.sort_by_key(|c: &Vec<usize>| {
        let min_degree = c
            .iter()
            .map(|&v| adj[v - 1].count_ones())
            .min()
            .unwrap_or(0);
        (min_degree, c.len(), c[0])
    });
    comps
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() == 1
}

/// Diameter of a connected graph.
pub fn diameter(g: &Graph) -> Result<usize> {
    let adj = g.adjacency();
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in &g.bfs(&adj, s)[..g.vertex_count()] {
            match d {
                Distance::Finite(d) => best = best.max(*d),
                Distance::Infinite => return Err(Error::DisconnectedGraph),
            }
        }
    }
    Ok(best)
}

/// All vertex pairs `(u, v)`, `u < v`, at distance equal to the diameter.
pub fn periphery(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let diam = diameter(g)?;
    let adj = g.adjacency();
    let f = g.vertex_count();
    let mut pairs = Vec::new();
    for u in 0..f {
        let dist = g.bfs(&adj, u);
        for (v, d) in dist.iter().enumerate().take(f).skip(u + 1) {
            if *d == Distance::Finite(diam) {
                pairs.push((u + 1, v + 1));
            }
        }
    }
    Ok(pairs)
}

fn covered_vertices(set: EdgeSet) -> Option<u16> {
    let mut covered = 0u16;
    for e in set.iter() {
        let bits = (1u16 << (e.k() - 1)) | (1u16 << (e.l() - 1));
        if covered & bits != 0 {
            return None;
        }
        covered |= bits;
    }
    Some(covered)
}

/// No two edges share a vertex.
pub fn is_matching(set: EdgeSet) -> bool {
    covered_vertices(set).is_some()
}

/// A matching covering every vertex (even `f` only).
pub fn is_perfect_matching(set: EdgeSet) -> bool {
    covered_vertices(set).is_some_and(|c| c.count_ones() as usize == set.vertex_count())
}

/// A matching covering all but one vertex (odd `f` only).
pub fn is_near_perfect_matching(set: EdgeSet) -> bool {
    let f = set.vertex_count();
    f % 2 == 1 && covered_vertices(set).is_some_and(|c| c.count_ones() as usize == f - 1)
}

/// Perfect for even `f`, near-perfect for odd `f`.
pub fn is_maximum_matching(set: EdgeSet) -> bool {
    if set.vertex_count() % 2 == 0 {
        is_perfect_matching(set)
    } else {
        is_near_perfect_matching(set)
    }
}

/// `chi'(K_f)`: `f - 1` for even `f`, `f` for odd `f`.
pub fn chromatic_index(f: usize) -> usize {
    if f % 2 == 0 {
        f - 1
    } else {
        f
    }
}

/// Edges per color class of `K_f`, `mu / chi'`.
pub fn matching_size(f: usize) -> usize {
    mu(f) / chromatic_index(f)
}

/// Per-length cycle counts: entry `i` counts cycles of length `i + 3`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleVector(pub Vec<u64>);

impl CycleVector {
    pub fn zeros(f: usize) -> Self {
        Self(vec![0; f.saturating_sub(2)])
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl std::ops::Add for &CycleVector {
    type Output = CycleVector;

    fn add(self, rhs: &CycleVector) -> CycleVector {
        CycleVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for CycleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleMode {
    /// Only cycles through the candidate edge.
    ThroughEdge,
    /// Every simple cycle of the graph with the candidate added.
    FullGraph,
}

/// `counts[t][len]`: simple paths from `source` to `t` with `len` edges.
///
/// Dynamic program over (visited set, endpoint); each path is counted once.
fn simple_path_counts(adj: &[u16; MAX_VERTICES], f: usize, source: usize) -> Vec<Vec<u64>> {
    let states = 1usize << f;
    let mut dp = vec![0u64; states * f];
    let mut counts = vec![vec![0u64; f]; f];
    dp[(1 << source) * f + source] = 1;
    for mask in 0..states {
        if mask >> source & 1 == 0 {
            continue;
        }
        let len = mask.count_ones() as usize - 1;
        for x in 0..f {
            let c = dp[mask * f + x];
            if c == 0 {
                continue;
            }
            counts[x][len] += c;
            let mut next = adj[x] as usize & !mask;
            while next != 0 {
                let y = next.trailing_zeros() as usize;
                next &= next - 1;
                dp[(mask | 1 << y) * f + y] += c;
            }
        }
    }
    counts
}

/// Cycle census of `g` itself, lengths `3..=f`.
pub fn cycle_census(g: &Graph) -> CycleVector {
    let f = g.vertex_count();
    let adj = g.adjacency();
    let mut out = CycleVector::zeros(f);
    if f < 3 {
        return out;
    }
    let mut dp = vec![0u64; (1usize << f) * f];
    for s in 0..f {
        // cycles whose smallest vertex is s, walked in both directions
        let above = !((1usize << (s + 1)) - 1) & ((1usize << f) - 1);
        dp.iter_mut().for_each(|x| *x = 0);
        dp[(1 << s) * f + s] = 1;
        let mut sub = 0usize;
        loop {
            let mask = sub | 1 << s;
            let len = mask.count_ones() as usize;
            for x in 0..f {
                let c = dp[mask * f + x];
                if c == 0 {
                    continue;
                }
                if len >= 3 && adj[x] >> s & 1 == 1 {
                    out.0[len - 3] += c;
                }
                let mut next = adj[x] as usize & above & !mask;
                while next != 0 {
                    let y = next.trailing_zeros() as usize;
                    next &= next - 1;
                    dp[(mask | 1 << y) * f + y] += c;
                }
            }
            // next subset of `above` in increasing order
            sub = (sub.wrapping_sub(above)) & above;
            if sub == 0 {
                break;
            }
        }
    }
    out.0.iter_mut().for_each(|c| *c /= 2);
    out
}

/// Cycle counts induced by adding `candidate` to `g`.
pub fn induced_cycle_vector(g: &Graph, candidate: Edge, mode: CycleMode) -> Result<CycleVector> {
    candidate.check(g.vertex_count())?;
    if g.contains(candidate) {
        return Err(Error::EdgePresent(candidate));
    }
    match mode {
        CycleMode::FullGraph => Ok(cycle_census(&g.with_edge(candidate)?)),
        CycleMode::ThroughEdge => {
            let f = g.vertex_count();
            let counts = simple_path_counts(&g.adjacency(), f, candidate.k() - 1);
            Ok(through_edge_vector(&counts[candidate.l() - 1], f))
        }
    }
}

fn through_edge_vector(paths_by_len: &[u64], f: usize) -> CycleVector {
    let mut out = CycleVector::zeros(f);
    // a u-v path with len edges closes a cycle of len + 1 edges
    for (len, &c) in paths_by_len.iter().enumerate().skip(2) {
        out.0[len - 2] += c;
    }
    out
}

/// Scores every missing edge of `g`, lexicographic edge order.
pub fn score_non_edges(g: &Graph, mode: CycleMode) -> Vec<(Edge, CycleVector)> {
    let f = g.vertex_count();
    let non_edges = g.non_edges();
    match mode {
        CycleMode::FullGraph => non_edges
            .into_iter()
            .map(|e| (e, cycle_census(&g.with_edge(e).expect("missing edge"))))
            .collect(),
        CycleMode::ThroughEdge => {
            let adj = g.adjacency();
            let mut out = Vec::with_capacity(non_edges.len());
            let mut current: Option<(usize, Vec<Vec<u64>>)> = None;
            for e in non_edges {
                // non-edges are sorted by k, so one path table per source
                if current.as_ref().map_or(true, |(k, _)| *k != e.k()) {
                    current = Some((e.k(), simple_path_counts(&adj, f, e.k() - 1)));
                }
                let counts = &current.as_ref().unwrap().1;
                out.push((e, through_edge_vector(&counts[e.l() - 1], f)));
            }
            out
        }
    }
}

fn permutation_edge_maps(f: usize) -> &'static [Vec<u8>] {
    static MAPS: [OnceLock<Vec<Vec<u8>>>; crate::entropy::CANONICAL_CACHE_MAX_F + 1] =
        [const { OnceLock::new() }; crate::entropy::CANONICAL_CACHE_MAX_F + 1];
    MAPS[f].get_or_init(|| {
        let edges = all_edges(f);
        let mut perm: Vec<usize> = (1..=f).collect();
        let mut maps = Vec::new();
        // Heap's algorithm
        let mut c = vec![0usize; f];
        let push = |perm: &[usize], maps: &mut Vec<Vec<u8>>| {
            maps.push(
                edges
                    .iter()
                    .map(|e| e.relabel(perm).index_unchecked(f) as u8)
                    .collect(),
            );
        };
        push(&perm, &mut maps);
        let mut i = 0;
        while i < f {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                push(&perm, &mut maps);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        maps
    })
}

/// Smallest mask over all relabelings of the vertices. Brute force over
/// `f!` permutations, so only available for `f <= 8`.
pub fn canonical_form(set: EdgeSet) -> EdgeSet {
    let f = set.vertex_count();
    assert!(
        f <= crate::entropy::CANONICAL_CACHE_MAX_F,
        "canonical form needs f <= 8"
    );
    let bits: Vec<usize> = set.indices().collect();
    let best = permutation_edge_maps(f)
        .iter()
        .map(|map| bits.iter().fold(0u128, |m, &i| m | 1u128 << map[i]))
        .min()
        .unwrap_or(0);
    EdgeSet::from_mask(f, best).expect("relabeling stays in K_f")
}
