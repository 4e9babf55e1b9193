#![allow(dead_code)]

use std::collections::HashMap;

use pqc_core::{BoundParams, Edge, EntropyEngine, FieldSpec, Graph};

pub fn e(k: usize, l: usize) -> Edge {
    Edge::new(k, l).unwrap()
}

pub fn setup(f: usize, n: u32) -> (BoundParams, EntropyEngine) {
    let params = BoundParams::new(n, f, FieldSpec::binary()).unwrap();
    let engine = params.engine().unwrap();
    (params, engine)
}

/// Entropy (base q) of the monomial tuple, by walking every assignment of
/// `f` symbols and tallying outcomes in a hash map.
pub fn brute_entropy(f: usize, q: u32, edges: &[Edge]) -> f64 {
    let total = (q as u64).pow(f as u32);
    let mut tally: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut w = vec![0u32; f];
    for _ in 0..total {
        let outcome: Vec<u32> = edges
            .iter()
            .map(|x| w[x.k() - 1] * w[x.l() - 1] % q)
            .collect();
        *tally.entry(outcome).or_default() += 1;
        for d in w.iter_mut() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    let n = total as f64;
    -tally
        .values()
        .map(|&c| {
            let p = c as f64 / n;
            p * p.ln()
        })
        .sum::<f64>()
        / (q as f64).ln()
}

fn neighbours(g: &Graph) -> Vec<Vec<usize>> {
    let f = g.vertex_count();
    let mut adj = vec![Vec::new(); f + 1];
    for x in g.edge_set().iter() {
        adj[x.k()].push(x.l());
        adj[x.l()].push(x.k());
    }
    adj
}

/// All simple cycles of `g` as vertex lists, each undirected cycle once:
/// rooted at its smallest vertex, second vertex smaller than the last.
pub fn enumerate_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let adj = neighbours(g);
    let f = g.vertex_count();
    let mut out = Vec::new();
    for root in 1..=f {
        let mut path = vec![root];
        walk(&adj, root, &mut path, &mut out);
    }
    out
}

fn walk(adj: &[Vec<usize>], root: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    for &y in &adj[last] {
        if y == root && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        } else if y > root && !path.contains(&y) {
            path.push(y);
            walk(adj, root, path, out);
            path.pop();
        }
    }
}

/// Cycle counts by length `3..=f` from an explicit cycle list.
pub fn census_of(cycles: &[Vec<usize>], f: usize) -> Vec<u64> {
    let mut v = vec![0u64; f.saturating_sub(2)];
    for c in cycles {
        v[c.len() - 3] += 1;
    }
    v
}

pub fn uses_edge(cycle: &[usize], x: Edge) -> bool {
    (0..cycle.len()).any(|i| {
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        (a.min(b), a.max(b)) == (x.k(), x.l())
    })
}
