use std::collections::{BTreeSet, HashMap};

use crate::edge::{check_vertex_count, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::canonical_form;

/// Largest `f` accepted by the path count.
pub const PATH_COUNT_LIMIT: usize = 5;

/// Number of distinct edge-addition paths from the empty graph to `K_f`,
/// with graphs identified up to isomorphism at every step.
pub fn count_distinct_paths(f: usize) -> Result<u64> {
    let mut memo = Walker::new(f)?;
    Ok(memo.paths(EdgeSet::empty(f)))
}

/// Number of unlabeled graphs on `f` vertices, i.e. the states the path
/// count walks through.
pub fn count_graph_classes(f: usize) -> Result<usize> {
    let mut memo = Walker::new(f)?;
    memo.paths(EdgeSet::empty(f));
    Ok(memo.seen.len())
}

struct Walker {
    seen: HashMap<u128, u64>,
}

impl Walker {
    fn new(f: usize) -> Result<Self> {
        check_vertex_count(f)?;
        if f > PATH_COUNT_LIMIT {
            return Err(Error::SearchSpaceTooLarge {
                f,
                limit: PATH_COUNT_LIMIT,
            });
        }
        Ok(Self {
            seen: HashMap::new(),
        })
    }

    fn paths(&mut self, g: EdgeSet) -> u64 {
        let key = canonical_form(g);
        if let Some(&n) = self.seen.get(&key.mask()) {
            return n;
        }
        let missing = key.complement();
        let n = if missing.is_empty() {
            1
        } else {
            let children: BTreeSet<u128> = missing
                .indices()
                .map(|i| canonical_form(key.with_index(i)).mask())
                .collect();
            children
                .into_iter()
                .map(|m| self.paths(EdgeSet::from_mask(key.vertex_count(), m).expect("valid mask")))
                .sum()
        };
        self.seen.insert(key.mask(), n);
        n
    }
}
