//! Proper edge-colorings of `K_f` with `chi'(K_f)` colors, and the
//! color-grouped (EC) monomial orders built from them.

use crate::edge::{check_vertex_count, mu, Edge, EdgeSet, MonomialOrder};
use crate::error::{Error, Result};
use crate::graph::{chromatic_index, is_matching, matching_size};

/// Color classes `E_1, ..., E_chi'`, each sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorPartition {
    f: usize,
    sets: Vec<Vec<Edge>>,
}

impl ColorPartition {
    /// Wraps arbitrary color sets; use [`validate_coloring`] to check them.
    pub fn from_sets(f: usize, mut sets: Vec<Vec<Edge>>) -> Self {
        for s in &mut sets {
            s.sort();
        }
        Self { f, sets }
    }

    pub fn vertex_count(&self) -> usize {
        self.f
    }

    pub fn sets(&self) -> &[Vec<Edge>] {
        &self.sets
    }

    /// Color `c`, 1-based.
    pub fn color(&self, c: usize) -> &[Edge] {
        &self.sets[c - 1]
    }

    pub fn color_count(&self) -> usize {
        self.sets.len()
    }
}

/// `x mod f` mapped into `1..=f`.
fn mod_star(x: i64, f: i64) -> usize {
    let r = x % f;
    (if r <= 0 { r + f } else { r }) as usize
}

/// Near-perfect matchings for odd `f`: color `c` holds the pairs
/// `{c - p, c + p} (mod* f)` for `p = 1..=(f-1)/2`.
pub fn color_sets_odd(f: usize) -> Result<ColorPartition> {
    if f % 2 == 0 || f < 3 {
        return Err(Error::ParityError {
            f,
            expected: "an odd",
        });
    }
    check_vertex_count(f)?;
    let eta = matching_size(f);
    let sets = (1..=f as i64)
        .map(|c| {
            (1..=eta as i64)
                .map(|p| {
                    let a = mod_star(c - p, f as i64);
                    let b = mod_star(c + p, f as i64);
                    Edge::between(a, b).expect("distinct residues")
                })
                .collect()
        })
        .collect();
    Ok(ColorPartition::from_sets(f, sets))
}

/// 1-factorization for even `f`: inner edge `(k, l)` gets the color `c` with
/// `k + l - 1 = c - 1 (mod f-1)`, and `(k, f)` the color with
/// `2k - 1 = c - 1 (mod f-1)`.
pub fn color_sets_even(f: usize) -> Result<ColorPartition> {
    if f % 2 == 1 {
        return Err(Error::ParityError {
            f,
            expected: "an even",
        });
    }
    check_vertex_count(f)?;
    let m = f - 1;
    let mut sets = vec![Vec::new(); m];
    for k in 1..f {
        for l in (k + 1)..f {
            sets[(k + l - 1) % m].push(Edge::new(k, l)?);
        }
        sets[(2 * k - 1) % m].push(Edge::new(k, f)?);
    }
    Ok(ColorPartition::from_sets(f, sets))
}

/// The construction matching the parity of `f`.
pub fn color_partition(f: usize) -> Result<ColorPartition> {
    if f % 2 == 0 {
        color_sets_even(f)
    } else {
        color_sets_odd(f)
    }
}

/// Disjoint matchings covering `K_f` with exactly `chi'(K_f)` colors.
pub fn validate_coloring(p: &ColorPartition, f: usize) -> bool {
    if p.vertex_count() != f
        || check_vertex_count(f).is_err()
        || p.color_count() != chromatic_index(f)
    {
        return false;
    }
    let mut seen = EdgeSet::empty(f);
    for set in p.sets() {
        let Ok(s) = EdgeSet::from_edges(f, set.iter().copied()) else {
            return false;
        };
        if s.len() != set.len() || !is_matching(s) || !(s.mask() & seen.mask() == 0) {
            return false;
        }
        seen = seen.union(s);
    }
    seen.len() == mu(f)
}

/// Order in which color classes are concatenated.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ColorOrder {
    /// `1, 2, ..., chi'`.
    #[default]
    Natural,
    /// `2, 3, ..., chi', 1`.
    Shifted,
    /// An explicit permutation of `1..=chi'`.
    Permutation(Vec<usize>),
}

/// Default color order of the EC method: natural for even `f`, shifted for
/// odd `f`. For odd `f` the shift moves the wrap-around vertex `f` so that
/// lexicographic order inside each class changes, which changes the bound.
pub fn default_color_order(f: usize) -> ColorOrder {
    if f % 2 == 0 {
        ColorOrder::Natural
    } else {
        ColorOrder::Shifted
    }
}

impl ColorOrder {
    fn resolve(&self, colors: usize) -> Result<Vec<usize>> {
        match self {
            ColorOrder::Natural => Ok((1..=colors).collect()),
            ColorOrder::Shifted => Ok((2..=colors).chain([1]).collect()),
            ColorOrder::Permutation(p) => {
                let mut sorted = p.clone();
                sorted.sort_unstable();
                if sorted != (1..=colors).collect::<Vec<_>>() {
                    return Err(Error::InvalidPermutation(format!(
                        "{p:?} is not a permutation of 1..={colors}"
                    )));
                }
                Ok(p.clone())
            }
        }
    }
}

/// Concatenates color classes in the given order.
pub fn ec_order(f: usize, colors: &ColorOrder) -> Result<MonomialOrder> {
    let partition = color_partition(f)?;
    order_from_colors(&partition, &colors.resolve(partition.color_count())?)
}

pub(crate) fn order_from_colors(p: &ColorPartition, colors: &[usize]) -> Result<MonomialOrder> {
    let edges = colors
        .iter()
        .flat_map(|&c| p.color(c).iter().copied())
        .collect();
    MonomialOrder::new(p.vertex_count(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge::MAX_VERTICES;
    use crate::graph::{is_maximum_matching, is_near_perfect_matching, is_perfect_matching};

    fn edges(pairs: &[(usize, usize)]) -> Vec<Edge> {
        pairs
            .iter()
            .map(|&(k, l)| Edge::new(k, l).unwrap())
            .collect()
    }

    #[test]
    fn odd_examples() {
        let p5 = color_sets_odd(5).unwrap();
        assert_eq!(p5.color(1), edges(&[(2, 5), (3, 4)]).as_slice());
        assert_eq!(p5.color_count(), 5);
        assert!(p5.sets().iter().all(|s| s.len() == 2));
        assert!(validate_coloring(&p5, 5));
        let p3 = color_sets_odd(3).unwrap();
        assert_eq!(p3.color(1), edges(&[(2, 3)]).as_slice());
        assert!(matches!(color_sets_odd(6), Err(Error::ParityError { .. })));
    }

    #[test]
    fn even_examples() {
        let p6 = color_sets_even(6).unwrap();
        assert_eq!(p6.color(1), edges(&[(1, 5), (2, 4), (3, 6)]).as_slice());
        assert_eq!(p6.color(2), edges(&[(1, 6), (2, 5), (3, 4)]).as_slice());
        assert_eq!(p6.color(3), edges(&[(1, 2), (3, 5), (4, 6)]).as_slice());
        assert_eq!(p6.color(4), edges(&[(1, 3), (2, 6), (4, 5)]).as_slice());
        assert_eq!(p6.color(5), edges(&[(1, 4), (2, 3), (5, 6)]).as_slice());
        assert!(matches!(color_sets_even(7), Err(Error::ParityError { .. })));
        assert_eq!(color_sets_even(2).unwrap().sets(), &[edges(&[(1, 2)])]);
    }

    #[test]
    fn constructions_validate_for_all_sizes() {
        for f in 2..=MAX_VERTICES {
            let p = color_partition(f).unwrap();
            assert!(validate_coloring(&p, f), "f={f}");
            for set in p.sets() {
                let s = EdgeSet::from_edges(f, set.iter().copied()).unwrap();
                assert_eq!(set.len(), matching_size(f));
                if f % 2 == 0 {
                    assert!(is_perfect_matching(s));
                } else {
                    assert!(is_near_perfect_matching(s));
                }
            }
        }
    }

    #[test]
    fn validation_rejects_improper_partitions() {
        let good = color_sets_even(6).unwrap();
        let mut sets = good.sets().to_vec();
        // swap (1,3) into the class holding (1,2)
        let moved = sets[3].remove(0);
        sets[2].push(moved);
        assert!(!validate_coloring(&ColorPartition::from_sets(6, sets), 6));
        let mut short = good.sets().to_vec();
        short.pop();
        assert!(!validate_coloring(&ColorPartition::from_sets(6, short), 6));
        assert!(!validate_coloring(&good, 5));
    }

    #[test]
    fn ec_order_examples() {
        let natural = ec_order(6, &ColorOrder::Natural).unwrap();
        assert_eq!(
            natural.edges(),
            edges(&[
                (1, 5),
                (2, 4),
                (3, 6),
                (1, 6),
                (2, 5),
                (3, 4),
                (1, 2),
                (3, 5),
                (4, 6),
                (1, 3),
                (2, 6),
                (4, 5),
                (1, 4),
                (2, 3),
                (5, 6)
            ])
            .as_slice()
        );
        let enhanced = ec_order(6, &ColorOrder::Permutation(vec![1, 2, 5, 3, 4])).unwrap();
        assert_eq!(
            enhanced.edges(),
            edges(&[
                (1, 5),
                (2, 4),
                (3, 6),
                (1, 6),
                (2, 5),
                (3, 4),
                (1, 4),
                (2, 3),
                (5, 6),
                (1, 2),
                (3, 5),
                (4, 6),
                (1, 3),
                (2, 6),
                (4, 5)
            ])
            .as_slice()
        );
        assert_eq!(ec_order(3, &ColorOrder::Natural).unwrap().len(), 3);
        let shifted = ec_order(5, &ColorOrder::Shifted).unwrap();
        assert_eq!(&shifted.edges()[..2], edges(&[(1, 3), (4, 5)]).as_slice());
        assert_eq!(&shifted.edges()[8..], edges(&[(2, 5), (3, 4)]).as_slice());
        assert_eq!(default_color_order(6), ColorOrder::Natural);
        assert!(matches!(
            ec_order(6, &ColorOrder::Permutation(vec![1, 2, 2, 3, 4])),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(ec_order(6, &ColorOrder::Permutation(vec![1, 2, 3])).is_err());
    }

    #[test]
    fn ec_prefix_is_a_maximum_matching() {
        for f in 4..=MAX_VERTICES {
            let order = ec_order(f, &ColorOrder::Natural).unwrap();
            let head =
                EdgeSet::from_edges(f, order.edges()[..matching_size(f)].iter().copied()).unwrap();
            assert!(is_maximum_matching(head), "f={f}");
        }
    }
}
