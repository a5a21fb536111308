//! Elementary counts on an edge shift: the m-function, preimage counts,
//! word counts and the partition-of-unity identity.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::graph::EdgeShift;
use crate::reach;
use crate::vertex_set::VertexSet;
use crate::word::EventuallyPeriodicPoint;

/// `m(x) = #σ^{-1}(σ(x))` for any point `x` whose first edge ends at `v`;
/// it equals the in-degree of `v`.
pub fn m_value(shift: &EdgeShift, v: usize) -> Result<usize> {
    shift.check_vertex(v)?;
    Ok(shift.in_degree(v))
}

pub fn m_of_point(shift: &EdgeShift, x: &EventuallyPeriodicPoint) -> usize {
    shift.in_degree(shift.dst(x.edge_at(0)))
}

/// Entry `v` of `1ᵀAᵏ` for every vertex: the number of length-`k` paths
/// ending at `v`, which is `#σ^{-k}(x)` for any `x` starting at `v`.
pub fn preimage_counts(shift: &EdgeShift, k: usize) -> Vec<BigUint> {
    let n = shift.vertex_count();
    let mut counts = vec![BigUint::one(); n];
    for _ in 0..k {
        counts = step_counts(shift, &counts);
    }
    counts
}

/// `p ↦ Aᵀp`.
pub(crate) fn step_counts(shift: &EdgeShift, counts: &[BigUint]) -> Vec<BigUint> {
    let a = shift.adjacency();
    let n = shift.vertex_count();
    (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| a[u][v] > 0)
                .map(|u| &counts[u] * BigUint::from(a[u][v]))
                .sum()
        })
        .collect()
}

pub fn preimage_count(shift: &EdgeShift, k: usize, v: usize) -> Result<BigUint> {
    shift.check_vertex(v)?;
    Ok(preimage_counts(shift, k).swap_remove(v))
}

pub fn min_preimage_count(shift: &EdgeShift, k: usize) -> BigUint {
    preimage_counts(shift, k)
        .into_iter()
        .min()
        .expect("validated shifts have vertices")
}

/// Number of legal paths with `k` edges (`|V|` when `k = 0`).
pub fn count_words(shift: &EdgeShift, k: usize) -> BigUint {
    preimage_counts(shift, k).into_iter().sum()
}

/// Checks `Σ_{σ(y) = z} m(y)^{-1} = 1` exactly for every cylinder `z` of
/// length `depth`. The sum depends only on the first vertex of `z`, so one
/// representative per starting vertex is evaluated.
pub fn partition_unity_check(shift: &EdgeShift, depth: usize) -> bool {
    assert!(depth >= 1, "depth must be positive");
    let starts: VertexSet = (0..shift.vertex_count())
        .filter(|&u| has_path_of_length(shift, u, depth))
        .collect();
    let ok = starts.iter().all(|u| {
        let total: BigRational = shift
            .in_edges(u)
            .iter()
            .map(|&f| BigRational::new(BigInt::one(), BigInt::from(shift.in_degree(shift.dst(f)))))
            .fold(BigRational::zero(), |acc, w| acc + w);
        total.is_one()
    });
    ok
}

fn has_path_of_length(shift: &EdgeShift, u: usize, len: usize) -> bool {
    let mut frontier: VertexSet = [u].into_iter().collect();
    for _ in 0..len {
        frontier = reach::post(shift, &frontier);
    }
    !frontier.is_empty()
}

/// The point space is infinite iff some vertex reachable from a cycle has
/// two or more outgoing edges.
pub fn is_space_infinite(shift: &EdgeShift) -> bool {
    let on_cycles: VertexSet = reach::sccs(shift, None)
        .into_iter()
        .filter(|c| reach::is_cyclic(shift, c))
        .flat_map(|c| c.iter().collect::<Vec<_>>())
        .collect();
    reach::descendants(shift, &on_cycles, None)
        .iter()
        .any(|v| shift.out_degree(v) >= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn m_values() {
        assert_eq!(m_value(&fixtures::full_shift(2), 0).unwrap(), 2);
        assert_eq!(m_value(&fixtures::cycle(3), 1).unwrap(), 1);
        let g = fixtures::golden_mean();
        assert_eq!(m_value(&g, g.vertex_index("u").unwrap()).unwrap(), 2);
        assert!(m_value(&g, 7).is_err());
    }

    #[test]
    fn preimage_counts_match_examples() {
        let f = fixtures::full_shift(2);
        assert_eq!(preimage_count(&f, 5, 0).unwrap(), big(32));
        assert_eq!(preimage_count(&fixtures::reducible(), 0, 1).unwrap(), big(1));
        // Path enumeration: 13 length-5 paths end at u, 8 end at v.
        let g = fixtures::golden_mean();
        assert_eq!(preimage_counts(&g, 5), vec![big(13), big(8)]);
        assert_eq!(min_preimage_count(&g, 5), big(8));
    }

    #[test]
    fn word_counts() {
        assert_eq!(count_words(&fixtures::full_shift(2), 3), big(8));
        assert_eq!(count_words(&fixtures::cycle(3), 7), big(3));
        assert_eq!(count_words(&fixtures::golden_mean(), 4), big(13));
    }

    #[test]
    fn partition_of_unity() {
        assert!(partition_unity_check(&fixtures::full_shift(2), 4));
        assert!(partition_unity_check(&fixtures::cycle(4), 3));
        assert!(partition_unity_check(&fixtures::golden_mean(), 6));
    }

    #[test]
    fn infinite_spaces() {
        assert!(!is_space_infinite(&fixtures::cycle(3)));
        assert!(is_space_infinite(&fixtures::full_shift(2)));
        assert!(is_space_infinite(&fixtures::bridged_cycles()));
        assert!(!is_space_infinite(&fixtures::disjoint_cycles()));
    }
}
