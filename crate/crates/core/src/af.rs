//! The AF core: the tower of fiber algebras, its stationary Bratteli
//! diagram, and the order ideals of that diagram.
//!
//! An ideal is recorded by its level-0 vertex set `S`. Write
//! `P(T) = {v : every edge out of v ends in T}`. Reading the saturated hull
//! of the cylinders over `S` at depth `d` gives `P^d(post^d(S))`, so the
//! ideals visible at depth `d` are exactly the sets in the image of `P^d`.
//! These images shrink with `d` and stop changing after finitely many
//! steps.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::counting;
use crate::graph::EdgeShift;
use crate::lattice;
use crate::reach;
use crate::vertex_set::VertexSet;
use crate::word::{CylinderWord, EventuallyPeriodicPoint};

/// Ranks of the homogeneous blocks at one level of the tower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberDecomposition {
    pub level: usize,
    /// `ranks[v] = #σ^{-n}` of any point starting at `v`.
    pub ranks: Vec<BigUint>,
}

pub fn fiber_decomposition(shift: &EdgeShift, n: usize) -> FiberDecomposition {
    FiberDecomposition {
        level: n,
        ranks: counting::preimage_counts(shift, n),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BratteliDiagram {
    pub levels: Vec<FiberDecomposition>,
    /// Multiplicity of the edge from level-`n` vertex `u` to level-`n+1`
    /// vertex `v`; the same between every pair of levels.
    pub multiplicities: Vec<Vec<u32>>,
}

impl BratteliDiagram {
    /// `p_{n+1} = Aᵀ p_n` at every level.
    pub fn rank_recursion_holds(&self) -> bool {
        let n = self.multiplicities.len();
        self.levels.windows(2).all(|w| {
            (0..n).all(|v| {
                let expect: BigUint = (0..n)
                    .map(|u| &w[0].ranks[u] * BigUint::from(self.multiplicities[u][v]))
                    .sum();
                expect == w[1].ranks[v]
            })
        })
    }
}

pub fn bratteli(shift: &EdgeShift, n_max: usize) -> BratteliDiagram {
    let mut levels = vec![fiber_decomposition(shift, 0)];
    for level in 1..=n_max {
        let ranks = counting::step_counts(shift, &levels[level - 1].ranks);
        levels.push(FiberDecomposition { level, ranks });
    }
    let diagram = BratteliDiagram {
        levels,
        multiplicities: shift.adjacency().to_vec(),
    };
    debug_assert!(diagram.rank_recursion_holds());
    diagram
}

/// `min_v p_n(v)` for `n = 1..=n_max`. When the growth bound applies the
/// sequence is checked against it.
pub fn min_rank_growth(shift: &EdgeShift, n_max: usize) -> Vec<BigUint> {
    let diagram = bratteli(shift, n_max);
    let out: Vec<BigUint> = diagram.levels[1..]
        .iter()
        .map(|l| l.ranks.iter().min().expect("nonempty").clone())
        .collect();
    if lattice::is_strongly_transitive(shift) && !shift.is_injective() {
        let m = lattice::covering_time(shift).expect("non-injective");
        for (i, r) in out.iter().enumerate() {
            assert!(*r >= BigUint::from(2u32).pow((i + 1) / m), "rank growth below bound");
        }
    }
    out
}

/// `P(T)`: vertices all of whose successors lie in `T`.
pub fn all_successors_in(shift: &EdgeShift, t: &VertexSet) -> VertexSet {
    (0..shift.vertex_count())
        .filter(|&v| shift.out_edges(v).iter().all(|&e| t.contains(shift.dst(e))))
        .collect()
}

fn iterate_p(shift: &EdgeShift, t: &VertexSet, d: usize) -> VertexSet {
    (0..d).fold(t.clone(), |acc, _| all_successors_in(shift, &acc))
}

/// Image of `P^d` on all vertex sets. `P` preserves intersections and fixes
/// `V`, so the image is the intersection-closure of `V` and the sets
/// `P^d(V ∖ {v})`.
fn ideal_family(shift: &EdgeShift, d: usize) -> BTreeSet<VertexSet> {
    let n = shift.vertex_count();
    let all = shift.vertices();
    let mut family: BTreeSet<VertexSet> = BTreeSet::new();
    family.insert(all.clone());
    for v in 0..n {
        let mut t = all.clone();
        t.remove(v);
        let g = iterate_p(shift, &t, d);
        let met: Vec<VertexSet> = family.iter().map(|s| s.intersection(&g)).collect();
        family.extend(met);
    }
    family
}

/// An ideal of the AF core, given by the vertex blocks it contains at level 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderIdeal {
    pub vertices: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AfIdealLattice {
    pub depth: usize,
    /// Sorted by vertex set.
    pub ideals: Vec<OrderIdeal>,
    /// Least depth from which the family no longer changes.
    pub stabilization_depth: usize,
    pub stable_count: usize,
}

pub fn default_depth(shift: &EdgeShift) -> usize {
    shift.vertex_count() + 2
}

pub fn af_ideal_lattice(shift: &EdgeShift, depth: usize) -> AfIdealLattice {
    assert!(depth >= 1, "depth must be positive");
    let at_depth = ideal_family(shift, depth);
    let mut d = 0;
    let mut cur = ideal_family(shift, 0);
    loop {
        let next = ideal_family(shift, d + 1);
        if next == cur {
            break;
        }
        cur = next;
        d += 1;
    }
    AfIdealLattice {
        depth,
        ideals: at_depth
            .into_iter()
            .map(|vertices| OrderIdeal { vertices })
            .collect(),
        stabilization_depth: d,
        stable_count: cur.len(),
    }
}

/// A prime ideal of the AF core with a point whose closed saturation it
/// is the ideal of, when one was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AfPrime {
    pub ideal: OrderIdeal,
    pub witness: Option<EventuallyPeriodicPoint>,
}

fn is_prime_in(ideals: &[OrderIdeal], s: &VertexSet, full: usize) -> bool {
    s.len() != full
        && ideals.iter().all(|b| {
            ideals.iter().all(|c| {
                !b.vertices.intersection(&c.vertices).is_subset(s)
                    || b.vertices.is_subset(s)
                    || c.vertices.is_subset(s)
            })
        })
}

/// Level-0 blocks of the ideal attached to the closed saturation of `x`:
/// vertices whose cylinder misses the saturation.
pub fn saturation_ideal(shift: &EdgeShift, x: &EventuallyPeriodicPoint) -> VertexSet {
    lattice::saturation_support(shift, x, 0).complement(shift.vertex_count())
}

/// Primes of the depth-`d` lattice under the pairwise test, each with a
/// witness found among eventually periodic points built from a prefix of
/// at most `|V|` edges and a closed path of at most `|V|` edges.
pub fn af_primes(shift: &EdgeShift, depth: usize) -> Vec<AfPrime> {
    let lat = af_ideal_lattice(shift, depth);
    let n = shift.vertex_count();
    let candidates = candidate_points(shift, n);
    lat.ideals
        .iter()
        .filter(|i| is_prime_in(&lat.ideals, &i.vertices, n))
        .map(|i| AfPrime {
            ideal: i.clone(),
            witness: candidates
                .iter()
                .find(|x| saturation_ideal(shift, x) == i.vertices)
                .cloned(),
        })
        .collect()
}

/// Eventually periodic points ordered by total description length, then
/// by prefix length, then lexicographically.
fn candidate_points(shift: &EdgeShift, bound: usize) -> Vec<EventuallyPeriodicPoint> {
    let n = shift.vertex_count();
    let cycles = reach::primitive_closed_walks(shift, bound);
    let mut out = Vec::new();
    for total in 1..=2 * bound {
        for q in 0..total.min(bound + 1) {
            for c in cycles.iter().filter(|c| c.len() == total - q) {
                let start = shift.src(c[0]);
                for v in 0..n {
                    for prefix in reach::paths_from(shift, v, q) {
                        let end = prefix.last().map_or(v, |&e| shift.dst(e));
                        if end == start {
                            out.push(EventuallyPeriodicPoint::from_parts(prefix, c.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

/// The words of the depth-`k` slice of `H(x)`; re-exported here because AF
/// witnesses are read through it.
pub fn witness_slice(shift: &EdgeShift, x: &EventuallyPeriodicPoint, k: usize) -> Vec<CylinderWord> {
    lattice::saturation_slice(shift, x, k.max(x.cycle().len()))
        .map(|s| s.words)
        .unwrap_or_default()
}

/// Is the family of vertex sets closed under intersection and does it
/// contain `V`?
pub fn is_moore_family(shift: &EdgeShift, ideals: &[OrderIdeal]) -> bool {
    let set: BTreeSet<&VertexSet> = ideals.iter().map(|i| &i.vertices).collect();
    set.contains(&shift.vertices())
        && ideals
            .iter()
            .all(|a| ideals.iter().all(|b| set.contains(&a.vertices.intersection(&b.vertices))))
}

/// `p_n ≡ 1` for all `n`: the tower never grows.
pub fn is_rank_constant(seq: &[BigUint]) -> bool {
    seq.iter().all(One::is_one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn counts(shift: &EdgeShift, d: usize) -> usize {
        af_ideal_lattice(shift, d).ideals.len()
    }

    #[test]
    fn fiber_ranks() {
        assert_eq!(fiber_decomposition(&fixtures::full_shift(2), 3).ranks, vec![big(8)]);
        assert!(fiber_decomposition(&fixtures::golden_mean(), 0).ranks.iter().all(One::is_one));
        assert_eq!(fiber_decomposition(&fixtures::golden_mean(), 4).ranks, vec![big(8), big(5)]);
    }

    #[test]
    fn diagrams() {
        let d = bratteli(&fixtures::golden_mean(), 10);
        assert!(d.rank_recursion_holds());
        assert_eq!(d.multiplicities, vec![vec![1, 1], vec![1, 0]]);
        let c = bratteli(&fixtures::cycle(3), 6);
        assert!(c.levels.iter().all(|l| l.ranks.iter().all(One::is_one)));
        let mut broken = d.clone();
        broken.levels[3].ranks[0] += 1u32;
        assert!(!broken.rank_recursion_holds());
    }

    #[test]
    fn rank_growth() {
        let f = min_rank_growth(&fixtures::full_shift(2), 6);
        assert_eq!(f, (1..=6).map(|n| big(1 << n)).collect::<Vec<_>>());
        assert!(is_rank_constant(&min_rank_growth(&fixtures::cycle(4), 6)));
        let g = min_rank_growth(&fixtures::golden_mean(), 8);
        assert_eq!(g, [1, 2, 3, 5, 8, 13, 21, 34].map(big).to_vec());
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(counts(&fixtures::full_shift(2), 1), 2);
        assert_eq!(counts(&fixtures::full_shift(2), 6), 2);
        assert_eq!(counts(&fixtures::cycle(3), 4), 8);
        assert_eq!(counts(&fixtures::golden_mean(), 4), 2);
        assert_eq!(counts(&fixtures::reducible(), 6), 3);
    }

    #[test]
    fn families_match_oracle() {
        for (name, p) in fixtures::all() {
            let s = crate::graph::validate(&p).unwrap();
            for d in 1..=4 {
                let ours: Vec<BTreeSet<usize>> = af_ideal_lattice(&s, d)
                    .ideals
                    .iter()
                    .map(|i| i.vertices.iter().collect())
                    .collect();
                assert_eq!(ours, oracle::af_ideals(&s, d), "{name} depth {d}");
            }
        }
    }

    #[test]
    fn stabilization() {
        let r = af_ideal_lattice(&fixtures::reducible(), 6);
        assert_eq!(r.stable_count, 3);
        assert!(r.stabilization_depth <= 2);
        let f = af_ideal_lattice(&fixtures::full_shift(2), 3);
        assert_eq!(f.stabilization_depth, 0);
        let g = af_ideal_lattice(&fixtures::golden_mean(), 3);
        assert_eq!((g.stabilization_depth, g.stable_count), (2, 2));
        assert!(is_moore_family(&fixtures::reducible(), &r.ideals));
    }

    #[test]
    fn primes_with_witnesses() {
        let f = fixtures::full_shift(2);
        let p = af_primes(&f, 4);
        assert_eq!(p.len(), 1);
        assert!(p[0].ideal.vertices.is_empty());
        assert!(p[0].witness.is_some());

        let c = fixtures::cycle(3);
        let p = af_primes(&c, 4);
        assert_eq!(p.len(), 3);
        for prime in &p {
            let x = prime.witness.as_ref().unwrap();
            assert_eq!(prime.ideal.vertices.len(), 2);
            assert_eq!(witness_slice(&c, x, 3).len(), 1);
        }
    }
}
