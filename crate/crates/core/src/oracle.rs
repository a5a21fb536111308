//! Depth-bounded brute-force referee.
//!
//! Everything here works on explicit tables of legal words and uses nothing
//! from the efficient modules beyond the graph's edge endpoints. It is
//! exponential in the depth and meant for tests and `oracle-check`.
//!
//! Completeness of the bounded searches rests on a pigeonhole argument: a
//! path that leaves a vertex set and comes back, or that connects two
//! vertices at all, can be shortened to at most `|V|` edges. So a search
//! window of `|c| + |V|` edges past the agreement prefix sees every
//! exit-and-return of a cycle `c`, and depth `|V| + 2` sees every
//! backward-closure violation.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Result, ShiftError};
use crate::graph::EdgeShift;
use crate::word::EventuallyPeriodicPoint;

pub type Word = Vec<usize>;
pub type WordFamily = BTreeSet<Word>;

/// All legal words of one length, in lexicographic edge order.
#[derive(Debug, Clone)]
pub struct WordTable {
    depth: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl WordTable {
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &[usize]) -> bool {
        self.index.contains_key(w)
    }

    /// Words `e · w[..k-1]`: the depth-`k` shadows of the preimages of points in `Z(w)`.
    pub fn preimage_extensions(&self, shift: &EdgeShift, i: usize) -> Vec<usize> {
        let w = &self.words[i];
        let start = shift.src(w[0]);
        (0..shift.edge_count())
            .filter(|&e| shift.dst(e) == start)
            .map(|e| {
                let mut v = Vec::with_capacity(self.depth);
                v.push(e);
                v.extend_from_slice(&w[..self.depth - 1]);
                self.index[&v]
            })
            .collect()
    }

    /// Words `w[1..] · f`: the shadows of the images of points in `Z(w)`.
    pub fn truncations(&self, shift: &EdgeShift, i: usize) -> Vec<usize> {
        let w = &self.words[i];
        let end = shift.dst(w[self.depth - 1]);
        (0..shift.edge_count())
            .filter(|&f| shift.src(f) == end)
            .map(|f| {
                let mut v = w[1..].to_vec();
                v.push(f);
                self.index[&v]
            })
            .collect()
    }
}

fn extend_all(shift: &EdgeShift, prefix: &mut Word, remaining: usize, out: &mut Vec<Word>) {
    if remaining == 0 {
        out.push(prefix.clone());
        return;
    }
    let end = shift.dst(*prefix.last().expect("nonempty prefix"));
    for f in 0..shift.edge_count() {
        if shift.src(f) == end {
            prefix.push(f);
            extend_all(shift, prefix, remaining - 1, out);
            prefix.pop();
        }
    }
}

/// Every legal word of length `k >= 1`.
pub fn words(shift: &EdgeShift, k: usize) -> WordTable {
    assert!(k >= 1, "word tables start at depth 1");
    let mut out = Vec::new();
    for e in 0..shift.edge_count() {
        let mut w = vec![e];
        extend_all(shift, &mut w, k - 1, &mut out);
    }
    let index = out.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    WordTable {
        depth: k,
        words: out,
        index,
    }
}

/// All legal words of length `k` that start with `prefix` (`k >= |prefix|`).
pub fn extensions(shift: &EdgeShift, prefix: &[usize], k: usize) -> Vec<Word> {
    assert!(k >= prefix.len() && !prefix.is_empty());
    let mut out = Vec::new();
    let mut w = prefix.to_vec();
    extend_all(shift, &mut w, k - prefix.len(), &mut out);
    out
}

fn in_degree_by_scan(shift: &EdgeShift, v: usize) -> usize {
    (0..shift.edge_count()).filter(|&e| shift.dst(e) == v).count()
}

/// Vertices visited by a word: the source of each edge, then the final target.
pub fn word_vertices(shift: &EdgeShift, w: &[usize]) -> Vec<usize> {
    let mut vs: Vec<usize> = w.iter().map(|&e| shift.src(e)).collect();
    if let Some(&last) = w.last() {
        vs.push(shift.dst(last));
    }
    vs
}

/// Number of depth-`k` words `w'` with `σ(Z(w')) = σ(Z(w))`, i.e. agreeing
/// with `w` after the first edge. This is the m-function on `Z(w)`.
pub fn fiber_size(shift: &EdgeShift, w: &[usize]) -> usize {
    let table = words(shift, w.len());
    table.words().iter().filter(|v| v[1..] == w[1..]).count()
}

/// Number of legal words of length `k` ending at `v`, by enumeration.
pub fn paths_ending_at(shift: &EdgeShift, k: usize, v: usize) -> usize {
    if k == 0 {
        return 1;
    }
    words(shift, k)
        .words()
        .iter()
        .filter(|w| shift.dst(*w.last().unwrap()) == v)
        .count()
}

/// True iff every depth-`k` word occurs as `σ^j` of a word extending `μ`
/// for some `j <= n`.
///
/// The windows `long[j..j + k]` are slid forward one edge at a time, so only
/// distinct depth-`k` words are ever held.
pub fn check_cover(shift: &EdgeShift, mu: &[usize], n: usize, k: usize) -> bool {
    let target = words(shift, k);
    let mut covered = vec![false; target.len()];
    let mut window: BTreeSet<Word> = extensions(shift, mu, k.max(mu.len()))
        .into_iter()
        .map(|w| w[..k].to_vec())
        .collect();
    for j in 0..=n {
        for w in &window {
            covered[target.index[w.as_slice()]] = true;
        }
        if j == n {
            break;
        }
        let forced = mu.get(j + k).copied();
        window = window
            .iter()
            .flat_map(|w| {
                let end = shift.dst(w[k - 1]);
                (0..shift.edge_count())
                    .filter(move |&e| shift.src(e) == end && forced.is_none_or(|f| f == e))
                    .map(move |e| {
                        let mut v = w[1..].to_vec();
                        v.push(e);
                        v
                    })
            })
            .collect();
    }
    covered.into_iter().all(|c| c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvarianceMode {
    /// `σ^{-1}(F) = F` read on depth-`k` shadows.
    TotallyInvariant,
    /// `σ^{-j}(σ^j(A)) = A` for all `j <= k`, read on depth-`k` cylinders.
    Saturated,
}

/// Evaluates an invariance predicate for a family of depth-`k` words.
pub fn check_family_invariance(
    shift: &EdgeShift,
    family: &WordFamily,
    k: usize,
    mode: InvarianceMode,
) -> Result<bool> {
    if k < 2 {
        return Err(ShiftError::DepthTooSmall { depth: k, min: 2 });
    }
    let table = words(shift, k);
    if family.iter().any(|w| !table.contains(w)) {
        return Ok(false);
    }
    Ok(match mode {
        InvarianceMode::TotallyInvariant => family.iter().all(|w| {
            let i = table.index[w];
            let back = table
                .preimage_extensions(shift, i)
                .into_iter()
                .all(|p| family.contains(&table.words[p]));
            let fwd = table
                .truncations(shift, i)
                .into_iter()
                .any(|t| family.contains(&table.words[t]));
            back && fwd
        }),
        InvarianceMode::Saturated => saturated_hull(shift, family, &table) == *family,
    })
}

/// Smallest family containing `family` that is closed under "same suffix
/// after position `j`" for every `j <= k` (for `j = k`: same last vertex).
fn saturated_hull(shift: &EdgeShift, family: &WordFamily, table: &WordTable) -> WordFamily {
    let k = table.depth;
    // Class key of a word under the relation for position `j`.
    let key = |w: &Word, j: usize| -> Word {
        if j < k {
            w[j..].to_vec()
        } else {
            vec![usize::MAX, shift.dst(w[k - 1])]
        }
    };
    let mut hull = family.clone();
    loop {
        let keys: Vec<BTreeSet<Word>> = (0..=k)
            .map(|j| hull.iter().map(|h| key(h, j)).collect())
            .collect();
        let added: Vec<Word> = table
            .words
            .iter()
            .filter(|w| !hull.contains(*w))
            .filter(|w| (0..=k).any(|j| keys[j].contains(&key(w, j))))
            .cloned()
            .collect();
        if added.is_empty() {
            return hull;
        }
        hull.extend(added);
    }
}

/// Words of length `k` all of whose vertices lie in `set`.
pub fn vertex_family(shift: &EdgeShift, set: &BTreeSet<usize>, k: usize) -> WordFamily {
    words(shift, k)
        .words()
        .iter()
        .filter(|w| word_vertices(shift, w).iter().all(|v| set.contains(v)))
        .cloned()
        .collect()
}

/// Distinct vertex-induced word families passing the total-invariance
/// predicate at depth `k`, sorted. The empty family is included.
pub fn invariant_families(shift: &EdgeShift, k: usize) -> Result<Vec<WordFamily>> {
    let n = shift.vertex_count();
    assert!(n < 20, "oracle enumeration is exponential in |V|");
    let mut found = BTreeSet::new();
    for mask in 0u64..(1 << n) {
        let set: BTreeSet<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let fam = vertex_family(shift, &set, k);
        if check_family_invariance(shift, &fam, k, InvarianceMode::TotallyInvariant)? {
            found.insert(fam);
        }
    }
    Ok(found.into_iter().collect())
}

/// `a ⊆ b ∪ c` on word sets.
pub fn family_in_union(a: &WordFamily, b: &WordFamily, c: &WordFamily) -> bool {
    a.iter().all(|w| b.contains(w) || c.contains(w))
}

/// Nonempty families `A` with `A ⊆ B ∪ C ⇒ A ⊆ B or A ⊆ C` over all pairs.
pub fn prime_families(families: &[WordFamily]) -> Vec<WordFamily> {
    families
        .iter()
        .filter(|a| !a.is_empty())
        .filter(|a| {
            families.iter().all(|b| {
                families.iter().all(|c| {
                    !family_in_union(a, b, c) || a.is_subset(b) || a.is_subset(c)
                })
            })
        })
        .cloned()
        .collect()
}

/// Strong transitivity read at depth `k`: every single-edge cylinder covers
/// all depth-`k` words within `k` forward images.
pub fn strongly_transitive_at(shift: &EdgeShift, k: usize) -> bool {
    (0..shift.edge_count()).all(|e| check_cover(shift, &[e], k, k))
}

/// Least `m` such that the depth-`k` words of `σ^j(U)`, `j < m`, cover all
/// depth-`k` words, where `U` = points with at least two preimages. `None`
/// if no `m <= max_m` works.
pub fn covering_time_at(shift: &EdgeShift, k: usize, max_m: usize) -> Option<usize> {
    let target = words(shift, k);
    let mut covered = vec![false; target.len()];
    // Membership in U depends on the first edge only: count the words
    // `f e` of length two.
    let pairs = words(shift, 2);
    let in_u: Vec<bool> = (0..shift.edge_count())
        .map(|e| pairs.words().iter().filter(|w| w[1] == e).count() >= 2)
        .collect();
    for j in 0..max_m {
        for long in words(shift, k + j).words() {
            if in_u[long[0]] {
                covered[target.index[&long[j..j + k]]] = true;
            }
        }
        if covered.iter().all(|&c| c) {
            return Some(j + 1);
        }
    }
    None
}

/// True iff no other member of the total orbit of `c^∞` agrees with it on
/// the first `k` edges. Candidates are `w · ρ^∞` with `ρ` a rotation of
/// `c` and `w` extending the agreement window by up to `|c| + |V|` edges.
pub fn check_isolation(shift: &EdgeShift, c: &[usize], k: usize) -> Result<bool> {
    let closed = !c.is_empty()
        && c.windows(2).all(|p| shift.dst(p[0]) == shift.src(p[1]))
        && shift.dst(c[c.len() - 1]) == shift.src(c[0]);
    if !closed {
        return Err(ShiftError::IllegalCycle("not a closed path".into()));
    }
    if k < c.len() {
        return Err(ShiftError::DepthTooSmall {
            depth: k,
            min: c.len(),
        });
    }
    let x = EventuallyPeriodicPoint::from_parts(Vec::new(), c.to_vec());
    let head = x.head(k);
    let rotations: Vec<Word> = (0..c.len())
        .map(|r| {
            let mut w = c.to_vec();
            w.rotate_left(r);
            w
        })
        .collect();
    let horizon = c.len() + shift.vertex_count();
    for extra in 0..=horizon {
        for w in extensions(shift, &head, k + extra) {
            let end = shift.dst(*w.last().unwrap());
            for rho in rotations.iter().filter(|r| shift.src(r[0]) == end) {
                let y = EventuallyPeriodicPoint::from_parts(w.clone(), rho.clone());
                if !y.same_point(&x) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Depth-`k` words `w` such that some point of `Z(w)` has the same image as
/// `x` after equally many shifts, searching continuations of up to
/// `horizon` edges.
pub fn saturation_words(
    shift: &EdgeShift,
    x: &EventuallyPeriodicPoint,
    k: usize,
    horizon: usize,
) -> WordFamily {
    let mut out = WordFamily::new();
    for w in words(shift, k).words() {
        let hit = (0..=horizon).any(|j| {
            let target = x.vertex_at(shift, k + j);
            extensions(shift, w, k + j)
                .iter()
                .any(|long| shift.dst(*long.last().unwrap()) == target)
        });
        if hit {
            out.insert(w.clone());
        }
    }
    out
}

/// Depth-`k` words that extend, within `horizon` more edges, to a vertex of
/// the periodic part of `x`: the shadow of the closure of the total orbit.
pub fn orbit_closure_words(
    shift: &EdgeShift,
    x: &EventuallyPeriodicPoint,
    k: usize,
    horizon: usize,
) -> WordFamily {
    let on_cycle: BTreeSet<usize> = x.cycle().iter().map(|&e| shift.src(e)).collect();
    words(shift, k)
        .words()
        .iter()
        .filter(|w| {
            (0..=horizon).any(|j| {
                extensions(shift, w, k + j)
                    .iter()
                    .any(|long| on_cycle.contains(&shift.dst(*long.last().unwrap())))
            })
        })
        .cloned()
        .collect()
}

/// `max_w ∏ 1/indeg(dst(e))` over all words of length `n`.
pub fn trace_product(shift: &EdgeShift, n: usize) -> BigRational {
    words(shift, n)
        .words()
        .iter()
        .map(|w| {
            w.iter().fold(BigRational::one(), |acc, &e| {
                acc / BigRational::from_integer(BigInt::from(in_degree_by_scan(shift, shift.dst(e))))
            })
        })
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// Exact `Σ_{f · z legal} 1/fiber(f · z)` for every depth-`k` word `z`,
/// with the fiber counted by enumeration.
pub fn partition_sums(shift: &EdgeShift, k: usize) -> Vec<BigRational> {
    let table = words(shift, k);
    let longer = words(shift, k + 1);
    let mut by_tail: HashMap<&[usize], Vec<&Word>> = HashMap::new();
    for y in longer.words() {
        by_tail.entry(&y[1..]).or_default().push(y);
    }
    table
        .words()
        .iter()
        .map(|z| {
            let ys = by_tail.get(z.as_slice()).map(Vec::as_slice).unwrap_or_default();
            ys.iter()
                .map(|y| {
                    let fiber = by_tail[&y[1..]].len();
                    BigRational::new(BigInt::one(), BigInt::from(fiber))
                })
                .fold(BigRational::zero(), |a, b| a + b)
        })
        .collect()
}

/// Level-0 part of the ideal generated by the vertex blocks `S`, read at
/// depth `k`: vertices all of whose depth-`k` words meet the saturated hull
/// of the words starting in `S`.
pub fn af_closure(shift: &EdgeShift, s: &BTreeSet<usize>, k: usize) -> BTreeSet<usize> {
    let table = words(shift, k);
    // A word is in the hull iff at some position j its vertex is reachable
    // from S in exactly j steps; positions are read off enumerated words.
    let mut reached: Vec<BTreeSet<usize>> = vec![s.clone()];
    for j in 1..=k {
        let layer: BTreeSet<usize> = words(shift, j)
            .words()
            .iter()
            .filter(|w| s.contains(&shift.src(w[0])))
            .map(|w| shift.dst(w[j - 1]))
            .collect();
        reached.push(layer);
    }
    (0..shift.vertex_count())
        .filter(|v| {
            table
                .words()
                .iter()
                .filter(|w| shift.src(w[0]) == *v)
                .all(|w| {
                    word_vertices(shift, w)
                        .iter()
                        .enumerate()
                        .any(|(j, u)| reached[j].contains(u))
                })
        })
        .collect()
}

/// Vertex sets `S` fixed by [`af_closure`] at depth `k`, sorted.
pub fn af_ideals(shift: &EdgeShift, k: usize) -> Vec<BTreeSet<usize>> {
    let n = shift.vertex_count();
    assert!(n < 20, "oracle enumeration is exponential in |V|");
    let mut out: Vec<BTreeSet<usize>> = (0u64..(1 << n))
        .map(|mask| (0..n).filter(|v| mask >> v & 1 == 1).collect::<BTreeSet<usize>>())
        .filter(|s| af_closure(shift, s, k) == *s)
        .collect();
    out.sort();
    out
}

/// Number of matrix units of the orbit groupoid restricted to the finite
/// periodic orbit of `c^∞`: ordered pairs of orbit points related by
/// `σ^a(x) = σ^b(y)`.
pub fn finite_orbit_matrix_units(c: &[usize]) -> usize {
    let x = EventuallyPeriodicPoint::from_parts(Vec::new(), c.to_vec());
    let mut points: Vec<EventuallyPeriodicPoint> = Vec::new();
    for a in 0..c.len() {
        let p = x.shifted(a).canonical();
        if !points.contains(&p) {
            points.push(p);
        }
    }
    let related = |p: &EventuallyPeriodicPoint, q: &EventuallyPeriodicPoint| {
        (0..c.len()).any(|a| (0..c.len()).any(|b| p.shifted(a).same_point(&q.shifted(b))))
    };
    points
        .iter()
        .map(|p| points.iter().filter(|q| related(p, q)).count())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn word_table_sizes() {
        assert_eq!(words(&fixtures::full_shift(2), 2).len(), 4);
        assert_eq!(words(&fixtures::cycle(3), 4).len(), 3);
        // uuu, uuv, uvu, vuu, vuv, plus the three starting with `uv vu` or
        // `vu uv`: 8 edge paths of length 3.
        assert_eq!(words(&fixtures::golden_mean(), 3).len(), 8);
    }

    #[test]
    fn lexicographic_order() {
        let t = words(&fixtures::golden_mean(), 2);
        let mut sorted = t.words().to_vec();
        sorted.sort();
        assert_eq!(sorted, t.words());
    }

    #[test]
    fn cover_examples() {
        assert!(check_cover(&fixtures::full_shift(2), &[0], 1, 3));
        let r = fixtures::reducible();
        // Images of the u-loop reach every word; images of a v-loop never
        // return to u.
        let uu = r.edge_index("uu").unwrap();
        assert!(check_cover(&r, &[uu], 6, 3));
        let va = r.edge_index("va").unwrap();
        assert!(!check_cover(&r, &[va], 6, 3));
        let c = fixtures::cycle(4);
        assert!(check_cover(&c, &[0], 4, 2));
    }

    #[test]
    fn invariance_examples() {
        let f = fixtures::full_shift(2);
        let all: WordFamily = words(&f, 4).words().iter().cloned().collect();
        assert!(check_family_invariance(&f, &all, 4, InvarianceMode::TotallyInvariant).unwrap());
        let starting_a: WordFamily = all.iter().filter(|w| w[0] == 0).cloned().collect();
        assert!(!check_family_invariance(&f, &starting_a, 4, InvarianceMode::TotallyInvariant).unwrap());
        assert!(matches!(
            check_family_invariance(&f, &all, 1, InvarianceMode::TotallyInvariant),
            Err(ShiftError::DepthTooSmall { .. })
        ));
        let r = fixtures::reducible();
        let u_only = vertex_family(&r, &[0].into_iter().collect(), 6);
        assert!(check_family_invariance(&r, &u_only, 6, InvarianceMode::TotallyInvariant).unwrap());
        let v_only = vertex_family(&r, &[1].into_iter().collect(), 6);
        assert!(!check_family_invariance(&r, &v_only, 6, InvarianceMode::TotallyInvariant).unwrap());
    }

    #[test]
    fn isolation_examples() {
        let f = fixtures::full_shift(2);
        assert!(!check_isolation(&f, &[0], 6).unwrap());
        assert!(!check_isolation(&f, &[1], 6).unwrap());
        assert!(check_isolation(&fixtures::cycle(3), &[0, 1, 2], 6).unwrap());
        let g = fixtures::entering_edge();
        let c = [g.edge_index("uv").unwrap(), g.edge_index("vu").unwrap()];
        assert!(check_isolation(&g, &c, 6).unwrap());
        assert!(matches!(
            check_isolation(&fixtures::cycle(3), &[0, 1, 2], 2),
            Err(ShiftError::DepthTooSmall { .. })
        ));
        assert!(matches!(
            check_isolation(&fixtures::cycle(3), &[0, 1], 6),
            Err(ShiftError::IllegalCycle(_))
        ));
    }

    #[test]
    fn fibers_give_in_degrees() {
        let g = fixtures::golden_mean();
        let uu = g.edge_index("uu").unwrap();
        let uv = g.edge_index("uv").unwrap();
        // m(x) for x starting with `uu` is the in-degree of u.
        assert_eq!(fiber_size(&g, &[uu, uu, uv]), 2);
        assert_eq!(fiber_size(&fixtures::full_shift(2), &[0, 1, 0]), 2);
    }

    #[test]
    fn matrix_units_of_cycle() {
        assert_eq!(finite_orbit_matrix_units(&[0, 1, 2]), 9);
        assert_eq!(finite_orbit_matrix_units(&[0]), 1);
    }
}
