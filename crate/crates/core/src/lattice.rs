//! Closed totally invariant subsets of the edge shift, their prime
//! elements, and the point-level predicates used to classify them.
//!
//! A closed set `F` with `σ^{-1}(F) = F` is carried by a vertex set `W`
//! that is backward-closed (every edge ending in `W` starts in `W`): `F`
//! is the set of infinite paths inside `W`. Trimming `W` (repeatedly
//! deleting vertices without an outgoing edge into `W`) gives the canonical
//! representative; trimmed sets are exactly the unions of ancestor sets of
//! cycle-carrying strongly connected components.

use std::collections::BTreeSet;

use crate::error::{Result, ShiftError};
use crate::graph::EdgeShift;
use crate::oracle;
use crate::reach;
use crate::vertex_set::VertexSet;
use crate::word::{primitive_root, CylinderWord, EventuallyPeriodicPoint};

/// A closed totally invariant set given by a backward-closed vertex set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantSet {
    trimmed: VertexSet,
    backward_closed: VertexSet,
}

/// Deletes vertices with no outgoing edge into the set until none remain.
pub fn trim(shift: &EdgeShift, set: &VertexSet) -> VertexSet {
    let mut cur = set.clone();
    loop {
        let sinks: Vec<usize> = cur
            .iter()
            .filter(|&v| !shift.out_edges(v).iter().any(|&e| cur.contains(shift.dst(e))))
            .collect();
        if sinks.is_empty() {
            return cur;
        }
        for v in sinks {
            cur.remove(v);
        }
    }
}

pub fn is_backward_closed(shift: &EdgeShift, set: &VertexSet) -> bool {
    set.iter()
        .all(|v| shift.in_edges(v).iter().all(|&e| set.contains(shift.src(e))))
}

impl InvariantSet {
    pub fn from_backward_closed(shift: &EdgeShift, set: VertexSet) -> Result<Self> {
        if let Some(v) = set.iter().find(|&v| v >= shift.vertex_count()) {
            return Err(ShiftError::UnknownVertex(format!("#{v}")));
        }
        if !is_backward_closed(shift, &set) {
            return Err(ShiftError::NotApplicable(format!(
                "{:?} is not backward-closed",
                shift.names(&set)
            )));
        }
        Ok(InvariantSet {
            trimmed: trim(shift, &set),
            backward_closed: set,
        })
    }

    /// A set already known to be backward-closed and trimmed.
    pub(crate) fn canonical(set: VertexSet) -> Self {
        InvariantSet {
            trimmed: set.clone(),
            backward_closed: set,
        }
    }

    pub fn empty() -> Self {
        Self::canonical(VertexSet::new())
    }

    pub fn whole(shift: &EdgeShift) -> Self {
        Self::canonical(shift.vertices())
    }

    /// The trimmed vertex set; two sets represent the same points iff
    /// these agree.
    pub fn vertices(&self) -> &VertexSet {
        &self.trimmed
    }

    pub fn pre_trim(&self) -> &VertexSet {
        &self.backward_closed
    }

    pub fn is_empty(&self) -> bool {
        self.trimmed.is_empty()
    }

    pub fn is_whole(&self, shift: &EdgeShift) -> bool {
        self.trimmed.len() == shift.vertex_count()
    }

    /// The restricted system on this set, if nonempty.
    pub fn subshift(&self, shift: &EdgeShift) -> Option<EdgeShift> {
        if self.is_empty() {
            None
        } else {
            Some(shift.restrict(&self.trimmed).expect("trimmed sets are essential"))
        }
    }

    /// Point-set inclusion.
    pub fn is_subset(&self, other: &InvariantSet) -> bool {
        self.trimmed.is_subset(&other.trimmed)
    }
}

/// All closed totally invariant sets, ordered by size and then
/// lexicographically (a linear extension of inclusion).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantLattice {
    sets: Vec<InvariantSet>,
}

impl InvariantLattice {
    pub fn sets(&self) -> &[InvariantSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn position(&self, set: &InvariantSet) -> Option<usize> {
        self.sets.iter().position(|s| s.vertices() == set.vertices())
    }

    /// Hasse diagram: pairs `(i, j)` with `sets[i] ⊊ sets[j]` and nothing
    /// strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let below = |i: usize, j: usize| i != j && self.sets[i].is_subset(&self.sets[j]);
        let mut out = Vec::new();
        for j in 0..self.sets.len() {
            for i in 0..self.sets.len() {
                if below(i, j) && !(0..self.sets.len()).any(|k| below(i, k) && below(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Strongly connected components that carry a cycle, with their ancestor sets.
pub(crate) fn cyclic_components(shift: &EdgeShift) -> Vec<(VertexSet, VertexSet)> {
    reach::sccs(shift, None)
        .into_iter()
        .filter(|c| reach::is_cyclic(shift, c))
        .map(|c| {
            let anc = reach::ancestors(shift, &c, None);
            (c, anc)
        })
        .collect()
}

pub fn enumerate_invariant_sets(shift: &EdgeShift) -> InvariantLattice {
    let mut found: BTreeSet<VertexSet> = BTreeSet::new();
    found.insert(VertexSet::new());
    for (_, anc) in cyclic_components(shift) {
        let grown: Vec<VertexSet> = found.iter().map(|s| s.union(&anc)).collect();
        found.extend(grown);
    }
    let mut sets: Vec<InvariantSet> = found.into_iter().map(InvariantSet::canonical).collect();
    sets.sort_by(|a, b| {
        a.vertices()
            .len()
            .cmp(&b.vertices().len())
            .then_with(|| a.vertices().cmp(b.vertices()))
    });
    InvariantLattice { sets }
}

/// Depth-`k` referee for total invariance of a word family.
pub fn is_totally_invariant_oracle(shift: &EdgeShift, family: &oracle::WordFamily, k: usize) -> Result<bool> {
    oracle::check_family_invariance(shift, family, k, oracle::InvarianceMode::TotallyInvariant)
}

/// `A ⊆ B`.
pub fn contained_in(a: &InvariantSet, b: &InvariantSet) -> bool {
    a.is_subset(b)
}

/// `A ⊆ B ∪ C`. Fails iff some vertex of `A` outside `B` and some vertex of
/// `A` outside `C` are joined by a directed path inside `A`: a point of `A`
/// running from one to the other ends up outside both.
pub fn contained_in_union(shift: &EdgeShift, a: &InvariantSet, b: &InvariantSet, c: &InvariantSet) -> bool {
    let wa = a.vertices();
    let out_b = wa.difference(b.vertices());
    let out_c = wa.difference(c.vertices());
    if out_b.is_empty() || out_c.is_empty() {
        return true;
    }
    let forward = reach::descendants(shift, &out_b, Some(wa));
    let backward = reach::ancestors(shift, &out_b, Some(wa));
    let joined = out_c.iter().any(|v| forward.contains(v) || backward.contains(v));
    !joined
}

fn is_prime_in(shift: &EdgeShift, lattice: &InvariantLattice, a: &InvariantSet) -> bool {
    !a.is_empty()
        && lattice.sets().iter().all(|b| {
            lattice.sets().iter().all(|c| {
                !contained_in_union(shift, a, b, c) || contained_in(a, b) || contained_in(a, c)
            })
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeKind {
    /// The set is the orbit closure of a periodic point isolated in its orbit.
    Per,
    /// No periodic point of the set is isolated in it.
    Aper,
}

/// A prime invariant set with a point whose total orbit is dense in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeClass {
    pub set: InvariantSet,
    pub kind: PrimeKind,
    pub witness: EventuallyPeriodicPoint,
    /// The strongly connected component generating the set.
    pub generator: VertexSet,
}

/// A shortest closed walk through `start` inside `comp`.
fn cycle_through(shift: &EdgeShift, comp: &VertexSet, start: usize) -> Vec<usize> {
    // Breadth-first search over edges, remembering the edge used to arrive.
    let mut arrived: Vec<Option<usize>> = vec![None; shift.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    for &e in shift.out_edges(start) {
        let w = shift.dst(e);
        if w == start {
            return vec![e];
        }
        if comp.contains(w) && arrived[w].is_none() {
            arrived[w] = Some(e);
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &e in shift.out_edges(v) {
            let w = shift.dst(e);
            if w == start {
                let mut path = vec![e];
                let mut cur = v;
                while cur != start {
                    let back = arrived[cur].expect("visited vertices have an arrival edge");
                    path.push(back);
                    cur = shift.src(back);
                }
                path.reverse();
                return path;
            }
            if comp.contains(w) && arrived[w].is_none() {
                arrived[w] = Some(e);
                queue.push_back(w);
            }
        }
    }
    unreachable!("cyclic component has a closed walk through each vertex")
}

pub fn primes(shift: &EdgeShift, lattice: &InvariantLattice) -> Vec<PrimeClass> {
    let components = cyclic_components(shift);
    let mut out = Vec::new();
    for set in lattice.sets() {
        if !is_prime_in(shift, lattice, set) {
            continue;
        }
        let (generator, _) = components
            .iter()
            .find(|(_, anc)| anc == set.vertices())
            .expect("prime sets are ancestor sets of cyclic components");
        let start = generator.iter().next().expect("nonempty component");
        let cycle = cycle_through(shift, generator, start);
        let witness = EventuallyPeriodicPoint::from_parts(Vec::new(), cycle.clone());
        debug_assert_eq!(total_orbit_closure(shift, &witness).vertices(), set.vertices());
        let word = CylinderWord::new(shift, cycle).expect("closed walk is legal");
        let kind = if isolated_periodic(shift, &word).expect("closed walk") {
            PrimeKind::Per
        } else {
            PrimeKind::Aper
        };
        out.push(PrimeClass {
            set: set.clone(),
            kind,
            witness,
            generator: generator.clone(),
        });
    }
    out
}

/// True iff `c^∞` is isolated in its total orbit: `c` is a simple cycle
/// (after taking its primitive root) and no edge leaving a vertex of `c`
/// other than `c`'s own can lead back to `c`.
pub fn isolated_periodic(shift: &EdgeShift, c: &CylinderWord) -> Result<bool> {
    if !c.is_closed(shift) {
        return Err(ShiftError::IllegalCycle(format!("{:?} is not closed", c.ids(shift))));
    }
    let root = primitive_root(c.edges());
    let on_cycle: VertexSet = root.iter().map(|&e| shift.src(e)).collect();
    if on_cycle.len() != root.len() {
        // Revisits a vertex with different continuations: a second cycle.
        return Ok(false);
    }
    let returning = reach::ancestors(shift, &on_cycle, None);
    Ok(root.iter().all(|&own| {
        shift
            .out_edges(shift.src(own))
            .iter()
            .all(|&e| e == own || !returning.contains(shift.dst(e)))
    }))
}

/// Closure of the total orbit of `x`: all paths that can run into the
/// periodic part of `x`.
pub fn total_orbit_closure(shift: &EdgeShift, x: &EventuallyPeriodicPoint) -> InvariantSet {
    let anc = reach::ancestors(shift, &x.cycle_vertices(shift), None);
    InvariantSet::canonical(anc)
}

/// Minimal nonempty elements.
pub fn minimal_sets(lattice: &InvariantLattice) -> Vec<InvariantSet> {
    lattice
        .sets()
        .iter()
        .filter(|a| !a.is_empty())
        .filter(|a| {
            !lattice
                .sets()
                .iter()
                .any(|b| !b.is_empty() && b.vertices() != a.vertices() && b.is_subset(a))
        })
        .cloned()
        .collect()
}

/// Finitely many forward images of any cylinder cover the space; for an
/// edge shift this is strong connectivity.
pub fn is_strongly_transitive(shift: &EdgeShift) -> bool {
    reach::is_strongly_connected(shift)
}

/// Least `m` with `⋃_{j<m} σ^j(U) = Y` for `U` the points with at least two
/// preimages. `σ^j(U)` is the set of points starting at a vertex reached in
/// exactly `j` steps from an in-degree `>= 2` vertex. `None` if the shift is
/// injective or the images never cover.
pub fn covering_time(shift: &EdgeShift) -> Option<usize> {
    let mut layer: VertexSet = (0..shift.vertex_count())
        .filter(|&v| shift.in_degree(v) >= 2)
        .collect();
    if layer.is_empty() {
        return None;
    }
    let mut covered = layer.clone();
    let n = shift.vertex_count();
    for m in 1..=n {
        if covered.len() == n {
            return Some(m);
        }
        layer = reach::post(shift, &layer);
        covered = covered.union(&layer);
    }
    None
}

/// Periodic points have empty interior in `A` iff no cycle of `A`'s
/// subgraph is without an exit inside `A`. Such a cycle is a terminal
/// strongly connected component of `A` that is a simple cycle.
pub fn is_topologically_free(shift: &EdgeShift, lattice: &InvariantLattice, a: &InvariantSet) -> Result<bool> {
    if !is_prime_in(shift, lattice, a) {
        return Err(ShiftError::NotPrime);
    }
    Ok(!has_exitless_cycle(shift, a.vertices()))
}

pub(crate) fn has_exitless_cycle(shift: &EdgeShift, within: &VertexSet) -> bool {
    reach::sccs(shift, Some(within)).into_iter().any(|comp| {
        let terminal = comp.iter().all(|v| {
            shift
                .out_edges(v)
                .iter()
                .all(|&e| !within.contains(shift.dst(e)) || comp.contains(shift.dst(e)))
        });
        terminal && reach::is_simple_cycle(shift, &comp)
    })
}

/// Depth-`k` words meeting the saturation `H(x) = ⋃_n {y : σⁿy = σⁿx}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationSlice {
    pub point: EventuallyPeriodicPoint,
    pub depth: usize,
    pub words: Vec<CylinderWord>,
}

/// Vertices `v` from which some path of length `j` reaches the vertex of
/// `x` at position `n + j`, for some `j >= 0`. A word of length `n` meets
/// `H(x)` iff it ends in this set.
pub fn saturation_support(shift: &EdgeShift, x: &EventuallyPeriodicPoint, n: usize) -> VertexSet {
    let q = x.prefix().len();
    let period = x.cycle().len();
    let times = q + period;
    let next = |t: usize| if t + 1 < times { t + 1 } else { q };
    let time_of = |n: usize| if n < times { n } else { q + (n - q) % period };
    let nv = shift.vertex_count();
    let mut good = vec![vec![false; times]; nv];
    for (t, row) in (0..times).map(|t| (t, x.vertex_at(shift, t))) {
        good[row][t] = true;
    }
    loop {
        let mut changed = false;
        for v in 0..nv {
            for t in 0..times {
                if !good[v][t]
                    && shift
                        .out_edges(v)
                        .iter()
                        .any(|&e| good[shift.dst(e)][next(t)])
                {
                    good[v][t] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let t = time_of(n);
    (0..nv).filter(|&v| good[v][t]).collect()
}

pub fn saturation_slice(shift: &EdgeShift, x: &EventuallyPeriodicPoint, k: usize) -> Result<SaturationSlice> {
    let min = x.cycle().len();
    if k < min || k == 0 {
        return Err(ShiftError::DepthTooSmall { depth: k, min: min.max(1) });
    }
    let ends = saturation_support(shift, x, k);
    let mut words = Vec::new();
    for t in ends.iter() {
        let mut suffix = Vec::new();
        words_ending_at(shift, t, k, &mut suffix, &mut words);
    }
    words.sort();
    Ok(SaturationSlice {
        point: x.clone(),
        depth: k,
        words: words
            .into_iter()
            .map(|w| CylinderWord::new(shift, w).expect("built from edges"))
            .collect(),
    })
}

fn words_ending_at(shift: &EdgeShift, v: usize, len: usize, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if len == 0 {
        out.push(suffix.iter().rev().copied().collect());
        return;
    }
    for &e in shift.in_edges(v) {
        suffix.push(e);
        words_ending_at(shift, shift.src(e), len - 1, suffix, out);
        suffix.pop();
    }
}
