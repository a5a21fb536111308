//! Compares the efficient predicates with the brute-force oracle at a fixed
//! word depth.

use std::collections::BTreeSet;

use crate::af;
use crate::catalog;
use crate::counting;
use crate::graph::EdgeShift;
use crate::lattice;
use crate::oracle::{self, InvarianceMode, WordFamily};
use crate::reach;
use crate::vertex_set::VertexSet;
use crate::word::{CylinderWord, EventuallyPeriodicPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub agree: bool,
    /// First disagreement, empty when all cases agree.
    pub detail: String,
    pub cases: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub depth: usize,
    pub checks: Vec<CheckOutcome>,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.checks.iter().all(|c| c.agree)
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    detail: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            detail: None,
        }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.detail.is_none() {
            self.detail = Some(what());
        }
    }

    fn done(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            agree: self.detail.is_none(),
            detail: self.detail.unwrap_or_default(),
            cases: self.cases,
        }
    }
}

fn family_of(shift: &EdgeShift, set: &VertexSet, k: usize) -> WordFamily {
    oracle::vertex_family(shift, &set.iter().collect(), k)
}

/// Periodic points `c^∞` for primitive closed paths of at most `|V|` edges.
fn periodic_points(shift: &EdgeShift) -> Vec<EventuallyPeriodicPoint> {
    reach::primitive_closed_walks(shift, shift.vertex_count())
        .into_iter()
        .map(|c| EventuallyPeriodicPoint::from_parts(Vec::new(), c))
        .collect()
}

pub const NAMES: [&str; 10] = [
    "total-invariance",
    "primeness",
    "strong-transitivity",
    "covering-time",
    "periodic-isolation",
    "orbit-closure",
    "saturation",
    "af-ideals",
    "trace-sequence",
    "partition-of-unity",
];

/// Runs every comparison at word depth `depth >= 2`.
pub fn run(shift: &EdgeShift, depth: usize) -> CrossCheck {
    assert!(depth >= 2, "oracle depth must be at least 2");
    let k = depth;
    let lat = lattice::enumerate_invariant_sets(shift);
    let mut checks = Vec::new();

    let ours: BTreeSet<WordFamily> = lat.sets().iter().map(|s| family_of(shift, s.vertices(), k)).collect();
    let theirs: Vec<WordFamily> = oracle::invariant_families(shift, k).expect("depth >= 2");
    let mut t = Tally::new("total-invariance");
    t.case(ours == theirs.iter().cloned().collect(), || {
        format!("lattice has {} sets, oracle finds {} families", ours.len(), theirs.len())
    });
    for s in lat.sets() {
        let fam = family_of(shift, s.vertices(), k);
        let ok = lattice::is_totally_invariant_oracle(shift, &fam, k).expect("depth >= 2");
        t.case(ok, || format!("{:?} rejected by the oracle", shift.names(s.vertices())));
    }
    checks.push(t.done());

    let mut t = Tally::new("primeness");
    let primes: BTreeSet<WordFamily> = lattice::primes(shift, &lat)
        .iter()
        .map(|p| family_of(shift, p.set.vertices(), k))
        .collect();
    let oracle_primes: BTreeSet<WordFamily> = oracle::prime_families(&theirs).into_iter().collect();
    t.case(primes == oracle_primes, || {
        format!("{} primes vs {} oracle primes", primes.len(), oracle_primes.len())
    });
    let sets = lat.sets();
    for a in sets {
        for b in sets {
            for c in sets {
                let fast = lattice::contained_in_union(shift, a, b, c);
                let slow = oracle::family_in_union(
                    &family_of(shift, a.vertices(), k),
                    &family_of(shift, b.vertices(), k),
                    &family_of(shift, c.vertices(), k),
                );
                t.case(fast == slow, || {
                    format!(
                        "{:?} ⊆ {:?} ∪ {:?}: {fast} vs {slow}",
                        shift.names(a.vertices()),
                        shift.names(b.vertices()),
                        shift.names(c.vertices())
                    )
                });
            }
        }
    }
    checks.push(t.done());

    let mut t = Tally::new("strong-transitivity");
    let fast = lattice::is_strongly_transitive(shift);
    let slow = oracle::strongly_transitive_at(shift, k);
    t.case(fast == slow, || format!("{fast} vs {slow}"));
    checks.push(t.done());

    let mut t = Tally::new("covering-time");
    let fast = lattice::covering_time(shift);
    let slow = oracle::covering_time_at(shift, k, shift.vertex_count() + 1);
    t.case(fast == slow, || format!("{fast:?} vs {slow:?}"));
    checks.push(t.done());

    let points = periodic_points(shift);
    let mut t = Tally::new("periodic-isolation");
    for x in &points {
        let c = CylinderWord::new(shift, x.cycle().to_vec()).expect("closed walk");
        let fast = lattice::isolated_periodic(shift, &c).expect("closed walk");
        let slow = oracle::check_isolation(shift, x.cycle(), k.max(c.len())).expect("closed walk");
        t.case(fast == slow, || format!("{}: {fast} vs {slow}", x.describe(shift)));
    }
    checks.push(t.done());

    let mut t = Tally::new("orbit-closure");
    for x in &points {
        let fast = family_of(shift, lattice::total_orbit_closure(shift, x).vertices(), k);
        let slow = oracle::orbit_closure_words(shift, x, k, shift.vertex_count());
        t.case(fast == slow, || x.describe(shift));
    }
    checks.push(t.done());

    let mut t = Tally::new("saturation");
    for x in &points {
        let depth = k.max(x.cycle().len());
        let fast: WordFamily = lattice::saturation_slice(shift, x, depth)
            .expect("depth covers the cycle")
            .words
            .iter()
            .map(|w| w.edges().to_vec())
            .collect();
        let horizon = shift.vertex_count() * (x.prefix().len() + x.cycle().len());
        let slow = oracle::saturation_words(shift, x, depth, horizon);
        t.case(fast == slow, || x.describe(shift));
    }
    checks.push(t.done());

    let mut t = Tally::new("af-ideals");
    let afl = af::af_ideal_lattice(shift, k);
    let fast: Vec<BTreeSet<usize>> = afl.ideals.iter().map(|i| i.vertices.iter().collect()).collect();
    let slow = oracle::af_ideals(shift, k);
    t.case(fast == slow, || format!("{} vs {} ideals", fast.len(), slow.len()));
    // Each ideal is read back from a saturated word family: words of length
    // k ending where the cylinders over S can be after k steps.
    let table = oracle::words(shift, k);
    for ideal in &afl.ideals {
        let mut ends = ideal.vertices.clone();
        for _ in 0..k {
            ends = reach::post(shift, &ends);
        }
        let fam: WordFamily = table
            .words()
            .iter()
            .filter(|w| ends.contains(shift.dst(*w.last().expect("k >= 1"))))
            .cloned()
            .collect();
        let saturated = oracle::check_family_invariance(shift, &fam, k, InvarianceMode::Saturated).expect("depth >= 2");
        let level0: VertexSet = (0..shift.vertex_count())
            .filter(|&v| table.words().iter().filter(|w| shift.src(w[0]) == v).all(|w| fam.contains(w)))
            .collect();
        t.case(saturated && level0 == ideal.vertices, || {
            format!("ideal {:?}", shift.names(&ideal.vertices))
        });
    }
    checks.push(t.done());

    let mut t = Tally::new("trace-sequence");
    for (i, s) in catalog::trace_obstruction_sequence(shift, k).iter().enumerate() {
        let slow = oracle::trace_product(shift, i + 1);
        t.case(*s == slow, || format!("n = {}: {s} vs {slow}", i + 1));
    }
    checks.push(t.done());

    let mut t = Tally::new("partition-of-unity");
    let fast = counting::partition_unity_check(shift, k);
    let slow = oracle::partition_sums(shift, k).iter().all(num_traits::One::is_one);
    t.case(fast == slow && fast, || format!("{fast} vs {slow}"));
    for v in 0..shift.vertex_count() {
        let fast = counting::preimage_count(shift, k, v).expect("valid vertex");
        let slow = oracle::paths_ending_at(shift, k, v);
        t.case(fast == num_bigint::BigUint::from(slow), || format!("preimages of {}", shift.vertex_name(v)));
    }
    checks.push(t.done());

    CrossCheck { depth, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_agree_at_depth_five() {
        for (name, p) in fixtures::all() {
            let s = crate::graph::validate(&p).unwrap();
            let report = run(&s, 5);
            assert_eq!(report.checks.len(), NAMES.len());
            for c in &report.checks {
                assert!(c.agree, "{name}: {} {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn names_in_order() {
        let s = fixtures::reducible();
        let names: Vec<_> = run(&s, 3).checks.iter().map(|c| c.name).collect();
        assert_eq!(names, NAMES);
    }
}
