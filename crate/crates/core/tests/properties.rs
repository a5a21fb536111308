use std::collections::BTreeSet;

use edgeshift::report::{self, AnalysisReport, ReportOptions};
use edgeshift::{af, catalog, census, counting, crosscheck, io, lattice, validate, EdgeShift};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Random essential multigraphs: up to 3 vertices, at most 6 edges.
fn essential() -> impl Strategy<Value = EdgeShift> {
    (1usize..=3)
        .prop_flat_map(|n| prop::collection::vec(prop::collection::vec(0u32..=2, n), n))
        .prop_filter_map("not essential or too many edges", |m| {
            let edges: u32 = m.iter().flatten().sum();
            if edges > 6 {
                return None;
            }
            validate(&census::presentation_of(&m)).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lattice_is_union_closed_and_bounded(s in essential()) {
        let lat = lattice::enumerate_invariant_sets(&s);
        let sets: BTreeSet<_> = lat.sets().iter().map(|x| x.vertices().clone()).collect();
        prop_assert!(lat.sets().first().unwrap().is_empty());
        prop_assert!(lat.sets().last().unwrap().is_whole(&s));
        for a in lat.sets() {
            prop_assert!(lattice::is_backward_closed(&s, a.vertices()));
            for b in lat.sets() {
                prop_assert!(sets.contains(&a.vertices().union(b.vertices())));
            }
        }
    }

    #[test]
    fn efficient_predicates_match_oracle(s in essential()) {
        let run = crosscheck::run(&s, s.vertex_count() + 2);
        for c in &run.checks {
            prop_assert!(c.agree, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn primes_are_union_irreducible(s in essential()) {
        let lat = lattice::enumerate_invariant_sets(&s);
        let primes = lattice::primes(&s, &lat);
        for p in &primes {
            prop_assert!(!p.set.is_empty());
            for b in lat.sets() {
                for c in lat.sets() {
                    if lattice::contained_in_union(&s, &p.set, b, c) {
                        prop_assert!(p.set.is_subset(b) || p.set.is_subset(c));
                    }
                }
            }
        }
        // Every nonempty set is a union of the primes below it.
        for a in lat.sets() {
            let mut u = lattice::InvariantSet::empty().vertices().clone();
            for p in primes.iter().filter(|p| p.set.is_subset(a)) {
                u = u.union(p.set.vertices());
            }
            prop_assert_eq!(&u, a.vertices());
        }
    }

    #[test]
    fn trace_sequence_shape(s in essential()) {
        let seq = catalog::trace_obstruction_sequence(&s, 16);
        prop_assert!(catalog::is_nonincreasing(&seq));
        prop_assert!(catalog::is_submultiplicative(&seq));
        if s.is_injective() {
            prop_assert!(seq.iter().all(num_traits::One::is_one));
        }
    }

    #[test]
    fn rank_recursion_and_growth(s in essential()) {
        prop_assert!(af::bratteli(&s, 8).rank_recursion_holds());
        let growth = af::min_rank_growth(&s, 8);
        prop_assert!(growth.windows(2).all(|w| w[0] <= w[1]));
        if lattice::is_strongly_transitive(&s) && !s.is_injective() {
            let m = lattice::covering_time(&s).unwrap();
            for k in 0..=10 {
                let bound = BigUint::from(2u32).pow((k / m) as u32);
                prop_assert!(counting::min_preimage_count(&s, k) >= bound);
            }
        }
    }

    #[test]
    fn partition_of_unity(s in essential(), depth in 1usize..=6) {
        prop_assert!(counting::partition_unity_check(&s, depth));
    }

    #[test]
    fn af_ideals_form_a_moore_family(s in essential()) {
        let afl = af::af_ideal_lattice(&s, af::default_depth(&s));
        prop_assert!(af::is_moore_family(&s, &afl.ideals));
        prop_assert!(afl.stabilization_depth < afl.depth);
    }

    #[test]
    fn catalogs_are_consistent(s in essential()) {
        let lat = lattice::enumerate_invariant_sets(&s);
        prop_assert_eq!(catalog::gauge_invariant_ideals(&s).len(), lat.len());
        let prim = catalog::primitive_ideals(&s);
        for m in catalog::maximal_ideals(&s) {
            prop_assert!(prim.contains(&m));
        }
        for q in catalog::simple_quotients(&s) {
            prop_assert!(q.recheck(&s));
        }
        let v = catalog::global_verdict(&s);
        prop_assert_eq!(v.simple, lat.len() == 2 && v.infinite);
    }

    #[test]
    fn graph_json_round_trips(s in essential()) {
        let p = s.presentation();
        prop_assert_eq!(&io::parse_graph(&io::graph_to_json(p)).unwrap(), p);
    }

    #[test]
    fn report_json_round_trips(s in essential()) {
        let r = report::analyze(&s, &ReportOptions::default());
        let json = report::to_json(&r);
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(report::to_json(&back), json);
    }
}
