//! Ideal catalogs of the groupoid algebra read off the invariant-set
//! lattice: gauge-invariant, primitive and maximal ideals, simple
//! quotients, and the global simplicity verdict with certificates.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::counting;
use crate::error::{Result, ShiftError};
use crate::graph::{EdgeShift, EdgeSpec, GraphPresentation};
use crate::lattice::{self, InvariantLattice, InvariantSet, PrimeKind};
use crate::reach;

/// Parameter `w` on the circle labelling a family of primitive ideals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpectralParam {
    /// The whole circle, reported symbolically.
    Formal,
    /// `exp(2πi·p/q)` with `0 <= p < q` and `gcd(p, q) = 1`.
    RootOfUnity { p: u64, q: u64 },
}

impl SpectralParam {
    pub fn root_of_unity(p: u64, q: u64) -> Self {
        assert!(q > 0, "denominator must be positive");
        let p = p % q;
        let g = p.gcd(&q);
        SpectralParam::RootOfUnity { p: p / g, q: q / g }
    }
}

impl fmt::Display for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralParam::Formal => write!(f, "w"),
            SpectralParam::RootOfUnity { p, q } => write!(f, "exp(2πi·{p}/{q})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealVariant {
    /// The gauge-invariant ideal of functions vanishing on `F`.
    GaugeInvariant(InvariantSet),
    /// Kernel of the representation on an aperiodic prime set.
    PrimAper(InvariantSet),
    /// The ideal generated by `u_x - w p_x` over a periodic prime set.
    PrimPer(InvariantSet, SpectralParam),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IdealFlags {
    pub primitive: bool,
    pub maximal: bool,
    pub gauge_invariant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDescriptor {
    pub variant: IdealVariant,
    /// The closed invariant set on which the ideal's elements vanish.
    pub rho: InvariantSet,
    pub flags: IdealFlags,
}

impl IdealDescriptor {
    pub fn name(&self, shift: &EdgeShift) -> String {
        let show = |s: &InvariantSet| format!("{{{}}}", shift.names(s.vertices()).join(","));
        match &self.variant {
            IdealVariant::GaugeInvariant(f) => format!("GaugeInvariant({})", show(f)),
            IdealVariant::PrimAper(a) => format!("PrimAper({})", show(a)),
            IdealVariant::PrimPer(a, w) => format!("PrimPer({}, {w})", show(a)),
        }
    }
}

/// Evidence attached to a verdict, each re-checkable on the system it
/// was computed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    NonInjectivityWitness {
        vertex: String,
        in_degree: usize,
    },
    /// `min_v #σ^{-k}(v) >= 2^⌊k/m⌋` for `k <= k_max`; `counts[k]` is the minimum.
    GrowthBound {
        m: usize,
        k_max: usize,
        counts: Vec<BigUint>,
    },
    /// `s_1..s_N` and the first index with `s_n < 2^{-10}`.
    TraceVanishing {
        sequence: Vec<BigRational>,
        threshold: Option<usize>,
    },
    StrongTransitivity {
        vertices: Vec<String>,
    },
}

pub const GROWTH_K_MAX: usize = 12;
pub const TRACE_EXPONENT: u32 = 10;

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::NonInjectivityWitness { .. } => "NonInjectivityWitness",
            Certificate::GrowthBound { .. } => "GrowthBound",
            Certificate::TraceVanishing { .. } => "TraceVanishing",
            Certificate::StrongTransitivity { .. } => "StrongTransitivity",
        }
    }

    pub fn recheck(&self, shift: &EdgeShift) -> bool {
        match self {
            Certificate::NonInjectivityWitness { vertex, in_degree } => shift
                .vertex_index(vertex)
                .is_ok_and(|v| shift.in_degree(v) == *in_degree && *in_degree >= 2),
            Certificate::GrowthBound { m, k_max, counts } => {
                *m >= 1
                    && counts.len() == k_max + 1
                    && counts.iter().enumerate().all(|(k, c)| {
                        *c == counting::min_preimage_count(shift, k) && *c >= BigUint::from(2u32).pow(k / m)
                    })
            }
            Certificate::TraceVanishing { sequence, threshold } => {
                *sequence == trace_obstruction_sequence(shift, sequence.len())
                    && *threshold == first_below(sequence, TRACE_EXPONENT)
            }
            Certificate::StrongTransitivity { vertices } => {
                let names: Vec<String> = shift.vertices().iter().map(|v| shift.vertex_name(v).to_string()).collect();
                *vertices == names && reach::is_strongly_connected(shift)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientKind {
    MatrixAlgebra(usize),
    CrossedProductHomeo,
    PurelyInfinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    pub maximal_ideal: IdealDescriptor,
    pub kind: QuotientKind,
    /// Certificates refer to the system restricted to `maximal_ideal.rho`.
    pub certificates: Vec<Certificate>,
}

impl QuotientReport {
    pub fn recheck(&self, shift: &EdgeShift) -> bool {
        match self.maximal_ideal.rho.subshift(shift) {
            Some(sub) => self.certificates.iter().all(|c| c.recheck(&sub)),
            None => false,
        }
    }
}

fn flags_for(shift: &EdgeShift, lattice: &InvariantLattice) -> (Vec<lattice::PrimeClass>, Vec<InvariantSet>) {
    (lattice::primes(shift, lattice), lattice::minimal_sets(lattice))
}

/// One ideal per lattice element, largest invariant set (the zero ideal)
/// first.
pub fn gauge_invariant_ideals(shift: &EdgeShift) -> Vec<IdealDescriptor> {
    let lat = lattice::enumerate_invariant_sets(shift);
    let (primes, minimal) = flags_for(shift, &lat);
    lat.sets()
        .iter()
        .rev()
        .map(|f| {
            let aper = primes
                .iter()
                .any(|p| p.kind == PrimeKind::Aper && p.set.vertices() == f.vertices());
            let maximal = aper
                && minimal.iter().any(|m| m.vertices() == f.vertices())
                && counting::is_space_infinite(&f.subshift(shift).expect("prime sets are nonempty"));
            IdealDescriptor {
                variant: IdealVariant::GaugeInvariant(f.clone()),
                rho: f.clone(),
                flags: IdealFlags {
                    primitive: aper,
                    maximal,
                    gauge_invariant: true,
                },
            }
        })
        .collect()
}

/// A possibly non-essential piece of the graph: the ideal side of an
/// extension, with the edges entering it from the quotient side kept apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenSystem {
    pub presentation: GraphPresentation,
    pub boundary_edges: Vec<EdgeSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSplit {
    pub ideal: OpenSystem,
    pub quotient: GraphPresentation,
}

pub fn quotient_split(shift: &EdgeShift, f: &InvariantSet) -> Result<QuotientSplit> {
    if f.is_empty() || f.is_whole(shift) {
        return Err(ShiftError::TrivialSet);
    }
    let rest = f.vertices().complement(shift.vertex_count());
    let spec = |e: usize| {
        EdgeSpec::new(
            shift.edge_id(e),
            shift.vertex_name(shift.src(e)),
            shift.vertex_name(shift.dst(e)),
        )
    };
    let inside = shift.induced_edges(&rest).into_iter().map(spec).collect();
    let boundary_edges = (0..shift.edge_count())
        .filter(|&e| f.vertices().contains(shift.src(e)) && rest.contains(shift.dst(e)))
        .map(spec)
        .collect();
    Ok(QuotientSplit {
        ideal: OpenSystem {
            presentation: GraphPresentation::new(shift.names(&rest), inside),
            boundary_edges,
        },
        quotient: shift.induced_presentation(f.vertices()),
    })
}

fn is_maximal_set(shift: &EdgeShift, minimal: &[InvariantSet], a: &InvariantSet) -> bool {
    minimal.iter().any(|m| m.vertices() == a.vertices()) && {
        let sub = a.subshift(shift).expect("minimal sets are nonempty");
        counting::is_space_infinite(&sub) || reach::is_simple_cycle(shift, a.vertices())
    }
}

/// Aperiodic primes give one ideal each, periodic primes a circle of
/// ideals; larger sets first.
pub fn primitive_ideals(shift: &EdgeShift) -> Vec<IdealDescriptor> {
    let lat = lattice::enumerate_invariant_sets(shift);
    let (primes, minimal) = flags_for(shift, &lat);
    let out: Vec<IdealDescriptor> = primes
        .iter()
        .rev()
        .map(|p| {
            let maximal = is_maximal_set(shift, &minimal, &p.set);
            match p.kind {
                PrimeKind::Aper => IdealDescriptor {
                    variant: IdealVariant::PrimAper(p.set.clone()),
                    rho: p.set.clone(),
                    flags: IdealFlags {
                        primitive: true,
                        maximal,
                        gauge_invariant: true,
                    },
                },
                PrimeKind::Per => IdealDescriptor {
                    variant: IdealVariant::PrimPer(p.set.clone(), SpectralParam::Formal),
                    rho: p.set.clone(),
                    flags: IdealFlags {
                        primitive: true,
                        maximal,
                        gauge_invariant: false,
                    },
                },
            }
        })
        .collect();
    let aper: Vec<_> = out.iter().filter(|d| matches!(d.variant, IdealVariant::PrimAper(_))).collect();
    let per: Vec<_> = out.iter().filter(|d| matches!(d.variant, IdealVariant::PrimPer(..))).collect();
    assert!(
        aper.iter().all(|a| per.iter().all(|p| a.rho != p.rho)),
        "a prime set cannot be both periodic and aperiodic"
    );
    out
}

/// Infinite minimal sets give maximal aperiodic kernels; finite minimal
/// sets are single backward-closed cycles and give maximal circles.
pub fn maximal_ideals(shift: &EdgeShift) -> Vec<IdealDescriptor> {
    let lat = lattice::enumerate_invariant_sets(shift);
    let minimal = lattice::minimal_sets(&lat);
    let primes = lattice::primes(shift, &lat);
    let mut out = Vec::new();
    for f in minimal.iter().rev() {
        let sub = f.subshift(shift).expect("minimal sets are nonempty");
        let class = primes
            .iter()
            .find(|p| p.set.vertices() == f.vertices())
            .expect("minimal sets are prime");
        let flags = |gauge_invariant| IdealFlags {
            primitive: true,
            maximal: true,
            gauge_invariant,
        };
        if counting::is_space_infinite(&sub) {
            assert_eq!(class.kind, PrimeKind::Aper);
            out.push(IdealDescriptor {
                variant: IdealVariant::PrimAper(f.clone()),
                rho: f.clone(),
                flags: flags(true),
            });
        } else {
            assert!(reach::is_simple_cycle(shift, f.vertices()), "finite minimal set is a cycle");
            assert_eq!(class.kind, PrimeKind::Per);
            out.push(IdealDescriptor {
                variant: IdealVariant::PrimPer(f.clone(), SpectralParam::Formal),
                rho: f.clone(),
                flags: flags(false),
            });
        }
    }
    out
}

pub fn simple_quotients(shift: &EdgeShift) -> Vec<QuotientReport> {
    maximal_ideals(shift)
        .into_iter()
        .map(|ideal| match &ideal.variant {
            IdealVariant::PrimPer(a, _) => QuotientReport {
                kind: QuotientKind::MatrixAlgebra(a.vertices().len()),
                maximal_ideal: ideal,
                certificates: Vec::new(),
            },
            IdealVariant::PrimAper(f) => {
                let sub = f.subshift(shift).expect("minimal sets are nonempty");
                // Injective on an essential graph means every in-degree is 1,
                // so the graph is a union of disjoint cycles and the space is
                // finite. An infinite minimal set can't get here.
                assert!(!sub.is_injective(), "injective infinite minimal set on an edge shift");
                QuotientReport {
                    kind: QuotientKind::PurelyInfinite,
                    certificates: purely_infinite_certificates(&sub).expect("infinite minimal sets are strongly connected"),
                    maximal_ideal: ideal,
                }
            }
            IdealVariant::GaugeInvariant(_) => unreachable!("maximal ideals are primitive"),
        })
        .collect()
}

fn non_injectivity_witness(shift: &EdgeShift) -> Option<Certificate> {
    (0..shift.vertex_count())
        .find(|&v| shift.in_degree(v) >= 2)
        .map(|v| Certificate::NonInjectivityWitness {
            vertex: shift.vertex_name(v).to_string(),
            in_degree: shift.in_degree(v),
        })
}

/// Certificates for a strongly transitive, non-injective system: strong
/// transitivity, a non-injectivity witness, the growth bound and the trace
/// threshold.
pub fn purely_infinite_certificates(shift: &EdgeShift) -> Result<Vec<Certificate>> {
    let growth = growth_certificate(shift)?;
    Ok(vec![
        Certificate::StrongTransitivity {
            vertices: shift.names(&shift.vertices()),
        },
        non_injectivity_witness(shift).expect("non-injective"),
        growth,
        trace_certificate(shift),
    ])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalVerdict {
    pub simple: bool,
    pub injective: bool,
    /// Decided only for simple algebras.
    pub purely_infinite: Option<bool>,
    pub strongly_transitive: bool,
    pub infinite: bool,
    pub witness: Option<Certificate>,
    pub notes: Vec<String>,
}

pub fn global_verdict(shift: &EdgeShift) -> GlobalVerdict {
    let strongly_transitive = lattice::is_strongly_transitive(shift);
    let infinite = counting::is_space_infinite(shift);
    let injective = shift.is_injective();
    let simple = strongly_transitive && infinite;
    let mut notes = Vec::new();
    if simple && injective {
        notes.push("the shift is a homeomorphism; the algebra is a crossed product".to_string());
    }
    if strongly_transitive && !injective {
        notes.push("strongly transitive and not injective: the algebra is approximately divisible".to_string());
    }
    if shift.presentation().subshift && simple {
        notes.push("input marked as a subshift presentation: simplicity implies pure infiniteness".to_string());
    }
    GlobalVerdict {
        simple,
        injective,
        purely_infinite: simple.then_some(!injective),
        strongly_transitive,
        infinite,
        witness: if simple { non_injectivity_witness(shift) } else { None },
        notes,
    }
}

/// `s_1..s_n` with `s_j` the largest value of `∏ 1/indeg(dst(e_i))` over
/// paths of length `j`.
pub fn trace_obstruction_sequence(shift: &EdgeShift, n: usize) -> Vec<BigRational> {
    let nv = shift.vertex_count();
    let mut best: Vec<BigRational> = vec![BigRational::one(); nv];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        best = (0..nv)
            .map(|w| {
                let from = shift
                    .in_edges(w)
                    .iter()
                    .map(|&e| &best[shift.src(e)])
                    .max()
                    .expect("essential graph")
                    .clone();
                from / BigRational::from_integer(BigInt::from(shift.in_degree(w)))
            })
            .collect();
        out.push(best.iter().max().expect("nonempty").clone());
    }
    out
}

fn first_below(sequence: &[BigRational], exponent: u32) -> Option<usize> {
    let bound = BigRational::new(BigInt::one(), BigInt::from(2u32).pow(exponent));
    sequence.iter().position(|s| *s < bound).map(|i| i + 1)
}

/// Trace sequence run until it drops below `2^{-10}`. On a strongly
/// connected graph that is not a cycle, edges into in-degree-1 vertices
/// form no cycle, so every `|V|` steps halve the product and `11|V|` steps
/// always suffice.
pub fn trace_certificate(shift: &EdgeShift) -> Certificate {
    let cap = 11 * shift.vertex_count() + 1;
    let sequence = trace_obstruction_sequence(shift, cap);
    let threshold = first_below(&sequence, TRACE_EXPONENT);
    let keep = threshold.unwrap_or(cap);
    Certificate::TraceVanishing {
        sequence: sequence[..keep].to_vec(),
        threshold,
    }
}

pub fn growth_certificate(shift: &EdgeShift) -> Result<Certificate> {
    if shift.is_injective() {
        return Err(ShiftError::NotApplicable("the shift is injective".into()));
    }
    if !lattice::is_strongly_transitive(shift) {
        return Err(ShiftError::NotApplicable("the shift is not strongly transitive".into()));
    }
    let m = lattice::covering_time(shift).expect("strongly connected with a vertex of in-degree >= 2");
    let counts: Vec<BigUint> = (0..=GROWTH_K_MAX)
        .map(|k| counting::min_preimage_count(shift, k))
        .collect();
    for (k, c) in counts.iter().enumerate() {
        assert!(*c >= BigUint::from(2u32).pow(k / m), "growth bound fails at k = {k}");
    }
    Ok(Certificate::GrowthBound {
        m,
        k_max: GROWTH_K_MAX,
        counts,
    })
}

/// `2^{-n}` as an exact rational.
pub fn inverse_power_of_two(n: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2u32).pow(n))
}

pub fn is_nonincreasing(seq: &[BigRational]) -> bool {
    seq.windows(2).all(|w| w[1] <= w[0])
}

/// `s_{a+b} <= s_a s_b` for all `a + b <= len`.
pub fn is_submultiplicative(seq: &[BigRational]) -> bool {
    let s = |i: usize| &seq[i - 1];
    (1..=seq.len()).all(|a| (1..=seq.len() - a).all(|b| *s(a + b) <= s(a) * s(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle;

    fn names(shift: &EdgeShift, ideals: &[IdealDescriptor]) -> Vec<String> {
        ideals.iter().map(|d| d.name(shift)).collect()
    }

    #[test]
    fn spectral_params() {
        assert_eq!(SpectralParam::Formal.to_string(), "w");
        assert_eq!(SpectralParam::root_of_unity(2, 4).to_string(), "exp(2πi·1/2)");
        assert_eq!(SpectralParam::root_of_unity(5, 3), SpectralParam::RootOfUnity { p: 2, q: 3 });
    }

    #[test]
    fn gauge_ideals() {
        let f = fixtures::full_shift(2);
        let g = gauge_invariant_ideals(&f);
        assert_eq!(g.len(), 2);
        assert!(g[0].rho.is_whole(&f) && g[1].rho.is_empty());
        assert_eq!(gauge_invariant_ideals(&fixtures::reducible()).len(), 3);
        assert_eq!(gauge_invariant_ideals(&fixtures::cycle(4)).len(), 2);
    }

    #[test]
    fn splits() {
        let r = fixtures::reducible();
        let l = lattice::enumerate_invariant_sets(&r);
        let u = &l.sets()[1];
        let split = quotient_split(&r, u).unwrap();
        assert_eq!(split.quotient.vertices, vec!["u"]);
        assert_eq!(split.quotient.edges.len(), 1);
        assert_eq!(split.ideal.presentation.vertices, vec!["v"]);
        assert_eq!(split.ideal.presentation.edges.len(), 2);
        assert_eq!(split.ideal.boundary_edges, vec![EdgeSpec::new("uv", "u", "v")]);
        // Quotient words are exactly the words inside F.
        let q = crate::graph::validate(&split.quotient).unwrap();
        assert_eq!(oracle::words(&q, 4).len(), 1);
        assert_eq!(quotient_split(&r, &InvariantSet::whole(&r)), Err(ShiftError::TrivialSet));

        let d = fixtures::disjoint_cycles();
        let l = lattice::enumerate_invariant_sets(&d);
        let p = l.sets().iter().find(|s| s.vertices().len() == 1).unwrap();
        let split = quotient_split(&d, p).unwrap();
        assert_eq!(split.quotient.vertices, vec!["p"]);
        assert_eq!(split.ideal.presentation.vertices, vec!["q", "r"]);
        assert!(split.ideal.boundary_edges.is_empty());
    }

    #[test]
    fn primitive_catalogs() {
        let f = fixtures::full_shift(2);
        assert_eq!(names(&f, &primitive_ideals(&f)), vec!["PrimAper({v})"]);
        let c = fixtures::cycle(3);
        assert_eq!(names(&c, &primitive_ideals(&c)), vec!["PrimPer({v0,v1,v2}, w)"]);
        let r = fixtures::reducible();
        let p = primitive_ideals(&r);
        assert_eq!(names(&r, &p), vec!["PrimAper({u,v})", "PrimPer({u}, w)"]);
        assert!(!p[1].flags.gauge_invariant && p[1].flags.maximal && !p[0].flags.maximal);
    }

    #[test]
    fn maximal_catalogs() {
        let f = fixtures::full_shift(2);
        assert_eq!(names(&f, &maximal_ideals(&f)), vec!["PrimAper({v})"]);
        let r = fixtures::reducible();
        assert_eq!(names(&r, &maximal_ideals(&r)), vec!["PrimPer({u}, w)"]);
        let c = fixtures::cycle(2);
        assert_eq!(names(&c, &maximal_ideals(&c)), vec!["PrimPer({v0,v1}, w)"]);
    }

    #[test]
    fn quotients() {
        let f = fixtures::full_shift(2);
        let q = simple_quotients(&f);
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].kind, QuotientKind::PurelyInfinite);
        let kinds: Vec<_> = q[0].certificates.iter().map(Certificate::kind).collect();
        assert_eq!(kinds, ["StrongTransitivity", "NonInjectivityWitness", "GrowthBound", "TraceVanishing"]);
        assert!(q[0].recheck(&f));

        let c = fixtures::cycle(3);
        let q = simple_quotients(&c);
        assert_eq!(q[0].kind, QuotientKind::MatrixAlgebra(3));
        let cyc: Vec<usize> = (0..3).collect();
        assert_eq!(oracle::finite_orbit_matrix_units(&cyc), 9);

        let r = fixtures::reducible();
        assert_eq!(simple_quotients(&r)[0].kind, QuotientKind::MatrixAlgebra(1));
    }

    #[test]
    fn verdicts() {
        let v = global_verdict(&fixtures::full_shift(2));
        assert!(v.simple && !v.injective && v.purely_infinite == Some(true));
        let v = global_verdict(&fixtures::cycle(4));
        assert!(!v.simple && v.injective && v.purely_infinite.is_none());
        let g = fixtures::golden_mean();
        let v = global_verdict(&g);
        assert!(v.simple && !v.injective && v.purely_infinite == Some(true));
        assert_eq!(
            v.witness,
            Some(Certificate::NonInjectivityWitness {
                vertex: "u".into(),
                in_degree: 2
            })
        );
        let mut p = fixtures::golden_mean_presentation();
        p.subshift = true;
        let v = global_verdict(&crate::graph::validate(&p).unwrap());
        assert_eq!(v.notes.len(), 2);
    }

    #[test]
    fn trace_sequences_match_exhaustive_products() {
        for (name, p) in fixtures::all() {
            let s = crate::graph::validate(&p).unwrap();
            let seq = trace_obstruction_sequence(&s, 8);
            for (i, v) in seq.iter().enumerate() {
                assert_eq!(*v, oracle::trace_product(&s, i + 1), "{name} n={}", i + 1);
            }
            assert!(is_nonincreasing(&seq) && is_submultiplicative(&seq), "{name}");
        }
        let f = fixtures::full_shift(2);
        let seq = trace_obstruction_sequence(&f, 10);
        assert!(seq.iter().enumerate().all(|(i, s)| *s == inverse_power_of_two(i + 1)));
        let g = trace_obstruction_sequence(&fixtures::golden_mean(), 4);
        assert!(g[0].is_one());
        assert_eq!(g[1], BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn growth_certificates() {
        match growth_certificate(&fixtures::full_shift(2)).unwrap() {
            Certificate::GrowthBound { m, counts, .. } => {
                assert_eq!(m, 1);
                assert!(counts.iter().enumerate().all(|(k, c)| *c == BigUint::from(2u32).pow(k)));
            }
            other => panic!("{other:?}"),
        }
        let g = fixtures::golden_mean();
        let cert = growth_certificate(&g).unwrap();
        assert!(matches!(cert, Certificate::GrowthBound { m: 2, .. }));
        assert!(cert.recheck(&g));
        assert!(matches!(
            growth_certificate(&fixtures::cycle(3)),
            Err(ShiftError::NotApplicable(_))
        ));
        assert!(matches!(
            growth_certificate(&fixtures::reducible()),
            Err(ShiftError::NotApplicable(_))
        ));
    }

    #[test]
    fn trace_certificates_reach_threshold() {
        for s in [fixtures::full_shift(2), fixtures::golden_mean(), fixtures::full_shift(3)] {
            let cert = trace_certificate(&s);
            assert!(matches!(cert, Certificate::TraceVanishing { threshold: Some(_), .. }));
            assert!(cert.recheck(&s));
        }
    }
}
