//! Serializable analysis reports.
//!
//! Every section carries a `theorem` tag naming the result it instantiates.
//! Big integers are decimal strings and rationals are `{num, den}` pairs of
//! decimal strings, so the JSON is exact and round-trips.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::af;
use crate::catalog::{self, Certificate, IdealDescriptor, IdealVariant, QuotientKind};
use crate::crosscheck;
use crate::error::Result;
use crate::graph::{EdgeShift, GraphPresentation};
use crate::lattice::{self, PrimeKind};

pub mod tags {
    pub const VERDICT: &str = "simplicity: infinite space and strong transitivity; pure infiniteness: non-injectivity";
    pub const LATTICE: &str = "gauge-invariant ideals correspond to closed totally invariant sets";
    pub const PRIMES: &str = "primitive ideals correspond to prime invariant sets split into Per and Aper";
    pub const GAUGE: &str = "gauge-invariant ideal of functions vanishing on F";
    pub const PRIM_APER: &str = "kernel of the representation on an aperiodic prime set";
    pub const PRIM_PER: &str = "circle of primitive ideals generated by u_x - w p_x";
    pub const QUOTIENT: &str = "simple quotient trichotomy: matrix algebra, crossed product, purely infinite";
    pub const NON_INJECTIVE: &str = "a vertex with two or more incoming edges has a point with several preimages";
    pub const GROWTH: &str = "inf #preimages of order k is at least 2^floor(k/m)";
    pub const TRACE: &str = "sup of products of inverse m-values along orbits tends to zero";
    pub const TRANSITIVE: &str = "finitely many forward images of any open set cover the space";
    pub const AF: &str = "AF core as an inductive limit of homogeneous fiber algebras";
    pub const AF_IDEALS: &str = "ideals of the AF core correspond to closed saturated sets";
    pub const AF_PRIMES: &str = "primitive ideals of the AF core are closed saturations of points";
    pub const ORACLE: &str = "depth-bounded brute-force agreement";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for Rational {
    fn from(r: &BigRational) -> Self {
        Rational {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == "1" {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn big(n: &BigUint) -> String {
    n.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CertificateEntry {
    NonInjectivityWitness {
        theorem: String,
        vertex: String,
        in_degree: usize,
    },
    GrowthBound {
        theorem: String,
        m: usize,
        k_max: usize,
        statement: String,
        min_preimage_counts: Vec<String>,
    },
    TraceVanishing {
        theorem: String,
        sequence: Vec<Rational>,
        threshold: Option<usize>,
    },
    StrongTransitivity {
        theorem: String,
        vertices: Vec<String>,
    },
}

impl From<&Certificate> for CertificateEntry {
    fn from(c: &Certificate) -> Self {
        match c {
            Certificate::NonInjectivityWitness { vertex, in_degree } => CertificateEntry::NonInjectivityWitness {
                theorem: tags::NON_INJECTIVE.into(),
                vertex: vertex.clone(),
                in_degree: *in_degree,
            },
            Certificate::GrowthBound { m, k_max, counts } => CertificateEntry::GrowthBound {
                theorem: tags::GROWTH.into(),
                m: *m,
                k_max: *k_max,
                statement: format!("min #preimages of order k >= 2^floor(k/{m}) for k <= {k_max}"),
                min_preimage_counts: counts.iter().map(big).collect(),
            },
            Certificate::TraceVanishing { sequence, threshold } => CertificateEntry::TraceVanishing {
                theorem: tags::TRACE.into(),
                sequence: sequence.iter().map(Rational::from).collect(),
                threshold: *threshold,
            },
            Certificate::StrongTransitivity { vertices } => CertificateEntry::StrongTransitivity {
                theorem: tags::TRANSITIVE.into(),
                vertices: vertices.clone(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSection {
    pub theorem: String,
    pub simple: bool,
    pub injective: bool,
    /// `null` when the algebra is not simple.
    pub purely_infinite: Option<bool>,
    pub strongly_transitive: bool,
    pub infinite: bool,
    pub witness: Option<CertificateEntry>,
    pub notes: Vec<String>,
}

pub fn verdict_section(shift: &EdgeShift) -> VerdictSection {
    let v = catalog::global_verdict(shift);
    VerdictSection {
        theorem: tags::VERDICT.into(),
        simple: v.simple,
        injective: v.injective,
        purely_infinite: v.purely_infinite,
        strongly_transitive: v.strongly_transitive,
        infinite: v.infinite,
        witness: v.witness.as_ref().map(CertificateEntry::from),
        notes: v.notes,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeEntry {
    pub vertices: Vec<String>,
    pub kind: String,
    /// A point with dense total orbit, written `prefix (cycle)^inf`.
    pub witness: String,
    pub generator: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSection {
    pub theorem: String,
    /// Trimmed vertex sets, ordered by size then lexicographically.
    pub sets: Vec<Vec<String>>,
    /// Covering pairs `[i, j]` with `sets[i] ⊊ sets[j]`.
    pub order: Vec<[usize; 2]>,
    pub primes_theorem: String,
    pub primes: Vec<PrimeEntry>,
    pub minimal: Vec<Vec<String>>,
}

pub fn lattice_section(shift: &EdgeShift) -> LatticeSection {
    let lat = lattice::enumerate_invariant_sets(shift);
    LatticeSection {
        theorem: tags::LATTICE.into(),
        sets: lat.sets().iter().map(|s| shift.names(s.vertices())).collect(),
        order: lat.covers().into_iter().map(|(i, j)| [i, j]).collect(),
        primes_theorem: tags::PRIMES.into(),
        primes: lattice::primes(shift, &lat)
            .iter()
            .map(|p| PrimeEntry {
                vertices: shift.names(p.set.vertices()),
                kind: match p.kind {
                    PrimeKind::Per => "Per".into(),
                    PrimeKind::Aper => "Aper".into(),
                },
                witness: p.witness.describe(shift),
                generator: shift.names(&p.generator),
            })
            .collect(),
        minimal: lattice::minimal_sets(&lat)
            .iter()
            .map(|s| shift.names(s.vertices()))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub theorem: String,
    pub name: String,
    pub variant: String,
    pub set: Vec<String>,
    pub parameter: Option<String>,
    pub rho: Vec<String>,
    pub primitive: bool,
    pub maximal: bool,
    pub gauge_invariant: bool,
}

pub fn ideal_entries(shift: &EdgeShift, ideals: &[IdealDescriptor]) -> Vec<IdealEntry> {
    ideals
        .iter()
        .map(|d| {
            let (theorem, variant, set, parameter) = match &d.variant {
                IdealVariant::GaugeInvariant(f) => (tags::GAUGE, "GaugeInvariant", f, None),
                IdealVariant::PrimAper(a) => (tags::PRIM_APER, "PrimAper", a, None),
                IdealVariant::PrimPer(a, w) => (tags::PRIM_PER, "PrimPer", a, Some(w.to_string())),
            };
            IdealEntry {
                theorem: theorem.into(),
                name: d.name(shift),
                variant: variant.into(),
                set: shift.names(set.vertices()),
                parameter,
                rho: shift.names(d.rho.vertices()),
                primitive: d.flags.primitive,
                maximal: d.flags.maximal,
                gauge_invariant: d.flags.gauge_invariant,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientEntry {
    pub theorem: String,
    pub maximal_ideal: String,
    pub kind: String,
    /// Matrix size for `MatrixAlgebra`.
    pub size: Option<usize>,
    /// Certificates refer to the system restricted to `rho` of the ideal.
    pub certificates: Vec<CertificateEntry>,
    pub rechecked: bool,
}

pub fn quotient_entries(shift: &EdgeShift) -> Vec<QuotientEntry> {
    catalog::simple_quotients(shift)
        .iter()
        .map(|q| {
            let (kind, size) = match q.kind {
                QuotientKind::MatrixAlgebra(n) => ("MatrixAlgebra", Some(n)),
                QuotientKind::CrossedProductHomeo => ("CrossedProductHomeo", None),
                QuotientKind::PurelyInfinite => ("PurelyInfinite", None),
            };
            QuotientEntry {
                theorem: tags::QUOTIENT.into(),
                maximal_ideal: q.maximal_ideal.name(shift),
                kind: kind.into(),
                size,
                certificates: q.certificates.iter().map(CertificateEntry::from).collect(),
                rechecked: q.recheck(shift),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AfPrimeEntry {
    pub vertices: Vec<String>,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AfSection {
    pub theorem: String,
    pub vertices: Vec<String>,
    /// `ranks[n][v]`, levels `0..=levels`.
    pub ranks: Vec<Vec<String>>,
    pub multiplicities: Vec<Vec<u32>>,
    pub rank_recursion: bool,
    pub min_rank_growth: Vec<String>,
    pub ideals_theorem: String,
    pub depth: usize,
    /// Level-0 vertex sets of the ideals at `depth`.
    pub ideals: Vec<Vec<String>>,
    pub stabilization_depth: usize,
    pub stable_count: usize,
    pub primes_theorem: String,
    pub primes: Vec<AfPrimeEntry>,
}

pub fn af_section(shift: &EdgeShift, levels: usize, depth: usize) -> AfSection {
    let diagram = af::bratteli(shift, levels);
    let lat = af::af_ideal_lattice(shift, depth);
    AfSection {
        theorem: tags::AF.into(),
        vertices: shift.names(&shift.vertices()),
        ranks: diagram
            .levels
            .iter()
            .map(|l| l.ranks.iter().map(big).collect())
            .collect(),
        multiplicities: diagram.multiplicities.clone(),
        rank_recursion: diagram.rank_recursion_holds(),
        min_rank_growth: af::min_rank_growth(shift, levels).iter().map(big).collect(),
        ideals_theorem: tags::AF_IDEALS.into(),
        depth,
        ideals: lat.ideals.iter().map(|i| shift.names(&i.vertices)).collect(),
        stabilization_depth: lat.stabilization_depth,
        stable_count: lat.stable_count,
        primes_theorem: tags::AF_PRIMES.into(),
        primes: af::af_primes(shift, depth)
            .iter()
            .map(|p| AfPrimeEntry {
                vertices: shift.names(&p.ideal.vertices),
                witness: p.witness.as_ref().map(|x| x.describe(shift)),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheckEntry {
    pub name: String,
    pub agree: bool,
    pub cases: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSection {
    pub theorem: String,
    pub depth: usize,
    pub agree: bool,
    pub checks: Vec<OracleCheckEntry>,
}

pub fn oracle_section(shift: &EdgeShift, depth: usize) -> OracleSection {
    let run = crosscheck::run(shift, depth);
    OracleSection {
        theorem: tags::ORACLE.into(),
        depth,
        agree: run.agrees(),
        checks: run
            .checks
            .iter()
            .map(|c| OracleCheckEntry {
                name: c.name.into(),
                agree: c.agree,
                cases: c.cases,
                detail: c.detail.clone(),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: GraphPresentation,
    pub verdict: VerdictSection,
    pub lattice: LatticeSection,
    pub gauge_invariant_ideals: Vec<IdealEntry>,
    pub primitive_ideals: Vec<IdealEntry>,
    pub maximal_ideals: Vec<IdealEntry>,
    pub quotients: Vec<QuotientEntry>,
    pub af_core: AfSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub af_levels: usize,
    /// `None` means `|V| + 2`.
    pub af_depth: Option<usize>,
    pub oracle_depth: Option<usize>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            af_levels: 10,
            af_depth: None,
            oracle_depth: None,
        }
    }
}

pub fn analyze(shift: &EdgeShift, opts: &ReportOptions) -> AnalysisReport {
    AnalysisReport {
        input: shift.presentation().clone(),
        verdict: verdict_section(shift),
        lattice: lattice_section(shift),
        gauge_invariant_ideals: ideal_entries(shift, &catalog::gauge_invariant_ideals(shift)),
        primitive_ideals: ideal_entries(shift, &catalog::primitive_ideals(shift)),
        maximal_ideals: ideal_entries(shift, &catalog::maximal_ideals(shift)),
        quotients: quotient_entries(shift),
        af_core: af_section(
            shift,
            opts.af_levels,
            opts.af_depth.unwrap_or_else(|| af::default_depth(shift)),
        ),
        oracle: opts.oracle_depth.map(|d| oracle_section(shift, d)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationSummary {
    pub valid: bool,
    pub vertices: usize,
    pub edges: usize,
    pub injective: bool,
    pub subshift: bool,
}

pub fn validation_summary(shift: &EdgeShift) -> ValidationSummary {
    ValidationSummary {
        valid: true,
        vertices: shift.vertex_count(),
        edges: shift.edge_count(),
        injective: shift.is_injective(),
        subshift: shift.presentation().subshift,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifySection {
    pub theorem: String,
    pub certificates: Vec<CertificateEntry>,
    pub rechecked: bool,
}

/// Certificates of pure infiniteness for the whole system.
pub fn certify_section(shift: &EdgeShift) -> Result<CertifySection> {
    let certs = catalog::purely_infinite_certificates(shift)?;
    Ok(CertifySection {
        theorem: tags::VERDICT.into(),
        rechecked: certs.iter().all(|c| c.recheck(shift)),
        certificates: certs.iter().map(CertificateEntry::from).collect(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verdict_text(v: &VerdictSection, out: &mut String) {
    let pi = match v.purely_infinite {
        Some(b) => yes(b),
        None => "n/a",
    };
    let _ = writeln!(out, "simple: {}", yes(v.simple));
    let _ = writeln!(out, "injective: {}", yes(v.injective));
    let _ = writeln!(out, "purely infinite: {pi}");
    let _ = writeln!(out, "strongly transitive: {}", yes(v.strongly_transitive));
    let _ = writeln!(out, "infinite space: {}", yes(v.infinite));
    if let Some(w) = &v.witness {
        certificate_text(w, out);
    }
    for n in &v.notes {
        let _ = writeln!(out, "note: {n}");
    }
}

pub fn lattice_text(l: &LatticeSection, out: &mut String) {
    let _ = writeln!(out, "invariant sets ({}):", l.sets.len());
    for (i, s) in l.sets.iter().enumerate() {
        let _ = writeln!(out, "  [{i}] {}", braces(s));
    }
    let order: Vec<String> = l.order.iter().map(|[i, j]| format!("{i}<{j}")).collect();
    let _ = writeln!(out, "covers: {}", order.join(" "));
    let _ = writeln!(out, "primes:");
    for p in &l.primes {
        let _ = writeln!(out, "  {} {}  witness {}", p.kind, braces(&p.vertices), p.witness);
    }
    let minimal: Vec<String> = l.minimal.iter().map(|m| braces(m)).collect();
    let _ = writeln!(out, "minimal: {}", minimal.join(" "));
}

pub fn ideals_text(title: &str, ideals: &[IdealEntry], out: &mut String) {
    let _ = writeln!(out, "{title} ({}):", ideals.len());
    for i in ideals {
        let mut flags = Vec::new();
        if i.primitive {
            flags.push("primitive");
        }
        if i.maximal {
            flags.push("maximal");
        }
        if i.gauge_invariant {
            flags.push("gauge-invariant");
        }
        let _ = writeln!(out, "  {}  rho={}  [{}]", i.name, braces(&i.rho), flags.join(", "));
    }
}

pub fn certificate_text(c: &CertificateEntry, out: &mut String) {
    let _ = match c {
        CertificateEntry::NonInjectivityWitness { vertex, in_degree, .. } => {
            writeln!(out, "    non-injectivity: vertex {vertex} has in-degree {in_degree}")
        }
        CertificateEntry::GrowthBound { statement, .. } => writeln!(out, "    growth: {statement}"),
        CertificateEntry::TraceVanishing { sequence, threshold, .. } => {
            let shown: Vec<String> = sequence.iter().take(6).map(|r| r.to_string()).collect();
            let tail = if sequence.len() > 6 { ", ..." } else { "" };
            let at = threshold.map_or("not reached".to_string(), |t| format!("below 2^-10 at n = {t}"));
            writeln!(out, "    trace: {}{tail}; {at}", shown.join(", "))
        }
        CertificateEntry::StrongTransitivity { vertices, .. } => {
            writeln!(out, "    strongly transitive on {}", braces(vertices))
        }
    };
}

pub fn quotients_text(qs: &[QuotientEntry], out: &mut String) {
    let _ = writeln!(out, "simple quotients ({}):", qs.len());
    for q in qs {
        let kind = match q.size {
            Some(n) => format!("{}({n})", q.kind),
            None => q.kind.clone(),
        };
        let _ = writeln!(out, "  {} -> {kind}", q.maximal_ideal);
        for c in &q.certificates {
            certificate_text(c, out);
        }
    }
}

pub fn af_text(a: &AfSection, out: &mut String) {
    let _ = writeln!(out, "AF core over {}:", braces(&a.vertices));
    for (n, r) in a.ranks.iter().enumerate() {
        let _ = writeln!(out, "  level {n}: ranks {}", r.join(" "));
    }
    let _ = writeln!(out, "  rank recursion: {}", if a.rank_recursion { "holds" } else { "FAILS" });
    let _ = writeln!(out, "  min rank growth: {}", a.min_rank_growth.join(" "));
    let ideals: Vec<String> = a.ideals.iter().map(|i| braces(i)).collect();
    let _ = writeln!(out, "  ideals at depth {} ({}): {}", a.depth, a.ideals.len(), ideals.join(" "));
    let _ = writeln!(
        out,
        "  stable from depth {} with {} ideals",
        a.stabilization_depth, a.stable_count
    );
    for p in &a.primes {
        let w = p.witness.as_deref().unwrap_or("none found");
        let _ = writeln!(out, "  prime {}  witness {w}", braces(&p.vertices));
    }
}

pub fn oracle_text(o: &OracleSection, out: &mut String) {
    let _ = writeln!(out, "oracle at depth {}: {}", o.depth, if o.agree { "agrees" } else { "DISAGREES" });
    for c in &o.checks {
        let status = if c.agree { "ok" } else { "MISMATCH" };
        let _ = write!(out, "  {:<20} {status} ({} cases)", c.name, c.cases);
        if !c.detail.is_empty() {
            let _ = write!(out, ": {}", c.detail);
        }
        out.push('\n');
    }
}

pub fn validation_text(v: &ValidationSummary, out: &mut String) {
    let _ = writeln!(
        out,
        "ok: {} vertices, {} edges, {}",
        v.vertices,
        v.edges,
        if v.injective { "injective" } else { "not injective" }
    );
}

pub fn certify_text(c: &CertifySection, out: &mut String) {
    let _ = writeln!(out, "certificates ({}):", if c.rechecked { "rechecked" } else { "RECHECK FAILED" });
    for cert in &c.certificates {
        certificate_text(cert, out);
    }
}

pub fn to_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph: {} vertices, {} edges",
        r.input.vertices.len(),
        r.input.edges.len()
    );
    verdict_text(&r.verdict, &mut out);
    lattice_text(&r.lattice, &mut out);
    ideals_text("gauge-invariant ideals", &r.gauge_invariant_ideals, &mut out);
    ideals_text("primitive ideals", &r.primitive_ideals, &mut out);
    ideals_text("maximal ideals", &r.maximal_ideals, &mut out);
    quotients_text(&r.quotients, &mut out);
    af_text(&r.af_core, &mut out);
    if let Some(o) = &r.oracle {
        oracle_text(o, &mut out);
    }
    out
}
