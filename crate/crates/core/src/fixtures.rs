//! Named example graphs used by tests, the acceptance suite and the CLI's
//! `--seed-fixtures` flag.

use crate::graph::{validate, EdgeShift, GraphPresentation};

fn build(p: GraphPresentation) -> EdgeShift {
    validate(&p).expect("fixture graphs are essential")
}

/// One vertex `v` with `k` loops named `a`, `b`, `c`, ...
pub fn full_shift_presentation(k: usize) -> GraphPresentation {
    assert!((1..=26).contains(&k));
    let edges: Vec<(String, String, String)> = (0..k)
        .map(|i| (((b'a' + i as u8) as char).to_string(), "v".into(), "v".into()))
        .collect();
    let refs: Vec<(&str, &str, &str)> = edges
        .iter()
        .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
        .collect();
    GraphPresentation::from_triples(&["v"], &refs)
}

pub fn full_shift(k: usize) -> EdgeShift {
    build(full_shift_presentation(k))
}

/// Vertices `v0 .. v{n-1}`, edges `e{i}: v{i} -> v{i+1 mod n}`.
pub fn cycle_presentation(n: usize) -> GraphPresentation {
    assert!(n >= 1);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges = (0..n)
        .map(|i| crate::graph::EdgeSpec::new(format!("e{i}"), format!("v{i}"), format!("v{}", (i + 1) % n)))
        .collect();
    GraphPresentation::new(vertices, edges)
}

pub fn cycle(n: usize) -> EdgeShift {
    build(cycle_presentation(n))
}

/// `uu: u -> u`, `uv: u -> v`, `vu: v -> u`.
pub fn golden_mean_presentation() -> GraphPresentation {
    GraphPresentation::from_triples(
        &["u", "v"],
        &[("uu", "u", "u"), ("uv", "u", "v"), ("vu", "v", "u")],
    )
}

pub fn golden_mean() -> EdgeShift {
    build(golden_mean_presentation())
}

/// A loop at `u`, an edge `u -> v`, two loops at `v`. Three invariant sets.
pub fn reducible_presentation() -> GraphPresentation {
    GraphPresentation::from_triples(
        &["u", "v"],
        &[("uu", "u", "u"), ("uv", "u", "v"), ("va", "v", "v"), ("vb", "v", "v")],
    )
}

pub fn reducible() -> EdgeShift {
    build(reducible_presentation())
}

/// The 2-cycle `u <-> v` entered from a looped vertex `w`; no exit.
pub fn entering_edge_presentation() -> GraphPresentation {
    GraphPresentation::from_triples(
        &["w", "u", "v"],
        &[("ww", "w", "w"), ("wu", "w", "u"), ("uv", "u", "v"), ("vu", "v", "u")],
    )
}

pub fn entering_edge() -> EdgeShift {
    build(entering_edge_presentation())
}

/// Two unconnected components: a loop at `p`, a 2-cycle `q <-> r`.
pub fn disjoint_cycles_presentation() -> GraphPresentation {
    GraphPresentation::from_triples(
        &["p", "q", "r"],
        &[("pp", "p", "p"), ("qr", "q", "r"), ("rq", "r", "q")],
    )
}

pub fn disjoint_cycles() -> EdgeShift {
    build(disjoint_cycles_presentation())
}

/// Loops at `p` and `q` joined by `pq: p -> q`.
pub fn bridged_cycles_presentation() -> GraphPresentation {
    GraphPresentation::from_triples(
        &["p", "q"],
        &[("pp", "p", "p"), ("pq", "p", "q"), ("qq", "q", "q")],
    )
}

pub fn bridged_cycles() -> EdgeShift {
    build(bridged_cycles_presentation())
}

/// Every named fixture, in a fixed order.
pub fn all() -> Vec<(&'static str, GraphPresentation)> {
    vec![
        ("full-2-shift", full_shift_presentation(2)),
        ("full-3-shift", full_shift_presentation(3)),
        ("cycle-1", cycle_presentation(1)),
        ("cycle-2", cycle_presentation(2)),
        ("cycle-3", cycle_presentation(3)),
        ("cycle-5", cycle_presentation(5)),
        ("golden-mean", golden_mean_presentation()),
        ("reducible", reducible_presentation()),
        ("entering-edge", entering_edge_presentation()),
        ("disjoint-cycles", disjoint_cycles_presentation()),
        ("bridged-cycles", bridged_cycles_presentation()),
    ]
}

pub fn by_name(name: &str) -> Option<GraphPresentation> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, p)| p)
}
