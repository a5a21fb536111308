//! Graphviz output.
//!
//! Lattice graphs are named `lattice`: node `s<i>` is the `i`-th invariant
//! set in lattice order and an edge `s<i> -> s<j>` is a covering relation,
//! drawn bottom to top.
//!
//! Bratteli graphs are named `bratteli`: one `subgraph level_<n>` with
//! `rank=same` per level, node `l<n>_<v>` labelled with the vertex name and
//! its rank, and one edge per adjacency pair labelled with its multiplicity
//! when that exceeds 1.
//!
//! Output depends only on the input, never on hashing or timing.

use std::fmt::Write as _;

use crate::af::BratteliDiagram;
use crate::graph::EdgeShift;
use crate::lattice::InvariantLattice;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub fn lattice_dot(shift: &EdgeShift, lattice: &InvariantLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, s) in lattice.sets().iter().enumerate() {
        let label = if s.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", shift.names(s.vertices()).join(","))
        };
        let _ = writeln!(out, "  s{i} [label={}];", quote(&label));
    }
    for (i, j) in lattice.covers() {
        let _ = writeln!(out, "  s{i} -> s{j};");
    }
    out.push_str("}\n");
    out
}

pub fn bratteli_dot(shift: &EdgeShift, diagram: &BratteliDiagram) -> String {
    let mut out = String::from("digraph bratteli {\n  rankdir=TB;\n  node [shape=circle];\n");
    let n = shift.vertex_count();
    for level in &diagram.levels {
        let _ = writeln!(out, "  subgraph level_{} {{\n    rank=same;", level.level);
        for v in 0..n {
            let label = format!("{}\n{}", shift.vertex_name(v), level.ranks[v]);
            let _ = writeln!(out, "    l{}_{v} [label={}];", level.level, quote(&label));
        }
        out.push_str("  }\n");
    }
    for w in diagram.levels.windows(2) {
        for u in 0..n {
            for v in 0..n {
                let m = diagram.multiplicities[u][v];
                if m == 0 {
                    continue;
                }
                let _ = write!(out, "  l{}_{u} -> l{}_{v}", w[0].level, w[1].level);
                if m > 1 {
                    let _ = write!(out, " [label=\"{m}\"]");
                }
                out.push_str(";\n");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af;
    use crate::fixtures;
    use crate::lattice::enumerate_invariant_sets;

    #[test]
    fn reducible_lattice_has_three_nodes_two_edges() {
        let s = fixtures::reducible();
        let dot = lattice_dot(&s, &enumerate_invariant_sets(&s));
        assert_eq!(dot.matches("[label=").count(), 3);
        assert_eq!(dot.matches(" -> ").count(), 2);
        assert!(dot.contains("s0 [label=\"∅\"]"));
        assert!(dot.contains("s2 [label=\"{u,v}\"]"));
    }

    #[test]
    fn bratteli_multiplicities() {
        let s = fixtures::full_shift(2);
        let dot = bratteli_dot(&s, &af::bratteli(&s, 2));
        assert!(dot.contains("l0_0 -> l1_0 [label=\"2\"];"));
        assert!(dot.contains("label=\"v\\n4\""));
        let g = fixtures::golden_mean();
        let dot = bratteli_dot(&g, &af::bratteli(&g, 1));
        assert_eq!(dot.matches(" -> ").count(), 3);
    }

    #[test]
    fn quoting() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
