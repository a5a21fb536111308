//! Reachability and strongly connected components on an edge shift's graph.

use crate::graph::EdgeShift;
use crate::vertex_set::VertexSet;

/// One-step successors of `set`.
pub fn post(shift: &EdgeShift, set: &VertexSet) -> VertexSet {
    set.iter()
        .flat_map(|v| shift.out_edges(v).iter().map(|&e| shift.dst(e)))
        .collect()
}

/// One-step predecessors of `set`.
pub fn pre(shift: &EdgeShift, set: &VertexSet) -> VertexSet {
    set.iter()
        .flat_map(|v| shift.in_edges(v).iter().map(|&e| shift.src(e)))
        .collect()
}

fn closure(shift: &EdgeShift, start: &VertexSet, within: Option<&VertexSet>, forward: bool) -> VertexSet {
    let allowed = |v: usize| within.is_none_or(|w| w.contains(v));
    let mut seen: VertexSet = start.iter().filter(|&v| allowed(v)).collect();
    let mut stack: Vec<usize> = seen.iter().collect();
    while let Some(v) = stack.pop() {
        let next: Vec<usize> = if forward {
            shift.out_edges(v).iter().map(|&e| shift.dst(e)).collect()
        } else {
            shift.in_edges(v).iter().map(|&e| shift.src(e)).collect()
        };
        for w in next {
            if allowed(w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}

/// Vertices reachable from `start` (including `start`), optionally staying
/// inside `within`.
pub fn descendants(shift: &EdgeShift, start: &VertexSet, within: Option<&VertexSet>) -> VertexSet {
    closure(shift, start, within, true)
}

/// Vertices that reach `start` (including `start`).
pub fn ancestors(shift: &EdgeShift, start: &VertexSet, within: Option<&VertexSet>) -> VertexSet {
    closure(shift, start, within, false)
}

/// Strongly connected components of the subgraph induced on `within`
/// (the whole graph if `None`), sorted by their vertex sets.
pub fn sccs(shift: &EdgeShift, within: Option<&VertexSet>) -> Vec<VertexSet> {
    let all = within.cloned().unwrap_or_else(|| shift.vertices());
    let mut remaining = all.clone();
    let mut comps = Vec::new();
    while let Some(v) = remaining.first() {
        let single: VertexSet = [v].into_iter().collect();
        let fwd = descendants(shift, &single, Some(&remaining));
        let bwd = ancestors(shift, &single, Some(&remaining));
        let comp = fwd.intersection(&bwd);
        remaining = remaining.difference(&comp);
        comps.push(comp);
    }
    comps.sort();
    comps
}

/// Number of edges with both ends in `set`.
pub fn internal_edge_count(shift: &EdgeShift, set: &VertexSet) -> usize {
    shift.induced_edges(set).len()
}

/// A component carries a cycle iff it has an internal edge.
pub fn is_cyclic(shift: &EdgeShift, comp: &VertexSet) -> bool {
    internal_edge_count(shift, comp) > 0
}

/// True iff the induced subgraph on `comp` is exactly one simple cycle:
/// every vertex has one outgoing edge inside `comp` and the component is
/// strongly connected.
pub fn is_simple_cycle(shift: &EdgeShift, comp: &VertexSet) -> bool {
    if comp.is_empty() {
        return false;
    }
    let one_out = comp.iter().all(|v| {
        shift
            .out_edges(v)
            .iter()
            .filter(|&&e| comp.contains(shift.dst(e)))
            .count()
            == 1
    });
    let first: VertexSet = comp.iter().take(1).collect();
    one_out && descendants(shift, &first, Some(comp)) == *comp
}

/// Edges of a simple-cycle component, listed in traversal order starting
/// from its least vertex.
pub fn cycle_edges(shift: &EdgeShift, comp: &VertexSet) -> Vec<usize> {
    debug_assert!(is_simple_cycle(shift, comp));
    let start = comp.iter().next().expect("nonempty component");
    let mut edges = Vec::with_capacity(comp.len());
    let mut v = start;
    loop {
        let e = *shift
            .out_edges(v)
            .iter()
            .find(|&&e| comp.contains(shift.dst(e)))
            .expect("simple cycle vertex has an internal edge");
        edges.push(e);
        v = shift.dst(e);
        if v == start {
            return edges;
        }
    }
}

/// True iff every vertex of the graph reaches every other.
pub fn is_strongly_connected(shift: &EdgeShift) -> bool {
    let first: VertexSet = [0].into_iter().collect();
    let all = shift.vertices();
    descendants(shift, &first, None) == all && ancestors(shift, &first, None) == all
}

/// All paths with `len` edges starting at `v`, in lexicographic edge order.
pub fn paths_from(shift: &EdgeShift, v: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for &e in shift.out_edges(v) {
        for mut rest in paths_from(shift, shift.dst(e), len - 1) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Closed paths with at most `max_len` edges that are not powers of a
/// shorter path; every rotation is listed. Ordered by length, then start.
pub fn primitive_closed_walks(shift: &EdgeShift, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for v in 0..shift.vertex_count() {
            for p in paths_from(shift, v, len) {
                let closed = shift.dst(p[len - 1]) == v;
                if closed && crate::word::primitive_root(&p).len() == len {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn reducible_components() {
        let s = fixtures::reducible();
        let comps = sccs(&s, None);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| is_cyclic(&s, c)));
        assert!(is_simple_cycle(&s, &[0].into_iter().collect()));
        assert!(!is_simple_cycle(&s, &[1].into_iter().collect()));
        assert!(!is_strongly_connected(&s));
    }

    #[test]
    fn cycle_traversal() {
        let s = fixtures::cycle(3);
        let all = s.vertices();
        assert!(is_simple_cycle(&s, &all));
        assert_eq!(cycle_edges(&s, &all), vec![0, 1, 2]);
        assert!(is_strongly_connected(&s));
    }

    #[test]
    fn closed_walks() {
        // Full 2-shift: a, b, ab, ba.
        assert_eq!(primitive_closed_walks(&fixtures::full_shift(2), 2).len(), 4);
        assert_eq!(primitive_closed_walks(&fixtures::cycle(3), 3).len(), 3);
        assert_eq!(paths_from(&fixtures::golden_mean(), 0, 3).len(), 5);
    }

    #[test]
    fn ancestors_of_cycle() {
        let s = fixtures::entering_edge();
        let c: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(ancestors(&s, &c, None), s.vertices());
        assert_eq!(descendants(&s, &c, None), c);
    }
}
