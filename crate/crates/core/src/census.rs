//! Exhaustive enumeration of small essential multigraphs up to isomorphism.

use std::collections::BTreeSet;

use crate::graph::{EdgeSpec, GraphPresentation};

type Matrix = Vec<Vec<u32>>;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(m: &Matrix, perms: &[Vec<usize>]) -> Matrix {
    perms
        .iter()
        .map(|p| {
            (0..m.len())
                .map(|i| (0..m.len()).map(|j| m[p[i]][p[j]]).collect())
                .collect::<Matrix>()
        })
        .min()
        .expect("at least one permutation")
}

fn fill(n: usize, cell: usize, budget: u32, m: &mut Matrix, out: &mut Vec<Matrix>) {
    if cell == n * n {
        out.push(m.clone());
        return;
    }
    for c in 0..=budget {
        m[cell / n][cell % n] = c;
        fill(n, cell + 1, budget - c, m, out);
    }
    m[cell / n][cell % n] = 0;
}

fn essential(m: &Matrix) -> bool {
    let n = m.len();
    (0..n).all(|v| (0..n).any(|u| m[u][v] > 0) && (0..n).any(|w| m[v][w] > 0))
}

/// Adjacency matrices of all essential multigraphs with `1..=max_vertices`
/// vertices and `1..=max_edges` edges, one per isomorphism class, sorted.
pub fn small_adjacencies(max_vertices: usize, max_edges: u32) -> Vec<Matrix> {
    let mut classes = BTreeSet::new();
    for n in 1..=max_vertices {
        let perms = permutations(n);
        let mut all = Vec::new();
        fill(n, 0, max_edges, &mut vec![vec![0; n]; n], &mut all);
        for m in all.into_iter().filter(essential) {
            classes.insert((n, canonical(&m, &perms)));
        }
    }
    classes.into_iter().map(|(_, m)| m).collect()
}

/// Presentation with vertices `v0..` and edges `e0..` listed row by row.
pub fn presentation_of(m: &Matrix) -> GraphPresentation {
    let n = m.len();
    let vertices = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for (u, row) in m.iter().enumerate() {
        for (v, &count) in row.iter().enumerate() {
            for _ in 0..count {
                edges.push(EdgeSpec::new(format!("e{}", edges.len()), format!("v{u}"), format!("v{v}")));
            }
        }
    }
    GraphPresentation::new(vertices, edges)
}

/// The acceptance census: essential graphs with at most 3 vertices and 5 edges.
pub fn small_graphs(max_vertices: usize, max_edges: u32) -> Vec<GraphPresentation> {
    small_adjacencies(max_vertices, max_edges)
        .iter()
        .map(presentation_of)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate;

    #[test]
    fn one_vertex_classes() {
        // A single vertex with 1..=3 loops.
        assert_eq!(small_adjacencies(1, 3).len(), 3);
    }

    #[test]
    fn two_vertices_two_edges() {
        // With two edges: one or two loops on one vertex, the 2-cycle, and two disjoint loops.
        let graphs = small_adjacencies(2, 2);
        assert_eq!(graphs.len(), 4);
    }

    #[test]
    fn census_graphs_validate() {
        for p in small_graphs(3, 5) {
            validate(&p).unwrap();
        }
    }
}
