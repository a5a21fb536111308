//! Graph presentations and the validated edge shift they define.
//!
//! A point of the edge shift is a one-sided infinite edge path
//! `e1 e2 e3 ...` with `dst(e_i) = src(e_{i+1})`; the shift map drops the
//! first edge. Requiring every vertex to have an incoming and an outgoing
//! edge makes the shift a surjective local homeomorphism.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Result, ShiftError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub id: String,
    pub src: String,
    pub dst: String,
}

impl EdgeSpec {
    pub fn new(id: impl Into<String>, src: impl Into<String>, dst: impl Into<String>) -> Self {
        EdgeSpec {
            id: id.into(),
            src: src.into(),
            dst: dst.into(),
        }
    }
}

/// A finite directed multigraph as supplied by the user.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphPresentation {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
    /// Marks a presentation that arises from a one-sided subshift.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub subshift: bool,
}

impl GraphPresentation {
    pub fn new(vertices: Vec<String>, edges: Vec<EdgeSpec>) -> Self {
        GraphPresentation {
            vertices,
            edges,
            subshift: false,
        }
    }

    /// Convenience constructor from `(id, src, dst)` triples.
    pub fn from_triples(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Self {
        GraphPresentation::new(
            vertices.iter().map(|v| v.to_string()).collect(),
            edges
                .iter()
                .map(|(id, s, d)| EdgeSpec::new(*id, *s, *d))
                .collect(),
        )
    }

    /// Checks identifier uniqueness and that edges reference declared vertices.
    pub fn check_references(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(v.as_str()) {
                return Err(ShiftError::DuplicateVertex(v.clone()));
            }
        }
        let mut ids = BTreeSet::new();
        for e in &self.edges {
            if !ids.insert(e.id.as_str()) {
                return Err(ShiftError::DuplicateEdge(e.id.clone()));
            }
            for end in [&e.src, &e.dst] {
                if !seen.contains(end.as_str()) {
                    return Err(ShiftError::UnknownVertex(end.clone()));
                }
            }
        }
        Ok(())
    }
}

/// A validated essential graph together with its adjacency counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeShift {
    graph: GraphPresentation,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    src: Vec<usize>,
    dst: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
    adjacency: Vec<Vec<u32>>,
}

/// Validates a presentation: references must resolve and the graph must be
/// essential. Sinks are reported before sources.
pub fn validate(graph: &GraphPresentation) -> Result<EdgeShift> {
    graph.check_references()?;
    if graph.vertices.is_empty() || graph.edges.is_empty() {
        return Err(ShiftError::EmptyGraph);
    }
    let vertex_index: HashMap<String, usize> = graph
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let edge_index: HashMap<String, usize> = graph
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| (e.id.clone(), i))
        .collect();
    let n = graph.vertices.len();
    let src: Vec<usize> = graph.edges.iter().map(|e| vertex_index[&e.src]).collect();
    let dst: Vec<usize> = graph.edges.iter().map(|e| vertex_index[&e.dst]).collect();

    let mut out_edges = vec![Vec::new(); n];
    let mut in_edges = vec![Vec::new(); n];
    let mut adjacency = vec![vec![0u32; n]; n];
    for e in 0..src.len() {
        out_edges[src[e]].push(e);
        in_edges[dst[e]].push(e);
        adjacency[src[e]][dst[e]] += 1;
    }
    if let Some(v) = (0..n).find(|&v| out_edges[v].is_empty()) {
        return Err(ShiftError::SinkVertex(graph.vertices[v].clone()));
    }
    if let Some(v) = (0..n).find(|&v| in_edges[v].is_empty()) {
        return Err(ShiftError::SourceVertex(graph.vertices[v].clone()));
    }

    Ok(EdgeShift {
        graph: graph.clone(),
        vertex_index,
        edge_index,
        src,
        dst,
        out_edges,
        in_edges,
        adjacency,
    })
}

impl EdgeShift {
    pub fn presentation(&self) -> &GraphPresentation {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.src.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn src(&self, e: usize) -> usize {
        self.src[e]
    }

    pub fn dst(&self, e: usize) -> usize {
        self.dst[e]
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_edges[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_edges[v].len()
    }

    /// `A[u][v]` = number of edges `u -> v`.
    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.graph.vertices[v]
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.graph.edges[e].id
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| ShiftError::UnknownVertex(name.to_string()))
    }

    pub fn edge_index(&self, id: &str) -> Result<usize> {
        self.edge_index
            .get(id)
            .copied()
            .ok_or_else(|| ShiftError::UnknownEdge(id.to_string()))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(ShiftError::UnknownVertex(format!("#{v}")))
        }
    }

    /// Names of the vertices in `set`, in index order.
    pub fn names(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.vertex_name(v).to_string()).collect()
    }

    /// True iff every vertex has exactly one incoming edge, i.e. the shift
    /// map is injective.
    pub fn is_injective(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.in_degree(v) == 1)
    }

    /// Edges with both endpoints in `set`, in index order.
    pub fn induced_edges(&self, set: &VertexSet) -> Vec<usize> {
        (0..self.edge_count())
            .filter(|&e| set.contains(self.src[e]) && set.contains(self.dst[e]))
            .collect()
    }

    /// Presentation of the subgraph induced on `set`. Vertex names and edge
    /// ids are kept. The result is not validated.
    pub fn induced_presentation(&self, set: &VertexSet) -> GraphPresentation {
        let mut p = GraphPresentation::new(
            self.names(set),
            self.induced_edges(set)
                .into_iter()
                .map(|e| self.graph.edges[e].clone())
                .collect(),
        );
        p.subshift = self.graph.subshift;
        p
    }

    /// The edge shift of the subgraph induced on `set`, which must be
    /// essential on its own.
    pub fn restrict(&self, set: &VertexSet) -> Result<EdgeShift> {
        validate(&self.induced_presentation(set))
    }

    /// Maps a vertex set of a restriction back to indices of `self`.
    pub fn lift(&self, sub: &EdgeShift, set: &VertexSet) -> VertexSet {
        set.iter()
            .map(|v| self.vertex_index[sub.vertex_name(v)])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_two_shift_validates() {
        let g = GraphPresentation::from_triples(&["v"], &[("a", "v", "v"), ("b", "v", "v")]);
        let s = validate(&g).unwrap();
        assert_eq!(s.adjacency(), &[vec![2]]);
        assert!(!s.is_injective());
    }

    #[test]
    fn sink_reported() {
        let g = GraphPresentation::from_triples(&["u", "v"], &[("e", "u", "v")]);
        assert_eq!(validate(&g), Err(ShiftError::SinkVertex("v".into())));
    }

    #[test]
    fn source_reported() {
        let g = GraphPresentation::from_triples(
            &["u", "v"],
            &[("e", "u", "v"), ("f", "v", "v")],
        );
        assert_eq!(validate(&g), Err(ShiftError::SourceVertex("u".into())));
    }

    #[test]
    fn two_cycle_adjacency() {
        let g = GraphPresentation::from_triples(&["u", "v"], &[("e", "u", "v"), ("f", "v", "u")]);
        let s = validate(&g).unwrap();
        assert_eq!(s.adjacency(), &[vec![0, 1], vec![1, 0]]);
        assert!(s.is_injective());
    }

    #[test]
    fn reference_errors() {
        let g = GraphPresentation::from_triples(&["u"], &[("e", "u", "w")]);
        assert_eq!(validate(&g), Err(ShiftError::UnknownVertex("w".into())));
        let g = GraphPresentation::from_triples(&["u"], &[("e", "u", "u"), ("e", "u", "u")]);
        assert_eq!(validate(&g), Err(ShiftError::DuplicateEdge("e".into())));
        let g = GraphPresentation::from_triples(&["u", "u"], &[("e", "u", "u")]);
        assert_eq!(validate(&g), Err(ShiftError::DuplicateVertex("u".into())));
        let g = GraphPresentation::from_triples(&[], &[]);
        assert_eq!(validate(&g), Err(ShiftError::EmptyGraph));
    }

    #[test]
    fn restriction_keeps_names() {
        let g = GraphPresentation::from_triples(
            &["u", "v"],
            &[("a", "u", "u"), ("b", "u", "v"), ("c", "v", "v")],
        );
        let s = validate(&g).unwrap();
        let sub = s.restrict(&[0].into_iter().collect()).unwrap();
        assert_eq!(sub.vertex_count(), 1);
        assert_eq!(sub.edge_id(0), "a");
        assert!(s.restrict(&[1].into_iter().collect()).is_ok());
        let lifted = s.lift(&sub, &[0].into_iter().collect());
        assert!(lifted.contains(0));
    }
}
