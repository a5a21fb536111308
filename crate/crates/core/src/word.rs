//! Finite words (cylinders) and eventually periodic points.

use crate::error::{Result, ShiftError};
use crate::graph::EdgeShift;
use crate::vertex_set::VertexSet;

/// A legal finite edge path. The empty word stands for the whole space.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CylinderWord(Vec<usize>);

impl CylinderWord {
    pub fn new(shift: &EdgeShift, edges: Vec<usize>) -> Result<Self> {
        if let Some(&e) = edges.iter().find(|&&e| e >= shift.edge_count()) {
            return Err(ShiftError::UnknownEdge(format!("#{e}")));
        }
        for pair in edges.windows(2) {
            if shift.dst(pair[0]) != shift.src(pair[1]) {
                return Err(ShiftError::IllegalWord(format!(
                    "`{}` does not end where `{}` starts",
                    shift.edge_id(pair[0]),
                    shift.edge_id(pair[1])
                )));
            }
        }
        Ok(CylinderWord(edges))
    }

    pub fn from_ids(shift: &EdgeShift, ids: &[&str]) -> Result<Self> {
        let edges = ids
            .iter()
            .map(|id| shift.edge_index(id))
            .collect::<Result<Vec<_>>>()?;
        CylinderWord::new(shift, edges)
    }

    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first_vertex(&self, shift: &EdgeShift) -> Option<usize> {
        self.0.first().map(|&e| shift.src(e))
    }

    pub fn last_vertex(&self, shift: &EdgeShift) -> Option<usize> {
        self.0.last().map(|&e| shift.dst(e))
    }

    /// Nonempty and returns to its starting vertex.
    pub fn is_closed(&self, shift: &EdgeShift) -> bool {
        !self.0.is_empty() && self.first_vertex(shift) == self.last_vertex(shift)
    }

    pub fn vertex_set(&self, shift: &EdgeShift) -> VertexSet {
        self.0
            .iter()
            .flat_map(|&e| [shift.src(e), shift.dst(e)])
            .collect()
    }

    pub fn ids(&self, shift: &EdgeShift) -> Vec<String> {
        self.0.iter().map(|&e| shift.edge_id(e).to_string()).collect()
    }
}

/// A point `prefix · cycle · cycle · ...`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EventuallyPeriodicPoint {
    prefix: Vec<usize>,
    cycle: Vec<usize>,
}

impl EventuallyPeriodicPoint {
    pub fn new(shift: &EdgeShift, prefix: CylinderWord, cycle: CylinderWord) -> Result<Self> {
        if !cycle.is_closed(shift) {
            return Err(ShiftError::IllegalCycle(format!(
                "{:?} is not a nonempty closed path",
                cycle.ids(shift)
            )));
        }
        if let Some(end) = prefix.last_vertex(shift) {
            if Some(end) != cycle.first_vertex(shift) {
                return Err(ShiftError::IllegalWord(
                    "prefix does not end where the cycle starts".into(),
                ));
            }
        }
        Ok(EventuallyPeriodicPoint {
            prefix: prefix.0,
            cycle: cycle.0,
        })
    }

    pub fn periodic(shift: &EdgeShift, cycle: CylinderWord) -> Result<Self> {
        Self::new(shift, CylinderWord::default(), cycle)
    }

    /// Builds from raw edge indices already known to be legal.
    pub(crate) fn from_parts(prefix: Vec<usize>, cycle: Vec<usize>) -> Self {
        debug_assert!(!cycle.is_empty());
        EventuallyPeriodicPoint { prefix, cycle }
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// The edge at position `n` (0-based).
    pub fn edge_at(&self, n: usize) -> usize {
        if n < self.prefix.len() {
            self.prefix[n]
        } else {
            self.cycle[(n - self.prefix.len()) % self.cycle.len()]
        }
    }

    /// The vertex at position `n`: the source of the `n`-th edge.
    pub fn vertex_at(&self, shift: &EdgeShift, n: usize) -> usize {
        shift.src(self.edge_at(n))
    }

    /// First `k` edges.
    pub fn head(&self, k: usize) -> Vec<usize> {
        (0..k).map(|n| self.edge_at(n)).collect()
    }

    pub fn cycle_vertices(&self, shift: &EdgeShift) -> VertexSet {
        self.cycle.iter().map(|&e| shift.src(e)).collect()
    }

    /// Normal form: primitive cycle, shortest prefix. Two points are equal
    /// iff their normal forms are equal.
    pub fn canonical(&self) -> EventuallyPeriodicPoint {
        let mut cycle = primitive_root(&self.cycle).to_vec();
        let mut prefix = self.prefix.clone();
        while let Some(&last) = prefix.last() {
            if Some(&last) != cycle.last() {
                break;
            }
            prefix.pop();
            cycle.rotate_right(1);
        }
        EventuallyPeriodicPoint { prefix, cycle }
    }

    pub fn same_point(&self, other: &EventuallyPeriodicPoint) -> bool {
        self.canonical() == other.canonical()
    }

    /// The shifted point `σ^n(x)`.
    pub fn shifted(&self, n: usize) -> EventuallyPeriodicPoint {
        if n <= self.prefix.len() {
            EventuallyPeriodicPoint {
                prefix: self.prefix[n..].to_vec(),
                cycle: self.cycle.clone(),
            }
        } else {
            let mut cycle = self.cycle.clone();
            cycle.rotate_left((n - self.prefix.len()) % self.cycle.len());
            EventuallyPeriodicPoint {
                prefix: Vec::new(),
                cycle,
            }
        }
    }

    /// Human-readable form such as `a b (c d)^inf`.
    pub fn describe(&self, shift: &EdgeShift) -> String {
        let ids = |w: &[usize]| {
            w.iter()
                .map(|&e| shift.edge_id(e))
                .collect::<Vec<_>>()
                .join(" ")
        };
        if self.prefix.is_empty() {
            format!("({})^inf", ids(&self.cycle))
        } else {
            format!("{} ({})^inf", ids(&self.prefix), ids(&self.cycle))
        }
    }
}

/// Shortest `r` with `word = r^k`.
pub fn primitive_root(word: &[usize]) -> &[usize] {
    let n = word.len();
    for p in 1..=n {
        if n.is_multiple_of(p) && (p..n).all(|i| word[i] == word[i - p]) {
            return &word[..p];
        }
    }
    word
}

/// Canonical rotation (lexicographically least) of a cyclic word.
pub fn least_rotation(word: &[usize]) -> Vec<usize> {
    (0..word.len().max(1))
        .map(|r| {
            let mut w = word.to_vec();
            if !w.is_empty() {
                w.rotate_left(r);
            }
            w
        })
        .min()
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn word_legality() {
        let s = fixtures::golden_mean();
        assert!(CylinderWord::from_ids(&s, &["uu", "uv", "vu"]).is_ok());
        assert!(matches!(
            CylinderWord::from_ids(&s, &["uv", "uv"]),
            Err(ShiftError::IllegalWord(_))
        ));
        assert!(matches!(
            CylinderWord::from_ids(&s, &["zz"]),
            Err(ShiftError::UnknownEdge(_))
        ));
    }

    #[test]
    fn canonical_forms_identify_points() {
        let s = fixtures::full_shift(2);
        let a = CylinderWord::from_ids(&s, &["a"]).unwrap();
        let aa = CylinderWord::from_ids(&s, &["a", "a"]).unwrap();
        let p = EventuallyPeriodicPoint::periodic(&s, a.clone()).unwrap();
        let q = EventuallyPeriodicPoint::new(&s, a.clone(), aa).unwrap();
        assert!(p.same_point(&q));
        let b = CylinderWord::from_ids(&s, &["b"]).unwrap();
        let r = EventuallyPeriodicPoint::new(&s, b, a).unwrap();
        assert!(!p.same_point(&r));
        assert!(r.shifted(1).same_point(&p));
    }

    #[test]
    fn rejects_open_cycle() {
        let s = fixtures::golden_mean();
        let c = CylinderWord::from_ids(&s, &["uv"]).unwrap();
        assert!(matches!(
            EventuallyPeriodicPoint::periodic(&s, c),
            Err(ShiftError::IllegalCycle(_))
        ));
    }

    #[test]
    fn roots_and_rotations() {
        assert_eq!(primitive_root(&[1, 2, 1, 2]), &[1, 2]);
        assert_eq!(primitive_root(&[1, 2, 1]), &[1, 2, 1]);
        assert_eq!(least_rotation(&[3, 1, 2]), vec![1, 2, 3]);
    }
}
