//! Simple topological drawings with explicit crossing data.
//!
//! A [`Drawing`] is a combinatorial description of a graph drawn on the
//! sphere: vertices, edges, the ordered sequence of crossings along each
//! edge, the cyclic (counterclockwise) order of edge ends around each
//! vertex, and one orientation sign per crossing pair. Together these
//! determine the planarization and its faces exactly; no geometry is needed
//! once a drawing is built.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::rat::Q;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Which end of an edge a dart leaves from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum End {
    Tail,
    Head,
}

/// An edge end as it appears in a vertex rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeEnd {
    pub edge: EdgeId,
    pub end: End,
}

/// Orientation of a crossing: the sign of the cross product of the two
/// edges' direction vectors at the crossing point, directions taken
/// tail-to-head, first edge the one with the smaller id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DrawingError {
    SelfLoop(EdgeId),
    DuplicateEdge(EdgeId, EdgeId),
    BadVertex(EdgeId),
    InconsistentCrossings(EdgeId, EdgeId),
    AdjacentEdgesCross(EdgeId, EdgeId),
    PairCrossesTwice(EdgeId, EdgeId),
    MissingSign(EdgeId, EdgeId),
    BadRotation(VertexId, String),
    NotRealizable(String),
}

impl core::fmt::Display for DrawingError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DrawingError::SelfLoop(e) => write!(f, "edge {e} is a self-loop"),
            DrawingError::DuplicateEdge(a, b) => {
                write!(f, "edges {a} and {b} are parallel (not in multigraph mode)")
            }
            DrawingError::BadVertex(e) => write!(f, "edge {e} references a missing vertex"),
            DrawingError::InconsistentCrossings(a, b) => {
                write!(f, "crossing lists of edges {a} and {b} disagree")
            }
            DrawingError::AdjacentEdgesCross(a, b) => {
                write!(f, "adjacent edges {a} and {b} cross (drawing not simple)")
            }
            DrawingError::PairCrossesTwice(a, b) => {
                write!(f, "edges {a} and {b} cross more than once (drawing not simple)")
            }
            DrawingError::MissingSign(a, b) => {
                write!(f, "missing orientation sign for crossing pair ({a},{b})")
            }
            DrawingError::BadRotation(v, why) => write!(f, "rotation at vertex {v}: {why}"),
            DrawingError::NotRealizable(why) => write!(f, "not a sphere drawing: {why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    /// Exact position, when the drawing came from a geometric source.
    pub point: Option<(Q, Q)>,
}

#[derive(Clone, Debug)]
pub struct Drawing {
    pub multigraph: bool,
    pub vertices: Vec<Vertex>,
    /// Endpoint pairs; the tail/head orientation fixes the direction in
    /// which the crossing sequence is listed.
    pub edges: Vec<(VertexId, VertexId)>,
    /// Per edge: the other edges it crosses, in order from tail to head.
    pub crossings: Vec<Vec<EdgeId>>,
    /// Per vertex: counterclockwise cyclic order of incident edge ends.
    pub rotation: Vec<Vec<EdgeEnd>>,
    /// Orientation sign per crossing pair, keyed by (min edge, max edge).
    pub signs: BTreeMap<(EdgeId, EdgeId), Sign>,
}

impl Drawing {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.iter().map(|c| c.len()).sum::<usize>() / 2
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn endpoint(&self, e: EdgeId, end: End) -> VertexId {
        match end {
            End::Tail => self.edges[e].0,
            End::Head => self.edges[e].1,
        }
    }

    pub fn sign(&self, a: EdgeId, b: EdgeId) -> Option<Sign> {
        let key = (a.min(b), a.max(b));
        self.signs.get(&key).copied()
    }

    pub fn edges_adjacent(&self, a: EdgeId, b: EdgeId) -> bool {
        let (u1, v1) = self.edges[a];
        let (u2, v2) = self.edges[b];
        u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2
    }

    /// Number of times `a` crosses `b` according to `a`'s list.
    fn cross_multiplicity(&self, a: EdgeId, b: EdgeId) -> usize {
        self.crossings[a].iter().filter(|&&x| x == b).count()
    }

    /// Validates the structural invariants of a simple topological drawing
    /// (multigraph mode relaxes only the parallel-edge ban).
    pub fn validate_simplicity(&self) -> Result<(), DrawingError> {
        let n = self.n();
        let mut seen_pairs: BTreeMap<(VertexId, VertexId), EdgeId> = BTreeMap::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(DrawingError::BadVertex(e));
            }
            if u == v {
                return Err(DrawingError::SelfLoop(e));
            }
            let key = (u.min(v), u.max(v));
            if let Some(&other) = seen_pairs.get(&key) {
                if !self.multigraph {
                    return Err(DrawingError::DuplicateEdge(other, e));
                }
            } else {
                seen_pairs.insert(key, e);
            }
        }
        // Mutual consistency and simplicity of crossing lists.
        for e in 0..self.m() {
            for &f in &self.crossings[e] {
                if f >= self.m() || f == e {
                    return Err(DrawingError::InconsistentCrossings(e, f.min(self.m())));
                }
                if self.edges_adjacent(e, f) {
                    return Err(DrawingError::AdjacentEdgesCross(e.min(f), e.max(f)));
                }
            }
            for f in 0..self.m() {
                let me = self.cross_multiplicity(e, f);
                if me > 1 {
                    return Err(DrawingError::PairCrossesTwice(e.min(f), e.max(f)));
                }
                if me != self.cross_multiplicity(f, e) {
                    return Err(DrawingError::InconsistentCrossings(e, f));
                }
                if me == 1 && self.sign(e, f).is_none() {
                    return Err(DrawingError::MissingSign(e.min(f), e.max(f)));
                }
            }
        }
        // Rotations list each incident edge end exactly once.
        for v in 0..n {
            let mut expected: BTreeSet<EdgeEnd> = BTreeSet::new();
            for (e, &(a, b)) in self.edges.iter().enumerate() {
                if a == v {
                    expected.insert(EdgeEnd { edge: e, end: End::Tail });
                }
                if b == v {
                    expected.insert(EdgeEnd { edge: e, end: End::Head });
                }
            }
            let got: BTreeSet<EdgeEnd> = self.rotation[v].iter().copied().collect();
            if got != expected || self.rotation[v].len() != expected.len() {
                return Err(DrawingError::BadRotation(
                    v,
                    format!("has {} entries, expected {}", self.rotation[v].len(), expected.len()),
                ));
            }
        }
        Ok(())
    }

    /// Crossing count per edge.
    pub fn crossing_profile(&self) -> Vec<usize> {
        self.crossings.iter().map(|c| c.len()).collect()
    }

    /// True iff no edge is crossed more than `k` times.
    pub fn is_k_planar(&self, k: usize) -> bool {
        self.crossings.iter().all(|c| c.len() <= k)
    }

    /// True iff for every crossing pair, at least one of the two edges has
    /// at most `k` crossings.
    pub fn is_min_k_planar(&self, k: usize) -> bool {
        for e in 0..self.m() {
            for &f in &self.crossings[e] {
                if self.crossings[e].len() > k && self.crossings[f].len() > k {
                    return false;
                }
            }
        }
        true
    }

    /// Connectivity of the abstract graph (isolated vertices count as
    /// their own components).
    pub fn graph_is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut adj: Vec<Vec<VertexId>> = alloc::vec![Vec::new(); self.n()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = alloc::vec![false; self.n()];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::from_convex;

    #[test]
    fn convex_k4_profile() {
        let d = from_convex(4, &[(0, 2), (1, 3)], false).unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert!(d.is_k_planar(1));
        assert!(!d.is_k_planar(0));
        d.validate_simplicity().unwrap();
    }

    #[test]
    fn min_k_planarity_uses_pairwise_minimum() {
        // Convex K6: the three long diagonals pairwise cross and carry four
        // crossings each, so min-3 fails while min-4 holds.
        let d = from_convex(6, &crate::convex::all_chords(6), false).unwrap();
        assert!(!d.is_min_k_planar(3));
        assert!(d.is_min_k_planar(4));
        assert!(!d.is_k_planar(3));
        assert!(d.is_k_planar(4));
    }

    #[test]
    fn rejects_duplicate_chord_outside_multigraph_mode() {
        let err = from_convex(5, &[(0, 2), (0, 2)], false).unwrap_err();
        assert!(matches!(err, DrawingError::DuplicateEdge(_, _)));
    }
}
