//! Planarization: the plane graph obtained by turning crossings into
//! degree-4 nodes.
//!
//! Nodes are the original vertices plus one node per crossing pair; segments
//! are the crossing-free pieces of edges. Faces come from walking the
//! rotation system: the successor of a dart is the clockwise-next dart at
//! the head of its twin, which traces every face with its interior on the
//! left. On the sphere the walk must reproduce Euler's relation exactly,
//! which doubles as a consistency check of the crossing signs.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::drawing::{Drawing, DrawingError, EdgeId, End, Sign, VertexId};

pub type NodeId = usize;
pub type DartId = usize;
pub type SegId = usize;
pub type FaceId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Original(VertexId),
    /// Crossing of the two edges, smaller id first.
    Crossing(EdgeId, EdgeId),
}

#[derive(Clone, Debug)]
pub struct Segment {
    pub parent: EdgeId,
    /// Position along the parent edge, 0 at the tail.
    pub index: usize,
    pub ends: (NodeId, NodeId),
}

#[derive(Clone, Debug)]
pub struct Face {
    /// Boundary darts in walk order (interior on the left).
    pub darts: Vec<DartId>,
    /// Number of boundary segments, |f|.
    pub size: usize,
    /// Number of original-vertex incidences on the walk, |V(f)|. Equals the
    /// number of distinct original vertices whenever the boundary is a
    /// simple cycle.
    pub original_count: usize,
}

impl Face {
    /// The (x, y) class of an x-y face.
    pub fn class(&self) -> (usize, usize) {
        (self.original_count, self.size)
    }
}

#[derive(Clone, Debug)]
pub struct Planarization {
    pub node_kinds: Vec<NodeKind>,
    /// Node id of each original vertex (identity mapping, kept for clarity).
    pub vertex_node: Vec<NodeId>,
    pub crossing_node: BTreeMap<(EdgeId, EdgeId), NodeId>,
    pub segments: Vec<Segment>,
    /// Per edge: its segments from tail to head (crossings + 1 of them).
    pub edge_segments: Vec<Vec<SegId>>,
    /// dart 2s is segment s oriented tail-to-head, dart 2s+1 its twin.
    pub dart_origin: Vec<NodeId>,
    pub rot_next: Vec<DartId>,
    pub rot_prev: Vec<DartId>,
    pub faces: Vec<Face>,
    pub face_of_dart: Vec<FaceId>,
    pub connected: bool,
}

pub fn twin(d: DartId) -> DartId {
    d ^ 1
}

impl Planarization {
    pub fn node_count(&self) -> usize {
        self.node_kinds.len()
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn dart_segment(&self, d: DartId) -> SegId {
        d / 2
    }

    /// Face on the other side of the segment from `face`, entered across
    /// dart `d` (which must bound `face`).
    pub fn face_across(&self, d: DartId) -> FaceId {
        self.face_of_dart[twin(d)]
    }

    pub fn is_original(&self, node: NodeId) -> bool {
        matches!(self.node_kinds[node], NodeKind::Original(_))
    }

    /// Next dart counterclockwise around the origin of `d`.
    pub fn next_around_node(&self, d: DartId) -> DartId {
        self.rot_next[d]
    }

    /// Successor along the face walk (interior kept on the left).
    pub fn next_in_face(&self, d: DartId) -> DartId {
        self.rot_prev[twin(d)]
    }

    /// Census of x-y face classes.
    pub fn face_census(&self) -> BTreeMap<(usize, usize), usize> {
        let mut census = BTreeMap::new();
        for f in &self.faces {
            *census.entry(f.class()).or_insert(0usize) += 1;
        }
        census
    }

    /// Total charge sum over faces of |f| + |V(f)| - 4; equals 4n - 8 for a
    /// connected drawing on the sphere.
    pub fn total_charge(&self) -> i64 {
        self.faces.iter().map(|f| f.size as i64 + f.original_count as i64 - 4).sum()
    }

    /// Nodes adjacency over segments, for connectivity work.
    fn node_neighbors(&self) -> Vec<Vec<NodeId>> {
        let mut adj = alloc::vec![Vec::new(); self.node_count()];
        for s in &self.segments {
            adj[s.ends.0].push(s.ends.1);
            adj[s.ends.1].push(s.ends.0);
        }
        adj
    }

    fn connected_ignoring(&self, skip: Option<NodeId>) -> bool {
        let n = self.node_count();
        let active = match skip {
            Some(_) => n - 1,
            None => n,
        };
        if active == 0 {
            return true;
        }
        let adj = self.node_neighbors();
        let start = (0..n).find(|&v| Some(v) != skip);
        let Some(start) = start else { return true };
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if Some(w) != skip && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                    count += 1;
                }
            }
        }
        count == active
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// 2-connectivity of the planarization (no cut node), by exhaustive
    /// node removal. Desk scale by design.
    pub fn is_two_connected(&self) -> bool {
        if !self.connected || self.node_count() < 3 {
            return false;
        }
        (0..self.node_count()).all(|v| self.connected_ignoring(Some(v)))
    }
}

/// Computes the planarization of a drawing. Fails if the crossing data does
/// not describe a sphere drawing (Euler check per connected component).
pub fn planarize(d: &Drawing) -> Result<Planarization, DrawingError> {
    d.validate_simplicity()?;
    let n = d.n();
    let mut node_kinds: Vec<NodeKind> = (0..n).map(NodeKind::Original).collect();
    let mut crossing_node: BTreeMap<(EdgeId, EdgeId), NodeId> = BTreeMap::new();
    for e in 0..d.m() {
        for &f in &d.crossings[e] {
            let key = (e.min(f), e.max(f));
            crossing_node.entry(key).or_insert_with(|| {
                node_kinds.push(NodeKind::Crossing(key.0, key.1));
                node_kinds.len() - 1
            });
        }
    }

    // Segments per edge: tail, crossings in order, head.
    let mut segments: Vec<Segment> = Vec::new();
    let mut edge_segments: Vec<Vec<SegId>> = Vec::with_capacity(d.m());
    for e in 0..d.m() {
        let (u, v) = d.edges[e];
        let mut chain: Vec<NodeId> = Vec::with_capacity(d.crossings[e].len() + 2);
        chain.push(u);
        for &f in &d.crossings[e] {
            chain.push(crossing_node[&(e.min(f), e.max(f))]);
        }
        chain.push(v);
        let mut segs = Vec::with_capacity(chain.len() - 1);
        for (i, w) in chain.windows(2).enumerate() {
            segs.push(segments.len());
            segments.push(Segment { parent: e, index: i, ends: (w[0], w[1]) });
        }
        edge_segments.push(segs);
    }

    // Darts: 2s = forward (tail side toward head side), 2s+1 = backward.
    let dart_count = segments.len() * 2;
    let mut dart_origin = alloc::vec![0usize; dart_count];
    for (s, seg) in segments.iter().enumerate() {
        dart_origin[2 * s] = seg.ends.0;
        dart_origin[2 * s + 1] = seg.ends.1;
    }

    // Rotation at each node as an ordered dart list, counterclockwise.
    let mut rotations: Vec<Vec<DartId>> = alloc::vec![Vec::new(); node_kinds.len()];
    for v in 0..n {
        for ee in &d.rotation[v] {
            let segs = &edge_segments[ee.edge];
            let dart = match ee.end {
                End::Tail => 2 * segs[0],
                End::Head => 2 * segs[segs.len() - 1] + 1,
            };
            rotations[v].push(dart);
        }
    }
    for (&(e, f), &x) in &crossing_node {
        // Position of the crossing along each edge.
        let ie = d.crossings[e].iter().position(|&g| g == f).expect("validated");
        let if_ = d.crossings[f].iter().position(|&g| g == e).expect("validated");
        let e_prev = 2 * edge_segments[e][ie] + 1; // back along e
        let e_next = 2 * edge_segments[e][ie + 1]; // forward along e
        let f_prev = 2 * edge_segments[f][if_] + 1;
        let f_next = 2 * edge_segments[f][if_ + 1];
        let sign = d.sign(e, f).expect("validated");
        rotations[x] = match sign {
            Sign::Positive => alloc::vec![e_next, f_next, e_prev, f_prev],
            Sign::Negative => alloc::vec![e_next, f_prev, e_prev, f_next],
        };
    }

    let mut rot_next = alloc::vec![0usize; dart_count];
    let mut rot_prev = alloc::vec![0usize; dart_count];
    for rot in &rotations {
        let k = rot.len();
        for (i, &dd) in rot.iter().enumerate() {
            rot_next[dd] = rot[(i + 1) % k];
            rot_prev[dd] = rot[(i + k - 1) % k];
        }
    }

    // Face orbits.
    let mut face_of_dart = alloc::vec![usize::MAX; dart_count];
    let mut faces: Vec<Face> = Vec::new();
    for start in 0..dart_count {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut dart = start;
        loop {
            face_of_dart[dart] = id;
            walk.push(dart);
            dart = rot_prev[twin(dart)];
            if dart == start {
                break;
            }
            if walk.len() > dart_count {
                return Err(DrawingError::NotRealizable(
                    "face walk does not close".into(),
                ));
            }
        }
        let original_count =
            walk.iter().filter(|&&dd| matches!(node_kinds[dart_origin[dd]], NodeKind::Original(_))).count();
        let size = walk.len();
        faces.push(Face { darts: walk, size, original_count });
    }

    let p = Planarization {
        node_kinds,
        vertex_node: (0..n).collect(),
        crossing_node,
        segments,
        edge_segments,
        dart_origin,
        rot_next,
        rot_prev,
        faces,
        face_of_dart,
        connected: false,
    };
    let mut p = p;
    p.connected = p.connected_ignoring(None) && p.node_count() > 0;

    // Euler check: one sphere per connected component.
    let comps = component_count(&p);
    let expect = 2 * comps as i64 - p.node_count() as i64 + p.segment_count() as i64;
    if p.face_count() as i64 != expect {
        return Err(DrawingError::NotRealizable(format!(
            "Euler check failed: {} faces, expected {} (V={}, E={}, components={})",
            p.face_count(),
            expect,
            p.node_count(),
            p.segment_count(),
            comps
        )));
    }
    Ok(p)
}

fn component_count(p: &Planarization) -> usize {
    let n = p.node_count();
    let adj = {
        let mut adj = alloc::vec![Vec::new(); n];
        for s in &p.segments {
            adj[s.ends.0].push(s.ends.1);
            adj[s.ends.1].push(s.ends.0);
        }
        adj
    };
    let mut seen = alloc::vec![false; n];
    let mut comps = 0;
    for v in 0..n {
        if seen[v] {
            continue;
        }
        comps += 1;
        let mut stack = alloc::vec![v];
        seen[v] = true;
        while let Some(x) = stack.pop() {
            for &w in &adj[x] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    comps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::{all_chords, from_convex};

    #[test]
    fn plane_triangle_identity_case() {
        let d = from_convex(3, &[], false).unwrap();
        let p = planarize(&d).unwrap();
        assert_eq!(p.node_count(), 3);
        assert_eq!(p.segment_count(), 3);
        assert_eq!(p.face_count(), 2);
    }

    #[test]
    fn convex_k4_planarization() {
        let d = from_convex(4, &[(0, 2), (1, 3)], false).unwrap();
        let p = planarize(&d).unwrap();
        assert_eq!(p.node_count(), 5);
        assert_eq!(p.segment_count(), 8);
        assert_eq!(p.face_count(), 5);
        let census = p.face_census();
        assert_eq!(census.get(&(2, 3)), Some(&4));
        assert_eq!(census.get(&(4, 4)), Some(&1));
        assert_eq!(p.total_charge(), 4 * 4 - 8);
        assert!(p.is_two_connected());
    }

    #[test]
    fn two_crossing_edges_alone() {
        // 4 vertices, 2 edges crossing once: 5 nodes, 4 segments, 1 face.
        use crate::drawing::{Drawing, EdgeEnd, End, Sign, Vertex};
        use alloc::collections::BTreeMap;
        let mut signs = BTreeMap::new();
        signs.insert((0usize, 1usize), Sign::Positive);
        let d = Drawing {
            multigraph: false,
            vertices: alloc::vec![Vertex { point: None }; 4],
            edges: alloc::vec![(0, 1), (2, 3)],
            crossings: alloc::vec![alloc::vec![1], alloc::vec![0]],
            rotation: alloc::vec![
                alloc::vec![EdgeEnd { edge: 0, end: End::Tail }],
                alloc::vec![EdgeEnd { edge: 0, end: End::Head }],
                alloc::vec![EdgeEnd { edge: 1, end: End::Tail }],
                alloc::vec![EdgeEnd { edge: 1, end: End::Head }],
            ],
            signs,
        };
        let p = planarize(&d).unwrap();
        assert_eq!(p.node_count(), 5);
        assert_eq!(p.segment_count(), 4);
        assert_eq!(p.face_count(), 1);
        assert!(!p.is_two_connected());
    }

    #[test]
    fn convex_k6_census_charge() {
        let d = from_convex(6, &all_chords(6), false).unwrap();
        let p = planarize(&d).unwrap();
        assert_eq!(p.total_charge(), 4 * 6 - 8);
        assert!(p.is_two_connected());
        // The three long diagonals bound a central 0-3 face.
        assert_eq!(p.face_census().get(&(0, 3)), Some(&1));
    }
}
