//! The planar skeleton of a drawing (its crossing-free edges with the
//! induced embedding) and the structural audits built on it: h-framed,
//! polyhedral, and outer predicates.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::drawing::{Drawing, DrawingError, End, VertexId};
use crate::planar::{planarize, Planarization};

#[derive(Clone, Debug)]
pub struct SkeletonProfile {
    /// Parent-drawing ids of the crossing-free edges.
    pub skeleton_edges: Vec<usize>,
    pub simple: bool,
    pub connected: bool,
    pub spanning: bool,
    pub biconnected: bool,
    pub triconnected: bool,
    pub dual_simple: bool,
    /// f_i: number of skeleton faces of size i.
    pub face_histogram: BTreeMap<usize, usize>,
    /// Maximum skeleton face size.
    pub h: usize,
    pub h_framed: bool,
    pub polyhedral: bool,
    /// Skeleton faces as vertex walks (interior on the left).
    pub faces: Vec<Vec<VertexId>>,
    /// Crossed-edge germs drawn inside each skeleton face.
    pub face_germs: Vec<usize>,
    /// Face with all vertices on a simple-cycle boundary and empty interior.
    pub outer_strict: Option<usize>,
    /// Face with all vertices on its boundary (repeats allowed) and empty
    /// interior.
    pub outer_lenient: Option<usize>,
}

impl SkeletonProfile {
    pub fn is_outer(&self) -> bool {
        self.outer_strict.is_some()
    }
}

/// Extracts the skeleton as a drawing of its own (same vertex set).
/// Returns the sub-drawing and the parent edge id of each skeleton edge.
pub fn skeleton_drawing(d: &Drawing) -> (Drawing, Vec<usize>) {
    let keep: Vec<usize> = (0..d.m()).filter(|&e| d.crossings[e].is_empty()).collect();
    let mut back = BTreeMap::new();
    for (new, &old) in keep.iter().enumerate() {
        back.insert(old, new);
    }
    let rotation = d
        .rotation
        .iter()
        .map(|rot| {
            rot.iter()
                .filter_map(|ee| {
                    back.get(&ee.edge).map(|&e| crate::drawing::EdgeEnd { edge: e, end: ee.end })
                })
                .collect()
        })
        .collect();
    let sub = Drawing {
        multigraph: d.multigraph,
        vertices: d.vertices.clone(),
        edges: keep.iter().map(|&e| d.edges[e]).collect(),
        crossings: alloc::vec![Vec::new(); keep.len()],
        rotation,
        signs: BTreeMap::new(),
    };
    (sub, keep)
}

fn graph_connected(n: usize, edges: &[(usize, usize)], skip: &[usize]) -> bool {
    let skipped: BTreeSet<usize> = skip.iter().copied().collect();
    let active = n - skipped.len();
    if active == 0 {
        return true;
    }
    let mut adj = alloc::vec![Vec::new(); n];
    for &(u, v) in edges {
        if !skipped.contains(&u) && !skipped.contains(&v) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let start = (0..n).find(|v| !skipped.contains(v)).unwrap();
    let mut seen = alloc::vec![false; n];
    let mut stack = alloc::vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
                count += 1;
            }
        }
    }
    count == active
}

fn dual_is_simple(p: &Planarization) -> bool {
    let mut shared: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for s in 0..p.segment_count() {
        let f1 = p.face_of_dart[2 * s];
        let f2 = p.face_of_dart[2 * s + 1];
        if f1 == f2 {
            return false; // bridge: dual loop
        }
        *shared.entry((f1.min(f2), f1.max(f2))).or_insert(0) += 1;
    }
    shared.values().all(|&c| c <= 1)
}

/// Full structural audit of the skeleton of `d`.
pub fn skeleton_audit(d: &Drawing) -> Result<SkeletonProfile, DrawingError> {
    let n = d.n();
    let (sub, keep) = skeleton_drawing(d);
    let p = planarize(&sub)?;

    let simple = {
        let mut pairs = BTreeSet::new();
        sub.edges.iter().all(|&(u, v)| u != v && pairs.insert((u.min(v), u.max(v))))
    };
    let connected = n > 0 && graph_connected(n, &sub.edges, &[]);
    let degrees = {
        let mut deg = alloc::vec![0usize; n];
        for &(u, v) in &sub.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    };
    let spanning = connected && degrees.iter().all(|&dg| dg > 0);
    let biconnected =
        connected && n >= 3 && (0..n).all(|v| graph_connected(n, &sub.edges, &[v]));
    let triconnected = biconnected
        && n >= 4
        && (0..n).all(|u| (u + 1..n).all(|v| graph_connected(n, &sub.edges, &[u, v])));
    let dual_simple = dual_is_simple(&p);

    let mut face_histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut faces: Vec<Vec<VertexId>> = Vec::new();
    for f in &p.faces {
        *face_histogram.entry(f.size).or_insert(0) += 1;
        faces.push(f.darts.iter().map(|&dd| p.dart_origin[dd]).collect());
    }
    let h = face_histogram.keys().copied().max().unwrap_or(0);

    // Assign every crossed-edge germ to the skeleton face it is drawn in:
    // the face whose corner wedge at the vertex starts at the skeleton dart
    // counterclockwise-before the germ.
    let mut face_germs = alloc::vec![0usize; p.face_count()];
    let skel_set: BTreeSet<usize> = keep.iter().copied().collect();
    let skel_index: BTreeMap<usize, usize> =
        keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    for v in 0..n {
        let rot = &d.rotation[v];
        let positions: Vec<usize> =
            (0..rot.len()).filter(|&i| skel_set.contains(&rot[i].edge)).collect();
        if positions.is_empty() {
            continue;
        }
        for (i, ee) in rot.iter().enumerate() {
            if skel_set.contains(&ee.edge) {
                continue;
            }
            // nearest skeleton entry counterclockwise-before position i
            let before = positions
                .iter()
                .copied()
                .filter(|&pp| pp < i)
                .max()
                .unwrap_or_else(|| *positions.iter().max().unwrap());
            let se = skel_index[&rot[before].edge];
            let seg = p.edge_segments[se][0];
            let dart = match rot[before].end {
                End::Tail => 2 * seg,
                End::Head => 2 * seg + 1,
            };
            face_germs[p.face_of_dart[dart]] += 1;
        }
    }

    let mut outer_strict = None;
    let mut outer_lenient = None;
    for (fid, walk) in faces.iter().enumerate() {
        let distinct: BTreeSet<VertexId> = walk.iter().copied().collect();
        if distinct.len() == n && face_germs[fid] == 0 {
            if outer_lenient.is_none() {
                outer_lenient = Some(fid);
            }
            if walk.len() == n && outer_strict.is_none() {
                outer_strict = Some(fid);
            }
        }
    }

    let h_framed = simple && biconnected && spanning;
    let polyhedral = h_framed && triconnected;
    Ok(SkeletonProfile {
        skeleton_edges: keep,
        simple,
        connected,
        spanning,
        biconnected,
        triconnected,
        dual_simple,
        face_histogram,
        h,
        h_framed,
        polyhedral,
        faces,
        face_germs,
        outer_strict,
        outer_lenient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::{all_chords, from_convex};

    #[test]
    fn path_graph_is_not_framed() {
        use crate::drawing::{EdgeEnd, End, Vertex};
        let d = Drawing {
            multigraph: false,
            vertices: alloc::vec![Vertex { point: None }; 3],
            edges: alloc::vec![(0, 1), (1, 2)],
            crossings: alloc::vec![Vec::new(); 2],
            rotation: alloc::vec![
                alloc::vec![EdgeEnd { edge: 0, end: End::Tail }],
                alloc::vec![
                    EdgeEnd { edge: 0, end: End::Head },
                    EdgeEnd { edge: 1, end: End::Tail },
                ],
                alloc::vec![EdgeEnd { edge: 1, end: End::Head }],
            ],
            signs: Default::default(),
        };
        let s = skeleton_audit(&d).unwrap();
        assert!(s.connected && s.spanning);
        assert!(!s.biconnected);
        assert!(!s.h_framed);
    }

    #[test]
    fn convex_k6_is_outer() {
        let d = from_convex(6, &all_chords(6), false).unwrap();
        let s = skeleton_audit(&d).unwrap();
        assert_eq!(s.skeleton_edges.len(), 6); // only the polygon survives
        assert!(s.h_framed);
        assert_eq!(s.h, 6);
        assert!(s.outer_strict.is_some());
        // Both hexagon faces are empty of germs on one side only.
        let outer = s.outer_strict.unwrap();
        assert_eq!(s.face_germs[outer], 0);
    }

    #[test]
    fn chorded_polygon_inner_face_not_outer() {
        // One chord: skeleton is the polygon plus the chord; faces of size
        // 3 and 4 and the outer 5-face. All vertices only on the outer one.
        let d = from_convex(5, &[(0, 2)], false).unwrap();
        let s = skeleton_audit(&d).unwrap();
        assert!(s.outer_strict.is_some());
        assert_eq!(s.h, 5);
    }
}
