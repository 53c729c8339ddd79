//! Exact-rational geometric ingestion: drawings from coordinates and
//! polyline edges, with all intersection tests done in exact arithmetic.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::drawing::{Drawing, DrawingError, EdgeEnd, EdgeId, End, Sign, Vertex, VertexId};
use crate::rat::Q;

pub type Point = (Q, Q);

#[derive(Clone, Debug)]
pub enum GeometryError {
    /// Collinear overlap, triple point, endpoint in another edge's interior.
    Degenerate { edges: (EdgeId, EdgeId), what: String },
    BadInput(String),
    Drawing(DrawingError),
}

impl core::fmt::Display for GeometryError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GeometryError::Degenerate { edges, what } => {
                write!(f, "degenerate incidence between edges {} and {}: {}", edges.0, edges.1, what)
            }
            GeometryError::BadInput(s) => write!(f, "bad geometric input: {s}"),
            GeometryError::Drawing(e) => write!(f, "{e}"),
        }
    }
}

/// A polyline edge: endpoints plus interior bend points.
#[derive(Clone, Debug)]
pub struct PolyEdge {
    pub tail: VertexId,
    pub head: VertexId,
    pub bends: Vec<Point>,
}

fn sub(a: &Point, b: &Point) -> Point {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn cross(a: &Point, b: &Point) -> Q {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn orient(a: &Point, b: &Point, c: &Point) -> Q {
    cross(&sub(b, a), &sub(c, a))
}

fn on_segment_interior(a: &Point, b: &Point, p: &Point) -> bool {
    if !orient(a, b, p).is_zero() || p == a || p == b {
        return false;
    }
    let lo_x = (&a.0).min(&b.0);
    let hi_x = (&a.0).max(&b.0);
    let lo_y = (&a.1).min(&b.1);
    let hi_y = (&a.1).max(&b.1);
    &p.0 >= lo_x && &p.0 <= hi_x && &p.1 >= lo_y && &p.1 <= hi_y
}

struct CrossingRecord {
    seg_index: usize,
    param: Q,
    other: EdgeId,
    point: Point,
}

/// Builds a drawing from exact coordinates and straight/polyline edges.
/// Requires general position: no three segments through one point, no
/// endpoint interior to another edge, no collinear overlaps.
pub fn from_geometry(points: &[Point], edges: &[PolyEdge]) -> Result<Drawing, GeometryError> {
    let n = points.len();
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            if p == q {
                return Err(GeometryError::BadInput(format!("vertices {i} and {j} coincide")));
            }
        }
    }
    // Full chains with endpoints.
    let mut chains: Vec<Vec<Point>> = Vec::with_capacity(edges.len());
    for (e, pe) in edges.iter().enumerate() {
        if pe.tail >= n || pe.head >= n {
            return Err(GeometryError::Drawing(DrawingError::BadVertex(e)));
        }
        if pe.tail == pe.head {
            return Err(GeometryError::Drawing(DrawingError::SelfLoop(e)));
        }
        let mut chain = Vec::with_capacity(pe.bends.len() + 2);
        chain.push(points[pe.tail].clone());
        chain.extend(pe.bends.iter().cloned());
        chain.push(points[pe.head].clone());
        for w in chain.windows(2) {
            if w[0] == w[1] {
                return Err(GeometryError::BadInput(format!("edge {e} has a zero-length segment")));
            }
        }
        // A chain must not cross itself.
        for i in 0..chain.len() - 1 {
            for j in i + 2..chain.len() - 1 {
                if i == 0 && j == chain.len() - 2 {
                    // first and last may share nothing anyway; still check
                }
                if proper_cross(&chain[i], &chain[i + 1], &chain[j], &chain[j + 1]).is_some() {
                    return Err(GeometryError::Degenerate {
                        edges: (e, e),
                        what: "edge chain crosses itself".into(),
                    });
                }
            }
        }
        chains.push(chain);
    }
    // No vertex may lie in the interior of any segment.
    for (v, p) in points.iter().enumerate() {
        for (e, chain) in chains.iter().enumerate() {
            for w in chain.windows(2) {
                if on_segment_interior(&w[0], &w[1], p) {
                    return Err(GeometryError::Degenerate {
                        edges: (e, e),
                        what: format!("vertex {v} lies in the interior of edge {e}"),
                    });
                }
            }
        }
    }

    let m = edges.len();
    let mut records: Vec<Vec<CrossingRecord>> = (0..m).map(|_| Vec::new()).collect();
    let mut signs: BTreeMap<(EdgeId, EdgeId), Sign> = BTreeMap::new();
    for e in 0..m {
        for f in e + 1..m {
            let adjacent = edges[e].tail == edges[f].tail
                || edges[e].tail == edges[f].head
                || edges[e].head == edges[f].tail
                || edges[e].head == edges[f].head;
            let mut count = 0;
            for (i, we) in chains[e].windows(2).enumerate() {
                for (j, wf) in chains[f].windows(2).enumerate() {
                    if let Some(bad) = touching(&we[0], &we[1], &wf[0], &wf[1]) {
                        // Endpoint contact at a shared graph vertex is fine.
                        let shared_vertex = adjacent
                            && points.iter().any(|p| {
                                (p == &we[0] || p == &we[1]) && (p == &wf[0] || p == &wf[1]) && p == &bad
                            });
                        if !shared_vertex {
                            return Err(GeometryError::Degenerate {
                                edges: (e, f),
                                what: "segments touch without crossing properly".into(),
                            });
                        }
                        continue;
                    }
                    if let Some((t_e, t_f, pt)) = proper_cross(&we[0], &we[1], &wf[0], &wf[1]) {
                        if adjacent {
                            return Err(GeometryError::Drawing(DrawingError::AdjacentEdgesCross(e, f)));
                        }
                        count += 1;
                        if count > 1 {
                            return Err(GeometryError::Drawing(DrawingError::PairCrossesTwice(e, f)));
                        }
                        let de = sub(&we[1], &we[0]);
                        let df = sub(&wf[1], &wf[0]);
                        let s = cross(&de, &df);
                        debug_assert!(!s.is_zero());
                        signs.insert(
                            (e, f),
                            if s.is_positive() { Sign::Positive } else { Sign::Negative },
                        );
                        records[e].push(CrossingRecord { seg_index: i, param: t_e, other: f, point: pt.clone() });
                        records[f].push(CrossingRecord { seg_index: j, param: t_f, other: e, point: pt });
                    }
                }
            }
        }
    }
    // Order the crossings along each edge; equal positions mean a triple
    // point (two crossings of this edge coincide).
    for (e, recs) in records.iter_mut().enumerate() {
        recs.sort_by(|a, b| {
            a.seg_index.cmp(&b.seg_index).then_with(|| a.param.cmp(&b.param)).then(a.other.cmp(&b.other))
        });
        for w in recs.windows(2) {
            if w[0].seg_index == w[1].seg_index && w[0].point == w[1].point {
                return Err(GeometryError::Degenerate {
                    edges: (w[0].other.min(w[1].other), w[0].other.max(w[1].other)),
                    what: format!("triple point on edge {e}"),
                });
            }
        }
    }

    // Rotations by exact angular sort of germ directions.
    let mut rotation: Vec<Vec<EdgeEnd>> = alloc::vec![Vec::new(); n];
    for v in 0..n {
        let mut germs: Vec<(Point, EdgeEnd)> = Vec::new();
        for (e, pe) in edges.iter().enumerate() {
            if pe.tail == v {
                let dir = sub(&chains[e][1], &chains[e][0]);
                germs.push((dir, EdgeEnd { edge: e, end: End::Tail }));
            }
            if pe.head == v {
                let k = chains[e].len();
                let dir = sub(&chains[e][k - 2], &chains[e][k - 1]);
                germs.push((dir, EdgeEnd { edge: e, end: End::Head }));
            }
        }
        germs.sort_by(|a, b| angle_cmp(&a.0, &b.0).then(a.1.cmp(&b.1)));
        for w in germs.windows(2) {
            if angle_cmp(&w[0].0, &w[1].0) == core::cmp::Ordering::Equal {
                return Err(GeometryError::Degenerate {
                    edges: (w[0].1.edge, w[1].1.edge),
                    what: format!("edges leave vertex {v} in the same direction"),
                });
            }
        }
        rotation[v] = germs.into_iter().map(|(_, ee)| ee).collect();
    }

    let d = Drawing {
        multigraph: false,
        vertices: points.iter().map(|p| Vertex { point: Some(p.clone()) }).collect(),
        edges: edges.iter().map(|pe| (pe.tail, pe.head)).collect(),
        crossings: records
            .iter()
            .map(|recs| recs.iter().map(|r| r.other).collect())
            .collect(),
        rotation,
        signs,
    };
    d.validate_simplicity().map_err(GeometryError::Drawing)?;
    Ok(d)
}

/// Proper crossing of open segments; returns parameters on both segments
/// and the crossing point.
fn proper_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> Option<(Q, Q, Point)> {
    let d1 = orient(a, b, c);
    let d2 = orient(a, b, d);
    let d3 = orient(c, d, a);
    let d4 = orient(c, d, b);
    if (d1.is_positive() && d2.is_negative() || d1.is_negative() && d2.is_positive())
        && (d3.is_positive() && d4.is_negative() || d3.is_negative() && d4.is_positive())
    {
        let r = sub(b, a);
        let s = sub(d, c);
        let denom = cross(&r, &s);
        let t = cross(&sub(c, a), &s) / denom.clone();
        let u = cross(&sub(c, a), &r) / denom;
        let pt = (&a.0 + &t * &r.0, &a.1 + &t * &r.1);
        Some((t, u, pt))
    } else {
        None
    }
}

/// Detects improper contact (endpoint on the other segment, collinear
/// overlap). Returns a witness point if the segments touch without crossing
/// properly.
fn touching(a: &Point, b: &Point, c: &Point, d: &Point) -> Option<Point> {
    for (p, seg) in [(c, (a, b)), (d, (a, b)), (a, (c, d)), (b, (c, d))] {
        if on_segment_interior(seg.0, seg.1, p) {
            return Some(p.clone());
        }
    }
    // Shared endpoints:
    for p in [a, b] {
        if p == c || p == d {
            return Some(p.clone());
        }
    }
    None
}

/// Counterclockwise angular comparison of nonzero direction vectors,
/// starting from the positive x-axis.
fn angle_cmp(a: &Point, b: &Point) -> core::cmp::Ordering {
    fn half(p: &Point) -> u8 {
        // 0 for angle in [0, pi), 1 for [pi, 2pi)
        if p.1.is_positive() || (p.1.is_zero() && p.0.is_positive()) {
            0
        } else {
            1
        }
    }
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    let c = cross(a, b);
    if c.is_positive() {
        core::cmp::Ordering::Less
    } else if c.is_negative() {
        core::cmp::Ordering::Greater
    } else {
        core::cmp::Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::qi;

    fn pt(x: i64, y: i64) -> Point {
        (qi(x), qi(y))
    }

    fn straight(tail: usize, head: usize) -> PolyEdge {
        PolyEdge { tail, head, bends: Vec::new() }
    }

    #[test]
    fn unit_square_k4_matches_convex() {
        // Square with both diagonals: same crossing structure as
        // from_convex(4, {(0,2),(1,3)}).
        let points = [pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)];
        let edges = [
            straight(0, 1),
            straight(1, 2),
            straight(2, 3),
            straight(3, 0),
            straight(0, 2),
            straight(1, 3),
        ];
        let d = from_geometry(&points, &edges).unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.crossings[4], alloc::vec![5]);
        let p = crate::planar::planarize(&d).unwrap();
        assert_eq!(p.face_count(), 5);
        let census = p.face_census();
        assert_eq!(census.get(&(2, 3)), Some(&4));
        assert_eq!(census.get(&(4, 4)), Some(&1));
    }

    #[test]
    fn disjoint_segments_do_not_cross() {
        let points = [pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)];
        let edges = [straight(0, 1), straight(2, 3)];
        let d = from_geometry(&points, &edges).unwrap();
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn three_pairwise_crossing_segments_have_an_empty_triangle() {
        let points = [pt(0, 0), pt(10, 1), pt(1, 5), pt(8, -4), pt(9, 4), pt(2, -3)];
        let edges = [straight(0, 1), straight(2, 3), straight(4, 5)];
        let d = from_geometry(&points, &edges).unwrap();
        assert_eq!(d.crossing_count(), 3);
        let p = crate::planar::planarize(&d).unwrap();
        assert_eq!(p.face_census().get(&(0, 3)), Some(&1));
    }

    #[test]
    fn triple_point_is_rejected() {
        let points = [pt(-1, 0), pt(1, 0), pt(0, -1), pt(0, 1), pt(-1, -1), pt(1, 1)];
        let edges = [straight(0, 1), straight(2, 3), straight(4, 5)];
        let err = from_geometry(&points, &edges).unwrap_err();
        assert!(matches!(err, GeometryError::Degenerate { .. }));
    }

    #[test]
    fn endpoint_on_interior_is_rejected() {
        let points = [pt(-1, 0), pt(1, 0), pt(0, 0 + 0), pt(0, 1)];
        // vertex 2 lies on edge 0's interior
        let edges = [straight(0, 1), straight(2, 3)];
        let err = from_geometry(&points, &edges).unwrap_err();
        assert!(matches!(err, GeometryError::Degenerate { .. }));
    }
}
