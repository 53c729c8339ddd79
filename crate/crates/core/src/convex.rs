//! Convex-position crossing combinatorics and the face-fill primitive.
//!
//! Chords of a convex polygon cross exactly when their endpoints interleave
//! in the cyclic order. The order of the crossings along a chord and the
//! orientation of each crossing are fixed by placing the boundary on the
//! rational parabola `t -> (t, t^2)`: chords of the parabola have closed-form
//! exact-rational intersections, and interleaving chords are never parallel
//! there. The same fill works for any disk face of an embedded skeleton, so
//! all construction families route through it.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::drawing::{Drawing, DrawingError, EdgeEnd, EdgeId, End, Sign, Vertex, VertexId};
use crate::rat::Q;

/// Is `x` strictly inside the cyclic arc from `a` to `b` (walking +1 mod `l`)?
pub fn in_open_arc(l: usize, a: usize, b: usize, x: usize) -> bool {
    if a == b {
        return false;
    }
    let span = (b + l - a) % l;
    let off = (x + l - a) % l;
    off > 0 && off < span
}

/// Do the chords `(a,b)` and `(c,d)` of an `l`-gon cross (strict cyclic
/// interleaving)? Chords sharing an endpoint never cross.
pub fn interleaves(l: usize, ab: (usize, usize), cd: (usize, usize)) -> bool {
    let (a, b) = ab;
    let (c, d) = cd;
    if a == c || a == d || b == c || b == d {
        return false;
    }
    in_open_arc(l, a, b, c) != in_open_arc(l, a, b, d)
}

/// All chords (non-adjacent vertex pairs) of a convex `n`-gon, sorted.
pub fn all_chords(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if (a + 1) % n != b && (b + 1) % n != a {
                out.push((a, b));
            }
        }
    }
    out
}

/// A face of an embedded drawing given as its boundary walk: vertex `j`
/// followed by the edge from vertex `j` to vertex `j+1` along the walk.
/// The walk must have the face interior on its left.
pub type FaceWalk = Vec<(VertexId, EdgeId)>;

fn parabola_t(level: u32, i: usize) -> BigInt {
    BigInt::from(i).pow(level)
}

/// Fills a disk face with chords given by boundary-position pairs.
/// New edges are appended to the drawing; returns their ids in input order.
///
/// Chord crossings are exactly the interleaving position pairs; order along
/// each chord and crossing signs come from the parabola placement of the
/// boundary positions. Three concurrent chords on one parabola level are
/// resolved by escalating to `t -> t^level` until the crossing parameters
/// separate.
pub fn fill_face(
    d: &mut Drawing,
    boundary: &FaceWalk,
    chords: &[(usize, usize)],
) -> Result<Vec<EdgeId>, DrawingError> {
    let l = boundary.len();
    // Validate chord positions.
    for &(a, b) in chords {
        if a >= l || b >= l {
            return Err(DrawingError::NotRealizable(format!(
                "chord position ({a},{b}) outside face of size {l}"
            )));
        }
        if a == b {
            return Err(DrawingError::SelfLoop(d.edges.len()));
        }
        if !d.multigraph && ((a + 1) % l == b || (b + 1) % l == a) {
            return Err(DrawingError::DuplicateEdge(boundary[a.min(b)].1, d.edges.len()));
        }
    }
    // Orient every chord from its lower to its higher boundary position.
    let oriented: Vec<(usize, usize)> = chords.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    if !d.multigraph {
        let mut seen: BTreeMap<(VertexId, VertexId), ()> = BTreeMap::new();
        for &(u, v) in &d.edges {
            seen.insert((u.min(v), u.max(v)), ());
        }
        for &(a, b) in &oriented {
            let u = boundary[a].0;
            let v = boundary[b].0;
            let key = (u.min(v), u.max(v));
            if seen.insert(key, ()).is_some() {
                return Err(DrawingError::DuplicateEdge(usize::MAX, d.edges.len()));
            }
        }
    }

    // Crossing pairs are pure interleaving; parameters need the parabola.
    let k = oriented.len();
    let mut crossers: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            if interleaves(l, oriented[i], oriented[j]) {
                crossers[i].push(j);
                crossers[j].push(i);
            }
        }
    }

    // Find a parabola level on which no chord sees two crossings at the
    // same parameter (no three chords concurrent).
    let mut chosen: Option<(u32, Vec<Vec<usize>>)> = None;
    'level: for level in 1..=8u32 {
        let t: Vec<BigInt> = (0..l).map(|i| parabola_t(level, i)).collect();
        let param = |e: (usize, usize), f: (usize, usize)| -> Q {
            // Intersection abscissa of the parabola chords through
            // positions e and f: (t_p t_q - t_r t_s) / (t_p + t_q - t_r - t_s).
            let num = &t[e.0] * &t[e.1] - &t[f.0] * &t[f.1];
            let den = &t[e.0] + &t[e.1] - &t[f.0] - &t[f.1];
            Q::new(num, den)
        };
        let mut sorted: Vec<Vec<usize>> = Vec::with_capacity(k);
        for i in 0..k {
            let mut with_param: Vec<(Q, usize)> = crossers[i]
                .iter()
                .map(|&j| (param(oriented[i], oriented[j]), j))
                .collect();
            with_param.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
            for w in with_param.windows(2) {
                if w[0].0 == w[1].0 {
                    continue 'level; // concurrence; escalate
                }
            }
            sorted.push(with_param.into_iter().map(|(_, j)| j).collect());
        }
        chosen = Some((level, sorted));
        break;
    }
    let (level, sorted) = chosen.ok_or_else(|| {
        DrawingError::NotRealizable(format!("no concurrence-free placement for {k} chords"))
    })?;
    let t: Vec<BigInt> = (0..l).map(|i| parabola_t(level, i)).collect();

    // Create the edges.
    let base = d.edges.len();
    for &(a, b) in &oriented {
        d.edges.push((boundary[a].0, boundary[b].0));
        d.crossings.push(Vec::new());
    }
    for i in 0..k {
        d.crossings[base + i] = sorted[i].iter().map(|&j| base + j).collect();
    }
    // Signs: both chords run toward increasing t, so the cross product sign
    // is the sign of (t_r + t_s) - (t_p + t_q) for id order (i, j), i < j.
    for i in 0..k {
        for &j in &crossers[i] {
            if j > i {
                let (p, q) = oriented[i];
                let (r, s) = oriented[j];
                let diff = &t[r] + &t[s] - &t[p] - &t[q];
                debug_assert!(!diff.is_zero());
                let sign = if diff.is_positive() { Sign::Positive } else { Sign::Negative };
                d.signs.insert((base + i, base + j), sign);
            }
        }
    }

    // Splice the chord ends into the vertex rotations. At boundary position
    // j the face corner lies counterclockwise-between the edge toward
    // position j+1 and the edge toward position j-1; chords enter that wedge
    // ordered by increasing cyclic distance of their far position.
    for j in 0..l {
        let mut here: Vec<(usize, usize)> = Vec::new(); // (distance, chord idx)
        for (i, &(a, b)) in oriented.iter().enumerate() {
            if a == j {
                here.push(((b + l - j) % l, i));
            } else if b == j {
                here.push(((a + l - j) % l, i));
            }
        }
        if here.is_empty() {
            continue;
        }
        here.sort();
        let v = boundary[j].0;
        let out_edge = boundary[j].1;
        let out_end = edge_end_at(d, out_edge, v, j)?;
        let rot = &mut d.rotation[v];
        let pos = rot
            .iter()
            .position(|&ee| ee == EdgeEnd { edge: out_edge, end: out_end })
            .ok_or_else(|| {
                DrawingError::BadRotation(v, format!("boundary edge {out_edge} not in rotation"))
            })?;
        for (offset, &(_, i)) in here.iter().enumerate() {
            let (a, _) = oriented[i];
            let end = if a == j { End::Tail } else { End::Head };
            rot.insert(pos + 1 + offset, EdgeEnd { edge: base + i, end });
        }
    }
    Ok((base..base + k).collect())
}

/// The end of `edge` incident to `v`. For a parallel pair (multigraph) the
/// ambiguity does not arise: ends are keyed by edge id.
fn edge_end_at(
    d: &Drawing,
    edge: EdgeId,
    v: VertexId,
    j: usize,
) -> Result<End, DrawingError> {
    let (a, b) = d.edges[edge];
    if a == v {
        Ok(End::Tail)
    } else if b == v {
        Ok(End::Head)
    } else {
        Err(DrawingError::BadRotation(
            v,
            format!("face walk position {j} lists edge {edge} not incident to the vertex"),
        ))
    }
}

/// Builds the plain convex `n`-gon drawing: vertices on the parabola, the
/// `n` boundary edges, empty interior.
pub fn convex_polygon(n: usize) -> Drawing {
    let vertices = (0..n)
        .map(|i| Vertex {
            point: Some((Q::from_integer(BigInt::from(i)), Q::from_integer(BigInt::from(i * i)))),
        })
        .collect();
    let edges: Vec<(VertexId, VertexId)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut rotation: Vec<Vec<EdgeEnd>> = Vec::with_capacity(n);
    for i in 0..n {
        // Counterclockwise at vertex i: edge toward i+1 (this edge's tail),
        // then edge toward i-1 (that edge's head).
        rotation.push(alloc::vec![
            EdgeEnd { edge: i, end: End::Tail },
            EdgeEnd { edge: (i + n - 1) % n, end: End::Head },
        ]);
    }
    Drawing {
        multigraph: false,
        vertices,
        edges,
        crossings: alloc::vec![Vec::new(); n],
        rotation,
        signs: BTreeMap::new(),
    }
}

/// The inner face walk of the convex polygon: `0, 1, ..., n-1`.
pub fn inner_face_walk(n: usize) -> FaceWalk {
    (0..n).map(|i| (i, i)).collect()
}

/// The outer face walk of the convex polygon: `0, n-1, ..., 1`.
pub fn outer_face_walk(n: usize) -> FaceWalk {
    let mut walk = Vec::with_capacity(n);
    walk.push((0, n - 1));
    for v in (1..n).rev() {
        walk.push((v, v - 1));
    }
    walk
}

/// Drawing of a convex `n`-gon with straight-line chords. With
/// `duplicate_outer` every chord is also routed through the outer face
/// (mirror copy), which makes the result a non-homotopic multigraph.
pub fn from_convex(
    n: usize,
    chords: &[(usize, usize)],
    duplicate_outer: bool,
) -> Result<Drawing, DrawingError> {
    if n < 3 {
        return Err(DrawingError::NotRealizable(format!("polygon needs n >= 3, got {n}")));
    }
    let mut d = convex_polygon(n);
    d.multigraph = duplicate_outer;
    for &(a, b) in chords {
        if a >= n || b >= n {
            return Err(DrawingError::BadVertex(d.edges.len()));
        }
        if a == b {
            return Err(DrawingError::SelfLoop(d.edges.len()));
        }
    }
    fill_face(&mut d, &inner_face_walk(n), chords)?;
    if duplicate_outer {
        // Mirror the chords into the outer face: vertex v sits at outer
        // position (n - v) mod n.
        let mirrored: Vec<(usize, usize)> =
            chords.iter().map(|&(a, b)| ((n - a) % n, (n - b) % n)).collect();
        fill_face(&mut d, &outer_face_walk(n), &mirrored)?;
    }
    d.validate_simplicity()?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interleaving_matches_convexity() {
        assert!(interleaves(4, (0, 2), (1, 3)));
        assert!(!interleaves(6, (0, 2), (3, 5)));
        assert!(!interleaves(6, (0, 3), (3, 5))); // shared endpoint
        assert!(!interleaves(6, (1, 4), (2, 3))); // nested
    }

    #[test]
    fn two_interleaved_chords_cross_once() {
        let d = from_convex(4, &[(0, 2), (1, 3)], false).unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.crossings[4], alloc::vec![5]);
        assert_eq!(d.crossings[5], alloc::vec![4]);
    }

    #[test]
    fn convex_k6_counts() {
        let chords = all_chords(6);
        assert_eq!(chords.len(), 9);
        let d = from_convex(6, &chords, false).unwrap();
        // One crossing per 4-subset of the 6 points.
        assert_eq!(d.crossing_count(), 15);
        // Short chords cross 3 others, long diagonals 4.
        for (i, &(a, b)) in chords.iter().enumerate() {
            let span = (b - a).min(6 - (b - a));
            let expect = if span == 2 { 3 } else { 4 };
            assert_eq!(d.crossings[6 + i].len(), expect, "chord ({a},{b})");
        }
    }

    #[test]
    fn empty_pentagon_is_planar() {
        let d = from_convex(5, &[], false).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert!(d.is_k_planar(0));
    }

    #[test]
    fn brute_force_interleaving_oracle() {
        // Crossing counts equal the brute-force count of interleaving pairs.
        let chords = all_chords(7);
        let d = from_convex(7, &chords, false).unwrap();
        for (i, &ci) in chords.iter().enumerate() {
            let expect = chords.iter().filter(|&&cj| interleaves(7, ci, cj)).count();
            assert_eq!(d.crossings[7 + i].len(), expect);
        }
    }

    #[test]
    fn duplicate_outer_mirrors_crossings() {
        let chords = all_chords(5);
        let d = from_convex(5, &chords, true).unwrap();
        assert!(d.multigraph);
        assert_eq!(d.m(), 5 + 2 * chords.len());
        for i in 0..chords.len() {
            assert_eq!(d.crossings[5 + i].len(), d.crossings[5 + chords.len() + i].len());
        }
    }
}
