//! Lower-bound construction families, built as explicit drawings with
//! exact edge-count postconditions.
//!
//! Every family routes through the convex face-fill primitive: a planar
//! skeleton is assembled with explicit rotations, then selected faces are
//! filled with chord patterns. The dense 12-gon patterns (26 chords, at
//! most 5 crossings each, one distinguished diagonal) were found by
//! constrained search and are stored as constants, validated on load; the
//! cap fills of the cylinder construction are searched at generation time
//! against the actual conflict set, deterministically.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::convex::{self, fill_face, from_convex, interleaves, FaceWalk};
use crate::drawing::{Drawing, DrawingError, EdgeEnd, End, Vertex, VertexId};
use crate::planar::{planarize, NodeKind};

/// A validated dense chord pattern for a convex polygon face, with the
/// distinguished diagonal used by the cylinder assembly.
#[derive(Clone, Debug)]
pub struct ChordPattern {
    pub polygon: usize,
    pub chords: Vec<(usize, usize)>,
    /// The distinguished diagonal; its endpoints are the degree-2
    /// attachment positions of the cylinder assembly.
    pub green: (usize, usize),
    pub crossings_per_chord: Vec<usize>,
}

impl ChordPattern {
    pub fn max_crossings(&self) -> usize {
        self.crossings_per_chord.iter().copied().max().unwrap_or(0)
    }
}

/// The three stored 12-gon patterns, one per distinguished-diagonal
/// placement. Boundary positions alternate corner (even) and subdivision
/// (odd) roles in the cylinder; the diagonal always joins two odd
/// positions. Each pattern has 26 chords, none crossed more than five
/// times, contains the short chord around every odd position that is not
/// a diagonal endpoint, and omits the short chord around both diagonal
/// endpoints.
const PATTERN_GREEN_1_7: [(usize, usize); 26] = [
    (0, 7), (0, 8), (0, 9), (0, 10), (1, 3), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 11),
    (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (3, 5), (3, 6), (3, 7), (4, 6), (4, 7), (5, 7),
    (7, 9), (8, 10), (8, 11), (9, 11),
];
const PATTERN_GREEN_3_9: [(usize, usize); 26] = [
    (0, 2), (0, 9), (0, 10), (1, 3), (1, 9), (1, 10), (1, 11), (2, 8), (2, 9), (2, 10), (2, 11),
    (3, 5), (3, 6), (3, 7), (3, 8), (3, 9), (3, 10), (4, 6), (4, 7), (4, 8), (4, 9), (5, 7),
    (5, 8), (6, 8), (7, 9), (9, 11),
];
const PATTERN_GREEN_5_11: [(usize, usize); 26] = [
    (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 3), (1, 4), (1, 5), (1, 11), (2, 4), (2, 5),
    (3, 5), (4, 11), (5, 7), (5, 10), (5, 11), (6, 8), (6, 9), (6, 10), (6, 11), (7, 9), (7, 10),
    (7, 11), (8, 10), (8, 11), (9, 11),
];

fn crossings_within(n: usize, chords: &[(usize, usize)]) -> Vec<usize> {
    chords
        .iter()
        .map(|&c| chords.iter().filter(|&&o| interleaves(n, c, o)).count())
        .collect()
}

fn validated_pattern(
    chords: &[(usize, usize)],
    green: (usize, usize),
) -> Result<ChordPattern, DrawingError> {
    let n = 12;
    let counts = crossings_within(n, chords);
    let fail = |why: &str| Err(DrawingError::NotRealizable(format!("stored pattern invalid: {why}")));
    if chords.len() != 26 {
        return fail("expected 26 chords");
    }
    if counts.iter().any(|&c| c > 5) {
        return fail("a chord has more than 5 crossings");
    }
    if !chords.contains(&green) {
        return fail("distinguished diagonal missing");
    }
    let has = |a: usize, b: usize| chords.contains(&(a.min(b), a.max(b)));
    for &p in &[green.0, green.1] {
        if has((p + 11) % 12, (p + 1) % 12) {
            return fail("short chord around a diagonal endpoint present");
        }
    }
    for w in [1usize, 3, 5, 7, 9, 11] {
        if w != green.0 && w != green.1 && !has((w + 11) % 12, (w + 1) % 12) {
            return fail("short chord around a subdivision position missing");
        }
    }
    Ok(ChordPattern { polygon: n, chords: chords.into(), green, crossings_per_chord: counts })
}

/// The dense outer 12-gon pattern: 26 chords, each crossed at most five
/// times, with the distinguished diagonal at positions (1, 7).
pub fn chord_pattern_12gon() -> ChordPattern {
    validated_pattern(&PATTERN_GREEN_1_7, (1, 7)).expect("stored pattern validates")
}

fn pattern_for_green(green: (usize, usize)) -> ChordPattern {
    match green {
        (1, 7) => validated_pattern(&PATTERN_GREEN_1_7, (1, 7)),
        (3, 9) => validated_pattern(&PATTERN_GREEN_3_9, (3, 9)),
        (5, 11) => validated_pattern(&PATTERN_GREEN_5_11, (5, 11)),
        _ => Err(DrawingError::NotRealizable(format!("no stored pattern for diagonal {green:?}"))),
    }
    .expect("stored patterns validate")
}

/// Splits an n-gon into `x` faces of size 12 (fan of separators from
/// vertex 0) and fills each with the 26-chord pattern:
/// n = 10x+2 vertices, m = 37x+1 = 3.7n - 6.4 edges, outer 5-planar.
pub fn outer_5planar_family(x: usize) -> Result<Drawing, DrawingError> {
    filled_fan_family(x, 10, &chord_pattern_12gon().chords)
}

/// Splits an n-gon into `x` faces of size 7 and inserts all 14 chords into
/// every face: n = 5x+2, m = 20x+1, outer 6-planar.
pub fn outer_6planar_family(x: usize) -> Result<Drawing, DrawingError> {
    filled_fan_family(x, 5, &convex::all_chords(7))
}

/// Common fan construction: faces of size `step + 2` around vertex 0.
fn filled_fan_family(
    x: usize,
    step: usize,
    pattern: &[(usize, usize)],
) -> Result<Drawing, DrawingError> {
    if x < 1 {
        return Err(DrawingError::NotRealizable("family needs x >= 1".into()));
    }
    let n = step * x + 2;
    let mut d = convex::convex_polygon(n);
    // Separators: chords (0, step*j + 1) for j = 1..x-1.
    let separators: Vec<(usize, usize)> = (1..x).map(|j| (0, step * j + 1)).collect();
    let sep_ids = fill_face(&mut d, &convex::inner_face_walk(n), &separators)?;
    // Face j: vertex 0, then step*j+1 .. step*j+step+1.
    for j in 0..x {
        let mut walk: FaceWalk = Vec::with_capacity(step + 2);
        let first_edge = if j == 0 { 0 } else { sep_ids[j - 1] };
        walk.push((0, first_edge));
        for i in 0..=step {
            let v = step * j + 1 + i;
            let edge = if i < step {
                v // boundary edge v -> v+1
            } else if j + 1 < x {
                sep_ids[j]
            } else {
                n - 1 // boundary edge n-1 -> 0
            };
            walk.push((v, edge));
        }
        fill_face(&mut d, &walk, pattern)?;
    }
    d.validate_simplicity()?;
    Ok(d)
}

/// The outer 6-planar family with all interior edges copied to the outer
/// face: a non-homotopic multigraph with n = 5x+2, m = 35x = 7(n-2).
pub fn sixplanar_doubled(x: usize) -> Result<Drawing, DrawingError> {
    if x < 1 {
        return Err(DrawingError::NotRealizable("family needs x >= 1".into()));
    }
    let n = 5 * x + 2;
    let mut interior: Vec<(usize, usize)> = (1..x).map(|j| (0, 5 * j + 1)).collect();
    for j in 0..x {
        let base = 5 * j + 1;
        let face: Vec<usize> = core::iter::once(0).chain(base..base + 6).collect();
        for a in 0..7 {
            for b in a + 1..7 {
                if b != a + 1 && !(a == 0 && b == 6) {
                    interior.push((face[a].min(face[b]), face[a].max(face[b])));
                }
            }
        }
    }
    from_convex(n, &interior, true)
}

/// Crossing-free hexagonal tiling of a cylinder: x layers of three hexagons,
/// 6x+6 vertices, 9x+6 edges, 3x+2 faces of size six.
pub fn hex_cylinder(x: usize) -> Drawing {
    assert!(x >= 1, "cylinder needs x >= 1");
    let rows = x + 1;
    let n = 6 * rows;
    let vid = |r: usize, j: usize| 6 * r + (j % 6);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut row_edge = BTreeMap::new(); // (r, j) -> edge id of (r,j)-(r,j+1)
    for r in 0..rows {
        for j in 0..6 {
            row_edge.insert((r, j), edges.len());
            edges.push((vid(r, j), vid(r, j + 1)));
        }
    }
    let mut vert_edge = BTreeMap::new(); // (r, j) -> edge id of (r,j)-(r+1,j)
    for r in 0..x {
        for c in 0..3 {
            let j = 2 * c + (r % 2);
            vert_edge.insert((r, j), edges.len());
            edges.push((vid(r, j), vid(r + 1, j)));
        }
    }
    // Rotations: rows are concentric counterclockwise circles, row 0
    // outermost. At (r, j): next in row, inward vertical, previous in row,
    // outward vertical.
    let mut rotation: Vec<Vec<EdgeEnd>> = alloc::vec![Vec::new(); n];
    for r in 0..rows {
        for j in 0..6 {
            let v = vid(r, j);
            let mut rot = Vec::new();
            rot.push(EdgeEnd { edge: row_edge[&(r, j)], end: End::Tail });
            if let Some(&e) = vert_edge.get(&(r, j)) {
                rot.push(EdgeEnd { edge: e, end: End::Tail }); // inward
            }
            rot.push(EdgeEnd { edge: row_edge[&(r, (j + 5) % 6)], end: End::Head });
            if r > 0 {
                if let Some(&e) = vert_edge.get(&(r - 1, j)) {
                    rot.push(EdgeEnd { edge: e, end: End::Head }); // outward
                }
            }
            rotation[v] = rot;
        }
    }
    let m = edges.len();
    Drawing {
        multigraph: false,
        vertices: alloc::vec![Vertex { point: None }; n],
        edges,
        crossings: alloc::vec![Vec::new(); m],
        rotation,
        signs: BTreeMap::new(),
    }
}

/// Subdivides every edge of a crossing-free drawing once. Returns the new
/// drawing and the midpoint vertex of each original edge.
pub fn subdivide_all_edges(d: &Drawing) -> (Drawing, Vec<VertexId>) {
    let n = d.n();
    let m = d.m();
    assert!(d.crossings.iter().all(|c| c.is_empty()), "subdivision expects a plane drawing");
    let mut vertices = d.vertices.clone();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(2 * m);
    let mut mids = Vec::with_capacity(m);
    let mut rotation: Vec<Vec<EdgeEnd>> = alloc::vec![Vec::new(); n];
    for (e, &(u, v)) in d.edges.iter().enumerate() {
        let mid = vertices.len();
        vertices.push(Vertex { point: None });
        mids.push(mid);
        edges.push((u, mid)); // edge 2e
        edges.push((mid, v)); // edge 2e+1
        rotation.push(alloc::vec![
            EdgeEnd { edge: 2 * e, end: End::Head },
            EdgeEnd { edge: 2 * e + 1, end: End::Tail },
        ]);
    }
    for v in 0..n {
        rotation[v] = d.rotation[v]
            .iter()
            .map(|ee| match ee.end {
                End::Tail => EdgeEnd { edge: 2 * ee.edge, end: End::Tail },
                End::Head => EdgeEnd { edge: 2 * ee.edge + 1, end: End::Head },
            })
            .collect();
    }
    let m2 = edges.len();
    (
        Drawing {
            multigraph: d.multigraph,
            vertices,
            edges,
            crossings: alloc::vec![Vec::new(); m2],
            rotation,
            signs: BTreeMap::new(),
        },
        mids,
    )
}

/// A lateral 12-gon face of the dodecagonal cylinder, anchored so that
/// positions 0..4 walk its upper-row arc (corner, mid, corner, mid,
/// corner), 5 and 11 are the two column mids and 6..10 the lower arc.
struct AnchoredFace {
    layer: usize,
    walk: FaceWalk,
}

/// Deterministic xorshift generator for reproducible searches.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }
    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }
}

/// Greedy multi-restart search for a chord set of given size on an n-gon:
/// every chord crossed at most `k` times (and, when `require_crossed`, at
/// least once) within the set, banned pairs avoided. Deterministic for a
/// fixed seed.
pub fn search_chord_fill(
    n: usize,
    k: usize,
    banned: &BTreeSet<(usize, usize)>,
    target: usize,
    require_crossed: bool,
    seed: u64,
    restarts: usize,
) -> Option<Vec<(usize, usize)>> {
    let pool: Vec<(usize, usize)> = convex::all_chords(n)
        .into_iter()
        .filter(|c| !banned.contains(c))
        .collect();
    assert!(pool.len() <= 64, "bitmask search limited to 64 candidate chords");
    let cross: Vec<u64> = pool
        .iter()
        .map(|&c| {
            let mut mask = 0u64;
            for (j, &o) in pool.iter().enumerate() {
                if interleaves(n, c, o) {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect();
    let mut rng = XorShift::new(seed);
    let mut order: Vec<usize> = (0..pool.len()).collect();
    let mut best: Option<Vec<usize>> = None;
    for _ in 0..restarts {
        rng.shuffle(&mut order);
        let mut selected: Vec<usize> = Vec::new();
        let mut mask = 0u64;
        let mut counts = alloc::vec![0usize; pool.len()];
        for &i in &order {
            let hits = (cross[i] & mask).count_ones() as usize;
            if hits > k {
                continue;
            }
            let mut ok = true;
            for &s in &selected {
                if cross[i] & (1 << s) != 0 && counts[s] + 1 > k {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            for &s in &selected {
                if cross[i] & (1 << s) != 0 {
                    counts[s] += 1;
                }
            }
            counts[i] = hits;
            selected.push(i);
            mask |= 1 << i;
            if selected.len() == target {
                break;
            }
        }
        if require_crossed
            && selected.len() >= target
            && selected.iter().any(|&s| counts[s] == 0)
        {
            continue;
        }
        if best.as_ref().map_or(true, |b| selected.len() > b.len()) {
            best = Some(selected.clone());
            if selected.len() >= target {
                break;
            }
        }
    }
    let best = best?;
    if best.len() < target {
        return None;
    }
    let mut out: Vec<(usize, usize)> = best.iter().map(|&i| pool[i]).collect();
    out.sort();
    Some(out)
}

/// Simple topological 5-planar cylinder construction: n = 15x+12 vertices
/// and m = 93x+56 = 6.2n - 18.4 edges. The skeleton is the subdivided
/// hexagonal cylinder (12-framed, not triconnected); lateral 12-gons carry
/// the stored 26-chord patterns with their distinguished diagonals placed
/// so that no subdivision vertex sees two of them, one edge of each of the
/// 3x-2 resulting parallel pairs is dropped, and the two cap faces are
/// filled with 21 searched chords each.
pub fn dodecagonal_cylinder(x: usize) -> Result<Drawing, DrawingError> {
    if x < 1 {
        return Err(DrawingError::NotRealizable("cylinder needs x >= 1".into()));
    }
    let hex = hex_cylinder(x);
    let (mut d, _mids) = subdivide_all_edges(&hex);
    let n = d.n();
    debug_assert_eq!(n, 15 * x + 12);
    debug_assert_eq!(d.m(), 18 * x + 12);

    // Recover the faces of the skeleton and classify them.
    let p = planarize(&d)?;
    let corners = 6 * (x + 1);
    let row_of = |v: VertexId| -> Option<usize> { (v < corners).then(|| v / 6) };
    let row_mids = |row: usize| -> BTreeSet<VertexId> {
        // Midpoints of the six row edges of `row` (hex edge ids 6*row..).
        (0..6).map(|j| corners + 6 * row + j).collect()
    };

    let mut laterals: Vec<AnchoredFace> = Vec::new();
    let mut caps: Vec<(usize, FaceWalk)> = Vec::new(); // (row, walk)
    for f in &p.faces {
        let mut walk: FaceWalk = Vec::with_capacity(f.size);
        for &dart in &f.darts {
            let node = p.dart_origin[dart];
            let NodeKind::Original(v) = p.node_kinds[node] else {
                return Err(DrawingError::NotRealizable("skeleton face has a crossing node".into()));
            };
            let seg = p.dart_segment(dart);
            walk.push((v, p.segments[seg].parent));
        }
        debug_assert_eq!(walk.len(), 12);
        let rows: BTreeSet<usize> = walk.iter().filter_map(|&(v, _)| row_of(v)).collect();
        if rows.len() == 1 {
            caps.push((*rows.iter().next().unwrap(), walk));
        } else {
            debug_assert_eq!(rows.len(), 2);
            let layer = *rows.iter().next().unwrap();
            // Anchor: rotate so positions 0, 2, 4 are corners of the upper
            // row `layer` and position 6 is not.
            let is_upper = |v: VertexId| row_of(v) == Some(layer);
            let start = (0..12)
                .find(|&i| {
                    [0usize, 2, 4].iter().all(|&o| is_upper(walk[(i + o) % 12].0))
                        && !is_upper(walk[(i + 6) % 12].0)
                })
                .ok_or_else(|| {
                    DrawingError::NotRealizable("lateral face walk lacks an upper arc".into())
                })?;
            let walk: FaceWalk = (0..12).map(|o| walk[(start + o) % 12].clone()).collect();
            laterals.push(AnchoredFace { layer, walk });
        }
    }
    if caps.len() != 2 || laterals.len() != 3 * x {
        return Err(DrawingError::NotRealizable(format!(
            "unexpected face classification: {} caps, {} laterals",
            caps.len(),
            laterals.len()
        )));
    }
    laterals.sort_by_key(|f| (f.layer, f.walk[0].0));

    // Assign the three diagonal placements within each layer so that no
    // subdivision vertex is an endpoint of two distinguished diagonals and
    // both cap faces admit a 21-chord fill. The cyclic order in which the
    // three patterns meet a cap ring decides whether such a fill exists, so
    // the cap layers' assignments are retried over all permutations.
    let greens = [(1usize, 7usize), (3, 9), (5, 11)];
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let layer_faces = |layer: usize| -> Vec<usize> {
        (0..laterals.len()).filter(|&i| laterals[i].layer == layer).collect()
    };

    let build_schedule = |perm_top: usize, perm_bot: usize| -> Option<Vec<(usize, usize)>> {
        let mut used_mids: BTreeSet<VertexId> = BTreeSet::new();
        let mut assignment = alloc::vec![(0usize, 0usize); laterals.len()];
        for layer in 0..x {
            let faces = layer_faces(layer);
            let preferred = if layer == 0 {
                perm_top
            } else if layer == x - 1 {
                perm_bot
            } else {
                0
            };
            let mut chosen = None;
            'perm: for pi in 0..6 {
                let perm = perms[(preferred + pi) % 6];
                // Cap layers must use their designated permutation exactly.
                if (layer == 0 || layer == x - 1) && pi > 0 {
                    break;
                }
                let mut mids = Vec::new();
                for (slot, &fi) in faces.iter().enumerate() {
                    let g = greens[perm[slot]];
                    let a = laterals[fi].walk[g.0].0;
                    let b = laterals[fi].walk[g.1].0;
                    if used_mids.contains(&a)
                        || used_mids.contains(&b)
                        || mids.contains(&a)
                        || mids.contains(&b)
                    {
                        continue 'perm;
                    }
                    mids.push(a);
                    mids.push(b);
                }
                chosen = Some((perm, mids));
                break;
            }
            let (perm, mids) = chosen?;
            used_mids.extend(mids);
            for (slot, &fi) in faces.iter().enumerate() {
                assignment[fi] = greens[perm[slot]];
            }
        }
        // Exactly two diagonal endpoints on each cap ring.
        for (row, _) in &caps {
            if used_mids.intersection(&row_mids(*row)).count() != 2 {
                return None;
            }
        }
        Some(assignment)
    };

    let mut success: Option<(Drawing, usize)> = None;
    'attempts: for perm_top in 0..6 {
        for perm_bot in 0..6 {
            if x == 1 && perm_bot != perm_top {
                continue; // a single layer serves both caps
            }
            let Some(assignment) = build_schedule(perm_top, perm_bot) else { continue };
            // Collect the lateral chords, dropping one copy of each parallel
            // pair (the copy in the lexicographically smaller face).
            let mut trial = d.clone();
            let mut seen_pairs: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
            for &(u, v) in &trial.edges {
                seen_pairs.insert((u.min(v), u.max(v)));
            }
            let mut dropped = 0usize;
            let mut face_chords: Vec<Vec<(usize, usize)>> = Vec::with_capacity(laterals.len());
            for (fi, lateral) in laterals.iter().enumerate() {
                let pattern = pattern_for_green(assignment[fi]);
                let mut keep = Vec::new();
                for &(a, b) in &pattern.chords {
                    let u = lateral.walk[a].0;
                    let v = lateral.walk[b].0;
                    if seen_pairs.insert((u.min(v), u.max(v))) {
                        keep.push((a, b));
                    } else {
                        dropped += 1;
                    }
                }
                face_chords.push(keep);
            }
            if dropped != 3 * x - 2 {
                continue;
            }
            for (fi, lateral) in laterals.iter().enumerate() {
                fill_face(&mut trial, &lateral.walk, &face_chords[fi])?;
            }
            // Cap fills: 21 chords each, all of them crossed, avoiding every
            // vertex pair already joined.
            let mut ok = true;
            for (ci, (_row, walk)) in caps.iter().enumerate() {
                let mut banned: BTreeSet<(usize, usize)> = BTreeSet::new();
                for a in 0..12 {
                    for b in a + 1..12 {
                        let key = (walk[a].0.min(walk[b].0), walk[a].0.max(walk[b].0));
                        if seen_pairs.contains(&key) {
                            banned.insert((a, b));
                        }
                    }
                }
                match search_chord_fill(12, 5, &banned, 21, true, 0x5eed + ci as u64, 200_000) {
                    Some(fill) => {
                        for &(a, b) in &fill {
                            let u = walk[a].0;
                            let v = walk[b].0;
                            seen_pairs.insert((u.min(v), u.max(v)));
                        }
                        fill_face(&mut trial, walk, &fill)?;
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                success = Some((trial, dropped));
                break 'attempts;
            }
        }
    }
    let Some((d, _)) = success else {
        return Err(DrawingError::NotRealizable(
            "no diagonal schedule admits 21-chord cap fills".into(),
        ));
    };

    d.validate_simplicity()?;
    if d.m() != 93 * x + 56 {
        return Err(DrawingError::NotRealizable(format!(
            "edge count {} differs from 93x+56 = {}",
            d.m(),
            93 * x + 56
        )));
    }
    if !d.is_k_planar(5) {
        return Err(DrawingError::NotRealizable("cylinder construction is not 5-planar".into()));
    }
    Ok(d)
}

/// Sphere skeleton with t triangle faces and 3t heptagon faces
/// (n = 8t+2, 12t skeleton edges): a three-heptagon cap whose boundary
/// triangle nests t-1 drums, each a triangle plus three heptagons, closed
/// by a final triangle face.
pub fn heptagon_triangle_skeleton(t: usize) -> Drawing {
    assert!(t >= 1);
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut rotation: Vec<Vec<EdgeEnd>> = Vec::new();
    let mut new_vertex = |rotation: &mut Vec<Vec<EdgeEnd>>, vertices: &mut Vec<Vertex>| {
        vertices.push(Vertex { point: None });
        rotation.push(Vec::new());
        vertices.len() - 1
    };
    fn add_edge(edges: &mut Vec<(VertexId, VertexId)>, u: VertexId, v: VertexId) -> usize {
        edges.push((u, v));
        edges.len() - 1
    }
    // Cap: triangle a0 a1 a2 with spokes a_i - u_i - w_i - z drawn outside
    // it; the three heptagons wrap the outside, drums nest inside.
    let a: Vec<_> = (0..3).map(|_| new_vertex(&mut rotation, &mut vertices)).collect();
    let u: Vec<_> = (0..3).map(|_| new_vertex(&mut rotation, &mut vertices)).collect();
    let w: Vec<_> = (0..3).map(|_| new_vertex(&mut rotation, &mut vertices)).collect();
    let z = new_vertex(&mut rotation, &mut vertices);
    let tri: Vec<_> = (0..3).map(|i| add_edge(&mut edges, a[i], a[(i + 1) % 3])).collect();
    let au: Vec<_> = (0..3).map(|i| add_edge(&mut edges, a[i], u[i])).collect();
    let uw: Vec<_> = (0..3).map(|i| add_edge(&mut edges, u[i], w[i])).collect();
    let wz: Vec<_> = (0..3).map(|i| add_edge(&mut edges, w[i], z)).collect();
    for i in 0..3 {
        rotation[a[i]] = alloc::vec![
            EdgeEnd { edge: tri[i], end: End::Tail }, // toward a_{i+1}
            EdgeEnd { edge: tri[(i + 2) % 3], end: End::Head }, // toward a_{i-1}
            EdgeEnd { edge: au[i], end: End::Tail },  // outward spoke
        ];
        rotation[u[i]] = alloc::vec![
            EdgeEnd { edge: au[i], end: End::Head },
            EdgeEnd { edge: uw[i], end: End::Tail },
        ];
        rotation[w[i]] = alloc::vec![
            EdgeEnd { edge: uw[i], end: End::Head },
            EdgeEnd { edge: wz[i], end: End::Tail },
        ];
    }
    rotation[z] = alloc::vec![
        EdgeEnd { edge: wz[0], end: End::Head },
        EdgeEnd { edge: wz[2], end: End::Head },
        EdgeEnd { edge: wz[1], end: End::Head },
    ];

    // Drums nest inside the triangle; each drum hangs off the previous
    // bounding 3-cycle p and produces a new inner 3-cycle q.
    let mut p_cycle = [a[0], a[1], a[2]];
    let mut p_edges = [tri[0], tri[1], tri[2]]; // edge p_i -> p_{i+1}
    for _ in 1..t {
        let q: Vec<_> = (0..3).map(|_| new_vertex(&mut rotation, &mut vertices)).collect();
        let xv = new_vertex(&mut rotation, &mut vertices);
        let wb = new_vertex(&mut rotation, &mut vertices);
        let u1 = new_vertex(&mut rotation, &mut vertices);
        let u2 = new_vertex(&mut rotation, &mut vertices);
        let vv = new_vertex(&mut rotation, &mut vertices);
        let qe: Vec<_> = (0..3).map(|i| add_edge(&mut edges, q[i], q[(i + 1) % 3])).collect();
        let p0x = add_edge(&mut edges, p_cycle[0], xv);
        let xq0 = add_edge(&mut edges, xv, q[0]);
        let xw = add_edge(&mut edges, xv, wb);
        let wq0 = add_edge(&mut edges, wb, q[0]);
        let p1u1 = add_edge(&mut edges, p_cycle[1], u1);
        let u1u2 = add_edge(&mut edges, u1, u2);
        let u2q1 = add_edge(&mut edges, u2, q[1]);
        let p2v = add_edge(&mut edges, p_cycle[2], vv);
        let vq2 = add_edge(&mut edges, vv, q[2]);
        // The inner spoke slots in right after the cycle edge p_i -> p_{i+1}.
        let spoke = [p0x, p1u1, p2v];
        for i in 0..3 {
            let pos = rotation[p_cycle[i]]
                .iter()
                .position(|ee| *ee == EdgeEnd { edge: p_edges[i], end: End::Tail })
                .expect("cycle edge present");
            rotation[p_cycle[i]].insert(pos + 1, EdgeEnd { edge: spoke[i], end: End::Tail });
        }
        rotation[xv] = alloc::vec![
            EdgeEnd { edge: xw, end: End::Tail },
            EdgeEnd { edge: p0x, end: End::Head },
            EdgeEnd { edge: xq0, end: End::Tail },
        ];
        rotation[wb] = alloc::vec![
            EdgeEnd { edge: wq0, end: End::Tail },
            EdgeEnd { edge: xw, end: End::Head },
        ];
        rotation[u1] = alloc::vec![
            EdgeEnd { edge: p1u1, end: End::Head },
            EdgeEnd { edge: u1u2, end: End::Tail },
        ];
        rotation[u2] = alloc::vec![
            EdgeEnd { edge: u1u2, end: End::Head },
            EdgeEnd { edge: u2q1, end: End::Tail },
        ];
        rotation[vv] = alloc::vec![
            EdgeEnd { edge: p2v, end: End::Head },
            EdgeEnd { edge: vq2, end: End::Tail },
        ];
        rotation[q[0]] = alloc::vec![
            EdgeEnd { edge: qe[2], end: End::Head }, // toward q2
            EdgeEnd { edge: wq0, end: End::Head },
            EdgeEnd { edge: xq0, end: End::Head },
            EdgeEnd { edge: qe[0], end: End::Tail }, // toward q1
        ];
        rotation[q[1]] = alloc::vec![
            EdgeEnd { edge: qe[0], end: End::Head }, // toward q0
            EdgeEnd { edge: u2q1, end: End::Head },
            EdgeEnd { edge: qe[1], end: End::Tail }, // toward q2
        ];
        rotation[q[2]] = alloc::vec![
            EdgeEnd { edge: qe[1], end: End::Head }, // toward q1
            EdgeEnd { edge: vq2, end: End::Head },
            EdgeEnd { edge: qe[2], end: End::Tail }, // toward q0
        ];
        p_cycle = [q[0], q[1], q[2]];
        p_edges = [qe[0], qe[1], qe[2]];
    }
    let m = edges.len();
    Drawing {
        multigraph: false,
        vertices,
        edges,
        crossings: alloc::vec![Vec::new(); m],
        rotation,
        signs: BTreeMap::new(),
    }
}

/// Simple 6-planar drawings from the triangle-heptagon sphere tiling: every
/// heptagon face is filled with all of its chords that do not duplicate an
/// existing edge (equal pairs kept in the first face only). The skeleton
/// meets the face vector (f_3 = t, f_7 = 3t, n = 8t+2) exactly; the chord
/// count falls short of the full 14 per face by the number of duplicate
/// slots the finite sphere forces.
pub fn sixplanar_simple_tiling(t: usize) -> Result<Drawing, DrawingError> {
    if t < 1 {
        return Err(DrawingError::NotRealizable("tiling needs t >= 1".into()));
    }
    let mut d = heptagon_triangle_skeleton(t);
    let p = planarize(&d)?;
    let mut heptagons: Vec<FaceWalk> = Vec::new();
    for f in &p.faces {
        if f.size == 7 {
            let mut walk: FaceWalk = Vec::with_capacity(7);
            for &dart in &f.darts {
                let NodeKind::Original(v) = p.node_kinds[p.dart_origin[dart]] else {
                    unreachable!("plane skeleton");
                };
                walk.push((v, p.segments[p.dart_segment(dart)].parent));
            }
            heptagons.push(walk);
        }
    }
    if heptagons.len() != 3 * t {
        return Err(DrawingError::NotRealizable(format!(
            "expected {} heptagon faces, found {}",
            3 * t,
            heptagons.len()
        )));
    }
    heptagons.sort_by_key(|w| w.iter().map(|&(v, _)| v).min());
    let mut seen: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for &(u, v) in &d.edges {
        seen.insert((u.min(v), u.max(v)));
    }
    for walk in &heptagons {
        let mut keep = Vec::new();
        for a in 0..7usize {
            for b in a + 2..7 {
                if a == 0 && b == 6 {
                    continue;
                }
                let key = (walk[a].0.min(walk[b].0), walk[a].0.max(walk[b].0));
                if seen.insert(key) {
                    keep.push((a, b));
                }
            }
        }
        fill_face(&mut d, walk, &keep)?;
    }
    d.validate_simplicity()?;
    if !d.is_k_planar(6) {
        return Err(DrawingError::NotRealizable("tiling fill exceeded six crossings".into()));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::planarize;
    use crate::skeleton::skeleton_audit;

    #[test]
    fn stored_patterns_validate() {
        let p = chord_pattern_12gon();
        assert_eq!(p.chords.len(), 26);
        assert_eq!(p.max_crossings(), 5);
        assert!(26 <= 3 * 12 - 9);
        pattern_for_green((3, 9));
        pattern_for_green((5, 11));
    }

    #[test]
    fn outer_5planar_counts() {
        for x in 1..=3 {
            let d = outer_5planar_family(x).unwrap();
            assert_eq!(d.n(), 10 * x + 2);
            assert_eq!(d.m(), 37 * x + 1);
            assert!(d.is_k_planar(5));
            assert!(!d.is_k_planar(4));
            let s = skeleton_audit(&d).unwrap();
            assert!(s.outer_strict.is_some(), "family must be outer");
        }
    }

    #[test]
    fn hex_cylinder_counts() {
        for x in 1..=4 {
            let d = hex_cylinder(x);
            assert_eq!((d.n(), d.m()), (6 * x + 6, 9 * x + 6));
            let p = planarize(&d).unwrap();
            assert_eq!(p.face_count(), 3 * x + 2);
            assert!(p.faces.iter().all(|f| f.size == 6));
        }
        let s = skeleton_audit(&hex_cylinder(1)).unwrap();
        assert!(s.biconnected && s.h_framed && s.h == 6);
        assert!(!s.triconnected);
    }

    #[test]
    fn dodecagonal_cylinder_counts() {
        for x in 1..=2 {
            let d = dodecagonal_cylinder(x).unwrap();
            assert_eq!(d.n(), 15 * x + 12);
            assert_eq!(d.m(), 93 * x + 56);
            assert!(d.is_k_planar(5));
            let s = skeleton_audit(&d).unwrap();
            assert_eq!(s.skeleton_edges.len(), 18 * x + 12);
            assert!(s.h_framed && s.h == 12);
            assert!(!s.triconnected);
        }
    }

    #[test]
    fn outer_6planar_counts() {
        for x in 1..=3 {
            let d = outer_6planar_family(x).unwrap();
            assert_eq!(d.n(), 5 * x + 2);
            assert_eq!(d.m(), 20 * x + 1);
            assert!(d.is_k_planar(6));
            assert!(4 * (d.n() - 2) <= d.m());
        }
        // x = 1 is the convex K7 and its most crossed chord has 6 crossings.
        let d = outer_6planar_family(1).unwrap();
        assert_eq!((d.n(), d.m()), (7, 21));
        assert_eq!(d.crossing_profile().iter().copied().max(), Some(6));
    }

    #[test]
    fn sixplanar_doubled_counts() {
        for x in [1usize, 3] {
            let d = sixplanar_doubled(x).unwrap();
            assert!(d.multigraph);
            assert_eq!(d.n(), 5 * x + 2);
            assert_eq!(d.m(), 35 * x);
            assert!(d.is_k_planar(6));
        }
    }

    #[test]
    fn heptagon_tiling_face_vector() {
        for t in 1..=3 {
            let d = heptagon_triangle_skeleton(t);
            assert_eq!(d.n(), 8 * t + 2);
            assert_eq!(d.m(), 12 * t);
            let p = planarize(&d).unwrap();
            let mut f3 = 0;
            let mut f7 = 0;
            for f in &p.faces {
                match f.size {
                    3 => f3 += 1,
                    7 => f7 += 1,
                    s => panic!("face of size {s}"),
                }
            }
            assert_eq!((f3, f7), (t, 3 * t));
            let s = skeleton_audit(&d).unwrap();
            assert!(s.biconnected);
        }
    }

    #[test]
    fn sixplanar_simple_tiling_is_simple_and_6planar() {
        for t in 1..=2 {
            let d = sixplanar_simple_tiling(t).unwrap();
            assert_eq!(d.n(), 8 * t + 2);
            assert!(!d.multigraph);
            assert!(d.is_k_planar(6));
            d.validate_simplicity().unwrap();
        }
    }
}
