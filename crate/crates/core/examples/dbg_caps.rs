use kplanar_core::constructions::*;
use kplanar_core::planar::{planarize, NodeKind};
use std::collections::BTreeSet;

fn main() {
    let x = 1;
    let hex = hex_cylinder(x);
    let (d, _) = subdivide_all_edges(&hex);
    let p = planarize(&d).unwrap();
    // replicate classification: caps = faces whose corners are in one row
    let corners = 6 * (x + 1);
    for (fi, f) in p.faces.iter().enumerate() {
        let walk: Vec<usize> = f
            .darts
            .iter()
            .map(|&dart| match p.node_kinds[p.dart_origin[dart]] {
                NodeKind::Original(v) => v,
                _ => unreachable!(),
            })
            .collect();
        let rows: BTreeSet<usize> =
            walk.iter().filter(|&&v| v < corners).map(|&v| v / 6).collect();
        println!("face {fi}: rows {:?} walk {:?}", rows, walk);
    }
}
