fn main() {
    let d = kplanar_core::constructions::dodecagonal_cylinder(1).unwrap();
    println!("n={} m={}", d.n(), d.m());
    for e in 30..d.m() {
        if d.crossings[e].is_empty() {
            println!("uncrossed chord edge {} = {:?}", e, d.edges[e]);
        }
    }
}
