//! Which reduction case applies to a tree, and with which vertex tuple.

use mpp_coloring::construct::detect_case;
use mpp_coloring::Graph;

fn main() {
    let mut three_hubs = Vec::new();
    for k in 0..3 {
        let hub = 1 + 5 * k;
        three_hubs.extend([
            (0, hub),
            (hub, hub + 1),
            (hub + 1, hub + 2),
            (hub, hub + 3),
            (hub + 3, hub + 4),
        ]);
    }
    let samples = [
        ("spider 2,2,2", Graph::spider(&[2, 2, 2])),
        ("spider 4,2,2", Graph::spider(&[4, 2, 2])),
        ("spider 2,2,2,2", Graph::spider(&[2, 2, 2, 2])),
        ("star with 8 leaves", Graph::star(8)),
        ("three hubs", Graph::from_edges(16, three_hubs).unwrap()),
    ];
    for (name, g) in &samples {
        let m = detect_case(g).unwrap();
        println!("{name:>20}: case {} u = {:?}", m.case, m.u);
    }
}
