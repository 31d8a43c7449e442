//! The two recoloring lemmas: force a pendant edge into the 0-class, then a
//! sibling pendant into the 1-class, without changing the class sizes.

use mpp_coloring::construct::{lemma1_enforce, lemma2_enforce};
use mpp_coloring::oracle::{enumerate_mpp, OracleBudget};
use mpp_coloring::{Color, Edge, Graph};

fn main() {
    // Two leaves 4 and 5 hang off vertex 3.
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
    let mpp = enumerate_mpp(&g, &OracleBudget::default()).unwrap();
    let best = mpp
        .colorings
        .iter()
        .map(|f| f.class_sizes().0)
        .max()
        .unwrap();
    // Start from a coloring where 3–4 is in the 1-class, so both lemmas act.
    let f = mpp
        .colorings
        .iter()
        .find(|f| f.class_sizes().0 == best && f.get(Edge::of(3, 4)) == Some(Color::One))
        .unwrap();
    println!("start ({:?}):\n{}", f.class_sizes(), f.to_text());

    let one = lemma1_enforce(&g, f, Edge::of(3, 4)).unwrap();
    println!(
        "3–4 forced into f0 ({:?}):\n{}",
        one.class_sizes(),
        one.to_text()
    );

    let two = lemma2_enforce(&g, f, 4, 5, 3).unwrap();
    println!(
        "3–4 in f0 and 3–5 in f1 ({:?}):\n{}",
        two.class_sizes(),
        two.to_text()
    );

    println!(
        "non-pendant edge: {}",
        lemma1_enforce(&g, f, Edge::of(1, 2)).unwrap_err()
    );
}
