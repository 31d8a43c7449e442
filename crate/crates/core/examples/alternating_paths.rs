//! Colorings, properness, and flipping a maximal alternating path.

use mpp_coloring::coloring::{flip_path, is_proper, maximal_alternating_path};
use mpp_coloring::{Edge, Graph, PartialColoring};

fn main() {
    let p5 = Graph::path(5);
    let e = Edge::of;
    let f = PartialColoring::from_classes(&[e(1, 2), e(3, 4)], &[e(0, 1), e(2, 3)]);
    println!("coloring:\n{}", f.to_text());
    println!(
        "proper: {}, sizes {:?}",
        is_proper(&p5, &f).unwrap(),
        f.class_sizes()
    );

    let path = maximal_alternating_path(&p5, &f, 0, e(0, 1)).unwrap();
    println!(
        "alternating path from 0: {:?} colors {:?}",
        path.vertices(),
        path.colors()
    );

    let flipped = flip_path(&f, &path).unwrap();
    println!("after flip:\n{}", flipped.to_text());
    println!(
        "proper: {}, sizes {:?}",
        is_proper(&p5, &flipped).unwrap(),
        flipped.class_sizes()
    );

    let clash = PartialColoring::from_classes(&[e(0, 1), e(1, 2)], &[]);
    println!(
        "two 0-edges at vertex 1 proper? {}",
        is_proper(&p5, &clash).unwrap()
    );
    println!("swapped:\n{}", f.swap_colors().to_text());
}
