//! Parse an edge list (file argument or a built-in sample) and print its
//! structural facts.
//!
//!     cargo run --example parse_and_inspect -- path/to/tree.edgelist

use mpp_coloring::graph::parse_edge_list;

const SAMPLE: &str = "\
# spider with three legs of length two
n 7
0 1
1 2
0 3
3 4
0 5
5 6
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => SAMPLE.to_string(),
    };
    let g = parse_edge_list(&text)?;
    println!("vertices {}, edges {}", g.vertex_count(), g.edge_count());
    println!(
        "tree: {}, forest: {}, connected: {}",
        g.is_tree(),
        g.is_forest(),
        g.is_connected()
    );
    println!("leaves: {:?}", g.leaves());
    if let Ok((even, odd)) = g.bipartition() {
        println!("bipartition: {even:?} | {odd:?}");
    }
    if g.is_tree() {
        println!("even leaf distances: {}", g.has_even_leaf_distances()?);
    }
    let (rest, relabel) = g.remove_vertices(&[0])?;
    println!(
        "without vertex 0: {} components, kept labels {:?}",
        rest.connected_components().len(),
        relabel.kept()
    );
    print!("{}", g.to_edge_list());
    Ok(())
}
