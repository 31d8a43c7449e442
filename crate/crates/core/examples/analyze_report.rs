//! The JSON analysis report for a few graphs, as `mppc analyze` prints it.

use mpp_coloring::cli::{analyze, to_json, AnalyzeOptions};
use mpp_coloring::Graph;

fn main() {
    let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    let opts = AnalyzeOptions::default();
    for g in [Graph::path(5), Graph::path(4), triangle, Graph::path(30)] {
        println!("{}", to_json(&analyze(&g, &opts).unwrap(), false));
    }
}
