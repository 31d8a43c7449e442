//! Maximum proper partial 0–1 edge colorings.
//!
//! A partial 0–1 coloring assigns 0 or 1 to some edges of a graph; it is
//! proper when both color classes are matchings. λ(G) is the largest number
//! of edges such a coloring can cover, α(G) the largest single class among
//! colorings reaching λ, and β(G) the maximum matching size.
//!
//! The crate provides:
//!
//! * [`graph`]: simple graphs, the edge-list format, tree predicates;
//! * [`coloring`]: colorings, properness, alternating paths;
//! * [`forest`]: exact β and λ on forests;
//! * [`oracle`]: brute-force λ, α, β and enumeration of maximum colorings;
//! * [`construct`]: the recoloring lemmas, case detection, and the recursive
//!   construction of a maximum coloring whose 0-class is a maximum matching
//!   for trees with pairwise even leaf distances;
//! * [`generate`]: Prüfer enumeration and random even-leaf trees;
//! * [`cli`]: the report types and commands behind the `mppc` binary.
//!
//! ```
//! use mpp_coloring::{construct::construct, forest::beta_tree, graph::Graph};
//!
//! let spider = Graph::spider(&[2, 2, 2]);
//! let (coloring, _trace) = construct(&spider).unwrap();
//! assert_eq!(coloring.class_sizes().0, beta_tree(&spider).unwrap().0);
//! ```

pub mod cli;
pub mod coloring;
pub mod construct;
pub mod forest;
pub mod generate;
pub mod graph;
pub mod oracle;

pub use coloring::{Color, PartialColoring};
pub use graph::{Edge, Graph, VertexId};
