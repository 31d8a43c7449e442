//! Build a maximum coloring whose 0-class is a maximum matching, print the
//! recursion trace, and check the certificate.
//!
//!     cargo run --example construct_certificate -- [cherries] [seed]

use mpp_coloring::construct::{construct, verify_certificate};
use mpp_coloring::generate::random_even_leaf_tree;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let cherries = args.next().unwrap_or(8) as usize;
    let seed = args.next().unwrap_or(1);
    let g = random_even_leaf_tree(cherries, seed);
    println!(
        "tree: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );

    let (f, trace) = construct(&g).unwrap();
    for step in &trace.steps {
        println!(
            "case {:>4}  on {:>2} vertices  λ = {:>2}  β = {:>2}  deleted {:?}  added {:?}",
            step.case.case.label(),
            step.vertices.len(),
            step.lambda,
            step.beta,
            step.deleted,
            step.added
                .iter()
                .map(|(e, c)| format!("{e}→{c}"))
                .collect::<Vec<_>>()
        );
    }

    let report = verify_certificate(&g, &f).unwrap();
    println!(
        "total {} (λ {}), |f0| {} (β {}): {:?}",
        report.total, report.lambda_expected, report.f0_size, report.beta_expected, report.verdict
    );
}
