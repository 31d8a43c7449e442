use serde::Serialize;

use super::ConstructError;
use crate::coloring::{is_proper, PartialColoring};
use crate::forest::{beta_tree, lambda_tree};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Measured properties of a coloring against the forest reference values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub proper: bool,
    pub total: usize,
    pub lambda_expected: usize,
    pub f0_size: usize,
    pub beta_expected: usize,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Checks that `f` is proper, has `|f0| + |f1| = λ(g)` and `|f0| = β(g)`.
pub fn verify_certificate(
    g: &Graph,
    f: &PartialColoring,
) -> Result<CertificateReport, ConstructError> {
    let (lambda_expected, _) = lambda_tree(g)?;
    let (beta_expected, _) = beta_tree(g)?;
    let proper = is_proper(g, f)?;
    let (f0_size, f1_size) = f.class_sizes();
    let total = f0_size + f1_size;

    let mut reasons = Vec::new();
    if !proper {
        reasons.push("not proper".to_string());
    }
    if total != lambda_expected {
        reasons.push(format!("total {total} ≠ λ {lambda_expected}"));
    }
    if f0_size != beta_expected {
        reasons.push(format!("|f0| {f0_size} ≠ β {beta_expected}"));
    }
    let verdict = if reasons.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(CertificateReport {
        proper,
        total,
        lambda_expected,
        f0_size,
        beta_expected,
        verdict,
        reasons,
    })
}
