//! Recursive construction of a maximum proper partial coloring whose 0-class
//! is a maximum matching, for trees whose leaves are pairwise at even
//! distance.
//!
//! Each step detects a local configuration, removes a few vertices, solves
//! the smaller tree(s) and extends the result by a constant number of
//! colored edges. Every step checks the expected `(λ, β)` gains against the
//! forest algorithms, and the final coloring must pass
//! [`verify_certificate`]; a miscount is reported, never patched.

mod cases;
mod certificate;
mod lemma;

pub use cases::{case_holds, detect_case, CaseId, CaseMatch};
pub use certificate::{verify_certificate, CertificateReport, Verdict};
pub use lemma::{lemma1_enforce, lemma2_enforce};

use thiserror::Error;

use crate::coloring::{Color, ColoringError, PartialColoring};
use crate::forest::{beta_tree, lambda_tree, ForestError};
use crate::graph::{Edge, Graph, GraphError, VertexId};
use crate::oracle::{enumerate_mpp, OracleBudget, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("edge {0} is not a pendant edge")]
    NotPendant(Edge),
    #[error("vertices {u} and {v} are not distinct leaves adjacent to {w}")]
    NotSiblingPendants {
        u: VertexId,
        v: VertexId,
        w: VertexId,
    },
    #[error("coloring is not a maximum proper coloring: {0}")]
    NotMpp(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no case matches tree:\n{graph}")]
    NoCaseMatches { graph: String },
    #[error("reduced graph left the even-leaf class:\n{graph}")]
    LeftEvenLeafClass { graph: String },
    #[error("certificate failed: {}", .reasons.join("; "))]
    CertificateFailed { reasons: Vec<String> },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Forest(#[from] ForestError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// One recursion step, in the labels of the input tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub case: CaseMatch,
    /// Vertices of the tree this step worked on, ascending.
    pub vertices: Vec<VertexId>,
    pub deleted: Vec<VertexId>,
    /// Changes applied to the sub-solution before extension; `None` clears.
    pub recolored: Vec<(Edge, Option<Color>)>,
    pub added: Vec<(Edge, Color)>,
    pub lambda: usize,
    pub beta: usize,
    /// `(λ, β)` of the reduced forest; `None` for base steps.
    pub reduced: Option<(usize, usize)>,
}

/// Steps in post-order: every step appears after the steps it builds on.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    /// Rebuilds the final coloring by applying each step's recolorings and
    /// additions in order.
    pub fn replay(&self) -> PartialColoring {
        let mut f = PartialColoring::new();
        for step in &self.steps {
            for &(e, c) in &step.recolored {
                f.assign(e, c);
            }
            for &(e, c) in &step.added {
                f.set(e, c);
            }
        }
        f
    }
}

/// Builds a proper coloring with `|f0| + |f1| = λ(g)` and `|f0| = β(g)`.
pub fn construct(g: &Graph) -> Result<(PartialColoring, ConstructionTrace), ConstructError> {
    if !g.is_tree() {
        return Err(ConstructError::PreconditionViolated(
            "graph is not a tree".into(),
        ));
    }
    if !g.has_even_leaf_distances()? {
        return Err(ConstructError::PreconditionViolated(
            "some pair of leaves is at odd distance".into(),
        ));
    }
    let mut trace = ConstructionTrace::default();
    let origin: Vec<VertexId> = g.vertices().collect();
    let f = solve(g, &origin, &mut trace)?;
    let report = verify_certificate(g, &f)?;
    if !report.passed() {
        return Err(ConstructError::CertificateFailed {
            reasons: report.reasons,
        });
    }
    Ok((f, trace))
}

fn solve(
    g: &Graph,
    origin: &[VertexId],
    trace: &mut ConstructionTrace,
) -> Result<PartialColoring, ConstructError> {
    if !g.has_even_leaf_distances()? {
        return Err(ConstructError::LeftEvenLeafClass {
            graph: relabelled(g, origin).to_edge_list(),
        });
    }
    if g.edge_count() == 0 {
        return Ok(PartialColoring::new());
    }
    let m = detect_case(g)?;
    let (lambda, _) = lambda_tree(g)?;
    let (beta, _) = beta_tree(g)?;
    let to_orig = |e: Edge| e.map(|v| origin[v]);

    if m.case == CaseId::Base {
        let f = best_base_coloring(g, beta)?;
        let (f0, f1) = f.class_sizes();
        if f0 + f1 != lambda || f0 != beta {
            return Err(ConstructError::CertificateFailed {
                reasons: vec![format!(
                    "base case on {} edges reached (|f0|, |f1|) = ({f0}, {f1}), expected λ {lambda}, β {beta}",
                    g.edge_count()
                )],
            });
        }
        trace.steps.push(TraceStep {
            case: m,
            vertices: origin.to_vec(),
            deleted: Vec::new(),
            recolored: Vec::new(),
            added: f.iter().map(|(e, c)| (to_orig(e), c)).collect(),
            lambda,
            beta,
            reduced: None,
        });
        return Ok(f);
    }

    let u = &m.u;
    let deleted: Vec<VertexId> = match m.case {
        CaseId::Case1 | CaseId::Case4 => vec![u[0], u[1]],
        CaseId::Case2 => vec![u[5], u[6]],
        CaseId::Case3 => vec![u[0], u[1], u[2]],
        CaseId::Case5 | CaseId::Case6 => u[..5].to_vec(),
        CaseId::Base => unreachable!(),
    };
    let (reduced, rel) = g.remove_vertices(&deleted)?;
    let reduced_origin: Vec<VertexId> = rel.kept().iter().map(|&v| origin[v]).collect();
    let (reduced_lambda, _) = lambda_tree(&reduced)?;
    let (reduced_beta, _) = beta_tree(&reduced)?;

    // Solve the reduced forest, one component at a time for Case 3.
    let mut sub = PartialColoring::new();
    if m.case == CaseId::Case3 {
        for (component, crel) in reduced.connected_components() {
            let component_origin: Vec<VertexId> =
                crel.kept().iter().map(|&v| reduced_origin[v]).collect();
            let part = solve(&component, &component_origin, trace)?;
            sub.extend_from(&part.map_vertices(|v| crel.old(v)));
        }
    } else {
        sub = solve(&reduced, &reduced_origin, trace)?;
    }

    let mut recolored = Vec::new();
    if m.case == CaseId::Case1 {
        let to_new = |v: VertexId| rel.new_label(v).expect("u2, u3 survive the deletion");
        let pendant = Edge::of(to_new(u[2]), to_new(u[3]));
        let enforced = lemma1_enforce(&reduced, &sub, pendant)?;
        recolored = diff(&sub, &enforced)
            .into_iter()
            .map(|(e, c)| (e.map(|v| reduced_origin[v]), c))
            .collect();
        sub = enforced;
    }

    let mut f = sub.map_vertices(|v| rel.old(v));
    let added: Vec<(Edge, Color)> = match m.case {
        CaseId::Case1 | CaseId::Case3 => vec![
            (Edge::of(u[0], u[1]), Color::Zero),
            (Edge::of(u[1], u[2]), Color::One),
        ],
        CaseId::Case2 => vec![(Edge::of(u[5], u[6]), Color::Zero)],
        CaseId::Case4 => vec![(Edge::of(u[0], u[1]), Color::Zero)],
        CaseId::Case5 | CaseId::Case6 => vec![
            (Edge::of(u[0], u[1]), Color::Zero),
            (Edge::of(u[1], u[2]), Color::One),
            (Edge::of(u[2], u[3]), Color::Zero),
            (Edge::of(u[3], u[4]), Color::One),
        ],
        CaseId::Base => unreachable!(),
    };
    for &(e, c) in &added {
        f.set(e, c);
    }

    let (lambda_gain, beta_gain) = m.case.gain().expect("recursive case");
    let mut reasons = Vec::new();
    if lambda != reduced_lambda + lambda_gain {
        reasons.push(format!(
            "case {}: λ {lambda} ≠ λ' {reduced_lambda} + {lambda_gain}",
            m.case
        ));
    }
    if beta != reduced_beta + beta_gain {
        reasons.push(format!(
            "case {}: β {beta} ≠ β' {reduced_beta} + {beta_gain}",
            m.case
        ));
    }
    if !reasons.is_empty() {
        return Err(ConstructError::CertificateFailed { reasons });
    }

    trace.steps.push(TraceStep {
        case: CaseMatch {
            case: m.case,
            u: m.u.iter().map(|&v| origin[v]).collect(),
        },
        vertices: origin.to_vec(),
        deleted: deleted.iter().map(|&v| origin[v]).collect(),
        recolored,
        added: added.into_iter().map(|(e, c)| (to_orig(e), c)).collect(),
        lambda,
        beta,
        reduced: Some((reduced_lambda, reduced_beta)),
    });
    Ok(f)
}

/// The first maximum coloring in enumeration order with the largest 0-class.
fn best_base_coloring(g: &Graph, beta: usize) -> Result<PartialColoring, ConstructError> {
    let all = enumerate_mpp(g, &OracleBudget::default())?;
    let mut best: Option<PartialColoring> = None;
    for f in all.colorings {
        let f0 = f.class_sizes().0;
        if best.as_ref().is_none_or(|b| f0 > b.class_sizes().0) {
            let done = f0 == beta;
            best = Some(f);
            if done {
                break;
            }
        }
    }
    Ok(best.unwrap_or_default())
}

/// Assignments of `after` that differ from `before`.
fn diff(before: &PartialColoring, after: &PartialColoring) -> Vec<(Edge, Option<Color>)> {
    let mut out: Vec<(Edge, Option<Color>)> = after
        .iter()
        .filter(|&(e, c)| before.get(e) != Some(c))
        .map(|(e, c)| (e, Some(c)))
        .collect();
    out.extend(
        before
            .iter()
            .filter(|&(e, _)| after.get(e).is_none())
            .map(|(e, _)| (e, None)),
    );
    out.sort_unstable();
    out
}

fn relabelled(g: &Graph, origin: &[VertexId]) -> Graph {
    let n = origin.iter().map(|&v| v + 1).max().unwrap_or(0);
    Graph::from_edges(n, g.edges().iter().map(|e| (origin[e.a()], origin[e.b()])))
        .expect("relabelling keeps a simple graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;

    fn check(g: &Graph) -> (PartialColoring, ConstructionTrace) {
        let (f, trace) = construct(g).unwrap();
        let report = verify_certificate(g, &f).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(trace.replay(), f);
        (f, trace)
    }

    #[test]
    fn p5() {
        let (f, trace) = check(&Graph::path(5));
        assert_eq!(f.class_sizes(), (2, 2));
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].case.case, CaseId::Base);
    }

    #[test]
    fn single_vertex() {
        let (f, trace) = construct(&Graph::empty(1)).unwrap();
        assert!(f.is_empty());
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn spider2() {
        let (f, _) = check(&Graph::spider(&[2, 2, 2]));
        assert_eq!(f.len(), 5);
        assert_eq!(f.class_sizes().0, 3);
    }

    #[test]
    fn recursive_cases() {
        let (_, trace) = check(&Graph::spider(&[4, 2, 2]));
        assert_eq!(trace.steps.last().unwrap().case.case, CaseId::Case1);
        let (_, trace) = check(&Graph::spider(&[2, 2, 2, 2]));
        assert_eq!(trace.steps.last().unwrap().case.case, CaseId::Case2);
        let (f, _) = check(&Graph::spider(&[2; 12]));
        assert_eq!(f.class_sizes().0, 12);
        assert!(is_proper(&Graph::spider(&[2; 12]), &f).unwrap());
    }

    #[test]
    fn rejects_outside_the_class() {
        assert!(matches!(
            construct(&Graph::path(2)),
            Err(ConstructError::PreconditionViolated(_))
        ));
        assert!(matches!(
            construct(&Graph::path(4)),
            Err(ConstructError::PreconditionViolated(_))
        ));
        let split = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert!(matches!(
            construct(&split),
            Err(ConstructError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn diff_reports_changes_and_clears() {
        let before = PartialColoring::from_classes(&[Edge::of(0, 1)], &[Edge::of(1, 2)]);
        let after = PartialColoring::from_classes(&[Edge::of(1, 2)], &[]);
        assert_eq!(
            diff(&before, &after),
            vec![(Edge::of(0, 1), None), (Edge::of(1, 2), Some(Color::Zero))]
        );
    }
}
