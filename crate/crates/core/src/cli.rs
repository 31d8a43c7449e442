//! Commands behind the `mppc` binary, exposed as plain functions returning
//! serializable reports so they can be driven and tested without a process.
//!
//! Exit codes: 0 success, 1 verification or sweep failure, 2 unreadable
//! input or invalid parameters, 3 oracle budget exceeded under `--exact`,
//! 4 construction precondition violated, 5 certificate failed.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{parse_coloring, Color, ColoringError, PartialColoring};
use crate::construct::{
    construct, verify_certificate, CaseId, CertificateReport, ConstructError, ConstructionTrace,
};
use crate::forest::{beta_tree, lambda_tree};
use crate::generate::{
    all_labeled_trees, labeled_tree_at, labeled_tree_count, random_even_leaf_tree, GenerateError,
    MAX_ENUMERATED_N, RNG_NAME,
};
use crate::graph::{parse_edge_list, Graph, GraphError};
use crate::oracle::{oracle_alpha, oracle_beta, oracle_lambda, OracleBudget, OracleError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;
pub const EXIT_CERTIFICATE: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Budget(#[from] OracleError),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Certificate(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Precondition(_) => EXIT_PRECONDITION,
            CliError::Certificate(_) => EXIT_CERTIFICATE,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ColoringError> for CliError {
    fn from(e: ColoringError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GenerateError> for CliError {
    fn from(e: GenerateError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::PreconditionViolated(_) => CliError::Precondition(e.to_string()),
            ConstructError::Coloring(c) => c.into(),
            ConstructError::Graph(g) => g.into(),
            other => CliError::Certificate(other.to_string()),
        }
    }
}

/// Reads a file, or standard input when `path` is `None`.
pub fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) => {
            fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))
        }
        None => {
            std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Input(e.to_string()))
        }
    }
}

pub fn read_graph(path: Option<&Path>) -> Result<Graph, CliError> {
    Ok(parse_edge_list(&read_input(path)?)?)
}

pub fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    let out = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    out.expect("reports serialize")
}

/// A measured value or the reason it is missing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Measured {
    Value(usize),
    Unavailable(String),
}

impl Measured {
    pub fn value(&self) -> Option<usize> {
        match self {
            Measured::Value(v) => Some(*v),
            Measured::Unavailable(_) => None,
        }
    }
}

const UNAVAILABLE: &str = "unavailable (budget)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    TreeDp,
    Oracle,
    Unavailable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProvenanceMap {
    pub beta: Provenance,
    pub lambda: Provenance,
    pub alpha: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub edges: usize,
    pub is_tree: bool,
    pub is_forest: bool,
    /// `None` when the graph is not a tree.
    pub even_leaf_class: Option<bool>,
    pub beta: Measured,
    pub lambda: Measured,
    pub alpha: Measured,
    pub provenance: ProvenanceMap,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub budget: OracleBudget,
    /// Fail instead of reporting `unavailable` when the oracle is needed but
    /// over budget.
    pub exact: bool,
}

fn budgeted(
    result: Result<usize, OracleError>,
    exact: bool,
) -> Result<(Measured, Provenance), CliError> {
    match result {
        Ok(v) => Ok((Measured::Value(v), Provenance::Oracle)),
        Err(e) if exact => Err(e.into()),
        Err(_) => Ok((
            Measured::Unavailable(UNAVAILABLE.into()),
            Provenance::Unavailable,
        )),
    }
}

/// λ, α, β and structural facts for one graph.
pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    let is_tree = g.is_tree();
    let is_forest = g.is_forest();
    let even_leaf_class = if is_tree {
        Some(g.has_even_leaf_distances()?)
    } else {
        None
    };
    let budget = &opts.budget;
    let ((beta, beta_src), (lambda, lambda_src)) = if is_forest {
        let b = beta_tree(g).expect("forest").0;
        let l = lambda_tree(g).expect("forest").0;
        (
            (Measured::Value(b), Provenance::TreeDp),
            (Measured::Value(l), Provenance::TreeDp),
        )
    } else {
        (
            budgeted(oracle_beta(g, budget), opts.exact)?,
            budgeted(oracle_lambda(g, budget), opts.exact)?,
        )
    };
    let (alpha, alpha_src) = budgeted(oracle_alpha(g, budget), opts.exact)?;

    let mut notes = Vec::new();
    if even_leaf_class == Some(true) {
        if let Ok((f, _)) = construct(g) {
            if verify_certificate(g, &f).is_ok_and(|r| r.passed()) {
                notes.push("alpha=beta by construction".to_string());
            }
        }
    }
    Ok(AnalysisReport {
        n: g.vertex_count(),
        edges: g.edge_count(),
        is_tree,
        is_forest,
        even_leaf_class,
        beta,
        lambda,
        alpha,
        provenance: ProvenanceMap {
            beta: beta_src,
            lambda: lambda_src,
            alpha: alpha_src,
        },
        notes,
    })
}

/// Coloring classes as sorted `[u, v]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringJson {
    #[serde(rename = "0")]
    pub zero: Vec<[usize; 2]>,
    #[serde(rename = "1")]
    pub one: Vec<[usize; 2]>,
}

impl From<&PartialColoring> for ColoringJson {
    fn from(f: &PartialColoring) -> Self {
        let pairs = |c| f.class(c).iter().map(|e| [e.a(), e.b()]).collect();
        ColoringJson {
            zero: pairs(Color::Zero),
            one: pairs(Color::One),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStepJson {
    pub case: String,
    pub u: Vec<usize>,
    pub deleted: Vec<usize>,
    pub recolored: Vec<(usize, usize, Option<usize>)>,
    pub added: Vec<(usize, usize, usize)>,
    pub lambda: usize,
    pub beta: usize,
    pub reduced_lambda: Option<usize>,
    pub reduced_beta: Option<usize>,
}

fn trace_json(trace: &ConstructionTrace) -> Vec<TraceStepJson> {
    trace
        .steps
        .iter()
        .map(|s| TraceStepJson {
            case: s.case.case.label().to_string(),
            u: s.case.u.clone(),
            deleted: s.deleted.clone(),
            recolored: s
                .recolored
                .iter()
                .map(|(e, c)| (e.a(), e.b(), c.map(Color::index)))
                .collect(),
            added: s
                .added
                .iter()
                .map(|(e, c)| (e.a(), e.b(), c.index()))
                .collect(),
            lambda: s.lambda,
            beta: s.beta,
            reduced_lambda: s.reduced.map(|r| r.0),
            reduced_beta: s.reduced.map(|r| r.1),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructReport {
    pub coloring: ColoringJson,
    pub lambda: usize,
    pub beta: usize,
    pub certificate: &'static str,
    pub trace: Vec<TraceStepJson>,
}

/// Runs the construction; with `verify`, re-checks the certificate before
/// reporting.
pub fn construct_command(
    g: &Graph,
    verify: bool,
) -> Result<(ConstructReport, PartialColoring), CliError> {
    let (f, trace) = construct(g)?;
    let report = verify_certificate(g, &f)?;
    if verify && !report.passed() {
        return Err(CliError::Certificate(report.reasons.join("; ")));
    }
    Ok((
        ConstructReport {
            coloring: (&f).into(),
            lambda: report.lambda_expected,
            beta: report.beta_expected,
            certificate: "pass",
            trace: trace_json(&trace),
        },
        f,
    ))
}

/// Checks a coloring file against a forest. Foreign edges are input errors.
pub fn verify_command(g: &Graph, coloring_text: &str) -> Result<CertificateReport, CliError> {
    let f = parse_coloring(coloring_text)?;
    if !g.is_forest() {
        return Err(CliError::Input("graph is not a forest".into()));
    }
    Ok(verify_certificate(g, &f)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenKind {
    PruferAll {
        n: usize,
        count: Option<usize>,
    },
    RandomEvenLeaf {
        cherries: usize,
        seed: u64,
        count: usize,
    },
}

/// Edge lists separated by `---` lines.
pub fn gen_command(kind: &GenKind) -> Result<String, CliError> {
    let mut docs = Vec::new();
    match *kind {
        GenKind::PruferAll { n, count } => {
            let trees = all_labeled_trees(n)?;
            for g in trees.take(count.unwrap_or(usize::MAX)) {
                docs.push(g.to_edge_list());
            }
        }
        GenKind::RandomEvenLeaf {
            cherries,
            seed,
            count,
        } => {
            if cherries == 0 {
                return Err(CliError::Input("--cherries must be at least 1".into()));
            }
            for i in 0..count as u64 {
                let s = seed.wrapping_add(i);
                let g = random_even_leaf_tree(cherries, s);
                docs.push(format!(
                    "# random-even-leaf cherries={cherries} seed={s} rng={RNG_NAME}\n{}",
                    g.to_edge_list()
                ));
            }
        }
    }
    Ok(docs.join("---\n"))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub labeled_trees: usize,
    pub even_leaf_trees: usize,
    pub constructions: usize,
    pub certificates_passed: usize,
    pub alpha_beta_confirmed: usize,
    pub alpha_beta_unchecked: usize,
    pub case_histogram: BTreeMap<String, usize>,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub n: usize,
    pub index: usize,
    pub reason: String,
    pub graph: String,
    pub dumped_to: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub rows: Vec<SweepRow>,
    pub failures: Vec<SweepFailure>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    even: usize,
    constructions: usize,
    passed: usize,
    confirmed: usize,
    unchecked: usize,
    cases: [usize; 7],
    failures: Vec<(usize, String)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.even += other.even;
        self.constructions += other.constructions;
        self.passed += other.passed;
        self.confirmed += other.confirmed;
        self.unchecked += other.unchecked;
        for (a, b) in self.cases.iter_mut().zip(other.cases) {
            *a += b;
        }
        self.failures.extend(other.failures);
        self
    }

    fn record(mut self, index: usize, g: &Graph, budget: &OracleBudget) -> Tally {
        if !g.has_even_leaf_distances().unwrap_or(false) {
            return self;
        }
        self.even += 1;
        self.constructions += 1;
        match construct(g) {
            Ok((f, trace)) => match verify_certificate(g, &f) {
                Ok(r) if r.passed() => {
                    self.passed += 1;
                    for step in &trace.steps {
                        self.cases[case_slot(step.case.case)] += 1;
                    }
                }
                Ok(r) => self.failures.push((index, r.reasons.join("; "))),
                Err(e) => self.failures.push((index, e.to_string())),
            },
            Err(e) => self.failures.push((index, e.to_string())),
        }
        match (oracle_alpha(g, budget), oracle_beta(g, budget)) {
            (Ok(a), Ok(b)) if a == b => self.confirmed += 1,
            (Ok(a), Ok(b)) => self.failures.push((index, format!("oracle α {a} ≠ β {b}"))),
            _ => self.unchecked += 1,
        }
        self
    }
}

fn case_slot(c: CaseId) -> usize {
    match c {
        CaseId::Base => 0,
        CaseId::Case1 => 1,
        CaseId::Case2 => 2,
        CaseId::Case3 => 3,
        CaseId::Case4 => 4,
        CaseId::Case5 => 5,
        CaseId::Case6 => 6,
    }
}

const CASE_LABELS: [&str; 7] = ["BASE", "1", "2", "3", "4", "5", "6"];

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    pub budget: OracleBudget,
    /// Where failing trees are written as `.edgelist` files.
    pub out: Option<PathBuf>,
}

/// Exhaustive check over every labeled tree with `2 ≤ n ≤ max_n`.
///
/// Trees are processed in parallel; counts are merged and failures sorted
/// by enumeration index, so the summary does not depend on scheduling.
pub fn sweep_command(max_n: usize, opts: &SweepOptions) -> Result<SweepSummary, CliError> {
    if max_n > MAX_ENUMERATED_N {
        return Err(GenerateError::TooLarge { n: max_n }.into());
    }
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for n in 2..=max_n {
        let count = labeled_tree_count(n);
        let mut tally = (0..count)
            .into_par_iter()
            .fold(Tally::default, |t, i| {
                let g = labeled_tree_at(n, i).expect("index within count");
                t.record(i, &g, &opts.budget)
            })
            .reduce(Tally::default, Tally::merge);
        tally.failures.sort();
        let case_histogram = CASE_LABELS
            .iter()
            .zip(tally.cases)
            .filter(|&(_, c)| c > 0)
            .map(|(l, c)| (l.to_string(), c))
            .collect();
        rows.push(SweepRow {
            n,
            labeled_trees: count,
            even_leaf_trees: tally.even,
            constructions: tally.constructions,
            certificates_passed: tally.passed,
            alpha_beta_confirmed: tally.confirmed,
            alpha_beta_unchecked: tally.unchecked,
            case_histogram,
            failures: tally.failures.len(),
        });
        for (index, reason) in tally.failures {
            let graph = labeled_tree_at(n, index)?.to_edge_list();
            let dumped_to = match &opts.out {
                Some(dir) => {
                    fs::create_dir_all(dir).map_err(|e| CliError::Input(e.to_string()))?;
                    let path = dir.join(format!("n{n}_tree{index}.edgelist"));
                    fs::write(&path, &graph).map_err(|e| CliError::Input(e.to_string()))?;
                    Some(path.display().to_string())
                }
                None => None,
            };
            failures.push(SweepFailure {
                n,
                index,
                reason,
                graph,
                dumped_to,
            });
        }
    }
    Ok(SweepSummary { rows, failures })
}
