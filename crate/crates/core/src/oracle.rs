//! Brute-force ground truth for β, λ, α and the set of maximum proper
//! partial colorings on small graphs.
//!
//! Every search walks the edges in lexicographic order. The coloring
//! searches branch uncolored < 0 < 1 per edge, keep per-vertex flags for an
//! incident 0-edge and 1-edge, and prune with "colored so far + edges left".

use thiserror::Error;

use crate::coloring::{Color, PartialColoring};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {edges} edges, oracle budget is {max_edges}")]
    BudgetExceeded { edges: usize, max_edges: usize },
}

/// Size caps for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_edges: usize,
    pub max_enumerated: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_edges: 14,
            max_enumerated: 1_000_000,
        }
    }
}

impl OracleBudget {
    pub fn with_max_edges(max_edges: usize) -> OracleBudget {
        OracleBudget {
            max_edges,
            ..OracleBudget::default()
        }
    }

    fn admit(&self, g: &Graph) -> Result<(), OracleError> {
        if g.edge_count() > self.max_edges {
            Err(OracleError::BudgetExceeded {
                edges: g.edge_count(),
                max_edges: self.max_edges,
            })
        } else {
            Ok(())
        }
    }
}

/// Result of [`enumerate_mpp`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MppEnumeration {
    pub lambda: usize,
    pub colorings: Vec<PartialColoring>,
    pub truncated: bool,
}

/// Exact maximum matching size by include/exclude branching.
pub fn oracle_beta(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    budget.admit(g)?;
    let edges = g.edges();
    let mut used = vec![false; g.vertex_count()];
    let mut best = 0;
    beta_search(edges, 0, 0, &mut used, &mut best);
    Ok(best)
}

fn beta_search(edges: &[Edge], i: usize, size: usize, used: &mut [bool], best: &mut usize) {
    if size + (edges.len() - i) <= *best {
        return;
    }
    if i == edges.len() {
        *best = size;
        return;
    }
    let (a, b) = edges[i].endpoints();
    if !used[a] && !used[b] {
        used[a] = true;
        used[b] = true;
        beta_search(edges, i + 1, size + 1, used, best);
        used[a] = false;
        used[b] = false;
    }
    beta_search(edges, i + 1, size, used, best);
}

/// Per-vertex "has a 0-edge / has a 1-edge" flags plus class counts.
struct SearchState<'g> {
    edges: &'g [Edge],
    touched: Vec<[bool; 2]>,
    sizes: [usize; 2],
}

impl<'g> SearchState<'g> {
    fn new(g: &'g Graph) -> Self {
        SearchState {
            edges: g.edges(),
            touched: vec![[false; 2]; g.vertex_count()],
            sizes: [0, 0],
        }
    }

    fn total(&self) -> usize {
        self.sizes[0] + self.sizes[1]
    }

    fn can_color(&self, i: usize, c: usize) -> bool {
        let (a, b) = self.edges[i].endpoints();
        !self.touched[a][c] && !self.touched[b][c]
    }

    fn toggle(&mut self, i: usize, c: usize, on: bool) {
        let (a, b) = self.edges[i].endpoints();
        self.touched[a][c] = on;
        self.touched[b][c] = on;
        if on {
            self.sizes[c] += 1;
        } else {
            self.sizes[c] -= 1;
        }
    }

    /// Visits every proper coloring reachable from edge `i` whose bound
    /// survives `keep`, calling `leaf` with the state and current choices.
    fn walk(
        &mut self,
        i: usize,
        choice: &mut Vec<Option<usize>>,
        keep: &mut dyn FnMut(&SearchState<'_>, usize) -> bool,
        leaf: &mut dyn FnMut(&SearchState<'_>, &[Option<usize>]),
    ) {
        let remaining = self.edges.len() - i;
        if !keep(self, remaining) {
            return;
        }
        if i == self.edges.len() {
            leaf(self, choice);
            return;
        }
        choice.push(None);
        self.walk(i + 1, choice, keep, leaf);
        choice.pop();
        for c in 0..2 {
            if self.can_color(i, c) {
                self.toggle(i, c, true);
                choice.push(Some(c));
                self.walk(i + 1, choice, keep, leaf);
                choice.pop();
                self.toggle(i, c, false);
            }
        }
    }
}

fn lambda_of(g: &Graph) -> usize {
    let best = std::cell::Cell::new(0usize);
    let mut state = SearchState::new(g);
    state.walk(
        0,
        &mut Vec::new(),
        &mut |s, remaining| s.total() + remaining > best.get(),
        &mut |s, _| best.set(best.get().max(s.total())),
    );
    best.get()
}

/// Exact λ: the largest `|f0| + |f1|` over proper partial colorings.
pub fn oracle_lambda(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    budget.admit(g)?;
    Ok(lambda_of(g))
}

/// Exact α: over colorings with `|f0| + |f1| = λ`, the largest class size.
pub fn oracle_alpha(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    budget.admit(g)?;
    let lambda = lambda_of(g);
    let best = std::cell::Cell::new(0usize);
    let mut state = SearchState::new(g);
    state.walk(
        0,
        &mut Vec::new(),
        &mut |s, remaining| {
            let larger = s.sizes[0].max(s.sizes[1]);
            s.total() + remaining >= lambda && larger + remaining > best.get()
        },
        &mut |s, _| {
            if s.total() == lambda {
                best.set(best.get().max(s.sizes[0].max(s.sizes[1])));
            }
        },
    );
    Ok(best.get())
}

/// Every maximum proper partial coloring, in branch order.
///
/// The list is cut at `budget.max_enumerated` entries with `truncated` set.
pub fn enumerate_mpp(g: &Graph, budget: &OracleBudget) -> Result<MppEnumeration, OracleError> {
    budget.admit(g)?;
    let lambda = lambda_of(g);
    let edges = g.edges();
    let cap = budget.max_enumerated;
    let found = std::cell::RefCell::new(Vec::new());
    let truncated = std::cell::Cell::new(false);
    let mut state = SearchState::new(g);
    state.walk(
        0,
        &mut Vec::new(),
        &mut |s, remaining| !truncated.get() && s.total() + remaining >= lambda,
        &mut |s, choice| {
            if s.total() != lambda {
                return;
            }
            let mut found = found.borrow_mut();
            if found.len() == cap {
                truncated.set(true);
                return;
            }
            found.push(
                choice
                    .iter()
                    .zip(edges)
                    .filter_map(|(c, &e)| c.and_then(Color::from_index).map(|c| (e, c)))
                    .collect(),
            );
        },
    );
    Ok(MppEnumeration {
        lambda,
        colorings: found.into_inner(),
        truncated: truncated.get(),
    })
}
