//! The six local configurations that drive the recursive construction.

use std::fmt;

use super::ConstructError;
use crate::graph::{Graph, VertexId};

/// Which configuration fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseId {
    Base,
    Case1,
    Case2,
    Case3,
    Case4,
    Case5,
    Case6,
}

impl CaseId {
    pub const RECURSIVE: [CaseId; 6] = [
        CaseId::Case1,
        CaseId::Case2,
        CaseId::Case3,
        CaseId::Case4,
        CaseId::Case5,
        CaseId::Case6,
    ];

    /// `"BASE"` or `"1"`..`"6"`.
    pub fn label(self) -> &'static str {
        match self {
            CaseId::Base => "BASE",
            CaseId::Case1 => "1",
            CaseId::Case2 => "2",
            CaseId::Case3 => "3",
            CaseId::Case4 => "4",
            CaseId::Case5 => "5",
            CaseId::Case6 => "6",
        }
    }

    /// Increase of `(λ, β)` from the reduced graph to the current one.
    pub fn gain(self) -> Option<(usize, usize)> {
        match self {
            CaseId::Base => None,
            CaseId::Case1 => Some((2, 1)),
            CaseId::Case2 => Some((1, 1)),
            CaseId::Case3 => Some((2, 1)),
            CaseId::Case4 => Some((1, 1)),
            CaseId::Case5 | CaseId::Case6 => Some((4, 2)),
        }
    }

    fn pattern(self) -> Option<&'static Pattern> {
        let i = match self {
            CaseId::Base => return None,
            CaseId::Case1 => 0,
            CaseId::Case2 => 1,
            CaseId::Case3 => 2,
            CaseId::Case4 => 3,
            CaseId::Case5 => 4,
            CaseId::Case6 => 5,
        };
        Some(&PATTERNS[i])
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A detected configuration and the vertex tuple `(u0, u1, …)` realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseMatch {
    pub case: CaseId,
    pub u: Vec<VertexId>,
}

impl CaseMatch {
    pub fn base() -> CaseMatch {
        CaseMatch {
            case: CaseId::Base,
            u: Vec::new(),
        }
    }
}

/// Degree and adjacency constraints on an ordered vertex tuple. Vertices are
/// pairwise distinct; degrees not listed are unconstrained.
struct Pattern {
    size: usize,
    degrees: &'static [(usize, usize)],
    edges: &'static [(usize, usize)],
}

const PATTERNS: [Pattern; 6] = [
    // pendant path u0-u1-u2-u3 with d(u1) = d(u2) = 2
    Pattern {
        size: 4,
        degrees: &[(0, 1), (1, 2), (2, 2)],
        edges: &[(0, 1), (1, 2), (2, 3)],
    },
    // three legs of length two at u2
    Pattern {
        size: 7,
        degrees: &[(0, 1), (4, 1), (6, 1), (1, 2), (3, 2), (5, 2)],
        edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)],
    },
    // two leaves u0, u2 on u1
    Pattern {
        size: 3,
        degrees: &[(0, 1), (2, 1)],
        edges: &[(0, 1), (1, 2)],
    },
    // d(u2) = 3 with legs u1-u0, u5-u6 and a degree-2 neighbour u3
    Pattern {
        size: 7,
        degrees: &[(0, 1), (6, 1), (1, 2), (3, 2), (5, 2), (2, 3)],
        edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (2, 5)],
    },
    // u2 with legs u1-u0, u3-u4 hanging off u5 of degree 3 with leaf u6
    Pattern {
        size: 8,
        degrees: &[(0, 1), (4, 1), (6, 1), (1, 2), (3, 2), (2, 3), (5, 3)],
        edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (2, 5), (5, 7)],
    },
    // two double-leg vertices u2, u7 joined through u10
    Pattern {
        size: 11,
        degrees: &[
            (0, 1),
            (4, 1),
            (5, 1),
            (9, 1),
            (1, 2),
            (3, 2),
            (6, 2),
            (8, 2),
            (2, 3),
            (7, 3),
        ],
        edges: &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (2, 10),
            (7, 10),
        ],
    },
];

impl Pattern {
    fn degree_of(&self, pos: usize) -> Option<usize> {
        self.degrees
            .iter()
            .find(|&&(p, _)| p == pos)
            .map(|&(_, d)| d)
    }

    /// The earliest assigned position adjacent to `pos`, if any.
    fn anchor(&self, pos: usize) -> Option<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a < pos && b == pos, b < pos && a == pos) {
                (true, _) => Some(a),
                (_, true) => Some(b),
                _ => None,
            })
            .min()
    }

    fn fits(&self, g: &Graph, tuple: &[VertexId], pos: usize, v: VertexId) -> bool {
        if tuple.contains(&v) {
            return false;
        }
        if let Some(d) = self.degree_of(pos) {
            if g.deg(v) != d {
                return false;
            }
        }
        self.edges.iter().all(|&(a, b)| {
            if b == pos && a < pos {
                g.has_edge(tuple[a], v)
            } else if a == pos && b < pos {
                g.has_edge(tuple[b], v)
            } else {
                true
            }
        })
    }

    /// Depth-first search assigning positions in order, each from an
    /// ascending candidate list, so the first complete tuple is the
    /// lexicographically smallest.
    fn first_match(&self, g: &Graph) -> Option<Vec<VertexId>> {
        let mut tuple = Vec::with_capacity(self.size);
        self.extend(g, &mut tuple).then_some(tuple)
    }

    fn extend(&self, g: &Graph, tuple: &mut Vec<VertexId>) -> bool {
        let pos = tuple.len();
        if pos == self.size {
            return true;
        }
        let candidates: Vec<VertexId> = match self.anchor(pos) {
            Some(a) => g.neighbors(tuple[a]).to_vec(),
            None => g.vertices().collect(),
        };
        for v in candidates {
            if self.fits(g, tuple, pos, v) {
                tuple.push(v);
                if self.extend(g, tuple) {
                    return true;
                }
                tuple.pop();
            }
        }
        false
    }

    fn holds(&self, g: &Graph, u: &[VertexId]) -> bool {
        if u.len() != self.size || u.iter().any(|&v| v >= g.vertex_count()) {
            return false;
        }
        (0..self.size).all(|pos| self.fits(g, &u[..pos], pos, u[pos]))
    }
}

/// Whether `u` satisfies the constraints of `case` in `g`.
pub fn case_holds(g: &Graph, case: CaseId, u: &[VertexId]) -> bool {
    match case.pattern() {
        None => u.is_empty() && g.edge_count() <= 6,
        Some(p) => p.holds(g, u),
    }
}

/// Finds the configuration to recurse on.
///
/// Graphs with at most six edges are `BASE`. Otherwise cases are tried in
/// order 1 to 6; the first that matches wins, with its lexicographically
/// smallest vertex tuple.
pub fn detect_case(g: &Graph) -> Result<CaseMatch, ConstructError> {
    if g.edge_count() <= 6 {
        return Ok(CaseMatch::base());
    }
    for case in CaseId::RECURSIVE {
        let pattern = case.pattern().expect("recursive cases have patterns");
        if let Some(u) = pattern.first_match(g) {
            return Ok(CaseMatch { case, u });
        }
    }
    Err(ConstructError::NoCaseMatches {
        graph: g.to_edge_list(),
    })
}
