//! Partial 0–1 edge colorings, properness, and alternating paths.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{content_lines, parse_vertex, Edge, Graph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("edge {0} is not an edge of the graph")]
    ForeignEdge(Edge),
    #[error("edge {0} is not colored")]
    UncoloredStartEdge(Edge),
    #[error("edge {edge} is not incident to vertex {vertex}")]
    NotIncident { edge: Edge, vertex: VertexId },
    #[error("coloring is not proper at vertex {vertex} (two {color}-edges)")]
    NotProper { vertex: VertexId, color: Color },
    #[error("path edge {0} does not carry the color recorded on the path")]
    PathNotInColoring(Edge),
    #[error("line {line}: invalid color `{token}` (expected 0 or 1)")]
    InvalidColor { line: usize, token: String },
    #[error("line {line}: edge {edge} assigned twice")]
    DuplicateEdge { line: usize, edge: Edge },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Zero,
    One,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::Zero, Color::One];

    pub fn flipped(self) -> Color {
        match self {
            Color::Zero => Color::One,
            Color::One => Color::Zero,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Color::Zero => 0,
            Color::One => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Color> {
        match i {
            0 => Some(Color::Zero),
            1 => Some(Color::One),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Colors assigned to a subset of edges. Uncolored edges are simply absent.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialColoring {
    assignment: BTreeMap<Edge, Color>,
}

impl PartialColoring {
    pub fn new() -> PartialColoring {
        PartialColoring::default()
    }

    /// Builds a coloring from explicit class lists.
    pub fn from_classes(zero: &[Edge], one: &[Edge]) -> PartialColoring {
        let mut f = PartialColoring::new();
        for &e in zero {
            f.set(e, Color::Zero);
        }
        for &e in one {
            f.set(e, Color::One);
        }
        f
    }

    pub fn set(&mut self, e: Edge, c: Color) -> Option<Color> {
        self.assignment.insert(e, c)
    }

    pub fn unset(&mut self, e: Edge) -> Option<Color> {
        self.assignment.remove(&e)
    }

    /// Sets or clears the color of `e`.
    pub fn assign(&mut self, e: Edge, c: Option<Color>) {
        match c {
            Some(c) => {
                self.set(e, c);
            }
            None => {
                self.unset(e);
            }
        }
    }

    pub fn get(&self, e: Edge) -> Option<Color> {
        self.assignment.get(&e).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Colored edges in lexicographic edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.assignment.iter().map(|(&e, &c)| (e, c))
    }

    /// The edges of one color class, sorted.
    pub fn class(&self, c: Color) -> Vec<Edge> {
        self.iter()
            .filter(|&(_, x)| x == c)
            .map(|(e, _)| e)
            .collect()
    }

    /// `(|f0|, |f1|)`.
    pub fn class_sizes(&self) -> (usize, usize) {
        let zeros = self
            .assignment
            .values()
            .filter(|&&c| c == Color::Zero)
            .count();
        (zeros, self.len() - zeros)
    }

    pub fn swap_colors(&self) -> PartialColoring {
        PartialColoring {
            assignment: self.iter().map(|(e, c)| (e, c.flipped())).collect(),
        }
    }

    /// The unique edge of color `c` at `v`, if any.
    ///
    /// Errors with [`ColoringError::NotProper`] when two such edges exist.
    pub fn edge_at(&self, g: &Graph, v: VertexId, c: Color) -> Result<Option<Edge>, ColoringError> {
        let mut found = None;
        for &x in g.neighbors(v) {
            let e = Edge::of(v, x);
            if self.get(e) == Some(c) {
                if found.is_some() {
                    return Err(ColoringError::NotProper {
                        vertex: v,
                        color: c,
                    });
                }
                found = Some(e);
            }
        }
        Ok(found)
    }

    /// Maps every edge through `f`.
    pub fn map_vertices(&self, mut f: impl FnMut(VertexId) -> VertexId) -> PartialColoring {
        PartialColoring {
            assignment: self.iter().map(|(e, c)| (e.map(&mut f), c)).collect(),
        }
    }

    /// Copies every assignment of `other` into `self`.
    pub fn extend_from(&mut self, other: &PartialColoring) {
        for (e, c) in other.iter() {
            self.set(e, c);
        }
    }

    /// Serializes as `u v c` lines in edge order.
    pub fn to_text(&self) -> String {
        self.iter()
            .map(|(e, c)| format!("{} {} {}\n", e.a(), e.b(), c))
            .collect()
    }
}

impl FromIterator<(Edge, Color)> for PartialColoring {
    fn from_iter<I: IntoIterator<Item = (Edge, Color)>>(iter: I) -> Self {
        PartialColoring {
            assignment: iter.into_iter().collect(),
        }
    }
}

/// Parses the coloring text format: lines `u v c` with `c ∈ {0, 1}`, with
/// the same blank-line and comment rules as the edge-list format.
pub fn parse_coloring(text: &str) -> Result<PartialColoring, ColoringError> {
    let mut f = PartialColoring::new();
    for (line, tokens) in content_lines(text) {
        if tokens.len() != 3 {
            return Err(GraphError::MalformedLine {
                line,
                reason: format!("expected `u v c`, found {} tokens", tokens.len()),
            }
            .into());
        }
        let u = parse_vertex(tokens[0], line)?;
        let v = parse_vertex(tokens[1], line)?;
        let c = match tokens[2] {
            "0" => Color::Zero,
            "1" => Color::One,
            other => {
                return Err(ColoringError::InvalidColor {
                    line,
                    token: other.to_string(),
                })
            }
        };
        let e = Edge::new(u, v).ok_or(GraphError::LoopEdge {
            vertex: u,
            line: Some(line),
        })?;
        if f.set(e, c).is_some() {
            return Err(ColoringError::DuplicateEdge { line, edge: e });
        }
    }
    Ok(f)
}

/// Whether `f0` and `f1` are both matchings of `g`.
pub fn is_proper(g: &Graph, f: &PartialColoring) -> Result<bool, ColoringError> {
    let mut seen = vec![[false; 2]; g.vertex_count()];
    let mut proper = true;
    for (e, c) in f.iter() {
        if !g.contains_edge(e) {
            return Err(ColoringError::ForeignEdge(e));
        }
        for v in [e.a(), e.b()] {
            let slot = &mut seen[v][c.index()];
            proper &= !*slot;
            *slot = true;
        }
    }
    Ok(proper)
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Validates disjointness; returns the first shared vertex otherwise.
    pub fn new(mut edges: Vec<Edge>) -> Result<Matching, VertexId> {
        edges.sort_unstable();
        edges.dedup();
        let mut used = std::collections::HashSet::new();
        for e in &edges {
            for v in [e.a(), e.b()] {
                if !used.insert(v) {
                    return Err(v);
                }
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A simple path whose edges strictly alternate colors under a reference
/// coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingPath {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    colors: Vec<Color>,
}

impl AlternatingPath {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Walks the maximal alternating path leaving `start` through `first`.
///
/// Each step takes the unique edge at the frontier whose color is opposite to
/// the previous edge. The walk stops when no such edge exists or when it
/// would revisit a path vertex, so the result is always a simple path.
pub fn maximal_alternating_path(
    g: &Graph,
    f: &PartialColoring,
    start: VertexId,
    first: Edge,
) -> Result<AlternatingPath, ColoringError> {
    if !g.contains_edge(first) {
        return Err(ColoringError::ForeignEdge(first));
    }
    let first_color = f
        .get(first)
        .ok_or(ColoringError::UncoloredStartEdge(first))?;
    let next = first.other(start).ok_or(ColoringError::NotIncident {
        edge: first,
        vertex: start,
    })?;
    let mut on_path = vec![false; g.vertex_count()];
    on_path[start] = true;
    on_path[next] = true;
    let mut path = AlternatingPath {
        vertices: vec![start, next],
        edges: vec![first],
        colors: vec![first_color],
    };
    let mut frontier = next;
    let mut color = first_color;
    loop {
        color = color.flipped();
        let Some(e) = f.edge_at(g, frontier, color)? else {
            break;
        };
        let far = e.other(frontier).expect("edge_at returns incident edges");
        if on_path[far] {
            break;
        }
        on_path[far] = true;
        path.vertices.push(far);
        path.edges.push(e);
        path.colors.push(color);
        frontier = far;
    }
    Ok(path)
}

/// Complements the colors on the edges of `p`, which must all be colored
/// under `f`. Flipping twice along the same path restores `f`.
pub fn flip_path(
    f: &PartialColoring,
    p: &AlternatingPath,
) -> Result<PartialColoring, ColoringError> {
    let mut out = f.clone();
    for &e in &p.edges {
        let c = f.get(e).ok_or(ColoringError::PathNotInColoring(e))?;
        out.set(e, c.flipped());
    }
    Ok(out)
}
