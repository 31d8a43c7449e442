//! Immutable simple undirected graphs and the structural predicates used by
//! the forest algorithms and the constructive procedure.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: malformed line: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("{}loop edge at vertex {vertex}", line_prefix(.line))]
    LoopEdge {
        vertex: VertexId,
        line: Option<usize>,
    },
    #[error("{}vertex {vertex} out of range for n = {n}", line_prefix(.line))]
    VertexOutOfRange {
        vertex: VertexId,
        n: usize,
        line: Option<usize>,
    },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a tree")]
    NotATree,
}

fn line_prefix(line: &Option<usize>) -> String {
    match line {
        Some(l) => format!("line {l}: "),
        None => String::new(),
    }
}

/// An undirected edge stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Builds the normalized edge `{u, v}`. Returns `None` for a loop.
    pub fn new(u: VertexId, v: VertexId) -> Option<Edge> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(Edge { a: u, b: v }),
            std::cmp::Ordering::Greater => Some(Edge { a: v, b: u }),
            std::cmp::Ordering::Equal => None,
        }
    }

    /// Like [`Edge::new`] but panics on a loop. Handy for literals in tests.
    pub fn of(u: VertexId, v: VertexId) -> Edge {
        Edge::new(u, v).expect("loop edge")
    }

    pub fn a(&self) -> VertexId {
        self.a
    }

    pub fn b(&self) -> VertexId {
        self.b
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other(&self, v: VertexId) -> Option<VertexId> {
        if v == self.a {
            Some(self.b)
        } else if v == self.b {
            Some(self.a)
        } else {
            None
        }
    }

    /// Maps both endpoints through `f`.
    pub fn map(&self, mut f: impl FnMut(VertexId) -> VertexId) -> Edge {
        Edge::of(f(self.a), f(self.b))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}–{}", self.a, self.b)
    }
}

/// Old-to-new vertex association produced by vertex deletion or component
/// extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabel {
    to_old: Vec<VertexId>,
    to_new: Vec<Option<VertexId>>,
}

impl Relabel {
    fn from_kept(kept: Vec<VertexId>, old_n: usize) -> Relabel {
        let mut to_new = vec![None; old_n];
        for (new, &old) in kept.iter().enumerate() {
            to_new[old] = Some(new);
        }
        Relabel {
            to_old: kept,
            to_new,
        }
    }

    pub fn identity(n: usize) -> Relabel {
        Relabel::from_kept((0..n).collect(), n)
    }

    /// Original label of a surviving vertex.
    pub fn old(&self, new: VertexId) -> VertexId {
        self.to_old[new]
    }

    /// New label of an original vertex, or `None` if it was removed.
    pub fn new_label(&self, old: VertexId) -> Option<VertexId> {
        self.to_new.get(old).copied().flatten()
    }

    /// Surviving original labels, indexed by new label.
    pub fn kept(&self) -> &[VertexId] {
        &self.to_old
    }
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from `(u, v)` pairs. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        n,
                        line: None,
                    });
                }
            }
            let e = Edge::new(u, v).ok_or(GraphError::LoopEdge {
                vertex: u,
                line: None,
            })?;
            edges.push(e);
        }
        Ok(Graph::from_normalized(n, edges))
    }

    fn from_normalized(n: usize, mut edges: Vec<Edge>) -> Graph {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Path `0 – 1 – … – (n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges = (1..n).map(|i| Edge::of(i - 1, i)).collect();
        Graph::from_normalized(n, edges)
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges = (1..=leaves).map(|i| Edge::of(0, i)).collect();
        Graph::from_normalized(leaves + 1, edges)
    }

    /// Spider with center 0 and one leg per entry of `legs`, legs labelled
    /// consecutively outward from the center.
    pub fn spider(legs: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push(Edge::of(prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::from_normalized(next, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.a, e.b)
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
                line: None,
            })
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Degree of a vertex known to be in range.
    pub(crate) fn deg(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Vertices of degree exactly one, ascending.
    pub fn leaves(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.deg(v) == 1).collect()
    }

    /// Component index per vertex (components numbered by smallest vertex).
    fn component_ids(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.component_ids().1 <= 1
    }

    /// Connected with `|E| = n - 1`. The empty graph on zero vertices is not
    /// a tree.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Acyclic: `|E| = n - (number of components)`.
    pub fn is_forest(&self) -> bool {
        let (_, c) = self.component_ids();
        self.edges.len() + c == self.n
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, s: VertexId) -> Result<Vec<Option<usize>>, GraphError> {
        self.check_vertex(s)?;
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or_default();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        Ok(dist)
    }

    /// Two-coloring by breadth-first parity from vertex 0. The part holding
    /// vertex 0 comes first.
    pub fn bipartition(&self) -> Result<(Vec<VertexId>, Vec<VertexId>), GraphError> {
        if self.n == 0 {
            return Ok((Vec::new(), Vec::new()));
        }
        let dist = self.bfs_distances(0)?;
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (v, d) in dist.iter().enumerate() {
            match d {
                None => return Err(GraphError::NotConnected),
                Some(d) if d % 2 == 0 => even.push(v),
                Some(_) => odd.push(v),
            }
        }
        for e in &self.edges {
            if dist[e.a].map(|d| d % 2) == dist[e.b].map(|d| d % 2) {
                return Err(GraphError::NotBipartite);
            }
        }
        Ok((even, odd))
    }

    /// Whether every pair of leaves lies at even distance, tested as "all
    /// leaves in one bipartition part".
    pub fn has_even_leaf_distances(&self) -> Result<bool, GraphError> {
        if !self.is_tree() {
            return Err(GraphError::NotATree);
        }
        let (first, _) = self.bipartition()?;
        let mut in_first = vec![false; self.n];
        for v in first {
            in_first[v] = true;
        }
        let mut sides = self.leaves().into_iter().map(|v| in_first[v]);
        Ok(match sides.next() {
            None => true,
            Some(side) => sides.all(|s| s == side),
        })
    }

    /// Induced subgraph on `V \ removed` with dense relabeling that keeps
    /// ascending label order.
    pub fn remove_vertices(&self, removed: &[VertexId]) -> Result<(Graph, Relabel), GraphError> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let kept: Vec<VertexId> = self.vertices().filter(|&v| !gone[v]).collect();
        Ok(self.induced(kept))
    }

    /// Induced subgraph on `kept` (must be ascending and in range).
    fn induced(&self, kept: Vec<VertexId>) -> (Graph, Relabel) {
        let relabel = Relabel::from_kept(kept, self.n);
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                let a = relabel.new_label(e.a)?;
                let b = relabel.new_label(e.b)?;
                Some(Edge::of(a, b))
            })
            .collect();
        (Graph::from_normalized(relabel.to_old.len(), edges), relabel)
    }

    /// Connected components ordered by smallest original label, each with
    /// its own dense relabeling.
    pub fn connected_components(&self) -> Vec<(Graph, Relabel)> {
        let (comp, count) = self.component_ids();
        let mut members = vec![Vec::new(); count];
        for v in self.vertices() {
            members[comp[v]].push(v);
        }
        members.into_iter().map(|kept| self.induced(kept)).collect()
    }

    /// Serializes as an `n <count>` header followed by one `a b` line per
    /// edge, lexicographically sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.a, e.b));
        }
        out
    }
}

/// Splits text into `(line_number, tokens)` for non-blank, non-comment lines.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

pub(crate) fn parse_vertex(token: &str, line: usize) -> Result<VertexId, GraphError> {
    token
        .parse::<VertexId>()
        .map_err(|_| GraphError::MalformedLine {
            line,
            reason: format!("`{token}` is not a nonnegative integer"),
        })
}

/// Parses the edge-list text format.
///
/// Each content line is `u v`; blank lines and `#` comments are skipped. An
/// optional `n <count>` line fixes the vertex count, otherwise it is one more
/// than the largest label seen.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (line, tokens) in content_lines(text) {
        if tokens[0] == "n" {
            if tokens.len() != 2 {
                return Err(GraphError::MalformedLine {
                    line,
                    reason: "header must be `n <count>`".into(),
                });
            }
            if header.is_some() {
                return Err(GraphError::MalformedLine {
                    line,
                    reason: "duplicate `n` header".into(),
                });
            }
            header = Some((parse_vertex(tokens[1], line)?, line));
            continue;
        }
        if tokens.len() != 2 {
            return Err(GraphError::MalformedLine {
                line,
                reason: format!("expected 2 tokens, found {}", tokens.len()),
            });
        }
        let u = parse_vertex(tokens[0], line)?;
        let v = parse_vertex(tokens[1], line)?;
        if u == v {
            return Err(GraphError::LoopEdge {
                vertex: u,
                line: Some(line),
            });
        }
        pairs.push((u, v, line));
    }
    let n = match header {
        Some((n, _)) => {
            if let Some(&(u, v, line)) = pairs.iter().find(|&&(u, v, _)| u.max(v) >= n) {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                    line: Some(line),
                });
            }
            n
        }
        None => pairs
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    let edges = pairs.into_iter().map(|(u, v, _)| Edge::of(u, v)).collect();
    Ok(Graph::from_normalized(n, edges))
}

/// Splits a stream of edge lists separated by `---` lines and parses each.
pub fn parse_edge_list_stream(text: &str) -> Result<Vec<Graph>, GraphError> {
    let mut docs = vec![String::new()];
    for line in text.lines() {
        if line.trim() == "---" {
            docs.push(String::new());
        } else {
            let doc = docs.last_mut().expect("nonempty");
            doc.push_str(line);
            doc.push('\n');
        }
    }
    docs.iter()
        .filter(|d| content_lines(d).next().is_some())
        .map(|d| parse_edge_list(d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_splitting() {
        let gs = parse_edge_list_stream("n 2\n0 1\n---\n0 1\n1 2\n---\n").unwrap();
        assert_eq!(gs, vec![Graph::path(2), Graph::path(3)]);
    }

    fn k2() -> Graph {
        Graph::path(2)
    }

    #[test]
    fn parse_trivial_inputs() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g, Graph::path(3));

        let g = parse_edge_list("n 4\n0 1").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(2).unwrap(), 0);

        assert_eq!(
            parse_edge_list("0 0"),
            Err(GraphError::LoopEdge {
                vertex: 0,
                line: Some(1)
            })
        );
        assert_eq!(parse_edge_list("").unwrap().vertex_count(), 0);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_edge_list("# hi\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, GraphError::MalformedLine { line: 3, .. }));
        let err = parse_edge_list("0 1 2").unwrap_err();
        assert!(matches!(err, GraphError::MalformedLine { line: 1, .. }));
        let err = parse_edge_list("\n\n5").unwrap_err();
        assert!(matches!(err, GraphError::MalformedLine { line: 3, .. }));
        let err = parse_edge_list("n 2\n0 3").unwrap_err();
        assert!(matches!(
            err,
            GraphError::VertexOutOfRange { vertex: 3, .. }
        ));
        assert!(err.to_string().starts_with("line 2:"));
    }

    #[test]
    fn parse_dedups_and_normalizes() {
        let g = parse_edge_list("2 1\n1 2\n0 1\n").unwrap();
        assert_eq!(g.edges(), &[Edge::of(0, 1), Edge::of(1, 2)]);
    }

    #[test]
    fn degrees() {
        let star = Graph::star(3);
        let p5 = Graph::path(5);
        assert_eq!(star.degree(0).unwrap(), 3);
        assert_eq!(p5.degree(2).unwrap(), 2);
        assert_eq!(p5.degree(0).unwrap(), 1);
        assert!(matches!(
            p5.degree(5),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn tree_predicate() {
        assert!(Graph::path(5).is_tree());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_tree());
        assert!(two_edges.is_forest());
        let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!triangle.is_tree());
        assert!(!triangle.is_forest());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(0).is_tree());
    }

    #[test]
    fn leaf_sets() {
        assert_eq!(Graph::star(3).leaves(), vec![1, 2, 3]);
        assert_eq!(Graph::path(5).leaves(), vec![0, 4]);
        assert!(Graph::empty(1).leaves().is_empty());
    }

    #[test]
    fn bipartitions() {
        assert_eq!(Graph::path(3).bipartition().unwrap(), (vec![0, 2], vec![1]));
        assert_eq!(
            Graph::path(5).bipartition().unwrap(),
            (vec![0, 2, 4], vec![1, 3])
        );
        let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(triangle.bipartition(), Err(GraphError::NotBipartite));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.bipartition(), Err(GraphError::NotConnected));
    }

    #[test]
    fn even_leaf_distances() {
        assert!(Graph::path(5).has_even_leaf_distances().unwrap());
        assert!(!Graph::path(4).has_even_leaf_distances().unwrap());
        assert!(Graph::spider(&[2, 2, 2]).has_even_leaf_distances().unwrap());
        assert!(!k2().has_even_leaf_distances().unwrap());
        assert!(Graph::empty(1).has_even_leaf_distances().unwrap());
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.has_even_leaf_distances(), Err(GraphError::NotATree));
    }

    #[test]
    fn vertex_removal() {
        let p5 = Graph::path(5);
        let (g, rel) = p5.remove_vertices(&[0, 1]).unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(rel.kept(), &[2, 3, 4]);
        assert_eq!(rel.new_label(3), Some(1));
        assert_eq!(rel.new_label(0), None);

        let (g, rel) = p5.remove_vertices(&[]).unwrap();
        assert_eq!(g, p5);
        assert_eq!(rel, Relabel::identity(5));

        let (g, _) = Graph::path(3).remove_vertices(&[1]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 0));

        assert!(p5.remove_vertices(&[9]).is_err());
    }

    #[test]
    fn components() {
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|(g, _)| *g == k2()));
        assert_eq!(comps[1].1.kept(), &[2, 3]);

        let p5 = Graph::path(5);
        let comps = p5.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].0, p5);

        let (rest, _) = Graph::spider(&[2, 2, 2]).remove_vertices(&[0]).unwrap();
        let comps = rest.connected_components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|(g, _)| *g == k2()));
    }

    #[test]
    fn fixtures_have_expected_shape() {
        let spider2 = Graph::spider(&[2, 2, 2]);
        assert_eq!((spider2.vertex_count(), spider2.edge_count()), (7, 6));
        let spider4 = Graph::spider(&[2, 2, 2, 2]);
        assert_eq!((spider4.vertex_count(), spider4.edge_count()), (9, 8));
        let leg4 = Graph::spider(&[4, 2, 2]);
        assert_eq!((leg4.vertex_count(), leg4.edge_count()), (9, 8));
        assert!(leg4.has_edge(3, 4) && leg4.has_edge(0, 5) && leg4.has_edge(7, 8));
    }

    #[test]
    fn serializer_format() {
        let g = Graph::from_edges(4, [(2, 1), (0, 1)]).unwrap();
        assert_eq!(g.to_edge_list(), "n 4\n0 1\n1 2\n");
    }
}
