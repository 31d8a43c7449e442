//! Exact β and λ on forests in linear-ish time.
//!
//! On a forest, a subgraph with every degree at most two is a disjoint union
//! of paths, and a path splits into two matchings by alternating colors. So
//! λ equals the largest edge count of a degree-≤2 subgraph, which a rooted
//! dynamic program computes directly.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::coloring::{Color, Matching, PartialColoring};
use crate::graph::{Edge, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("graph is not a forest")]
    NotAForest,
}

/// A maximum degree-≤2 subgraph together with an alternating coloring of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaWitness {
    pub subgraph: Vec<Edge>,
    pub coloring: PartialColoring,
}

/// Maximum matching on a forest by repeatedly matching the smallest-labelled
/// current leaf to its neighbour.
pub fn beta_tree(g: &Graph) -> Result<(usize, Matching), ForestError> {
    if !g.is_forest() {
        return Err(ForestError::NotAForest);
    }
    let n = g.vertex_count();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.neighbors(v).len()).collect();
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<VertexId>> =
        g.vertices().filter(|&v| deg[v] == 1).map(Reverse).collect();
    let mut matched = Vec::new();
    while let Some(Reverse(leaf)) = heap.pop() {
        if removed[leaf] || deg[leaf] != 1 {
            continue;
        }
        let mate = g
            .neighbors(leaf)
            .iter()
            .copied()
            .find(|&x| !removed[x])
            .expect("a degree-one vertex has a live neighbour");
        matched.push(Edge::of(leaf, mate));
        removed[leaf] = true;
        removed[mate] = true;
        for &z in g.neighbors(mate) {
            if !removed[z] {
                deg[z] -= 1;
                if deg[z] == 1 {
                    heap.push(Reverse(z));
                }
            }
        }
    }
    let size = matched.len();
    let matching = Matching::new(matched).expect("leaf matching is vertex-disjoint");
    Ok((size, matching))
}

/// Exact λ on a forest with a witness subgraph and coloring.
///
/// Each vertex `v` keeps `best[v][k]`, the largest number of chosen edges in
/// its subtree when at most `k` chosen edges join `v` to its children. Taking
/// the edge to a child `c` is worth `1 + best[c][1]` against `best[c][2]`;
/// the gain is 0 or 1, and children with gain 1 are taken in ascending label
/// order up to the allowance.
pub fn lambda_tree(g: &Graph) -> Result<(usize, LambdaWitness), ForestError> {
    if !g.is_forest() {
        return Err(ForestError::NotAForest);
    }
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in g.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let first = order.len();
        order.push(root);
        let mut i = first;
        while i < order.len() {
            let x = order[i];
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    order.push(y);
                }
            }
            i += 1;
        }
    }

    let parent = &parent;
    let children = |v: VertexId| {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |&c| parent[c] == v)
    };

    // best[v] = [at most 0, at most 1, at most 2] child edges chosen.
    let mut best = vec![[0usize; 3]; n];
    for &v in order.iter().rev() {
        let mut base = 0;
        let mut gains = 0;
        for c in children(v) {
            let skip = best[c][2];
            let take = 1 + best[c][1];
            base += skip;
            if take > skip {
                gains += 1;
            }
        }
        best[v] = [base, base + gains.min(1), base + gains.min(2)];
    }

    let mut chosen = Vec::new();
    let mut allowance = vec![2usize; n];
    for &v in &order {
        let mut left = allowance[v];
        for c in children(v) {
            if left > 0 && 1 + best[c][1] > best[c][2] {
                chosen.push(Edge::of(v, c));
                allowance[c] = 1;
                left -= 1;
            } else {
                allowance[c] = 2;
            }
        }
    }
    chosen.sort_unstable();

    let lambda = g
        .vertices()
        .filter(|&v| parent[v] == usize::MAX)
        .map(|r| best[r][2])
        .sum::<usize>();
    debug_assert_eq!(lambda, chosen.len());
    let coloring = color_paths(n, &chosen);
    Ok((
        lambda,
        LambdaWitness {
            subgraph: chosen,
            coloring,
        },
    ))
}

/// Colors a disjoint union of paths alternately, starting each path with 0
/// at its smaller-labelled endpoint.
fn color_paths(n: usize, edges: &[Edge]) -> PartialColoring {
    let mut adj = vec![Vec::with_capacity(2); n];
    for e in edges {
        adj[e.a()].push(e.b());
        adj[e.b()].push(e.a());
    }
    let mut done = vec![false; n];
    let mut f = PartialColoring::new();
    for start in 0..n {
        if done[start] || adj[start].len() != 1 {
            continue;
        }
        done[start] = true;
        let (mut prev, mut cur) = (start, adj[start][0]);
        let mut color = Color::Zero;
        loop {
            f.set(Edge::of(prev, cur), color);
            done[cur] = true;
            color = color.flipped();
            match adj[cur].iter().copied().find(|&x| x != prev) {
                Some(next) => {
                    prev = cur;
                    cur = next;
                }
                None => break,
            }
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;

    #[test]
    fn beta_examples() {
        assert_eq!(beta_tree(&Graph::path(5)).unwrap().0, 2);
        assert_eq!(beta_tree(&Graph::spider(&[2, 2, 2])).unwrap().0, 3);
        assert_eq!(beta_tree(&Graph::empty(1)).unwrap().0, 0);
        let (_, m) = beta_tree(&Graph::spider(&[2, 2, 2])).unwrap();
        // After 1–2 and 3–4 are matched the centre is the smallest leaf.
        assert_eq!(m.edges(), &[Edge::of(0, 5), Edge::of(1, 2), Edge::of(3, 4)]);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_tree(&Graph::path(5)).unwrap().0, 4);
        assert_eq!(lambda_tree(&Graph::star(3)).unwrap().0, 2);
        assert_eq!(lambda_tree(&Graph::spider(&[2, 2, 2])).unwrap().0, 5);
        assert_eq!(lambda_tree(&Graph::empty(3)).unwrap().0, 0);
    }

    #[test]
    fn lambda_witness_is_proper_and_alternating() {
        let g = Graph::spider(&[3, 1, 2, 2]);
        let (lambda, w) = lambda_tree(&g).unwrap();
        assert_eq!(w.subgraph.len(), lambda);
        assert_eq!(w.coloring.len(), lambda);
        assert!(is_proper(&g, &w.coloring).unwrap());
        let p5 = lambda_tree(&Graph::path(5)).unwrap().1;
        assert_eq!(
            p5.coloring,
            PartialColoring::from_classes(
                &[Edge::of(0, 1), Edge::of(2, 3)],
                &[Edge::of(1, 2), Edge::of(3, 4)]
            )
        );
    }

    #[test]
    fn rejects_cycles() {
        let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(beta_tree(&triangle), Err(ForestError::NotAForest));
        assert_eq!(lambda_tree(&triangle), Err(ForestError::NotAForest));
    }

    #[test]
    fn handles_forests_and_long_paths() {
        let g = Graph::from_edges(7, [(0, 1), (2, 3), (3, 4), (5, 6)]).unwrap();
        assert_eq!(beta_tree(&g).unwrap().0, 3);
        assert_eq!(lambda_tree(&g).unwrap().0, 4);
        let long = Graph::path(200_000);
        assert_eq!(lambda_tree(&long).unwrap().0, 199_999);
        assert_eq!(beta_tree(&long).unwrap().0, 100_000);
    }
}
