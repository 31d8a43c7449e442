//! Tree generators for exhaustive and randomized sweeps.
//!
//! Random trees use [`RNG_NAME`] (ChaCha8 seeded with `seed_from_u64`), so a
//! `(cherries, seed)` pair always reproduces the same tree.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Edge, Graph, VertexId};

/// Name of the random generator behind [`random_even_leaf_tree`].
pub const RNG_NAME: &str = "chacha8";

/// Largest vertex count accepted by [`all_labeled_trees`].
pub const MAX_ENUMERATED_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("label {label} out of range for n = {n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("Prüfer sequence of length {len} does not match n = {n}")]
    LengthMismatch { len: usize, n: usize },
    #[error("n = {0} is too small, need at least 2 vertices")]
    TooSmall(usize),
    #[error("n = {n} is too large to enumerate (limit {MAX_ENUMERATED_N})")]
    TooLarge { n: usize },
}

/// Code of length `n - 2` for a labeled tree on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PruferSequence(pub Vec<usize>);

/// Decodes a Prüfer sequence into its labeled tree on `n` vertices.
pub fn prufer_decode(seq: &PruferSequence, n: usize) -> Result<Graph, GenerateError> {
    if n < 2 {
        return Err(GenerateError::TooSmall(n));
    }
    let labels = &seq.0;
    if labels.len() != n - 2 {
        return Err(GenerateError::LengthMismatch {
            len: labels.len(),
            n,
        });
    }
    let mut degree = vec![1usize; n];
    for &x in labels {
        if x >= n {
            return Err(GenerateError::LabelOutOfRange { label: x, n });
        }
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<VertexId>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in labels {
        let Reverse(leaf) = leaves.pop().expect("a tree code always leaves a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Ok(Graph::from_edges(n, edges).expect("decoded edges are simple"))
}

/// Number of labeled trees on `n` vertices, `n^(n-2)`.
pub fn labeled_tree_count(n: usize) -> usize {
    if n < 2 {
        return usize::from(n == 1);
    }
    n.pow((n - 2) as u32)
}

fn check_enumerable(n: usize) -> Result<(), GenerateError> {
    if n < 2 {
        Err(GenerateError::TooSmall(n))
    } else if n > MAX_ENUMERATED_N {
        Err(GenerateError::TooLarge { n })
    } else {
        Ok(())
    }
}

/// The Prüfer sequence at position `index` in lexicographic order.
pub fn prufer_at(n: usize, index: usize) -> Result<PruferSequence, GenerateError> {
    check_enumerable(n)?;
    let len = n - 2;
    let mut digits = vec![0; len];
    let mut rest = index;
    for slot in digits.iter_mut().rev() {
        *slot = rest % n;
        rest /= n;
    }
    Ok(PruferSequence(digits))
}

/// The tree at position `index` of [`all_labeled_trees`].
pub fn labeled_tree_at(n: usize, index: usize) -> Result<Graph, GenerateError> {
    prufer_decode(&prufer_at(n, index)?, n)
}

/// Streams every labeled tree on `n` vertices in Prüfer order.
pub fn all_labeled_trees(n: usize) -> Result<LabeledTrees, GenerateError> {
    check_enumerable(n)?;
    Ok(LabeledTrees {
        n,
        next: Some(vec![0; n - 2]),
    })
}

/// Iterator returned by [`all_labeled_trees`].
#[derive(Debug, Clone)]
pub struct LabeledTrees {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for slot in succ.iter_mut().rev() {
            *slot += 1;
            if *slot < self.n {
                carried = false;
                break;
            }
            *slot = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(prufer_decode(&PruferSequence(current), self.n).expect("odometer stays in range"))
    }
}

/// Grows a tree from vertex 0 by attaching `cherries` paths of length two,
/// each at a uniformly chosen vertex of the root's bipartition class.
///
/// Middle vertices never receive attachments, so every leaf lies in the
/// root's class. `cherries = 0` yields the single-vertex tree.
pub fn random_even_leaf_tree(cherries: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut anchors: Vec<VertexId> = vec![0];
    let mut edges = Vec::with_capacity(2 * cherries);
    let mut next = 1;
    for _ in 0..cherries {
        let at = anchors[rng.gen_range(0..anchors.len())];
        let (mid, tip) = (next, next + 1);
        next += 2;
        edges.push(Edge::of(at, mid));
        edges.push(Edge::of(mid, tip));
        anchors.push(tip);
    }
    Graph::from_edges(next, edges.iter().map(|e| e.endpoints())).expect("cherry growth is simple")
}
