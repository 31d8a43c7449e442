//! Recoloring moves that push chosen pendant edges into a given color class
//! without changing the class sizes of a maximum coloring.

use super::ConstructError;
use crate::coloring::{flip_path, is_proper, maximal_alternating_path, Color, PartialColoring};
use crate::graph::{Edge, Graph, VertexId};

/// Splits a pendant edge into `(leaf, attachment)`.
fn pendant_ends(g: &Graph, pendant: Edge) -> Result<(VertexId, VertexId), ConstructError> {
    if !g.contains_edge(pendant) {
        return Err(ConstructError::NotPendant(pendant));
    }
    let (a, b) = pendant.endpoints();
    if g.deg(a) == 1 {
        Ok((a, b))
    } else if g.deg(b) == 1 {
        Ok((b, a))
    } else {
        Err(ConstructError::NotPendant(pendant))
    }
}

fn require_proper(g: &Graph, f: &PartialColoring) -> Result<(), ConstructError> {
    if is_proper(g, f)? {
        Ok(())
    } else {
        Err(ConstructError::NotMpp(
            "input coloring is not proper".into(),
        ))
    }
}

/// Returns a maximum coloring with `pendant` in the 0-class.
///
/// * already 0: unchanged;
/// * uncolored: the 0-edge at the attachment vertex gives its color up to
///   the pendant;
/// * colored 1 with no 0-edge at the attachment vertex: recolored to 0
///   (only reachable when `|f0|` was not maximal, and then `|f0|` grows);
/// * colored 1 otherwise: the maximal alternating path from the leaf is
///   flipped, which must leave `(|f0|, |f1|)` unchanged.
pub fn lemma1_enforce(
    g: &Graph,
    f: &PartialColoring,
    pendant: Edge,
) -> Result<PartialColoring, ConstructError> {
    let (leaf, hub) = pendant_ends(g, pendant)?;
    require_proper(g, f)?;
    let mut out = f.clone();
    match f.get(pendant) {
        Some(Color::Zero) => {}
        None => {
            let Some(taken) = f.edge_at(g, hub, Color::Zero)? else {
                return Err(ConstructError::NotMpp(format!(
                    "uncolored pendant {pendant} could be colored 0, coloring is not maximum"
                )));
            };
            out.unset(taken);
            out.set(pendant, Color::Zero);
        }
        Some(Color::One) => {
            if f.edge_at(g, hub, Color::Zero)?.is_none() {
                out.set(pendant, Color::Zero);
            } else {
                let path = maximal_alternating_path(g, f, leaf, pendant)?;
                out = flip_path(f, &path)?;
                if out.class_sizes() != f.class_sizes() {
                    return Err(ConstructError::NotMpp(format!(
                        "flipping the alternating path from {leaf} changes |f0|, \
                         so |f0| was not maximal"
                    )));
                }
            }
        }
    }
    Ok(out)
}

/// For sibling pendants `(u, w)` and `(v, w)`, returns a maximum coloring with
/// `(u, w)` in the 0-class and `(v, w)` in the 1-class and the same `|f0|`.
pub fn lemma2_enforce(
    g: &Graph,
    f: &PartialColoring,
    u: VertexId,
    v: VertexId,
    w: VertexId,
) -> Result<PartialColoring, ConstructError> {
    let siblings = u != v
        && [u, v, w].iter().all(|&x| x < g.vertex_count())
        && g.deg(u) == 1
        && g.deg(v) == 1
        && g.has_edge(u, w)
        && g.has_edge(v, w);
    if !siblings {
        return Err(ConstructError::NotSiblingPendants { u, v, w });
    }
    let mut out = lemma1_enforce(g, f, Edge::of(u, w))?;
    let second = Edge::of(v, w);
    match out.get(second) {
        Some(Color::One) => {}
        // (u, w) holds the 0 at w now, so (v, w) cannot.
        Some(Color::Zero) => {
            return Err(ConstructError::NotMpp(format!("two 0-edges at vertex {w}")));
        }
        None => {
            let Some(taken) = out.edge_at(g, w, Color::One)? else {
                return Err(ConstructError::NotMpp(format!(
                    "uncolored pendant {second} could be colored 1, coloring is not maximum"
                )));
            };
            out.unset(taken);
            out.set(second, Color::One);
        }
    }
    Ok(out)
}
