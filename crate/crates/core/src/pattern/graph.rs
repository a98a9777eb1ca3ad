//! Stitch-level connectivity of a compiled pattern: one node per stitch,
//! parent edges into the round below, lateral edges along each round.
//! Downstream fabric simulation consumes this via the JSON exporter.

use super::{allocate::parents_of_children, moebius, Construction, Pattern, PatternError};
use crate::surfaces::SurfaceError;
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq)]
pub struct GraphNode {
    /// Position of the round within `Pattern::rounds`.
    pub round: u32,
    /// Stitch position within the round.
    pub idx: u32,
    /// Midpoint angle of the stitch in parameter units.
    pub theta: f64,
    /// Anchor on the embedded surface, in cm, when an embedding exists.
    pub position: Option<[f64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct StitchGraph {
    pub nodes: Vec<GraphNode>,
    /// `(child, parent)` node indices; a merged stitch appears twice.
    pub parent_edges: Vec<(u32, u32)>,
    /// Consecutive stitches within a round, including the closing edge of a
    /// closed round.
    pub lateral_edges: Vec<(u32, u32)>,
}

/// Build the stitch graph for a compiled pattern.
pub fn build_stitch_graph(pattern: &Pattern) -> Result<StitchGraph, PatternError> {
    let mut g = StitchGraph::default();
    let moebius_pattern = pattern.construction == Construction::MoebiusBoundary;
    let open_rows = pattern.construction == Construction::RowsHelicoid;

    // node id of the first stitch of each round
    let mut base: Vec<u32> = Vec::with_capacity(pattern.rounds.len());
    let mut acc = 0u32;
    for r in &pattern.rounds {
        base.push(acc);
        acc += r.stitches;
    }

    for (ri, round) in pattern.rounds.iter().enumerate() {
        let n = round.stitches;
        let midpoints: Vec<f64> = match &round.theta_offsets {
            Some(offsets) => {
                let period = if moebius_pattern && ri == 0 {
                    PI
                } else {
                    2.0 * PI
                };
                (0..n as usize)
                    .map(|k| {
                        let a = offsets[k];
                        let b = if k + 1 < offsets.len() {
                            offsets[k + 1]
                        } else {
                            period
                        };
                        0.5 * (a + b)
                    })
                    .collect()
            }
            None => {
                let period = pattern.surface.theta_range();
                (0..n)
                    .map(|k| period * (k as f64 + 0.5) / n as f64)
                    .collect()
            }
        };
        for (k, &theta) in midpoints.iter().enumerate() {
            let position = match pattern.surface.point(round.param_r, theta) {
                Ok(p) => Some([p.x, p.y, p.z]),
                Err(SurfaceError::NoEmbedding) => None,
                Err(e) => return Err(e.into()),
            };
            g.nodes.push(GraphNode {
                round: ri as u32,
                idx: k as u32,
                theta,
                position,
            });
        }

        // lateral edges; closed rounds wrap into a cycle
        for k in 0..n.saturating_sub(1) {
            g.lateral_edges.push((base[ri] + k, base[ri] + k + 1));
        }
        if !open_rows && n > 1 {
            g.lateral_edges.push((base[ri] + n - 1, base[ri]));
        }

        // parent edges
        let Some(pi) = round.parent else { continue };
        let prev = &pattern.rounds[pi];
        let (walk_n, fold) = if moebius_pattern {
            // the first edge round crochets the centre row once per side
            let virt = moebius::traversal_offsets(prev, ri == 1).len() as u32;
            (virt, prev.stitches)
        } else {
            (prev.stitches, prev.stitches)
        };
        let child_parents = parents_of_children(walk_n, &round.increases, &round.decreases);
        if child_parents.len() as u32 != n {
            return Err(PatternError::GaugeIncompatible {
                prev: prev.stitches,
                next: n,
            });
        }
        for (child, parents) in child_parents.iter().enumerate() {
            for &p in parents {
                g.parent_edges
                    .push((base[ri] + child as u32, base[pi] + p % fold));
            }
        }
    }
    Ok(g)
}
