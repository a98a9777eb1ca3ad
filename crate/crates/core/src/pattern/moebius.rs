//! Planning for the ruled one-sided band.
//!
//! The band has a single boundary curve: the edge at half-width `w` passes
//! around the ring twice, through `sigma(w, t)` for `t in [0, 2pi]`, using
//! the symmetry `sigma(-w, t) = sigma(w, t + pi)`. Stitch boundaries are
//! placed at equal arc-length increments, which is non-uniform in the angle,
//! so every round records its `theta_offsets`.
//!
//! Children are assigned to parents by angle. Because the edge stretches on
//! the outer half and shrinks on the inner half, a round generally mixes
//! increases and decreases. The first edge round works the centre row once
//! from each side; its parent positions index that doubled traversal
//! (`0..2*N0`), which keeps the child assignment contiguous and lets the
//! same walk model describe every round.

use super::allocate::parents_of_children;
use super::{
    stitch_count, Construction, Direction, Gauge, Pattern, PatternError, RoundPlan, RoundsSpec,
};
use crate::surfaces::{Family, SurfaceSpec};
use std::f64::consts::PI;

/// Panels in the cumulative arc-length table of one boundary curve.
const ARC_PANELS: usize = 8192;

/// Boundary-curve speed `sqrt(G)` at angle `t` for half-width `w`.
fn edge_speed(w: f64, t: f64) -> f64 {
    let ring = 1.0 + w * t.cos();
    (4.0 * ring * ring + w * w).sqrt()
}

/// Cumulative arc length of the boundary curve over `[0, 2pi]`, sampled on a
/// uniform grid with Simpson panels. Lengths are in parameter units;
/// multiply by the surface scale for cm.
pub(crate) struct ArcTable {
    table: Vec<f64>,
    step: f64,
}

impl ArcTable {
    pub(crate) fn new(w: f64) -> ArcTable {
        let step = 2.0 * PI / ARC_PANELS as f64;
        let mut table = Vec::with_capacity(ARC_PANELS + 1);
        table.push(0.0);
        let mut acc = 0.0;
        for j in 0..ARC_PANELS {
            let a = j as f64 * step;
            let m = a + 0.5 * step;
            let b = a + step;
            acc += step / 6.0 * (edge_speed(w, a) + 4.0 * edge_speed(w, m) + edge_speed(w, b));
            table.push(acc);
        }
        ArcTable { table, step }
    }

    pub(crate) fn total(&self) -> f64 {
        *self.table.last().unwrap()
    }

    /// Angle at which the cumulative arc length reaches `s`.
    pub(crate) fn invert(&self, s: f64) -> f64 {
        let s = s.clamp(0.0, self.total());
        let j = self.table.partition_point(|&v| v < s).max(1);
        let (lo, hi) = (self.table[j - 1], self.table[j]);
        let frac = if hi > lo { (s - lo) / (hi - lo) } else { 0.0 };
        ((j - 1) as f64 + frac) * self.step
    }

    /// Arc length up to angle `t` (linear interpolation on the table).
    pub(crate) fn eval(&self, t: f64) -> f64 {
        let x = (t / self.step).clamp(0.0, ARC_PANELS as f64);
        let j = (x.floor() as usize).min(ARC_PANELS - 1);
        let frac = x - j as f64;
        self.table[j] + frac * (self.table[j + 1] - self.table[j])
    }
}

/// Boundary angles of the traversal the next round crochets into. The
/// centre row is passed twice (once per side), so its offsets double up,
/// shifted by pi on the second pass.
pub(crate) fn traversal_offsets(round: &RoundPlan, is_centre: bool) -> Vec<f64> {
    let own = round.theta_offsets.clone().unwrap_or_default();
    if is_centre {
        let mut v = own.clone();
        v.extend(own.iter().map(|t| t + PI));
        v
    } else {
        own
    }
}

/// Parent slot for a child at angle `phi`, given ascending slot boundaries.
fn slot_at(offsets: &[f64], phi: f64) -> u32 {
    let idx = offsets.partition_point(|&b| b <= phi);
    if idx == 0 {
        (offsets.len() - 1) as u32
    } else {
        (idx - 1) as u32
    }
}

/// Increase positions, decrease heads, and the child -> parents map of one
/// round.
pub(crate) type ChildAssignment = (Vec<u32>, Vec<u32>, Vec<Vec<u32>>);

/// Assign children (by ascending midpoint angle) to parent slots, repair the
/// assignment so it is expressible as plain / increase / decrease work, and
/// return it as (increases, decreases, child -> parents).
pub(crate) fn assign_children(
    parent_offsets: &[f64],
    child_mid_angles: &[f64],
) -> Result<ChildAssignment, PatternError> {
    let parent_n = parent_offsets.len() as u32;
    let next_n = child_mid_angles.len() as u32;
    let fail = || PatternError::GaugeIncompatible {
        prev: parent_n,
        next: next_n,
    };
    let mut parent_of: Vec<u32> = child_mid_angles
        .iter()
        .map(|&th| slot_at(parent_offsets, th))
        .collect();
    if parent_of.windows(2).any(|w| w[0] > w[1]) {
        return Err(fail());
    }

    let mut counts = vec![0u32; parent_n as usize];
    for &p in &parent_of {
        counts[p as usize] += 1;
    }

    // Pass 1: cap parents at three children by moving run-edge children to an
    // adjacent parent with spare room.
    for _ in 0..parent_n {
        let mut changed = false;
        for child in 0..parent_of.len() {
            let p = parent_of[child] as usize;
            if counts[p] <= 3 {
                continue;
            }
            let first_of_run = child == 0 || parent_of[child - 1] as usize != p;
            let last_of_run = child + 1 == parent_of.len() || parent_of[child + 1] as usize != p;
            if first_of_run && p > 0 && counts[p - 1] < 3 {
                parent_of[child] = (p - 1) as u32;
                counts[p] -= 1;
                counts[p - 1] += 1;
                changed = true;
            } else if last_of_run && p + 1 < parent_n as usize && counts[p + 1] < 3 {
                parent_of[child] = (p + 1) as u32;
                counts[p] -= 1;
                counts[p + 1] += 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if counts.iter().any(|&c| c > 3) {
        return Err(fail());
    }

    // Pass 2: feed childless parents from a multi-child neighbour so that
    // only genuinely shrinking regions need merges.
    for _ in 0..parent_n {
        let mut changed = false;
        for p in 0..parent_n as usize {
            if counts[p] > 0 {
                continue;
            }
            if p > 0 && counts[p - 1] >= 2 {
                if let Some(c) = parent_of.iter().rposition(|&q| q as usize == p - 1) {
                    parent_of[c] = p as u32;
                    counts[p - 1] -= 1;
                    counts[p] += 1;
                    changed = true;
                }
            } else if p + 1 < parent_n as usize && counts[p + 1] >= 2 {
                if let Some(c) = parent_of.iter().position(|&q| q as usize == p + 1) {
                    parent_of[c] = p as u32;
                    counts[p + 1] -= 1;
                    counts[p] += 1;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    // Pass 3: remaining childless parents merge with a single-child
    // neighbour. Pairs are adjacent, disjoint, and never wrap, so the walk
    // model reproduces them.
    let mut second_parent: Vec<Option<u32>> = vec![None; parent_of.len()];
    let mut merged = vec![false; parent_n as usize];
    let mut decreases: Vec<u32> = Vec::new();
    for p in 0..parent_n {
        if counts[p as usize] > 0 || merged[p as usize] {
            continue;
        }
        let left_ok = p > 0 && counts[(p - 1) as usize] == 1 && !merged[(p - 1) as usize];
        let right_ok =
            p + 1 < parent_n && counts[(p + 1) as usize] == 1 && !merged[(p + 1) as usize];
        let (partner, head) = if left_ok {
            (p - 1, p - 1)
        } else if right_ok {
            (p + 1, p)
        } else {
            return Err(fail());
        };
        let c = parent_of
            .iter()
            .rposition(|&q| q == partner)
            .ok_or_else(fail)?;
        second_parent[c] = Some(p);
        merged[p as usize] = true;
        merged[partner as usize] = true;
        decreases.push(head);
    }
    decreases.sort_unstable();

    let mut increases: Vec<u32> = Vec::new();
    for (p, &c) in counts.iter().enumerate() {
        for _ in 1..c.max(1) {
            increases.push(p as u32);
        }
    }

    // Assemble the derived child -> parents list and require the walk model
    // to reproduce it exactly.
    let derived: Vec<Vec<u32>> = parent_of
        .iter()
        .zip(&second_parent)
        .map(|(&p, sp)| {
            let mut v = vec![p];
            if let Some(q) = sp {
                v.push(*q);
                v.sort_unstable();
            }
            v
        })
        .collect();
    let walked = parents_of_children(parent_n, &increases, &decreases);
    if walked != derived {
        return Err(fail());
    }
    Ok((increases, decreases, derived))
}

pub(crate) fn plan(
    spec: &SurfaceSpec,
    gauge: &Gauge,
    rounds: RoundsSpec,
) -> Result<Pattern, PatternError> {
    let half_width = match spec.family() {
        Family::MobiusRuled { half_width } => *half_width,
        _ => {
            return Err(PatternError::Surface(
                crate::surfaces::SurfaceError::NotApplicable(
                    "single-boundary planning only applies to the ruled band",
                ),
            ))
        }
    };
    let s = spec.scale();
    let h = gauge.height();
    let w_stitch = gauge.width();
    let n_boundary = match rounds {
        RoundsSpec::Count(n) => n,
        RoundsSpec::StopRadius(r) => (r / h + 1e-9).floor() as u32,
        RoundsSpec::Fill => (half_width * s / h + 1e-9).floor() as u32,
    };
    if n_boundary as f64 * h / s > 1.0 + 1e-12 {
        return Err(PatternError::BandTooWide);
    }

    let mut rounds_out: Vec<RoundPlan> = Vec::new();

    // centre curve: one pass of t in [0, pi), speed 2, length 2 pi scale
    let centre_len = 2.0 * PI * s;
    let n0 = stitch_count(centre_len, w_stitch);
    let centre_offsets: Vec<f64> = (0..n0).map(|k| k as f64 * PI / n0 as f64).collect();
    rounds_out.push(RoundPlan {
        index: 1,
        direction: Direction::Outward,
        intrinsic_radius: 0.0,
        circumference: centre_len,
        stitches: n0,
        delta: n0 as i64,
        increases: Vec::new(),
        decreases: Vec::new(),
        theta_offsets: Some(centre_offsets),
        param_r: 0.0,
        parent: None,
    });

    for l in 1..=n_boundary {
        let w = l as f64 * h / s;
        let arc = ArcTable::new(w);
        let len_cm = arc.total() * s;
        let n = stitch_count(len_cm, w_stitch);
        let offsets: Vec<f64> = (0..n)
            .map(|k| arc.invert(k as f64 * arc.total() / n as f64))
            .collect();
        let mid_angles: Vec<f64> = (0..n)
            .map(|k| arc.invert((k as f64 + 0.5) * arc.total() / n as f64))
            .collect();
        let prev = rounds_out.last().unwrap();
        let prev_n = prev.stitches;
        let parent_offsets = traversal_offsets(prev, l == 1);
        let (increases, decreases, _) = assign_children(&parent_offsets, &mid_angles)?;
        let parent_idx = rounds_out.len() - 1;
        rounds_out.push(RoundPlan {
            index: l + 1,
            direction: Direction::Outward,
            intrinsic_radius: l as f64 * h,
            circumference: len_cm,
            stitches: n,
            delta: n as i64 - prev_n as i64,
            increases,
            decreases,
            theta_offsets: Some(offsets),
            param_r: w,
            parent: Some(parent_idx),
        });
    }

    let total: u64 = rounds_out.iter().map(|r| r.stitches as u64).sum();
    Ok(Pattern {
        surface: spec.clone(),
        gauge: gauge.clone(),
        rounds: rounds_out,
        total_stitches: total,
        construction: Construction::MoebiusBoundary,
        notes: vec![
            "work the centre row first, twist once, join, then crochet around the single edge"
                .into(),
            "the first edge round passes the centre row twice, once per side".into(),
        ],
    })
}
