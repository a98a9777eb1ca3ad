//! Compile a surface plus a stitch gauge into a round-by-round plan.
//!
//! The two-step scheme behind every plan: the intrinsic radius grows by the
//! stitch height per round, so round `l` sits at `R = l * H`; solve the
//! radial coordinate `r` for that `R`, take the circumference there, and
//! divide by the stitch width for the count. Counts always come from the
//! cumulative circumference, never from accumulating deltas, so rounding
//! errors cannot drift.

mod allocate;
mod graph;
mod moebius;

pub use allocate::{
    allocate_changes, children_of_parents, increase_child_starts, parents_of_children,
    ChangeAllocator, Changes,
};
pub use graph::{build_stitch_graph, GraphNode, StitchGraph};

use crate::surfaces::{Family, SurfaceError, SurfaceSpec};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PatternError {
    #[error("invalid gauge: {0}")]
    InvalidGauge(String),
    #[error(
        "gauge incompatible with curvature growth: a round of {prev} stitches cannot become {next}"
    )]
    GaugeIncompatible { prev: u32, next: u32 },
    #[error("invalid options: {0}")]
    InvalidOptions(String),
    #[error("band too wide for parametrization")]
    BandTooWide,
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Physical stitch dimensions in cm. Width divides circumferences into
/// counts; height is the intrinsic-radius step per round.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gauge {
    width: f64,
    height: f64,
}

impl Gauge {
    pub fn new(width: f64, height: f64) -> Result<Self, PatternError> {
        for (v, name) in [(width, "width"), (height, "height")] {
            if !v.is_finite() || !(0.1..=5.0).contains(&v) {
                return Err(PatternError::InvalidGauge(format!(
                    "stitch {name} must lie in [0.1, 5] cm, got {v}"
                )));
            }
        }
        Ok(Gauge { width, height })
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn height(&self) -> f64 {
        self.height
    }
}

/// Which way a round's sequence is worked relative to the start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Outward,
    Inward,
    Mirror,
}

/// How the whole pattern is constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    ClosedRounds,
    MirroredSphere,
    BidirectionalRichmond,
    RowsHelicoid,
    MoebiusBoundary,
}

impl Construction {
    pub fn name(&self) -> &'static str {
        match self {
            Construction::ClosedRounds => "closed-rounds",
            Construction::MirroredSphere => "mirrored-sphere",
            Construction::BidirectionalRichmond => "bidirectional-richmond",
            Construction::RowsHelicoid => "rows-helicoid",
            Construction::MoebiusBoundary => "moebius-boundary",
        }
    }
}

/// One planned round (or row).
#[derive(Debug, Clone, PartialEq)]
pub struct RoundPlan {
    /// Round number within its sequence, starting at 1.
    pub index: u32,
    pub direction: Direction,
    /// Intrinsic radius of the round in cm. For mirrored rounds this is the
    /// distance from the nearer pole, so `N = stitch_count(C(R), W)` holds
    /// for every round.
    pub intrinsic_radius: f64,
    /// Round circumference (or row length) in cm.
    pub circumference: f64,
    pub stitches: u32,
    /// Signed count change against the parent round; a starting round
    /// carries its own count here.
    pub delta: i64,
    /// Parent positions worked twice (multiplicity: listed twice = thrice).
    pub increases: Vec<u32>,
    /// Heads of merged parent pairs.
    pub decreases: Vec<u32>,
    /// Stitch-boundary angles for non-uniform rounds.
    pub theta_offsets: Option<Vec<f64>>,
    /// Radial coordinate of the round in parameter units.
    pub param_r: f64,
    /// Index of the parent round within `Pattern::rounds`.
    pub parent: Option<usize>,
}

impl RoundPlan {
    /// A round with no parent round: worked into a ring or foundation.
    pub fn is_start(&self) -> bool {
        self.parent.is_none()
    }
}

/// A complete compiled pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct Pattern {
    pub surface: SurfaceSpec,
    pub gauge: Gauge,
    pub rounds: Vec<RoundPlan>,
    pub total_stitches: u64,
    pub construction: Construction,
    /// Construction remarks (mirroring, bidirectional start, foundations).
    pub notes: Vec<String>,
}

/// Round-count selection for [`compile`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RoundsSpec {
    Count(u32),
    /// Plan rounds up to this intrinsic radius in cm.
    StopRadius(f64),
    /// Fill the surface's bounded domain.
    Fill,
}

/// User-facing compile options; `rounds` and `stop_radius` are mutually
/// exclusive.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompileOptions {
    pub rounds: Option<u32>,
    pub stop_radius: Option<f64>,
}

impl CompileOptions {
    fn to_rounds_spec(self) -> Result<RoundsSpec, PatternError> {
        match (self.rounds, self.stop_radius) {
            (Some(_), Some(_)) => Err(PatternError::InvalidOptions(
                "rounds and stop-radius are mutually exclusive".into(),
            )),
            (Some(n), None) => {
                if n == 0 {
                    Err(PatternError::InvalidOptions("rounds must be >= 1".into()))
                } else {
                    Ok(RoundsSpec::Count(n))
                }
            }
            (None, Some(r)) => {
                if r.is_finite() && r > 0.0 {
                    Ok(RoundsSpec::StopRadius(r))
                } else {
                    Err(PatternError::InvalidOptions(
                        "stop-radius must be positive".into(),
                    ))
                }
            }
            (None, None) => Ok(RoundsSpec::Fill),
        }
    }
}

/// Number of stitches that a closed round of circumference `c` needs at
/// stitch width `w`: round half-up, floored at 3 so the round can close.
pub fn stitch_count(c: f64, w: f64) -> u32 {
    ((c / w + 0.5).floor() as i64).max(3) as u32
}

/// Row variant: open rows have no closing constraint, floor at 1.
pub fn stitch_count_open(c: f64, w: f64) -> u32 {
    ((c / w + 0.5).floor() as i64).max(1) as u32
}

fn resolve_round_count(
    spec: &SurfaceSpec,
    gauge: &Gauge,
    rounds: RoundsSpec,
) -> Result<u32, PatternError> {
    let n = match rounds {
        RoundsSpec::Count(n) => n,
        RoundsSpec::StopRadius(r) => (r / gauge.height() + 1e-9).floor() as u32,
        RoundsSpec::Fill => match spec.max_intrinsic_radius() {
            Some(max) => (max / gauge.height() + 1e-9).floor() as u32,
            None => {
                return Err(PatternError::InvalidOptions(format!(
                    "the {} surface is unbounded; give rounds or a stop radius",
                    spec.family().name()
                )))
            }
        },
    };
    if n == 0 {
        return Err(PatternError::InvalidOptions(
            "the requested extent yields no rounds".into(),
        ));
    }
    Ok(n)
}

/// Plan `rounds` closed rounds outward from the anchor: round `l` at
/// intrinsic radius `l * H`.
pub fn plan_rounds(
    spec: &SurfaceSpec,
    gauge: &Gauge,
    rounds: RoundsSpec,
) -> Result<Vec<RoundPlan>, PatternError> {
    let n = resolve_round_count(spec, gauge, rounds)?;
    let open_rows = matches!(spec.family(), Family::Helicoid { .. });
    let turns = match spec.family() {
        Family::Helicoid { turns, .. } => *turns as f64,
        _ => 1.0,
    };
    let mut out: Vec<RoundPlan> = Vec::with_capacity(n as usize);
    let mut alloc = ChangeAllocator::new();
    for l in 1..=n {
        let radius = l as f64 * gauge.height();
        let r = spec.invert_radius(radius)?;
        let c = spec.circumference(r)? * turns;
        let count = if open_rows {
            stitch_count_open(c, gauge.width())
        } else if out.is_empty() {
            // a round worked into a ring needs four stitches to hold shape
            stitch_count(c, gauge.width()).max(4)
        } else {
            stitch_count(c, gauge.width())
        };
        let (delta, changes, parent) = match out.last() {
            None => (count as i64, Changes::default(), None),
            Some(prev) => {
                let ch = alloc.allocate(prev.stitches, count)?;
                (count as i64 - prev.stitches as i64, ch, Some(out.len() - 1))
            }
        };
        out.push(RoundPlan {
            index: l,
            direction: Direction::Outward,
            intrinsic_radius: radius,
            circumference: c,
            stitches: count,
            delta,
            increases: changes.increases,
            decreases: changes.decreases,
            theta_offsets: None,
            param_r: r,
            parent,
        });
    }
    Ok(out)
}

/// Append the mirrored second half of a sphere plan.
///
/// The first half runs to the equator round `l_eq = round(pi S / (2H))`; the
/// total count is `round(pi S / H)`, so the equator is repeated when the
/// mirror would otherwise skip half a stitch height. Mirror round `l` copies
/// the count of round `L + 1 - l` and undoes the splits of round `L + 2 - l`:
/// its decrease heads are that round's increase clusters' child starts.
pub fn mirror_sphere(
    spec: &SurfaceSpec,
    gauge: &Gauge,
    mut plans: Vec<RoundPlan>,
) -> Result<Vec<RoundPlan>, PatternError> {
    let s_cm = match spec.family() {
        Family::Sphere { radius } => radius * spec.scale(),
        _ => {
            return Err(PatternError::Surface(SurfaceError::NotApplicable(
                "mirroring applies to the sphere",
            )))
        }
    };
    let l_eq = plans.len() as u32;
    if l_eq == 0 {
        return Err(PatternError::InvalidOptions("empty half plan".into()));
    }
    let h = gauge.height();
    let natural_total = (PI * s_cm / h + 0.5).floor() as u32;
    let total = if natural_total >= 2 * l_eq {
        2 * l_eq
    } else {
        2 * l_eq - 1
    };
    let (_, r_hi) = spec.r_domain();
    for l in (l_eq + 1)..=total {
        let src_count = &plans[(total - l) as usize]; // round total+1-l, 1-based
        let prev = plans.last().unwrap();
        let delta = src_count.stitches as i64 - prev.stitches as i64;
        let m = total + 2 - l; // the increase round this one undoes
        let decreases = if m <= l_eq && delta < 0 {
            let src = &plans[(m - 1) as usize];
            if src.increases.len() as i64 == -delta
                && src.increases.windows(2).all(|w| w[0] != w[1])
            {
                increase_child_starts(&src.increases)
            } else {
                // triple increases cannot be undone pairwise; fall back to
                // an even spread
                allocate_changes(prev.stitches, src_count.stitches)?
            }
        } else {
            Vec::new()
        };
        let parent = Some(plans.len() - 1);
        plans.push(RoundPlan {
            index: l,
            direction: Direction::Mirror,
            intrinsic_radius: (total + 1 - l) as f64 * h,
            circumference: src_count.circumference,
            stitches: src_count.stitches,
            delta,
            increases: Vec::new(),
            decreases,
            theta_offsets: None,
            param_r: (l as f64 * h / spec.scale()).min(r_hi),
            parent,
        });
    }
    Ok(plans)
}

/// Plan the planar-ended family from its shortest round outward in both
/// directions. Both sequences only ever add stitches, since the
/// circumference grows monotonically away from the minimum.
pub fn plan_bidirectional(
    spec: &SurfaceSpec,
    gauge: &Gauge,
    rounds: RoundsSpec,
) -> Result<Pattern, PatternError> {
    let (r_min, r_max) = match spec.family() {
        Family::Richmond { r_min, r_max, .. } => (*r_min, *r_max),
        _ => {
            return Err(PatternError::Surface(SurfaceError::NotApplicable(
                "bidirectional planning applies to the planar-ended family",
            )))
        }
    };
    let h = gauge.height();
    let w = gauge.width();
    let mut notes: Vec<String> = Vec::new();

    let degenerate = r_min == r_max;
    let r_star = if degenerate {
        r_min
    } else {
        spec.min_circumference_radius()?
    };
    let start_c = spec.circumference(r_star)?;
    let start_n = stitch_count(start_c, w);
    let mut rounds_out = vec![RoundPlan {
        index: 1,
        direction: Direction::Outward,
        intrinsic_radius: 0.0,
        circumference: start_c,
        stitches: start_n,
        delta: start_n as i64,
        increases: Vec::new(),
        decreases: Vec::new(),
        theta_offsets: None,
        param_r: r_star,
        parent: None,
    }];

    let cap = |edge: f64, toward_max: bool| -> Result<u32, PatternError> {
        let arc = if toward_max {
            spec.radial_arclength(r_star, edge)?
        } else {
            spec.radial_arclength(edge, r_star)?
        };
        let mut n = (arc / h + 1e-9).floor() as u32;
        match rounds {
            RoundsSpec::Count(k) => n = n.min(k),
            RoundsSpec::StopRadius(rr) => n = n.min((rr / h + 1e-9).floor() as u32),
            RoundsSpec::Fill => {}
        }
        Ok(n)
    };

    let mut n_out = if degenerate { 0 } else { cap(r_max, true)? };
    let mut n_in = if degenerate { 0 } else { cap(r_min, false)? };
    let edge_tol = 1e-7 * (r_max - r_min).max(1.0);
    if !degenerate && r_star - r_min < edge_tol {
        notes.push("shortest round sits at the inner edge; planned outward only".into());
        n_in = 0;
    }
    if !degenerate && r_max - r_star < edge_tol {
        notes.push("shortest round sits at the outer edge; planned inward only".into());
        n_out = 0;
    }

    // outward sequence, toward the rim at r_max
    let mut alloc = ChangeAllocator::new();
    for j in 1..=n_out {
        let radius = j as f64 * h;
        let r = crate::numerics::find_root(
            |x| spec.radial_arclength(r_star, x).unwrap_or(f64::NAN) - radius,
            r_star,
            r_max,
            crate::numerics::DEFAULT_ROOT_TOL * r_max.max(1.0),
        )
        .map_err(SurfaceError::from)?;
        let c = spec.circumference(r)?;
        let n = stitch_count(c, w);
        let prev = rounds_out.last().unwrap();
        let ch = alloc.allocate(prev.stitches, n)?;
        let delta = n as i64 - prev.stitches as i64;
        let parent = Some(rounds_out.len() - 1);
        rounds_out.push(RoundPlan {
            index: j + 1,
            direction: Direction::Outward,
            intrinsic_radius: radius,
            circumference: c,
            stitches: n,
            delta,
            increases: ch.increases,
            decreases: ch.decreases,
            theta_offsets: None,
            param_r: r,
            parent,
        });
    }

    // inward sequence, toward the planar edge at r_min
    let mut alloc = ChangeAllocator::new();
    let mut prev_idx = 0usize;
    for j in 1..=n_in {
        let radius = j as f64 * h;
        let r = crate::numerics::find_root(
            |x| spec.radial_arclength(x, r_star).unwrap_or(f64::NAN) - radius,
            r_min,
            r_star,
            crate::numerics::DEFAULT_ROOT_TOL * r_max.max(1.0),
        )
        .map_err(SurfaceError::from)?;
        let c = spec.circumference(r)?;
        let n = stitch_count(c, w);
        let prev_n = rounds_out[prev_idx].stitches;
        let ch = alloc.allocate(prev_n, n)?;
        let delta = n as i64 - prev_n as i64;
        rounds_out.push(RoundPlan {
            index: j,
            direction: Direction::Inward,
            intrinsic_radius: radius,
            circumference: c,
            stitches: n,
            delta,
            increases: ch.increases,
            decreases: ch.decreases,
            theta_offsets: None,
            param_r: r,
            parent: Some(prev_idx),
        });
        prev_idx = rounds_out.len() - 1;
    }

    let total = rounds_out.iter().map(|r| r.stitches as u64).sum();
    Ok(Pattern {
        surface: spec.clone(),
        gauge: gauge.clone(),
        rounds: rounds_out,
        total_stitches: total,
        construction: Construction::BidirectionalRichmond,
        notes,
    })
}

/// Plan the single-boundary band: a centre row, then rounds along the
/// band's one edge at equal arc-length stitch spacing.
pub fn plan_moebius(
    spec: &SurfaceSpec,
    gauge: &Gauge,
    rounds: RoundsSpec,
) -> Result<Pattern, PatternError> {
    moebius::plan(spec, gauge, rounds)
}

pub(crate) use moebius::ArcTable;

/// Compile a full pattern for any family.
pub fn compile(
    spec: &SurfaceSpec,
    gauge: &Gauge,
    options: CompileOptions,
) -> Result<Pattern, PatternError> {
    let rounds = options.to_rounds_spec()?;
    match spec.family() {
        Family::Richmond { .. } => plan_bidirectional(spec, gauge, rounds),
        Family::MobiusRuled { .. } => plan_moebius(spec, gauge, rounds),
        Family::Sphere { .. } => {
            if matches!(rounds, RoundsSpec::Fill) {
                let s_cm = match spec.family() {
                    Family::Sphere { radius } => radius * spec.scale(),
                    _ => unreachable!(),
                };
                let l_eq = (PI * s_cm / (2.0 * gauge.height()) + 0.5).floor() as u32;
                if l_eq == 0 {
                    return Err(PatternError::InvalidOptions(
                        "gauge too coarse for this sphere".into(),
                    ));
                }
                let half = plan_rounds(spec, gauge, RoundsSpec::Count(l_eq))?;
                let full = mirror_sphere(spec, gauge, half)?;
                let total = full.iter().map(|r| r.stitches as u64).sum();
                Ok(Pattern {
                    surface: spec.clone(),
                    gauge: gauge.clone(),
                    rounds: full,
                    total_stitches: total,
                    construction: Construction::MirroredSphere,
                    notes: vec!["second half mirrors the first in reverse".into()],
                })
            } else {
                // an explicit extent asks for a partial sphere: no mirroring
                let plans = plan_rounds(spec, gauge, rounds)?;
                let total = plans.iter().map(|r| r.stitches as u64).sum();
                Ok(Pattern {
                    surface: spec.clone(),
                    gauge: gauge.clone(),
                    rounds: plans,
                    total_stitches: total,
                    construction: Construction::ClosedRounds,
                    notes: Vec::new(),
                })
            }
        }
        Family::Helicoid { neck, turns, .. } => {
            let plans = plan_rounds(spec, gauge, rounds)?;
            let total = plans.iter().map(|r| r.stitches as u64).sum();
            let axis_len = 2.0 * PI * neck * *turns as f64 * spec.scale();
            let cast_on = stitch_count_open(axis_len, gauge.width());
            Ok(Pattern {
                surface: spec.clone(),
                gauge: gauge.clone(),
                rounds: plans,
                total_stitches: total,
                construction: Construction::RowsHelicoid,
                notes: vec![format!(
                    "foundation row of {cast_on} sts along the axis ({axis_len:.2} cm); rows stay open",
                )],
            })
        }
        Family::Catenoid { neck, .. } => {
            let plans = plan_rounds(spec, gauge, rounds)?;
            let total = plans.iter().map(|r| r.stitches as u64).sum();
            let neck_c = 2.0 * PI * neck * spec.scale();
            let ring = stitch_count(neck_c, gauge.width());
            Ok(Pattern {
                surface: spec.clone(),
                gauge: gauge.clone(),
                rounds: plans,
                total_stitches: total,
                construction: Construction::ClosedRounds,
                notes: vec![format!(
                    "start from a foundation ring of {ring} sts at the neck ({neck_c:.2} cm); work the second half the same way from the same ring",
                )],
            })
        }
        _ => {
            let plans = plan_rounds(spec, gauge, rounds)?;
            let total = plans.iter().map(|r| r.stitches as u64).sum();
            Ok(Pattern {
                surface: spec.clone(),
                gauge: gauge.clone(),
                rounds: plans,
                total_stitches: total,
                construction: Construction::ClosedRounds,
                notes: Vec::new(),
            })
        }
    }
}
