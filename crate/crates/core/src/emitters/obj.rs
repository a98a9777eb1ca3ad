//! ASCII OBJ export of a sampled parameter grid, triangulated.

use super::EmitError;
use crate::surfaces::{Family, SurfaceSpec};

/// Grid resolution and optional radial-domain overrides for mesh export.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshSampling {
    pub r_samples: u32,
    pub theta_samples: u32,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
}

impl MeshSampling {
    pub fn new(r_samples: u32, theta_samples: u32) -> Result<Self, EmitError> {
        if !(2..=4096).contains(&r_samples) {
            return Err(EmitError::InvalidSampling(format!(
                "r samples must lie in [2, 4096], got {r_samples}"
            )));
        }
        if !(3..=4096).contains(&theta_samples) {
            return Err(EmitError::InvalidSampling(format!(
                "theta samples must lie in [3, 4096], got {theta_samples}"
            )));
        }
        Ok(MeshSampling {
            r_samples,
            theta_samples,
            r_min: None,
            r_max: None,
        })
    }

    pub fn with_r_range(mut self, r_min: Option<f64>, r_max: Option<f64>) -> Self {
        self.r_min = r_min;
        self.r_max = r_max;
        self
    }
}

fn default_r_range(spec: &SurfaceSpec) -> (f64, f64) {
    let (lo, hi) = spec.r_domain();
    if hi.is_finite() {
        (lo, hi)
    } else {
        // unbounded families need a viewport; one ring past the first
        // self-intersection reads well for the saddle family
        match spec.family() {
            Family::Enneper { .. } => (0.0, 1.5),
            _ => (0.0, 1.0),
        }
    }
}

/// Sample the embedding on an `r x theta` grid and triangulate it.
///
/// Vertices are emitted row-major (`r` outer, `theta` inner), six decimals,
/// 1-indexed faces. Closed families weld the theta seam by reusing the first
/// column; the one-sided band welds it with the radial direction flipped.
pub fn export_obj(spec: &SurfaceSpec, sampling: &MeshSampling) -> Result<String, EmitError> {
    let (dlo, dhi) = default_r_range(spec);
    let r_lo = sampling.r_min.unwrap_or(dlo);
    let r_hi = sampling.r_max.unwrap_or(dhi);
    if r_lo.is_nan() || r_hi.is_nan() || r_lo >= r_hi {
        return Err(EmitError::InvalidSampling(format!(
            "empty radial range [{r_lo}, {r_hi}]"
        )));
    }
    let nr = sampling.r_samples as usize;
    let nt = sampling.theta_samples as usize;
    let closed = spec.theta_closed();
    let moebius = matches!(spec.family(), Family::MobiusRuled { .. });
    let period = spec.theta_range();

    let mut out = String::with_capacity(nr * nt * 32);
    for i in 0..nr {
        let r = r_lo + (r_hi - r_lo) * i as f64 / (nr - 1) as f64;
        for j in 0..nt {
            let theta = if closed {
                period * j as f64 / nt as f64
            } else {
                period * j as f64 / (nt - 1) as f64
            };
            let p = spec.point(r, theta)?;
            out.push_str(&format!("v {:.6} {:.6} {:.6}\n", p.x, p.y, p.z));
        }
    }

    let vid = |i: usize, j: usize| (i * nt + j + 1) as u64; // OBJ is 1-indexed
    let n_cols = if closed { nt } else { nt - 1 };
    for i in 0..nr - 1 {
        for j in 0..n_cols {
            let (v00, v10) = (vid(i, j), vid(i + 1, j));
            let (v01, v11) = if j + 1 < nt {
                (vid(i, j + 1), vid(i + 1, j + 1))
            } else if moebius {
                // seam weld with the radial direction flipped
                (vid(nr - 1 - i, 0), vid(nr - 2 - i, 0))
            } else {
                (vid(i, 0), vid(i + 1, 0))
            };
            out.push_str(&format!("f {v00} {v10} {v11}\n"));
            out.push_str(&format!("f {v00} {v11} {v01}\n"));
        }
    }
    Ok(out)
}
