//! Surface catalog: parametrizations, first fundamental form, circumference
//! and radial arc-length profiles, and finite-difference curvature
//! estimators.
//!
//! Every family is parametrized by `(r, theta)` where `r` is a radial
//! coordinate and `theta` an angle. Lengths come out in centimetres: the
//! `scale` factor of a [`SurfaceSpec`] converts parameter units to cm.
//!
//! Circumference and radial arc-length use closed-form profiles. The
//! order-`n` forms (`C = 2pi (r + r^(2n-1))` and so on) follow from
//! `|d sigma / d theta| = r + r^(2n-1)` and `|d sigma / d r| = 1 + r^(2n-2)`;
//! the Richmond and Bour analogues were derived the same way and are
//! cross-checked against direct quadrature of the embedding in the test and
//! verification suites before being trusted here.

use crate::numerics::{self, NumericsError};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

/// Finite-difference step for first derivatives of an embedding.
pub const CURVATURE_STEP_FIRST: f64 = 1e-5;
/// Finite-difference step for second derivatives of an embedding.
pub const CURVATURE_STEP_SECOND: f64 = 1e-4;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SurfaceError {
    #[error("invalid surface parameter: {0}")]
    InvalidParameter(String),
    #[error("parameter out of domain: r = {r}")]
    OutOfDomain { r: f64 },
    #[error("no embedding available")]
    NoEmbedding,
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("radius unreachable: R = {radius} cm exceeds {max} cm")]
    RadiusUnreachable { radius: f64, max: f64 },
    #[error("degenerate metric")]
    DegenerateMetric,
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Surface family with its parameters, in parameter units unless noted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// Flat disc in the plane.
    Disc,
    /// Round sphere; `radius` is the sphere radius S in cm.
    Sphere { radius: f64 },
    /// Hyperbolic plane of "radius" S in cm (curvature -1/S^2). Has a
    /// circumference profile but no embedding.
    Hyperbolic { radius: f64 },
    /// Order-`order` surface of the saddle family; `order >= 2`
    /// (order 1 is the flat disc).
    Enneper { order: u32 },
    /// Order-`order` planar-ended family on `r in [r_min, r_max]`, `r > 0`.
    Richmond { order: u32, r_min: f64, r_max: f64 },
    /// Six-fold branched minimal surface on `r in [0, r_max]`, `r_max <= 1`;
    /// its angle runs over `[0, 4pi]` (double cover).
    Bour { r_max: f64 },
    /// Catenoid with neck radius `neck`; `r` is the intrinsic distance from
    /// the neck circle, `|r| <= r_max`.
    Catenoid { neck: f64, r_max: f64 },
    /// Helicoid with pitch parameter `neck` (isometric to the catenoid with
    /// the same value); `turns` counts full revolutions.
    Helicoid { neck: f64, turns: u32, r_max: f64 },
    /// Ruled one-sided band: `((1 + r cos t) cos 2t, (1 + r cos t) sin 2t,
    /// r sin t)`, `t in [0, pi]`, `|r| <= half_width < 1`.
    MobiusRuled { half_width: f64 },
}

impl Family {
    /// Stable lowercase name used by the CLI and serializers.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Disc => "disc",
            Family::Sphere { .. } => "sphere",
            Family::Hyperbolic { .. } => "hyperbolic",
            Family::Enneper { .. } => "enneper",
            Family::Richmond { .. } => "richmond",
            Family::Bour { .. } => "bour",
            Family::Catenoid { .. } => "catenoid",
            Family::Helicoid { .. } => "helicoid",
            Family::MobiusRuled { .. } => "mobius",
        }
    }
}

/// A surface family plus the cm-per-parameter-unit scale factor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    family: Family,
    scale: f64,
}

/// A point of the embedded surface, in cm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SurfacePoint {
    fn scaled(v: [f64; 3], s: f64) -> Self {
        SurfacePoint {
            x: v[0] * s,
            y: v[1] * s,
            z: v[2] * s,
        }
    }
}

/// First fundamental form at a point: `e = |sigma_r|^2`, `g = |sigma_t|^2`,
/// `f = <sigma_r, sigma_t>`, all in cm^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricSample {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

fn check_positive(value: f64, what: &str) -> Result<(), SurfaceError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(SurfaceError::InvalidParameter(format!(
            "{what} must be positive and finite, got {value}"
        )))
    }
}

impl SurfaceSpec {
    /// Validate and build a spec. `scale` is in cm per parameter unit.
    pub fn new(family: Family, scale: f64) -> Result<Self, SurfaceError> {
        check_positive(scale, "scale")?;
        match &family {
            Family::Disc => {}
            Family::Sphere { radius } | Family::Hyperbolic { radius } => {
                check_positive(*radius, "radius")?;
            }
            Family::Enneper { order } => {
                if *order < 2 {
                    return Err(SurfaceError::InvalidParameter(
                        "order must be >= 2 (order 1 is the flat disc)".into(),
                    ));
                }
            }
            Family::Richmond {
                order,
                r_min,
                r_max,
            } => {
                if *order < 1 {
                    return Err(SurfaceError::InvalidParameter("order must be >= 1".into()));
                }
                check_positive(*r_min, "r_min")?;
                check_positive(*r_max, "r_max")?;
                // equality is allowed: it degenerates to a single round
                if r_min > r_max {
                    return Err(SurfaceError::InvalidParameter(
                        "r_min must not exceed r_max".into(),
                    ));
                }
            }
            Family::Bour { r_max } => {
                check_positive(*r_max, "r_max")?;
                if *r_max > 1.0 {
                    return Err(SurfaceError::InvalidParameter(
                        "r_max must be <= 1 for this family".into(),
                    ));
                }
            }
            Family::Catenoid { neck, r_max } => {
                check_positive(*neck, "neck")?;
                check_positive(*r_max, "r_max")?;
            }
            Family::Helicoid { neck, turns, r_max } => {
                check_positive(*neck, "neck")?;
                check_positive(*r_max, "r_max")?;
                if *turns < 1 {
                    return Err(SurfaceError::InvalidParameter("turns must be >= 1".into()));
                }
            }
            Family::MobiusRuled { half_width } => {
                if !(half_width.is_finite() && *half_width > 0.0 && *half_width < 1.0) {
                    return Err(SurfaceError::InvalidParameter(
                        "half_width must lie in (0, 1)".into(),
                    ));
                }
            }
        }
        Ok(SurfaceSpec { family, scale })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Radial domain in parameter units, `(lo, hi)`; `hi` may be infinite.
    pub fn r_domain(&self) -> (f64, f64) {
        match &self.family {
            Family::Disc | Family::Hyperbolic { .. } | Family::Enneper { .. } => {
                (0.0, f64::INFINITY)
            }
            Family::Sphere { radius } => (0.0, PI * radius),
            Family::Richmond { r_min, r_max, .. } => (*r_min, *r_max),
            Family::Bour { r_max } => (0.0, *r_max),
            Family::Catenoid { r_max, .. } => (-r_max, *r_max),
            Family::Helicoid { r_max, .. } => (0.0, *r_max),
            Family::MobiusRuled { half_width } => (-half_width, *half_width),
        }
    }

    /// Full angular range of one closed pass, in parameter units.
    pub fn theta_range(&self) -> f64 {
        match &self.family {
            Family::Bour { .. } => 4.0 * PI,
            Family::MobiusRuled { .. } => PI,
            Family::Helicoid { turns, .. } => 2.0 * PI * *turns as f64,
            _ => 2.0 * PI,
        }
    }

    /// True when the theta direction closes onto itself seamlessly.
    pub fn theta_closed(&self) -> bool {
        !matches!(self.family, Family::Helicoid { .. })
    }

    fn check_r(&self, r: f64) -> Result<(), SurfaceError> {
        let (lo, hi) = self.r_domain();
        if r.is_finite() && r >= lo - 1e-12 && r <= hi + 1e-12 {
            Ok(())
        } else {
            Err(SurfaceError::OutOfDomain { r })
        }
    }

    /// Evaluate the embedding at `(r, theta)` and scale to cm.
    ///
    /// The hyperbolic plane has no embedding and rejects this call.
    pub fn point(&self, r: f64, theta: f64) -> Result<SurfacePoint, SurfaceError> {
        self.check_r(r)?;
        if !theta.is_finite() {
            return Err(SurfaceError::OutOfDomain { r: theta });
        }
        let p = match &self.family {
            Family::Disc => [r * theta.cos(), r * theta.sin(), 0.0],
            Family::Sphere { radius } => {
                let s = *radius;
                [
                    s * (r / s).sin() * theta.cos(),
                    s * (r / s).sin() * theta.sin(),
                    s * (r / s).cos(),
                ]
            }
            Family::Hyperbolic { .. } => return Err(SurfaceError::NoEmbedding),
            Family::Enneper { order } => {
                let n = *order as f64;
                let p = 2.0 * n - 1.0;
                [
                    r * theta.cos() - r.powf(p) / p * (p * theta).cos(),
                    r * theta.sin() + r.powf(p) / p * (p * theta).sin(),
                    2.0 * r.powf(n) / n * (n * theta).cos(),
                ]
            }
            Family::Richmond { order, .. } => {
                let n = *order as f64;
                let p = 2.0 * n + 1.0;
                [
                    -theta.cos() / r - r.powf(p) / p * (p * theta).cos(),
                    -theta.sin() / r - r.powf(p) / p * (p * theta).sin(),
                    2.0 * r.powf(n) / n * (n * theta).cos(),
                ]
            }
            Family::Bour { .. } => [
                r * theta.cos() - 0.5 * r * r * (2.0 * theta).cos(),
                -r * theta.sin() - 0.5 * r * r * (2.0 * theta).sin(),
                4.0 / 3.0 * r.powf(1.5) * (1.5 * theta).cos(),
            ],
            Family::Catenoid { neck, .. } => {
                let c = *neck;
                let rho = (c * c + r * r).sqrt();
                [rho * theta.cos(), rho * theta.sin(), c * (r / c).asinh()]
            }
            Family::Helicoid { neck, .. } => [r * theta.cos(), r * theta.sin(), neck * theta],
            Family::MobiusRuled { .. } => {
                let ring = 1.0 + r * theta.cos();
                [
                    ring * (2.0 * theta).cos(),
                    ring * (2.0 * theta).sin(),
                    r * theta.sin(),
                ]
            }
        };
        Ok(SurfacePoint::scaled(p, self.scale))
    }

    /// First fundamental form at `(r, theta)`, scale^2 applied.
    ///
    /// Closed forms throughout; the hyperbolic plane gets its intrinsic
    /// metric even though it has no embedding.
    pub fn metric(&self, r: f64, theta: f64) -> Result<MetricSample, SurfaceError> {
        self.check_r(r)?;
        let (e, f, g) = match &self.family {
            Family::Disc => (1.0, 0.0, r * r),
            Family::Sphere { radius } => {
                let s = (r / radius).sin() * radius;
                (1.0, 0.0, s * s)
            }
            Family::Hyperbolic { radius } => {
                let s = (r / radius).sinh() * radius;
                (1.0, 0.0, s * s)
            }
            Family::Enneper { order } => {
                let n = *order as f64;
                let er = 1.0 + r.powf(2.0 * n - 2.0);
                let gr = r + r.powf(2.0 * n - 1.0);
                (er * er, 0.0, gr * gr)
            }
            Family::Richmond { order, .. } => {
                let n = *order as f64;
                let er = 1.0 / (r * r) + r.powf(2.0 * n);
                let gr = 1.0 / r + r.powf(2.0 * n + 1.0);
                (er * er, 0.0, gr * gr)
            }
            Family::Bour { .. } => {
                let one = 1.0 + r;
                (one * one, 0.0, r * r * one * one)
            }
            Family::Catenoid { neck, .. } | Family::Helicoid { neck, .. } => {
                (1.0, 0.0, neck * neck + r * r)
            }
            Family::MobiusRuled { .. } => {
                let ring = 1.0 + r * theta.cos();
                (1.0, 0.0, 4.0 * ring * ring + r * r)
            }
        };
        let s2 = self.scale * self.scale;
        Ok(MetricSample {
            e: e * s2,
            f: f * s2,
            g: g * s2,
        })
    }

    /// Circumference in cm of the closed curve at radial coordinate `r`.
    ///
    /// Closed forms per family; for the ruled band this is the length of the
    /// single boundary curve of the sub-band of half-width `|r|` (the full
    /// `[0, 2pi]` integral), or the centre-circle length `2 pi scale` at
    /// `r = 0`.
    pub fn circumference(&self, r: f64) -> Result<f64, SurfaceError> {
        self.check_r(r)?;
        let c = match &self.family {
            Family::Disc => 2.0 * PI * r,
            Family::Sphere { radius } => 2.0 * PI * radius * (r / radius).sin(),
            Family::Hyperbolic { radius } => 2.0 * PI * radius * (r / radius).sinh(),
            Family::Enneper { order } => {
                let n = *order as f64;
                2.0 * PI * (r + r.powf(2.0 * n - 1.0))
            }
            Family::Richmond { order, .. } => {
                let n = *order as f64;
                2.0 * PI * (1.0 / r + r.powf(2.0 * n + 1.0))
            }
            Family::Bour { .. } => 4.0 * PI * r * (1.0 + r),
            Family::Catenoid { neck, .. } | Family::Helicoid { neck, .. } => {
                // Per-turn row length for the ruled variant; isometric twins.
                2.0 * PI * (neck * neck + r * r).sqrt()
            }
            Family::MobiusRuled { .. } => {
                if r == 0.0 {
                    2.0 * PI
                } else {
                    let w = r.abs();
                    let q = numerics::integrate(
                        |t| (4.0 * (1.0 + w * t.cos()).powi(2) + w * w).sqrt(),
                        0.0,
                        2.0 * PI,
                        1e-11,
                    )?;
                    q.value
                }
            }
        };
        Ok(c * self.scale)
    }

    /// Circumference by direct quadrature of `sqrt(G)` over the family's
    /// full angular range. Used to validate the closed forms.
    pub fn circumference_quadrature(&self, r: f64) -> Result<f64, SurfaceError> {
        self.check_r(r)?;
        let range = match &self.family {
            Family::MobiusRuled { .. } => {
                if r == 0.0 {
                    PI
                } else {
                    2.0 * PI
                }
            }
            Family::Helicoid { .. } => 2.0 * PI,
            _ => self.theta_range(),
        };
        let q = numerics::integrate_rel(
            |t| self.metric(r, t).map(|m| m.g.sqrt()).unwrap_or(f64::NAN),
            0.0,
            range,
            1e-11,
        )?;
        Ok(q.value)
    }

    /// Arc length in cm along a radial curve from `r0` to `r1` (fixed theta;
    /// the profile is theta-independent for every family in the catalog).
    pub fn radial_arclength(&self, r0: f64, r1: f64) -> Result<f64, SurfaceError> {
        self.check_r(r0)?;
        self.check_r(r1)?;
        let a = match &self.family {
            Family::Disc
            | Family::Sphere { .. }
            | Family::Hyperbolic { .. }
            | Family::Catenoid { .. }
            | Family::Helicoid { .. }
            | Family::MobiusRuled { .. } => r1 - r0,
            Family::Enneper { order } => {
                let p = 2.0 * *order as f64 - 1.0;
                (r1 + r1.powf(p) / p) - (r0 + r0.powf(p) / p)
            }
            Family::Richmond { order, .. } => {
                let p = 2.0 * *order as f64 + 1.0;
                (-1.0 / r1 + r1.powf(p) / p) - (-1.0 / r0 + r0.powf(p) / p)
            }
            Family::Bour { .. } => (r1 + 0.5 * r1 * r1) - (r0 + 0.5 * r0 * r0),
        };
        Ok(a * self.scale)
    }

    /// Radial arc length by quadrature of `sqrt(E)`; validation twin of
    /// [`SurfaceSpec::radial_arclength`].
    pub fn radial_arclength_quadrature(&self, r0: f64, r1: f64) -> Result<f64, SurfaceError> {
        self.check_r(r0)?;
        self.check_r(r1)?;
        let q = numerics::integrate_rel(
            |r| {
                self.metric(r, 0.123)
                    .map(|m| m.e.sqrt())
                    .unwrap_or(f64::NAN)
            },
            r0,
            r1,
            1e-11,
        )?;
        Ok(q.value)
    }

    /// Parameter coordinate of the anchor from which intrinsic radii are
    /// measured: `r = 0` for centre-anchored families, `r_min` for the
    /// planar-ended family, the neck for the catenoid.
    pub fn anchor_r(&self) -> f64 {
        match &self.family {
            Family::Richmond { r_min, .. } => *r_min,
            _ => 0.0,
        }
    }

    /// Largest reachable intrinsic radius from the anchor, in cm, when the
    /// domain is bounded.
    pub fn max_intrinsic_radius(&self) -> Option<f64> {
        let (_, hi) = self.r_domain();
        if hi.is_finite() {
            Some(self.radial_arclength(self.anchor_r(), hi).unwrap_or(0.0))
        } else {
            None
        }
    }

    /// Solve for the parameter `r` whose intrinsic radius from the anchor is
    /// `radius` cm.
    pub fn invert_radius(&self, radius: f64) -> Result<f64, SurfaceError> {
        if radius.is_nan() || radius < 0.0 {
            return Err(SurfaceError::InvalidParameter(format!(
                "intrinsic radius must be >= 0, got {radius}"
            )));
        }
        if let Some(max) = self.max_intrinsic_radius() {
            if radius > max + 1e-9 {
                return Err(SurfaceError::RadiusUnreachable { radius, max });
            }
        }
        if radius == 0.0 {
            return Ok(self.anchor_r());
        }
        let target = radius / self.scale;
        match &self.family {
            Family::Disc
            | Family::Sphere { .. }
            | Family::Hyperbolic { .. }
            | Family::Catenoid { .. }
            | Family::Helicoid { .. }
            | Family::MobiusRuled { .. } => Ok(target.min(self.r_domain().1)),
            Family::Enneper { order } => {
                let p = 2.0 * *order as f64 - 1.0;
                // R(r) >= r, so the root lies in [0, target].
                let root = numerics::find_root(
                    |r| r + r.powf(p) / p - target,
                    0.0,
                    target,
                    numerics::DEFAULT_ROOT_TOL * target.max(1.0),
                )?;
                Ok(root)
            }
            Family::Bour { r_max } => {
                let root = numerics::find_root(
                    |r| r + 0.5 * r * r - target,
                    0.0,
                    *r_max,
                    numerics::DEFAULT_ROOT_TOL,
                )?;
                Ok(root)
            }
            Family::Richmond {
                order,
                r_min,
                r_max,
            } => {
                let p = 2.0 * *order as f64 + 1.0;
                let profile = |r: f64| -1.0 / r + r.powf(p) / p;
                let base = profile(*r_min);
                let root = numerics::find_root(
                    |r| profile(r) - base - target,
                    *r_min,
                    *r_max,
                    numerics::DEFAULT_ROOT_TOL * r_max.max(1.0),
                )?;
                Ok(root)
            }
        }
    }

    /// Radial coordinate of the shortest round, found by golden-section
    /// search over the circumference profile. Only the planar-ended family
    /// has an interior minimum to look for.
    pub fn min_circumference_radius(&self) -> Result<f64, SurfaceError> {
        match &self.family {
            Family::Richmond { r_min, r_max, .. } => {
                let x = numerics::minimize_scalar(
                    |r| self.circumference(r).unwrap_or(f64::INFINITY),
                    *r_min,
                    *r_max,
                    1e-9,
                )?;
                Ok(x)
            }
            _ => Err(SurfaceError::NotApplicable(
                "minimum-circumference start only applies to the planar-ended family",
            )),
        }
    }

    /// Embedding derivatives by central differences, then the second
    /// fundamental form. Returns (E, F, G, e, f, g) in scaled units.
    fn fundamental_forms(&self, r: f64, theta: f64) -> Result<[f64; 6], SurfaceError> {
        let h1 = CURVATURE_STEP_FIRST;
        let h2 = CURVATURE_STEP_SECOND;
        let at = |rr: f64, tt: f64| -> Result<[f64; 3], SurfaceError> {
            let p = self.point(rr, tt)?;
            Ok([p.x, p.y, p.z])
        };
        let sub = |a: [f64; 3], b: [f64; 3], s: f64| {
            [(a[0] - b[0]) * s, (a[1] - b[1]) * s, (a[2] - b[2]) * s]
        };
        let add = |a: [f64; 3], b: [f64; 3]| [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
        let sr = sub(at(r + h1, theta)?, at(r - h1, theta)?, 0.5 / h1);
        let st = sub(at(r, theta + h1)?, at(r, theta - h1)?, 0.5 / h1);
        let p0 = at(r, theta)?;
        let two = [2.0 * p0[0], 2.0 * p0[1], 2.0 * p0[2]];
        let srr = sub(
            add(at(r + h2, theta)?, at(r - h2, theta)?),
            two,
            1.0 / (h2 * h2),
        );
        let stt = sub(
            add(at(r, theta + h2)?, at(r, theta - h2)?),
            two,
            1.0 / (h2 * h2),
        );
        let pp = at(r + h2, theta + h2)?;
        let pm = at(r + h2, theta - h2)?;
        let mp = at(r - h2, theta + h2)?;
        let mm = at(r - h2, theta - h2)?;
        let srt = [
            (pp[0] - pm[0] - mp[0] + mm[0]) / (4.0 * h2 * h2),
            (pp[1] - pm[1] - mp[1] + mm[1]) / (4.0 * h2 * h2),
            (pp[2] - pm[2] - mp[2] + mm[2]) / (4.0 * h2 * h2),
        ];
        let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        let cross = [
            sr[1] * st[2] - sr[2] * st[1],
            sr[2] * st[0] - sr[0] * st[2],
            sr[0] * st[1] - sr[1] * st[0],
        ];
        let nn = dot(cross, cross).sqrt();
        let (ee, ff, gg) = (dot(sr, sr), dot(sr, st), dot(st, st));
        if ee * gg - ff * ff < 1e-12 || nn == 0.0 {
            return Err(SurfaceError::DegenerateMetric);
        }
        let n = [cross[0] / nn, cross[1] / nn, cross[2] / nn];
        Ok([ee, ff, gg, dot(srr, n), dot(srt, n), dot(stt, n)])
    }

    /// Mean curvature `H = (eG - 2fF + gE) / (2 (EG - F^2))` at an interior
    /// point, by finite differences on the embedding. The sign follows the
    /// `sigma_r x sigma_theta` normal.
    pub fn mean_curvature(&self, r: f64, theta: f64) -> Result<f64, SurfaceError> {
        let [ee, ff, gg, l, m, n] = self.fundamental_forms(r, theta)?;
        Ok((l * gg - 2.0 * m * ff + n * ee) / (2.0 * (ee * gg - ff * ff)))
    }

    /// Gaussian curvature `K = (eg - f^2) / (EG - F^2)`; intrinsic, but
    /// estimated here through the embedding.
    pub fn gaussian_curvature(&self, r: f64, theta: f64) -> Result<f64, SurfaceError> {
        let [ee, ff, gg, l, m, n] = self.fundamental_forms(r, theta)?;
        Ok((l * n - m * m) / (ee * gg - ff * ff))
    }

    /// Principal curvature magnitudes `|H| +- sqrt(H^2 - K)`, largest first.
    pub fn principal_curvatures(&self, r: f64, theta: f64) -> Result<(f64, f64), SurfaceError> {
        let h = self.mean_curvature(r, theta)?;
        let k = self.gaussian_curvature(r, theta)?;
        let disc = (h * h - k).max(0.0).sqrt();
        Ok((
            (h + disc).abs().max((h - disc).abs()),
            (h + disc).abs().min((h - disc).abs()),
        ))
    }
}
