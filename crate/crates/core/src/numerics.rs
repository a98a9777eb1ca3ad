//! Self-contained 1-D numerical kernel: adaptive quadrature, bracketed
//! root-finding, golden-section minimization, and central finite differences.
//!
//! Everything here is pure and deterministic: the same inputs always produce
//! the same outputs, so results are reproducible across runs and threads.

use thiserror::Error;

/// Default absolute tolerance for [`integrate`].
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;
/// Default bracket-width tolerance for [`find_root`].
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;
/// Default bracket-width tolerance for [`minimize_scalar`].
pub const DEFAULT_MIN_TOL: f64 = 1e-10;
/// Default step for first-order central differences.
pub const DEFAULT_STEP_FIRST: f64 = 1e-6;
/// Default step for second-order central differences.
pub const DEFAULT_STEP_SECOND: f64 = 1e-4;
/// Function-evaluation budget for one adaptive quadrature call.
pub const QUAD_EVAL_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error("quadrature budget exceeded")]
    QuadratureBudgetExceeded,
    #[error("root not bracketed")]
    RootNotBracketed,
    #[error("empty bracket")]
    EmptyBracket,
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(f64),
}

/// Outcome of an adaptive quadrature run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    /// Estimated value of the integral.
    pub value: f64,
    /// Accumulated absolute error estimate (always >= 0).
    pub error_estimate: f64,
    /// Number of integrand evaluations used (always >= 3).
    pub evaluations: u64,
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

/// Integrate `f` over `[a, b]` to absolute tolerance `tol` by adaptive
/// Simpson bisection. Panels are split left-to-right, so the traversal
/// order (and hence the result) is deterministic.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadratureResult, NumericsError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(NumericsError::InvalidTolerance(tol));
    }
    let evals = std::cell::Cell::new(0u64);
    let eval = |x: f64| {
        evals.set(evals.get() + 1);
        f(x)
    };
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (eval(a), eval(m), eval(b));
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: evals.get(),
        });
    }
    let whole = simpson(fa, fm, fb, b - a);

    // Explicit stack instead of recursion; children pushed right-then-left so
    // the left panel is always processed first.
    struct Panel {
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
    }
    let mut stack = vec![Panel {
        a,
        b,
        fa,
        fm,
        fb,
        whole,
        tol,
    }];
    let mut value = 0.0;
    let mut err_acc = 0.0;
    while let Some(p) = stack.pop() {
        if evals.get() + 2 > QUAD_EVAL_BUDGET {
            return Err(NumericsError::QuadratureBudgetExceeded);
        }
        let m = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + m);
        let rm = 0.5 * (m + p.b);
        let flm = eval(lm);
        let frm = eval(rm);
        let left = simpson(p.fa, flm, p.fm, m - p.a);
        let right = simpson(p.fm, frm, p.fb, p.b - m);
        let delta = left + right - p.whole;
        // Width floor: stop subdividing once panels reach the resolution of
        // f64 spacing; below that the correction is pure round-off.
        if delta.abs() <= 15.0 * p.tol || (p.b - p.a).abs() < 1e-14 * (b - a).abs().max(1.0) {
            value += left + right + delta / 15.0;
            err_acc += delta.abs() / 15.0;
        } else {
            let half_tol = 0.5 * p.tol;
            stack.push(Panel {
                a: m,
                b: p.b,
                fa: p.fm,
                fm: frm,
                fb: p.fb,
                whole: right,
                tol: half_tol,
            });
            stack.push(Panel {
                a: p.a,
                b: m,
                fa: p.fa,
                fm: flm,
                fb: p.fm,
                whole: left,
                tol: half_tol,
            });
        }
    }
    Ok(QuadratureResult {
        value,
        error_estimate: err_acc,
        evaluations: evals.get(),
    })
}

/// Integrate with a tolerance relative to the magnitude of the integral.
///
/// Runs a coarse pass to estimate the magnitude, then refines with an
/// absolute tolerance of `rel_tol * max(1, |coarse|)`.
pub fn integrate_rel<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
) -> Result<QuadratureResult, NumericsError> {
    let coarse = integrate(&f, a, b, 1e-3)?;
    let tol = rel_tol * coarse.value.abs().max(1.0);
    integrate(&f, a, b, tol)
}

/// Find a root of `f` on the bracket `[lo, hi]` where `f(lo)` and `f(hi)`
/// have opposite signs. Bisection with a secant acceleration step; the
/// bracket always shrinks, so convergence is guaranteed. Returns once the
/// bracket width is at most `tol`.
pub fn find_root<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64, NumericsError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(NumericsError::InvalidTolerance(tol));
    }
    let (mut a, mut b) = (lo, hi);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(NumericsError::RootNotBracketed);
    }
    for _ in 0..256 {
        if (b - a).abs() <= tol {
            break;
        }
        let mid = 0.5 * (a + b);
        // Secant candidate; fall back to the midpoint unless it lands
        // strictly inside the middle 90% of the bracket.
        let mut x = mid;
        let denom = fb - fa;
        if denom != 0.0 {
            let s = b - fb * (b - a) / denom;
            let margin = 0.05 * (b - a).abs();
            if s > a.min(b) + margin && s < a.max(b) - margin {
                x = s;
            }
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fa * fx < 0.0 {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
    }
    Ok(0.5 * (a + b))
}

/// Golden-section search for the minimum of a unimodal `f` on `[lo, hi]`.
/// Returns the bracket midpoint once the bracket width is at most `tol`.
pub fn minimize_scalar<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64, NumericsError> {
    if lo.is_nan() || hi.is_nan() || lo >= hi {
        return Err(NumericsError::EmptyBracket);
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(NumericsError::InvalidTolerance(tol));
    }
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = f(d);
        }
    }
    Ok(0.5 * (a + b))
}

/// Derivative order for [`differentiate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeOrder {
    First,
    Second,
}

/// Central finite difference of the requested order; error is O(step^2).
/// The caller chooses the step (see [`DEFAULT_STEP_FIRST`],
/// [`DEFAULT_STEP_SECOND`]).
pub fn differentiate<F: Fn(f64) -> f64>(f: F, x: f64, order: DerivativeOrder, step: f64) -> f64 {
    match order {
        DerivativeOrder::First => (f(x + step) - f(x - step)) / (2.0 * step),
        DerivativeOrder::Second => (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step),
    }
}
