//! Built-in verification suites: closed forms against quadrature, curvature
//! of the minimal families, the catenoid-helicoid isometry, the reference
//! gauge-table fit, and knot arithmetic. The CLI `verify` command runs these
//! and reports one line per check.

use crate::knots;
use crate::numerics;
use crate::pattern::{compile, ArcTable, CompileOptions, Gauge};
use crate::surfaces::{Family, SurfaceSpec};
use std::f64::consts::PI;
use std::time::Instant;

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: String) -> Self {
        CheckResult {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckResult {
            name,
            passed: false,
            detail,
        }
    }
}

/// Hand-checked reference instruction counts for the order-2 model at
/// stitch width 0.5 cm: (stitch height, counts per round, quoted total).
pub const REFERENCE_COLUMNS: [(f64, &[u32], u32); 3] = [
    (
        0.40,
        &[
            5, 11, 18, 25, 34, 43, 53, 63, 74, 85, 96, 107, 119, 131, 143, 155, 167, 180,
        ],
        1512,
    ),
    (
        0.45,
        &[
            6, 12, 20, 29, 39, 49, 61, 73, 85, 97, 110, 123, 136, 150, 164, 178, 192,
        ],
        1525,
    ),
    (
        0.50,
        &[
            6, 14, 23, 33, 44, 56, 69, 82, 96, 110, 124, 139, 154, 169, 184, 200,
        ],
        1504,
    ),
];

/// Model counts for the order-2 surface at a given scale and gauge.
pub fn reference_model_counts(scale: f64, h: f64, w: f64, rounds: usize) -> Vec<u32> {
    let spec = SurfaceSpec::new(Family::Enneper { order: 2 }, scale).expect("valid spec");
    (1..=rounds)
        .map(|l| {
            let r = spec.invert_radius(l as f64 * h).expect("reachable");
            crate::pattern::stitch_count(spec.circumference(r).expect("in domain"), w)
        })
        .collect()
}

/// Brute-force scan of the scale factor minimizing the summed count error
/// against a reference column. Returns `(best_scale, summed_error)`.
pub fn fit_reference_scale(h: f64, w: f64, counts: &[u32]) -> (f64, u64) {
    let mut best = (f64::NAN, u64::MAX);
    let mut k = 0;
    loop {
        let s = 1.5 + 0.005 * k as f64;
        if s > 2.6 + 1e-9 {
            break;
        }
        let model = reference_model_counts(s, h, w, counts.len());
        let err: u64 = model
            .iter()
            .zip(counts)
            .map(|(&a, &b)| (a as i64 - b as i64).unsigned_abs())
            .sum();
        if err < best.1 {
            best = (s, err);
        }
        k += 1;
    }
    best
}

fn check_closed_form_profiles() -> CheckResult {
    let name = "closed-form profiles vs quadrature";
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    let mut run = |spec: &SurfaceSpec, lo: f64, hi: f64, samples: u32| {
        for i in 0..samples {
            let r = lo + (hi - lo) * i as f64 / (samples - 1) as f64;
            let c = spec.circumference(r).unwrap();
            let cq = spec.circumference_quadrature(r).unwrap();
            worst = worst.max((c - cq).abs() / c.abs().max(1e-30));
            let a = spec.radial_arclength(lo, r).unwrap();
            if r > lo {
                let aq = spec.radial_arclength_quadrature(lo, r).unwrap();
                worst = worst.max((a - aq).abs() / a.abs().max(1.0));
            }
            cases += 1;
        }
    };
    for n in [2u32, 3, 6] {
        run(
            &SurfaceSpec::new(Family::Enneper { order: n }, 1.0).unwrap(),
            0.1,
            2.5,
            20,
        );
    }
    run(
        &SurfaceSpec::new(
            Family::Richmond {
                order: 1,
                r_min: 0.3,
                r_max: 2.0,
            },
            1.0,
        )
        .unwrap(),
        0.3,
        2.0,
        12,
    );
    run(
        &SurfaceSpec::new(Family::Bour { r_max: 1.0 }, 1.0).unwrap(),
        0.05,
        1.0,
        12,
    );
    let detail = format!("worst relative error {worst:.2e} over {cases} samples");
    if worst <= 1e-8 {
        CheckResult::pass(name, detail)
    } else {
        CheckResult::fail(name, detail)
    }
}

fn minimal_grid(spec: &SurfaceSpec, r_lo: f64, r_hi: f64) -> (f64, f64) {
    let t_hi = spec.theta_range() - 0.1;
    let mut worst_ratio: f64 = 0.0;
    let mut worst_k = f64::MIN;
    for i in 0..10 {
        let r = r_lo + (r_hi - r_lo) * i as f64 / 9.0;
        for j in 0..10 {
            let th = 0.1 + (t_hi - 0.1) * j as f64 / 9.0;
            let h = spec.mean_curvature(r, th).unwrap();
            let (k1, _) = spec.principal_curvatures(r, th).unwrap();
            let k = spec.gaussian_curvature(r, th).unwrap();
            if k1 > 0.0 {
                worst_ratio = worst_ratio.max(h.abs() / k1);
            }
            worst_k = worst_k.max(k);
        }
    }
    (worst_ratio, worst_k)
}

fn check_minimal_surfaces() -> CheckResult {
    let name = "minimal-surface curvature";
    let grids: Vec<(SurfaceSpec, f64, f64)> = vec![
        (
            SurfaceSpec::new(Family::Enneper { order: 2 }, 1.0).unwrap(),
            0.15,
            1.7,
        ),
        (
            SurfaceSpec::new(Family::Enneper { order: 3 }, 1.0).unwrap(),
            0.15,
            1.7,
        ),
        (
            SurfaceSpec::new(
                Family::Richmond {
                    order: 1,
                    r_min: 0.3,
                    r_max: 2.0,
                },
                1.0,
            )
            .unwrap(),
            0.31,
            1.95,
        ),
        (
            SurfaceSpec::new(Family::Bour { r_max: 1.0 }, 1.0).unwrap(),
            0.1,
            0.99,
        ),
        (
            SurfaceSpec::new(
                Family::Catenoid {
                    neck: 1.0,
                    r_max: 3.0,
                },
                1.0,
            )
            .unwrap(),
            0.1,
            2.9,
        ),
        (
            SurfaceSpec::new(
                Family::Helicoid {
                    neck: 1.0,
                    turns: 1,
                    r_max: 3.0,
                },
                1.0,
            )
            .unwrap(),
            0.1,
            2.9,
        ),
    ];
    let mut worst_ratio: f64 = 0.0;
    let mut worst_k = f64::MIN;
    for (spec, lo, hi) in &grids {
        let (r, k) = minimal_grid(spec, *lo, *hi);
        worst_ratio = worst_ratio.max(r);
        worst_k = worst_k.max(k);
    }
    // positive-curvature control
    let sphere = SurfaceSpec::new(Family::Sphere { radius: 2.0 }, 1.0).unwrap();
    let mut sphere_err: f64 = 0.0;
    for i in 0..5 {
        let r = 0.5 + i as f64 * 0.9;
        let k = sphere.gaussian_curvature(r, 0.3 + i as f64).unwrap();
        sphere_err = sphere_err.max((k - 0.25).abs() / 0.25);
    }
    let detail = format!(
        "max |H|/kappa {worst_ratio:.2e}, max K {worst_k:.2e}, sphere K error {sphere_err:.2e}"
    );
    if worst_ratio <= 1e-3 && worst_k <= 1e-6 && sphere_err <= 1e-4 {
        CheckResult::pass(name, detail)
    } else {
        CheckResult::fail(name, detail)
    }
}

fn check_isometry() -> CheckResult {
    let name = "catenoid-helicoid isometry";
    let heli = SurfaceSpec::new(
        Family::Helicoid {
            neck: 1.0,
            turns: 1,
            r_max: 3.0,
        },
        1.0,
    )
    .unwrap();
    let cat = SurfaceSpec::new(
        Family::Catenoid {
            neck: 1.0,
            r_max: 3.0,
        },
        1.0,
    )
    .unwrap();
    let mut worst: f64 = 0.0;
    for i in 0..30 {
        let r = 3.0 * i as f64 / 29.0;
        // one full turn of the ruled row, by quadrature of its speed
        let row = numerics::integrate(
            |t| heli.metric(r, t).map(|m| m.g.sqrt()).unwrap_or(f64::NAN),
            0.0,
            2.0 * PI,
            1e-12,
        )
        .unwrap()
        .value;
        let round = cat.circumference(r).unwrap();
        worst = worst.max((row - round).abs());
    }
    let detail = format!("max |row - round| = {worst:.2e} cm over 30 radii");
    if worst <= 1e-10 {
        CheckResult::pass(name, detail)
    } else {
        CheckResult::fail(name, detail)
    }
}

fn check_reference_fit() -> CheckResult {
    let name = "reference gauge-table fit";
    let mut details = Vec::new();
    let mut ok = true;
    for (h, counts, printed_total) in REFERENCE_COLUMNS {
        let t0 = Instant::now();
        let (s, _) = fit_reference_scale(h, 0.5, counts);
        let model = reference_model_counts(s, h, 0.5, counts.len());
        let elapsed = t0.elapsed();
        let diffs: Vec<i64> = model
            .iter()
            .zip(counts)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect();
        let within1 = diffs.iter().filter(|d| d.abs() <= 1).count();
        let max_abs = diffs.iter().map(|d| d.abs()).max().unwrap_or(0);
        let total: i64 = model.iter().map(|&x| x as i64).sum();
        let total_rel = (total - printed_total as i64).abs() as f64 / printed_total as f64;
        // timing gates the check but stays out of the detail string so the
        // report is byte-identical across runs
        let col_ok = within1 * 10 >= counts.len() * 8
            && max_abs <= 3
            && total_rel <= 0.015
            && elapsed.as_secs_f64() < 1.0;
        ok &= col_ok;
        details.push(format!(
            "H={h}: s={s:.3}, {}/{} within +-1, max {}, total {} vs {} ({:.2}%)",
            within1,
            counts.len(),
            max_abs,
            total,
            printed_total,
            100.0 * total_rel,
        ));
    }
    let detail = details.join("; ");
    if ok {
        CheckResult::pass(name, detail)
    } else {
        CheckResult::fail(name, detail)
    }
}

fn check_disc_rule() -> CheckResult {
    let name = "flat-disc stitch rule";
    let mut ok = true;
    let mut details = Vec::new();
    for ratio in [1.0, 0.9, 0.8] {
        let g = Gauge::new(0.5, 0.5 * ratio).unwrap();
        let spec = SurfaceSpec::new(Family::Disc, 1.0).unwrap();
        let p = compile(
            &spec,
            &g,
            CompileOptions {
                rounds: Some(50),
                stop_radius: None,
            },
        )
        .unwrap();
        let mean = p.rounds.iter().map(|r| r.delta as f64).sum::<f64>() / p.rounds.len() as f64;
        let target = 2.0 * PI * ratio;
        let mean_ok = (mean - target).abs() <= 0.05;
        let set_ok = if ratio == 1.0 {
            p.rounds.iter().all(|r| r.delta == 6 || r.delta == 7)
        } else {
            true
        };
        ok &= mean_ok && set_ok;
        details.push(format!("H/W={ratio}: mean {mean:.3} vs {target:.3}"));
    }
    let detail = details.join("; ");
    if ok {
        CheckResult::pass(name, detail)
    } else {
        CheckResult::fail(name, detail)
    }
}

fn check_sphere_plan() -> CheckResult {
    let name = "mirrored sphere plan";
    let spec = SurfaceSpec::new(Family::Sphere { radius: 4.0 }, 1.0).unwrap();
    let g = Gauge::new(0.5, 0.5).unwrap();
    let p = compile(&spec, &g, CompileOptions::default()).unwrap();
    let counts: Vec<u32> = p.rounds.iter().map(|r| r.stitches).collect();
    let rev: Vec<u32> = counts.iter().rev().copied().collect();
    let peak = *counts.iter().max().unwrap();
    let l_eq = (PI * 4.0 / (2.0 * 0.5) + 0.5).floor() as usize;
    let palindromic = counts == rev;
    let peak_ok = peak == 50 && counts[l_eq - 1] == 50;
    let ends_ok = counts.first() == counts.last();
    let detail = format!(
        "{} rounds, peak {} at round {}, ends {}..{}",
        counts.len(),
        peak,
        l_eq,
        counts.first().unwrap(),
        counts.last().unwrap()
    );
    if palindromic && peak_ok && ends_ok {
        CheckResult::pass(name, detail)
    } else {
        CheckResult::fail(name, detail)
    }
}

fn check_moebius() -> CheckResult {
    let name = "one-sided band boundary";
    let mut worst: f64 = 0.0;
    for &w in &[0.1, 0.35, 0.7] {
        let single = numerics::integrate(
            |t| (4.0 * (1.0 + w * t.cos()).powi(2) + w * w).sqrt(),
            0.0,
            2.0 * PI,
            1e-12,
        )
        .unwrap()
        .value;
        let halves = numerics::integrate(
            |t| (4.0 * (1.0 + w * t.cos()).powi(2) + w * w).sqrt(),
            0.0,
            PI,
            1e-12,
        )
        .unwrap()
        .value
            + numerics::integrate(
                |t| (4.0 * (1.0 - w * t.cos()).powi(2) + w * w).sqrt(),
                0.0,
                PI,
                1e-12,
            )
            .unwrap()
            .value;
        worst = worst.max((single - halves).abs());
    }

    // sector allocation against local arc share
    let spec = SurfaceSpec::new(Family::MobiusRuled { half_width: 0.8 }, 5.0).unwrap();
    let g = Gauge::new(0.5, 0.5).unwrap();
    let p = compile(&spec, &g, CompileOptions::default()).unwrap();
    let mut worst_sector: f64 = 0.0;
    for round in p.rounds.iter().skip(1) {
        let arc = ArcTable::new(round.param_r);
        let n = round.stitches;
        let total = arc.total();
        for sector in 0..12 {
            let a = sector as f64 * PI / 6.0;
            let b = a + PI / 6.0;
            let (sa, sb) = (arc.eval(a), arc.eval(b));
            let count = (0..n)
                .filter(|&k| {
                    let mid = (k as f64 + 0.5) * total / n as f64;
                    mid >= sa && mid < sb
                })
                .count() as f64;
            let share = n as f64 * (sb - sa) / total;
            worst_sector = worst_sector.max((count - share).abs());
        }
    }
    let detail = format!(
        "two-half vs single form {worst:.2e}; worst sector deviation {worst_sector:.3} sts"
    );
    if worst <= 1e-10 && worst_sector < 1.0 {
        CheckResult::pass(name, detail)
    } else {
        CheckResult::fail(name, detail)
    }
}

fn check_knots() -> CheckResult {
    let name = "knot arithmetic";
    let table = knots::KnotTable::builtin();
    let rl = knots::ropelength(30.48, 1.27).unwrap();
    let min = knots::min_tube_length(table.get("3_1").unwrap(), 0.8).unwrap();
    let rec41 = knots::recommended_length(table.get("4_1").unwrap(), 0.8).unwrap();
    let rec31 = knots::recommended_length(table.get("3_1").unwrap(), 0.8).unwrap();
    let ok = rl == 24.0
        && (min - 13.096).abs() < 1e-9
        && (rec41 - (2.0 * 13.096 + 10.0)).abs() < 1e-9
        && (rec31 - 2.0 * 13.096).abs() < 1e-9;
    let detail =
        format!("ropelength(30.48, 1.27)={rl}, trefoil min {min:.3} cm, 4_1 rec {rec41:.3} cm");
    if ok {
        CheckResult::pass(name, detail)
    } else {
        CheckResult::fail(name, detail)
    }
}

fn check_richmond_start() -> CheckResult {
    let name = "planar-family start round";
    let spec = SurfaceSpec::new(
        Family::Richmond {
            order: 1,
            r_min: 0.3,
            r_max: 2.0,
        },
        1.0,
    )
    .unwrap();
    let r_star = spec.min_circumference_radius().unwrap();
    let exact = 3.0_f64.powf(-0.25);
    let err = (r_star - exact).abs();
    let detail = format!("r* = {r_star:.8}, |error| = {err:.2e}");
    if err <= 1e-6 {
        CheckResult::pass(name, detail)
    } else {
        CheckResult::fail(name, detail)
    }
}

/// Run every verification suite.
pub fn run_all() -> Vec<CheckResult> {
    vec![
        check_closed_form_profiles(),
        check_minimal_surfaces(),
        check_isometry(),
        check_reference_fit(),
        check_disc_rule(),
        check_sphere_plan(),
        check_moebius(),
        check_knots(),
        check_richmond_start(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_on_a_clean_build() {
        for c in run_all() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn fitted_scales_land_in_the_expected_neighbourhood() {
        let expected = [2.11, 2.21, 2.34];
        for ((h, counts, _), want) in REFERENCE_COLUMNS.iter().zip(expected) {
            let (s, err) = fit_reference_scale(*h, 0.5, counts);
            assert!((s - want).abs() < 0.05, "H={h}: fitted {s}");
            assert!(err <= 3, "H={h}: residual {err}");
        }
    }
}
