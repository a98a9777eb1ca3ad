//! Benchmark-only crate; see the `benches/` targets. Shared helpers for
//! constructing the specimens the benchmarks compile.

use curvelace::pattern::Gauge;
use curvelace::surfaces::{Family, SurfaceSpec};

pub fn reference_gauge() -> Gauge {
    Gauge::new(0.5, 0.4).expect("valid gauge")
}

pub fn reference_enneper() -> SurfaceSpec {
    SurfaceSpec::new(Family::Enneper { order: 2 }, 2.11).expect("valid spec")
}

pub fn wide_band() -> SurfaceSpec {
    SurfaceSpec::new(Family::MobiusRuled { half_width: 0.8 }, 5.0).expect("valid spec")
}
