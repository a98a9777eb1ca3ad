//! Curvelace converts parametrized surfaces and a crochet stitch gauge into
//! exact round-by-round instructions.
//!
//! The pipeline: a [`surfaces::SurfaceSpec`] provides circumference and
//! radial arc-length profiles (closed form, validated against quadrature); a
//! [`pattern::Gauge`] turns lengths into stitch counts; [`pattern::compile`]
//! produces a [`pattern::Pattern`] with increase/decrease placement; the
//! [`emitters`] render it as text, CSV, JSON, an OBJ mesh, or a stitch
//! graph. [`knots`] covers ropelength arithmetic for knotted tubes, and
//! [`verify`] re-derives the numerical claims the library is built on.

pub mod emitters;
pub mod knots;
pub mod numerics;
pub mod pattern;
pub mod surfaces;
pub mod verify;

pub use pattern::{compile, CompileOptions, Gauge, Pattern};
pub use surfaces::{Family, SurfaceSpec};
