//! Core geometry and verification kernel for non-separable families of
//! positive homothets of a convex body.
//!
//! Everything in this crate is pure computation over `f64` values: convex
//! polygon/polytope primitives, scene models (a reference body plus a list of
//! homothets), separability certificates, smallest-cover solvers, and
//! executable checks for the covering bounds that hold for such families.
//! The crate is `no_std` (with `alloc`); file formats, rendering and the CLI
//! live in the companion `nonsep` crate.

#![no_std]

extern crate alloc;

pub mod covering;
pub mod geom;
pub mod lab;
pub mod lp;
pub mod scene;
pub mod separation;

/// Default geometric tolerance: absolute slack for containment, tangency and
/// gap classification. Scenes in this crate live at unit scale, so an
/// absolute tolerance is appropriate.
pub const GEOM_EPS: f64 = 1e-9;

/// Tolerance for normalization and exact-identity checks (unit norms,
/// collinearity pruning, replayed certificates).
pub const NORM_EPS: f64 = 1e-12;
