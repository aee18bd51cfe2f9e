//! Exact-leaning 2D convex geometry primitives, plus the minimal 3D
//! support-function machinery the rest of the crate builds on.
//!
//! All types are immutable values; every operation is pure.

use thiserror::Error;

mod ball;
mod clip;
mod disks;
mod erosion;
mod polygon;
mod polytope;
mod relate;
mod vec;

pub use ball::{Ball2, Ball3};
pub use clip::{clip_halfplane, intersect_convex, union_area};
pub use disks::{disk_hull_area, disk_union_area};
pub use erosion::{erosion, minkowski_sum_erosion, Erosion};
pub use polygon::{
    central_symmetrization, convex_hull, largest_inscribed_triangle, minkowski_sum, ConvexPolygon,
    Facet2,
};
pub use polytope::{Facet3, Polytope3};
pub use relate::{hull_relation, polygon_closest_points, polygon_distance, HullRelation};
pub use vec::{v2, v3, Dir2, Dir3, Vec2, Vec3};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("homothety ratio must be positive, got {0}")]
    NonPositiveRatio(f64),
    #[error("body is not origin-symmetric")]
    NotSymmetric,
}

/// Width of a supported body along `u`: `h(u) + h(-u)`.
pub fn width_of(support: impl Fn(Vec2) -> f64, u: Dir2) -> f64 {
    support(u.vec()) + support(-u.vec())
}
