//! Smallest covering homothets and the covering functional: the least
//! `lambda` such that a translate of `lambda (sum tau_i) K` covers the
//! union of the family.

use alloc::string::String;

use thiserror::Error;

use crate::geom::Vec3;
use crate::lp::LpError;
use crate::scene::{ReferenceBody, Scene};

mod goodman;
mod homothet_lp;
mod miniball;

pub use goodman::{goodman_center, goodman_center3, goodman_cover_symmetric, interval_cover_1d};
pub use homothet_lp::{covering_feasible_at, smallest_covering_homothet};
pub use miniball::smallest_enclosing_ball;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoveringError {
    #[error("numeric failure: {0}")]
    NumericFailure(String),
    #[error("interval union is disconnected (gap between {0} and {1})")]
    DisconnectedUnion(f64, f64),
    #[error("reference body is not origin-symmetric")]
    NotSymmetric,
    #[error("containment failed with violation {0}")]
    ContainmentFailed(f64),
    #[error("unsupported scene kind: {0}")]
    Unsupported(&'static str),
}

impl From<LpError> for CoveringError {
    fn from(e: LpError) -> Self {
        CoveringError::NumericFailure(alloc::format!("{e}"))
    }
}

/// A covering homothet `translation + ratio * K` of the scene's reference
/// body, with the induced covering functional value and the worst
/// containment violation observed while verifying it.
#[derive(Clone, Debug)]
pub struct CoveringResult {
    /// Absolute homothety ratio of the cover.
    pub ratio: f64,
    /// Translation of the cover (`z = 0` for planar scenes).
    pub translation: Vec3,
    /// `ratio / sum of member ratios`.
    pub lambda: f64,
    /// Maximum constraint violation of the verified containment.
    pub slack: f64,
    /// Number of tight constraints at the optimum (covering programs only).
    pub tight_constraints: usize,
}

/// The covering functional of a scene, dispatching on the reference kind.
pub fn lambda(scene: &Scene) -> Result<f64, CoveringError> {
    smallest_cover(scene).map(|r| r.lambda)
}

/// Smallest cover of a scene, dispatching on the reference kind.
pub fn smallest_cover(scene: &Scene) -> Result<CoveringResult, CoveringError> {
    match scene.reference() {
        ReferenceBody::Polygon(_) | ReferenceBody::Polytope3(_) => {
            smallest_covering_homothet(scene)
        }
        ReferenceBody::Ball if scene.dimension() == 2 => smallest_enclosing_ball(scene),
        ReferenceBody::Ball => Err(CoveringError::Unsupported(
            "smallest enclosing ball is implemented for planar scenes",
        )),
    }
}
