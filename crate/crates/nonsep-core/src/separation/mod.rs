//! Separability of a family of homothets: projection intervals, strict
//! separating-line certificates, the exact planar sweep, a subset oracle,
//! and impassability checks.
//!
//! A family is separable when some hyperplane disjoint from the union
//! strictly splits it into two nonempty parts. Touching counts as
//! non-separable: a line through a shared boundary point is not disjoint
//! from the union, so gaps only count beyond the geometric tolerance.

use alloc::vec::Vec;

use thiserror::Error;

use crate::geom::{Dir2, Dir3};
use crate::scene::Scene;
use crate::GEOM_EPS;

mod impassable;
mod oracle;
mod sweep;

pub use impassable::{is_0_impassable, is_1_impassable_3d_sampled, Kip1Verdict};
pub use oracle::is_nonseparable_oracle;
pub use sweep::{critical_line_angles, is_nonseparable_sweep};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeparationError {
    #[error("operation supports dimension {expected}, scene has dimension {got}")]
    DimensionUnsupported { expected: usize, got: usize },
    #[error("family of {n} members exceeds the oracle limit of {max}")]
    TooLarge { n: usize, max: usize },
}

/// Projection of one member onto a direction: `[<x_i, u> - tau_i h(-u),
/// <x_i, u> + tau_i h(u)]`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct ProjectionInterval {
    pub member: usize,
    pub lo: f64,
    pub hi: f64,
}

/// How a verdict was reached.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Method {
    Sweep,
    Oracle,
}

/// Outcome of a separability decision. A `Separable` certificate replays:
/// every member's projection interval lies entirely on one side of the
/// gap, and both sides are nonempty.
#[derive(Clone, Debug)]
pub enum SeparationCertificate {
    Separable {
        direction: Dir2,
        gap: (f64, f64),
        left: Vec<usize>,
        right: Vec<usize>,
    },
    NonSeparable {
        method: Method,
        /// Line angles (radians in `[0, pi)`) at which a gap was sought.
        directions_checked: Vec<f64>,
    },
}

impl SeparationCertificate {
    pub fn is_separable(&self) -> bool {
        matches!(self, SeparationCertificate::Separable { .. })
    }
}

/// Projections of all members onto the line along `u` (planar scenes).
pub fn projection_intervals(scene: &Scene, u: Dir2) -> Vec<ProjectionInterval> {
    let v = u.vec();
    (0..scene.len())
        .map(|i| ProjectionInterval {
            member: i,
            lo: -scene.member_support2(i, -v),
            hi: scene.member_support2(i, v),
        })
        .collect()
}

/// Projections of all members onto the line along `u` (spatial scenes).
pub fn projection_intervals3(scene: &Scene, u: Dir3) -> Vec<ProjectionInterval> {
    let v = u.vec();
    (0..scene.len())
        .map(|i| ProjectionInterval {
            member: i,
            lo: -scene.member_support3(i, -v),
            hi: scene.member_support3(i, v),
        })
        .collect()
}

/// A maximal open gap in a union of closed intervals, with the induced
/// partition of members.
#[derive(Clone, Debug)]
pub struct Gap {
    pub a: f64,
    pub b: f64,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// First maximal gap (width above `GEOM_EPS`) strictly inside the span of
/// the interval union, or `None` when the union is a single interval.
pub fn gap_in_direction(scene: &Scene, u: Dir2) -> Option<Gap> {
    gap_of_intervals(&projection_intervals(scene, u))
}

/// Gap test along a spatial direction.
pub fn gap_in_direction3(scene: &Scene, u: Dir3) -> Option<(f64, f64)> {
    gap_of_intervals(&projection_intervals3(scene, u)).map(|g| (g.a, g.b))
}

pub(crate) fn gap_of_intervals(intervals: &[ProjectionInterval]) -> Option<Gap> {
    let mut order: Vec<usize> = (0..intervals.len()).collect();
    order.sort_by(|&i, &j| {
        intervals[i]
            .lo
            .partial_cmp(&intervals[j].lo)
            .expect("finite projections")
    });
    let mut end = intervals[order[0]].hi;
    for (k, &idx) in order.iter().enumerate().skip(1) {
        let iv = &intervals[idx];
        if iv.lo > end + GEOM_EPS {
            let left: Vec<usize> = order[..k].to_vec();
            let right: Vec<usize> = order[k..].to_vec();
            return Some(Gap {
                a: end,
                b: iv.lo,
                left,
                right,
            });
        }
        end = end.max(iv.hi);
    }
    None
}

/// Replays a certificate against a scene: a `Separable` certificate must
/// exhibit its gap exactly (within `NORM_EPS` slack) with both sides
/// nonempty; `NonSeparable` certificates replay trivially.
pub fn verify_certificate(scene: &Scene, cert: &SeparationCertificate) -> bool {
    match cert {
        SeparationCertificate::NonSeparable { .. } => true,
        SeparationCertificate::Separable {
            direction,
            gap: (a, b),
            left,
            right,
        } => {
            if left.is_empty() || right.is_empty() || !(a < b) {
                return false;
            }
            let mut seen = alloc::vec![false; scene.len()];
            let intervals = projection_intervals(scene, *direction);
            for &i in left {
                if i >= scene.len() || intervals[i].hi > a + crate::NORM_EPS {
                    return false;
                }
                seen[i] = true;
            }
            for &i in right {
                if i >= scene.len() || intervals[i].lo < b - crate::NORM_EPS {
                    return false;
                }
                if seen[i] {
                    return false;
                }
                seen[i] = true;
            }
            seen.iter().all(|&s| s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::v2;
    use crate::scene::{Homothet, ReferenceBody};

    fn disk_scene(centers: &[(f64, f64)]) -> Scene {
        Scene::new(
            2,
            "disks",
            ReferenceBody::Ball,
            centers
                .iter()
                .map(|&(x, y)| Homothet::new2(v2(x, y), 1.0))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn touching_chain_intervals() {
        let scene = disk_scene(&[(0.0, 0.0), (2.0, 0.0)]);
        let along = projection_intervals(&scene, Dir2::from_angle(0.0));
        assert!((along[0].lo + 1.0).abs() < 1e-12 && (along[0].hi - 1.0).abs() < 1e-12);
        assert!((along[1].lo - 1.0).abs() < 1e-12 && (along[1].hi - 3.0).abs() < 1e-12);
        let perp = projection_intervals(&scene, Dir2::from_angle(core::f64::consts::FRAC_PI_2));
        assert!((perp[0].lo + 1.0).abs() < 1e-12 && (perp[1].hi - 1.0).abs() < 1e-12);
        // Touching intervals share an endpoint: no gap.
        assert!(gap_in_direction(&scene, Dir2::from_angle(0.0)).is_none());
    }

    #[test]
    fn disjoint_disks_have_gap() {
        let scene = disk_scene(&[(0.0, 0.0), (4.0, 0.0)]);
        let gap = gap_in_direction(&scene, Dir2::from_angle(0.0)).unwrap();
        assert!((gap.a - 1.0).abs() < 1e-12);
        assert!((gap.b - 3.0).abs() < 1e-12);
        assert_eq!(gap.left, alloc::vec![0]);
        assert_eq!(gap.right, alloc::vec![1]);
    }
}
