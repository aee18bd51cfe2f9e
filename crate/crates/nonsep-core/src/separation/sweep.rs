//! Exact planar separability decision by critical-direction enumeration.
//!
//! As the direction rotates, every projection endpoint is a sinusoid of
//! the angle (a vertex dot product for polygon members, a center dot
//! product shifted by the radius for disks). The interval union can gain
//! or lose a gap only where two endpoint functions cross, so testing every
//! crossing angle plus the midpoints of consecutive crossings decides
//! separability exactly: midpoints catch gaps that are open strictly
//! between crossings, the crossings themselves catch boundary cases.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{gap_in_direction, Method, SeparationCertificate, SeparationError};
use crate::geom::Dir2;
use crate::scene::{ReferenceBody, Scene};

fn normalize_line_angle(mut t: f64) -> f64 {
    while t < 0.0 {
        t += PI;
    }
    while t >= PI {
        t -= PI;
    }
    t
}

/// Line angles at which the order of projection endpoints can change.
pub fn critical_line_angles(scene: &Scene) -> Vec<f64> {
    let mut angles: Vec<f64> = Vec::new();
    match scene.reference() {
        ReferenceBody::Polygon(_) => {
            // Projections of two vertices coincide when the direction is
            // perpendicular to their difference.
            let verts = scene.all_vertices2();
            for i in 0..verts.len() {
                for j in i + 1..verts.len() {
                    let d = verts[j] - verts[i];
                    if d.norm() > 1e-14 {
                        angles.push(normalize_line_angle(d.angle() + PI / 2.0));
                    }
                }
            }
        }
        ReferenceBody::Ball => {
            // Endpoint crossings of [c.u - tau, c.u + tau] sinusoids:
            // <x_i - x_j, u> equals one of the four radius combinations.
            let ms = scene.members();
            for i in 0..ms.len() {
                for j in i + 1..ms.len() {
                    let d = ms[i].xy() - ms[j].xy();
                    let len = d.norm();
                    if len < 1e-14 {
                        continue;
                    }
                    let phi = d.angle();
                    let (ti, tj) = (ms[i].ratio, ms[j].ratio);
                    for c in [ti + tj, -(ti + tj), ti - tj, tj - ti] {
                        if c.abs() <= len {
                            let g = libm::acos((c / len).clamp(-1.0, 1.0));
                            angles.push(normalize_line_angle(phi + g));
                            angles.push(normalize_line_angle(phi - g));
                        }
                    }
                }
            }
        }
        ReferenceBody::Polytope3(_) => {}
    }
    angles.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    angles.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    angles
}

/// Decides (non-)separability of a planar scene exactly.
pub fn is_nonseparable_sweep(scene: &Scene) -> Result<SeparationCertificate, SeparationError> {
    if scene.dimension() != 2 {
        return Err(SeparationError::DimensionUnsupported {
            expected: 2,
            got: scene.dimension(),
        });
    }
    let critical = critical_line_angles(scene);
    let mut tested: Vec<f64> = Vec::with_capacity(2 * critical.len() + 4);
    if critical.is_empty() {
        tested.extend_from_slice(&[0.0, PI / 4.0, PI / 2.0, 3.0 * PI / 4.0]);
    } else {
        for (k, &t) in critical.iter().enumerate() {
            tested.push(t);
            let next = if k + 1 < critical.len() {
                critical[k + 1]
            } else {
                critical[0] + PI
            };
            tested.push(normalize_line_angle(0.5 * (t + next)));
        }
    }
    for &theta in &tested {
        let u = Dir2::from_angle(theta);
        if let Some(gap) = gap_in_direction(scene, u) {
            return Ok(SeparationCertificate::Separable {
                direction: u,
                gap: (gap.a, gap.b),
                left: gap.left,
                right: gap.right,
            });
        }
    }
    Ok(SeparationCertificate::NonSeparable {
        method: Method::Sweep,
        directions_checked: tested,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::v2;
    use crate::scene::generators::{gen_circle_ring, gen_counterexample_triangles};
    use crate::scene::Homothet;
    use crate::separation::verify_certificate;

    #[test]
    fn counterexample_is_nonseparable() {
        let scene = gen_counterexample_triangles();
        let cert = is_nonseparable_sweep(&scene).unwrap();
        assert!(!cert.is_separable());
    }

    #[test]
    fn ring_is_nonseparable_but_loses_it_with_one_disk_removed() {
        let scene = gen_circle_ring(2, 0.01).unwrap();
        assert!(!is_nonseparable_sweep(&scene).unwrap().is_separable());
        for drop in 0..5 {
            let keep: Vec<usize> = (0..5).filter(|&i| i != drop).collect();
            let sub = scene.subscene(&keep).unwrap();
            let cert = is_nonseparable_sweep(&sub).unwrap();
            assert!(cert.is_separable(), "removing disk {drop}");
            assert!(verify_certificate(&sub, &cert));
        }
    }

    #[test]
    fn two_far_squares_separable() {
        let scene = crate::scene::Scene::new(
            2,
            "two-squares",
            crate::scene::ReferenceBody::Polygon(crate::geom::ConvexPolygon::unit_square()),
            alloc::vec![
                Homothet::new2(v2(0.0, 0.0), 1.0),
                Homothet::new2(v2(3.0, 0.5), 1.0),
            ],
        )
        .unwrap();
        let cert = is_nonseparable_sweep(&scene).unwrap();
        assert!(cert.is_separable());
        assert!(verify_certificate(&scene, &cert));
    }
}
