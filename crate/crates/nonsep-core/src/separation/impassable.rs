//! Impassability: every affine flat of the given dimension that meets the
//! hull of the union must meet a member. For flats of dimension 0 in the
//! plane this says the union covers its own convex hull, which closed
//! full-dimensional members reduce to an exact area comparison; the
//! spatial line check is sampled over projection directions.

use alloc::vec::Vec;

use super::SeparationError;
use crate::geom::{
    convex_hull, disk_hull_area, disk_union_area, union_area, Ball2, ConvexPolygon, Dir3, Vec2,
    Vec3,
};
use crate::scene::{Body, Homothet, ReferenceBody, Scene};
use crate::GEOM_EPS;

/// Point-impassability of a planar scene: the union equals its convex
/// hull, tested as an exact area identity (relative tolerance 1e-9).
pub fn is_0_impassable(scene: &Scene) -> Result<bool, SeparationError> {
    if scene.dimension() != 2 {
        return Err(SeparationError::DimensionUnsupported {
            expected: 2,
            got: scene.dimension(),
        });
    }
    let (union, hull) = union_and_hull_area(scene);
    Ok((hull - union).abs() <= 1e-9 * hull.max(1.0))
}

fn union_and_hull_area(scene: &Scene) -> (f64, f64) {
    match scene.reference() {
        ReferenceBody::Ball => {
            let disks: Vec<Ball2> = scene
                .realize_all()
                .into_iter()
                .map(|b| match b {
                    Body::Disk(d) => d,
                    _ => unreachable!("ball scene realizes to disks"),
                })
                .collect();
            (disk_union_area(&disks), disk_hull_area(&disks))
        }
        ReferenceBody::Polygon(_) => {
            let polys: Vec<ConvexPolygon> = scene
                .realize_all()
                .into_iter()
                .map(|b| match b {
                    Body::Polygon(p) => p,
                    _ => unreachable!("polygon scene realizes to polygons"),
                })
                .collect();
            let hull = convex_hull(&scene.all_vertices2()).expect("members span the plane");
            (union_area(&polys), hull.area())
        }
        ReferenceBody::Polytope3(_) => unreachable!("dimension checked above"),
    }
}

/// Verdict of the sampled spatial line check.
#[derive(Clone, Debug)]
pub enum Kip1Verdict {
    /// No witness line found over the sampled directions.
    TrueSampled { directions_checked: usize },
    /// A line with this direction through this point meets the hull of the
    /// union but misses every member.
    Witness { direction: Vec3, through: Vec3 },
}

impl Kip1Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Kip1Verdict::TrueSampled { .. })
    }
}

/// Sampled 1-impassability for spatial scenes: a line with direction `v`
/// misses all members yet meets the hull exactly when the planar scene
/// projected along `v` fails point-impassability. Directions are the
/// quasi-uniform Fibonacci sphere set.
pub fn is_1_impassable_3d_sampled(
    scene: &Scene,
    n_dirs: usize,
) -> Result<Kip1Verdict, SeparationError> {
    if scene.dimension() != 3 {
        return Err(SeparationError::DimensionUnsupported {
            expected: 3,
            got: scene.dimension(),
        });
    }
    for k in 0..n_dirs.max(1) {
        let v = fibonacci_direction(k, n_dirs.max(1));
        let (e1, e2) = v.orthonormal_basis();
        let project = |p: Vec3| Vec2 {
            x: p.dot(e1),
            y: p.dot(e2),
        };
        let planar = project_scene(scene, project);
        if !is_0_impassable(&planar)? {
            if let Some(w) = find_uncovered_point(&planar) {
                return Ok(Kip1Verdict::Witness {
                    direction: v.vec(),
                    through: w.x * e1 + w.y * e2,
                });
            }
        }
    }
    Ok(Kip1Verdict::TrueSampled {
        directions_checked: n_dirs.max(1),
    })
}

fn fibonacci_direction(i: usize, n: usize) -> Dir3 {
    let golden = core::f64::consts::PI * (3.0 - libm::sqrt(5.0));
    let z = 1.0 - 2.0 * (i as f64 + 0.5) / n as f64;
    let r = libm::sqrt((1.0 - z * z).max(0.0));
    let phi = golden * i as f64;
    Dir3::new(Vec3 {
        x: r * libm::cos(phi),
        y: r * libm::sin(phi),
        z,
    })
    .expect("unit direction")
}

/// Projects a spatial scene along a direction into the planar scene with
/// the projected reference (recentered to its centroid) and adjusted
/// member translations.
fn project_scene(scene: &Scene, project: impl Fn(Vec3) -> Vec2) -> Scene {
    match scene.reference() {
        ReferenceBody::Ball => {
            let members = scene
                .members()
                .iter()
                .map(|m| Homothet::new2(project(m.translation), m.ratio))
                .collect();
            Scene::new(2, "projection", ReferenceBody::Ball, members).expect("projected scene")
        }
        ReferenceBody::Polytope3(p) => {
            let pts: Vec<Vec2> = p.vertices().iter().map(|&v| project(v)).collect();
            let shadow = convex_hull(&pts).expect("full-dimensional projection");
            let c = shadow.centroid();
            let reference = shadow.translate(-c);
            let members = scene
                .members()
                .iter()
                .map(|m| Homothet::new2(project(m.translation) + m.ratio * c, m.ratio))
                .collect();
            Scene::new(2, "projection", ReferenceBody::Polygon(reference), members)
                .expect("projected scene")
        }
        ReferenceBody::Polygon(_) => unreachable!("spatial scene"),
    }
}

/// Deterministic search for a point inside the hull of the union but
/// outside every member of a planar scene.
fn find_uncovered_point(scene: &Scene) -> Option<Vec2> {
    let bodies = scene.realize_all();
    let inside_some = |p: Vec2| -> bool {
        bodies.iter().any(|b| match b {
            Body::Polygon(poly) => poly.contains(p, -GEOM_EPS),
            Body::Disk(d) => d.contains(p, -GEOM_EPS),
            _ => unreachable!(),
        })
    };
    let in_hull: alloc::boxed::Box<dyn Fn(Vec2) -> bool> = match scene.reference() {
        ReferenceBody::Polygon(_) => {
            let hull = convex_hull(&scene.all_vertices2()).expect("hull");
            alloc::boxed::Box::new(move |p: Vec2| hull.contains(p, -GEOM_EPS))
        }
        ReferenceBody::Ball => {
            let disks: Vec<Ball2> = bodies
                .iter()
                .filter_map(|b| b.as_disk().copied())
                .collect();
            alloc::boxed::Box::new(move |p: Vec2| disk_hull_contains(&disks, p))
        }
        ReferenceBody::Polytope3(_) => unreachable!(),
    };

    // Bounding box of the members.
    let (mut lo, mut hi) = (Vec2 { x: f64::MAX, y: f64::MAX }, Vec2 { x: f64::MIN, y: f64::MIN });
    for i in 0..scene.len() {
        for u in [
            Vec2 { x: 1.0, y: 0.0 },
            Vec2 { x: -1.0, y: 0.0 },
            Vec2 { x: 0.0, y: 1.0 },
            Vec2 { x: 0.0, y: -1.0 },
        ] {
            let h = scene.member_support2(i, u);
            match (u.x as i8, u.y as i8) {
                (1, 0) => hi.x = hi.x.max(h),
                (-1, 0) => lo.x = lo.x.min(-h),
                (0, 1) => hi.y = hi.y.max(h),
                _ => lo.y = lo.y.min(-h),
            }
        }
    }
    for res in [40usize, 160, 640] {
        for iy in 0..=res {
            for ix in 0..=res {
                let p = Vec2 {
                    x: lo.x + (hi.x - lo.x) * ix as f64 / res as f64,
                    y: lo.y + (hi.y - lo.y) * iy as f64 / res as f64,
                };
                if in_hull(p) && !inside_some(p) {
                    return Some(p);
                }
            }
        }
    }
    None
}

/// Strict membership of a point in the convex hull of a disk family: the
/// support gap `<p,u> - h(u)` must stay negative; its maximum over
/// directions occurs along some `p - c_i`.
fn disk_hull_contains(disks: &[Ball2], p: Vec2) -> bool {
    let h = |u: Vec2| -> f64 {
        disks
            .iter()
            .map(|d| d.center.dot(u) + d.radius)
            .fold(f64::MIN, f64::max)
    };
    for d in disks {
        let diff = p - d.center;
        if diff.norm() < 1e-14 {
            continue;
        }
        let u = (1.0 / diff.norm()) * diff;
        if p.dot(u) - h(u) > -GEOM_EPS {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::v2;
    use crate::scene::generators::{gen_counterexample_triangles, gen_touching_chain};
    use crate::scene::ReferenceBody;

    #[test]
    fn touching_square_chain_is_0ip() {
        let scene = gen_touching_chain(
            ReferenceBody::Polygon(ConvexPolygon::unit_square()),
            &[1.0, 1.0],
            crate::geom::Dir2::from_angle(0.0),
        )
        .unwrap();
        assert!(is_0_impassable(&scene).unwrap());
    }

    #[test]
    fn counterexample_is_not_0ip() {
        assert!(!is_0_impassable(&gen_counterexample_triangles()).unwrap());
    }

    #[test]
    fn disjoint_squares_not_0ip() {
        let scene = Scene::new(
            2,
            "apart",
            ReferenceBody::Polygon(ConvexPolygon::unit_square()),
            alloc::vec![
                Homothet::new2(v2(0.0, 0.0), 1.0),
                Homothet::new2(v2(3.0, 0.0), 1.0),
            ],
        )
        .unwrap();
        assert!(!is_0_impassable(&scene).unwrap());
    }
}
