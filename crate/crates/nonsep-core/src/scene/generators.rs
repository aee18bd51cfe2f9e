//! Scene generators: the extremal three-triangle family, its chain
//! extensions, the tetrahedral lift, disk rings, touching chains, and
//! seeded random families with guaranteed properties.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Homothet, ReferenceBody, Scene, SceneError};
use crate::geom::{minkowski_sum, v2, v3, ConvexPolygon, Dir2, Vec2};
use crate::separation::is_nonseparable_sweep;

/// Side length of the smallest triangle containing the three-triangle
/// family: `2 + 2/sqrt(3)`.
pub fn counterexample_side() -> f64 {
    2.0 + 2.0 / libm::sqrt(3.0)
}

/// The covering functional of the three-triangle family:
/// `2/3 + 2/(3 sqrt(3)) = 1.0515...`.
pub fn counterexample_lambda() -> f64 {
    counterexample_side() / 3.0
}

/// Centroids of the three unit triangles of the extremal family, inside a
/// host triangle with bottom-left corner at the origin.
///
/// Each unit triangle has one side on a side of the host triangle of side
/// `2 + 2/sqrt(3)`; walking the host boundary counter-clockwise, the side
/// splits into segments of lengths `2/3 + 1/sqrt(3)`, `1`, and
/// `1/3 + 1/sqrt(3)`. The inward vertices then satisfy the three
/// collinearity relations that make every two-against-one split touch.
fn counterexample_centroids() -> [Vec2; 3] {
    let side = counterexample_side();
    let a = 2.0 / 3.0 + 1.0 / libm::sqrt(3.0);
    let apothem_dist = 1.0 / (2.0 * libm::sqrt(3.0));
    let corners = [
        v2(0.0, 0.0),
        v2(side, 0.0),
        v2(side / 2.0, side * libm::sqrt(3.0) / 2.0),
    ];
    let mut out = [Vec2::ZERO; 3];
    for i in 0..3 {
        let v = corners[i];
        let w = corners[(i + 1) % 3];
        let dir = Dir2::new(w - v).expect("host edge").vec();
        let inward = dir.perp();
        let base_mid = v + (a + 0.5) * dir;
        out[i] = base_mid + apothem_dist * inward;
    }
    out
}

/// Three unit regular triangles inside a regular triangle of side
/// `2 + 2/sqrt(3)`, pairwise disjoint yet non-separable: the convex hull
/// of any two touches the third.
pub fn gen_counterexample_triangles() -> Scene {
    let members = counterexample_centroids()
        .iter()
        .map(|&c| Homothet::new2(c, 1.0))
        .collect();
    Scene::new(
        2,
        "counterexample-3-triangles",
        ReferenceBody::Polygon(ConvexPolygon::unit_triangle()),
        members,
    )
    .expect("construction is valid")
}

/// The host triangle of the three-triangle family (for rendering and
/// cross-checks), bottom-left corner at the origin.
pub fn counterexample_host() -> ConvexPolygon {
    let side = counterexample_side();
    ConvexPolygon::new(alloc::vec![
        v2(0.0, 0.0),
        v2(side, 0.0),
        v2(side / 2.0, side * libm::sqrt(3.0) / 2.0),
    ])
    .expect("host triangle")
}

/// Extends the three-triangle family with `n - 3` further unit translates
/// chained corner-to-corner off the bottom triangle, each step sliding by
/// `(1/2, -sqrt(3)/2)`. Every step pushes exactly one support line of the
/// smallest containing triangle outward by an apothem-to-apothem distance,
/// so the containing side grows to `n - 1 + 2/sqrt(3)`, while the touching
/// chain keeps the family non-separable.
pub fn gen_triangle_chain(n: usize) -> Result<Scene, SceneError> {
    if n < 3 {
        return Err(SceneError::BadCount { min: 3, got: n });
    }
    let base = counterexample_centroids();
    let step = v2(0.5, -libm::sqrt(3.0) / 2.0);
    let mut members: Vec<Homothet> = base
        .iter()
        .map(|&c| Homothet::new2(c, 1.0))
        .collect();
    for j in 1..=(n - 3) {
        members.push(Homothet::new2(base[0] + j as f64 * step, 1.0));
    }
    Scene::new(
        2,
        format!("triangle-chain-{n}"),
        ReferenceBody::Polygon(ConvexPolygon::unit_triangle()),
        members,
    )
}

/// Side length of the smallest triangle containing the `n`-triangle chain:
/// `n - 1 + 2/sqrt(3)`.
pub fn chain_side(n: usize) -> f64 {
    n as f64 - 1.0 + 2.0 / libm::sqrt(3.0)
}

/// Lifts the three-triangle family to space: each triangle becomes the
/// bottom facet of a unit regular tetrahedron with its apex above, so the
/// planar family's non-separability and covering ratio carry over.
pub fn gen_tetrahedra() -> Scene {
    let height = libm::sqrt(2.0 / 3.0);
    let members = counterexample_centroids()
        .iter()
        .map(|&c| Homothet::new3(v3(c.x, c.y, height / 4.0), 1.0))
        .collect();
    Scene::new(
        3,
        "counterexample-3-tetrahedra",
        ReferenceBody::Polytope3(crate::geom::Polytope3::unit_tetrahedron()),
        members,
    )
    .expect("construction is valid")
}

/// `2k + 1` unit disks at the vertices of a regular `(2k+1)`-gon, sized so
/// consecutive disks are disjoint with gap `2 * slack` (they almost
/// touch). The odd ring is non-separable, yet removing up to `2k - 1`
/// disks always leaves a separable family.
pub fn gen_circle_ring(k: usize, slack: f64) -> Result<Scene, SceneError> {
    if k < 1 {
        return Err(SceneError::BadCount { min: 1, got: k });
    }
    if !(slack > 0.0 && slack < 1.0) {
        return Err(SceneError::Validation(format!(
            "slack must lie in (0, 1), got {slack}"
        )));
    }
    let m = 2 * k + 1;
    let gap_center_dist = 2.0 * (1.0 + slack);
    let circumradius = gap_center_dist / (2.0 * libm::sin(core::f64::consts::PI / m as f64));
    let members = (0..m)
        .map(|i| {
            let a = core::f64::consts::PI / 2.0 + 2.0 * core::f64::consts::PI * i as f64 / m as f64;
            Homothet::new2(
                v2(circumradius * libm::cos(a), circumradius * libm::sin(a)),
                1.0,
            )
        })
        .collect();
    Scene::new(2, format!("ring-{m}-disks"), ReferenceBody::Ball, members)
}

/// A chain of homothets with centers on the line through the origin along
/// `u`, consecutive bodies tangent: the center step between members `i`
/// and `i+1` is `(tau_i + tau_{i+1}) h_K(u) u`. Requires an
/// origin-symmetric reference.
pub fn gen_touching_chain(
    reference: ReferenceBody,
    ratios: &[f64],
    u: Dir2,
) -> Result<Scene, SceneError> {
    if ratios.len() < 2 {
        return Err(SceneError::BadCount {
            min: 2,
            got: ratios.len(),
        });
    }
    if !super::reference_is_origin_symmetric(&reference) {
        return Err(SceneError::NotSymmetric);
    }
    let h = match &reference {
        ReferenceBody::Ball => 1.0,
        ReferenceBody::Polygon(p) => p.support(u.vec()),
        ReferenceBody::Polytope3(_) => {
            return Err(SceneError::Validation(
                "touching chains are planar; use a planar reference".into(),
            ))
        }
    };
    let mut members = Vec::with_capacity(ratios.len());
    let mut x = Vec2::ZERO;
    for (i, &tau) in ratios.iter().enumerate() {
        if !(tau > 0.0) {
            return Err(SceneError::NonPositiveRatio(tau));
        }
        members.push(Homothet::new2(x, tau));
        if i + 1 < ratios.len() {
            x = x + ((tau + ratios[i + 1]) * h) * u.vec();
        }
    }
    Scene::new(
        2,
        format!("touching-chain-{}", ratios.len()),
        reference,
        members,
    )
}

/// Radial extent of the overlap body `tau_a K + tau_b (-K)` along `u`:
/// placing a member at less than this distance from its anchor makes the
/// two homothets overlap.
fn overlap_radius(reference: &ReferenceBody, tau_a: f64, tau_b: f64, u: Vec2) -> f64 {
    match reference {
        ReferenceBody::Ball => tau_a + tau_b,
        ReferenceBody::Polygon(p) => {
            let a = p.homothet(tau_a, Vec2::ZERO).expect("positive ratio");
            let b = p
                .reflect()
                .homothet(tau_b, Vec2::ZERO)
                .expect("positive ratio");
            let diff = minkowski_sum(&a, &b);
            let mut r = f64::INFINITY;
            for f in diff.facets() {
                let d = f.normal.vec().dot(u);
                if d > 1e-12 {
                    r = r.min(f.offset / d);
                }
            }
            r
        }
        ReferenceBody::Polytope3(_) => panic!("planar generator"),
    }
}

/// Seeded random non-separable family: members are placed one by one, each
/// overlapping a previously placed member, which keeps every split of the
/// family inseparable; the sweep checker then confirms the property, and
/// the scene is regenerated on failure (bounded retries).
pub fn gen_random_ns_family(
    reference: ReferenceBody,
    n: usize,
    seed: u64,
) -> Result<Scene, SceneError> {
    if n < 2 {
        return Err(SceneError::BadCount { min: 2, got: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const RETRIES: usize = 1000;
    for _ in 0..RETRIES {
        let mut members: Vec<Homothet> = Vec::with_capacity(n);
        members.push(Homothet::new2(Vec2::ZERO, rng.gen_range(0.5..1.5)));
        for _ in 1..n {
            let anchor = rng.gen_range(0..members.len());
            let theta = rng.gen_range(0.0..core::f64::consts::TAU);
            let alpha = rng.gen_range(0.2..0.85);
            let tau = rng.gen_range(0.5..1.5);
            let u = Dir2::from_angle(theta).vec();
            let r = overlap_radius(&reference, members[anchor].ratio, tau, u);
            let x = members[anchor].xy() + (alpha * r) * u;
            members.push(Homothet::new2(x, tau));
        }
        let scene = Scene::new(2, format!("random-ns-{n}"), reference.clone(), members)?;
        if is_nonseparable_sweep(&scene)
            .map(|c| !c.is_separable())
            .unwrap_or(false)
        {
            return Ok(scene);
        }
    }
    Err(SceneError::GenerationFailed(RETRIES))
}

/// Seeded random nested family: every later member lies inside the first,
/// so the union is the first member and the family is 0-impassable.
pub fn gen_nested_family(
    reference: ReferenceBody,
    n: usize,
    seed: u64,
) -> Result<Scene, SceneError> {
    if n < 2 {
        return Err(SceneError::BadCount { min: 2, got: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut members = Vec::with_capacity(n);
    members.push(Homothet::new2(Vec2::ZERO, 1.0));
    for _ in 1..n {
        let tau = rng.gen_range(0.15..0.6);
        // x + tau K inside K exactly when x lies in (1 - tau) K.
        let x = sample_in_reference(&reference, 1.0 - tau, &mut rng);
        members.push(Homothet::new2(x, tau));
    }
    Scene::new(2, format!("nested-{n}"), reference, members)
}

fn sample_in_reference(reference: &ReferenceBody, scale: f64, rng: &mut ChaCha8Rng) -> Vec2 {
    match reference {
        ReferenceBody::Ball => loop {
            let p = v2(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            if p.norm() <= 1.0 {
                return scale * p;
            }
        },
        ReferenceBody::Polygon(poly) => {
            let r = poly
                .vertices()
                .iter()
                .map(|v| v.norm())
                .fold(0.0_f64, f64::max);
            loop {
                let p = v2(rng.gen_range(-r..r), rng.gen_range(-r..r));
                if poly.contains(p, 0.0) {
                    return scale * p;
                }
            }
        }
        ReferenceBody::Polytope3(_) => panic!("planar generator"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{hull_relation, convex_hull, HullRelation};
    use crate::scene::Body;

    #[test]
    fn counterexample_members_are_disjoint_translates() {
        let scene = gen_counterexample_triangles();
        assert_eq!(scene.len(), 3);
        let bodies = scene.realize_all();
        for i in 0..3 {
            for j in i + 1..3 {
                let (Body::Polygon(a), Body::Polygon(b)) = (&bodies[i], &bodies[j]) else {
                    panic!("polygon scene")
                };
                assert!(matches!(hull_relation(a, b), HullRelation::Disjoint(_)));
            }
        }
    }

    #[test]
    fn counterexample_pairwise_hulls_touch_the_third() {
        let scene = gen_counterexample_triangles();
        let bodies = scene.realize_all();
        for k in 0..3 {
            let mut pts = Vec::new();
            for i in 0..3 {
                if i != k {
                    pts.extend_from_slice(bodies[i].as_polygon().unwrap().vertices());
                }
            }
            let hull = convex_hull(&pts).unwrap();
            let rel = hull_relation(&hull, bodies[k].as_polygon().unwrap());
            assert_eq!(rel, HullRelation::Touching, "pair vs member {k}");
        }
    }

    #[test]
    fn counterexample_segment_lengths_sum_to_side() {
        let a = 2.0 / 3.0 + 1.0 / libm::sqrt(3.0);
        let b = 1.0 / 3.0 + 1.0 / libm::sqrt(3.0);
        assert!((a + 1.0 + b - counterexample_side()).abs() < 1e-12);
    }

    #[test]
    fn chain_counts_and_base_case() {
        assert!(matches!(
            gen_triangle_chain(2),
            Err(SceneError::BadCount { .. })
        ));
        let base = gen_triangle_chain(3).unwrap();
        let trio = gen_counterexample_triangles();
        for (m, t) in base.members().iter().zip(trio.members()) {
            assert!(m.xy().dist(t.xy()) < 1e-12);
        }
        assert_eq!(gen_triangle_chain(7).unwrap().len(), 7);
    }

    #[test]
    fn ring_disks_are_pairwise_disjoint() {
        let scene = gen_circle_ring(2, 0.01).unwrap();
        assert_eq!(scene.len(), 5);
        let ms = scene.members();
        for i in 0..5 {
            for j in i + 1..5 {
                let d = ms[i].xy().dist(ms[j].xy());
                assert!(d > 2.0 + 1e-9, "disks {i},{j} overlap: {d}");
            }
        }
        // Consecutive gap is 2 * slack.
        let d01 = ms[0].xy().dist(ms[1].xy());
        assert!((d01 - 2.02).abs() < 1e-12);
    }

    #[test]
    fn touching_chain_disks() {
        let scene = gen_touching_chain(
            ReferenceBody::Ball,
            &[1.0, 1.0],
            Dir2::from_angle(0.0),
        )
        .unwrap();
        let d = scene.members()[0].xy().dist(scene.members()[1].xy());
        assert!((d - 2.0).abs() < 1e-12);
        assert!(matches!(
            gen_touching_chain(
                ReferenceBody::Polygon(ConvexPolygon::unit_triangle()),
                &[1.0, 1.0],
                Dir2::from_angle(0.0)
            ),
            Err(SceneError::NotSymmetric)
        ));
    }

    #[test]
    fn random_ns_family_is_deterministic() {
        let a = gen_random_ns_family(ReferenceBody::Ball, 5, 42).unwrap();
        let b = gen_random_ns_family(ReferenceBody::Ball, 5, 42).unwrap();
        for (x, y) in a.members().iter().zip(b.members()) {
            assert_eq!(x.translation, y.translation);
            assert_eq!(x.ratio, y.ratio);
        }
    }

    #[test]
    fn tetrahedra_scene_shape() {
        let scene = gen_tetrahedra();
        assert_eq!(scene.len(), 3);
        assert_eq!(scene.dimension(), 3);
        // Bottom facet of each member lies in the z = 0 plane.
        for body in scene.realize_all() {
            let Body::Polytope(p) = body else { panic!() };
            let on_floor = p
                .vertices()
                .iter()
                .filter(|v| v.z.abs() < 1e-12)
                .count();
            assert_eq!(on_floor, 3);
        }
    }
}
