//! Constructive covering bounds: the dimension-factor cover built from
//! the width bound and the symmetrization sandwich, the erosion-based
//! summand test, and the covering consequences of point-impassability.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::lemmas::sandwich;
use super::LabError;
use crate::covering::{smallest_cover, smallest_covering_homothet, CoveringResult};
use crate::geom::{
    central_symmetrization, convex_hull, erosion, hull_relation, largest_inscribed_triangle,
    minkowski_sum_erosion, ConvexPolygon, Dir2, Erosion, HullRelation, Vec2,
};
use crate::scene::{Body, ReferenceBody, Scene};
use crate::separation::is_0_impassable;
use crate::GEOM_EPS;

/// Builds and verifies the explicit cover of ratio `d (sum tau_i)` for a
/// planar non-separable polygon scene: the hull `M` of the union sits in
/// `c_M + (4/3) M0`, the width bound puts `M0` inside `(sum tau) K0`, and
/// the inner sandwich of the reference turns `K0` into `(3/2)(K - c_K)`.
/// The chain composes to a cover with ratio `2 (sum tau)`, verified at
/// every step; a failed step signals a scene that was not non-separable.
pub fn cover_with_ratio_d(scene: &Scene) -> Result<CoveringResult, LabError> {
    let ReferenceBody::Polygon(k) = scene.reference() else {
        return Err(LabError::PreconditionFailed(
            "dimension-factor cover needs a polygon reference".into(),
        ));
    };
    let total = scene.ratio_sum();
    let hull = convex_hull(&scene.all_vertices2())
        .map_err(|e| LabError::PreconditionFailed(format!("union hull: {e}")))?;
    let hull0 = central_symmetrization(&hull);
    let k0 = central_symmetrization(k);

    // Width bound as a support comparison: h(M0) <= (sum tau) h(K0) at
    // both facet-normal sets and a uniform fan.
    let mut dirs: Vec<f64> = (0..720).map(|i| i as f64 * PI / 720.0).collect();
    for f in hull0.facets().iter().chain(k0.facets().iter()) {
        dirs.push(f.normal.line_angle());
    }
    for &a in &dirs {
        let u = Dir2::from_angle(a).vec();
        if hull0.support(u) > total * k0.support(u) + GEOM_EPS {
            return Err(LabError::StepFailed(
                "union symmetrization exceeds the scaled reference symmetrization",
            ));
        }
    }

    // M subset c_M + (4/3) M0.
    let sw = sandwich(&hull).map_err(|_| LabError::StepFailed("hull outer sandwich"))?;
    let c_m = sw.outer_translation;

    // K0 subset (3/2)(K - c_K) at the inscribed-triangle center of K.
    let (tri, _) = largest_inscribed_triangle(k);
    let c_k = (1.0 / 3.0) * (tri[0] + tri[1] + tri[2]);
    let k_shifted = k.translate(-c_k).homothet(1.5, Vec2::ZERO).expect("ratio");
    for &v in k0.vertices() {
        if !k_shifted.contains(v, GEOM_EPS) {
            return Err(LabError::StepFailed("reference inner sandwich"));
        }
    }

    // Composed cover: t + 2 (sum tau) K with t = c_M - 2 (sum tau) c_K.
    let ratio = 2.0 * total;
    let t = c_m - ratio * c_k;
    let mut slack = f64::NEG_INFINITY;
    for body in scene.realize_all() {
        let Body::Polygon(p) = body else {
            return Err(LabError::PreconditionFailed("mixed member kinds".into()));
        };
        for &v in p.vertices() {
            for f in k.facets() {
                slack = slack.max(f.normal.vec().dot(v - t) - ratio * f.offset);
            }
        }
    }
    if slack > GEOM_EPS {
        return Err(LabError::StepFailed("final containment"));
    }
    Ok(CoveringResult {
        ratio,
        translation: crate::geom::v3(t.x, t.y, 0.0),
        lambda: 2.0,
        slack: slack.max(0.0),
        tight_constraints: 0,
    })
}

/// Whether `X` is a summand of `Y` (some convex `Z` gives `X + Z = Y`),
/// tested through the erosion identity: `X` is a summand exactly when
/// `(Y erode X) + X = Y`.
pub fn check_summand(x: &ConvexPolygon, y: &ConvexPolygon) -> bool {
    let e = erosion(y, x);
    if e == Erosion::Empty {
        return false;
    }
    let Some(sum) = minkowski_sum_erosion(&e, x) else {
        return false;
    };
    polygons_equal(&sum, y, 1e-9, 1e-7)
}

/// Area agreement plus vertex-set Hausdorff distance.
fn polygons_equal(a: &ConvexPolygon, b: &ConvexPolygon, area_tol: f64, hausdorff_tol: f64) -> bool {
    if (a.area() - b.area()).abs() > area_tol {
        return false;
    }
    let directed = |p: &ConvexPolygon, q: &ConvexPolygon| -> f64 {
        p.vertices()
            .iter()
            .map(|v| {
                q.vertices()
                    .iter()
                    .map(|w| v.dist(*w))
                    .fold(f64::MAX, f64::min)
            })
            .fold(0.0_f64, f64::max)
    };
    directed(a, b).max(directed(b, a)) <= hausdorff_tol
}

/// Report of the point-impassable covering check.
#[derive(Clone, Debug)]
pub struct KipReport {
    pub summand: bool,
    pub lambda: f64,
    pub pairs_checked: usize,
}

/// For a point-impassable planar polygon scene: the hull of the union
/// must be a summand of `(sum tau) K`, the covering functional must not
/// exceed 1, and every intersecting pair must be coverable with ratio at
/// most the sum of its two ratios.
pub fn verify_kip_theorem(scene: &Scene) -> Result<KipReport, LabError> {
    let ReferenceBody::Polygon(k) = scene.reference() else {
        return Err(LabError::PreconditionFailed(
            "point-impassable check needs a polygon reference".into(),
        ));
    };
    match is_0_impassable(scene) {
        Ok(true) => {}
        Ok(false) => {
            return Err(LabError::PreconditionFailed(
                "scene is not point-impassable".into(),
            ))
        }
        Err(e) => return Err(LabError::PreconditionFailed(format!("{e}"))),
    }
    let total = scene.ratio_sum();
    let hull = convex_hull(&scene.all_vertices2())
        .map_err(|e| LabError::PreconditionFailed(format!("union hull: {e}")))?;
    let big = k.homothet(total, Vec2::ZERO).expect("ratio");
    let summand = check_summand(&hull, &big);
    if !summand {
        return Err(LabError::TheoremViolated(
            "union hull is not a summand of the scaled reference".into(),
        ));
    }
    let lambda = smallest_covering_homothet(scene)
        .map_err(|e| LabError::VerificationFailed(format!("{e}")))?
        .lambda;
    if lambda > 1.0 + GEOM_EPS {
        return Err(LabError::TheoremViolated(format!(
            "covering functional {lambda} exceeds 1"
        )));
    }
    // Pairwise bound: any two intersecting members are covered by a
    // homothet of ratio at most the sum of their ratios.
    let bodies = scene.realize_all();
    let mut pairs = 0;
    for i in 0..scene.len() {
        for j in i + 1..scene.len() {
            let (Some(p), Some(q)) = (bodies[i].as_polygon(), bodies[j].as_polygon()) else {
                continue;
            };
            if matches!(hull_relation(p, q), HullRelation::Disjoint(_)) {
                continue;
            }
            pairs += 1;
            let sub = scene
                .subscene(&[i, j])
                .map_err(|e| LabError::VerificationFailed(format!("{e}")))?;
            let pair_ratio = smallest_covering_homothet(&sub)
                .map_err(|e| LabError::VerificationFailed(format!("{e}")))?
                .ratio;
            let bound = scene.members()[i].ratio + scene.members()[j].ratio;
            if pair_ratio > bound * (1.0 + GEOM_EPS) + GEOM_EPS {
                return Err(LabError::TheoremViolated(format!(
                    "pair ({i}, {j}) needs ratio {pair_ratio} > {bound}"
                )));
            }
        }
    }
    Ok(KipReport {
        summand,
        lambda,
        pairs_checked: pairs,
    })
}

/// Report of the strictly convex impassability check.
#[derive(Clone, Debug)]
pub struct StrictReport {
    /// Index of the member of maximal ratio.
    pub dominant: usize,
    /// Worst violation of `|x_i - x_max| + tau_i <= tau_max`.
    pub max_violation: f64,
}

/// For a point-impassable family of disks, the union must equal its
/// largest member: every member lies inside the member of maximal ratio.
pub fn verify_strictly_convex(scene: &Scene) -> Result<StrictReport, LabError> {
    if !matches!(scene.reference(), ReferenceBody::Ball) || scene.dimension() != 2 {
        return Err(LabError::PreconditionFailed(
            "strict convexity check needs a planar disk scene".into(),
        ));
    }
    match is_0_impassable(scene) {
        Ok(true) => {}
        Ok(false) => {
            return Err(LabError::PreconditionFailed(
                "scene is not point-impassable".into(),
            ))
        }
        Err(e) => return Err(LabError::PreconditionFailed(format!("{e}"))),
    }
    let ms = scene.members();
    let dominant = (0..ms.len())
        .max_by(|&i, &j| {
            ms[i]
                .ratio
                .partial_cmp(&ms[j].ratio)
                .expect("finite ratios")
        })
        .expect("nonempty scene");
    let mut worst = f64::NEG_INFINITY;
    for (i, m) in ms.iter().enumerate() {
        if i == dominant {
            continue;
        }
        let v = m.xy().dist(ms[dominant].xy()) + m.ratio - ms[dominant].ratio;
        worst = worst.max(v);
    }
    if worst > GEOM_EPS {
        return Err(LabError::TheoremViolated(format!(
            "member escapes the dominant disk by {worst}"
        )));
    }
    Ok(StrictReport {
        dominant,
        max_violation: worst.max(0.0),
    })
}

/// Covering functional of a scene (convenience used by the pairwise and
/// dispatch paths).
pub fn scene_lambda(scene: &Scene) -> Result<f64, LabError> {
    smallest_cover(scene)
        .map(|r| r.lambda)
        .map_err(|e| LabError::VerificationFailed(format!("{e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::generators::{
        gen_counterexample_triangles, gen_nested_family, gen_touching_chain,
    };
    use crate::scene::Homothet;

    #[test]
    fn ratio_d_cover_on_counterexample() {
        let scene = gen_counterexample_triangles();
        let res = cover_with_ratio_d(&scene).unwrap();
        assert!((res.ratio - 6.0).abs() < 1e-12);
        assert!((res.lambda - 2.0).abs() < 1e-12);
        assert!(res.slack <= 1e-9);
    }

    #[test]
    fn ratio_d_cover_on_square_chain() {
        let scene = gen_touching_chain(
            ReferenceBody::Polygon(ConvexPolygon::unit_square()),
            &[1.0, 1.0, 1.0],
            Dir2::from_angle(0.0),
        )
        .unwrap();
        let res = cover_with_ratio_d(&scene).unwrap();
        assert!((res.ratio - 6.0).abs() < 1e-12);
    }

    #[test]
    fn summand_basics() {
        let unit = ConvexPolygon::unit_square();
        let double = unit.homothet(2.0, Vec2::ZERO).unwrap();
        assert!(check_summand(&unit, &double));
        assert!(check_summand(&unit, &unit));

        // A hexagon of matched width is not a summand of a triangle.
        let tri = ConvexPolygon::unit_triangle();
        let hex = central_symmetrization(&tri);
        assert!(!check_summand(&hex, &tri));
        // The symmetrization is a summand of the doubled triangle:
        // (T - c) + (-(T - c)) relations do not apply, but T/2 + T/2 does.
        let half = tri.homothet(0.5, Vec2::ZERO).unwrap();
        let whole = tri.clone();
        assert!(check_summand(&half, &whole));
    }

    #[test]
    fn summand_scale_invariance() {
        let x = ConvexPolygon::unit_square();
        let y = ConvexPolygon::unit_square()
            .homothet(2.0, crate::geom::v2(0.3, 0.1))
            .unwrap();
        assert!(check_summand(&x, &y));
        for c in [0.5, 2.0] {
            let xs = x.homothet(c, Vec2::ZERO).unwrap();
            let ys = y.homothet(c, Vec2::ZERO).unwrap();
            assert!(check_summand(&xs, &ys));
        }
    }

    #[test]
    fn kip_on_touching_square_chain() {
        let scene = gen_touching_chain(
            ReferenceBody::Polygon(ConvexPolygon::unit_square()),
            &[1.0, 1.0],
            Dir2::from_angle(0.0),
        )
        .unwrap();
        let rep = verify_kip_theorem(&scene).unwrap();
        assert!(rep.summand);
        assert!((rep.lambda - 1.0).abs() < 1e-9);
    }

    #[test]
    fn kip_on_nested_family() {
        let scene = gen_nested_family(
            ReferenceBody::Polygon(ConvexPolygon::unit_triangle()),
            4,
            11,
        )
        .unwrap();
        let rep = verify_kip_theorem(&scene).unwrap();
        assert!(rep.summand);
        assert!(rep.lambda < 1.0);
    }

    #[test]
    fn kip_rejects_non_impassable() {
        let scene = gen_counterexample_triangles();
        assert!(matches!(
            verify_kip_theorem(&scene),
            Err(LabError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn strict_convexity_on_nested_disks() {
        let scene = gen_nested_family(ReferenceBody::Ball, 5, 3).unwrap();
        let rep = verify_strictly_convex(&scene).unwrap();
        assert_eq!(rep.dominant, 0);
        assert!(rep.max_violation <= 1e-9);
    }

    #[test]
    fn strict_convexity_guards_precondition() {
        let scene = Scene::new(
            2,
            "lens",
            ReferenceBody::Ball,
            alloc::vec![
                Homothet::new2(crate::geom::v2(0.0, 0.0), 1.0),
                Homothet::new2(crate::geom::v2(1.0, 0.0), 1.0),
            ],
        )
        .unwrap();
        assert!(matches!(
            verify_strictly_convex(&scene),
            Err(LabError::PreconditionFailed(_))
        ));
    }
}
