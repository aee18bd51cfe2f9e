//! The ratio-weighted center construction: for an origin-symmetric
//! reference, the translate of `(sum tau_i) K` centered at the weighted
//! mean of the member translations covers any non-separable family.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::homothet_lp::containment_slack;
use super::{CoveringError, CoveringResult};
use crate::geom::{Dir2, Vec2, Vec3};
use crate::scene::{reference_is_origin_symmetric, ReferenceBody, Scene};
use crate::GEOM_EPS;

/// Ratio-weighted mean of the member translations (planar scenes).
pub fn goodman_center(scene: &Scene) -> Vec2 {
    goodman_center3(scene).xy()
}

/// Ratio-weighted mean of the member translations.
pub fn goodman_center3(scene: &Scene) -> Vec3 {
    let mut acc = Vec3::ZERO;
    let mut total = 0.0;
    for m in scene.members() {
        acc = acc + m.ratio * m.translation;
        total += m.ratio;
    }
    (1.0 / total) * acc
}

/// Covers a non-separable family of homothets of an origin-symmetric
/// reference by `x + (sum tau_i) K` with `x` the weighted center, and
/// verifies the containment. `ContainmentFailed` on a scene that was not
/// non-separable (or a symmetry violation beyond tolerance).
pub fn goodman_cover_symmetric(scene: &Scene) -> Result<CoveringResult, CoveringError> {
    if scene.dimension() != 2 {
        return Err(CoveringError::Unsupported(
            "symmetric cover is implemented for planar scenes",
        ));
    }
    if !reference_is_origin_symmetric(scene.reference()) {
        return Err(CoveringError::NotSymmetric);
    }
    let s = scene.ratio_sum();
    let t = goodman_center3(scene);
    let slack = match scene.reference() {
        ReferenceBody::Polygon(_) => containment_slack(scene, t, s),
        ReferenceBody::Ball => {
            // Support comparison over a fixed direction fan.
            let mut worst = f64::NEG_INFINITY;
            for k in 0..720 {
                let u = Dir2::from_angle(k as f64 * PI / 360.0).vec();
                let members = (0..scene.len())
                    .map(|i| scene.member_support2(i, u))
                    .fold(f64::MIN, f64::max);
                worst = worst.max(members - (t.xy().dot(u) + s));
            }
            worst
        }
        ReferenceBody::Polytope3(_) => unreachable!("planar scene"),
    };
    if slack > GEOM_EPS {
        return Err(CoveringError::ContainmentFailed(slack));
    }
    Ok(CoveringResult {
        ratio: s,
        translation: t,
        lambda: 1.0,
        slack: slack.max(0.0),
        tight_constraints: 0,
    })
}

/// Weighted-center cover of a connected union of closed intervals
/// `[x_i - tau_i, x_i + tau_i]`: returns the center
/// `sum tau_i x_i / sum tau_i` and radius `sum tau_i`, verifying coverage.
pub fn interval_cover_1d(items: &[(f64, f64)]) -> Result<(f64, f64), CoveringError> {
    assert!(!items.is_empty(), "at least one interval");
    for &(_, tau) in items {
        if !(tau > 0.0) {
            return Err(CoveringError::NumericFailure(
                "interval radius must be positive".into(),
            ));
        }
    }
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&i, &j| {
        (items[i].0 - items[i].1)
            .partial_cmp(&(items[j].0 - items[j].1))
            .expect("finite")
    });
    let first = items[order[0]];
    let mut end = first.0 + first.1;
    for &idx in &order[1..] {
        let (x, tau) = items[idx];
        if x - tau > end + crate::NORM_EPS {
            return Err(CoveringError::DisconnectedUnion(end, x - tau));
        }
        end = end.max(x + tau);
    }
    let total: f64 = items.iter().map(|&(_, t)| t).sum();
    let center: f64 = items.iter().map(|&(x, t)| x * t).sum::<f64>() / total;

    let lo = order
        .iter()
        .map(|&i| items[i].0 - items[i].1)
        .fold(f64::MAX, f64::min);
    let hi = items
        .iter()
        .map(|&(x, t)| x + t)
        .fold(f64::MIN, f64::max);
    debug_assert!(center - total <= lo + 1e-9 && center + total >= hi - 1e-9);
    if center - total > lo + 1e-9 || center + total < hi - 1e-9 {
        return Err(CoveringError::ContainmentFailed(
            (center - total - lo).max(hi - center - total),
        ));
    }
    Ok((center, total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::v2;
    use crate::scene::generators::gen_touching_chain;
    use crate::scene::{Homothet, ReferenceBody, Scene};

    #[test]
    fn weighted_center_examples() {
        let scene = Scene::new(
            2,
            "pair",
            ReferenceBody::Ball,
            alloc::vec![
                Homothet::new2(v2(0.0, 0.0), 1.0),
                Homothet::new2(v2(2.0, 0.0), 1.0),
            ],
        )
        .unwrap();
        assert!(goodman_center(&scene).dist(v2(1.0, 0.0)) < 1e-12);

        let skew = Scene::new(
            2,
            "skew",
            ReferenceBody::Ball,
            alloc::vec![
                Homothet::new2(v2(0.0, 0.0), 1.0),
                Homothet::new2(v2(4.0, 0.0), 3.0),
            ],
        )
        .unwrap();
        assert!(goodman_center(&skew).dist(v2(3.0, 0.0)) < 1e-12);
    }

    #[test]
    fn touching_chain_covers_exactly() {
        let scene =
            gen_touching_chain(ReferenceBody::Ball, &[1.0, 1.0], Dir2::from_angle(0.0)).unwrap();
        let res = goodman_cover_symmetric(&scene).unwrap();
        assert!((res.ratio - 2.0).abs() < 1e-12);
        assert!(res.slack <= 1e-9);
    }

    #[test]
    fn square_chain_covers() {
        let scene = gen_touching_chain(
            ReferenceBody::Polygon(crate::geom::ConvexPolygon::unit_square()),
            &[1.0, 2.0, 1.0],
            Dir2::from_angle(0.0),
        )
        .unwrap();
        let res = goodman_cover_symmetric(&scene).unwrap();
        assert!((res.ratio - 4.0).abs() < 1e-12);
        assert!(res.slack <= 1e-9);
    }

    #[test]
    fn asymmetric_reference_rejected() {
        let scene = Scene::new(
            2,
            "tri",
            ReferenceBody::Polygon(crate::geom::ConvexPolygon::unit_triangle()),
            alloc::vec![
                Homothet::new2(v2(0.0, 0.0), 1.0),
                Homothet::new2(v2(0.1, 0.0), 1.0),
            ],
        )
        .unwrap();
        assert!(matches!(
            goodman_cover_symmetric(&scene),
            Err(CoveringError::NotSymmetric)
        ));
    }

    #[test]
    fn interval_cover_basics() {
        let (x, r) = interval_cover_1d(&[(0.0, 1.0)]).unwrap();
        assert_eq!((x, r), (0.0, 1.0));

        let (x, r) = interval_cover_1d(&[(0.0, 1.0), (1.0, 1.0)]).unwrap();
        assert!((x - 0.5).abs() < 1e-12 && (r - 2.0).abs() < 1e-12);

        assert!(matches!(
            interval_cover_1d(&[(0.0, 1.0), (5.0, 1.0)]),
            Err(CoveringError::DisconnectedUnion(_, _))
        ));
    }
}
