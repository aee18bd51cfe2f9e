//! Smallest enclosing ball of a planar family of disks.
//!
//! The optimum ball is determined by at most three support disks, so for
//! the family sizes handled here it is found exactly by enumerating
//! candidate support sets (singletons, pairs, triples), solving each in
//! closed form, and keeping the smallest candidate that covers everything.

use alloc::vec::Vec;

use super::{CoveringError, CoveringResult};
use crate::geom::{v2, v3, Ball2, Vec2};
use crate::scene::{Body, ReferenceBody, Scene};

/// Smallest ball containing all disks: minimizes
/// `max_i (|c - x_i| + tau_i)` exactly.
pub fn smallest_enclosing_ball(scene: &Scene) -> Result<CoveringResult, CoveringError> {
    if !matches!(scene.reference(), ReferenceBody::Ball) || scene.dimension() != 2 {
        return Err(CoveringError::Unsupported(
            "enclosing-ball solver needs a planar ball scene",
        ));
    }
    let disks: Vec<Ball2> = scene
        .realize_all()
        .into_iter()
        .map(|b| match b {
            Body::Disk(d) => d,
            _ => unreachable!(),
        })
        .collect();

    let covers = |c: Vec2, r: f64| -> bool {
        disks
            .iter()
            .all(|d| c.dist(d.center) + d.radius <= r + 1e-9)
    };
    let mut best: Option<(Vec2, f64)> = None;
    let mut consider = |c: Vec2, r: f64| {
        if r.is_finite() && covers(c, r) && best.map_or(true, |(_, br)| r < br) {
            best = Some((c, r));
        }
    };

    let n = disks.len();
    for i in 0..n {
        consider(disks[i].center, disks[i].radius);
    }
    for i in 0..n {
        for j in i + 1..n {
            if let Some((c, r)) = circumball_two(&disks[i], &disks[j]) {
                consider(c, r);
            }
            for k in j + 1..n {
                for (c, r) in circumball_three(&disks[i], &disks[j], &disks[k]) {
                    consider(c, r);
                }
            }
        }
    }

    let Some((center, radius)) = best else {
        return Err(CoveringError::NumericFailure(
            "no covering candidate found".into(),
        ));
    };
    let slack = disks
        .iter()
        .map(|d| center.dist(d.center) + d.radius - radius)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(CoveringResult {
        ratio: radius,
        translation: v3(center.x, center.y, 0.0),
        lambda: radius / scene.ratio_sum(),
        slack,
        tight_constraints: disks
            .iter()
            .filter(|d| (center.dist(d.center) + d.radius - radius).abs() <= 1e-8)
            .count(),
    })
}

/// Smallest ball touching two disks internally: center on the center
/// line, radius `(d + r_a + r_b) / 2`; invalid when one disk already
/// contains the other.
fn circumball_two(a: &Ball2, b: &Ball2) -> Option<(Vec2, f64)> {
    let d = a.center.dist(b.center);
    if d < 1e-15 {
        return None;
    }
    let r = 0.5 * (d + a.radius + b.radius);
    if r < a.radius || r < b.radius {
        return None;
    }
    let t = (r - a.radius) / d;
    Some((a.center + t * (b.center - a.center), r))
}

/// Balls internally tangent to three disks: from
/// `|c - x_i| = r - tau_i`, differences give two equations linear in
/// `(c, r)`; eliminating `c = p + r q` leaves a quadratic in `r`.
fn circumball_three(a: &Ball2, b: &Ball2, c3: &Ball2) -> Vec<(Vec2, f64)> {
    let mut out = Vec::new();
    // Linear system rows for pairs (a,b) and (a,c3):
    // 2 <c, x_i - x_j> - 2 r (tau_i - tau_j)
    //   = |x_i|^2 - |x_j|^2 - tau_i^2 + tau_j^2
    let row = |i: &Ball2, j: &Ball2| -> ([f64; 3], f64) {
        let d = i.center - j.center;
        (
            [2.0 * d.x, 2.0 * d.y, -2.0 * (i.radius - j.radius)],
            i.center.dot(i.center) - j.center.dot(j.center) - i.radius * i.radius
                + j.radius * j.radius,
        )
    };
    let (r1, b1) = row(a, b);
    let (r2, b2) = row(a, c3);
    // Solve the 2x2 block for c in terms of r: c = p + r q.
    let det = r1[0] * r2[1] - r1[1] * r2[0];
    if det.abs() < 1e-14 {
        return out;
    }
    let p = v2(
        (b1 * r2[1] - b2 * r1[1]) / det,
        (r1[0] * b2 - r2[0] * b1) / det,
    );
    let q = v2(
        (-r1[2] * r2[1] + r2[2] * r1[1]) / det,
        (-r1[0] * r2[2] + r2[0] * r1[2]) / det,
    );
    // Substitute into |c - x_a|^2 = (r - tau_a)^2.
    let w = p - a.center;
    let qa = q.dot(q) - 1.0;
    let qb = 2.0 * (w.dot(q) + a.radius);
    let qc = w.dot(w) - a.radius * a.radius;
    let roots: Vec<f64> = if qa.abs() < 1e-14 {
        if qb.abs() < 1e-14 {
            Vec::new()
        } else {
            alloc::vec![-qc / qb]
        }
    } else {
        let disc = qb * qb - 4.0 * qa * qc;
        if disc < 0.0 {
            Vec::new()
        } else {
            let s = libm::sqrt(disc);
            alloc::vec![(-qb + s) / (2.0 * qa), (-qb - s) / (2.0 * qa)]
        }
    };
    for r in roots {
        if !r.is_finite() || r < a.radius.max(b.radius).max(c3.radius) - 1e-12 {
            continue;
        }
        let center = p + r * q;
        // Validate the tangency residuals.
        let ok = [a, b, c3]
            .iter()
            .all(|d| (center.dist(d.center) - (r - d.radius)).abs() <= 1e-7 * r.max(1.0));
        if ok {
            out.push((center, r));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::{Homothet, ReferenceBody, Scene};

    fn disk_scene(items: &[(f64, f64, f64)]) -> Scene {
        Scene::new(
            2,
            "disks",
            ReferenceBody::Ball,
            items
                .iter()
                .map(|&(x, y, t)| Homothet::new2(v2(x, y), t))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn touching_pair() {
        let res = smallest_enclosing_ball(&disk_scene(&[(0.0, 0.0, 1.0), (2.0, 0.0, 1.0)])).unwrap();
        assert!((res.ratio - 2.0).abs() < 1e-12);
        assert!(res.translation.xy().dist(v2(1.0, 0.0)) < 1e-12);
        assert!((res.lambda - 1.0).abs() < 1e-12);
    }

    #[test]
    fn concentric_pair() {
        let res = smallest_enclosing_ball(&disk_scene(&[(0.0, 0.0, 1.0), (0.0, 0.0, 2.0)])).unwrap();
        assert!((res.ratio - 2.0).abs() < 1e-12);
        assert!((res.lambda - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn equilateral_triple() {
        // Unit disks at an equilateral triangle with side 2: cover radius
        // is the circumradius 2/sqrt(3) plus 1.
        let h = libm::sqrt(3.0);
        let res = smallest_enclosing_ball(&disk_scene(&[
            (0.0, 0.0, 1.0),
            (2.0, 0.0, 1.0),
            (1.0, h, 1.0),
        ]))
        .unwrap();
        let expect = 1.0 + 2.0 / libm::sqrt(3.0);
        assert!((res.ratio - expect).abs() < 1e-12, "got {}", res.ratio);
        assert!((res.lambda - expect / 3.0).abs() < 1e-12);
    }

    #[test]
    fn brute_force_cross_check() {
        // Dense grid search as an independent oracle on a lopsided family.
        let items = [
            (0.0, 0.0, 1.0),
            (2.5, 0.4, 0.7),
            (1.0, 1.8, 1.3),
            (-0.7, 1.1, 0.4),
        ];
        let res = smallest_enclosing_ball(&disk_scene(&items)).unwrap();
        let f = |c: Vec2| -> f64 {
            items
                .iter()
                .map(|&(x, y, t)| c.dist(v2(x, y)) + t)
                .fold(f64::MIN, f64::max)
        };
        let mut best = f64::INFINITY;
        let mut arg = v2(0.0, 0.0);
        for iy in -80..=80 {
            for ix in -80..=80 {
                let c = v2(ix as f64 * 0.05, iy as f64 * 0.05);
                let v = f(c);
                if v < best {
                    best = v;
                    arg = c;
                }
            }
        }
        // Refine.
        for _ in 0..40 {
            let step = 0.01;
            let mut improved = false;
            for (dx, dy) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
                let c = arg + v2(dx * step, dy * step);
                if f(c) < best {
                    best = f(c);
                    arg = c;
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        assert!(res.ratio <= best + 1e-9, "solver {} vs grid {}", res.ratio, best);
        assert!(res.slack <= 1e-9);
    }
}
