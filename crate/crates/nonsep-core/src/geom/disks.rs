//! Analytic areas for families of disks: the union area via boundary-arc
//! decomposition and the convex-hull area via the support sweep. Both are
//! exact up to roundoff, which matters at tangency where polygonal
//! approximation would bias the comparison.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::ball::Ball2;
use super::vec::{v2, Vec2};

/// Green's-theorem contribution of the arc of circle `(c, r)` from angle
/// `a` to angle `b` (traversed counter-clockwise, `b >= a`).
fn arc_term(c: Vec2, r: f64, a: f64, b: f64) -> f64 {
    0.5 * (r * r * (b - a) + c.x * r * (libm::sin(b) - libm::sin(a))
        + c.y * r * (libm::cos(a) - libm::cos(b)))
}

/// Green's-theorem contribution of the straight segment `p -> q`.
fn segment_term(p: Vec2, q: Vec2) -> f64 {
    0.5 * p.cross(q)
}

fn normalize_angle(mut t: f64) -> f64 {
    while t < 0.0 {
        t += 2.0 * PI;
    }
    while t >= 2.0 * PI {
        t -= 2.0 * PI;
    }
    t
}

/// Drops exact duplicates and disks contained in another disk.
fn reduce(disks: &[Ball2]) -> Vec<Ball2> {
    let mut keep: Vec<Ball2> = Vec::new();
    'outer: for (i, d) in disks.iter().enumerate() {
        for (j, e) in disks.iter().enumerate() {
            if i == j {
                continue;
            }
            let dist = d.center.dist(e.center);
            let swallowed = dist + d.radius <= e.radius + 1e-12;
            let identical = dist <= 1e-12 && (d.radius - e.radius).abs() <= 1e-12;
            if swallowed && (!identical || j < i) {
                continue 'outer;
            }
        }
        keep.push(*d);
    }
    keep
}

/// Exact area of a union of disks.
///
/// The union boundary consists of the arcs of each circle not interior to
/// any other disk; summing Green's contributions of those arcs (each
/// counter-clockwise around its own center) yields the area, holes
/// included.
pub fn disk_union_area(disks: &[Ball2]) -> f64 {
    let ds = reduce(disks);
    let mut area = 0.0;
    for (i, d) in ds.iter().enumerate() {
        // Angular intervals of circle i covered by other disks.
        let mut covered: Vec<(f64, f64)> = Vec::new();
        for (j, e) in ds.iter().enumerate() {
            if i == j {
                continue;
            }
            let dist = d.center.dist(e.center);
            if dist >= d.radius + e.radius || dist + e.radius <= d.radius {
                continue; // disjoint from, or containing, disk j
            }
            let cosg = (dist * dist + d.radius * d.radius - e.radius * e.radius)
                / (2.0 * dist * d.radius);
            let gamma = libm::acos(cosg.clamp(-1.0, 1.0));
            let phi = (e.center - d.center).angle();
            let (lo, hi) = (phi - gamma, phi + gamma);
            let lo_n = normalize_angle(lo);
            let hi_n = lo_n + (hi - lo);
            if hi_n > 2.0 * PI {
                covered.push((lo_n, 2.0 * PI));
                covered.push((0.0, hi_n - 2.0 * PI));
            } else {
                covered.push((lo_n, hi_n));
            }
        }
        covered.sort_by(|a, b| a.partial_cmp(b).expect("finite angles"));
        // Walk the complement of the merged cover.
        let mut cursor = 0.0;
        let mut exposed: Vec<(f64, f64)> = Vec::new();
        for &(lo, hi) in &covered {
            if lo > cursor {
                exposed.push((cursor, lo));
            }
            cursor = cursor.max(hi);
        }
        if cursor < 2.0 * PI {
            exposed.push((cursor, 2.0 * PI));
        }
        for &(a, b) in &exposed {
            area += arc_term(d.center, d.radius, a, b);
        }
    }
    area
}

/// Exact area of the convex hull of a union of disks.
///
/// The hull's support `h(t) = max_i <c_i, u(t)> + r_i` is attained by one
/// disk per angular range; the hull boundary alternates between arcs of
/// the active disks and the bitangent bridge segments at the switch
/// angles.
pub fn disk_hull_area(disks: &[Ball2]) -> f64 {
    let ds = reduce(disks);
    let support_at = |theta: f64| -> usize {
        let u = v2(libm::cos(theta), libm::sin(theta));
        let mut best = 0;
        let mut best_v = f64::NEG_INFINITY;
        for (i, d) in ds.iter().enumerate() {
            let v = d.center.dot(u) + d.radius;
            if v > best_v + 1e-14 {
                best = i;
                best_v = v;
            }
        }
        best
    };

    // Candidate switch angles between every pair of support sinusoids.
    let mut events: Vec<f64> = Vec::new();
    for i in 0..ds.len() {
        for j in i + 1..ds.len() {
            let diff = ds[i].center - ds[j].center;
            let len = diff.norm();
            let rhs = ds[j].radius - ds[i].radius;
            if len < 1e-15 || rhs.abs() > len {
                continue;
            }
            let phi = diff.angle();
            let g = libm::acos((rhs / len).clamp(-1.0, 1.0));
            events.push(normalize_angle(phi + g));
            events.push(normalize_angle(phi - g));
        }
    }
    events.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    events.dedup_by(|a, b| (*a - *b).abs() < 1e-13);

    if events.is_empty() {
        let d = &ds[support_at(0.0)];
        return PI * d.radius * d.radius;
    }

    let mut area = 0.0;
    let m = events.len();
    let mut prev_active = {
        let a = events[m - 1];
        let b = events[0] + 2.0 * PI;
        support_at(normalize_angle(0.5 * (a + b)))
    };
    let mut prev_point = {
        let d = &ds[prev_active];
        let u = v2(libm::cos(events[0]), libm::sin(events[0]));
        d.center + d.radius * u
    };
    // Start of the sweep is events[0]; close the loop at events[0] + 2pi.
    for k in 0..m {
        let a = events[k];
        let b = if k + 1 < m {
            events[k + 1]
        } else {
            events[0] + 2.0 * PI
        };
        let active = support_at(normalize_angle(0.5 * (a + b)));
        let d = &ds[active];
        let ua = v2(libm::cos(a), libm::sin(a));
        let start = d.center + d.radius * ua;
        if active != prev_active {
            area += segment_term(prev_point, start);
        }
        area += arc_term(d.center, d.radius, a, b);
        let ub = v2(libm::cos(b), libm::sin(b));
        prev_point = d.center + d.radius * ub;
        prev_active = active;
    }
    area
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk(x: f64, y: f64, r: f64) -> Ball2 {
        Ball2::new(v2(x, y), r).unwrap()
    }

    #[test]
    fn union_of_disjoint_and_identical() {
        let a = disk(0.0, 0.0, 1.0);
        let b = disk(3.0, 0.0, 1.0);
        assert!((disk_union_area(&[a, b]) - 2.0 * PI).abs() < 1e-12);
        assert!((disk_union_area(&[a, a]) - PI).abs() < 1e-12);
    }

    #[test]
    fn union_lens_formula() {
        // Equal unit disks at distance 1: union = 2*pi - lens.
        let lens = 2.0 * libm::acos(0.5) - 0.5 * libm::sqrt(3.0);
        let got = disk_union_area(&[disk(0.0, 0.0, 1.0), disk(1.0, 0.0, 1.0)]);
        assert!((got - (2.0 * PI - lens)).abs() < 1e-12);
    }

    #[test]
    fn union_nested() {
        let got = disk_union_area(&[disk(0.0, 0.0, 2.0), disk(0.5, 0.0, 1.0)]);
        assert!((got - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn union_tangent_disks() {
        let got = disk_union_area(&[disk(0.0, 0.0, 1.0), disk(2.0, 0.0, 1.0)]);
        assert!((got - 2.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn hull_of_two_equal_disks() {
        // Stadium: rectangle d x 2r plus one full disk.
        let got = disk_hull_area(&[disk(0.0, 0.0, 1.0), disk(3.0, 0.0, 1.0)]);
        assert!((got - (PI + 6.0)).abs() < 1e-12);
    }

    #[test]
    fn hull_of_nested() {
        let got = disk_hull_area(&[disk(0.0, 0.0, 2.0), disk(0.5, 0.0, 1.0)]);
        assert!((got - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn hull_of_unequal_disks() {
        // External tangent construction: r1=2 at origin, r2=1 at (4,0).
        // Hull area = disk sectors + trapezoid between tangent points.
        let got = disk_hull_area(&[disk(0.0, 0.0, 2.0), disk(4.0, 0.0, 1.0)]);
        // Cross-check with a dense polygonal support sampling.
        let mut approx = 0.0;
        let n = 200_000;
        let h = |t: f64| -> f64 {
            let u = v2(libm::cos(t), libm::sin(t));
            (u.dot(v2(0.0, 0.0)) + 2.0).max(u.dot(v2(4.0, 0.0)) + 1.0)
        };
        // Area of a convex body from its support function h and the
        // boundary parametrization p(t) = h u + h' u_perp, via the shoelace
        // integral approximated by finite differences.
        let dt = 2.0 * PI / n as f64;
        let mut prev = {
            let t: f64 = 0.0;
            let hp = (h(t + 1e-6) - h(t - 1e-6)) / 2e-6;
            let u = v2(libm::cos(t), libm::sin(t));
            h(t) * u + hp * u.perp()
        };
        for k in 1..=n {
            let t = k as f64 * dt;
            let hp = (h(t + 1e-6) - h(t - 1e-6)) / 2e-6;
            let u = v2(libm::cos(t), libm::sin(t));
            let p = h(t) * u + hp * u.perp();
            approx += 0.5 * prev.cross(p);
            prev = p;
        }
        assert!(
            (got - approx).abs() < 1e-3,
            "analytic {got} vs sampled {approx}"
        );
    }
}
