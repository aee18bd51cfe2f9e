//! Halfplane clipping, convex intersection, and exact union areas via
//! inclusion-exclusion.

use alloc::vec::Vec;

use super::polygon::ConvexPolygon;
use super::vec::Vec2;

/// Clips a convex CCW chain against the halfplane `<normal, p> <= offset`.
/// The result may be empty or degenerate; callers canonicalize.
pub fn clip_halfplane(verts: &[Vec2], normal: Vec2, offset: f64) -> Vec<Vec2> {
    let n = verts.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        let da = normal.dot(a) - offset;
        let db = normal.dot(b) - offset;
        if da <= 0.0 {
            out.push(a);
        }
        if (da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0) {
            let t = da / (da - db);
            out.push(a + t * (b - a));
        }
    }
    out
}

/// Intersection of two convex polygons as a raw vertex chain (possibly
/// empty or degenerate).
pub fn intersect_chain(subject: &[Vec2], clip: &ConvexPolygon) -> Vec<Vec2> {
    let mut cur = subject.to_vec();
    for f in clip.facets() {
        if cur.len() < 3 {
            return Vec::new();
        }
        cur = clip_halfplane(&cur, f.normal.vec(), f.offset);
    }
    cur
}

/// Intersection of two convex polygons, `None` when empty or lower
/// dimensional.
pub fn intersect_convex(p: &ConvexPolygon, q: &ConvexPolygon) -> Option<ConvexPolygon> {
    let chain = intersect_chain(p.vertices(), q);
    ConvexPolygon::canonicalized(chain).ok()
}

fn chain_area(verts: &[Vec2]) -> f64 {
    if verts.len() < 3 {
        return 0.0;
    }
    let mut s = 0.0;
    for i in 0..verts.len() {
        s += verts[i].cross(verts[(i + 1) % verts.len()]);
    }
    0.5 * s
}

/// Exact area of a union of convex polygons by inclusion-exclusion over
/// running intersections; empty intersections prune all their supersets.
pub fn union_area(polys: &[ConvexPolygon]) -> f64 {
    fn rec(polys: &[ConvexPolygon], next: usize, cur: &[Vec2], sign: f64, total: &mut f64) {
        *total += sign * chain_area(cur);
        for j in next..polys.len() {
            let inter = intersect_chain(cur, &polys[j]);
            if chain_area(&inter) > 0.0 {
                rec(polys, j + 1, &inter, -sign, total);
            }
        }
    }
    let mut total = 0.0;
    for i in 0..polys.len() {
        rec(polys, i + 1, polys[i].vertices(), 1.0, &mut total);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{convex_hull, v2};

    fn square(x0: f64, y0: f64, x1: f64, y1: f64) -> ConvexPolygon {
        convex_hull(&[v2(x0, y0), v2(x1, y0), v2(x1, y1), v2(x0, y1)]).unwrap()
    }

    #[test]
    fn union_disjoint_squares() {
        let a = square(0.0, 0.0, 1.0, 1.0);
        let b = square(2.0, 0.0, 3.0, 1.0);
        assert!((union_area(&[a, b]) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn union_identical_squares() {
        let a = square(0.0, 0.0, 1.0, 1.0);
        assert!((union_area(&[a.clone(), a]) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn union_overlapping_squares() {
        let a = square(0.0, 0.0, 1.0, 1.0);
        let b = square(0.5, 0.0, 1.5, 1.0);
        assert!((union_area(&[a, b]) - 1.5).abs() < 1e-12);
    }

    #[test]
    fn intersection_of_offset_squares() {
        let a = square(0.0, 0.0, 1.0, 1.0);
        let b = square(0.5, 0.5, 1.5, 1.5);
        let i = intersect_convex(&a, &b).unwrap();
        assert!((i.area() - 0.25).abs() < 1e-12);
        // Touching squares intersect in a segment: no polygon.
        let c = square(1.0, 0.0, 2.0, 1.0);
        assert!(intersect_convex(&a, &c).is_none());
    }
}
