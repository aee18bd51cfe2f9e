//! Classification of how two convex polygons relate: disjoint with a
//! positive gap, touching, or overlapping in their interiors.

use super::polygon::ConvexPolygon;
use super::vec::Vec2;
use crate::GEOM_EPS;

#[derive(Clone, Debug, PartialEq)]
pub enum HullRelation {
    /// Disjoint with the given (positive) Euclidean distance.
    Disjoint(f64),
    /// Nonempty intersection with empty interior.
    Touching,
    /// Interiors intersect.
    Overlapping,
}

/// Best separation over the edge normals of both polygons. Positive means
/// disjoint, zero (within tolerance) means touching, negative means the
/// interiors overlap. For convex polygons a separating axis, when one
/// exists, always occurs among the edge normals.
fn max_axis_separation(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for f in p.facets() {
        let u = f.normal.vec();
        best = best.max(-q.support(-u) - p.support(u));
    }
    for f in q.facets() {
        let u = f.normal.vec();
        best = best.max(-p.support(-u) - q.support(u));
    }
    best
}

fn point_segment_closest(p: Vec2, a: Vec2, b: Vec2) -> Vec2 {
    let ab = b - a;
    let t = ((p - a).dot(ab) / ab.dot(ab)).clamp(0.0, 1.0);
    a + t * ab
}

fn point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    p.dist(point_segment_closest(p, a, b))
}

/// Closest point pair `(on p, on q)` between two convex polygons, by
/// minimizing over vertex-to-edge pairs both ways. Exact for disjoint
/// polygons; for intersecting ones it returns a boundary pair.
pub fn polygon_closest_points(p: &ConvexPolygon, q: &ConvexPolygon) -> (f64, Vec2, Vec2) {
    let mut best = (f64::INFINITY, p.vertices()[0], q.vertices()[0]);
    let edges = |poly: &ConvexPolygon| {
        let vs = poly.vertices().to_vec();
        (0..vs.len())
            .map(|i| (vs[i], vs[(i + 1) % vs.len()]))
            .collect::<alloc::vec::Vec<_>>()
    };
    for &v in p.vertices() {
        for &(a, b) in &edges(q) {
            let c = point_segment_closest(v, a, b);
            let d = v.dist(c);
            if d < best.0 {
                best = (d, v, c);
            }
        }
    }
    for &v in q.vertices() {
        for &(a, b) in &edges(p) {
            let c = point_segment_closest(v, a, b);
            let d = v.dist(c);
            if d < best.0 {
                best = (d, c, v);
            }
        }
    }
    best
}

/// Euclidean distance between two disjoint convex polygons: the minimum
/// over vertex-to-edge pairs in both directions (vertex-vertex pairs are
/// covered by segment endpoints).
pub fn polygon_distance(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    let mut best = f64::INFINITY;
    let edges = |poly: &ConvexPolygon| {
        let vs = poly.vertices().to_vec();
        (0..vs.len())
            .map(|i| (vs[i], vs[(i + 1) % vs.len()]))
            .collect::<alloc::vec::Vec<_>>()
    };
    for &v in p.vertices() {
        for &(a, b) in &edges(q) {
            best = best.min(point_segment_distance(v, a, b));
        }
    }
    for &v in q.vertices() {
        for &(a, b) in &edges(p) {
            best = best.min(point_segment_distance(v, a, b));
        }
    }
    best
}

pub fn hull_relation(p: &ConvexPolygon, q: &ConvexPolygon) -> HullRelation {
    let sep = max_axis_separation(p, q);
    if sep > GEOM_EPS {
        HullRelation::Disjoint(polygon_distance(p, q))
    } else if sep >= -GEOM_EPS {
        HullRelation::Touching
    } else {
        HullRelation::Overlapping
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{convex_hull, v2};

    fn square(x0: f64, y0: f64, x1: f64, y1: f64) -> ConvexPolygon {
        convex_hull(&[v2(x0, y0), v2(x1, y0), v2(x1, y1), v2(x0, y1)]).unwrap()
    }

    #[test]
    fn disjoint_touching_overlapping() {
        let a = square(0.0, 0.0, 1.0, 1.0);
        assert_eq!(
            hull_relation(&a, &square(2.0, 0.0, 3.0, 1.0)),
            HullRelation::Disjoint(1.0)
        );
        assert_eq!(
            hull_relation(&a, &square(1.0, 0.0, 2.0, 1.0)),
            HullRelation::Touching
        );
        assert_eq!(
            hull_relation(&a, &square(0.5, 0.0, 1.5, 1.0)),
            HullRelation::Overlapping
        );
    }

    #[test]
    fn corner_to_corner_distance() {
        let a = square(0.0, 0.0, 1.0, 1.0);
        let b = square(2.0, 2.0, 3.0, 3.0);
        match hull_relation(&a, &b) {
            HullRelation::Disjoint(d) => assert!((d - libm::sqrt(2.0)).abs() < 1e-12),
            r => panic!("expected disjoint, got {r:?}"),
        }
    }
}
