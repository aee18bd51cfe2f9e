//! Erosion (Minkowski difference) of convex polygons: the set of
//! translations `t` with `t + X` inside `Y`.

use alloc::vec;
use alloc::vec::Vec;

use super::clip::clip_halfplane;
use super::polygon::{convex_hull, minkowski_sum, ConvexPolygon};
use super::vec::{v2, Vec2};
use crate::lp::{solve_lp, LpRow};
use crate::GEOM_EPS;

/// The translation set `{ t : t + X subset Y }`. It is an intersection of
/// halfplanes and can be full-dimensional, a segment, a single point, or
/// empty (a width of `X` exceeds the matching width of `Y`).
#[derive(Clone, Debug, PartialEq)]
pub enum Erosion {
    Empty,
    Point(Vec2),
    Segment(Vec2, Vec2),
    Region(ConvexPolygon),
}

/// Computes `{ t : t + X subset Y }` as the intersection of the halfplanes
/// `<a_j, t> <= b_j - h_X(a_j)` over the facets `(a_j, b_j)` of `Y`.
pub fn erosion(y: &ConvexPolygon, x: &ConvexPolygon) -> Erosion {
    let facets = y.facets();
    let constraints: Vec<(Vec2, f64)> = facets
        .iter()
        .map(|f| (f.normal.vec(), f.offset - x.support(f.normal.vec())))
        .collect();

    // Chebyshev radius of the constraint set decides the shape class.
    let rows: Vec<LpRow> = constraints
        .iter()
        .map(|&(a, c)| LpRow {
            coeffs: vec![a.x, a.y, 1.0],
            rhs: c,
        })
        .collect();
    let cheb = match solve_lp(&[0.0, 0.0, -1.0], &rows) {
        Ok(sol) => sol,
        Err(_) => return Erosion::Empty,
    };
    let radius = cheb.x[2];
    if radius < -GEOM_EPS {
        return Erosion::Empty;
    }
    if radius > GEOM_EPS {
        // Full-dimensional: clip a box around the feasible set.
        let center = v2(cheb.x[0], cheb.x[1]);
        let half = y.diameter() + x.diameter() + 1.0;
        let mut chain = vec![
            center + v2(-half, -half),
            center + v2(half, -half),
            center + v2(half, half),
            center + v2(-half, half),
        ];
        for &(a, c) in &constraints {
            chain = clip_halfplane(&chain, a, c);
        }
        return match ConvexPolygon::canonicalized(chain) {
            Ok(p) => Erosion::Region(p),
            Err(_) => Erosion::Point(center),
        };
    }

    // Degenerate: find the extent along the axes.
    let extreme = |dir: Vec2| -> Option<Vec2> {
        let rows: Vec<LpRow> = constraints
            .iter()
            .map(|&(a, c)| LpRow {
                coeffs: vec![a.x, a.y],
                rhs: c,
            })
            .collect();
        solve_lp(&[-dir.x, -dir.y], &rows)
            .ok()
            .map(|s| v2(s.x[0], s.x[1]))
    };
    let (Some(px), Some(mx), Some(py), Some(my)) = (
        extreme(v2(1.0, 0.0)),
        extreme(v2(-1.0, 0.0)),
        extreme(v2(0.0, 1.0)),
        extreme(v2(0.0, -1.0)),
    ) else {
        return Erosion::Empty;
    };
    let dx = px.x - mx.x;
    let dy = py.y - my.y;
    if dx.max(dy) <= GEOM_EPS {
        return Erosion::Point(v2(
            0.5 * (px.x + mx.x),
            0.5 * (py.y + my.y),
        ));
    }
    if dx >= dy {
        Erosion::Segment(mx, px)
    } else {
        Erosion::Segment(my, py)
    }
}

/// Minkowski sum of an erosion result with a polygon; `None` when the
/// erosion is empty.
pub fn minkowski_sum_erosion(e: &Erosion, x: &ConvexPolygon) -> Option<ConvexPolygon> {
    match e {
        Erosion::Empty => None,
        Erosion::Point(p) => Some(x.translate(*p)),
        Erosion::Segment(a, b) => {
            let mut pts: Vec<Vec2> = Vec::with_capacity(2 * x.len());
            for &v in x.vertices() {
                pts.push(v + *a);
                pts.push(v + *b);
            }
            convex_hull(&pts).ok()
        }
        Erosion::Region(r) => Some(minkowski_sum(r, x)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::convex_hull;

    fn square(x0: f64, y0: f64, x1: f64, y1: f64) -> ConvexPolygon {
        convex_hull(&[v2(x0, y0), v2(x1, y0), v2(x1, y1), v2(x0, y1)]).unwrap()
    }

    #[test]
    fn square_in_double_square() {
        let y = square(0.0, 0.0, 2.0, 2.0);
        let x = square(0.0, 0.0, 1.0, 1.0);
        match erosion(&y, &x) {
            Erosion::Region(r) => {
                assert!((r.area() - 1.0).abs() < 1e-9);
                assert!(r.contains(v2(0.0, 0.0), 1e-9));
                assert!(r.contains(v2(1.0, 1.0), 1e-9));
            }
            e => panic!("expected region, got {e:?}"),
        }
    }

    #[test]
    fn zero_slack_gives_point() {
        let y = square(0.0, 0.0, 1.0, 1.0);
        match erosion(&y, &y) {
            Erosion::Point(p) => assert!(p.norm() < 1e-7),
            e => panic!("expected point, got {e:?}"),
        }
    }

    #[test]
    fn oversized_body_gives_empty() {
        let y = square(0.0, 0.0, 1.0, 1.0);
        let x = square(0.0, 0.0, 2.0, 0.5);
        assert_eq!(erosion(&y, &x), Erosion::Empty);
    }

    #[test]
    fn rectangle_erosion_is_segment() {
        let y = square(0.0, 0.0, 2.0, 1.0);
        let x = square(0.0, 0.0, 1.0, 1.0);
        match erosion(&y, &x) {
            Erosion::Segment(a, b) => {
                assert!(a.dist(v2(0.0, 0.0)) < 1e-7);
                assert!(b.dist(v2(1.0, 0.0)) < 1e-7);
            }
            e => panic!("expected segment, got {e:?}"),
        }
    }
}
