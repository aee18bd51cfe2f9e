//! Convex polygons in counter-clockwise order and their basic algebra:
//! hulls, support functions, Minkowski sums, symmetrization.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::vec::{v2, Dir2, Vec2};
use super::GeomError;
use crate::NORM_EPS;

/// An edge-supporting halfplane `{ p : <normal, p> <= offset }` with unit
/// outward normal.
#[derive(Copy, Clone, Debug)]
pub struct Facet2 {
    pub normal: Dir2,
    pub offset: f64,
}

/// A bounded convex polygon: at least three counter-clockwise vertices,
/// strictly convex (no three consecutive collinear vertices).
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    verts: Vec<Vec2>,
}

impl ConvexPolygon {
    /// Validates an already-clean vertex chain. Rejects chains that are not
    /// finite, counter-clockwise and strictly convex.
    pub fn new(verts: Vec<Vec2>) -> Result<Self, GeomError> {
        if verts.len() < 3 {
            return Err(GeomError::DegenerateInput("fewer than 3 vertices"));
        }
        if verts.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::DegenerateInput("non-finite vertex"));
        }
        let n = verts.len();
        for i in 0..n {
            let a = verts[i];
            let b = verts[(i + 1) % n];
            let c = verts[(i + 2) % n];
            let e1 = b - a;
            let e2 = c - b;
            let scale = e1.norm() * e2.norm();
            if scale < NORM_EPS {
                return Err(GeomError::DegenerateInput("repeated vertex"));
            }
            if e1.cross(e2) <= NORM_EPS * scale {
                return Err(GeomError::DegenerateInput(
                    "vertex chain is not strictly convex counter-clockwise",
                ));
            }
        }
        Ok(ConvexPolygon { verts })
    }

    /// Canonicalizes a convex counter-clockwise chain that may carry
    /// duplicate or collinear vertices (as produced by clipping and merging)
    /// and validates the result.
    pub fn canonicalized(verts: Vec<Vec2>) -> Result<Self, GeomError> {
        Self::new(prune_chain(verts))
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Support value `h(u) = max { <p, u> : p in polygon }`.
    pub fn support(&self, u: Vec2) -> f64 {
        let mut best = f64::NEG_INFINITY;
        for &p in &self.verts {
            best = best.max(p.dot(u));
        }
        best
    }

    /// A vertex attaining the support value in direction `u`.
    pub fn support_point(&self, u: Vec2) -> Vec2 {
        let mut best = self.verts[0];
        for &p in &self.verts[1..] {
            if p.dot(u) > best.dot(u) {
                best = p;
            }
        }
        best
    }

    /// Outward unit normal and offset of every edge, in vertex order.
    pub fn facets(&self) -> Vec<Facet2> {
        let n = self.verts.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.verts[i];
            let b = self.verts[(i + 1) % n];
            // For a CCW chain the outward normal is the clockwise perp.
            let normal = Dir2::new(-(b - a).perp()).expect("non-degenerate edge");
            out.push(Facet2 {
                normal,
                offset: normal.vec().dot(a),
            });
        }
        out
    }

    /// True iff `p` satisfies every edge inequality slackened by `tol`.
    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        self.facets()
            .iter()
            .all(|f| f.normal.vec().dot(p) <= f.offset + tol)
    }

    /// Largest violation of the edge inequalities at `p` (negative inside).
    pub fn containment_slack(&self, p: Vec2) -> f64 {
        let mut worst = f64::NEG_INFINITY;
        for f in self.facets() {
            worst = worst.max(f.normal.vec().dot(p) - f.offset);
        }
        worst
    }

    pub fn area(&self) -> f64 {
        let n = self.verts.len();
        let mut s = 0.0;
        for i in 0..n {
            s += self.verts[i].cross(self.verts[(i + 1) % n]);
        }
        0.5 * s
    }

    pub fn centroid(&self) -> Vec2 {
        let n = self.verts.len();
        let mut cx = 0.0;
        let mut cy = 0.0;
        let mut a = 0.0;
        for i in 0..n {
            let p = self.verts[i];
            let q = self.verts[(i + 1) % n];
            let w = p.cross(q);
            a += w;
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
        }
        v2(cx / (3.0 * a), cy / (3.0 * a))
    }

    pub fn translate(&self, t: Vec2) -> ConvexPolygon {
        ConvexPolygon {
            verts: self.verts.iter().map(|&p| p + t).collect(),
        }
    }

    /// Image under `p -> x + tau * p` with `tau > 0`.
    pub fn homothet(&self, tau: f64, x: Vec2) -> Result<ConvexPolygon, GeomError> {
        if !(tau > 0.0) {
            return Err(GeomError::NonPositiveRatio(tau));
        }
        Ok(ConvexPolygon {
            verts: self.verts.iter().map(|&p| x + tau * p).collect(),
        })
    }

    /// Reflection through the origin. A point reflection is a half-turn, so
    /// the vertex order stays counter-clockwise.
    pub fn reflect(&self) -> ConvexPolygon {
        ConvexPolygon {
            verts: self.verts.iter().map(|&p| -p).collect(),
        }
    }

    pub fn diameter(&self) -> f64 {
        let mut best: f64 = 0.0;
        for (i, &p) in self.verts.iter().enumerate() {
            for &q in &self.verts[i + 1..] {
                best = best.max(p.dist(q));
            }
        }
        best
    }

    /// Regular `k`-gon with circumradius `r`, first vertex at angle `phase`.
    pub fn regular(k: usize, r: f64, phase: f64) -> ConvexPolygon {
        let verts = (0..k)
            .map(|i| {
                let a = phase + 2.0 * PI * i as f64 / k as f64;
                v2(r * libm::cos(a), r * libm::sin(a))
            })
            .collect();
        ConvexPolygon::new(verts).expect("regular polygon is convex")
    }

    /// Regular triangle with unit side length, centroid at the origin, one
    /// vertex pointing up.
    pub fn unit_triangle() -> ConvexPolygon {
        let r = 1.0 / libm::sqrt(3.0);
        ConvexPolygon::regular(3, r, PI / 2.0)
    }

    /// Axis-aligned unit square centered at the origin.
    pub fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(alloc::vec![
            v2(-0.5, -0.5),
            v2(0.5, -0.5),
            v2(0.5, 0.5),
            v2(-0.5, 0.5),
        ])
        .expect("square")
    }

    /// Regular hexagon with unit side length centered at the origin.
    pub fn unit_hexagon() -> ConvexPolygon {
        ConvexPolygon::regular(6, 1.0, 0.0)
    }
}

/// Drops duplicate and collinear vertices from a convex CCW chain.
fn prune_chain(verts: Vec<Vec2>) -> Vec<Vec2> {
    // Dedup first so collinearity tests see real edges.
    let mut pts: Vec<Vec2> = Vec::with_capacity(verts.len());
    for p in verts {
        if pts.last().map_or(true, |q| q.dist(p) > NORM_EPS) {
            pts.push(p);
        }
    }
    while pts.len() > 1 && pts[0].dist(pts[pts.len() - 1]) <= NORM_EPS {
        pts.pop();
    }
    if pts.len() < 3 {
        return pts;
    }
    // Repeatedly remove vertices whose turn is not strictly convex.
    loop {
        let n = pts.len();
        if n < 3 {
            return pts;
        }
        let mut removed = false;
        let mut keep: Vec<Vec2> = Vec::with_capacity(n);
        for i in 0..n {
            let a = pts[(i + n - 1) % n];
            let b = pts[i];
            let c = pts[(i + 1) % n];
            let e1 = b - a;
            let e2 = c - b;
            let scale = e1.norm() * e2.norm();
            if e1.cross(e2) <= NORM_EPS * scale {
                removed = true;
            } else {
                keep.push(b);
            }
        }
        if !removed {
            return pts;
        }
        pts = keep;
    }
}

/// Convex hull of a planar point set (Andrew's monotone chain), CCW.
///
/// Collinear boundary points are dropped. Fails when all points are within
/// tolerance of a single line.
pub fn convex_hull(points: &[Vec2]) -> Result<ConvexPolygon, GeomError> {
    if points.len() < 3 {
        return Err(GeomError::DegenerateInput("fewer than 3 points"));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(GeomError::DegenerateInput("non-finite point"));
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).expect("finite"));
    pts.dedup_by(|a, b| a.dist(*b) <= NORM_EPS);
    if pts.len() < 3 {
        return Err(GeomError::DegenerateInput("all points coincide"));
    }

    let turn_ok = |o: Vec2, a: Vec2, b: Vec2| {
        let e1 = a - o;
        let e2 = b - a;
        e1.cross(e2) > NORM_EPS * e1.norm() * e2.norm()
    };
    let build = |iter: &mut dyn Iterator<Item = Vec2>| {
        let mut chain: Vec<Vec2> = Vec::new();
        for p in iter {
            while chain.len() >= 2 && !turn_ok(chain[chain.len() - 2], chain[chain.len() - 1], p) {
                chain.pop();
            }
            chain.push(p);
        }
        chain
    };
    let mut lower = build(&mut pts.iter().copied());
    let mut upper = build(&mut pts.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    if lower.len() < 3 {
        return Err(GeomError::DegenerateInput("points are collinear"));
    }
    ConvexPolygon::canonicalized(lower)
}

/// Minkowski sum `P + Q` by merging edge fans (both polygons CCW).
pub fn minkowski_sum(p: &ConvexPolygon, q: &ConvexPolygon) -> ConvexPolygon {
    let pa = rotate_to_lowest(p.vertices());
    let qa = rotate_to_lowest(q.vertices());
    let np = pa.len();
    let nq = qa.len();
    let edge = |v: &[Vec2], i: usize| v[(i + 1) % v.len()] - v[i];

    let mut out: Vec<Vec2> = Vec::with_capacity(np + nq);
    let mut cur = pa[0] + qa[0];
    let (mut i, mut j) = (0usize, 0usize);
    while i < np || j < nq {
        out.push(cur);
        let step = if i == np {
            let e = edge(&qa, j);
            j += 1;
            e
        } else if j == nq {
            let e = edge(&pa, i);
            i += 1;
            e
        } else {
            let ep = edge(&pa, i);
            let eq = edge(&qa, j);
            // Starting from the lowest vertex, CCW edge angles increase over
            // [0, 2pi); pick the smaller angle, or both when parallel.
            match cmp_edge_angle(ep, eq) {
                core::cmp::Ordering::Less => {
                    i += 1;
                    ep
                }
                core::cmp::Ordering::Greater => {
                    j += 1;
                    eq
                }
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    ep + eq
                }
            }
        };
        cur = cur + step;
    }
    ConvexPolygon::canonicalized(out).expect("sum of convex polygons is convex")
}

/// Central symmetrization `(P + (-P)) / 2`: the o-symmetric body with the
/// same width as `P` in every direction.
pub fn central_symmetrization(p: &ConvexPolygon) -> ConvexPolygon {
    let sum = minkowski_sum(p, &p.reflect());
    let verts = sum.vertices().iter().map(|&v| 0.5 * v).collect();
    ConvexPolygon::new(verts).expect("scaled convex polygon")
}

/// Maximum-area triangle with vertices among the polygon's vertices. For a
/// convex polygon this attains the overall inscribed-triangle maximum, since
/// a largest inscribed triangle can always be pushed to have its corners at
/// polygon vertices.
pub fn largest_inscribed_triangle(p: &ConvexPolygon) -> ([Vec2; 3], f64) {
    let vs = p.vertices();
    let n = vs.len();
    let mut best = ([vs[0], vs[1], vs[2]], f64::NEG_INFINITY);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let area = 0.5 * (vs[j] - vs[i]).cross(vs[k] - vs[i]);
                if area > best.1 {
                    best = ([vs[i], vs[j], vs[k]], area);
                }
            }
        }
    }
    best
}

fn rotate_to_lowest(verts: &[Vec2]) -> Vec<Vec2> {
    let mut lo = 0;
    for (i, v) in verts.iter().enumerate() {
        let best = verts[lo];
        if (v.y, v.x) < (best.y, best.x) {
            lo = i;
        }
    }
    let mut out = Vec::with_capacity(verts.len());
    out.extend_from_slice(&verts[lo..]);
    out.extend_from_slice(&verts[..lo]);
    out
}

/// Compares polar angles in `[0, 2pi)` without trigonometry.
fn cmp_edge_angle(a: Vec2, b: Vec2) -> core::cmp::Ordering {
    let half = |v: Vec2| -> u8 {
        if v.y > 0.0 || (v.y == 0.0 && v.x > 0.0) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    let c = a.cross(b);
    let scale = NORM_EPS * a.norm() * b.norm();
    if c > scale {
        core::cmp::Ordering::Less
    } else if c < -scale {
        core::cmp::Ordering::Greater
    } else {
        core::cmp::Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn hull_drops_interior_point() {
        let h = convex_hull(&[v2(0.0, 0.0), v2(1.0, 0.0), v2(0.0, 1.0), v2(0.2, 0.2)]).unwrap();
        assert_eq!(h.len(), 3);
        for p in [v2(0.0, 0.0), v2(1.0, 0.0), v2(0.0, 1.0)] {
            assert!(h.vertices().contains(&p));
        }
    }

    #[test]
    fn hull_of_square_is_square() {
        let pts = [v2(0.0, 0.0), v2(1.0, 0.0), v2(1.0, 1.0), v2(0.0, 1.0)];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.len(), 4);
        assert!((h.area() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hull_rejects_collinear() {
        let r = convex_hull(&[v2(0.0, 0.0), v2(1.0, 1.0), v2(2.0, 2.0)]);
        assert!(matches!(r, Err(GeomError::DegenerateInput(_))));
    }

    #[test]
    fn support_of_unit_square() {
        let sq = ConvexPolygon::unit_square();
        assert!((sq.support(v2(1.0, 0.0)) - 0.5).abs() < 1e-15);
        assert!((sq.support(v2(0.0, -1.0)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn triangle_apothem() {
        // Support of the unit triangle along an outward edge normal equals
        // the apothem 1/(2*sqrt(3)).
        let t = ConvexPolygon::unit_triangle();
        let f = &t.facets()[0];
        let apothem = 1.0 / (2.0 * libm::sqrt(3.0));
        assert!((t.support(f.normal.vec()) - apothem).abs() < 1e-12);
    }

    #[test]
    fn minkowski_square_plus_square() {
        let sq = ConvexPolygon::unit_square();
        let s2 = minkowski_sum(&sq, &sq);
        assert_eq!(s2.len(), 4);
        assert!((s2.area() - 4.0).abs() < 1e-12);
        assert!((s2.support(v2(1.0, 0.0)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn symmetrization_of_triangle_is_hexagon() {
        let t = ConvexPolygon::unit_triangle();
        let h = central_symmetrization(&t);
        assert_eq!(h.len(), 6);
        // Same widths as the triangle in every direction.
        for k in 0..720 {
            let u = Dir2::from_angle(k as f64 * PI / 360.0).vec();
            let wt = t.support(u) + t.support(-u);
            let wh = h.support(u) + h.support(-u);
            assert!((wt - wh).abs() < 1e-10);
        }
        // Idempotent.
        let hh = central_symmetrization(&h);
        for (a, b) in h.vertices().iter().zip(hh.vertices()) {
            assert!(a.dist(*b) < 1e-12);
        }
    }

    #[test]
    fn inscribed_triangle_square_and_hexagon() {
        let sq = ConvexPolygon::unit_square();
        let (_, a) = largest_inscribed_triangle(&sq);
        assert!((a - 0.5).abs() < 1e-12);

        let hex = ConvexPolygon::unit_hexagon();
        let (_, a) = largest_inscribed_triangle(&hex);
        assert!((a - 3.0 * libm::sqrt(3.0) / 4.0).abs() < 1e-12);
    }

    #[test]
    fn homothet_rejects_nonpositive_ratio() {
        let t = ConvexPolygon::unit_triangle();
        assert!(matches!(
            t.homothet(0.0, Vec2::ZERO),
            Err(GeomError::NonPositiveRatio(_))
        ));
        assert!(matches!(
            t.homothet(-2.0, Vec2::ZERO),
            Err(GeomError::NonPositiveRatio(_))
        ));
    }

    #[test]
    fn canonicalize_drops_collinear() {
        let p = ConvexPolygon::canonicalized(vec![
            v2(0.0, 0.0),
            v2(0.5, 0.0),
            v2(1.0, 0.0),
            v2(1.0, 1.0),
            v2(0.0, 1.0),
            v2(0.0, 0.5),
        ])
        .unwrap();
        assert_eq!(p.len(), 4);
    }
}
