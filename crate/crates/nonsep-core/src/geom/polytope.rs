//! Convex polytopes in space, carried as vertices plus facet inequalities.

use alloc::vec::Vec;

use super::vec::{Dir3, Vec3};
use super::GeomError;

/// A facet-supporting halfspace `{ p : <normal, p> <= offset }`.
#[derive(Copy, Clone, Debug)]
pub struct Facet3 {
    pub normal: Dir3,
    pub offset: f64,
}

/// A bounded convex polytope `{ x : <a_j, x> <= b_j }` with its vertex set.
#[derive(Clone, Debug)]
pub struct Polytope3 {
    verts: Vec<Vec3>,
    facets: Vec<Facet3>,
}

const FACE_EPS: f64 = 1e-9;

impl Polytope3 {
    /// Builds the polytope from its vertex set by enumerating supporting
    /// planes through vertex triples. Intended for small vertex counts
    /// (tetrahedra and similar); cost grows with the fourth power.
    pub fn from_vertices(verts: Vec<Vec3>) -> Result<Polytope3, GeomError> {
        let n = verts.len();
        if n < 4 {
            return Err(GeomError::DegenerateInput("fewer than 4 vertices"));
        }
        if verts.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::DegenerateInput("non-finite vertex"));
        }
        let scale = verts
            .iter()
            .map(|p| p.norm())
            .fold(1.0_f64, |a, b| a.max(b));
        let mut facets: Vec<Facet3> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let normal = (verts[j] - verts[i]).cross(verts[k] - verts[i]);
                    let Some(mut dir) = Dir3::new(normal) else {
                        continue;
                    };
                    let mut offset = dir.vec().dot(verts[i]);
                    let mut above = false;
                    let mut below = false;
                    for p in &verts {
                        let d = dir.vec().dot(*p) - offset;
                        if d > FACE_EPS * scale {
                            above = true;
                        }
                        if d < -FACE_EPS * scale {
                            below = true;
                        }
                    }
                    if above && below {
                        continue;
                    }
                    if above {
                        dir = -dir;
                        offset = -offset;
                    }
                    if !facets.iter().any(|f| {
                        (f.normal.vec() - dir.vec()).norm() < 1e-9
                            && (f.offset - offset).abs() < 1e-9 * scale.max(1.0)
                    }) {
                        facets.push(Facet3 {
                            normal: dir,
                            offset,
                        });
                    }
                }
            }
        }
        if facets.len() < 4 {
            return Err(GeomError::DegenerateInput("vertices are coplanar"));
        }
        let poly = Polytope3 { verts, facets };
        poly.validate()?;
        Ok(poly)
    }

    fn validate(&self) -> Result<(), GeomError> {
        for p in &self.verts {
            for f in &self.facets {
                if f.normal.vec().dot(*p) > f.offset + 1e-9 {
                    return Err(GeomError::DegenerateInput(
                        "vertex violates a facet inequality",
                    ));
                }
            }
        }
        for f in &self.facets {
            let supported = self
                .verts
                .iter()
                .filter(|p| (f.normal.vec().dot(**p) - f.offset).abs() <= 1e-9)
                .count();
            if supported < 3 {
                return Err(GeomError::DegenerateInput(
                    "facet supported by fewer than 3 vertices",
                ));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.verts
    }

    pub fn facets(&self) -> &[Facet3] {
        &self.facets
    }

    pub fn support(&self, u: Vec3) -> f64 {
        let mut best = f64::NEG_INFINITY;
        for &p in &self.verts {
            best = best.max(p.dot(u));
        }
        best
    }

    pub fn contains(&self, p: Vec3, tol: f64) -> bool {
        self.facets
            .iter()
            .all(|f| f.normal.vec().dot(p) <= f.offset + tol)
    }

    pub fn homothet(&self, tau: f64, x: Vec3) -> Result<Polytope3, GeomError> {
        if !(tau > 0.0) {
            return Err(GeomError::NonPositiveRatio(tau));
        }
        Ok(Polytope3 {
            verts: self.verts.iter().map(|&p| x + tau * p).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet3 {
                    normal: f.normal,
                    offset: tau * f.offset + f.normal.vec().dot(x),
                })
                .collect(),
        })
    }

    pub fn centroid(&self) -> Vec3 {
        let mut c = Vec3::ZERO;
        for &p in &self.verts {
            c = c + p;
        }
        (1.0 / self.verts.len() as f64) * c
    }

    /// Regular tetrahedron with unit edge length, centroid at the origin,
    /// one facet horizontal at the bottom and the apex on the +z axis.
    pub fn unit_tetrahedron() -> Polytope3 {
        use super::vec::v3;
        let circum = 1.0 / libm::sqrt(3.0);
        let height = libm::sqrt(2.0 / 3.0);
        let base_z = -height / 4.0;
        let mut verts = Vec::with_capacity(4);
        for i in 0..3 {
            let a = core::f64::consts::PI / 2.0 + 2.0 * core::f64::consts::PI * i as f64 / 3.0;
            verts.push(v3(circum * libm::cos(a), circum * libm::sin(a), base_z));
        }
        verts.push(v3(0.0, 0.0, 3.0 * height / 4.0));
        Polytope3::from_vertices(verts).expect("regular tetrahedron")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::v3;

    #[test]
    fn unit_tetrahedron_shape() {
        let t = Polytope3::unit_tetrahedron();
        assert_eq!(t.vertices().len(), 4);
        assert_eq!(t.facets().len(), 4);
        // Unit edges.
        for i in 0..4 {
            for j in i + 1..4 {
                assert!((t.vertices()[i].dist(t.vertices()[j]) - 1.0).abs() < 1e-12);
            }
        }
        // Centroid at origin, which is interior.
        assert!(t.centroid().norm() < 1e-12);
        assert!(t.contains(Vec3::ZERO, 0.0));
        assert!(!t.contains(v3(1.0, 1.0, 1.0), 1e-9));
    }

    #[test]
    fn homothet_support_covariance() {
        let t = Polytope3::unit_tetrahedron();
        let h = t.homothet(2.0, v3(1.0, -1.0, 0.5)).unwrap();
        let u = v3(0.3, 0.2, -0.9);
        let expect = v3(1.0, -1.0, 0.5).dot(u) + 2.0 * t.support(u);
        assert!((h.support(u) - expect).abs() < 1e-12);
    }
}
