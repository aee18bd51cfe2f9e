//! The scene data model: a reference convex body in canonical pose plus a
//! finite family of positive homothets of it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::geom::{Ball2, Ball3, ConvexPolygon, GeomError, Polytope3, Vec2, Vec3};
use crate::GEOM_EPS;

pub mod generators;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SceneError {
    #[error("invalid scene: {0}")]
    Validation(String),
    #[error("homothet ratio must be positive, got {0}")]
    NonPositiveRatio(f64),
    #[error("family needs at least {min} members, got {got}")]
    BadCount { min: usize, got: usize },
    #[error("reference body is not origin-symmetric")]
    NotSymmetric,
    #[error("random generation failed after {0} retries")]
    GenerationFailed(usize),
    #[error("geometry error: {0}")]
    Geometry(#[from] GeomError),
}

/// One member of the family: the homothet `translation + ratio * K`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Homothet {
    /// Translation vector; `z` is zero for planar scenes.
    pub translation: Vec3,
    /// Positive homothety ratio.
    pub ratio: f64,
}

impl Homothet {
    pub fn new2(x: Vec2, ratio: f64) -> Homothet {
        Homothet {
            translation: Vec3 {
                x: x.x,
                y: x.y,
                z: 0.0,
            },
            ratio,
        }
    }

    pub fn new3(x: Vec3, ratio: f64) -> Homothet {
        Homothet {
            translation: x,
            ratio,
        }
    }

    pub fn xy(&self) -> Vec2 {
        self.translation.xy()
    }
}

/// The reference body `K`, stored in canonical pose: polygons with their
/// centroid at the origin, balls as the unit ball at the origin, polytopes
/// with the origin interior.
#[derive(Clone, Debug)]
pub enum ReferenceBody {
    Polygon(ConvexPolygon),
    Ball,
    Polytope3(Polytope3),
}

impl ReferenceBody {
    pub fn dimension(&self) -> usize {
        match self {
            ReferenceBody::Polygon(_) => 2,
            ReferenceBody::Ball => 2, // may be overridden to 3 by the scene
            ReferenceBody::Polytope3(_) => 3,
        }
    }
}

/// A realized member body.
#[derive(Clone, Debug)]
pub enum Body {
    Polygon(ConvexPolygon),
    Disk(Ball2),
    Polytope(Polytope3),
    Ball3(Ball3),
}

impl Body {
    pub fn support2(&self, u: Vec2) -> f64 {
        match self {
            Body::Polygon(p) => p.support(u),
            Body::Disk(b) => b.support(u),
            _ => panic!("support2 on a spatial body"),
        }
    }

    pub fn support3(&self, u: Vec3) -> f64 {
        match self {
            Body::Polytope(p) => p.support(u),
            Body::Ball3(b) => b.support(u),
            _ => panic!("support3 on a planar body"),
        }
    }

    pub fn as_polygon(&self) -> Option<&ConvexPolygon> {
        match self {
            Body::Polygon(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_disk(&self) -> Option<&Ball2> {
        match self {
            Body::Disk(b) => Some(b),
            _ => None,
        }
    }
}

/// A finite family of positive homothets of one reference body.
#[derive(Clone, Debug)]
pub struct Scene {
    dimension: usize,
    label: String,
    reference: ReferenceBody,
    members: Vec<Homothet>,
}

impl Scene {
    pub fn new(
        dimension: usize,
        label: impl Into<String>,
        reference: ReferenceBody,
        members: Vec<Homothet>,
    ) -> Result<Scene, SceneError> {
        let scene = Scene {
            dimension,
            label: label.into(),
            reference,
            members,
        };
        scene.validate()?;
        Ok(scene)
    }

    fn validate(&self) -> Result<(), SceneError> {
        if self.dimension != 2 && self.dimension != 3 {
            return Err(SceneError::Validation(format!(
                "dimension must be 2 or 3, got {}",
                self.dimension
            )));
        }
        match (&self.reference, self.dimension) {
            (ReferenceBody::Polygon(_), 2) | (ReferenceBody::Ball, 2 | 3) => {}
            (ReferenceBody::Polytope3(_), 3) => {}
            _ => {
                return Err(SceneError::Validation(
                    "reference body kind does not match the scene dimension".into(),
                ))
            }
        }
        match &self.reference {
            ReferenceBody::Polygon(p) => {
                if !p.contains(Vec2::ZERO, 0.0) {
                    return Err(SceneError::Validation(
                        "origin must be interior to the reference polygon".into(),
                    ));
                }
                let c = p.centroid();
                if c.norm() > 1e-6 * p.diameter().max(1.0) {
                    return Err(SceneError::Validation(
                        "reference polygon must be centered at its centroid".into(),
                    ));
                }
            }
            ReferenceBody::Polytope3(p) => {
                if !p.contains(Vec3::ZERO, 0.0) {
                    return Err(SceneError::Validation(
                        "origin must be interior to the reference polytope".into(),
                    ));
                }
            }
            ReferenceBody::Ball => {}
        }
        if self.members.len() < 2 {
            return Err(SceneError::BadCount {
                min: 2,
                got: self.members.len(),
            });
        }
        for m in &self.members {
            if !(m.ratio > 0.0) || !m.ratio.is_finite() {
                return Err(SceneError::NonPositiveRatio(m.ratio));
            }
            if !m.translation.is_finite() {
                return Err(SceneError::Validation(
                    "member translation must be finite".into(),
                ));
            }
            if self.dimension == 2 && m.translation.z != 0.0 {
                return Err(SceneError::Validation(
                    "planar member translation must have no z component".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn reference(&self) -> &ReferenceBody {
        &self.reference
    }

    pub fn members(&self) -> &[Homothet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn ratio_sum(&self) -> f64 {
        self.members.iter().map(|m| m.ratio).sum()
    }

    /// Realizes member `i` as a concrete body.
    pub fn realize(&self, i: usize) -> Body {
        let m = &self.members[i];
        match (&self.reference, self.dimension) {
            (ReferenceBody::Polygon(p), _) => {
                Body::Polygon(p.homothet(m.ratio, m.xy()).expect("validated ratio"))
            }
            (ReferenceBody::Ball, 2) => {
                Body::Disk(Ball2::unit().homothet(m.ratio, m.xy()).expect("ratio"))
            }
            (ReferenceBody::Ball, _) => Body::Ball3(
                Ball3::unit()
                    .homothet(m.ratio, m.translation)
                    .expect("ratio"),
            ),
            (ReferenceBody::Polytope3(p), _) => {
                Body::Polytope(p.homothet(m.ratio, m.translation).expect("ratio"))
            }
        }
    }

    pub fn realize_all(&self) -> Vec<Body> {
        (0..self.len()).map(|i| self.realize(i)).collect()
    }

    /// Support of member `i` in a planar direction.
    pub fn member_support2(&self, i: usize, u: Vec2) -> f64 {
        let m = &self.members[i];
        m.xy().dot(u) + m.ratio * self.reference_support2(u)
    }

    /// Support of member `i` in a spatial direction.
    pub fn member_support3(&self, i: usize, u: Vec3) -> f64 {
        let m = &self.members[i];
        m.translation.dot(u) + m.ratio * self.reference_support3(u)
    }

    pub fn reference_support2(&self, u: Vec2) -> f64 {
        match &self.reference {
            ReferenceBody::Polygon(p) => p.support(u),
            ReferenceBody::Ball => u.norm(),
            ReferenceBody::Polytope3(_) => panic!("planar support of a spatial reference"),
        }
    }

    pub fn reference_support3(&self, u: Vec3) -> f64 {
        match &self.reference {
            ReferenceBody::Ball => u.norm(),
            ReferenceBody::Polytope3(p) => p.support(u),
            ReferenceBody::Polygon(_) => panic!("spatial support of a planar reference"),
        }
    }

    /// A scene with the same reference and label but different members.
    pub fn with_members(&self, members: Vec<Homothet>) -> Result<Scene, SceneError> {
        Scene::new(
            self.dimension,
            self.label.clone(),
            self.reference.clone(),
            members,
        )
    }

    /// The subscene keeping only the members at the given indices.
    pub fn subscene(&self, keep: &[usize]) -> Result<Scene, SceneError> {
        let members = keep.iter().map(|&i| self.members[i]).collect();
        self.with_members(members)
    }

    /// All realized vertices of polygon members (planar scenes only).
    pub fn all_vertices2(&self) -> Vec<Vec2> {
        let mut out = Vec::new();
        for body in self.realize_all() {
            if let Body::Polygon(p) = body {
                out.extend_from_slice(p.vertices());
            }
        }
        out
    }
}

/// Checks `K = -K` for a reference polygon within `tol` by testing every
/// reflected vertex for membership.
pub fn polygon_is_origin_symmetric(p: &ConvexPolygon, tol: f64) -> bool {
    p.vertices().iter().all(|&v| p.contains(-v, tol))
}

/// Checks symmetry of any planar reference body.
pub fn reference_is_origin_symmetric(r: &ReferenceBody) -> bool {
    match r {
        ReferenceBody::Ball => true,
        ReferenceBody::Polygon(p) => polygon_is_origin_symmetric(p, GEOM_EPS),
        ReferenceBody::Polytope3(p) => p
            .vertices()
            .iter()
            .all(|&v| p.contains(-v, GEOM_EPS)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::v2;
    use alloc::vec;

    #[test]
    fn rejects_single_member() {
        let r = Scene::new(
            2,
            "one",
            ReferenceBody::Ball,
            vec![Homothet::new2(Vec2::ZERO, 1.0)],
        );
        assert!(matches!(r, Err(SceneError::BadCount { .. })));
    }

    #[test]
    fn rejects_nonpositive_ratio() {
        let r = Scene::new(
            2,
            "bad",
            ReferenceBody::Ball,
            vec![
                Homothet::new2(Vec2::ZERO, 1.0),
                Homothet::new2(v2(1.0, 0.0), 0.0),
            ],
        );
        assert!(matches!(r, Err(SceneError::NonPositiveRatio(_))));
    }

    #[test]
    fn rejects_uncentered_polygon() {
        let p = ConvexPolygon::unit_square().translate(v2(2.0, 0.0));
        let r = Scene::new(
            2,
            "off",
            ReferenceBody::Polygon(p),
            vec![
                Homothet::new2(Vec2::ZERO, 1.0),
                Homothet::new2(v2(1.0, 0.0), 1.0),
            ],
        );
        assert!(matches!(r, Err(SceneError::Validation(_))));
    }

    #[test]
    fn symmetry_checks() {
        assert!(polygon_is_origin_symmetric(
            &ConvexPolygon::unit_square(),
            1e-9
        ));
        assert!(polygon_is_origin_symmetric(
            &ConvexPolygon::unit_hexagon(),
            1e-9
        ));
        assert!(!polygon_is_origin_symmetric(
            &ConvexPolygon::unit_triangle(),
            1e-9
        ));
    }
}
