//! Euclidean balls in the plane and in space.

use super::vec::{Vec2, Vec3};
use super::GeomError;

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Ball2 {
    pub center: Vec2,
    pub radius: f64,
}

impl Ball2 {
    pub fn new(center: Vec2, radius: f64) -> Result<Ball2, GeomError> {
        if !(radius > 0.0) {
            return Err(GeomError::NonPositiveRatio(radius));
        }
        Ok(Ball2 { center, radius })
    }

    pub fn unit() -> Ball2 {
        Ball2 {
            center: Vec2::ZERO,
            radius: 1.0,
        }
    }

    pub fn support(&self, u: Vec2) -> f64 {
        // Callers pass unit directions; scale by |u| for general vectors.
        self.center.dot(u) + self.radius * u.norm()
    }

    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        self.center.dist(p) <= self.radius + tol
    }

    pub fn homothet(&self, tau: f64, x: Vec2) -> Result<Ball2, GeomError> {
        if !(tau > 0.0) {
            return Err(GeomError::NonPositiveRatio(tau));
        }
        Ok(Ball2 {
            center: x + tau * self.center,
            radius: tau * self.radius,
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Ball3 {
    pub center: Vec3,
    pub radius: f64,
}

impl Ball3 {
    pub fn unit() -> Ball3 {
        Ball3 {
            center: Vec3::ZERO,
            radius: 1.0,
        }
    }

    pub fn support(&self, u: Vec3) -> f64 {
        self.center.dot(u) + self.radius * u.norm()
    }

    pub fn contains(&self, p: Vec3, tol: f64) -> bool {
        self.center.dist(p) <= self.radius + tol
    }

    pub fn homothet(&self, tau: f64, x: Vec3) -> Result<Ball3, GeomError> {
        if !(tau > 0.0) {
            return Err(GeomError::NonPositiveRatio(tau));
        }
        Ok(Ball3 {
            center: x + tau * self.center,
            radius: tau * self.radius,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::v2;

    #[test]
    fn support_and_homothet() {
        let b = Ball2::new(v2(1.0, 0.0), 2.0).unwrap();
        assert!((b.support(v2(0.0, 1.0)) - 2.0).abs() < 1e-15);
        let h = Ball2::unit().homothet(2.0, v2(3.0, 0.0)).unwrap();
        assert_eq!(h, Ball2::new(v2(3.0, 0.0), 2.0).unwrap());
    }
}
