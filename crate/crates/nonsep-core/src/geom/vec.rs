//! Plane and space vectors plus unit directions.

use core::f64::consts::PI;
use core::ops::{Add, Mul, Neg, Sub};

use crate::NORM_EPS;

/// A point or vector in the plane.
#[derive(Copy, Clone, Debug, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

/// A point or vector in space.
#[derive(Copy, Clone, Debug, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub const fn v2(x: f64, y: f64) -> Vec2 {
    Vec2 { x, y }
}

pub const fn v3(x: f64, y: f64, z: f64) -> Vec3 {
    Vec3 { x, y, z }
}

impl Vec2 {
    pub const ZERO: Vec2 = v2(0.0, 0.0);

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product `self × o`.
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        libm::hypot(self.x, self.y)
    }

    pub fn dist(self, o: Vec2) -> f64 {
        (self - o).norm()
    }

    /// Counter-clockwise perpendicular (rotation by +90 degrees).
    pub fn perp(self) -> Vec2 {
        v2(-self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Polar angle in `(-pi, pi]`.
    pub fn angle(self) -> f64 {
        libm::atan2(self.y, self.x)
    }
}

impl Vec3 {
    pub const ZERO: Vec3 = v3(0.0, 0.0, 0.0);

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        v3(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        libm::sqrt(self.dot(self))
    }

    pub fn dist(self, o: Vec3) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn xy(self) -> Vec2 {
        v2(self.x, self.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        v2(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        v2(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        v2(-self.x, -self.y)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    fn mul(self, v: Vec2) -> Vec2 {
        v2(self * v.x, self * v.y)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        v3(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        v3(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        v3(-self.x, -self.y, -self.z)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v3(self * v.x, self * v.y, self * v.z)
    }
}

/// A unit vector in the plane. Normalized on construction; the constructor
/// guarantees `|norm - 1| <= NORM_EPS`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Dir2(Vec2);

impl Dir2 {
    /// Normalizes `v`; returns `None` for zero or non-finite input.
    pub fn new(v: Vec2) -> Option<Dir2> {
        let n = v.norm();
        if !n.is_finite() || n < NORM_EPS {
            return None;
        }
        Some(Dir2(v2(v.x / n, v.y / n)))
    }

    /// Unit vector at polar angle `theta`.
    pub fn from_angle(theta: f64) -> Dir2 {
        Dir2(v2(libm::cos(theta), libm::sin(theta)))
    }

    pub fn vec(self) -> Vec2 {
        self.0
    }

    /// Polar angle in `[0, pi)` of the line spanned by this direction.
    pub fn line_angle(self) -> f64 {
        let mut a = libm::atan2(self.0.y, self.0.x);
        if a < 0.0 {
            a += PI;
        }
        if a >= PI {
            a -= PI;
        }
        a
    }
}

impl Neg for Dir2 {
    type Output = Dir2;
    fn neg(self) -> Dir2 {
        Dir2(-self.0)
    }
}

/// A unit vector in space.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Dir3(Vec3);

impl Dir3 {
    pub fn new(v: Vec3) -> Option<Dir3> {
        let n = v.norm();
        if !n.is_finite() || n < NORM_EPS {
            return None;
        }
        Some(Dir3(v3(v.x / n, v.y / n, v.z / n)))
    }

    pub fn vec(self) -> Vec3 {
        self.0
    }

    /// Deterministic orthonormal basis of the plane orthogonal to `self`.
    pub fn orthonormal_basis(self) -> (Vec3, Vec3) {
        let u = self.0;
        let seed = if u.x.abs() <= u.y.abs() && u.x.abs() <= u.z.abs() {
            v3(1.0, 0.0, 0.0)
        } else if u.y.abs() <= u.z.abs() {
            v3(0.0, 1.0, 0.0)
        } else {
            v3(0.0, 0.0, 1.0)
        };
        let mut e1 = seed - seed.dot(u) * u;
        let n = e1.norm();
        e1 = (1.0 / n) * e1;
        let e2 = u.cross(e1);
        (e1, e2)
    }
}

impl Neg for Dir3 {
    type Output = Dir3;
    fn neg(self) -> Dir3 {
        Dir3(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dir_normalizes() {
        let d = Dir2::new(v2(3.0, 4.0)).unwrap();
        assert!((d.vec().norm() - 1.0).abs() <= NORM_EPS);
        assert!(Dir2::new(Vec2::ZERO).is_none());
    }

    #[test]
    fn basis_is_orthonormal() {
        let d = Dir3::new(v3(0.3, -0.2, 0.9)).unwrap();
        let (e1, e2) = d.orthonormal_basis();
        assert!(e1.dot(d.vec()).abs() < 1e-12);
        assert!(e2.dot(d.vec()).abs() < 1e-12);
        assert!(e1.dot(e2).abs() < 1e-12);
        assert!((e1.norm() - 1.0).abs() < 1e-12);
        assert!((e2.norm() - 1.0).abs() < 1e-12);
    }
}
