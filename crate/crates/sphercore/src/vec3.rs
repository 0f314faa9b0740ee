use serde::{Deserialize, Serialize};

use crate::GeomError;

/// Tolerance on `|A + B|` below which two unit vectors count as antipodal.
pub const ANTIPODAL_TOL: f64 = 1e-9;

pub fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn add(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn scale(a: [f64; 3], k: f64) -> [f64; 3] {
    [a[0] * k, a[1] * k, a[2] * k]
}

pub fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// A point on the unit sphere.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitVec {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl UnitVec {
    pub const X: UnitVec = UnitVec { x: 1.0, y: 0.0, z: 0.0 };
    pub const Y: UnitVec = UnitVec { x: 0.0, y: 1.0, z: 0.0 };
    pub const Z: UnitVec = UnitVec { x: 0.0, y: 0.0, z: 1.0 };

    /// Normalizes `(x, y, z)`.
    pub fn new(x: f64, y: f64, z: f64) -> Result<UnitVec, GeomError> {
        Self::from_array([x, y, z])
    }

    pub fn from_array(a: [f64; 3]) -> Result<UnitVec, GeomError> {
        let n = norm(a);
        if !(n > 1e-300) || !n.is_finite() {
            return Err(GeomError::ZeroVector);
        }
        Ok(UnitVec { x: a[0] / n, y: a[1] / n, z: a[2] / n })
    }

    /// Point with polar angle `theta` from +z and azimuth `phi` from +x.
    pub fn from_spherical(theta: f64, phi: f64) -> UnitVec {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        UnitVec { x: st * cp, y: st * sp, z: ct }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(self, o: UnitVec) -> f64 {
        dot(self.to_array(), o.to_array())
    }

    pub fn cross(self, o: UnitVec) -> [f64; 3] {
        cross(self.to_array(), o.to_array())
    }

    pub fn neg(self) -> UnitVec {
        UnitVec { x: -self.x, y: -self.y, z: -self.z }
    }

    /// Great-circle distance in radians, robust near 0 and π.
    pub fn dist(self, o: UnitVec) -> f64 {
        norm(self.cross(o)).atan2(self.dot(o))
    }

    /// Euclidean distance between the two points in R³.
    pub fn chord(self, o: UnitVec) -> f64 {
        norm(sub(self.to_array(), o.to_array()))
    }

    pub fn is_antipodal(self, o: UnitVec) -> bool {
        norm(add(self.to_array(), o.to_array())) < ANTIPODAL_TOL
    }

    pub fn polar(self) -> f64 {
        self.z.clamp(-1.0, 1.0).acos()
    }

    pub fn azimuth(self) -> f64 {
        self.y.atan2(self.x)
    }
}
