use serde::{Deserialize, Serialize};
use std::ops::Mul;

use crate::angle::Radians;
use crate::vec3::{self, UnitVec};

/// Row-major 3×3 matrix.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mat3 {
    pub m: [[f64; 3]; 3],
}

/// Rotation axes used by the holonomy product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Y,
    Z,
}

/// Proper rotation by `theta` about the named axis.
///
/// `Z(θ)` turns +x towards +y and `Y(θ)` turns +z towards +x, so that a
/// frame moved by `Y(L)` travels a distance `L` along its heading and a
/// frame turned by `Z(θ)` turns left when seen from outside the sphere.
pub fn axis_rotation(axis: Axis, theta: impl Radians) -> Mat3 {
    let (s, c) = theta.radians().sin_cos();
    let m = match axis {
        Axis::Y => [[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]],
        Axis::Z => [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]],
    };
    Mat3 { m }
}

pub fn rot_y(theta: f64) -> Mat3 {
    axis_rotation(Axis::Y, theta)
}

pub fn rot_z(theta: f64) -> Mat3 {
    axis_rotation(Axis::Z, theta)
}

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3 { m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] };

    pub fn from_cols(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> Mat3 {
        Mat3 { m: [[a[0], b[0], c[0]], [a[1], b[1], c[1]], [a[2], b[2], c[2]]] }
    }

    /// Rodrigues rotation by `theta` about a unit axis.
    pub fn about(axis: UnitVec, theta: f64) -> Mat3 {
        let (s, c) = theta.sin_cos();
        let [x, y, z] = axis.to_array();
        let t = 1.0 - c;
        Mat3 {
            m: [
                [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
                [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
                [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
            ],
        }
    }

    /// Reflection across the plane through the origin with unit normal `n`.
    pub fn reflection(n: UnitVec) -> Mat3 {
        let v = n.to_array();
        let mut m = Mat3::IDENTITY.m;
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e -= 2.0 * v[i] * v[j];
            }
        }
        Mat3 { m }
    }

    /// Orthonormal frame with first column `p` and second column pointing
    /// from `p` towards `q` along the great circle.
    ///
    /// Returns `None` when `q` is (numerically) `±p`.
    pub fn frame(p: UnitVec, q: UnitVec) -> Option<Mat3> {
        let pa = p.to_array();
        let t = vec3::sub(q.to_array(), vec3::scale(pa, p.dot(q)));
        let n = vec3::norm(t);
        if n < 1e-12 {
            return None;
        }
        let t = vec3::scale(t, 1.0 / n);
        Some(Mat3::from_cols(pa, t, vec3::cross(pa, t)))
    }

    /// The rotation sending `p0 ↦ q0` and the direction of `p1` to that of `q1`.
    pub fn align(p0: UnitVec, p1: UnitVec, q0: UnitVec, q1: UnitVec) -> Option<Mat3> {
        Some(Mat3::frame(q0, q1)? * Mat3::frame(p0, p1)?.transpose())
    }

    pub fn transpose(&self) -> Mat3 {
        let m = &self.m;
        Mat3 {
            m: [
                [m[0][0], m[1][0], m[2][0]],
                [m[0][1], m[1][1], m[2][1]],
                [m[0][2], m[1][2], m[2][2]],
            ],
        }
    }

    pub fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        let m = &self.m;
        [
            vec3::dot(m[0], v),
            vec3::dot(m[1], v),
            vec3::dot(m[2], v),
        ]
    }

    /// Applies the matrix to a point; the result is renormalized.
    pub fn apply_unit(&self, v: UnitVec) -> UnitVec {
        let w = self.apply(v.to_array());
        UnitVec::from_array(w).unwrap_or(v)
    }

    pub fn col(&self, j: usize) -> [f64; 3] {
        [self.m[0][j], self.m[1][j], self.m[2][j]]
    }

    /// Max-norm distance between two matrices.
    pub fn max_dist(&self, o: &Mat3) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                d = d.max((self.m[i][j] - o.m[i][j]).abs());
            }
        }
        d
    }

    pub fn dist_to_identity(&self) -> f64 {
        self.max_dist(&Mat3::IDENTITY)
    }

    /// `MᵀM = I` and `det M = 1` within `tol`.
    pub fn is_rotation(&self, tol: f64) -> bool {
        (self.transpose() * *self).dist_to_identity() <= tol && (self.det() - 1.0).abs() <= tol
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, o: Mat3) -> Mat3 {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = (0..3).map(|k| self.m[i][k] * o.m[k][j]).sum();
            }
        }
        Mat3 { m }
    }
}
