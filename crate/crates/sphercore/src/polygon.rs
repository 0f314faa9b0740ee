use std::f64::consts::{PI, TAU};

use crate::angle::{Angle, Radians};
use crate::mat3::{rot_y, rot_z, Mat3};
use crate::vec3::{self, UnitVec};
use crate::GeomError;

/// Perpendicularity tolerance of the arc crossing test.
pub const ARC_TOL: f64 = 1e-10;

fn check_arc(a: UnitVec, b: UnitVec) -> Result<(), GeomError> {
    if a.chord(b) < 1e-9 {
        return Err(GeomError::Coincident);
    }
    if a.is_antipodal(b) {
        return Err(GeomError::Antipodal);
    }
    Ok(())
}

/// Length of the minor arc from `a` to `b`, in `(0, π)`.
pub fn arc_measure(a: UnitVec, b: UnitVec) -> Result<Angle, GeomError> {
    check_arc(a, b)?;
    Ok(Angle::Numeric(a.dist(b)))
}

/// Counterclockwise angle at `b`, seen from outside the sphere, turning from
/// the arc `b→a` to the arc `b→c`. The result lies in `[0, 2π)`.
///
/// For a polygon listed counterclockwise the interior angle at `v[i]` is
/// `corner_angle(v[i+1], v[i], v[i-1])`.
pub fn corner_angle(a: UnitVec, b: UnitVec, c: UnitVec) -> Result<Angle, GeomError> {
    check_arc(a, b)?;
    check_arc(c, b)?;
    Ok(Angle::Numeric(corner_angle_raw(a, b, c)))
}

pub(crate) fn corner_angle_raw(a: UnitVec, b: UnitVec, c: UnitVec) -> f64 {
    let bb = b.to_array();
    let ta = vec3::sub(a.to_array(), vec3::scale(bb, a.dot(b)));
    let tc = vec3::sub(c.to_array(), vec3::scale(bb, c.dot(b)));
    let s = vec3::dot(vec3::cross(ta, tc), bb);
    let x = s.atan2(vec3::dot(ta, tc));
    if x < 0.0 {
        x + TAU
    } else {
        x
    }
}

/// `Y(a_n)Z(π−α_n)⋯Y(a_1)Z(π−α_1)`.
///
/// Read with `a_i` the edge leaving the corner `α_i` when the polygon is
/// traversed clockwise (as seen from outside), the product is the identity
/// exactly when the data closes up.
pub fn polygon_holonomy<T: Radians>(edges: &[T], angles: &[T]) -> Result<Mat3, GeomError> {
    if edges.len() != angles.len() {
        return Err(GeomError::LengthMismatch { edges: edges.len(), angles: angles.len() });
    }
    if edges.len() < 2 {
        return Err(GeomError::TooFewVertices(edges.len()));
    }
    let mut m = Mat3::IDENTITY;
    for (a, t) in edges.iter().zip(angles) {
        m = rot_y(a.radians()) * rot_z(PI - t.radians()) * m;
    }
    Ok(m)
}

/// A spherical polygon. Vertices are listed counterclockwise as seen from
/// outside, so the interior lies to the left of each arc.
#[derive(Clone, Debug, PartialEq)]
pub struct ArcPolygon {
    pub vertices: Vec<UnitVec>,
    /// Interior angle at each vertex.
    pub angles: Vec<Angle>,
}

impl ArcPolygon {
    /// Measures the interior angles from the coordinates.
    pub fn from_vertices(vertices: Vec<UnitVec>) -> Result<ArcPolygon, GeomError> {
        let n = vertices.len();
        if n < 2 {
            return Err(GeomError::TooFewVertices(n));
        }
        let mut angles = Vec::with_capacity(n);
        for i in 0..n {
            let next = vertices[(i + 1) % n];
            let prev = vertices[(i + n - 1) % n];
            check_arc(vertices[i], next)?;
            angles.push(Angle::Numeric(corner_angle_raw(next, vertices[i], prev)));
        }
        Ok(ArcPolygon { vertices, angles })
    }

    pub fn new(vertices: Vec<UnitVec>, angles: Vec<Angle>) -> Result<ArcPolygon, GeomError> {
        let n = vertices.len();
        if n < 2 {
            return Err(GeomError::TooFewVertices(n));
        }
        if angles.len() != n {
            return Err(GeomError::LengthMismatch { edges: n, angles: angles.len() });
        }
        for i in 0..n {
            check_arc(vertices[i], vertices[(i + 1) % n])?;
        }
        Ok(ArcPolygon { vertices, angles })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edge `i` joins vertex `i` to vertex `i+1`.
    pub fn edges(&self) -> Vec<f64> {
        let n = self.len();
        (0..n).map(|i| self.vertices[i].dist(self.vertices[(i + 1) % n])).collect()
    }

    pub fn angle_radians(&self) -> Vec<f64> {
        self.angles.iter().map(Angle::radians).collect()
    }

    /// Spherical excess `Σθ − (n−2)π`.
    pub fn area(&self) -> f64 {
        self.angle_radians().iter().sum::<f64>() - (self.len() as f64 - 2.0) * PI
    }

    /// The holonomy product of this polygon, fed in clockwise order.
    pub fn holonomy(&self) -> Mat3 {
        let n = self.len();
        let e = self.edges();
        let t = self.angle_radians();
        let edges: Vec<f64> = (1..=n).map(|k| e[n - k]).collect();
        let angles: Vec<f64> = (1..=n).map(|k| t[(n - k + 1) % n]).collect();
        polygon_holonomy(&edges, &angles).expect("n >= 2")
    }
}

/// Whether the closed great arcs `p0p1` and `q0q1` share a point.
/// Touching counts as crossing.
pub fn arcs_intersect(p0: UnitVec, p1: UnitVec, q0: UnitVec, q1: UnitVec) -> bool {
    let n1 = p0.cross(p1);
    let n2 = q0.cross(q1);
    let n1n = vec3::scale(n1, 1.0 / vec3::norm(n1));
    let n2n = vec3::scale(n2, 1.0 / vec3::norm(n2));
    let line = vec3::cross(n1n, n2n);
    if vec3::norm(line) < ARC_TOL {
        // same great circle: overlap iff an endpoint lies on the other arc
        return on_arc(q0, p0, p1) || on_arc(q1, p0, p1) || on_arc(p0, q0, q1) || on_arc(p1, q0, q1);
    }
    // the arcs lie on opposite sides of each other's planes
    let s = |n: [f64; 3], v: UnitVec| vec3::dot(n, v.to_array());
    let (a, b) = (s(n1n, q0), s(n1n, q1));
    let (c, d) = (s(n2n, p0), s(n2n, p1));
    let same_side = |u: f64, w: f64| (u > ARC_TOL && w > ARC_TOL) || (u < -ARC_TOL && w < -ARC_TOL);
    if same_side(a, b) || same_side(c, d) {
        return false;
    }
    let x = match UnitVec::from_array(line) {
        Ok(x) => x,
        Err(_) => return false,
    };
    [x, x.neg()].iter().any(|&y| on_arc(y, p0, p1) && on_arc(y, q0, q1))
}

/// Whether `x` lies on the minor arc `ab` (within `ARC_TOL`).
fn on_arc(x: UnitVec, a: UnitVec, b: UnitVec) -> bool {
    let l = a.dist(b);
    (a.dist(x) + x.dist(b) - l).abs() < 1e-9
}

/// Simplicity test for a spherical polygon.
///
/// A quadrilateral with all edges shorter than π and three angles below π
/// is simple, and is accepted without further work. Otherwise every pair of
/// non-adjacent arcs is tested for crossing and adjacent arcs must not fold
/// back onto each other. A straight corner (angle π) is allowed.
pub fn is_simple(poly: &ArcPolygon) -> bool {
    let n = poly.len();
    let edges = poly.edges();
    if n == 4 && edges.iter().all(|&e| e < PI) && consistent_turning(poly) {
        let small = poly.angles.iter().filter(|a| a.radians() < PI).count();
        if small >= 3 {
            return true;
        }
    }
    let v = &poly.vertices;
    for i in 0..n {
        let (a, b, c) = (v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
        let t = corner_angle_raw(c, b, a);
        if !(1e-9..=TAU - 1e-9).contains(&t) {
            return false;
        }
        if n == 3 {
            continue;
        }
        for j in (i + 2)..n {
            if (j + 1) % n == i {
                continue;
            }
            if arcs_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]) {
                return false;
            }
        }
    }
    true
}

/// The stated angles agree with the coordinates, so the corner data really
/// describes the polygon the fast path reasons about.
fn consistent_turning(poly: &ArcPolygon) -> bool {
    let n = poly.len();
    let v = &poly.vertices;
    (0..n).all(|i| {
        let t = corner_angle_raw(v[(i + 1) % n], v[i], v[(i + n - 1) % n]);
        (t - poly.angles[i].radians()).abs() < 1e-7
    }) && {
        // Gauss-Bonnet: a simple polygon has area in (0, 4π) equal to its excess
        let area = poly.area();
        area > 0.0 && area < 2.0 * TAU
    }
}
