use quadsolve::{build_tile, AngleLabel, EdgeLabel, QuadSpec};
use sphercore::{tangent_basis, vec3, Mat3, UnitVec};
use std::f64::consts::{PI, TAU};

use crate::CatalogError;

/// The template laid out counterclockwise in one of its two orientations.
#[derive(Clone, Debug)]
pub(crate) struct Oriented {
    pub pts: Vec<UnitVec>,
    /// Template corner sitting at each counterclockwise position.
    pub corner: Vec<usize>,
    /// Edge label from position `j` to `j + 1`.
    pub edge: Vec<EdgeLabel>,
    pub angle: Vec<AngleLabel>,
    /// Angle value at each position, radians.
    pub value: Vec<f64>,
}

/// Both orientations of the template: index 0 as built, index 1 mirrored.
pub(crate) fn oriented_templates(spec: &QuadSpec) -> Result<[Oriented; 2], CatalogError> {
    let poly = build_tile(spec)?;
    let corners = spec.class.corners();
    let n = corners.len();
    let value = |i: usize| spec.angle(corners[i].0).radians();
    let plus = Oriented {
        pts: poly.vertices.clone(),
        corner: (0..n).collect(),
        edge: (0..n).map(|j| corners[j].1).collect(),
        angle: (0..n).map(|j| corners[j].0).collect(),
        value: (0..n).map(value).collect(),
    };
    let mirror = |p: UnitVec| UnitVec { x: p.x, y: -p.y, z: p.z };
    let idx = |j: usize| (n - j) % n;
    let minus = Oriented {
        pts: (0..n).map(|j| mirror(poly.vertices[idx(j)])).collect(),
        corner: (0..n).map(idx).collect(),
        edge: (0..n).map(|j| corners[(2 * n - j - 1) % n].1).collect(),
        angle: (0..n).map(|j| corners[idx(j)].0).collect(),
        value: (0..n).map(|j| value(idx(j))).collect(),
    };
    Ok([plus, minus])
}

/// Direction of `q` as seen from `p`, as an azimuth in `p`'s tangent basis.
pub(crate) fn azimuth_at(p: UnitVec, q: UnitVec) -> f64 {
    let (e1, e2) = tangent_basis(p);
    let qa = q.to_array();
    vec3::dot(qa, e2).atan2(vec3::dot(qa, e1)).rem_euclid(TAU)
}

/// Whether two angular sectors `[s, s + w]` overlap by more than `tol`.
pub(crate) fn sectors_overlap(s1: f64, w1: f64, s2: f64, w2: f64, tol: f64) -> bool {
    let d = (s2 - s1).rem_euclid(TAU);
    d < w1 - tol || TAU - d < w2 - tol
}

/// Signed angle at `p` from the arc towards `a` to the arc towards `b`.
fn signed_angle(p: UnitVec, a: UnitVec, b: UnitVec) -> f64 {
    let s = vec3::dot(p.to_array(), a.cross(b));
    let c = a.dot(b) - p.dot(a) * p.dot(b);
    s.atan2(c)
}

/// Strict interior test for a counterclockwise polygon. Points within
/// `tol` of the boundary count as outside.
pub(crate) fn inside_polygon(p: UnitVec, poly: &[UnitVec], tol: f64) -> bool {
    let n = poly.len();
    if poly.iter().any(|&q| q.chord(p) < tol || q.chord(p.neg()) < tol) {
        return false;
    }
    let mut w = 0.0;
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        // near the arc itself the winding is ill-defined
        if (p.dist(a) + p.dist(b) - a.dist(b)).abs() < tol {
            return false;
        }
        w += signed_angle(p, a, b);
    }
    w > PI
}

/// Maps the oriented template so that its edge `j → j+1` lands on `u → v`.
pub(crate) fn place(o: &Oriented, j: usize, u: UnitVec, v: UnitVec) -> Option<Vec<UnitVec>> {
    let n = o.pts.len();
    let r = Mat3::align(o.pts[j], o.pts[(j + 1) % n], u, v)?;
    Some(o.pts.iter().map(|&p| r.apply_unit(p)).collect())
}
