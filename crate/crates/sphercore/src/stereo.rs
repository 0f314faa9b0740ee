use crate::vec3::{self, UnitVec};
use crate::GeomError;

/// Orthonormal basis `(e1, e2)` of the plane orthogonal to `pole`, chosen so
/// that `(e1, e2, pole)` is right-handed. For `pole = ±z`, `e1 = +x`.
pub fn tangent_basis(pole: UnitVec) -> ([f64; 3], [f64; 3]) {
    let n = pole.to_array();
    let seed = if pole.x.abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let e1 = vec3::sub(seed, vec3::scale(n, vec3::dot(seed, n)));
    let e1 = vec3::scale(e1, 1.0 / vec3::norm(e1));
    let e2 = vec3::cross(n, e1);
    (e1, e2)
}

/// Projects `p` from `pole` onto the plane through the origin orthogonal to
/// `pole`. The equator maps to the unit circle and `-pole` to the origin.
pub fn stereographic(p: UnitVec, pole: UnitVec) -> Result<[f64; 2], GeomError> {
    let h = p.dot(pole);
    if 1.0 - h < 1e-15 {
        return Err(GeomError::AtPole);
    }
    let (e1, e2) = tangent_basis(pole);
    let pa = p.to_array();
    Ok([vec3::dot(pa, e1) / (1.0 - h), vec3::dot(pa, e2) / (1.0 - h)])
}

/// Inverse of [`stereographic`].
pub fn inverse_stereographic(q: [f64; 2], pole: UnitVec) -> UnitVec {
    let (e1, e2) = tangent_basis(pole);
    let r2 = q[0] * q[0] + q[1] * q[1];
    let v = vec3::add(
        vec3::add(vec3::scale(e1, 2.0 * q[0]), vec3::scale(e2, 2.0 * q[1])),
        vec3::scale(pole.to_array(), r2 - 1.0),
    );
    let v = vec3::scale(v, 1.0 / (r2 + 1.0));
    UnitVec { x: v[0], y: v[1], z: v[2] }
}
