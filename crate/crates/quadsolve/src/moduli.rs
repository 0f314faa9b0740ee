use sphercore::{is_simple, Angle, ArcPolygon, UnitVec};
use std::f64::consts::PI;

use crate::labels::QuadClass;
use crate::solve::measure_spec;
use crate::spec::QuadSpec;
use crate::SolveError;

/// The general quadrilateral of the earth map family with `f` tiles whose
/// third corner sits at `c`.
///
/// The α corner `A` is the north pole, `B` and `D` lie at distance `a` from
/// it at azimuths 0 and `4π/f`, and `a` is the distance from `c` to the
/// south pole. The resulting tile has area `4π/f`, so `f` copies rotated
/// about the axis form an earth map. `c` must leave a simple quadrilateral
/// with that area; otherwise an error is returned.
pub fn moduli_general_quad(f: u32, c: UnitVec) -> Result<QuadSpec, SolveError> {
    if f < 6 || !f.is_multiple_of(2) {
        return Err(SolveError::Invalid(format!("f = {f} must be even and at least 6")));
    }
    let alpha = Angle::pi_frac(4, f as i64);
    let poly = moduli_polygon(alpha.radians(), c)?;
    let mut spec = measure_spec(QuadClass::General, &poly, Some(f))?;
    spec.alpha = alpha;
    let area = poly.area();
    if (area - alpha.radians()).abs() > 1e-9 {
        return Err(SolveError::OutsideModuli(format!("tile area {area} differs from 4π/f")));
    }
    Ok(spec)
}

/// Corners `A, B, C, D` of the moduli construction, before any checks on area.
pub fn moduli_polygon(alpha: f64, c: UnitVec) -> Result<ArcPolygon, SolveError> {
    let a = PI - c.polar();
    if !(a > 1e-9 && a < PI - 1e-9) {
        return Err(SolveError::OutsideModuli("C must stay away from both poles".into()));
    }
    let verts = vec![UnitVec::Z, UnitVec::from_spherical(a, 0.0), c, UnitVec::from_spherical(a, alpha)];
    let poly = ArcPolygon::from_vertices(verts).map_err(|e| SolveError::OutsideModuli(e.to_string()))?;
    if !is_simple(&poly) {
        return Err(SolveError::OutsideModuli("the quadrilateral is not simple".into()));
    }
    if poly.angles.iter().any(|t| t.radians() < 1e-9) {
        return Err(SolveError::OutsideModuli("a corner degenerates".into()));
    }
    Ok(poly)
}

/// Point at azimuth `phi` whose distance to the south pole is `a`.
pub fn moduli_point(a: f64, phi: f64) -> UnitVec {
    UnitVec::from_spherical(PI - a, phi)
}
