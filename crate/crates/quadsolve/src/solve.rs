use sphercore::{is_simple, rot_y, rot_z, Angle, ArcPolygon, Mat3, Radians, UnitVec};

use crate::roots::find_roots;
use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::labels::QuadClass;
use crate::spec::{QuadSpec, SolveReport};
use crate::SolveError;

/// Closure tolerance for the holonomy of a built tile.
pub const CLOSURE_TOL: f64 = 1e-9;

/// `sin½α·sin(δ−½β) − sin½β·sin(γ−½α)`, which vanishes for every almost
/// equilateral quadrilateral (corners α, β, γ, δ with `a` on αβ, βγ, δα).
pub fn coolsaet_residual(alpha: impl Radians, beta: impl Radians, gamma: impl Radians, delta: impl Radians) -> f64 {
    let (al, be, ga, de) = (alpha.radians(), beta.radians(), gamma.radians(), delta.radians());
    (0.5 * al).sin() * (de - 0.5 * be).sin() - (0.5 * be).sin() * (ga - 0.5 * al).sin()
}

fn quotient(num: f64, den: f64) -> Option<f64> {
    (den.abs() > 1e-12).then(|| num / den)
}

/// The two expressions for `cos a`, one from each pair of opposite corners.
pub fn cos_a_candidates(alpha: f64, beta: f64, gamma: f64, delta: f64) -> (Option<f64>, Option<f64>) {
    let q1 = quotient(
        alpha.sin() * delta.cos() + gamma.sin(),
        (1.0 - alpha.cos()) * delta.sin(),
    );
    let q2 = quotient(
        beta.sin() * gamma.cos() + delta.sin(),
        (1.0 - beta.cos()) * gamma.sin(),
    );
    (q1, q2)
}

fn acos_checked(q: f64) -> Result<f64, SolveError> {
    if q.abs() > 1.0 + 1e-12 {
        return Err(SolveError::NoTile(format!("cos a = {q} lies outside [-1, 1]")));
    }
    Ok(q.clamp(-1.0, 1.0).acos())
}

/// Edge `a < π` of the almost equilateral quadrilateral with the given angles.
///
/// Both expressions for `cos a` are evaluated and must agree to 1e-9.
pub fn solve_edge_a(
    alpha: impl Radians,
    beta: impl Radians,
    gamma: impl Radians,
    delta: impl Radians,
) -> Result<f64, SolveError> {
    let (al, be, ga, de) = (alpha.radians(), beta.radians(), gamma.radians(), delta.radians());
    let (q1, q2) = cos_a_candidates(al, be, ga, de);
    let a = match (q1, q2) {
        (Some(q), _) => acos_checked(q)?,
        (None, Some(q)) => acos_checked(q)?,
        (None, None) => return Err(SolveError::Degenerate("both expressions for cos a have zero denominator".into())),
    };
    if let (Some(_), Some(q)) = (q1, q2) {
        let a2 = acos_checked(q)?;
        if (a - a2).abs() > 1e-9 {
            return Err(SolveError::Inconsistent(format!(
                "the two expressions give a = {a} and a = {a2}"
            )));
        }
    }
    if a <= 0.0 || a >= PI {
        return Err(SolveError::NoTile(format!("a = {a} is not in (0, π)")));
    }
    Ok(a)
}

/// The matrix `Z(π−δ)Y(a)Z(π−α)Y(a)Z(π−β)Y(a)Z(π−γ)`, which equals `Y(b)ᵀ`
/// for a closing almost equilateral quadrilateral.
pub fn k_matrix(alpha: f64, beta: f64, gamma: f64, delta: f64, a: f64) -> Mat3 {
    rot_z(PI - delta) * rot_y(a) * rot_z(PI - alpha) * rot_y(a) * rot_z(PI - beta) * rot_y(a) * rot_z(PI - gamma)
}

/// Edge `b ∈ (0, 2π]` recovered from the K-matrix.
pub fn solve_edge_b(
    alpha: impl Radians,
    beta: impl Radians,
    gamma: impl Radians,
    delta: impl Radians,
    a: impl Radians,
) -> Result<f64, SolveError> {
    let k = k_matrix(alpha.radians(), beta.radians(), gamma.radians(), delta.radians(), a.radians());
    let m = &k.m;
    let off = [m[0][1], m[1][0], m[1][2], m[2][1], m[1][1] - 1.0]
        .iter()
        .fold(0.0f64, |s, x| s.max(x.abs()));
    if off > 1e-8 {
        return Err(SolveError::Inconsistent(format!("K is not a rotation about y (off by {off:e})")));
    }
    let (s, c) = (0.5 * (m[2][0] - m[0][2]), 0.5 * (m[0][0] + m[2][2]));
    if s.abs() < 1e-9 {
        return Err(SolveError::Degenerate(format!("sin b = {s:e}; the side b is degenerate")));
    }
    let mut b = s.atan2(c);
    if b <= 0.0 {
        b += 2.0 * PI;
    }
    Ok(b)
}

/// Walks the boundary of a counterclockwise polygon: start at the north pole
/// heading along +x, travel each edge and turn left by `π − θ` at each
/// corner. Returns the vertices and the final frame, which is the identity
/// exactly when the data closes.
pub fn turtle(corners: &[(f64, f64)]) -> (Vec<UnitVec>, Mat3) {
    let n = corners.len();
    let mut frame = Mat3::IDENTITY;
    let mut verts = Vec::with_capacity(n);
    for i in 0..n {
        verts.push(UnitVec::from_array(frame.col(2)).expect("frame columns are unit"));
        frame = frame * rot_y(corners[i].1) * rot_z(PI - corners[(i + 1) % n].0);
    }
    (verts, frame)
}

/// Places the template with its first corner at the north pole and its
/// first edge heading along +x.
pub fn build_tile(spec: &QuadSpec) -> Result<ArcPolygon, SolveError> {
    let corners = spec.corner_values();
    let (verts, frame) = turtle(&corners);
    let miss = frame.dist_to_identity();
    if miss > CLOSURE_TOL {
        return Err(SolveError::NoClosure(miss));
    }
    let angles = spec.class.corners().iter().map(|&(t, _)| spec.angle(t)).collect();
    ArcPolygon::new(verts, angles).map_err(|e| SolveError::Invalid(e.to_string()))
}

/// Builds the template and reports its closure error and simplicity.
pub fn check_tile(spec: &QuadSpec) -> Result<SolveReport, SolveError> {
    let poly = build_tile(spec)?;
    let mut residuals = BTreeMap::new();
    residuals.insert("holonomy".to_string(), poly.holonomy().dist_to_identity());
    if let Some(f) = spec.f {
        let want = QuadSpec::target_sum(spec.class, f).radians();
        residuals.insert("angle_sum".to_string(), (spec.angle_sum().radians() - want).abs());
    }
    Ok(SolveReport { spec: spec.clone(), residuals, simple: is_simple(&poly) })
}

/// Full solution of an almost equilateral quadrilateral from its angles.
pub fn solve_almost_equilateral(
    alpha: Angle,
    beta: Angle,
    gamma: Angle,
    delta: Angle,
    f: Option<u32>,
) -> Result<SolveReport, SolveError> {
    let r = coolsaet_residual(alpha, beta, gamma, delta);
    if r.abs() > 1e-9 {
        return Err(SolveError::NoTile(format!("angles violate the almost equilateral identity by {r:e}")));
    }
    let (al, be, ga, de) = (alpha.radians(), beta.radians(), gamma.radians(), delta.radians());
    let a = solve_edge_a(al, be, ga, de)?;
    let b = solve_edge_b(al, be, ga, de, a)?;
    let spec = QuadSpec {
        class: QuadClass::AlmostEquilateral,
        alpha,
        beta,
        gamma,
        delta: Some(delta),
        a: Angle::Numeric(a),
        b: Some(Angle::Numeric(b)),
        c: None,
        f,
    };
    let mut report = check_tile(&spec)?;
    report.residuals.insert("coolsaet".to_string(), r.abs());
    let (q1, q2) = cos_a_candidates(al, be, ga, de);
    if let (Some(x), Some(y)) = (q1, q2) {
        report.residuals.insert("cos_a_agreement".to_string(), (x - y).abs());
    }
    Ok(report)
}

/// Existence of a simple spherical triangle with angles below π.
pub fn triangle_exists(alpha: impl Radians, beta: impl Radians, gamma: impl Radians) -> bool {
    let (a, b, c) = (alpha.radians(), beta.radians(), gamma.radians());
    [a, b, c].iter().all(|&x| x > 0.0 && x < PI)
        && a + b + c > PI
        && a + PI > b + c
        && b + PI > a + c
        && c + PI > a + b
}

/// Sides of the triangle with corners α, β, γ in counterclockwise order:
/// `a` joins α and β, `b` joins γ and α, `c` joins β and γ.
pub fn solve_triangle(
    alpha: impl Radians,
    beta: impl Radians,
    gamma: impl Radians,
) -> Result<(f64, f64, f64), SolveError> {
    let (al, be, ga) = (alpha.radians(), beta.radians(), gamma.radians());
    if !triangle_exists(al, be, ga) {
        return Err(SolveError::NoTile(format!(
            "no spherical triangle with angles {:.6}π, {:.6}π, {:.6}π",
            al / PI,
            be / PI,
            ga / PI
        )));
    }
    // dual law of cosines: side opposite A from the three angles
    let side = |x: f64, y: f64, z: f64| ((x.cos() + y.cos() * z.cos()) / (y.sin() * z.sin())).clamp(-1.0, 1.0).acos();
    Ok((side(ga, al, be), side(be, ga, al), side(al, be, ga)))
}

/// Triangle template for the triangle classes.
pub fn solve_triangle_spec(class: QuadClass, angles: &[Angle], f: Option<u32>) -> Result<QuadSpec, SolveError> {
    let (alpha, beta, gamma) = match (class, angles) {
        (QuadClass::Triangle, [x, y, z]) => (*x, *y, *z),
        (QuadClass::IsoscelesTriangle, [x, y]) => (*x, *y, *y),
        (QuadClass::EquilateralTriangle, [x]) => (*x, *x, *x),
        _ => {
            return Err(SolveError::Invalid(format!(
                "class {class} does not take {} angles",
                angles.len()
            )))
        }
    };
    let (a, b, c) = solve_triangle(alpha, beta, gamma)?;
    let (b, c) = match class {
        QuadClass::Triangle => (Some(Angle::Numeric(b)), Some(Angle::Numeric(c))),
        QuadClass::IsoscelesTriangle => (Some(Angle::Numeric(c)), None),
        _ => (None, None),
    };
    Ok(QuadSpec { class, alpha, beta, gamma, delta: None, a: Angle::Numeric(a), b, c, f })
}

/// Kite `α β γ β` from three angles, or rhombus `α β α β` from two.
///
/// The kite splits along the αγ diagonal into two triangles with angles
/// `½α, β, ½γ`; the rhombus into four right triangles with angles `½α, ½β`.
pub fn solve_kite_rhombus(class: QuadClass, angles: &[Angle]) -> Result<QuadSpec, SolveError> {
    match (class, angles) {
        (QuadClass::Kite, [alpha, beta, gamma]) => {
            let (a, _, b) = solve_triangle(alpha.radians() / 2.0, beta.radians(), gamma.radians() / 2.0)?;
            Ok(QuadSpec {
                class,
                alpha: *alpha,
                beta: *beta,
                gamma: *gamma,
                delta: Some(*beta),
                a: Angle::Numeric(a),
                b: Some(Angle::Numeric(b)),
                c: None,
                f: None,
            })
        }
        (QuadClass::Rhombus, [alpha, beta]) => {
            let (ha, hb) = (alpha.radians() / 2.0, beta.radians() / 2.0);
            if !triangle_exists(PI / 2.0, ha, hb) {
                return Err(SolveError::NoTile("rhombus quarter triangle does not exist".into()));
            }
            // right triangle: cos(hypotenuse) = cot A · cot B
            let a = (1.0 / (ha.tan() * hb.tan())).clamp(-1.0, 1.0).acos();
            Ok(QuadSpec {
                class,
                alpha: *alpha,
                beta: *beta,
                gamma: *alpha,
                delta: Some(*beta),
                a: Angle::Numeric(a),
                b: None,
                c: None,
                f: None,
            })
        }
        _ => Err(SolveError::Invalid(format!(
            "solve_kite_rhombus needs a kite with 3 angles or a rhombus with 2, got {class} with {}",
            angles.len()
        ))),
    }
}

/// Reads a template off a polygon whose vertices are listed in template
/// corner order. Angle values are numeric.
pub fn measure_spec(class: QuadClass, poly: &ArcPolygon, f: Option<u32>) -> Result<QuadSpec, SolveError> {
    let corners = class.corners();
    if poly.len() != corners.len() {
        return Err(SolveError::Invalid(format!(
            "class {class} has {} corners, polygon has {}",
            corners.len(),
            poly.len()
        )));
    }
    let edges = poly.edges();
    let mut ang = [None; 4];
    let mut edg = [None; 3];
    for (i, &(t, e)) in corners.iter().enumerate() {
        ang[t.index()].get_or_insert(Angle::Numeric(poly.angles[i].radians()));
        edg[e.index()].get_or_insert(Angle::Numeric(edges[i]));
    }
    let alpha = ang[0].expect("every class has α");
    let beta = ang[1].unwrap_or(alpha);
    let gamma = ang[2].unwrap_or(alpha);
    let delta = if class.is_triangle() { None } else { Some(ang[3].unwrap_or(beta)) };
    Ok(QuadSpec { class, alpha, beta, gamma, delta, a: edg[0].expect("every class has a"), b: edg[1], c: edg[2], f })
}

/// Every simple general quadrilateral `α(a) β(b) γ(c) δ(a)` with the given
/// angles, ordered by `a`.
///
/// For fixed `a` the closure condition forces
/// `Y(b)·Z(π−γ)·Y(c) = Z(π−β)ᵀ·Y(a)ᵀ·(Z(π−δ)·Y(a)·Z(π−α))ᵀ`, and the middle
/// entry of the right side must equal `cos(π−γ)`. Roots in `a` are found by
/// scanning, then `b` and `c` are read off the Y–Z–Y factorisation.
pub fn solve_general_quad(
    alpha: Angle,
    beta: Angle,
    gamma: Angle,
    delta: Angle,
    f: Option<u32>,
) -> Result<Vec<QuadSpec>, SolveError> {
    let (al, be, ga, de) = (alpha.radians(), beta.radians(), gamma.radians(), delta.radians());
    let g = PI - ga;
    if g.sin().abs() < 1e-9 {
        return Err(SolveError::Degenerate("γ = π leaves b and c undetermined".into()));
    }
    let m = |a: f64| (rot_z(PI - de) * rot_y(a) * rot_z(PI - al) * rot_y(a) * rot_z(PI - be)).transpose();
    let mut out = Vec::new();
    for a in find_roots(|a| m(a).m[1][1] - g.cos(), 1e-6, PI - 1e-6, 1e-14) {
        let mm = m(a).m;
        let s = g.sin();
        let b = (mm[2][1] / s).atan2(-mm[0][1] / s);
        let c = (mm[1][2] / s).atan2(mm[1][0] / s);
        if !(b > 1e-9 && b < PI - 1e-9 && c > 1e-9 && c < PI - 1e-9) {
            continue;
        }
        let spec = QuadSpec {
            class: QuadClass::General,
            alpha,
            beta,
            gamma,
            delta: Some(delta),
            a: Angle::Numeric(a),
            b: Some(Angle::Numeric(b)),
            c: Some(Angle::Numeric(c)),
            f,
        };
        if let Ok(report) = check_tile(&spec) {
            if report.simple && report.residuals["holonomy"] < CLOSURE_TOL {
                out.push(spec);
            }
        }
    }
    if out.is_empty() {
        return Err(SolveError::NoTile(format!(
            "no simple general quadrilateral with angles {alpha}, {beta}, {gamma}, {delta}"
        )));
    }
    Ok(out)
}
