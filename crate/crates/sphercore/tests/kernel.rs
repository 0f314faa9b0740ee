use approx::assert_abs_diff_eq;
use sphercore::*;
use std::f64::consts::{FRAC_PI_2, PI};

fn uv(x: f64, y: f64, z: f64) -> UnitVec {
    UnitVec::new(x, y, z).unwrap()
}

#[test]
fn y_rotation_of_zero_is_identity() {
    assert_abs_diff_eq!(axis_rotation(Axis::Y, 0.0).dist_to_identity(), 0.0);
}

#[test]
fn z_half_turn() {
    let m = axis_rotation(Axis::Z, Angle::PI);
    let want = Mat3 { m: [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]] };
    assert!(m.max_dist(&want) < 1e-15);
}

#[test]
fn y_quarter_turn_sends_z_to_x() {
    let v = axis_rotation(Axis::Y, FRAC_PI_2).apply([0.0, 0.0, 1.0]);
    assert_abs_diff_eq!(v[0], 1.0, epsilon = 1e-15);
    assert_abs_diff_eq!(v[1], 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(v[2], 0.0, epsilon = 1e-15);
}

#[test]
fn octahedron_face_closes() {
    let q = [FRAC_PI_2; 3];
    let m = polygon_holonomy(&q, &q).unwrap();
    assert!(m.dist_to_identity() < 1e-12);
    // golden value of the quarter-turn factor that closes this face
    let f = rot_y(FRAC_PI_2) * rot_z(FRAC_PI_2);
    let want = Mat3 { m: [[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]] };
    assert!(f.max_dist(&want) < 1e-15);
}

#[test]
fn antipodal_two_gon_closes() {
    let t = 0.3 * PI;
    let m = polygon_holonomy(&[PI, PI], &[t, t]).unwrap();
    assert!(m.dist_to_identity() < 1e-12);
}

#[test]
fn perturbed_triangle_does_not_close() {
    let m = polygon_holonomy(&[FRAC_PI_2; 3], &[FRAC_PI_2, FRAC_PI_2, 0.6 * PI]).unwrap();
    assert!(m.dist_to_identity() > 0.1);
}

#[test]
fn holonomy_rejects_mismatched_lists() {
    assert!(matches!(
        polygon_holonomy(&[1.0, 1.0], &[1.0]),
        Err(GeomError::LengthMismatch { .. })
    ));
}

#[test]
fn arc_and_corner_examples() {
    assert_abs_diff_eq!(arc_measure(UnitVec::X, UnitVec::Y).unwrap().radians(), FRAC_PI_2, epsilon = 1e-15);
    let c = corner_angle(UnitVec::X, UnitVec::Z, UnitVec::Y).unwrap();
    assert_abs_diff_eq!(c.radians(), FRAC_PI_2, epsilon = 1e-15);
    // inscribed cube: neighbouring vertices have dot product 1/3
    let d = arc_measure(uv(1.0, 1.0, 1.0), uv(1.0, 1.0, -1.0)).unwrap();
    assert_abs_diff_eq!(d.radians(), (1.0f64 / 3.0).acos(), epsilon = 1e-14);
}

#[test]
fn arc_measure_rejects_degenerate_pairs() {
    assert_eq!(arc_measure(UnitVec::X, UnitVec::X), Err(GeomError::Coincident));
    assert_eq!(arc_measure(UnitVec::X, UnitVec::X.neg()), Err(GeomError::Antipodal));
}

fn octant() -> ArcPolygon {
    ArcPolygon::from_vertices(vec![UnitVec::X, UnitVec::Y, UnitVec::Z]).unwrap()
}

#[test]
fn octant_is_a_right_triangle() {
    let p = octant();
    for a in &p.angles {
        assert_abs_diff_eq!(a.radians(), FRAC_PI_2, epsilon = 1e-14);
    }
    assert_abs_diff_eq!(p.area(), FRAC_PI_2, epsilon = 1e-14);
    assert!(p.holonomy().dist_to_identity() < 1e-12);
    assert!(is_simple(&p));
}

fn convex_quad() -> Vec<UnitVec> {
    (0..4)
        .map(|k| UnitVec::from_spherical(0.4, 0.3 + k as f64 * FRAC_PI_2 + 0.1 * (k % 2) as f64))
        .collect()
}

#[test]
fn convex_quad_is_simple_and_bowtie_is_not() {
    let v = convex_quad();
    assert!(is_simple(&ArcPolygon::from_vertices(v.clone()).unwrap()));
    let bowtie = vec![v[0], v[2], v[1], v[3]];
    assert!(!is_simple(&ArcPolygon::from_vertices(bowtie).unwrap()));
}

#[test]
fn stereographic_examples() {
    let eq = UnitVec::from_spherical(FRAC_PI_2, 1.1);
    let q = stereographic(eq, UnitVec::Z).unwrap();
    assert_abs_diff_eq!(q[0].hypot(q[1]), 1.0, epsilon = 1e-15);
    let o = stereographic(UnitVec::Z.neg(), UnitVec::Z).unwrap();
    assert_abs_diff_eq!(o[0].hypot(o[1]), 0.0);
    assert_eq!(stereographic(UnitVec::Z, UnitVec::Z), Err(GeomError::AtPole));
}

#[test]
fn exact_angles_stay_exact() {
    let a = Angle::pi_frac(1, 3) + Angle::pi_frac(1, 6);
    assert_eq!(a, Angle::pi_frac(1, 2));
    assert_eq!(a * 4, Angle::pi_frac(2, 1));
    let n = a + Angle::from_radians(0.0);
    assert!(!n.is_exact());
}

#[test]
fn angle_parsing_and_display() {
    assert_eq!("7/18".parse::<Angle>().unwrap(), Angle::pi_frac(7, 18));
    assert_eq!("2/6 pi".parse::<Angle>().unwrap(), Angle::pi_frac(1, 3));
    assert_eq!("1".parse::<Angle>().unwrap(), Angle::PI);
    assert_abs_diff_eq!("0.9".parse::<Angle>().unwrap().radians(), 0.9 * PI, epsilon = 1e-15);
    assert_abs_diff_eq!("1.5 rad".parse::<Angle>().unwrap().radians(), 1.5);
    assert!("abc".parse::<Angle>().is_err());
    assert!("1/0".parse::<Angle>().is_err());
    assert_eq!(Angle::pi_frac(4, 9).to_string(), "4/9 pi");
}
