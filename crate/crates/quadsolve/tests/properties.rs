use proptest::prelude::*;
use quadsolve::*;
use sphercore::{Angle, ArcPolygon, UnitVec};
use std::f64::consts::PI;

/// Random convex almost equilateral quadrilateral, built directly from
/// coordinates so the angle data is consistent by construction.
fn a3b_from_turtle(a: f64, al: f64, be: f64) -> Option<ArcPolygon> {
    let corners_abc = [(al, a), (be, a)];
    let (v, _) = turtle(&[corners_abc[0], corners_abc[1], (1.0, 1.0)]);
    // A, B, C from the walk; D sits at distance a from A at angle α
    let d = UnitVec::from_spherical(a, al);
    let poly = ArcPolygon::from_vertices(vec![v[0], v[1], v[2], d]).ok()?;
    (sphercore::is_simple(&poly) && poly.angles.iter().all(|t| t.radians() > 0.05 && t.radians() < PI - 0.05))
        .then_some(poly)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn a3b_round_trip(a in 0.2f64..1.4, al in 0.3f64..2.6, be in 0.3f64..2.6) {
        let poly = a3b_from_turtle(a, al, be);
        prop_assume!(poly.is_some());
        let poly = poly.unwrap();
        let t: Vec<f64> = poly.angles.iter().map(|x| x.radians()).collect();
        prop_assert!(coolsaet_residual(t[0], t[1], t[2], t[3]).abs() < 1e-9);
        let r = solve_almost_equilateral(
            Angle::Numeric(t[0]), Angle::Numeric(t[1]), Angle::Numeric(t[2]), Angle::Numeric(t[3]), None,
        );
        prop_assume!(r.is_ok());
        let r = r.unwrap();
        prop_assert!((r.spec.a.radians() - a).abs() < 1e-8);
        let b = poly.edges()[2];
        prop_assert!((r.spec.b.unwrap().radians() - b).abs() < 1e-8);
        let built = build_tile(&r.spec).unwrap();
        for (x, y) in built.edges().iter().zip(poly.edges()) {
            prop_assert!((x - y).abs() < 1e-8);
        }
        prop_assert!(r.spec.b.unwrap().radians().sin() > 0.0);
    }

    #[test]
    fn two_expressions_for_cos_a_agree(a in 0.2f64..1.4, al in 0.3f64..2.6, be in 0.3f64..2.6) {
        let poly = a3b_from_turtle(a, al, be);
        prop_assume!(poly.is_some());
        let t: Vec<f64> = poly.unwrap().angles.iter().map(|x| x.radians()).collect();
        let (q1, q2) = cos_a_candidates(t[0], t[1], t[2], t[3]);
        prop_assume!(q1.is_some() && q2.is_some());
        prop_assert!((q1.unwrap().acos() - q2.unwrap().acos()).abs() < 1e-9);
    }

    #[test]
    fn moduli_tiles_have_the_right_area(f in prop::sample::select(vec![8u32, 12, 16, 24]), a in 0.05f64..3.09, s in 0.01f64..0.99) {
        let al = 4.0 * PI / f as f64;
        let spec = moduli_general_quad(f, moduli_point(a, s * al)).unwrap();
        prop_assert!((spec.area() - al).abs() < 1e-9);
        prop_assert!((spec.a.radians() - a).abs() < 1e-9);
        prop_assert!(check_tile(&spec).unwrap().residuals["holonomy"] < 1e-9);
    }

    #[test]
    fn roots_are_roots(c in -0.9f64..0.9, k in 1.0f64..5.0) {
        let g = |x: f64| (k * x).sin() - c;
        for r in find_roots(g, 0.0, 3.0, 1e-12) {
            prop_assert!(g(r).abs() < 1e-10);
        }
    }
}
