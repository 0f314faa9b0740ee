use catalog::earth::EarthKind;
use catalog::families::*;
use catalog::{symmetry_counts, Corner, Tile, TilingComplex};
use quadsolve::{AngleLabel, EdgeLabel, QuadClass};
use sphercore::UnitVec;
use verifier::*;

fn built(id: &FamilyId) -> catalog::GeometricRealization {
    build(id).unwrap_or_else(|e| panic!("{id}: {e}"))
}

#[test]
fn every_family_verifies_at_1e9() {
    for e in census() {
        let r = built(&FamilyId::new(e.family));
        let rep = verify(&r, 1e-9);
        assert!(rep.pass, "{}\n{rep}", e.name);
    }
}

#[test]
fn automorphism_counts_agree_with_the_catalog_search() {
    for e in census() {
        let id = FamilyId::new(e.family);
        let r = built(&id);
        let ours = automorphism_counts(&r.complex);
        assert_eq!(ours, symmetry_counts(&r.complex), "{}", e.name);
        if let Some(order) = table_row(&id).unwrap().symmetry_order {
            assert_eq!(ours.0, order, "{}", e.name);
        }
    }
}

#[test]
fn stated_automorphism_orders() {
    let order = |id: FamilyId| automorphism_order(&built(&id).complex);
    assert_eq!(order(FamilyId::new(Family::Platonic(6))), 48);
    assert_eq!(order(FamilyId::new(Family::Platonic(20))), 120);
    assert_eq!(order(FamilyId::new(Family::Earth(EarthKind::Quad(4))).with_p(4)), 16);
    assert_eq!(order(FamilyId::new(Family::Sporadic(Sporadic::S36_6))), 2);
    assert_eq!(order(FamilyId::new(Family::Sporadic(Sporadic::S16_3Prime))), 8);
}

#[test]
fn mismatched_edge_label_is_reported() {
    let mut r = built(&FamilyId::new(Family::Sporadic(Sporadic::S16_4)));
    assert!(verify_combinatorial(&r.complex).pass);
    let c = &mut r.complex.tiles[0].corners[0];
    c.edge = if c.edge == EdgeLabel::A { EdgeLabel::B } else { EdgeLabel::A };
    let rep = verify_combinatorial(&r.complex);
    assert!(!rep.pass);
    assert!(!rep.check("edge-label").unwrap().pass);
    assert!(rep.check("edge-pairing").unwrap().pass);
}

#[test]
fn degree_two_vertices_are_reported() {
    // two triangles glued along their whole boundary
    let corner = |vertex| Corner { vertex, angle: AngleLabel::Alpha, edge: EdgeLabel::A };
    let tiles = vec![
        Tile { corners: vec![corner(0), corner(1), corner(2)], reversed: false },
        Tile { corners: vec![corner(0), corner(2), corner(1)], reversed: false },
    ];
    let t = TilingComplex::new(QuadClass::EquilateralTriangle, 3, tiles);
    let rep = verify_combinatorial(&t);
    assert!(!rep.pass);
    assert!(!rep.check("degree").unwrap().pass);
    assert!(!rep.check("euler").unwrap().pass);
}

#[test]
fn perturbed_vertex_breaks_the_angle_sums() {
    let mut r = built(&FamilyId::new(Family::Platonic(6)));
    let p = r.coords[0].to_array();
    r.coords[0] = UnitVec::new(p[0] + 1e-3, p[1], p[2] - 1e-3).unwrap();
    let rep = verify_geometric(&r, 1e-9);
    assert!(!rep.pass);
    assert!(!rep.check("angle-sum").unwrap().pass);
    // the combinatorics are untouched
    assert!(verify_combinatorial(&r.complex).pass);
}

#[test]
fn straight_angle_tiles_pass() {
    let r = built(&FamilyId::new(Family::Sporadic(Sporadic::S16_3)));
    assert!((r.spec.beta.radians() - std::f64::consts::PI).abs() < 1e-12);
    let rep = verify(&r, 1e-9);
    assert!(rep.pass, "{rep}");
}

#[test]
fn s16_4_and_s36_6_pass_and_close() {
    for s in [Sporadic::S16_4, Sporadic::S36_6] {
        let r = built(&FamilyId::new(Family::Sporadic(s)));
        let rep = verify(&r, 1e-9);
        assert!(rep.pass, "{rep}");
        assert!(rep.check("total-area").unwrap().residual < 1e-9);
        assert!(rep.check("holonomy").unwrap().residual < 1e-9);
    }
}

#[test]
fn quadrilateral_reports_include_v3() {
    let r = built(&FamilyId::new(Family::Sub(SubKind::Q, 12)));
    let rep = verify_combinatorial(&r.complex);
    let v3 = rep.check("v3").unwrap();
    assert!(v3.pass && v3.residual >= 8.0);
    let r = built(&FamilyId::new(Family::Platonic(20)));
    assert!(verify_combinatorial(&r.complex).check("v3").is_none());
}

#[test]
fn wrong_template_fails_congruence() {
    let mut r = built(&FamilyId::new(Family::Sub(SubKind::Q, 4)));
    r.spec = built(&FamilyId::new(Family::Platonic(6))).spec;
    let rep = verify_geometric(&r, 1e-9);
    assert!(!rep.check("congruence").unwrap().pass);
}

#[test]
fn report_serializes() {
    let r = built(&FamilyId::new(Family::Platonic(4)));
    let rep = verify(&r, 1e-9);
    let text = serde_json::to_string(&rep).unwrap();
    let back: VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, rep);
    assert!(rep.to_string().ends_with("PASS"));
}
