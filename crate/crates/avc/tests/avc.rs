use avc::*;
use quadsolve::{find_root, AngleLabel, QuadClass};
use sphercore::Angle;
use std::collections::BTreeSet;
use std::f64::consts::PI;

fn pf(p: i64, q: i64) -> Angle {
    Angle::pi_frac(p, q)
}

fn set(s: &[&str]) -> BTreeSet<VertexCombo> {
    s.iter().map(|x| x.parse().unwrap()).collect()
}

#[test]
fn angle_sums() {
    assert_eq!(angle_sum_target(6, QuadClass::General).unwrap(), pf(8, 3));
    assert_eq!(angle_sum_target(4, QuadClass::Triangle).unwrap(), pf(2, 1));
    assert!(matches!(angle_sum_target(5, QuadClass::General), Err(AvcError::BadF(_))));
    assert!(angle_sum_target(3, QuadClass::EquilateralTriangle).is_err());
}

#[test]
fn rhombus_avcs() {
    for (b, want) in [(pf(1, 2), set(&["α³", "β⁴"])), (pf(4, 9), set(&["α³", "αβ³"])), (pf(2, 5), set(&["α³", "β⁵"]))] {
        let r = enumerate_avc(QuadClass::Rhombus, &[pf(2, 3), b], None).unwrap();
        assert_eq!(r.combos, want, "β = {b}");
    }
}

#[test]
fn rhombus_family_avc() {
    for f in (10..=62).step_by(4) {
        let r = enumerate_avc(QuadClass::Rhombus, &[pf(f - 2, f), pf(4, f)], None).unwrap();
        let k = (f as u32 + 2) / 4;
        let want: BTreeSet<_> =
            [VertexCombo::new(2, 1, 0, 0), VertexCombo::new(1, k, 0, 0), VertexCombo::new(0, f as u32 / 2, 0, 0)].into();
        assert_eq!(r.combos, want, "f = {f}");
    }
}

#[test]
fn general_f24_avc() {
    let r = enumerate_avc(QuadClass::General, &[pf(2, 3), pf(2, 3), pf(1, 2), pf(1, 3)], None).unwrap();
    assert_eq!(r.combos, set(&["α³", "αβ²", "α²δ²", "β²δ²", "γ⁴", "αδ⁴", "δ⁶"]));
}

#[test]
fn numeric_root_avc() {
    let g = find_root(
        |x| (2.0 * PI / 3.0 - x).sin() * x.sin() - (PI / 3.0).sin() * (2.0 * x - 2.0 * PI / 3.0).sin(),
        1e-6,
        2.0 * PI / 3.0 - 1e-6,
        1e-13,
    )
    .unwrap();
    assert!((g / PI - 0.4568).abs() < 1e-4);
    let d = g + PI / 3.0;
    let angles = [Angle::Numeric(2.0 * PI - 2.0 * d), pf(2, 3), Angle::Numeric(g), Angle::Numeric(d)];
    let r = enumerate_avc(QuadClass::AlmostEquilateral, &angles, None).unwrap();
    assert_eq!(r.combos, set(&["αδ²", "β³", "αβγ²"]));
}

#[test]
fn equal_angles_give_all_triples() {
    let a = pf(2, 3);
    let r = enumerate_avc(QuadClass::Rhombus, &[a, a], None).unwrap();
    assert_eq!(r.combos, set(&["α³", "α²β", "αβ²", "β³"]));
}

#[test]
fn bad_angles() {
    assert!(matches!(enumerate_avc(QuadClass::Rhombus, &[pf(0, 1), pf(1, 2)], None), Err(AvcError::BadAngles(_))));
    assert!(enumerate_avc(QuadClass::Rhombus, &[pf(1, 2)], None).is_err());
}

#[test]
fn per_f_matches_single() {
    let fs: Vec<u32> = (6..=64).step_by(2).collect();
    let out = enumerate_avc_per_f(QuadClass::Rhombus, |f| vec![pf(2, 3), pf(8, 3 * f as i64)], &fs);
    assert_eq!(out.len(), fs.len());
    for (f, r) in out {
        let r = r.unwrap();
        assert_eq!(r.f, Some(f));
        let one = enumerate_avc(QuadClass::Rhombus, &[pf(2, 3), pf(8, 3 * f as i64)], None).unwrap();
        assert_eq!(r.combos, one.combos);
    }
}

#[test]
fn parity_examples() {
    let c = |s: &str| s.parse::<VertexCombo>().unwrap();
    assert!(parity_check(&c("βγδ"), QuadClass::General));
    assert!(!parity_check(&c("β²γδ"), QuadClass::General));
    assert!(parity_check(&c("γ²"), QuadClass::AlmostEquilateral));
    assert!(!parity_check(&c("αγ"), QuadClass::AlmostEquilateral));
    assert!(parity_check(&c("αβγ"), QuadClass::Triangle));
    assert!(!parity_check(&c("α²βγ"), QuadClass::Triangle));
    assert!(!parity_check(&c("αβ"), QuadClass::IsoscelesTriangle));
    assert!(parity_check(&c("β⁵"), QuadClass::Rhombus));
    assert!(!edge_compatible(&c("α²γ²"), QuadClass::General));
    assert!(edge_compatible(&c("α²γ²"), QuadClass::AlmostEquilateral));
}

#[test]
fn combo_text() {
    let c: VertexCombo = "alpha^3 beta delta^2".parse().unwrap();
    assert_eq!(c, VertexCombo::new(3, 1, 0, 2));
    assert_eq!(c.to_string(), "α³βδ²");
    assert_eq!(c.ascii(), "alpha^3 beta delta^2");
    assert_eq!(VertexCombo::new(0, 12, 0, 0).to_string(), "β¹²");
    assert_eq!("β¹²".parse::<VertexCombo>().unwrap(), VertexCombo::new(0, 12, 0, 0));
    assert!("xyz".parse::<VertexCombo>().is_err());
}

fn avc_of(class: QuadClass, combos: &[&str]) -> AVCSet {
    AVCSet { class, angles: Vec::new(), combos: set(combos), f: None }
}

#[test]
fn counting_forces_heavy_vertex() {
    let r = counting_balance_audit(&avc_of(QuadClass::Rhombus, &["α³", "αβ⁴", "β⁵"]));
    assert!(r.passes());
    let f = r.counting.iter().find(|x| x.theta == AngleLabel::Alpha && x.rho == AngleLabel::Beta).unwrap();
    assert_eq!(f.heavy, vec![VertexCombo::new(3, 0, 0, 0)]);
    assert!(f.excluded.is_empty());
    // without α³ nothing can balance the β-heavy vertices
    let r = counting_balance_audit(&avc_of(QuadClass::Rhombus, &["αβ⁴", "β⁵"]));
    assert!(!r.passes());
    assert!(r.reduced.is_empty());
}

#[test]
fn counting_balanced_pair_passes() {
    let r = counting_balance_audit(&avc_of(QuadClass::AlmostEquilateral, &["αγδ", "αβ³"]));
    let f = r.counting.iter().find(|x| x.theta == AngleLabel::Gamma && x.rho == AngleLabel::Delta);
    assert!(f.is_none_or(|f| f.excluded.is_empty()));
}

#[test]
fn balance_general() {
    let r = counting_balance_audit(&avc_of(QuadClass::General, &["α⁴", "αγ²", "βγδ"]));
    assert!(!r.passes());
    assert!(r.violations.iter().any(|v| v.starts_with("balance")));
    let r = counting_balance_audit(&avc_of(QuadClass::General, &["α³", "βγδ", "αβγδ"]));
    assert!(r.passes());
    assert!(r.balance.iter().any(|b| b.contains("only vertices are α^k and βγδ")));
    assert_eq!(r.reduced, set(&["α³", "βγδ"]));
}

#[test]
fn count_aaa_and_deg3miss() {
    let census: Census = [(VertexCombo::new(3, 0, 0, 0), 8), (VertexCombo::new(0, 2, 2, 0), 4)].into();
    assert!(!count_aaa_holds(&census, QuadClass::General, 12));
    assert!(count_aaa_holds(&census, QuadClass::General, 24));
    let cube: Census = [(VertexCombo::new(3, 0, 0, 0), 4), (VertexCombo::new(0, 3, 0, 0), 4)].into();
    assert!(count_aaa_holds(&cube, QuadClass::Rhombus, 6));
    assert!(deg3miss_holds(&cube, QuadClass::Rhombus));
    let miss: Census =
        [(VertexCombo::new(3, 0, 0, 0), 8), (VertexCombo::new(0, 1, 3, 0), 2), (VertexCombo::new(0, 2, 0, 2), 2)].into();
    assert!(deg3miss_holds(&miss, QuadClass::General));
    let bad: Census = [(VertexCombo::new(3, 0, 0, 0), 8), (VertexCombo::new(0, 2, 1, 1), 6)].into();
    assert!(!deg3miss_holds(&bad, QuadClass::General));
}

#[test]
fn euler_examples() {
    let cube = DegreeHistogram::from_degrees(4, 6, [3; 8]);
    assert!(euler_audit(&cube, 4).pass);
    let mut short = cube.clone();
    short.v_k.insert(3, 7);
    short.v = 7;
    let r = euler_audit(&short, 4);
    assert!(!r.pass);
    assert!(r.failed.contains(&"quad-v3-at-least-8".to_string()));
    let icosa = DegreeHistogram::from_degrees(3, 20, [5; 12]);
    assert!(euler_audit(&icosa, 3).pass);
    // deltoidal icositetrahedron: 24 kites, 8+6 cubic and 12 quartic vertices
    let deltoid = DegreeHistogram::from_degrees(4, 24, [3; 8].into_iter().chain([4; 18]));
    assert!(euler_audit(&deltoid, 4).pass);
}
