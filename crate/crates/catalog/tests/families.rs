mod common;

use catalog::earth::EarthKind;
use catalog::families::*;
use catalog::flip::census_within;
use catalog::{symmetry_counts, CatalogError};
use common::assert_valid;

#[test]
fn every_family_builds_at_its_defaults() {
    for e in census() {
        let id = FamilyId::new(e.family);
        let r = build(&id).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        let row = table_row(&id).unwrap();
        assert_eq!(r.complex.f(), row.f, "{}", e.name);
        let types = vertex_types(&id).unwrap();
        assert!(census_within(&r.complex, &types, &types), "{}: census {:?}", e.name, r.complex.census());
        assert_valid(&r, &e.name);
        if let Some(order) = row.symmetry_order {
            assert_eq!(symmetry_counts(&r.complex).0, order, "{} symmetry {}", e.name, row.symmetry);
        }
    }
}

#[test]
fn listing_has_both_theorems() {
    let c = census();
    let count = |tile: &str, group: &str| c.iter().filter(|e| e.tile == tile && e.group == group).count();
    assert_eq!(count("quadrilateral", "platonic"), 7);
    assert_eq!(count("quadrilateral", "sporadic"), 8);
    assert_eq!(count("quadrilateral", "earth map"), 11);
    assert_eq!(count("triangle", "platonic"), 13);
    assert_eq!(count("triangle", "earth map"), 12);
    assert_eq!(count("triangle", "sporadic"), 0);
    let names: std::collections::BTreeSet<_> = c.iter().map(|e| e.name.clone()).collect();
    assert_eq!(names.len(), c.len());
}

#[test]
fn names_and_aliases() {
    for (name, fam) in [
        ("P6", Family::Platonic(6)),
        ("CP4", Family::Platonic(6)),
        ("CP₈", Family::Sub(SubKind::Q, 4)),
        ("CP6", Family::Sub(SubKind::Q, 4)),
        ("QP_8", Family::Sub(SubKind::Q, 6)),
        ("QP20", Family::Sub(SubKind::Q, 12)),
        ("CP20", Family::Sub(SubKind::C, 12)),
        ("BP4", Family::Sub(SubKind::T, 6)),
        ("BP8", Family::Sub(SubKind::B, 6)),
        ("BP20", Family::Sub(SubKind::B, 12)),
        ("BP'8", Family::BP8Prime),
        ("QP′6", Family::QP6Prime),
        ("SP'6", Family::SP6Prime),
        ("E△3", Family::Earth(EarthKind::Tri(3))),
        ("Etri3", Family::Earth(EarthKind::Tri(3))),
        ("E□5", Family::Earth(EarthKind::Quad(5))),
        ("Equad1", Family::Earth(EarthKind::Quad(1))),
        ("E'□4", Family::QuadFlip4),
        ("E″△1", Family::TriFlip1Double),
        ("E'''tri1", Family::TriFlip1Triple),
        ("E‴□2", Family::Rearranged2),
        ("E′^{(s,t)}□2", Family::QuadFlipST),
        ("E''(s',t)quad2", Family::QuadFlipS2T),
        ("E″□5", Family::QuadFlip5Double),
        ("S16_3", Family::Sporadic(Sporadic::S16_3)),
        ("S'16_3", Family::Sporadic(Sporadic::S16_3Prime)),
        ("S₃₆6", Family::Sporadic(Sporadic::S36_6)),
    ] {
        assert_eq!(Family::parse(name).unwrap(), fam, "{name}");
    }
    for e in census() {
        assert_eq!(Family::parse(&e.name).unwrap(), e.family, "display name {} parses back", e.name);
    }
    for bad in ["P5", "XP6", "E△6", "E′△0", "S16_9", "", "E″□4"] {
        assert!(matches!(Family::parse(bad), Err(CatalogError::InvalidFamily(_))), "{bad}");
    }
}

#[test]
fn aliased_names_build_the_same_tiling() {
    let a = build(&FamilyId::parse("CP8").unwrap()).unwrap();
    let b = build(&FamilyId::parse("QP4").unwrap()).unwrap();
    assert_eq!(a.complex, b.complex);
}

#[test]
fn p12_and_bad_parameters_are_rejected() {
    assert!(matches!(build(&FamilyId::parse("P12").unwrap()), Err(CatalogError::InvalidParams(_))));
    let e1 = FamilyId::new(Family::Earth(EarthKind::Tri(1)));
    assert!(matches!(build(&e1.clone().with_p(1)), Err(CatalogError::InvalidParams(_))));
    assert!(matches!(build(&e1.clone().with_f(14)), Err(CatalogError::InvalidParams(_))));
    assert!(matches!(build(&e1.with_p(3).with_f(16)), Err(CatalogError::InvalidParams(_))));
    let q4 = FamilyId::new(Family::Earth(EarthKind::Quad(4)));
    assert!(matches!(build(&q4.with_p(2)), Err(CatalogError::InvalidParams(_))));
    let st = FamilyId::new(Family::QuadFlipST);
    // s must lie strictly between f/8 and 3f/8
    assert!(build(&st.clone().with_p(8).with_st(2, 1)).is_err());
    assert!(build(&st.clone().with_p(8).with_st(6, 1)).is_err());
    assert!(build(&st.with_p(8).with_st(3, 3)).is_err());
    assert!(FamilyId::parse("SP6").unwrap().with_f(24).resolve().is_err());
}

#[test]
fn f_selects_the_index() {
    let id = FamilyId::new(Family::TriFlip(4)).with_f(36);
    let r = id.resolve().unwrap();
    assert_eq!((r.q, r.f), (4, 36));
    let id = FamilyId::new(Family::Earth(EarthKind::Quad(2))).with_f(20);
    assert_eq!(id.resolve().unwrap().p, 10);
    assert_eq!(build(&id).unwrap().complex.f(), 20);
}

#[test]
fn table_rows() {
    let row = table_row(&FamilyId::new(Family::Earth(EarthKind::Quad(4))).with_p(5)).unwrap();
    assert_eq!(row.f, 10);
    assert_eq!(row.vertices, vec!["αβ²".to_string(), "α⁵".to_string()]);
    assert_eq!(row.symmetry, "D_5v");
    assert_eq!(row.symmetry_order, Some(20));
    let row = table_row(&FamilyId::new(Family::Earth(EarthKind::Quad(4))).with_p(3)).unwrap();
    assert_eq!(row.symmetry, "O_h");
    let row = table_row(&FamilyId::new(Family::QuadFlipST).with_p(10).with_st(3, 2)).unwrap();
    assert_eq!(row.vertices, vec!["βγδ", "α⁴β²", "α³γδ"]);
    let row = table_row(&FamilyId::new(Family::Sporadic(Sporadic::S36_5))).unwrap();
    assert_eq!(row.vertices.len(), 5);
    assert_eq!(row.f, 36);
}

#[test]
fn tile_counts_follow_the_index_laws() {
    let check = |fam: Family, n: u32, f: usize| {
        let id = match fam {
            Family::Earth(_) | Family::QuadFlipST | Family::QuadFlipS2T => FamilyId::new(fam).with_p(n),
            _ => FamilyId::new(fam).with_q(n),
        };
        assert_eq!(id.resolve().unwrap().f, f, "{fam} {n}");
    };
    for p in 3..9u32 {
        let pu = p as usize;
        check(Family::Earth(EarthKind::Tri(1)), p, 4 * pu);
        check(Family::Earth(EarthKind::Tri(3)), p, 2 * pu);
        check(Family::Earth(EarthKind::Tri(5)), p, 8 * pu);
        check(Family::Earth(EarthKind::Quad(5)), p, 8 * pu);
        check(Family::Earth(EarthKind::Quad(3)), p, 2 * pu);
    }
    for q in 1..6u32 {
        let qu = q as usize;
        check(Family::TriFlip(1), q, 8 * qu + 4);
        if q > 1 {
            check(Family::TriFlip(5), q, 16 * qu + 8);
            check(Family::QuadFlip4, q, 4 * qu + 2);
        }
        check(Family::QuadFlip5, q, 16 * qu + 8);
        check(Family::Rearranged2, q, 6 * qu + 4);
    }
    check(Family::TriFlip(3), 3, 12);
}

#[test]
fn parallel_and_sequential_builds_agree() {
    let ids: Vec<FamilyId> = census().into_iter().map(|e| FamilyId::new(e.family)).collect();
    let a = build_many(&ids);
    let b = build_many_sequential(&ids);
    for ((x, y), id) in a.iter().zip(&b).zip(&ids) {
        assert_eq!(x.as_ref().unwrap().complex, y.as_ref().unwrap().complex, "{id}");
    }
}

#[test]
fn realizations_serialize() {
    let r = build(&FamilyId::parse("QP6").unwrap()).unwrap();
    let s = serde_json::to_string(&r).unwrap();
    let back: catalog::GeometricRealization = serde_json::from_str(&s).unwrap();
    assert_eq!(back.complex, r.complex);
    let id = FamilyId::new(Family::QuadFlipST).with_p(10).with_st(3, 2);
    let s = serde_json::to_string(&id).unwrap();
    assert_eq!(serde_json::from_str::<FamilyId>(&s).unwrap(), id);
}
