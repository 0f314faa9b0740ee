mod common;

use catalog::earth::EarthKind;
use catalog::families::*;
use catalog::flip::census_within;
use catalog::symmetry_counts;
use common::assert_valid;

fn check(id: &FamilyId) {
    let r = build(id).unwrap_or_else(|e| panic!("{id}: {e}"));
    let row = table_row(id).unwrap();
    assert_eq!(r.complex.f(), row.f, "{id}");
    let types = vertex_types(id).unwrap();
    assert!(census_within(&r.complex, &types, &types), "{id}: {:?} vs {:?}", r.complex.census(), row.vertices);
    assert_valid(&r, &id.to_string());
    if let Some(order) = row.symmetry_order {
        assert_eq!(symmetry_counts(&r.complex).0, order, "{id}: {}", row.symmetry);
    }
}

#[test]
fn triangle_earth_maps_over_p() {
    for k in 1..=5u8 {
        for p in 3..=9u32 {
            // the angles of E△5 coincide at p = 3 and its cells only carry α, γ
            if k == 5 && p == 3 {
                continue;
            }
            check(&FamilyId::new(Family::Earth(EarthKind::Tri(k))).with_p(p));
        }
    }
    check(&FamilyId::new(Family::Earth(EarthKind::Tri(1))).with_p(2));
    check(&FamilyId::new(Family::Earth(EarthKind::Tri(2))).with_p(2));
}

#[test]
fn quadrilateral_earth_maps_over_p() {
    for k in 1..=4u8 {
        for p in 3..=10u32 {
            if k == 2 && p < 8 {
                continue;
            }
            let id = FamilyId::new(Family::Earth(EarthKind::Quad(k))).with_p(p);
            // β = 0.9π is a special value at p = 10 where γ = α
            check(&if k == 2 { id.with_free(vec![0.85]) } else { id });
        }
    }
    for p in 3..=6u32 {
        check(&FamilyId::new(Family::Earth(EarthKind::Quad(5))).with_p(p));
    }
}

#[test]
fn free_parameters_deform_the_earth_maps() {
    for b in [0.3, 0.45, 0.55, 0.7] {
        check(&FamilyId::new(Family::Earth(EarthKind::Tri(1))).with_p(5).with_free(vec![b]));
    }
    for b in [0.6, 0.8, 1.0, 1.2] {
        check(&FamilyId::new(Family::Earth(EarthKind::Quad(2))).with_p(10).with_free(vec![b]));
    }
    for b in [0.55, 0.65, 0.75] {
        check(&FamilyId::new(Family::Earth(EarthKind::Quad(3))).with_p(5).with_free(vec![b]));
    }
}

#[test]
fn earth_map_symmetry_grows_with_p() {
    for p in 3..=8u32 {
        let r = build(&FamilyId::new(Family::Earth(EarthKind::Quad(1))).with_p(p)).unwrap();
        assert_eq!(symmetry_counts(&r.complex), (2 * p as usize, 2 * p as usize));
        // E△3 with p = 4 is the octahedron
        let r = build(&FamilyId::new(Family::Earth(EarthKind::Tri(3))).with_p(p)).unwrap();
        let expect = if p == 4 { 48 } else { 4 * p as usize };
        assert_eq!(symmetry_counts(&r.complex).0, expect);
    }
}

#[test]
fn triangle_flips_over_q() {
    for q in 1..=4u32 {
        for fam in [
            Family::TriFlip(1),
            Family::TriFlip(2),
            Family::TriFlip1Double,
            Family::TriFlip1Triple,
        ] {
            check(&FamilyId::new(fam).with_q(q));
        }
    }
    for q in [1, 3, 4, 5] {
        check(&FamilyId::new(Family::TriFlip(4)).with_q(q));
    }
    assert!(build(&FamilyId::new(Family::TriFlip(4)).with_q(2)).is_err());
    for q in 3..=6u32 {
        check(&FamilyId::new(Family::TriFlip(3)).with_q(q));
        check(&FamilyId::new(Family::TriFlip(5)).with_q(q.min(4)));
    }
    assert!(build(&FamilyId::new(Family::TriFlip(5)).with_q(1)).is_err());
}

#[test]
fn quadrilateral_flips_over_q() {
    assert!(build(&FamilyId::new(Family::QuadFlip4).with_q(1)).is_err());
    for q in 1..=5u32 {
        check(&FamilyId::new(Family::QuadFlip4).with_q(q.max(2)));
        check(&FamilyId::new(Family::Rearranged2).with_q(q));
    }
    for q in 1..=2u32 {
        check(&FamilyId::new(Family::QuadFlip5).with_q(q));
        check(&FamilyId::new(Family::QuadFlip5Double).with_q(q));
    }
}

#[test]
fn two_parameter_flips() {
    for p in 5..=12u32 {
        let f = 2 * p;
        for s in 1..p {
            if !(8 * s > f && 8 * s < 3 * f) {
                continue;
            }
            for t in 1..=p / s {
                // β = π leaves a vertex of degree 2 once every zone is flipped
                if s * t == p {
                    continue;
                }
                check(&FamilyId::new(Family::QuadFlipST).with_p(p).with_st(s, t));
                check(&FamilyId::new(Family::QuadFlipS2T).with_p(p).with_st(s, t));
            }
        }
    }
}

#[test]
fn single_flips_of_both_kinds_coincide() {
    // E′(s,1) and E″(s′,1) with s + s′ = p are the same tiling
    let p = 8;
    for s in 3..=5u32 {
        let a = build(&FamilyId::new(Family::QuadFlipST).with_p(p).with_st(s, 1)).unwrap();
        let b = build(&FamilyId::new(Family::QuadFlipS2T).with_p(p).with_st(p - s, 1)).unwrap();
        assert!(catalog::is_isomorphic(&a.complex, &b.complex, catalog::Labels::Ignore), "s = {s}");
        assert!((a.spec.beta.radians() - b.spec.beta.radians()).abs() < 1e-12);
    }
}
