mod common;

use catalog::earth::EarthKind;
use catalog::families::*;
use catalog::flip::census_within;
use catalog::{is_isomorphic, symmetry_counts, Labels};
use common::assert_valid;
use proptest::prelude::*;

fn check(id: &FamilyId) {
    let r = build(id).unwrap_or_else(|e| panic!("{id} {:?}: {e}", id.params.free));
    let types = vertex_types(id).unwrap();
    assert_eq!(r.complex.f(), id.resolve().unwrap().f);
    assert!(census_within(&r.complex, &types, &types), "{id}: {:?}", r.complex.census());
    assert_valid(&r, &id.to_string());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn qp6_rejects_out_of_range(b in 0.8f64..0.99) {
        prop_assert!(build(&FamilyId::new(Family::Sub(SubKind::Q, 6)).with_free(vec![b])).is_err());
    }

    #[test]
    fn tetrahedra_deform(a in 0.45f64..0.9, b in 0.45f64..0.9) {
        prop_assume!(2.0 - a - b > 0.45 && 2.0 - a - b < 0.9);
        check(&FamilyId::new(Family::Platonic(4)).with_free(vec![a, b]));
    }

    #[test]
    fn octahedra_deform(b in 0.1f64..0.9) {
        check(&FamilyId::new(Family::Platonic(8)).with_free(vec![b]));
    }

    #[test]
    fn cubes_deform(b in 0.55f64..0.8, g in 0.55f64..0.8) {
        check(&FamilyId::new(Family::Platonic(6)).with_free(vec![b, g]));
    }

    #[test]
    fn qp6_deforms(b in 0.27f64..0.73) {
        check(&FamilyId::new(Family::Sub(SubKind::Q, 6)).with_free(vec![b]));
    }

    #[test]
    fn e_tri1_deforms(p in 2u32..9, t in 0.01f64..0.99) {
        // the triangle exists for α/2 < β < π − α/2
        let half = 1.0 / p as f64;
        let b = half + t * (1.0 - 2.0 * half);
        check(&FamilyId::new(Family::Earth(EarthKind::Tri(1))).with_p(p).with_free(vec![b]));
    }

    #[test]
    fn e_quad2_deforms(p in 8u32..15, b in 0.55f64..1.45) {
        check(&FamilyId::new(Family::Earth(EarthKind::Quad(2))).with_p(p).with_free(vec![b]));
    }

    #[test]
    fn e_quad3_deforms(p in 3u32..9, b in 0.52f64..0.8) {
        check(&FamilyId::new(Family::Earth(EarthKind::Quad(3))).with_p(p).with_free(vec![b]));
    }

    #[test]
    fn e_quad1_moduli(p in 3u32..9, t in 0.1f64..0.9) {
        let kite = earth_spec(EarthKind::Quad(3), 2 * p as usize, &[0.6]).unwrap();
        let phi = t * 4.0 * std::f64::consts::PI / (2 * p) as f64;
        check(&FamilyId::new(Family::Earth(EarthKind::Quad(1))).with_p(p).with_free(vec![kite.a.radians(), phi]));
    }

    #[test]
    fn relabelled_vertices_keep_the_symmetry(seed in any::<u64>(), pick in 0usize..53) {
        let c = census();
        let id = FamilyId::new(c[pick % c.len()].family);
        let t = build(&id).unwrap().complex;
        let n = t.num_vertices;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let u = t.renumber(&perm);
        prop_assert_eq!(symmetry_counts(&u), symmetry_counts(&t));
        prop_assert!(is_isomorphic(&u, &t, Labels::Respect));
        prop_assert_eq!(u.census(), t.census());
    }
}
