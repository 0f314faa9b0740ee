use catalog::families::*;
use proptest::prelude::*;
use verifier::*;

fn pick(i: usize) -> FamilyId {
    let c = census();
    FamilyId::new(c[i % c.len()].family)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn passing_is_monotone_in_tolerance(i in 0usize..64, shift in 0.0f64..1e-4, k in 0usize..4) {
        let mut r = build(&pick(i)).unwrap();
        // nudge one vertex so that some tolerances fail
        let v = k % r.coords.len();
        let p = r.coords[v].to_array();
        r.coords[v] = sphercore::UnitVec::new(p[0] + shift, p[1], p[2]).unwrap();
        let mut passed = false;
        for tol in [1e-12, 1e-10, 1e-8, 1e-6, 1e-4, 1e-2, 1.0] {
            let now = verify_geometric(&r, tol).pass;
            prop_assert!(now || !passed, "passed below {tol} but not at it");
            passed |= now;
        }
    }

    #[test]
    fn automorphism_order_ignores_vertex_numbering(i in 0usize..64, seed in any::<u64>()) {
        let t = build(&pick(i)).unwrap().complex;
        let n = t.num_vertices;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed | 1;
        for j in (1..n).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            perm.swap(j, (s % (j as u64 + 1)) as usize);
        }
        let u = t.renumber(&perm);
        prop_assert_eq!(automorphism_counts(&u), automorphism_counts(&t));
        prop_assert!(verify_combinatorial(&u).pass);
    }
}
