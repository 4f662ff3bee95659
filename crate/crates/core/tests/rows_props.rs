mod common;

use common::{ab_member, binomial, powerset};
use num_bigint::BigUint;
use proptest::prelude::*;
use wildrows_core::{cardinality_poly, Row012, RowAb, Trit};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn row012_roundtrip(r in common::row012_any(20)) {
        let parsed: Row012 = r.to_string().parse().unwrap();
        prop_assert_eq!(parsed.cells(), r.cells());
    }

    #[test]
    fn row_ab_roundtrip(r in common::row_ab(20)) {
        let parsed: RowAb = r.to_string().parse().unwrap();
        prop_assert_eq!(parsed, r);
    }

    #[test]
    fn k_listing_is_exact(r in common::row012_any(14)) {
        let ones = r.ones().len();
        let twos = r.twos().len();
        let mut total = 0u64;
        for k in 0..=r.w() {
            let listed = r.list_k(k);
            prop_assert_eq!(listed.len() as u64, binomial(twos, k.saturating_sub(ones)) * (k >= ones) as u64);
            prop_assert!(listed.windows(2).all(|p| p[0] != p[1]));
            prop_assert!(listed.iter().all(|x| x.len() == k && r.contains(x)));
            total += listed.len() as u64;
        }
        prop_assert_eq!(BigUint::from(total), r.count());
    }

    #[test]
    fn row012_members_match_definition(r in common::row012_any(10)) {
        let want: Vec<_> = powerset(r.w())
            .filter(|x| (1..=r.w()).all(|p| match r.get(p) {
                Trit::Zero => !x.contains(p),
                Trit::One => x.contains(p),
                Trit::Two => true,
            }))
            .collect();
        prop_assert_eq!(common::sorted(r.members().collect()), common::sorted(want));
    }

    #[test]
    fn row_ab_count_and_polynomial_match_brute_force(r in common::row_ab(14)) {
        let members: Vec<_> = powerset(r.w()).filter(|x| ab_member(&r, x)).collect();
        prop_assert_eq!(r.count(), BigUint::from(members.len()));
        let poly = cardinality_poly(&r);
        for k in 0..=r.w() {
            let n = members.iter().filter(|x| x.len() == k).count();
            prop_assert_eq!(poly.coeff(k), BigUint::from(n), "k = {}", k);
        }
        prop_assert!(members.iter().all(|x| r.contains(x)));
    }
}

proptest! {
    #[test]
    fn row_ab_members_enumerate_each_member_once(r in common::row_ab(12)) {
        let listed = r.members();
        let want: Vec<_> = powerset(r.w()).filter(|x| ab_member(&r, x)).collect();
        prop_assert_eq!(BigUint::from(listed.len()), r.count());
        prop_assert_eq!(common::sorted(listed), common::sorted(want));
    }
}
