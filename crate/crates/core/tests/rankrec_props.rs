mod common;

use common::{ideals_by_sweep, sorted};
use num_bigint::BigUint;
use proptest::prelude::*;
use wildrows_core::brute::brute_rank_polynomial;
use wildrows_core::{pick_pivot, rank_poly_recursive, ElemSet, Poset, RankPolynomial};

/// The subposet induced on `keep`, relabeled `1..=|keep|` in ascending order.
fn induced(p: &Poset, keep: &ElemSet) -> Poset {
    let labels: Vec<usize> = keep.iter().collect();
    let mut rel = Vec::new();
    for (i, &a) in labels.iter().enumerate() {
        for (j, &b) in labels.iter().enumerate() {
            if a != b && p.leq(a, b) {
                rel.push((i + 1, j + 1));
            }
        }
    }
    Poset::from_relations(labels.len(), &rel).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn pivot_split_is_a_bijection(p in common::poset(11)) {
        let Some(a) = pick_pivot(&p) else {
            prop_assert!(p.is_antichain());
            return Ok(());
        };
        let all = ElemSet::full(p.w());
        let ideals = ideals_by_sweep(&p);
        let without: Vec<_> = ideals.iter().filter(|x| !x.contains(a)).cloned().collect();
        let with: Vec<_> = ideals.iter().filter(|x| x.contains(a)).map(|x| x.difference(p.down(a))).collect();

        let rest = all.difference(p.up(a));
        prop_assert!(without.iter().all(|x| x.is_subset(&rest)));
        let rest_ideals: Vec<_> = ideals_by_sweep(&induced(&p, &rest)).into_iter()
            .map(|x| x.iter().map(|i| rest.iter().nth(i - 1).unwrap()).collect::<ElemSet>())
            .collect();
        prop_assert_eq!(sorted(without), sorted(rest_ideals));

        let top = all.difference(p.down(a));
        let top_ideals: Vec<_> = ideals_by_sweep(&induced(&p, &top)).into_iter()
            .map(|x| x.iter().map(|i| top.iter().nth(i - 1).unwrap()).collect::<ElemSet>())
            .collect();
        prop_assert_eq!(sorted(with), sorted(top_ideals));
    }

    #[test]
    fn recursion_matches_brute_force(p in common::poset(13)) {
        let rec = rank_poly_recursive(&p);
        let brute = brute_rank_polynomial(&p).unwrap();
        prop_assert_eq!(&rec.polynomial, &brute);
        prop_assert!(rec.nsum.unwrap() >= 1);
        prop_assert!(rec.polynomial.eval_one() >= BigUint::from(rec.nsum.unwrap()));
    }

    #[test]
    fn antichain_is_a_binomial_power(n in 0usize..12) {
        let rec = rank_poly_recursive(&Poset::antichain(n));
        prop_assert_eq!(rec.polynomial, RankPolynomial::one_plus_x_pow(n));
        prop_assert_eq!(rec.nsum, Some(1));
    }
}
