//! Order ideals of fixed cardinality.

use alloc::vec::Vec;

use crate::implication::{Implication, ImplicationFamily};
use crate::poe012::{enumerate_k_models_with, Cardinality, FeasibilityOracle, FinalStack};
use crate::poset::Poset;
use crate::set::ElemSet;

/// `{p} -> LC(p)` for every element, in linear-extension order. Minimal
/// elements give trivial implications.
pub fn natural_base(p: &Poset) -> ImplicationFamily {
    let implications = p
        .linear_extension()
        .iter()
        .map(|&e| Implication::new(ElemSet::singleton(e), p.lower_covers(e).clone()))
        .collect();
    ImplicationFamily::new(p.w(), implications).expect("cover relation stays inside the universe")
}

/// Extension test for ideals: every ideal avoiding `Y` lies inside
/// `W \ Y'`, where `Y'` is the filter generated by `Y`, and every
/// cardinality between `|Z0|` and `|W \ Y'|` is reached by shelling the
/// convex difference from below.
#[derive(Clone, Copy, Debug)]
pub struct IdealOracle<'a> {
    poset: &'a Poset,
}

pub fn ideal_oracle(p: &Poset) -> IdealOracle<'_> {
    IdealOracle { poset: p }
}

impl IdealOracle<'_> {
    /// The largest ideal avoiding `zeros`.
    pub fn largest_avoiding(&self, zeros: &ElemSet) -> ElemSet {
        ElemSet::full(self.poset.w()).difference(&self.poset.up_closure(zeros))
    }
}

impl FeasibilityOracle for IdealOracle<'_> {
    fn is_feasible(&self, ones: &ElemSet, zeros: &ElemSet, target: Cardinality) -> bool {
        let ceiling = self.largest_avoiding(zeros);
        if !ones.is_subset(&ceiling) {
            return false;
        }
        match target {
            Cardinality::Any => true,
            Cardinality::Exactly(k) => ones.len() <= k && k <= ceiling.len(),
        }
    }
}

/// The `k`-element ideals of `p`, as final rows over the input labels.
pub fn enumerate_k_ideals(p: &Poset, k: usize) -> FinalStack {
    let family = natural_base(p);
    enumerate_k_models_with(&family, k, &ideal_oracle(p), |seed| p.down_closure(seed))
}

/// Convenience: the `k`-element ideals as sets.
pub fn k_ideals(p: &Poset, k: usize) -> Vec<ElemSet> {
    enumerate_k_ideals(p, k).k_sets(k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v_poset() -> Poset {
        Poset::from_relations(3, &[(1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn chain_base() {
        let fam = natural_base(&Poset::chain(3));
        let pairs: Vec<_> = fam.iter().map(|i| (i.premise().clone(), i.conclusion().clone())).collect();
        assert_eq!(
            pairs,
            vec![
                (ElemSet::from([1]), ElemSet::new()),
                (ElemSet::from([2]), ElemSet::from([1])),
                (ElemSet::from([3]), ElemSet::from([2])),
            ]
        );
    }

    #[test]
    fn antichain_base_trivial() {
        let fam = natural_base(&Poset::antichain(3));
        assert_eq!(fam.len(), 3);
        assert!(fam.iter().all(Implication::is_trivial));
    }

    #[test]
    fn diamond_base() {
        let p = Poset::from_relations(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let fam = natural_base(&p);
        let concl: Vec<_> = fam.iter().map(|i| i.conclusion().clone()).collect();
        assert_eq!(
            concl,
            vec![ElemSet::new(), ElemSet::from([1]), ElemSet::from([1]), ElemSet::from([2, 3])]
        );
    }

    #[test]
    fn oracle_examples() {
        let chain = Poset::chain(3);
        let o = ideal_oracle(&chain);
        let (z0, y) = (ElemSet::from([1]), ElemSet::from([3]));
        assert!(o.is_feasible(&z0, &y, Cardinality::Exactly(2)));
        assert!(!o.is_feasible(&z0, &y, Cardinality::Exactly(3)));
        assert!(o.is_feasible(&ElemSet::new(), &ElemSet::new(), Cardinality::Exactly(0)));
        assert!(!o.is_feasible(&ElemSet::from([1, 2]), &ElemSet::new(), Cardinality::Exactly(1)));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(k_ideals(&Poset::chain(3), 2), vec![ElemSet::from([1, 2])]);
        assert_eq!(k_ideals(&Poset::antichain(4), 2).len(), 6);
        assert_eq!(k_ideals(&v_poset(), 2), vec![ElemSet::from([1, 2])]);
    }
}
