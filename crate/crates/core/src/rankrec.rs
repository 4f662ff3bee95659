//! Rank polynomial by pivot recursion.
//!
//! For a pivot `a`, the ideals avoiding `a` are the ideals of `W \ a↑`, and
//! removing `a↓` maps the ideals containing `a` bijectively onto the ideals
//! of `W \ a↓`. Hence `RP(x) = RP(W \ a↑) + x^|a↓| RP(W \ a↓)`. Antichains
//! end the recursion with `(1 + x)^n`.

use alloc::collections::BTreeMap;

use crate::poly::RankPolynomial;
use crate::poset::Poset;
use crate::set::ElemSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RecursionOptions {
    /// Cache results per remaining element set. Leaf counting is then
    /// unavailable.
    pub memoize: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursiveRank {
    pub polynomial: RankPolynomial,
    /// Number of antichain leaves; `None` when memoized.
    pub nsum: Option<u64>,
}

/// Element of `alive` maximizing `|a↓| + |a↑|` inside `alive`, earliest in
/// the linear extension on ties. `None` if `alive` is an antichain.
fn pivot_within(p: &Poset, alive: &ElemSet) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for &a in p.linear_extension() {
        if !alive.contains(a) {
            continue;
        }
        let score = p.down(a).intersection_len(alive) + p.up(a).intersection_len(alive);
        if best.is_none_or(|(s, _)| score > s) {
            best = Some((score, a));
        }
    }
    best.filter(|&(s, _)| s > 2).map(|(_, a)| a)
}

/// Pivot for the whole poset, or `None` for an antichain (including the empty poset).
pub fn pick_pivot(p: &Poset) -> Option<usize> {
    pivot_within(p, &ElemSet::full(p.w()))
}

pub fn rank_poly_recursive(p: &Poset) -> RecursiveRank {
    rank_poly_recursive_with(p, RecursionOptions::default())
}

pub fn rank_poly_recursive_with(p: &Poset, options: RecursionOptions) -> RecursiveRank {
    let all = ElemSet::full(p.w());
    if options.memoize {
        let mut memo = BTreeMap::new();
        let polynomial = memoized(p, all, &mut memo);
        RecursiveRank { polynomial, nsum: None }
    } else {
        let mut leaves = 0;
        let polynomial = plain(p, &all, &mut leaves);
        RecursiveRank { polynomial, nsum: Some(leaves) }
    }
}

fn plain(p: &Poset, alive: &ElemSet, leaves: &mut u64) -> RankPolynomial {
    let Some(a) = pivot_within(p, alive) else {
        *leaves += 1;
        return RankPolynomial::one_plus_x_pow(alive.len());
    };
    let down = p.down(a).intersection(alive);
    let minus = plain(p, &alive.difference(p.up(a)), leaves);
    let plus = plain(p, &alive.difference(&down), leaves);
    &minus + &plus.shifted(down.len())
}

fn memoized(p: &Poset, alive: ElemSet, memo: &mut BTreeMap<ElemSet, RankPolynomial>) -> RankPolynomial {
    if let Some(hit) = memo.get(&alive) {
        return hit.clone();
    }
    let result = match pivot_within(p, &alive) {
        None => RankPolynomial::one_plus_x_pow(alive.len()),
        Some(a) => {
            let down = p.down(a).intersection(&alive);
            let minus = memoized(p, alive.difference(p.up(a)), memo);
            let plus = memoized(p, alive.difference(&down), memo);
            &minus + &plus.shifted(down.len())
        }
    };
    memo.insert(alive, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pivots() {
        assert_eq!(pick_pivot(&Poset::chain(3)), Some(1));
        let v = Poset::from_relations(3, &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(pick_pivot(&v), Some(3));
        let diamond = Poset::from_relations(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(pick_pivot(&diamond), Some(1));
        assert_eq!(pick_pivot(&Poset::antichain(4)), None);
        assert_eq!(pick_pivot(&Poset::antichain(0)), None);
    }

    #[test]
    fn chain_of_two() {
        let r = rank_poly_recursive(&Poset::chain(2));
        assert_eq!(r.polynomial, RankPolynomial::from_u64s(&[1, 1, 1]));
        assert_eq!(r.nsum, Some(2));
    }

    #[test]
    fn antichain_is_a_leaf() {
        let r = rank_poly_recursive(&Poset::antichain(5));
        assert_eq!(r.polynomial, RankPolynomial::one_plus_x_pow(5));
        assert_eq!(r.nsum, Some(1));
        let empty = rank_poly_recursive(&Poset::antichain(0));
        assert_eq!(empty.polynomial, RankPolynomial::one());
    }

    #[test]
    fn memo_agrees() {
        let p = Poset::from_relations(6, &[(1, 3), (2, 3), (3, 5), (4, 5), (4, 6)]).unwrap();
        let plain = rank_poly_recursive(&p);
        let memo = rank_poly_recursive_with(&p, RecursionOptions { memoize: true });
        assert_eq!(plain.polynomial, memo.polynomial);
        assert_eq!(memo.nsum, None);
    }
}
