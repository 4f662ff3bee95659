//! The (a,b)-algorithm: all order ideals of a poset as a disjoint union of
//! `{0,1,2,a,b}`-valued rows, and Whitney numbers from per-row
//! cardinality polynomials.
//!
//! Elements are processed in linear-extension order, so the premise
//! position of every imposed implication still holds a 2 and no row ever
//! becomes empty.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::ImposeError;
use crate::poly::RankPolynomial;
use crate::poset::Poset;
use crate::row::{AbCell, RowAb};
use crate::set::ElemSet;

/// Imposes `{j} -> conclusion` on `r`, where position `j` holds a 2.
///
/// Returns one or two rows partitioning `{X ∈ r : j ∈ X ⇒ conclusion ⊆ X}`:
///
/// 1. a conclusion position is 0: `j` becomes 0;
/// 2. the conclusion is all 1's: `r` is unchanged;
/// 3. the conclusion holds only 1's and 2's: `j` becomes the premise of a
///    fresh bundle whose conclusion is the 2's;
/// 4. otherwise (bundle symbols in range): one copy with `j = 0`, and one
///    with `j = 1` and the conclusion forced to 1. Forcing a premise to 1
///    forces its whole bundle; forcing a conclusion position shrinks its
///    bundle, and a bundle left without conclusion releases its premise to 2.
pub fn ab_impose(r: &RowAb, j: usize, conclusion: &ElemSet) -> Result<Vec<RowAb>, ImposeError> {
    let w = r.w();
    for p in core::iter::once(j).chain(conclusion.iter()) {
        if p == 0 || p > w {
            return Err(ImposeError::OutOfRange { position: p, w });
        }
    }
    if r.get(j) != AbCell::Two {
        return Err(ImposeError::PremiseNotFree(j));
    }

    let cells: Vec<AbCell> = conclusion.iter().map(|b| r.get(b)).collect();
    if cells.contains(&AbCell::Zero) {
        return Ok(alloc::vec![with_cell(r, j, AbCell::Zero)]);
    }
    if cells.iter().all(|&c| c == AbCell::One) {
        return Ok(alloc::vec![r.clone()]);
    }
    if cells.iter().all(|&c| matches!(c, AbCell::One | AbCell::Two)) {
        let id = r.next_bundle;
        let mut out = with_cell(r, j, AbCell::Prem(id));
        for b in conclusion {
            if r.get(b) == AbCell::Two {
                out.cells[b - 1] = AbCell::Conc(id);
            }
        }
        out.next_bundle = id + 1;
        return Ok(alloc::vec![out]);
    }

    let excluded = with_cell(r, j, AbCell::Zero);

    let mut forced = r.clone();
    forced.cells[j - 1] = AbCell::One;
    let mut dissolved = BTreeSet::new();
    let mut shrunk = BTreeSet::new();
    for b in conclusion {
        match r.get(b) {
            AbCell::Prem(id) => {
                dissolved.insert(id);
            }
            AbCell::Conc(id) => {
                shrunk.insert(id);
            }
            _ => {}
        }
        forced.cells[b - 1] = AbCell::One;
    }
    for cell in forced.cells.iter_mut() {
        if let AbCell::Prem(id) | AbCell::Conc(id) = *cell {
            if dissolved.contains(&id) {
                *cell = AbCell::One;
            }
        }
    }
    for id in shrunk.difference(&dissolved) {
        let has_conclusion = forced.cells.contains(&AbCell::Conc(*id));
        if !has_conclusion {
            if let Some(c) = forced.cells.iter_mut().find(|c| **c == AbCell::Prem(*id)) {
                *c = AbCell::Two;
            }
        }
    }
    Ok(alloc::vec![excluded, forced])
}

fn with_cell(r: &RowAb, position: usize, cell: AbCell) -> RowAb {
    let mut out = r.clone();
    out.cells[position - 1] = cell;
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AbStats {
    pub impositions: usize,
    /// Impositions that produced two rows.
    pub splits: usize,
}

/// Final rows over the input labels, in completion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AbEnumeration {
    pub rows: Vec<RowAb>,
    pub stats: AbStats,
}

impl AbEnumeration {
    /// Number of final rows `R`.
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Sum of the per-row cardinality polynomials.
    pub fn rank_polynomial(&self) -> RankPolynomial {
        self.rows.iter().map(cardinality_poly).fold(RankPolynomial::zero(), |acc, p| acc + p)
    }
}

/// All ideals of `p` as pairwise disjoint `{0,1,2,a,b}`-valued rows.
pub fn ab_enumerate(p: &Poset) -> AbEnumeration {
    let w = p.w();
    let ext = p.linear_extension();
    // Internal position i (1-based) holds element ext[i - 1].
    let to_internal: Vec<usize> = (1..=w).map(|e| p.extension_rank(e) + 1).collect();
    let covers: Vec<ElemSet> = ext.iter().map(|&e| p.lower_covers(e).map_labels(&to_internal)).collect();

    let mut stats = AbStats::default();
    let mut rows = Vec::new();
    let mut stack = alloc::vec![(RowAb::full(w), 1usize)];
    while let Some((row, next)) = stack.pop() {
        // Trivial implications are no-ops.
        let Some(j) = (next..=w).find(|&j| !covers[j - 1].is_empty()) else {
            rows.push(row.permuted(ext));
            continue;
        };
        stats.impositions += 1;
        let sons = ab_impose(&row, j, &covers[j - 1]).expect("linear-extension order keeps position j free");
        if sons.len() > 1 {
            stats.splits += 1;
        }
        for son in sons.into_iter().rev() {
            stack.push((son, j + 1));
        }
    }
    AbEnumeration { rows, stats }
}

/// `pol(r, x)`: the coefficient of `x^k` is the number of `k`-element members of `r`.
///
/// Each 1 contributes `x`, each 2 contributes `1 + x`, and a bundle with `m`
/// conclusion positions contributes `(1 + x)^m + x^(m+1)`.
pub fn cardinality_poly(r: &RowAb) -> RankPolynomial {
    let ones = r.cells().iter().filter(|&&c| c == AbCell::One).count();
    let twos = r.cells().iter().filter(|&&c| c == AbCell::Two).count();
    let mut poly = RankPolynomial::one_plus_x_pow(twos).shifted(ones);
    for bundle in r.bundles() {
        let m = bundle.conclusion.len();
        let factor = &RankPolynomial::one_plus_x_pow(m) + &RankPolynomial::monomial(m + 1);
        poly = &poly * &factor;
    }
    poly
}

/// The rank polynomial `sum_k N_k x^k` of the ideal lattice of `p`.
pub fn whitney(p: &Poset) -> RankPolynomial {
    ab_enumerate(p).rank_polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_bigint::BigUint;

    fn row(s: &str) -> RowAb {
        s.parse().unwrap()
    }

    #[test]
    fn single_bundle_from_all_twos() {
        // 6 and 7 precede 5 once relabeled; positions are what matter here.
        let out = ab_impose(&RowAb::full(7), 5, &ElemSet::from([6, 7])).unwrap();
        assert_eq!(out, vec![row("2 2 2 2 a1 b1 b1")]);
    }

    #[test]
    fn zero_in_conclusion() {
        let out = ab_impose(&row("0 2 2"), 3, &ElemSet::from([1])).unwrap();
        assert_eq!(out, vec![row("0 2 0")]);
    }

    #[test]
    fn ones_in_conclusion_carry_over() {
        let out = ab_impose(&row("1 1 2"), 3, &ElemSet::from([1, 2])).unwrap();
        assert_eq!(out, vec![row("1 1 2")]);
        let out = ab_impose(&row("1 2 2"), 3, &ElemSet::from([1, 2])).unwrap();
        assert_eq!(out, vec![row("1 b1 a1")]);
    }

    #[test]
    fn case_four_display() {
        // (b1, b2, 0, [b4 b2 a1 a2 b3 2], b3, a3, a4, j, 2)
        let r = row("b1 b2 0 b4 b2 a1 a2 b3 2 b3 a3 a4 2 2");
        let out = ab_impose(&r, 13, &ElemSet::from([4, 5, 6, 7, 8, 9])).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out[0], row("b1 b2 0 b4 b2 a1 a2 b3 2 b3 a3 a4 0 2"));
        assert_eq!(out[1], row("1 1 0 1 1 1 1 1 1 b3 a3 2 1 2"));
    }

    #[test]
    fn rejects_occupied_premise() {
        assert_eq!(ab_impose(&row("1 2"), 1, &ElemSet::new()), Err(ImposeError::PremiseNotFree(1)));
        assert!(matches!(
            ab_impose(&row("2 2"), 3, &ElemSet::new()),
            Err(ImposeError::OutOfRange { position: 3, w: 2 })
        ));
    }

    #[test]
    fn row5_polynomial() {
        let r = row("0 0 1 1 2 2 2 a1 b1 b1 a2 b2 b2 b2 a3 b3");
        let p = cardinality_poly(&r);
        assert_eq!(p.coeff(0), BigUint::from(0u32));
        assert_eq!(p.coeff(2), BigUint::from(1u32));
        assert_eq!(p.coeff(3), BigUint::from(9u32));
        assert_eq!(p.coeff(4), BigUint::from(37u32));
        assert_eq!(p.coeff(5), BigUint::from(93u32));
        assert_eq!(p.coeff(13), BigUint::from(6u32));
        assert_eq!(p.coeff(14), BigUint::from(1u32));
        assert_eq!(p.degree(), Some(14));
        assert_eq!(p.eval_one(), BigUint::from(1080u32));
        assert_eq!(p.eval_one(), r.count());
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(cardinality_poly(&row("2 2 2")), RankPolynomial::one_plus_x_pow(3));
        assert_eq!(cardinality_poly(&row("a1 b1 b1")), RankPolynomial::from_u64s(&[1, 2, 1, 1]));
    }

    #[test]
    fn antichain_single_row() {
        let out = ab_enumerate(&Poset::antichain(5));
        assert_eq!(out.rows, vec![RowAb::full(5)]);
        assert_eq!(whitney(&Poset::antichain(3)), RankPolynomial::one_plus_x_pow(3));
    }

    #[test]
    fn chain_ideals() {
        let out = ab_enumerate(&Poset::chain(3));
        let total: BigUint = out.rows.iter().map(RowAb::count).sum();
        assert_eq!(total, BigUint::from(4u32));
        assert_eq!(whitney(&Poset::chain(3)), RankPolynomial::from_u64s(&[1, 1, 1, 1]));
    }

    #[test]
    fn rows_map_back_to_input_labels() {
        // 3 < 1: the extension is [2, 3, 1] and the only ideals are ∅, {2}, {3}, {2,3}, {1,3}, {1,2,3}.
        let p = Poset::from_relations(3, &[(3, 1)]).unwrap();
        let out = ab_enumerate(&p);
        for r in &out.rows {
            for x in 0u32..8 {
                let set: ElemSet = (1..=3).filter(|e| x >> (e - 1) & 1 == 1).collect();
                if r.contains(&set) {
                    assert!(p.is_ideal(&set), "{set} in {r}");
                }
            }
        }
        assert_eq!(out.rank_polynomial().eval_one(), BigUint::from(6u32));
    }
}
