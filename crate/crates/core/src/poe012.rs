//! The 0,1,2-algorithm.
//!
//! Implications are imposed one at a time on a LIFO working stack of
//! `{0,1,2}`-valued rows. Each imposition replaces the topmost row by
//! pairwise disjoint sons whose union is exactly the part of the row that
//! satisfies the implication; rows with nothing left pending move to the
//! final stack. The final rows partition the model set.
//!
//! [`enumerate_k_models`] is the deletion-free variant for models of a fixed
//! cardinality `k`: every candidate son is tested for containing a `k`-element
//! model before it is pushed, so no row is ever wastefully deleted.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::closure::{is_model, ClosureIndex};
use crate::error::GuardError;
use crate::implication::{Implication, ImplicationFamily};
use crate::row::{Row012, Trit};
use crate::set::ElemSet;

/// Requested model cardinality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cardinality {
    Any,
    Exactly(usize),
}

impl Cardinality {
    fn admits(self, n: usize) -> bool {
        match self {
            Cardinality::Any => true,
            Cardinality::Exactly(k) => n == k,
        }
    }
}

/// Disjoint-extension test: is there a model `Z` with `ones ⊆ Z`,
/// `Z ∩ zeros = ∅` and `|Z|` matching `target`?
///
/// The engine always passes a closed `ones` set. Implementations must be
/// reentrant.
pub trait FeasibilityOracle {
    fn is_feasible(&self, ones: &ElemSet, zeros: &ElemSet, target: Cardinality) -> bool;
}

impl<F> FeasibilityOracle for F
where
    F: Fn(&ElemSet, &ElemSet, Cardinality) -> bool,
{
    fn is_feasible(&self, ones: &ElemSet, zeros: &ElemSet, target: Cardinality) -> bool {
        self(ones, zeros, target)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Implications imposed on a row.
    pub impositions: usize,
    pub candidate_sons: usize,
    /// Candidate sons rejected by the feasibility test.
    pub killed_candidates: usize,
    /// Rows that produced no proper son.
    pub wasteful_deletions: usize,
    pub oracle_queries: usize,
    pub final_rows: usize,
}

/// Final rows in the order they were completed, plus engine statistics.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FinalStack {
    pub rows: Vec<Row012>,
    pub stats: Stats,
}

impl FinalStack {
    /// Total number of sets represented.
    pub fn count(&self) -> BigUint {
        self.rows.iter().map(Row012::count).sum()
    }

    /// Number of `k`-element members.
    pub fn count_k(&self, k: usize) -> usize {
        self.rows.iter().map(|r| r.k_sets(k).count()).sum()
    }

    /// The `k`-element members, in row order then combination order.
    pub fn k_sets(&self, k: usize) -> impl Iterator<Item = ElemSet> + '_ {
        self.rows.iter().flat_map(move |r| r.k_sets(k))
    }

    /// Every member, in row order.
    pub fn members(&self) -> impl Iterator<Item = ElemSet> + '_ {
        self.rows.iter().flat_map(Row012::members)
    }

    /// Applies a position relabeling to every row.
    pub fn relabeled(&self, map: &[usize]) -> FinalStack {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut cells = alloc::vec![Trit::Two; r.w()];
                for (i, &c) in r.cells().iter().enumerate() {
                    cells[map[i] - 1] = c;
                }
                Row012::from_cells(cells).with_pending(r.pending())
            })
            .collect();
        FinalStack { rows, stats: self.stats }
    }
}

/// Imposes `imp` on `r`. The returned rows are pairwise disjoint and their
/// union is `{X ∈ r : X satisfies imp}`; an empty result means `r` holds no
/// satisfying set. Sons carry `r.pending() + 1`.
///
/// The 0-branches over the free premise positions form a staircase
/// ("flag") in ascending position order; when no conclusion position is 0 a
/// final son sets every premise and conclusion position to 1.
pub fn candidate_sons(r: &Row012, imp: &Implication) -> Vec<Row012> {
    let next = r.pending() + 1;
    let premise_blocked = imp.premise().iter().any(|a| r.get(a) == Trit::Zero);
    let concluded = imp.conclusion().iter().all(|b| r.get(b) == Trit::One);
    if premise_blocked || concluded {
        return alloc::vec![r.clone().with_pending(next)];
    }

    let free_premise: Vec<usize> = imp.premise().iter().filter(|&a| r.get(a) == Trit::Two).collect();
    let conclusion_blocked = imp.conclusion().iter().any(|b| r.get(b) == Trit::Zero);

    let mut sons = Vec::with_capacity(free_premise.len() + 1);
    for (i, &pos) in free_premise.iter().enumerate() {
        let mut son = r.clone().with_pending(next);
        for &earlier in &free_premise[..i] {
            son.set(earlier, Trit::One);
        }
        son.set(pos, Trit::Zero);
        sons.push(son);
    }
    if !conclusion_blocked {
        let mut son = r.clone().with_pending(next);
        for p in imp.premise().iter().chain(imp.conclusion().iter()) {
            son.set(p, Trit::One);
        }
        sons.push(son);
    }
    sons
}

/// All models of `family` as a disjoint union of rows.
pub fn enumerate_models(family: &ImplicationFamily) -> FinalStack {
    run(family, Row012::full(family.w()), |_| true)
}

/// The `k`-element models of `family`, without wasteful deletions.
///
/// A candidate son is kept iff `Z0 = cl(ones(son))` has at most `k`
/// elements, avoids `zeros(son)`, and `oracle(Z0, zeros(son), k)` holds.
pub fn enumerate_k_models<O>(family: &ImplicationFamily, k: usize, oracle: &O) -> FinalStack
where
    O: FeasibilityOracle + ?Sized,
{
    let index = ClosureIndex::new(family);
    enumerate_k_models_with(family, k, oracle, |seed| index.close(seed))
}

/// [`enumerate_k_models`] with a caller-supplied closure operator, which
/// must agree with closure under `family`.
pub fn enumerate_k_models_with<O, C>(
    family: &ImplicationFamily,
    k: usize,
    oracle: &O,
    closure: C,
) -> FinalStack
where
    O: FeasibilityOracle + ?Sized,
    C: Fn(&ElemSet) -> ElemSet,
{
    let mut queries = 0usize;
    let mut feasible = |row: &Row012| {
        let zeros = row.zeros();
        let z0 = closure(&row.ones());
        if z0.len() > k || !z0.is_disjoint(&zeros) {
            return false;
        }
        queries += 1;
        oracle.is_feasible(&z0, &zeros, Cardinality::Exactly(k))
    };
    let root = Row012::full(family.w());
    if k > family.w() || !feasible(&root) {
        return FinalStack { rows: Vec::new(), stats: Stats { oracle_queries: queries, ..Stats::default() } };
    }
    let mut out = run(family, root, &mut feasible);
    out.stats.oracle_queries = queries;
    out
}

fn run(family: &ImplicationFamily, root: Row012, mut keep: impl FnMut(&Row012) -> bool) -> FinalStack {
    let h = family.len();
    let mut stats = Stats::default();
    let mut rows = Vec::new();
    let mut stack = alloc::vec![root];

    while let Some(row) = stack.pop() {
        if row.pending() > h {
            rows.push(row);
            continue;
        }
        stats.impositions += 1;
        let imp = &family.implications()[row.pending() - 1];
        let sons = candidate_sons(&row, imp);
        stats.candidate_sons += sons.len();
        let before = stack.len();
        // Reverse push puts the first-listed son on top.
        for son in sons.into_iter().rev() {
            if keep(&son) {
                stack.push(son);
            } else {
                stats.killed_candidates += 1;
            }
        }
        if stack.len() == before {
            stats.wasteful_deletions += 1;
        }
    }
    stats.final_rows = rows.len();
    FinalStack { rows, stats }
}

/// Largest universe the exhaustive oracle accepts.
pub const BRUTE_ORACLE_LIMIT: usize = 24;

/// Exhaustive feasibility oracle for an arbitrary family.
#[derive(Clone, Copy, Debug)]
pub struct BruteOracle<'a> {
    family: &'a ImplicationFamily,
}

/// Refuses universes larger than [`BRUTE_ORACLE_LIMIT`].
pub fn brute_oracle(family: &ImplicationFamily) -> Result<BruteOracle<'_>, GuardError> {
    if family.w() > BRUTE_ORACLE_LIMIT {
        return Err(GuardError::UniverseTooLarge { w: family.w(), limit: BRUTE_ORACLE_LIMIT });
    }
    Ok(BruteOracle { family })
}

impl FeasibilityOracle for BruteOracle<'_> {
    fn is_feasible(&self, ones: &ElemSet, zeros: &ElemSet, target: Cardinality) -> bool {
        if !ones.is_disjoint(zeros) {
            return false;
        }
        let free: Vec<usize> =
            (1..=self.family.w()).filter(|&e| !ones.contains(e) && !zeros.contains(e)).collect();
        (0u32..1 << free.len()).any(|mask| {
            if !target.admits(ones.len() + mask.count_ones() as usize) {
                return false;
            }
            let mut x = ones.clone();
            x.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e));
            is_model(&x, self.family)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::toy_family;
    use alloc::vec;

    fn imp(a: &[usize], b: &[usize]) -> Implication {
        Implication::new(a.iter().copied().collect(), b.iter().copied().collect())
    }

    fn cells(rows: &[Row012]) -> Vec<&[Trit]> {
        rows.iter().map(Row012::cells).collect()
    }

    #[test]
    fn sons_single_premise_split() {
        let sons = candidate_sons(&Row012::full(7), &imp(&[5], &[6, 7]));
        assert_eq!(
            cells(&sons),
            vec![
                Row012::from_digits(&[2, 2, 2, 2, 0, 2, 2]).cells(),
                Row012::from_digits(&[2, 2, 2, 2, 1, 1, 1]).cells(),
            ]
        );
        assert!(sons.iter().all(|s| s.pending() == 2));
    }

    #[test]
    fn sons_flag_and_filler() {
        let r = Row012::from_digits(&[2, 2, 2, 2, 0, 0, 2]);
        let sons = candidate_sons(&r, &imp(&[1, 2, 3], &[7]));
        let expected =
            [[0, 2, 2, 2, 0, 0, 2], [1, 0, 2, 2, 0, 0, 2], [1, 1, 0, 2, 0, 0, 2], [1, 1, 1, 2, 0, 0, 1]];
        assert_eq!(sons.len(), 4);
        for (s, e) in sons.iter().zip(expected) {
            assert_eq!(s.cells(), Row012::from_digits(&e).cells());
        }
    }

    #[test]
    fn sons_blocked_conclusion() {
        let r = Row012::from_digits(&[0, 2, 2, 2, 0, 0, 2]);
        let sons = candidate_sons(&r, &imp(&[3], &[4, 5]));
        assert_eq!(cells(&sons), vec![Row012::from_digits(&[0, 2, 0, 2, 0, 0, 2]).cells()]);

        let r = Row012::from_digits(&[1, 1, 1, 2, 0, 0, 1]);
        assert!(candidate_sons(&r, &imp(&[3], &[4, 5])).is_empty());
    }

    #[test]
    fn toy_final_stack() {
        let out = enumerate_models(&toy_family());
        let expected =
            [[0, 2, 0, 2, 0, 0, 2], [1, 0, 0, 2, 0, 0, 2], [1, 1, 0, 2, 0, 0, 2], [2, 2, 1, 1, 1, 1, 1]];
        assert_eq!(out.rows.len(), 4);
        for (r, e) in out.rows.iter().zip(expected) {
            assert_eq!(r.cells(), Row012::from_digits(&e).cells());
            assert_eq!(r.pending(), 5);
        }
        assert_eq!(out.count(), BigUint::from(20u32));
        assert!(out.stats.wasteful_deletions > 0);
    }

    #[test]
    fn empty_family_single_row() {
        let out = enumerate_models(&ImplicationFamily::empty(3));
        assert_eq!(out.rows, vec![Row012::full(3)]);
    }

    #[test]
    fn mutual_implication() {
        let fam = ImplicationFamily::from_pairs(2, &[(&[1], &[2]), (&[2], &[1])]).unwrap();
        let mut members: Vec<_> = enumerate_models(&fam).members().collect();
        members.sort();
        let mut expected = vec![ElemSet::new(), ElemSet::from([1, 2])];
        expected.sort();
        assert_eq!(members, expected);
    }

    #[test]
    fn toy_k_models() {
        let fam = toy_family();
        let oracle = brute_oracle(&fam).unwrap();
        let out = enumerate_k_models(&fam, 3, &oracle);
        let mut got: Vec<_> = out.k_sets(3).collect();
        got.sort();
        let mut want = vec![
            ElemSet::from([1, 2, 4]),
            ElemSet::from([1, 2, 7]),
            ElemSet::from([1, 4, 7]),
            ElemSet::from([2, 4, 7]),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(out.stats.wasteful_deletions, 0);
        assert!(out.stats.final_rows <= 4);

        let zero: Vec<_> = enumerate_k_models(&fam, 0, &oracle).k_sets(0).collect();
        assert_eq!(zero, vec![ElemSet::new()]);
        let full: Vec<_> = enumerate_k_models(&fam, 7, &oracle).k_sets(7).collect();
        assert_eq!(full, vec![ElemSet::full(7)]);
        assert!(enumerate_k_models(&fam, 8, &oracle).rows.is_empty());
    }

    #[test]
    fn brute_oracle_examples() {
        let fam = toy_family();
        let oracle = brute_oracle(&fam).unwrap();
        // cl({5}) = {3,4,5,6,7}, so no 3-element model contains 5.
        assert!(!oracle.is_feasible(&ElemSet::from([5]), &ElemSet::new(), Cardinality::Exactly(3)));
        assert!(oracle.is_feasible(&ElemSet::from([5]), &ElemSet::new(), Cardinality::Exactly(5)));
        assert!(oracle.is_feasible(&ElemSet::new(), &ElemSet::full(7), Cardinality::Exactly(0)));
        assert!(!oracle.is_feasible(&ElemSet::from([1]), &ElemSet::from([1]), Cardinality::Any));
    }

    #[test]
    fn brute_oracle_guard() {
        let fam = ImplicationFamily::empty(25);
        assert_eq!(brute_oracle(&fam).unwrap_err(), GuardError::UniverseTooLarge { w: 25, limit: 24 });
    }
}
