//! Exhaustive reference answers, independent of the row-based algorithms.

use alloc::vec::Vec;

use crate::closure::is_model;
use crate::error::GuardError;
use crate::implication::ImplicationFamily;
use crate::poly::RankPolynomial;
use crate::poset::Poset;
use crate::set::ElemSet;
use crate::tree::Tree;

pub const IDEAL_LIMIT: usize = 24;
pub const MODEL_LIMIT: usize = 20;
pub const SUBTREE_LIMIT: usize = 24;

/// Default cap on the number of ideals [`brute_ideals`] will materialize.
pub const DEFAULT_IDEAL_CAP: usize = 1 << 24;

/// All ideals of `p`, by depth-first extension along the linear extension.
pub fn brute_ideals(p: &Poset) -> Result<Vec<ElemSet>, GuardError> {
    brute_ideals_capped(p, DEFAULT_IDEAL_CAP)
}

pub fn brute_ideals_capped(p: &Poset, cap: usize) -> Result<Vec<ElemSet>, GuardError> {
    if p.w() > IDEAL_LIMIT {
        return Err(GuardError::UniverseTooLarge { w: p.w(), limit: IDEAL_LIMIT });
    }
    let mut out = Vec::new();
    let mut current = ElemSet::new();
    extend_ideals(p, 0, &mut current, &mut out, cap)?;
    Ok(out)
}

fn extend_ideals(
    p: &Poset,
    depth: usize,
    current: &mut ElemSet,
    out: &mut Vec<ElemSet>,
    cap: usize,
) -> Result<(), GuardError> {
    let Some(&e) = p.linear_extension().get(depth) else {
        if out.len() >= cap {
            return Err(GuardError::OutputCap { cap });
        }
        out.push(current.clone());
        return Ok(());
    };
    extend_ideals(p, depth + 1, current, out, cap)?;
    if p.lower_covers(e).is_subset(current) {
        current.insert(e);
        extend_ideals(p, depth + 1, current, out, cap)?;
        current.remove(e);
    }
    Ok(())
}

/// Ideal counts grouped by cardinality.
pub fn brute_rank_polynomial(p: &Poset) -> Result<RankPolynomial, GuardError> {
    let ideals = brute_ideals(p)?;
    let mut counts = alloc::vec![0u64; p.w() + 1];
    for x in &ideals {
        counts[x.len()] += 1;
    }
    Ok(RankPolynomial::from_u64s(&counts))
}

/// All models of `family` by sweeping the powerset.
pub fn brute_models(family: &ImplicationFamily) -> Result<Vec<ElemSet>, GuardError> {
    let w = family.w();
    if w > MODEL_LIMIT {
        return Err(GuardError::UniverseTooLarge { w, limit: MODEL_LIMIT });
    }
    Ok((0u32..1 << w)
        .map(|mask| (1..=w).filter(|e| mask >> (e - 1) & 1 == 1).collect::<ElemSet>())
        .filter(|x| is_model(x, family))
        .collect())
}

/// All `k`-vertex subtrees. Every nonempty subtree is grown downward from
/// its vertex closest to vertex 1.
pub fn brute_subtrees(t: &Tree, k: usize) -> Result<Vec<ElemSet>, GuardError> {
    let w = t.w();
    if w > SUBTREE_LIMIT {
        return Err(GuardError::UniverseTooLarge { w, limit: SUBTREE_LIMIT });
    }
    if k == 0 {
        return Ok(alloc::vec![ElemSet::new()]);
    }
    let (parent, _) = t.rooted(1);
    let children: Vec<Vec<usize>> =
        (1..=w).map(|v| t.neighbors(v).iter().copied().filter(|&c| parent[c - 1] == v).collect()).collect();

    // Connected sets of at most k vertices containing `v` and lying below it.
    fn grow(v: usize, k: usize, children: &[Vec<usize>]) -> Vec<ElemSet> {
        let mut partial = alloc::vec![ElemSet::singleton(v)];
        for &c in &children[v - 1] {
            let below = grow(c, k, children);
            let mut next = Vec::new();
            for s in &partial {
                next.push(s.clone());
                for b in &below {
                    if s.len() + b.len() <= k {
                        next.push(s.union(b));
                    }
                }
            }
            partial = next;
        }
        partial
    }

    let mut out: Vec<ElemSet> =
        (1..=w).flat_map(|v| grow(v, k, &children)).filter(|s| s.len() == k).collect();
    out.sort();
    Ok(out)
}
