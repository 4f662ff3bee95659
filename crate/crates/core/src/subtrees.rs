//! Subtrees (connected vertex sets) of fixed cardinality.

use alloc::vec::Vec;

use crate::implication::{Implication, ImplicationFamily};
use crate::poe012::{enumerate_k_models_with, Cardinality, FeasibilityOracle, FinalStack};
use crate::set::ElemSet;
use crate::tree::Tree;

/// `{u, v} -> interior(path(u, v))` for every non-adjacent pair, longest
/// paths first, ties in lexicographic order of `(u, v)`.
pub fn tree_base(t: &Tree) -> ImplicationFamily {
    let w = t.w();
    let mut entries: Vec<(usize, usize, usize, ElemSet)> = Vec::new();
    for u in 1..=w {
        let (parent, _) = t.rooted(u);
        for v in u + 1..=w {
            if t.adjacent(u, v) {
                continue;
            }
            let mut interior = ElemSet::new();
            let mut x = parent[v - 1];
            while x != u {
                interior.insert(x);
                x = parent[x - 1];
            }
            entries.push((interior.len(), u, v, interior));
        }
    }
    entries.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let implications = entries
        .into_iter()
        .map(|(_, u, v, interior)| Implication::new(ElemSet::from([u, v]), interior))
        .collect();
    ImplicationFamily::new(w, implications).expect("tree vertices stay inside the universe")
}

/// The smallest subtree containing `s`: the union of the paths between its
/// vertices. Runs in `O(w)`.
pub fn steiner_closure(t: &Tree, s: &ElemSet) -> ElemSet {
    let Some(root) = s.first() else {
        return ElemSet::new();
    };
    let (parent, order) = t.rooted(root);
    // A vertex is kept iff its rooted subtree meets `s`.
    let mut hit = alloc::vec![false; t.w()];
    for &v in order.iter().rev() {
        if s.contains(v) {
            hit[v - 1] = true;
        }
        if hit[v - 1] && v != root {
            hit[parent[v - 1] - 1] = true;
        }
    }
    (1..=t.w()).filter(|&v| hit[v - 1]).collect()
}

/// Extension test for subtrees: a `k`-vertex subtree extends `Z0` and
/// avoids `Y` iff the component of `Z0` in the forest `V \ Y` has at
/// least `k` vertices.
#[derive(Clone, Copy, Debug)]
pub struct SubtreeOracle<'a> {
    tree: &'a Tree,
}

pub fn subtree_oracle(t: &Tree) -> SubtreeOracle<'_> {
    SubtreeOracle { tree: t }
}

impl SubtreeOracle<'_> {
    fn largest_component(&self, blocked: &ElemSet) -> usize {
        let mut seen = blocked.clone();
        let mut best = 0;
        for v in 1..=self.tree.w() {
            if !seen.contains(v) {
                let c = self.tree.component(v, blocked);
                best = best.max(c.len());
                seen.union_with(&c);
            }
        }
        best
    }
}

impl FeasibilityOracle for SubtreeOracle<'_> {
    fn is_feasible(&self, ones: &ElemSet, zeros: &ElemSet, target: Cardinality) -> bool {
        if !ones.is_disjoint(zeros) {
            return false;
        }
        let Some(start) = ones.first() else {
            return match target {
                Cardinality::Any => true,
                Cardinality::Exactly(0) => true,
                Cardinality::Exactly(k) => self.largest_component(zeros) >= k,
            };
        };
        let component = self.tree.component(start, zeros);
        if !ones.is_subset(&component) {
            return false;
        }
        match target {
            Cardinality::Any => true,
            Cardinality::Exactly(k) => ones.len() <= k && k <= component.len(),
        }
    }
}

/// The `k`-vertex subtrees of `t`. The empty set is the only 0-vertex subtree.
pub fn enumerate_k_subtrees(t: &Tree, k: usize) -> FinalStack {
    let family = tree_base(t);
    enumerate_k_models_with(&family, k, &subtree_oracle(t), |seed| steiner_closure(t, seed))
}

pub fn k_subtrees(t: &Tree, k: usize) -> Vec<ElemSet> {
    enumerate_k_subtrees(t, k).k_sets(k).collect()
}
