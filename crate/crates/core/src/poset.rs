//! Finite posets on `{1, ..., w}`.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::PosetError;
use crate::set::ElemSet;

/// A partial order with precomputed principal ideals and filters, lower
/// covers, and a fixed linear extension.
///
/// The linear extension is the ascending topological order with ties broken
/// by smallest label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    w: usize,
    down: Vec<ElemSet>,
    up: Vec<ElemSet>,
    lower_covers: Vec<ElemSet>,
    extension: Vec<usize>,
    rank_in_extension: Vec<usize>,
}

impl Poset {
    /// Builds the order generated by `u < v` for every pair. The transitive
    /// closure is taken and the cover relation derived by transitive reduction.
    pub fn from_relations(w: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut succ = alloc::vec![Vec::new(); w];
        let mut indeg = alloc::vec![0usize; w];
        for &(u, v) in relations {
            for e in [u, v] {
                if e == 0 || e > w {
                    return Err(PosetError::OutOfRange { element: e, w });
                }
            }
            if u == v {
                return Err(PosetError::Reflexive(u));
            }
            succ[u - 1].push(v);
            indeg[v - 1] += 1;
        }

        // Kahn's algorithm; a min-heap gives the smallest-label tie-break.
        let mut heap: BinaryHeap<Reverse<usize>> =
            (1..=w).filter(|&e| indeg[e - 1] == 0).map(Reverse).collect();
        let mut extension = Vec::with_capacity(w);
        while let Some(Reverse(e)) = heap.pop() {
            extension.push(e);
            for &v in &succ[e - 1] {
                indeg[v - 1] -= 1;
                if indeg[v - 1] == 0 {
                    heap.push(Reverse(v));
                }
            }
        }
        if extension.len() < w {
            let stuck = (1..=w).find(|&e| indeg[e - 1] > 0).unwrap_or(1);
            return Err(PosetError::Cycle(stuck));
        }

        let mut preds = alloc::vec![Vec::new(); w];
        for &(u, v) in relations {
            preds[v - 1].push(u);
        }
        let mut down = alloc::vec![ElemSet::new(); w];
        for &e in &extension {
            let mut d = ElemSet::singleton(e);
            for &p in &preds[e - 1] {
                d.union_with(&down[p - 1]);
            }
            down[e - 1] = d;
        }
        Ok(Self::from_down_sets(w, down, extension))
    }

    fn from_down_sets(w: usize, down: Vec<ElemSet>, extension: Vec<usize>) -> Self {
        let mut up = alloc::vec![ElemSet::new(); w];
        for (i, d) in down.iter().enumerate() {
            for p in d {
                up[p - 1].insert(i + 1);
            }
        }
        let lower_covers = (1..=w)
            .map(|e| {
                let mut strict = down[e - 1].clone();
                strict.remove(e);
                let mut covered = ElemSet::new();
                for p in &strict {
                    let mut below = down[p - 1].clone();
                    below.remove(p);
                    covered.union_with(&below);
                }
                strict.difference(&covered)
            })
            .collect();
        let mut rank_in_extension = alloc::vec![0; w];
        for (i, &e) in extension.iter().enumerate() {
            rank_in_extension[e - 1] = i;
        }
        Poset { w, down, up, lower_covers, extension, rank_in_extension }
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_relations(n, &[]).expect("antichain is a valid poset")
    }

    /// The chain `1 < 2 < ... < n`.
    pub fn chain(n: usize) -> Self {
        let rel: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_relations(n, &rel).expect("chain is a valid poset")
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// `a <= b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b - 1].contains(a)
    }

    /// The principal ideal `a↓ = {p : p <= a}`.
    pub fn down(&self, a: usize) -> &ElemSet {
        &self.down[a - 1]
    }

    /// The principal filter `a↑ = {p : p >= a}`.
    pub fn up(&self, a: usize) -> &ElemSet {
        &self.up[a - 1]
    }

    pub fn lower_covers(&self, a: usize) -> &ElemSet {
        &self.lower_covers[a - 1]
    }

    pub fn linear_extension(&self) -> &[usize] {
        &self.extension
    }

    /// 0-based position of `a` in the linear extension.
    pub fn extension_rank(&self, a: usize) -> usize {
        self.rank_in_extension[a - 1]
    }

    /// Cover pairs `(u, v)` with `u` covered by `v`, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.w)
            .flat_map(|v| self.lower_covers[v - 1].iter().map(move |u| (u, v)))
            .collect::<alloc::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn is_antichain(&self) -> bool {
        self.down.iter().all(|d| d.len() == 1)
    }

    /// The order filter generated by `set`.
    pub fn up_closure(&self, set: &ElemSet) -> ElemSet {
        let mut out = ElemSet::new();
        for y in set {
            out.union_with(&self.up[y - 1]);
        }
        out
    }

    pub fn down_closure(&self, set: &ElemSet) -> ElemSet {
        let mut out = ElemSet::new();
        for y in set {
            out.union_with(&self.down[y - 1]);
        }
        out
    }

    pub fn is_ideal(&self, set: &ElemSet) -> bool {
        set.iter().all(|x| x <= self.w && self.down[x - 1].is_subset(set))
    }
}
