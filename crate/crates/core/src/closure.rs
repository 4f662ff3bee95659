//! Closure under an implicational base by counter-based forward chaining.
//!
//! Each implication keeps a countdown of premise elements not yet derived;
//! every derived element is dequeued once and decrements the counters of the
//! implications watching it. A full closure costs `O(||Σ|| + w)`.

use alloc::vec::Vec;

use crate::implication::ImplicationFamily;
use crate::set::ElemSet;

/// Work counters of one closure computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ChainingWork {
    /// Elements taken off the queue.
    pub dequeued: usize,
    /// Premise-counter decrements.
    pub decrements: usize,
    /// Implications whose counter reached zero.
    pub fired: usize,
}

/// Per-element watch lists for a family, built once and reused across
/// closure queries.
#[derive(Clone, Debug)]
pub struct ClosureIndex<'a> {
    family: &'a ImplicationFamily,
    watchers: Vec<Vec<usize>>,
    premise_sizes: Vec<usize>,
}

impl<'a> ClosureIndex<'a> {
    pub fn new(family: &'a ImplicationFamily) -> Self {
        let mut watchers = alloc::vec![Vec::new(); family.w()];
        let mut premise_sizes = Vec::with_capacity(family.len());
        for (i, imp) in family.iter().enumerate() {
            premise_sizes.push(imp.premise().len());
            for a in imp.premise() {
                watchers[a - 1].push(i);
            }
        }
        ClosureIndex { family, watchers, premise_sizes }
    }

    pub fn family(&self) -> &ImplicationFamily {
        self.family
    }

    pub fn close(&self, seed: &ElemSet) -> ElemSet {
        self.close_counted(seed).0
    }

    pub fn close_counted(&self, seed: &ElemSet) -> (ElemSet, ChainingWork) {
        let mut work = ChainingWork::default();
        let mut counters = self.premise_sizes.clone();
        let mut closed = seed.clone();
        let mut queue: Vec<usize> = seed.iter().filter(|&e| e <= self.family.w()).collect();

        let fire = |i: usize, closed: &mut ElemSet, queue: &mut Vec<usize>| {
            for b in self.family.implications()[i].conclusion() {
                if closed.insert(b) {
                    queue.push(b);
                }
            }
        };

        for (i, &size) in self.premise_sizes.iter().enumerate() {
            if size == 0 {
                work.fired += 1;
                fire(i, &mut closed, &mut queue);
            }
        }
        while let Some(e) = queue.pop() {
            work.dequeued += 1;
            for &i in &self.watchers[e - 1] {
                work.decrements += 1;
                counters[i] -= 1;
                if counters[i] == 0 {
                    work.fired += 1;
                    fire(i, &mut closed, &mut queue);
                }
            }
        }
        (closed, work)
    }
}

/// The smallest model of `family` containing `seed`.
pub fn close(seed: &ElemSet, family: &ImplicationFamily) -> ElemSet {
    ClosureIndex::new(family).close(seed)
}

/// `true` iff `x` satisfies every implication of `family`.
pub fn is_model(x: &ElemSet, family: &ImplicationFamily) -> bool {
    family.iter().all(|imp| imp.is_satisfied_by(x))
}
