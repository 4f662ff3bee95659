//! Implications `A -> B` over a universe `{1, ..., w}`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::FamilyError;
use crate::set::ElemSet;

/// A single implication. The conclusion never overlaps the premise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Implication {
    premise: ElemSet,
    conclusion: ElemSet,
}

impl Implication {
    /// Builds `premise -> conclusion \ premise`.
    pub fn new(premise: ElemSet, conclusion: ElemSet) -> Self {
        let conclusion = conclusion.difference(&premise);
        Implication { premise, conclusion }
    }

    pub fn premise(&self) -> &ElemSet {
        &self.premise
    }

    pub fn conclusion(&self) -> &ElemSet {
        &self.conclusion
    }

    pub fn is_trivial(&self) -> bool {
        self.conclusion.is_empty()
    }

    /// `|A| + |B|`.
    pub fn length(&self) -> usize {
        self.premise.len() + self.conclusion.len()
    }

    pub fn is_satisfied_by(&self, x: &ElemSet) -> bool {
        !self.premise.is_subset(x) || self.conclusion.is_subset(x)
    }
}

impl fmt::Display for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.premise, self.conclusion)
    }
}

impl fmt::Debug for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An ordered family of implications over `{1, ..., w}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationFamily {
    w: usize,
    implications: Vec<Implication>,
}

impl ImplicationFamily {
    pub fn new(w: usize, implications: Vec<Implication>) -> Result<Self, FamilyError> {
        for imp in &implications {
            if let Some(element) = imp.premise.last().max(imp.conclusion.last()) {
                if element > w {
                    return Err(FamilyError::OutOfRange { element, w });
                }
            }
        }
        Ok(ImplicationFamily { w, implications })
    }

    /// Convenience constructor from `(premise, conclusion)` slices.
    pub fn from_pairs(w: usize, pairs: &[(&[usize], &[usize])]) -> Result<Self, FamilyError> {
        let implications = pairs
            .iter()
            .map(|(a, b)| Implication::new(a.iter().copied().collect(), b.iter().copied().collect()))
            .collect();
        Self::new(w, implications)
    }

    pub fn empty(w: usize) -> Self {
        ImplicationFamily { w, implications: Vec::new() }
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// Number of implications `h`.
    pub fn len(&self) -> usize {
        self.implications.len()
    }

    pub fn is_empty(&self) -> bool {
        self.implications.is_empty()
    }

    pub fn implications(&self) -> &[Implication] {
        &self.implications
    }

    pub fn get(&self, index: usize) -> Option<&Implication> {
        self.implications.get(index)
    }

    /// Sum of the implication lengths.
    pub fn total_length(&self) -> usize {
        self.implications.iter().map(Implication::length).sum()
    }

    /// Upper bound on the number of candidate sons of one imposition:
    /// `max |A| + 1` over the family (1 for an empty family).
    pub fn max_sons(&self) -> usize {
        self.implications.iter().map(|i| i.premise.len() + 1).max().unwrap_or(1)
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Implication> {
        self.implications.iter()
    }
}

impl<'a> IntoIterator for &'a ImplicationFamily {
    type Item = &'a Implication;
    type IntoIter = core::slice::Iter<'a, Implication>;
    fn into_iter(self) -> Self::IntoIter {
        self.implications.iter()
    }
}
