//! Bitset over 1-based element labels.

use alloc::vec::Vec;
use core::fmt;

const BITS: usize = 64;

/// A finite set of positive element labels, stored as a trimmed bit vector.
///
/// Label `e` occupies bit `e - 1`. Trailing zero words are never stored, so
/// structural equality is set equality and the derived ordering is total.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub const fn new() -> Self {
        ElemSet { words: Vec::new() }
    }

    /// `{1, ..., w}`.
    pub fn full(w: usize) -> Self {
        let mut words = alloc::vec![u64::MAX; w / BITS];
        if !w.is_multiple_of(BITS) {
            words.push((1u64 << (w % BITS)) - 1);
        }
        ElemSet { words }
    }

    pub fn singleton(e: usize) -> Self {
        let mut s = ElemSet::new();
        s.insert(e);
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        debug_assert!(e >= 1, "element labels are 1-based");
        let (w, b) = ((e - 1) / BITS, (e - 1) % BITS);
        self.words.get(w).is_some_and(|word| word >> b & 1 == 1)
    }

    /// Returns `true` if `e` was newly inserted.
    pub fn insert(&mut self, e: usize) -> bool {
        assert!(e >= 1, "element labels are 1-based");
        let (w, b) = ((e - 1) / BITS, (e - 1) % BITS);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] >> b & 1 == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    /// Returns `true` if `e` was present.
    pub fn remove(&mut self, e: usize) -> bool {
        if e == 0 || !self.contains(e) {
            return false;
        }
        let (w, b) = ((e - 1) / BITS, (e - 1) % BITS);
        self.words[w] &= !(1 << b);
        self.trim();
        true
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest element, if any.
    pub fn last(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * BITS + (BITS - last.leading_zeros() as usize))
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.len() <= other.words.len() && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        self.words.truncate(other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.trim();
    }

    pub fn difference_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        self.trim();
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// Size of the intersection without materializing it.
    pub fn intersection_len(&self, other: &ElemSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Applies a relabeling `e -> map[e - 1]` to every element.
    pub fn map_labels(&self, map: &[usize]) -> ElemSet {
        self.iter().map(|e| map[e - 1]).collect()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::new();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for ElemSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

impl Extend<usize> for ElemSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for e in iter {
            self.insert(e);
        }
    }
}

impl<'a> IntoIterator for &'a ElemSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Ascending iterator over the elements of an [`ElemSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * BITS + tz + 1);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// Renders as `{e1,e2,...}` in ascending order.
impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
