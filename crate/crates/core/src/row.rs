//! Wildcard rows: `{0,1,2}`-valued rows (powerset intervals) and
//! `{0,1,2,a,b}`-valued rows (intervals refined by premise/conclusion bundles).
//!
//! Positions are 1-based. Both row kinds render as space-separated tokens
//! `0`, `1`, `2`, `a<i>`, `b<i>`, one per position.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::RowParseError;
use crate::set::ElemSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Trit {
    Zero,
    One,
    Two,
}

impl Trit {
    fn token(self) -> &'static str {
        match self {
            Trit::Zero => "0",
            Trit::One => "1",
            Trit::Two => "2",
        }
    }
}

/// A `{0,1,2}`-valued row: the family `{X : ones ⊆ X ⊆ ones ∪ twos}`,
/// together with the index of the next implication to impose on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Row012 {
    cells: Vec<Trit>,
    pending: usize,
}

impl Row012 {
    /// The all-2 row (the whole powerset) with implication 1 pending.
    pub fn full(w: usize) -> Self {
        Row012 { cells: alloc::vec![Trit::Two; w], pending: 1 }
    }

    pub fn from_cells(cells: Vec<Trit>) -> Self {
        Row012 { cells, pending: 1 }
    }

    /// Shorthand for tests and examples: digits `0`, `1`, `2`.
    pub fn from_digits(digits: &[u8]) -> Self {
        Row012::from_cells(
            digits
                .iter()
                .map(|d| match d {
                    0 => Trit::Zero,
                    1 => Trit::One,
                    2 => Trit::Two,
                    _ => panic!("row digit {d} is not 0, 1 or 2"),
                })
                .collect(),
        )
    }

    pub fn with_pending(mut self, pending: usize) -> Self {
        self.pending = pending;
        self
    }

    pub fn w(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Trit] {
        &self.cells
    }

    /// 1-based index of the next implication to impose.
    pub fn pending(&self) -> usize {
        self.pending
    }

    pub fn get(&self, position: usize) -> Trit {
        self.cells[position - 1]
    }

    pub fn set(&mut self, position: usize, value: Trit) {
        self.cells[position - 1] = value;
    }

    fn positions_of(&self, value: Trit) -> ElemSet {
        self.cells.iter().enumerate().filter(|(_, &c)| c == value).map(|(i, _)| i + 1).collect()
    }

    pub fn zeros(&self) -> ElemSet {
        self.positions_of(Trit::Zero)
    }

    pub fn ones(&self) -> ElemSet {
        self.positions_of(Trit::One)
    }

    pub fn twos(&self) -> ElemSet {
        self.positions_of(Trit::Two)
    }

    /// Number of sets in the row, `2^|twos|`.
    pub fn count(&self) -> BigUint {
        BigUint::one() << self.cells.iter().filter(|&&c| c == Trit::Two).count()
    }

    pub fn contains(&self, x: &ElemSet) -> bool {
        if x.last().is_some_and(|m| m > self.w()) {
            return false;
        }
        self.cells.iter().enumerate().all(|(i, c)| match c {
            Trit::Zero => !x.contains(i + 1),
            Trit::One => x.contains(i + 1),
            Trit::Two => true,
        })
    }

    /// Two rows are disjoint iff some position is 0 in one and 1 in the other.
    pub fn is_disjoint_from(&self, other: &Row012) -> bool {
        self.cells
            .iter()
            .zip(&other.cells)
            .any(|pair| matches!(pair, (Trit::Zero, Trit::One) | (Trit::One, Trit::Zero)))
    }

    /// The `k`-element members, in lexicographic order of the chosen 2-positions.
    pub fn k_sets(&self, k: usize) -> KSets {
        KSets::new(self.ones(), self.twos().iter().collect(), k)
    }

    pub fn list_k(&self, k: usize) -> Vec<ElemSet> {
        self.k_sets(k).collect()
    }

    /// Every member, by increasing cardinality.
    pub fn members(&self) -> impl Iterator<Item = ElemSet> + '_ {
        let base = self.ones().len();
        let free = self.twos().len();
        (base..=base + free).flat_map(move |k| self.k_sets(k))
    }
}

impl fmt::Display for Row012 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(c.token())?;
        }
        Ok(())
    }
}

impl FromStr for Row012 {
    type Err = RowParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let row = RowAb::from_str(s)?;
        row.cells
            .iter()
            .map(|c| match c {
                AbCell::Zero => Ok(Trit::Zero),
                AbCell::One => Ok(Trit::One),
                AbCell::Two => Ok(Trit::Two),
                AbCell::Prem(_) | AbCell::Conc(_) => Err(RowParseError::BundleInPlainRow),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Row012::from_cells)
    }
}

/// Iterator over `ones ∪ S` for every `(k - |ones|)`-subset `S` of the free
/// positions, in lexicographic order. Each step costs O(k).
pub struct KSets {
    ones: ElemSet,
    free: Vec<usize>,
    picks: Vec<usize>,
    done: bool,
}

impl KSets {
    fn new(ones: ElemSet, free: Vec<usize>, k: usize) -> Self {
        let base = ones.len();
        let done = k < base || k - base > free.len();
        let need = if done { 0 } else { k - base };
        KSets { ones, free, picks: (0..need).collect(), done }
    }
}

impl Iterator for KSets {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        if self.done {
            return None;
        }
        let mut out = self.ones.clone();
        out.extend(self.picks.iter().map(|&i| self.free[i]));

        // Advance to the next combination of indices.
        let (n, r) = (self.free.len(), self.picks.len());
        let mut i = r;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.picks[i] < n - r + i {
                self.picks[i] += 1;
                for j in i + 1..r {
                    self.picks[j] = self.picks[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// One position of a `{0,1,2,a,b}`-valued row. `Prem(i)` and `Conc(i)` mark
/// the premise and the conclusion positions of bundle `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AbCell {
    Zero,
    One,
    Two,
    Prem(u32),
    Conc(u32),
}

/// A bundle `a(i) => b(i) b(i) ...` of a [`RowAb`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub id: u32,
    pub premise: usize,
    pub conclusion: ElemSet,
}

/// A `{0,1,2,a,b}`-valued row.
///
/// `X` belongs to the row iff it contains every 1-position, avoids every
/// 0-position, and for every bundle contains the whole conclusion whenever it
/// contains the premise.
#[derive(Clone, Debug, Eq)]
pub struct RowAb {
    pub(crate) cells: Vec<AbCell>,
    /// Next unused bundle id in this row's lineage.
    pub(crate) next_bundle: u32,
}

/// Rows compare by their cells; the bundle-id allocator is not part of the value.
impl PartialEq for RowAb {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl RowAb {
    pub fn full(w: usize) -> Self {
        RowAb { cells: alloc::vec![AbCell::Two; w], next_bundle: 1 }
    }

    /// Validates that every bundle id has exactly one premise and a nonempty conclusion.
    pub fn from_cells(cells: Vec<AbCell>) -> Result<Self, RowParseError> {
        let mut tally: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
        for c in &cells {
            match *c {
                AbCell::Prem(i) => tally.entry(i).or_default().0 += 1,
                AbCell::Conc(i) => tally.entry(i).or_default().1 += 1,
                _ => {}
            }
        }
        if let Some((&id, _)) = tally.iter().find(|(_, t)| t.0 == 0) {
            return Err(RowParseError::MissingPremise(id));
        }
        if let Some((&id, _)) = tally.iter().find(|(_, t)| t.0 > 1) {
            return Err(RowParseError::DuplicatePremise(id));
        }
        if let Some((&id, _)) = tally.iter().find(|(_, t)| t.1 == 0) {
            return Err(RowParseError::EmptyConclusion(id));
        }
        let next_bundle = tally.keys().next_back().map_or(1, |m| m + 1);
        Ok(RowAb { cells, next_bundle })
    }

    pub fn w(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[AbCell] {
        &self.cells
    }

    pub fn get(&self, position: usize) -> AbCell {
        self.cells[position - 1]
    }

    fn positions(&self, pred: impl Fn(AbCell) -> bool) -> ElemSet {
        self.cells.iter().enumerate().filter(|(_, &c)| pred(c)).map(|(i, _)| i + 1).collect()
    }

    pub fn zeros(&self) -> ElemSet {
        self.positions(|c| c == AbCell::Zero)
    }

    pub fn ones(&self) -> ElemSet {
        self.positions(|c| c == AbCell::One)
    }

    pub fn twos(&self) -> ElemSet {
        self.positions(|c| c == AbCell::Two)
    }

    /// Bundles sorted by id.
    pub fn bundles(&self) -> Vec<Bundle> {
        let mut by_id: BTreeMap<u32, Bundle> = BTreeMap::new();
        for (i, c) in self.cells.iter().enumerate() {
            let pos = i + 1;
            match *c {
                AbCell::Prem(id) => {
                    by_id
                        .entry(id)
                        .or_insert_with(|| Bundle { id, premise: 0, conclusion: ElemSet::new() })
                        .premise = pos;
                }
                AbCell::Conc(id) => {
                    by_id
                        .entry(id)
                        .or_insert_with(|| Bundle { id, premise: 0, conclusion: ElemSet::new() })
                        .conclusion
                        .insert(pos);
                }
                _ => {}
            }
        }
        by_id.into_values().collect()
    }

    pub fn contains(&self, x: &ElemSet) -> bool {
        if x.last().is_some_and(|m| m > self.w()) {
            return false;
        }
        let fixed_ok = self.cells.iter().enumerate().all(|(i, c)| match c {
            AbCell::Zero => !x.contains(i + 1),
            AbCell::One => x.contains(i + 1),
            _ => true,
        });
        fixed_ok && self.bundles().iter().all(|b| !x.contains(b.premise) || b.conclusion.is_subset(x))
    }

    /// `|r| = 2^|twos| * prod_i (2^|conc[i]| + 1)`.
    pub fn count(&self) -> BigUint {
        let twos = self.cells.iter().filter(|&&c| c == AbCell::Two).count();
        self.bundles()
            .iter()
            .map(|b| (BigUint::one() << b.conclusion.len()) + 1u32)
            .fold(BigUint::one() << twos, |acc, f| acc * f)
    }

    /// Every member, expanding 2-positions in ascending order and then bundles
    /// by id (premise out with any conclusion subset, then everything in).
    pub fn members(&self) -> Vec<ElemSet> {
        let mut out = alloc::vec![self.ones()];
        for p in self.twos().iter() {
            out = out.into_iter().flat_map(|x| [x.clone(), with(x, [p])]).collect();
        }
        for b in self.bundles() {
            let conc: Vec<usize> = b.conclusion.iter().collect();
            out = out
                .into_iter()
                .flat_map(|x| {
                    let mut options: Vec<ElemSet> = (0u64..1 << conc.len())
                        .map(|m| {
                            let picked = conc.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1);
                            with(x.clone(), picked.map(|(_, &c)| c))
                        })
                        .collect();
                    options.push(with(x, conc.iter().copied().chain([b.premise])));
                    options
                })
                .collect();
        }
        out
    }

    /// Applies a position relabeling: position `p` of `self` becomes
    /// position `map[p - 1]` of the result.
    pub fn permuted(&self, map: &[usize]) -> RowAb {
        let mut cells = alloc::vec![AbCell::Two; self.w()];
        for (i, &c) in self.cells.iter().enumerate() {
            cells[map[i] - 1] = c;
        }
        RowAb { cells, next_bundle: self.next_bundle }
    }
}

impl fmt::Display for RowAb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match c {
                AbCell::Zero => f.write_str("0")?,
                AbCell::One => f.write_str("1")?,
                AbCell::Two => f.write_str("2")?,
                AbCell::Prem(id) => write!(f, "a{id}")?,
                AbCell::Conc(id) => write!(f, "b{id}")?,
            }
        }
        Ok(())
    }
}

fn with(mut x: ElemSet, extra: impl IntoIterator<Item = usize>) -> ElemSet {
    x.extend(extra);
    x
}

fn parse_bundle_id(digits: &str, token: &str) -> Result<u32, RowParseError> {
    match digits.parse::<u32>() {
        Ok(id) if id > 0 && !digits.starts_with('+') => Ok(id),
        _ => Err(RowParseError::UnknownToken(token.to_string())),
    }
}

impl FromStr for RowAb {
    type Err = RowParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cells = s
            .split_whitespace()
            .map(|tok| match tok {
                "0" => Ok(AbCell::Zero),
                "1" => Ok(AbCell::One),
                "2" => Ok(AbCell::Two),
                _ => {
                    if let Some(d) = tok.strip_prefix('a') {
                        parse_bundle_id(d, tok).map(AbCell::Prem)
                    } else if let Some(d) = tok.strip_prefix('b') {
                        parse_bundle_id(d, tok).map(AbCell::Conc)
                    } else {
                        Err(RowParseError::UnknownToken(tok.to_string()))
                    }
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        RowAb::from_cells(cells)
    }
}

/// Renders a list of rows one per line.
pub fn render_rows<T: fmt::Display>(rows: &[T]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}
