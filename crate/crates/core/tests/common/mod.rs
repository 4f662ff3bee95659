#![allow(dead_code)]

use proptest::prelude::*;
use wildrows_core::{AbCell, ElemSet, Implication, ImplicationFamily, Poset, Row012, RowAb, Tree, Trit};

/// Random poset: a random DAG on a random permutation, each forward pair
/// related with probability about `density`.
pub fn poset(max_w: usize) -> impl Strategy<Value = Poset> {
    (0..=max_w)
        .prop_flat_map(|w| {
            let pairs = w * w.saturating_sub(1) / 2;
            (
                Just(w),
                Just((1..=w).collect::<Vec<usize>>()).prop_shuffle(),
                prop::collection::vec(0u8..100, pairs),
                5u8..60,
            )
        })
        .prop_map(|(w, perm, coins, density)| {
            let mut rel = Vec::new();
            let mut c = coins.into_iter();
            for i in 0..w {
                for j in i + 1..w {
                    if c.next().unwrap() < density {
                        rel.push((perm[i], perm[j]));
                    }
                }
            }
            Poset::from_relations(w, &rel).unwrap()
        })
}

/// Random labeled tree: vertex `i` attaches to a random earlier vertex,
/// then labels are shuffled.
pub fn tree(max_w: usize) -> impl Strategy<Value = Tree> {
    (1..=max_w)
        .prop_flat_map(|w| {
            (Just((1..=w).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(any::<u32>(), w))
        })
        .prop_map(|(perm, picks)| {
            let w = perm.len();
            let edges: Vec<_> = (1..w).map(|i| (perm[picks[i] as usize % i], perm[i])).collect();
            Tree::from_edges(w, &edges).unwrap()
        })
}

fn subset(w: usize, max_len: usize) -> impl Strategy<Value = ElemSet> {
    prop::collection::btree_set(1..=w.max(1), 0..=max_len.min(w))
        .prop_map(move |s| s.into_iter().filter(|&e| e <= w).collect())
}

pub fn family(max_w: usize, max_h: usize) -> impl Strategy<Value = ImplicationFamily> {
    (1..=max_w).prop_flat_map(move |w| {
        prop::collection::vec((subset(w, 3), subset(w, 3)), 0..=max_h).prop_map(move |pairs| {
            let imps = pairs.into_iter().map(|(a, b)| Implication::new(a, b)).collect();
            ImplicationFamily::new(w, imps).unwrap()
        })
    })
}

pub fn row012(w: usize) -> impl Strategy<Value = Row012> {
    prop::collection::vec(prop_oneof![Just(Trit::Zero), Just(Trit::One), Just(Trit::Two)], w)
        .prop_map(Row012::from_cells)
}

pub fn row012_any(max_w: usize) -> impl Strategy<Value = Row012> {
    (0..=max_w).prop_flat_map(row012)
}

/// Random valid `{0,1,2,a,b}` row: positions are 0/1/2 or join one of three
/// groups; each group of two or more becomes a bundle.
pub fn row_ab(max_w: usize) -> impl Strategy<Value = RowAb> {
    (0..=max_w).prop_flat_map(|w| (prop::collection::vec(0u8..7, w), any::<bool>(), 1u32..5)).prop_map(
        |(kinds, premise_last, first_id)| {
            let mut cells: Vec<AbCell> = kinds
                .iter()
                .map(|k| match k {
                    0 => AbCell::Zero,
                    1 => AbCell::One,
                    _ => AbCell::Two,
                })
                .collect();
            for g in 0..3u8 {
                let members: Vec<usize> =
                    kinds.iter().enumerate().filter(|(_, &k)| k == 4 + g).map(|(i, _)| i).collect();
                if members.len() < 2 {
                    continue;
                }
                let id = first_id + g as u32 * 2;
                let prem = if premise_last { *members.last().unwrap() } else { members[0] };
                for &m in &members {
                    cells[m] = if m == prem { AbCell::Prem(id) } else { AbCell::Conc(id) };
                }
            }
            RowAb::from_cells(cells).unwrap()
        },
    )
}

/// All subsets of `{1..w}`.
pub fn powerset(w: usize) -> impl Iterator<Item = ElemSet> {
    (0u32..1 << w).map(move |m| (1..=w).filter(|e| m >> (e - 1) & 1 == 1).collect())
}

/// Membership in a `{0,1,2,a,b}` row, straight from the definition.
pub fn ab_member(r: &RowAb, x: &ElemSet) -> bool {
    let cells = r.cells();
    let mut prem = std::collections::BTreeMap::new();
    let mut conc: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
    for (i, c) in cells.iter().enumerate() {
        let p = i + 1;
        match *c {
            AbCell::Zero if x.contains(p) => return false,
            AbCell::One if !x.contains(p) => return false,
            AbCell::Prem(id) => {
                prem.insert(id, p);
            }
            AbCell::Conc(id) => conc.entry(id).or_default().push(p),
            _ => {}
        }
    }
    prem.iter().all(|(id, &p)| !x.contains(p) || conc[id].iter().all(|&b| x.contains(b)))
}

/// Ideals of `p` by checking every subset.
pub fn ideals_by_sweep(p: &Poset) -> Vec<ElemSet> {
    powerset(p.w()).filter(|x| x.iter().all(|a| (1..=p.w()).all(|b| !p.leq(b, a) || x.contains(b)))).collect()
}

pub fn sorted(mut v: Vec<ElemSet>) -> Vec<ElemSet> {
    v.sort();
    v
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
