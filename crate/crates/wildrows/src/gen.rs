//! Seeded instance generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so an
//! instance depends only on its parameters and seed.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wildrows_core::{Poset, Tree};

/// Parameters of a layered poset `W(m, l, t)`: `l` levels of `m` elements,
/// each element above the first level covering `t` elements of the level below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LayeredSpec {
    pub m: usize,
    pub l: usize,
    pub t: usize,
    pub seed: u64,
}

impl LayeredSpec {
    pub fn new(m: usize, l: usize, t: usize, seed: u64) -> Self {
        LayeredSpec { m, l, t, seed }
    }

    pub fn w(&self) -> usize {
        self.m * self.l
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.m == 0 || self.l == 0 {
            return Err(format!("level width and level count must be positive (m={}, l={})", self.m, self.l));
        }
        if self.t > self.m {
            return Err(format!("t={} exceeds the level width m={}", self.t, self.m));
        }
        Ok(())
    }
}

/// Builds `W(m, l, t)`. Level `i` (0-based) holds labels `i*m+1 ..= (i+1)*m`;
/// lower covers are drawn without replacement.
///
/// # Panics
/// If the spec is invalid.
pub fn gen_layered_poset(spec: LayeredSpec) -> Poset {
    spec.validate().unwrap_or_else(|e| panic!("invalid layered spec: {e}"));
    let LayeredSpec { m, l, t, seed } = spec;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut covers = Vec::with_capacity(m * l.saturating_sub(1) * t);
    for level in 1..l {
        for i in 0..m {
            let a = level * m + i + 1;
            let below = (level - 1) * m + 1;
            let mut picked: Vec<usize> = sample(&mut rng, m, t).into_iter().map(|j| below + j).collect();
            picked.sort_unstable();
            covers.extend(picked.into_iter().map(|b| (b, a)));
        }
    }
    Poset::from_relations(spec.w(), &covers).expect("layers only point upward")
}

/// Uniform random labeled tree on `w >= 1` vertices by Prüfer decoding.
pub fn gen_random_tree(w: usize, seed: u64) -> Tree {
    assert!(w >= 1, "a tree needs at least one vertex");
    if w <= 2 {
        let edges: Vec<_> = (1..w).map(|v| (v, v + 1)).collect();
        return Tree::from_edges(w, &edges).expect("path");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..w - 2).map(|_| rng.gen_range(1..=w)).collect();
    let mut degree = vec![1usize; w + 1];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (1..=w).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(w - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("Prüfer decoding always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(v) = leaves.pop().unwrap();
    edges.push((u, v));
    Tree::from_edges(w, &edges).expect("Prüfer sequences decode to trees")
}

/// Random poset on `w` elements: a hidden random order of the labels, with
/// each forward pair related independently with probability `density`.
pub fn gen_random_poset(w: usize, density: f64, seed: u64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (1..=w).collect();
    rand::seq::SliceRandom::shuffle(order.as_mut_slice(), &mut rng);
    let mut relations = Vec::new();
    for i in 0..w {
        for j in i + 1..w {
            if rng.gen_bool(density) {
                relations.push((order[i], order[j]));
            }
        }
    }
    Poset::from_relations(w, &relations).expect("relations follow a fixed order")
}
