//! Enumeration of the models of implication families with wildcard rows.
//!
//! The crate covers three enumerators and two counting methods:
//!
//! - [`poe012`]: the 0,1,2-algorithm, listing all models of an
//!   [`ImplicationFamily`] as disjoint `{0,1,2}`-valued rows, plus a
//!   deletion-free variant for models of fixed cardinality driven by a
//!   [`FeasibilityOracle`];
//! - [`ideals`] and [`subtrees`]: that variant specialized to `k`-element
//!   order ideals of a [`Poset`] and `k`-vertex subtrees of a [`Tree`];
//! - [`abalg`]: all ideals of a poset as disjoint `{0,1,2,a,b}`-valued rows,
//!   with the Whitney numbers read off per-row cardinality polynomials;
//! - [`rankrec`]: the same rank polynomial by pivot recursion.
//!
//! Element labels and row positions are 1-based. The crate is `no_std` and
//! needs only `alloc`.
//!
//! ```
//! use wildrows_core::{enumerate_k_ideals, rank_poly_recursive, whitney, ElemSet, Poset};
//!
//! // 1 < 3 and 2 < 3
//! let v = Poset::from_relations(3, &[(1, 3), (2, 3)]).unwrap();
//! let pairs: Vec<_> = enumerate_k_ideals(&v, 2).k_sets(2).collect();
//! assert_eq!(pairs, [ElemSet::from([1, 2])]);
//! assert_eq!(whitney(&v).coefficient_line(4), "1 2 1 1");
//! assert_eq!(rank_poly_recursive(&v).polynomial, whitney(&v));
//! ```

#![no_std]

extern crate alloc;

pub mod abalg;
pub mod brute;
pub mod closure;
pub mod error;
pub mod ideals;
pub mod implication;
pub mod poe012;
pub mod poly;
pub mod poset;
pub mod rankrec;
pub mod row;
pub mod set;
pub mod subtrees;
pub mod tree;

#[cfg(test)]
mod testing;

pub use abalg::{ab_enumerate, ab_impose, cardinality_poly, whitney, AbEnumeration};
pub use closure::{close, is_model, ClosureIndex};
pub use error::{FamilyError, GuardError, ImposeError, PosetError, RowParseError, TreeError};
pub use ideals::{enumerate_k_ideals, ideal_oracle, natural_base};
pub use implication::{Implication, ImplicationFamily};
pub use poe012::{
    brute_oracle, candidate_sons, enumerate_k_models, enumerate_models, Cardinality, FeasibilityOracle,
    FinalStack, Stats,
};
pub use poly::RankPolynomial;
pub use poset::Poset;
pub use rankrec::{pick_pivot, rank_poly_recursive, RecursiveRank};
pub use row::{AbCell, Row012, RowAb, Trit};
pub use set::ElemSet;
pub use subtrees::{enumerate_k_subtrees, steiner_closure, subtree_oracle, tree_base};
pub use tree::Tree;

pub use num_bigint::BigUint;
