//! Exact-arithmetic library for the lattices of bounded integer words and
//! the nonsymmetric operads built on their linear spans.
//!
//! The crate provides, over exact rational coefficients throughout:
//!
//! - range maps and the graded families of cliff and hill words they bound,
//!   with enumeration, counting formulas, and the componentwise lattice;
//! - the operads on cliff words for unimodal range maps, in the elementary,
//!   fundamental, and homogeneous bases, with basis conversions and an
//!   operad-axiom checker;
//! - quotient operads supported on subsets closed by subword reduction,
//!   instantiated on hills;
//! - minimal generating sets, free-operad terms over graded generators, and
//!   per-arity relation-space dimensions via exact linear algebra;
//! - the binary quadratic presentation of the constant-map hill operads,
//!   its Koszul dual in two generator systems, and dimension checks through
//!   an exact power-series identity;
//! - size-preserving bijections with integer compositions, permutations,
//!   increasing trees, rectangular paths, and Dyck paths.

pub mod bijections;
pub mod cliffs;
pub mod compose;
pub mod dual;
pub mod error;
pub mod hillops;
pub mod linalg;
pub mod operad;
pub mod order;
pub mod presentation;
pub mod rangemap;
pub mod series;

pub use cliffs::CliffWord;
pub use error::{Error, Result};
pub use operad::{Basis, OperadContext, OperadElement};
pub use rangemap::RangeMap;
