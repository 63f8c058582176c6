//! Spectral extremal toolkit for trees of diameter at most four.
//!
//! The crate builds the extremal graphs `S(n,k) = K_k ∨ co-K_{n-k}` and
//! `S+(n,k)`, enumerates diameter-≤4 trees through their star-forest
//! decomposition, decides tree containment, computes spectral radii, and
//! runs exhaustive small-order checks of the supporting lemmas together
//! with censuses of the spectral extremal statement.

pub mod embedding;
pub mod error;
pub mod graph;
pub mod spectral;
pub mod trees;
pub mod verification;

pub use error::{Error, Result};
pub use graph::Graph;
