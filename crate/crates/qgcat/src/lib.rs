//! Representation categories of compact matrix quantum groups, computed
//! exactly at finite word-length cutoffs.
//!
//! The crate is organised bottom-up: [`words`] (the colour monoids),
//! [`linalg`] (exact Gaussian-rational maps and subspaces), [`frame`]
//! (duality morphisms and Frobenius operations), [`partitions`] (the
//! combinatorial oracle), [`category`] (fixed-point tables and the closure
//! engine), [`transforms`] (invariants and complexification/gluing) and
//! [`presentation`] (noncommutative polynomial relations).

pub mod category;
mod error;
pub mod frame;
pub mod linalg;
pub mod par;
pub mod partitions;
pub mod presentation;
pub mod transforms;
pub mod words;

pub use error::{Error, Result};
