//! Exact Gaussian-rational scalars, dense linear maps between tensor
//! powers, and canonical subspaces.
//!
//! Subspaces are reduced internally over Gaussian integers with
//! fraction-free elimination; the public basis is the rational RREF.

mod gint;
mod linmap;
mod scalar;
pub(crate) mod sparse;
mod subspace;

pub(crate) use gint::GInt;
pub use linmap::{adjoint, compose, tensor_product, LinMap};
pub(crate) use linmap::{pow, to_svec};
pub use scalar::Scalar;
pub(crate) use sparse::{Echelon, SVec};
pub use subspace::{intersect, member, span, Subspace};

#[cfg(test)]
mod tests;
