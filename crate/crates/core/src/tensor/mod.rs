//! Index conventions, the constant tensors g and π, the antilinear
//! operator 𝔧, canonical storage for symmetric arrays, and the dimension
//! counting used throughout the construction.

pub mod arrays;
pub mod dims;
pub mod index;

pub use arrays::{sp_membership, IndexedArray, SpReport, SymArray};
pub use dims::{binomial, constrained_dimension, Constraint};
pub use index::IndexSpec;
