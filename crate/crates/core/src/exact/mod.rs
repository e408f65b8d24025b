//! Exact scalars, dense matrices and small tensors.
//!
//! Everything in the crate is computed over [`Rational`]; there is no
//! floating point anywhere, so identities are checked with `==`.

mod matrix;
mod rational;
mod tensor;

pub use matrix::{Matrix, MatrixError};
pub use rational::{format_rational, parse_rational, q, Rational};
pub use tensor::Tensor3;
