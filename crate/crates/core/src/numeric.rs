//! Exact scalar arithmetic.
//!
//! Everything downstream works over [`Scalar`], an arbitrary-precision
//! rational kept in lowest terms, and [`Jet2`], a first-order jet carrying a
//! value together with two exact partial derivatives. There is no floating
//! point anywhere in this crate; equality of scalars is genuine equality in
//! the field of rationals.

mod jet;
mod scalar;

pub use jet::{gradient2, jacobian2, seed_pair, Jet2};
pub use scalar::Scalar;
