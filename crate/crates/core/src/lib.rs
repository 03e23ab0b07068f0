//! Exact computer algebra for zero-dimensional polynomial ideals over
//! the rationals: lexicographic Gröbner bases, quotient-ring
//! bookkeeping, Zariski tangent spaces of Hilbert schemes of points,
//! flat-family measurements, and reducedness/integrality certificates.
//!
//! All arithmetic is exact; every dimension reported by this crate is
//! the result of fraction-free elimination over arbitrary-precision
//! rationals.

pub mod error;
pub mod kernel;
pub mod poly;

pub use error::{Error, Result};
pub use kernel::{BigRational, ExactMatrix};
