//! Exact scalar and sparse multivariate polynomial arithmetic.
//!
//! The scalar field is the Gaussian rationals (complex numbers with exact
//! big-integer-fraction parts); polynomials are sparse maps from exponent
//! vectors to scalars over a fixed, ordered variable set. All values are
//! immutable after construction and safe to share across threads.

mod poly;
mod scalar;

pub use poly::{MultiPoly, Monomial, PolyError, VarSet};
pub use scalar::{binomial, binomial_q, factorial, factorial_q, GaussRational};
