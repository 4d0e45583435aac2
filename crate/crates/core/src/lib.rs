//! Exact computer algebra for parametric Apostol--Bernoulli polynomial families.
//!
//! Everything here is computed in exact arithmetic: scalars are Gaussian
//! rationals (complex numbers with big-integer-fraction parts), polynomials
//! are sparse multivariate polynomials over that field, and generating
//! functions live in a truncated formal power series ring. No floating
//! point exists anywhere in this crate.
//!
//! Module layout:
//! - [`exactq`]: Gaussian rational scalars and sparse multivariate polynomials
//! - [`fps`]: truncated formal power series in `t`, elementary builders, and
//!   the `(t/(lambda*e^t + mu))^v` kernel
//! - [`families`]: named polynomial families (Bernoulli, Apostol--Bernoulli,
//!   Apostol--Genocchi, the parametric cosine/sine kinds, and the pluggable
//!   `U(y,t)` factors: Gould--Hopper, Hermite--Appell, Miller--Lee,
//!   truncated exponential)
//! - [`opcalc`]: operator calculus in the derivative operator `D_x`
//!   (quasi-monomiality: lowering, raising at the generating-function level,
//!   and the induced differential equations)
//! - [`theorems`]: executable identity checks with exact coefficient
//!   comparison, parameter sampling, and erratum tracking

#![no_std]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod exactq;
pub mod families;
pub mod fps;
pub mod opcalc;
pub mod theorems;
