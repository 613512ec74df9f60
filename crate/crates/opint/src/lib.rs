//! Symbolic–numeric evaluation of half-line integrals through the shift
//! operator calculus, paired with an independent quadrature harness that
//! checks every formal result numerically.
//!
//! The central identity evaluated here reads: expand the transform H of a
//! kernel h as a power–log series in p, substitute p → e^∂ term by term, and
//! apply the resulting shift/derivative operators to a coefficient function
//! g. The numeric side recomputes the same integral by double-exponential
//! quadrature and the two routes are compared, because the operator route is
//! formal and can diverge even when the integral exists.

pub mod error;
pub mod quad;
pub mod special;

pub use error::{Error, Result};
