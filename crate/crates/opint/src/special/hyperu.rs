//! Normalized confluent hypergeometric U(a, 1/2, z), quadrature-backed.
//!
//! Only the combination U(p/2, 1/2, 1/(4s)) with p > 0, s > 0 is needed by
//! the catalog. It is defined here through the half-line integral
//!
//!   (1/Γ(p)) ∫_0^∞ λ^{p-1} e^{-λ} e^{-λ² s} dλ = 2^{-p} s^{-p/2} U(p/2, 1/2, 1/(4s)),
//!
//! evaluated with the exp-sinh rule; no general-purpose U implementation is
//! attempted.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::{integrate_halfline_plain, AxisHints};
use crate::special::gamma::gamma_re;

/// (1/Γ(p)) ∫_0^∞ λ^{p-1} e^{-λ - λ² s} dλ for p > 0, s > 0.
pub fn u_weighted_integral(p: f64, s: f64) -> Result<f64> {
    if !(p > 0.0 && s >= 0.0) {
        return Err(Error::domain("hyper_u", "requires p > 0 and s ≥ 0"));
    }
    let gp = gamma_re(p)?;
    let r = integrate_halfline_plain(
        &|lam| Complex64::new(lam.powf(p - 1.0) * (-lam - lam * lam * s).exp(), 0.0),
        1e-12,
        AxisHints {
            singularity_exponent: p - 1.0,
            decay_scale: 1.0,
        },
    )?;
    if !r.converged {
        return Err(Error::Convergence(
            "hyper_u weighted integral did not converge".into(),
        ));
    }
    Ok(r.value.re / gp)
}

/// U(a, 1/2, z) for a > 0, z > 0.
pub fn hyper_u_half(a: f64, z: f64) -> Result<f64> {
    if !(a > 0.0 && z > 0.0) {
        return Err(Error::domain("hyper_u", "requires a > 0 and z > 0"));
    }
    let p = 2.0 * a;
    let s = 1.0 / (4.0 * z);
    Ok(2f64.powf(p) * s.powf(p / 2.0) * u_weighted_integral(p, s)?)
}
