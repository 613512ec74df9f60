//! Dedekind eta on the imaginary axis, η(ix) for x > 0.

use crate::error::{Error, Result};

/// η(ix) = e^{-πx/12} ∏_{n≥1} (1 - e^{-2πnx}) for x > 0.
///
/// The q-product is truncated once the next factor differs from 1 by less
/// than 1e-17. For x < 1 the modular relation η(i/x) = √x η(ix) is applied
/// first so the product always runs at x ≥ 1, keeping accuracy uniform.
pub fn dedekind_eta_ix(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("dedekind_eta", "requires x > 0"));
    }
    if x < 1.0 {
        // η(ix) = (1/√x) η(i/x)
        return Ok(dedekind_eta_ix(1.0 / x)? / x.sqrt());
    }
    let mut prod = 1.0f64;
    let mut n = 1u32;
    loop {
        let f = (-2.0 * std::f64::consts::PI * n as f64 * x).exp();
        if f < 1e-17 {
            break;
        }
        prod *= 1.0 - f;
        n += 1;
    }
    Ok((-std::f64::consts::PI * x / 12.0).exp() * prod)
}
