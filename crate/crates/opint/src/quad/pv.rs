//! Cauchy principal value on the half-line, symmetric exclusion with
//! Richardson extrapolation over the exclusion radius.
//!
//! With a simple pole at x₀ > 0, I(ε) = ∫_0^{x₀-ε} + ∫_{x₀+ε}^∞ satisfies
//! I(ε) = PV - 2ε r'(x₀) + O(ε³), so polynomial extrapolation of the
//! sequence ε_j = 2^{-j}, j = 4..20, recovers the limit. Successive I(ε_j)
//! are built incrementally from paired window strips, which keeps the
//! worst cancellation at the u ≈ 2^{-20} scale.

use num_complex::Complex64;

use super::de::{integrate_finite, integrate_halfline_plain};
use super::{rel_scale, IntegrandHints, Method, QuadratureResult};
use crate::error::{Error, Result};

const J_FIRST: i32 = 4;
const J_LAST: i32 = 20;

/// PV ∫_0^∞ f(x) dx with a simple pole at `x0`.
///
/// A nonpositive `x0` means no pole on the integration path; the call then
/// reduces to the ordinary half-line rule.
pub fn integrate_pv(
    f: &dyn Fn(f64) -> Complex64,
    x0: f64,
    tol: f64,
    hints: &IntegrandHints,
) -> Result<QuadratureResult> {
    let axis = hints.axes.first().copied().unwrap_or_default();
    if x0 <= 0.0 {
        return integrate_halfline_plain(f, tol, axis);
    }
    let mut j0 = J_FIRST;
    while 2f64.powi(-j0) > x0 / 2.0 {
        j0 += 1;
    }
    let eps0 = 2f64.powi(-j0);
    let seg_tol = (tol / 20.0).max(1e-14);

    let mut evals = 0usize;
    let mut quad_err = 0.0f64;

    let left = integrate_finite(f, 0.0, x0 - eps0, seg_tol)?;
    evals += left.evaluations;
    quad_err += left.error;
    let tail_start = x0 + eps0;
    let tail = integrate_halfline_plain(&|u| f(tail_start + u), seg_tol, axis)?;
    evals += tail.evaluations;
    quad_err += tail.error;
    if !left.converged || !tail.converged {
        return Err(Error::PoleLocation {
            x0,
            detail: "integral away from the claimed pole does not converge; pole likely misplaced"
                .into(),
        });
    }

    let mut current = left.value + tail.value;
    let mut eps_list = vec![eps0];
    let mut i_list = vec![current];
    let mut prev_inc_norm = f64::INFINITY;
    let mut growth_run = 0usize;

    let paired = |u: f64| f(x0 + u) + f(x0 - u);

    for j in j0..J_LAST {
        let eps_hi = 2f64.powi(-j);
        let eps_lo = 2f64.powi(-(j + 1));
        let inc = integrate_finite(&|u| paired(u), eps_lo, eps_hi, seg_tol)?;
        evals += inc.evaluations;
        quad_err += inc.error;
        let inc_norm = inc.value.norm();
        if !inc.value.re.is_finite() || !inc.value.im.is_finite() {
            return Err(Error::PoleLocation {
                x0,
                detail: "window strip integral is non-finite".into(),
            });
        }
        if inc_norm > 2.0 * prev_inc_norm && inc_norm > 1e-12 {
            growth_run += 1;
            if growth_run >= 2 {
                return Err(Error::PoleLocation {
                    x0,
                    detail: "shrinking windows produce growing contributions".into(),
                });
            }
        } else {
            growth_run = 0;
        }
        prev_inc_norm = inc_norm;
        current += inc.value;
        eps_list.push(eps_lo);
        i_list.push(current);
    }

    // Neville extrapolation of (ε_j, I_j) to ε = 0, separately per component.
    let (vre, ere) = neville_at_zero(&eps_list, &i_list.iter().map(|v| v.re).collect::<Vec<_>>());
    let (vim, eim) = neville_at_zero(&eps_list, &i_list.iter().map(|v| v.im).collect::<Vec<_>>());
    let value = Complex64::new(vre, vim);
    let error = ere.hypot(eim) + quad_err;
    Ok(QuadratureResult {
        value,
        error,
        evaluations: evals,
        converged: error <= tol * rel_scale(value),
        method: Method::PrincipalValue,
    })
}

fn neville_at_zero(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len();
    let mut col = ys.to_vec();
    let mut best = col[n - 1];
    let mut prev = f64::INFINITY;
    for m in 1..n {
        for i in 0..n - m {
            // Evaluate the interpolating polynomial at 0.
            col[i] = (xs[i + m] * col[i] - xs[i] * col[i + 1]) / (xs[i + m] - xs[i]);
        }
        prev = best;
        best = col[0];
    }
    (best, (best - prev).abs())
}
