//! Conditionally convergent oscillatory half-line integrals.
//!
//! The axis is partitioned at the sign-change spacing π/ω supplied through
//! the hints; each cell is integrated by tanh-sinh (the first one absorbs
//! any endpoint singularity) and the alternating sequence of partial sums is
//! accelerated with Wynn's epsilon algorithm. At most 400 zeros are used.

use num_complex::Complex64;

use super::{de::integrate_finite, rel_scale, wynn_epsilon, IntegrandHints, Method, QuadratureResult};
use crate::error::{Error, Result};

const MAX_ZEROS: usize = 400;
const MIN_SEGMENTS: usize = 8;

pub fn integrate_oscillatory(
    f: &dyn Fn(f64) -> Complex64,
    tol: f64,
    omega: f64,
    _hints: &IntegrandHints,
) -> Result<QuadratureResult> {
    if omega <= 0.0 {
        return Err(Error::domain("integrate_oscillatory", "phase scale must be positive"));
    }
    let spacing = std::f64::consts::PI / omega;
    let seg_tol = (tol / 10.0).max(1e-14);
    let mut evals = 0usize;
    let mut seg_err = 0.0f64;
    let mut partial_re: Vec<f64> = Vec::new();
    let mut partial_im: Vec<f64> = Vec::new();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut best = Complex64::new(0.0, 0.0);
    let mut best_err = f64::INFINITY;
    for k in 0..MAX_ZEROS {
        let a = k as f64 * spacing;
        let b = (k + 1) as f64 * spacing;
        let r = integrate_finite(f, a, b, seg_tol)?;
        evals += r.evaluations;
        seg_err += r.error;
        sum += r.value;
        partial_re.push(sum.re);
        partial_im.push(sum.im);
        if partial_re.len() >= MIN_SEGMENTS {
            let (vre, ere) = wynn_epsilon(&partial_re);
            let (vim, eim) = wynn_epsilon(&partial_im);
            let v = Complex64::new(vre, vim);
            let e = ere.hypot(eim) + seg_err;
            if e < best_err {
                best = v;
                best_err = e;
            }
            if best_err <= tol * rel_scale(best) {
                return Ok(QuadratureResult {
                    value: best,
                    error: best_err,
                    evaluations: evals,
                    converged: true,
                    method: Method::OscillatoryPartition,
                });
            }
        }
    }
    Ok(QuadratureResult {
        value: best,
        error: best_err,
        evaluations: evals,
        converged: false,
        method: Method::OscillatoryPartition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate_halfline;
    use approx::assert_relative_eq;

    #[test]
    fn fresnel_type_integral() {
        // ∫_0^∞ x^{-1/2} cos x dx = √(π/2).
        let hints = IntegrandHints::smooth(1)
            .with_singularity(0, -0.5)
            .with_oscillation(1.0);
        let r = integrate_halfline(
            &|x| Complex64::new(x.powf(-0.5) * x.cos(), 0.0),
            1e-9,
            &hints,
        )
        .unwrap();
        assert!(r.converged);
        let truth = (std::f64::consts::PI / 2.0).sqrt();
        assert_relative_eq!(r.value.re, truth, max_relative = 1e-8);
    }

    #[test]
    fn damped_oscillation() {
        // ∫_0^∞ e^{-x} cos(3x) dx = 1/(1+9).
        let hints = IntegrandHints::smooth(1).with_oscillation(3.0);
        let r = integrate_halfline(
            &|x| Complex64::new((-x).exp() * (3.0 * x).cos(), 0.0),
            1e-11,
            &hints,
        )
        .unwrap();
        assert_relative_eq!(r.value.re, 0.1, max_relative = 1e-10);
    }
}
