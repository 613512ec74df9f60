//! Double-exponential rules: exp-sinh on (0, ∞) and tanh-sinh on [a, b].
//!
//! Half-line map: x = λ exp(t - e^{-t}), dx = x (1 + e^{-t}) dt. Toward
//! t → -∞ the abscissas approach 0 double-exponentially, which absorbs
//! integrable endpoint singularities x^σ (σ > -1) without subtraction;
//! toward t → +∞ the map grows like λ e^t, so exponentially decaying tails
//! converge double-exponentially and algebraic tails x^{-p} (p > 1) still
//! converge geometrically in the trapezoid step.

use num_complex::Complex64;

use super::{rel_scale, AxisHints, Method, QuadratureResult};
use crate::error::{Error, Result};

const MAX_LEVEL: usize = 12;
const FIRST_COMPARE_LEVEL: usize = 2;
// Hard floors keeping x representable; terms are negligible well before.
const T_NEG_FLOOR: f64 = -6.4;
const T_POS_CEIL: f64 = 680.0;
const NEGLIGIBLE_RUN: usize = 6;

/// One trapezoid pass of the exp-sinh rule at step `h`.
///
/// Sums j = 0, 1, 2, ... upward and j = -1, -2, ... downward, each side
/// stopping after `NEGLIGIBLE_RUN` consecutive terms below the relative
/// cutoff. The node ordering (and therefore rounding) is fixed.
fn exp_sinh_pass(
    f: &dyn Fn(f64) -> Complex64,
    h: f64,
    lambda: f64,
    evals: &mut usize,
) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for dir in [1i64, -1i64] {
        let mut run = 0usize;
        let mut j: i64 = if dir == 1 { 0 } else { -1 };
        loop {
            let t = j as f64 * h;
            if t < T_NEG_FLOOR || t > T_POS_CEIL {
                break;
            }
            let emt = (-t).exp();
            let x = lambda * (t - emt).exp();
            if !(1e-290..=1e290).contains(&x) {
                break;
            }
            let w = x * (1.0 + emt);
            let v = f(x);
            *evals += 1;
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFiniteSample { abscissa: x });
            }
            let term = w * v;
            sum += term;
            if term.norm() <= 1e-18 * rel_scale(sum) {
                run += 1;
                if run >= NEGLIGIBLE_RUN {
                    break;
                }
            } else {
                run = 0;
            }
            j += dir;
        }
    }
    Ok(sum * h)
}

/// ∫_0^∞ f(x) dx by exp-sinh level doubling, no oscillation handling.
pub fn integrate_halfline_plain(
    f: &dyn Fn(f64) -> Complex64,
    tol: f64,
    axis: AxisHints,
) -> Result<QuadratureResult> {
    let lambda = axis.decay_scale;
    let mut evals = 0usize;
    let mut prev = Complex64::new(0.0, 0.0);
    let mut prev_valid = false;
    let mut last_delta = f64::INFINITY;
    for level in 0..=MAX_LEVEL {
        let h = 0.5 / (1u64 << level) as f64;
        let s = exp_sinh_pass(f, h, lambda, &mut evals)?;
        if prev_valid && level >= FIRST_COMPARE_LEVEL {
            last_delta = (s - prev).norm();
            if last_delta <= tol * rel_scale(s) {
                return Ok(QuadratureResult {
                    value: s,
                    error: last_delta,
                    evaluations: evals,
                    converged: true,
                    method: Method::ExpSinh,
                });
            }
        }
        prev = s;
        prev_valid = true;
    }
    Ok(QuadratureResult {
        value: prev,
        error: last_delta,
        evaluations: evals,
        converged: false,
        method: Method::ExpSinh,
    })
}

const TS_T_MAX: f64 = 4.0;

fn tanh_sinh_pass(
    f: &dyn Fn(f64) -> Complex64,
    a: f64,
    b: f64,
    h: f64,
    evals: &mut usize,
) -> Result<Complex64> {
    let mid = (a + b) / 2.0;
    let r = (b - a) / 2.0;
    let mut sum = Complex64::new(0.0, 0.0);
    for dir in [1i64, -1i64] {
        let mut j: i64 = if dir == 1 { 0 } else { -1 };
        let mut run = 0usize;
        loop {
            let t = j as f64 * h;
            if t.abs() > TS_T_MAX {
                break;
            }
            let sh = std::f64::consts::FRAC_PI_2 * t.sinh();
            let x = mid + r * sh.tanh();
            let ch = sh.cosh();
            let w = r * std::f64::consts::FRAC_PI_2 * t.cosh() / (ch * ch);
            if w < 1e-300 || x <= a || x >= b {
                break;
            }
            let v = f(x);
            *evals += 1;
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFiniteSample { abscissa: x });
            }
            let term = w * v;
            sum += term;
            if term.norm() <= 1e-18 * rel_scale(sum) {
                run += 1;
                if run >= NEGLIGIBLE_RUN {
                    break;
                }
            } else {
                run = 0;
            }
            j += dir;
        }
    }
    Ok(sum * h)
}

/// ∫_a^b f(x) dx by tanh-sinh level doubling; endpoint singularities allowed.
pub fn integrate_finite(
    f: &dyn Fn(f64) -> Complex64,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::domain("integrate_finite", "requires finite a < b"));
    }
    let mut evals = 0usize;
    let mut prev = Complex64::new(0.0, 0.0);
    let mut prev_valid = false;
    let mut last_delta = f64::INFINITY;
    for level in 0..=MAX_LEVEL {
        let h = 1.0 / (1u64 << level) as f64;
        let s = tanh_sinh_pass(f, a, b, h, &mut evals)?;
        if prev_valid && level >= FIRST_COMPARE_LEVEL {
            last_delta = (s - prev).norm();
            if last_delta <= tol * rel_scale(s) {
                return Ok(QuadratureResult {
                    value: s,
                    error: last_delta,
                    evaluations: evals,
                    converged: true,
                    method: Method::TanhSinh,
                });
            }
        }
        prev = s;
        prev_valid = true;
    }
    Ok(QuadratureResult {
        value: prev,
        error: last_delta,
        evaluations: evals,
        converged: false,
        method: Method::TanhSinh,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::IntegrandHints;
    use approx::assert_relative_eq;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn exponential_integral() {
        let r = integrate_halfline_plain(&|x| re((-x).exp()), 1e-13, AxisHints::default()).unwrap();
        assert!(r.converged);
        assert!(r.error < 1e-12);
        assert_relative_eq!(r.value.re, 1.0, max_relative = 1e-13);
    }

    #[test]
    fn sqrt_singularity() {
        // ∫_0^∞ x^{-1/2} e^{-x} dx = Γ(1/2) = √π.
        let hints = IntegrandHints::smooth(1).with_singularity(0, -0.5);
        let r = integrate_halfline_plain(
            &|x| re(x.powf(-0.5) * (-x).exp()),
            1e-12,
            hints.axes[0],
        )
        .unwrap();
        assert!(r.converged);
        assert_relative_eq!(r.value.re, std::f64::consts::PI.sqrt(), max_relative = 1e-11);
    }

    #[test]
    fn algebraic_tail() {
        // ∫_0^∞ x^{-0.6} / (1 + 0.5 x) dx = π / sin(0.4π) · 0.5^{-0.4}
        let truth = std::f64::consts::PI / (0.4 * std::f64::consts::PI).sin() * 0.5f64.powf(-0.4);
        let r = integrate_halfline_plain(
            &|x| re(x.powf(-0.6) / (1.0 + 0.5 * x)),
            1e-11,
            AxisHints {
                singularity_exponent: -0.6,
                decay_scale: 1.0,
            },
        )
        .unwrap();
        assert!(r.converged);
        assert_relative_eq!(r.value.re, truth, max_relative = 1e-10);
    }

    #[test]
    fn finite_interval_basic() {
        // ∫_0^1 x^{-1/2} dx = 2 with an endpoint singularity.
        let r = integrate_finite(&|x| re(x.powf(-0.5)), 0.0, 1.0, 1e-12).unwrap();
        assert!(r.converged);
        assert_relative_eq!(r.value.re, 2.0, max_relative = 1e-11);
    }

    #[test]
    fn scaling_is_exact_for_power_of_two() {
        // Multiplying the integrand by 4 scales the result bit-for-bit, since
        // the node set and rounding pattern are unchanged.
        let base = integrate_halfline_plain(
            &|x| re(x.powf(-0.3) * (-x).exp()),
            1e-11,
            AxisHints {
                singularity_exponent: -0.3,
                decay_scale: 1.0,
            },
        )
        .unwrap();
        let scaled = integrate_halfline_plain(
            &|x| re(4.0 * x.powf(-0.3) * (-x).exp()),
            1e-11,
            AxisHints {
                singularity_exponent: -0.3,
                decay_scale: 1.0,
            },
        )
        .unwrap();
        assert_eq!(scaled.value.re.to_bits(), (4.0 * base.value.re).to_bits());
        assert_eq!(scaled.evaluations, base.evaluations);
    }

    #[test]
    fn non_finite_sample_reported() {
        let r = integrate_halfline_plain(&|_x| re(f64::NAN), 1e-8, AxisHints::default());
        assert!(matches!(r, Err(Error::NonFiniteSample { .. })));
    }

    #[test]
    fn substitution_consistency() {
        // Mirrors a change of variables x = t²: ∫ F(x) dx = ∫ F(t²) 2t dt.
        for (f, sigma) in [
            (
                (|x: f64| re(x.powf(-0.3) * (-x).exp())) as fn(f64) -> Complex64,
                -0.3,
            ),
            (|x: f64| re((-x).exp() / (1.0 + x)), 0.0),
            (|x: f64| re(x * (-1.7 * x).exp()), 0.0),
        ] {
            let direct =
                integrate_halfline_plain(&f, 1e-12, AxisHints { singularity_exponent: sigma, decay_scale: 1.0 })
                    .unwrap();
            let subst = integrate_halfline_plain(
                &|t| f(t * t) * 2.0 * t,
                1e-12,
                AxisHints::default().clone(),
            )
            .unwrap();
            assert_relative_eq!(direct.value.re, subst.value.re, max_relative = 1e-9);
        }
    }
}
