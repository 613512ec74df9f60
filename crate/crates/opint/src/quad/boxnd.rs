//! Tensorized double-exponential quadrature over ℝ₊² and ℝ₊³.
//!
//! All axes share one refinement level; rows (and planes) are scanned from
//! the map center outward and truncated once their contribution is
//! negligible, so the effective node set adapts to the integrand's decay
//! without giving up determinism.

use num_complex::Complex64;

use super::{rel_scale, IntegrandHints, Method, QuadratureResult};
use crate::error::{Error, Result};

const MAX_LEVEL_2D: usize = 9;
const MAX_LEVEL_3D: usize = 7;
const FIRST_COMPARE_LEVEL: usize = 3;
const T_NEG_FLOOR: f64 = -6.4;
const T_POS_CEIL: f64 = 680.0;
const RUN: usize = 6;

struct AxisNode {
    x: f64,
    w: f64,
}

/// Abscissas and weights of the exp-sinh map at step `h`, center-outward
/// order (j = 0, 1, 2, ..., then j = -1, -2, ...), split per direction.
fn axis_nodes(h: f64, lambda: f64) -> [Vec<AxisNode>; 2] {
    let mut sides: [Vec<AxisNode>; 2] = [Vec::new(), Vec::new()];
    for (side, dir) in [(0usize, 1i64), (1usize, -1i64)] {
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
            sides[side].push(AxisNode {
                x,
                w: x * (1.0 + emt),
            });
            j += dir;
        }
    }
    sides
}

fn pass_2d(
    f: &dyn Fn(&[f64]) -> Complex64,
    h: f64,
    hints: &IntegrandHints,
    evals: &mut usize,
) -> Result<Complex64> {
    let ax = axis_nodes(h, hints.axes[0].decay_scale);
    let ay = axis_nodes(h, hints.axes[1].decay_scale);
    let mut total = Complex64::new(0.0, 0.0);
    for xs in &ax {
        let mut outer_run = 0usize;
        for nx in xs {
            let mut row = Complex64::new(0.0, 0.0);
            for ys in &ay {
                let mut run = 0usize;
                for ny in ys {
                    let v = f(&[nx.x, ny.x]);
                    *evals += 1;
                    if !v.re.is_finite() || !v.im.is_finite() {
                        return Err(Error::NonFiniteSample { abscissa: nx.x });
                    }
                    let term = ny.w * v;
                    row += term;
                    if term.norm() <= 1e-18 * rel_scale(row) {
                        run += 1;
                        if run >= RUN {
                            break;
                        }
                    } else {
                        run = 0;
                    }
                }
            }
            let contrib = nx.w * row;
            total += contrib;
            if contrib.norm() <= 1e-17 * rel_scale(total) {
                outer_run += 1;
                if outer_run >= RUN {
                    break;
                }
            } else {
                outer_run = 0;
            }
        }
    }
    Ok(total * h * h)
}

fn pass_3d(
    f: &dyn Fn(&[f64]) -> Complex64,
    h: f64,
    hints: &IntegrandHints,
    evals: &mut usize,
) -> Result<Complex64> {
    let ax = axis_nodes(h, hints.axes[0].decay_scale);
    let ay = axis_nodes(h, hints.axes[1].decay_scale);
    let az = axis_nodes(h, hints.axes[2].decay_scale);
    let mut total = Complex64::new(0.0, 0.0);
    for xs in &ax {
        let mut plane_run = 0usize;
        for nx in xs {
            let mut plane = Complex64::new(0.0, 0.0);
            for ys in &ay {
                let mut row_run = 0usize;
                for ny in ys {
                    let mut row = Complex64::new(0.0, 0.0);
                    for zs in &az {
                        let mut run = 0usize;
                        for nz in zs {
                            let v = f(&[nx.x, ny.x, nz.x]);
                            *evals += 1;
                            if !v.re.is_finite() || !v.im.is_finite() {
                                return Err(Error::NonFiniteSample { abscissa: nx.x });
                            }
                            let term = nz.w * v;
                            row += term;
                            if term.norm() <= 1e-18 * rel_scale(row) {
                                run += 1;
                                if run >= RUN {
                                    break;
                                }
                            } else {
                                run = 0;
                            }
                        }
                    }
                    let rc = ny.w * row;
                    plane += rc;
                    if rc.norm() <= 1e-17 * rel_scale(plane) {
                        row_run += 1;
                        if row_run >= RUN {
                            break;
                        }
                    } else {
                        row_run = 0;
                    }
                }
            }
            let pc = nx.w * plane;
            total += pc;
            if pc.norm() <= 1e-17 * rel_scale(total) {
                plane_run += 1;
                if plane_run >= RUN {
                    break;
                }
            } else {
                plane_run = 0;
            }
        }
    }
    Ok(total * h * h * h)
}

/// ∫ over ℝ₊^k (k = 2, 3) of `f`, tensor DE with shared level control.
///
/// For k = 3 the integrand is assumed to decay exponentially along each axis
/// (set the decay scales in the hints); heavy-tailed 3D integrands belong to
/// [`integrate_mc`](super::integrate_mc) instead.
pub fn integrate_box(
    f: &dyn Fn(&[f64]) -> Complex64,
    k: usize,
    tol: f64,
    hints: &IntegrandHints,
) -> Result<QuadratureResult> {
    if !(2..=3).contains(&k) {
        return Err(Error::domain("integrate_box", "k must be 2 or 3"));
    }
    if hints.axes.len() != k {
        return Err(Error::Dimension {
            expected: k,
            got: hints.axes.len(),
        });
    }
    let max_level = if k == 2 { MAX_LEVEL_2D } else { MAX_LEVEL_3D };
    let mut evals = 0usize;
    let mut prev = Complex64::new(0.0, 0.0);
    let mut prev_valid = false;
    let mut last_delta = f64::INFINITY;
    for level in 1..=max_level {
        let h = 0.5 / (1u64 << level) as f64 * 2.0;
        let s = if k == 2 {
            pass_2d(f, h, hints, &mut evals)?
        } else {
            pass_3d(f, h, hints, &mut evals)?
        };
        if prev_valid && level >= FIRST_COMPARE_LEVEL {
            last_delta = (s - prev).norm();
            if last_delta <= tol * rel_scale(s) {
                return Ok(QuadratureResult {
                    value: s,
                    error: last_delta,
                    evaluations: evals,
                    converged: true,
                    method: Method::TensorDe,
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
        method: Method::TensorDe,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn separable_exponential_2d() {
        let r = integrate_box(
            &|x| re((-x[0] - x[1]).exp()),
            2,
            1e-11,
            &IntegrandHints::smooth(2),
        )
        .unwrap();
        assert!(r.converged);
        assert_relative_eq!(r.value.re, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn separable_exponential_3d() {
        let r = integrate_box(
            &|x| re((-x[0] - x[1] - x[2]).exp()),
            3,
            1e-9,
            &IntegrandHints::smooth(3),
        )
        .unwrap();
        assert!(r.converged);
        assert_relative_eq!(r.value.re, 1.0, max_relative = 1e-8);
    }

    #[test]
    fn gaussian_cross_term() {
        // 4 ∫∫ e^{-x²-y²} cos(2xy) dx dy = π/√2.
        let r = integrate_box(
            &|x| re(4.0 * (-x[0] * x[0] - x[1] * x[1]).exp() * (2.0 * x[0] * x[1]).cos()),
            2,
            1e-8,
            &IntegrandHints::smooth(2),
        )
        .unwrap();
        assert!(r.converged);
        assert_relative_eq!(
            r.value.re,
            std::f64::consts::PI / std::f64::consts::SQRT_2,
            max_relative = 1e-7
        );
    }

    #[test]
    fn dimension_mismatch() {
        let r = integrate_box(&|_| re(0.0), 2, 1e-8, &IntegrandHints::smooth(3));
        assert!(matches!(r, Err(Error::Dimension { .. })));
    }
}
