//! Error function on the real line.

/// erf(x), real argument.
///
/// Uses the cancellation-free Kummer form
/// erf(x) = (2/√π) e^{-x²} Σ_n 2^n x^{2n+1} / (2n+1)!!,
/// every summand positive, so accuracy holds uniformly; for |x| ≥ 6 the
/// result is ±1 to below 1e-16.
pub fn erf(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if x < 0.0 {
        return -erf(-x);
    }
    if x >= 6.0 {
        return 1.0;
    }
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut n = 0u32;
    loop {
        n += 1;
        term *= 2.0 * x2 / (2.0 * n as f64 + 1.0);
        let prev = sum;
        sum += term;
        if sum == prev {
            break;
        }
    }
    2.0 / std::f64::consts::PI.sqrt() * (-x2).exp() * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn erf_zero() {
        assert_eq!(erf(0.0), 0.0);
    }

    // Trapezoid oracle for erf(x) = (2/√π) ∫_0^x e^{-t²} dt.
    fn erf_quad_oracle(x: f64) -> f64 {
        let steps = 400_000usize;
        let h = x / steps as f64;
        let f = |t: f64| (-t * t).exp();
        let mut acc = (f(0.0) + f(x)) / 2.0;
        for i in 1..steps {
            acc += f(i as f64 * h);
        }
        2.0 / std::f64::consts::PI.sqrt() * acc * h
    }

    #[test]
    fn erf_matches_quadrature() {
        for &x in &[0.2, 0.5, 1.0, 2.3] {
            assert_relative_eq!(erf(x), erf_quad_oracle(x), max_relative = 1e-10);
        }
    }

    #[test]
    fn erf_odd_and_saturating() {
        assert_relative_eq!(erf(-1.3), -erf(1.3), max_relative = 1e-15);
        assert_relative_eq!(erf(7.0), 1.0, max_relative = 1e-16);
    }
}
