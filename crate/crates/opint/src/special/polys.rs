//! Euler, Hermite (physicists'), and generalized Laguerre polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Upper bound on polynomial order accepted by the evaluators.
pub const MAX_POLY_ORDER: usize = 200;

/// Physicists' Hermite polynomial H_n(x), three-term recurrence.
pub fn hermite_poly(n: usize, x: f64) -> Result<f64> {
    if n > MAX_POLY_ORDER {
        return Err(Error::domain("hermite_poly", "n exceeds the stability bound 200"));
    }
    let (mut prev, mut cur) = (1.0f64, 2.0 * x);
    if n == 0 {
        return Ok(prev);
    }
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Generalized Laguerre polynomial L_n^{(α)}(x), three-term recurrence.
pub fn laguerre_poly(n: usize, alpha: f64, x: f64) -> Result<f64> {
    if n > MAX_POLY_ORDER {
        return Err(Error::domain("laguerre_poly", "n exceeds the stability bound 200"));
    }
    let (mut prev, mut cur) = (1.0f64, 1.0 + alpha - x);
    if n == 0 {
        return Ok(prev);
    }
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Euler polynomial E_n(x) at a rational argument, evaluated exactly.
///
/// Uses E_n(x) = x^n - (1/2) Σ_{m<n} C(n,m) E_m(x), which follows from the
/// generating function 2e^{xz}/(e^z + 1). The recurrence suffers heavy
/// cancellation in floating point already near n ≈ 60, so rational arguments
/// go through `BigRational` arithmetic for every order up to 200; the
/// catalog needs orders ≈ 150 at x = 1/6.
pub fn euler_poly_rational(n: usize, num: i64, den: i64) -> Result<BigRational> {
    if n > MAX_POLY_ORDER {
        return Err(Error::domain("euler_poly", "n exceeds the supported bound 200"));
    }
    if den == 0 {
        return Err(Error::domain("euler_poly", "zero denominator"));
    }
    let x = BigRational::new(BigInt::from(num), BigInt::from(den));
    Ok(euler_table(n, &x).pop().unwrap())
}

/// Table E_0(x), ..., E_n(x) for a rational x.
fn euler_table(n: usize, x: &BigRational) -> Vec<BigRational> {
    let mut values: Vec<BigRational> = Vec::with_capacity(n + 1);
    let mut xpow = BigRational::one();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    // Pascal row C(k, m) maintained incrementally.
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..=n {
        if k > 0 {
            xpow *= x.clone();
            let mut next = Vec::with_capacity(k + 1);
            next.push(BigInt::one());
            for m in 1..k {
                next.push(&row[m - 1] + &row[m]);
            }
            next.push(BigInt::one());
            row = next;
        }
        let mut acc = BigRational::zero();
        for (m, val) in values.iter().enumerate() {
            acc += BigRational::from(row[m].clone()) * val;
        }
        values.push(xpow.clone() - half.clone() * acc);
    }
    values
}

/// Euler polynomial E_n(x) as f64.
///
/// Rational arguments with denominator ≤ 64 are detected and routed through
/// the exact path; other arguments use the floating recurrence, reliable to
/// n ≈ 60.
pub fn euler_poly(n: usize, x: f64) -> Result<f64> {
    if n > MAX_POLY_ORDER {
        return Err(Error::domain("euler_poly", "n exceeds the supported bound 200"));
    }
    for den in 1..=64i64 {
        let num = (x * den as f64).round();
        if (x - num / den as f64).abs() < 1e-14 && num.abs() < 1e15 {
            let v = euler_poly_rational(n, num as i64, den)?;
            return v
                .to_f64()
                .ok_or_else(|| Error::Overflow(format!("euler_poly({n}, {x})")));
        }
    }
    if n > 60 {
        return Err(Error::domain(
            "euler_poly",
            "floating recurrence unreliable past n = 60 for irrational arguments",
        ));
    }
    let mut values: Vec<f64> = Vec::with_capacity(n + 1);
    let mut row: Vec<f64> = vec![1.0];
    for k in 0..=n {
        if k > 0 {
            let mut next = Vec::with_capacity(k + 1);
            next.push(1.0);
            for m in 1..k {
                next.push(row[m - 1] + row[m]);
            }
            next.push(1.0);
            row = next;
        }
        let acc: f64 = values.iter().enumerate().map(|(m, v)| row[m] * v).sum();
        values.push(x.powi(k as i32) - acc / 2.0);
    }
    Ok(values[n])
}

/// |E_n(x)| can exceed f64 range for large n; expose the exact value's
/// magnitude check for callers that convert lazily.
pub fn euler_poly_rational_f64(n: usize, num: i64, den: i64) -> Result<f64> {
    let v = euler_poly_rational(n, num, den)?;
    if v.numer().is_zero() {
        return Ok(0.0);
    }
    v.to_f64()
        .filter(|f| f.is_finite() || v.abs() > BigRational::one())
        .ok_or_else(|| Error::Overflow(format!("euler_poly({n})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn hermite_low_orders() {
        // H_0 = 1, H_1 = 2x, H_2 = 4x² - 2.
        assert_eq!(hermite_poly(0, 0.3).unwrap(), 1.0);
        assert_relative_eq!(hermite_poly(1, 0.3).unwrap(), 0.6, max_relative = 1e-15);
        assert_relative_eq!(hermite_poly(2, 0.3).unwrap(), 4.0 * 0.09 - 2.0, max_relative = 1e-15);
    }

    #[test]
    fn euler_even_symmetry_at_sixth() {
        // E_{2n}(1/6) - E_{2n}(5/6) = 0 for n = 1..10.
        for n in 1..=10usize {
            let a = euler_poly_rational(2 * n, 1, 6).unwrap();
            let b = euler_poly_rational(2 * n, 5, 6).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn euler_odd_antisymmetry() {
        // E_n(1-x) = (-1)^n E_n(x).
        for n in [1usize, 3, 7, 15, 61, 121] {
            let a = euler_poly_rational(n, 1, 6).unwrap();
            let b = euler_poly_rational(n, 5, 6).unwrap();
            assert_eq!(a, -b);
        }
    }

    #[test]
    fn euler_known_values() {
        // E_1(x) = x - 1/2, E_3(x) = x³ - (3/2)x² + 1/4.
        assert_relative_eq!(euler_poly(1, 0.25).unwrap(), -0.25, max_relative = 1e-14);
        let x = 0.7f64;
        assert_relative_eq!(
            euler_poly(3, x).unwrap(),
            x.powi(3) - 1.5 * x * x + 0.25,
            max_relative = 1e-13
        );
    }

    // Direct-sum oracle for L_n^{(α)}(x) = Σ_k (-1)^k/k! C(n+α, n-k) x^k.
    fn laguerre_oracle(n: usize, alpha: f64, x: f64) -> f64 {
        let mut sum = 0.0;
        for k in 0..=n {
            // C(n+α, n-k) = Γ(n+α+1)/(Γ(n-k+1) Γ(α+k+1))
            let c = crate::special::gamma::gamma_re(n as f64 + alpha + 1.0).unwrap()
                / (crate::special::gamma::gamma_re((n - k) as f64 + 1.0).unwrap()
                    * crate::special::gamma::gamma_re(alpha + k as f64 + 1.0).unwrap());
            let phi = if k % 2 == 0 { 1.0 } else { -1.0 }
                / crate::special::gamma::gamma_re(k as f64 + 1.0).unwrap();
            sum += phi * c * x.powi(k as i32);
        }
        sum
    }

    #[test]
    fn laguerre_matches_binomial_sum() {
        let v = laguerre_poly(4, 1.0, 0.7).unwrap();
        assert_relative_eq!(v, laguerre_oracle(4, 1.0, 0.7), max_relative = 1e-13);
        let v2 = laguerre_poly(9, 0.5, 1.3).unwrap();
        assert_relative_eq!(v2, laguerre_oracle(9, 0.5, 1.3), max_relative = 1e-12);
    }

    #[test]
    fn order_bounds() {
        assert!(hermite_poly(201, 0.1).is_err());
        assert!(euler_poly(201, 0.5).is_err());
    }
}
