//! Complete elliptic integral of the first kind, modulus convention
//! K(k) = ∫_0^{π/2} dθ / √(1 - k² sin²θ) = (π/2) Σ_n [C(2n,n)]² (k/4)^{2n}.

use crate::error::{Error, Result};

/// K(k) for |k| < 1, via the arithmetic-geometric mean.
pub fn elliptic_k(k: f64) -> Result<f64> {
    if !(k.abs() < 1.0) {
        return Err(Error::domain("elliptic_k", "requires |k| < 1"));
    }
    let mut a = 1.0f64;
    let mut b = (1.0 - k * k).sqrt();
    while (a - b).abs() > 1e-17 * a {
        let (an, bn) = ((a + b) / 2.0, (a * b).sqrt());
        a = an;
        b = bn;
    }
    Ok(std::f64::consts::PI / (2.0 * a))
}

/// Partial sum of the binomial series for K, used as a consistency oracle.
pub fn elliptic_k_series(k: f64, terms: usize) -> f64 {
    let q = (k / 4.0) * (k / 4.0);
    let mut binom = 1.0f64; // C(2n, n)
    let mut pw = 1.0f64; // (k/4)^{2n}
    let mut sum = 0.0f64;
    for n in 0..terms {
        sum += binom * binom * pw;
        let nf = n as f64;
        binom *= (2.0 * nf + 1.0) * (2.0 * nf + 2.0) / ((nf + 1.0) * (nf + 1.0));
        pw *= q;
    }
    std::f64::consts::PI / 2.0 * sum
}
