//! Wynn's epsilon algorithm for nonlinear sequence acceleration.

/// Extrapolate the limit of a slowly converging (typically alternating)
/// sequence of partial sums. Returns the best estimate together with a
/// crude error estimate from the last two even-column entries.
pub fn wynn_epsilon(seq: &[f64]) -> (f64, f64) {
    let n = seq.len();
    if n == 0 {
        return (0.0, f64::INFINITY);
    }
    if n == 1 {
        return (seq[0], f64::INFINITY);
    }
    // eps[k] holds the current diagonal; standard in-place scheme.
    let mut table: Vec<f64> = Vec::with_capacity(n);
    let mut best = seq[0];
    let mut prev_best = f64::INFINITY;
    for &s in seq {
        let mut last = 0.0f64; // ε_{-1} = 0
        let mut cur = s;
        for e in table.iter_mut() {
            let denom = cur - *e;
            let next = if denom.abs() < 1e-308 {
                // Converged to machine identity; propagate.
                last
            } else {
                last + 1.0 / denom
            };
            last = *e;
            *e = cur;
            cur = next;
        }
        table.push(cur);
        let len = table.len();
        if len % 2 == 1 {
            prev_best = best;
            best = table[len - 1];
        }
    }
    (best, (best - prev_best).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn accelerates_alternating_harmonic() {
        // Σ (-1)^{n+1}/n = ln 2; plain partial sums converge O(1/n).
        let mut partial = Vec::new();
        let mut s = 0.0;
        for n in 1..=24 {
            s += if n % 2 == 1 { 1.0 } else { -1.0 } / n as f64;
            partial.push(s);
        }
        let (v, err) = wynn_epsilon(&partial);
        assert_relative_eq!(v, std::f64::consts::LN_2, max_relative = 1e-12);
        assert!(err < 1e-9);
    }

    #[test]
    fn accelerates_slow_alternating_tail() {
        // Σ (-1)^n / √(n+1) = (1 - √2) ζ(1/2) ≈ 0.6048986434216305.
        let mut partial = Vec::new();
        let mut s = 0.0;
        for n in 0..40 {
            let t = 1.0 / ((n + 1) as f64).sqrt();
            s += if n % 2 == 0 { t } else { -t };
            partial.push(s);
        }
        let (v, _) = wynn_epsilon(&partial);
        assert_relative_eq!(v, 0.604_898_643_421_630_5, max_relative = 1e-10);
    }

    #[test]
    fn exact_sequence_passes_through() {
        let (v, _) = wynn_epsilon(&[2.0, 2.0, 2.0, 2.0, 2.0]);
        assert_eq!(v, 2.0);
    }
}
