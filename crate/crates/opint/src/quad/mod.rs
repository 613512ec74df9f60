//! Numerical integration oracle: half-line, finite-interval, 2D/3D box,
//! oscillatory, and principal-value quadrature, plus a seeded Monte-Carlo
//! cross-check for triple integrals.
//!
//! Everything here is deliberately independent of the operator-calculus side
//! of the crate; it only consumes plain integrand closures, so it can serve
//! as the second route when checking formal identities.

mod accel;
mod boxnd;
mod de;
mod mc;
mod oscillatory;
mod pv;

pub use accel::wynn_epsilon;
pub use boxnd::integrate_box;
pub use de::{integrate_finite, integrate_halfline_plain};
pub use mc::integrate_mc;
pub use oscillatory::integrate_oscillatory;
pub use pv::integrate_pv;

use num_complex::Complex64;

use crate::error::Result;

/// Method used to produce a [`QuadratureResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ExpSinh,
    TanhSinh,
    TensorDe,
    OscillatoryPartition,
    PrincipalValue,
    MonteCarlo,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::ExpSinh => "exp-sinh",
            Method::TanhSinh => "tanh-sinh",
            Method::TensorDe => "tensor-de",
            Method::OscillatoryPartition => "oscillatory-partition",
            Method::PrincipalValue => "principal-value",
            Method::MonteCarlo => "monte-carlo",
        };
        f.write_str(s)
    }
}

/// Outcome of a quadrature call.
///
/// `converged` is set only when the internal error estimate met the
/// requested relative tolerance scaled by the result magnitude, so
/// `converged` implies `error <= tol * max(|value|, tiny)`.
#[derive(Debug, Clone)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub error: f64,
    pub evaluations: usize,
    pub converged: bool,
    pub method: Method,
}

/// Per-axis integrand metadata.
#[derive(Debug, Clone, Copy)]
pub struct AxisHints {
    /// Endpoint behaviour x^σ as x → 0⁺; must satisfy σ > -1.
    pub singularity_exponent: f64,
    /// Characteristic decay length; scales the half-line map.
    pub decay_scale: f64,
}

impl Default for AxisHints {
    fn default() -> Self {
        AxisHints {
            singularity_exponent: 0.0,
            decay_scale: 1.0,
        }
    }
}

/// Integrand metadata steering the quadrature routines.
#[derive(Debug, Clone)]
pub struct IntegrandHints {
    pub axes: Vec<AxisHints>,
    /// Phase scale ω of an oscillatory factor trig(ωx); sign-change spacing π/ω.
    pub oscillatory: Option<f64>,
    /// Simple-pole location for principal-value integration.
    pub pole: Option<f64>,
}

impl IntegrandHints {
    /// Hints for a smooth, exponentially decaying integrand in `k` variables.
    pub fn smooth(k: usize) -> Self {
        IntegrandHints {
            axes: vec![AxisHints::default(); k],
            oscillatory: None,
            pole: None,
        }
    }

    pub fn with_singularity(mut self, axis: usize, sigma: f64) -> Self {
        assert!(sigma > -1.0, "singularity exponent must be integrable (> -1)");
        self.axes[axis].singularity_exponent = sigma;
        self
    }

    pub fn with_decay(mut self, axis: usize, scale: f64) -> Self {
        assert!(scale > 0.0);
        self.axes[axis].decay_scale = scale;
        self
    }

    pub fn with_oscillation(mut self, omega: f64) -> Self {
        assert!(omega > 0.0);
        self.oscillatory = Some(omega);
        self
    }

    pub fn with_pole(mut self, x0: f64) -> Self {
        self.pole = Some(x0);
        self
    }
}

/// ∫_0^∞ f(x) dx to relative tolerance `tol`.
///
/// Dispatches on the hints: an oscillatory phase scale routes the call to the
/// partition-and-accelerate integrator, otherwise the exp-sinh
/// double-exponential rule is used directly.
pub fn integrate_halfline(
    f: &dyn Fn(f64) -> Complex64,
    tol: f64,
    hints: &IntegrandHints,
) -> Result<QuadratureResult> {
    if let Some(omega) = hints.oscillatory {
        integrate_oscillatory(f, tol, omega, hints)
    } else {
        integrate_halfline_plain(f, tol, hints.axes.first().copied().unwrap_or_default())
    }
}

pub(crate) const TINY: f64 = 1e-300;

pub(crate) fn rel_scale(v: Complex64) -> f64 {
    v.norm().max(TINY)
}
