//! The algebraic kernel `K(z) = z + b + sqrt(z^2 + 2bz)`, the closed form of
//! its power-weighted moment integral, and numerical evaluation of the two
//! kernel integrals whose series expansions the verifier checks.
//!
//! The base identity is
//!
//! ```text
//! ∫_0^∞ z^{α-1} K(z)^{-β} dz
//!     = 2 β b^{-β} (b/2)^α Γ(2α) Γ(β-α) / Γ(1+α+β),   0 < α < β, b > 0.
//! ```
//!
//! Every integral here is evaluated after the substitution
//! `z = b (cosh u - 1)`, under which the kernel collapses to `b e^u`, the
//! square root disappears, and the endpoint behaviour becomes `u^{2α-1}`:
//! exactly what the exp-sinh quadrature engine wants.

use std::cell::RefCell;
use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::hyper::{eval_ext_hyper_cached, ExtendedTermCache, HypergeometricSpec};
use crate::quadrature::{integrate_semi_infinite, QuadratureResult, Tolerances};
use crate::special::{is_nonpositive_integer, log_gamma_unchecked, ExtendedParameter};

/// Parameters of the base kernel integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OberhettingerParams {
    /// Exponent of `z` in the integrand (the theorems' `δ`).
    pub alpha: f64,
    /// Exponent of the kernel (the theorems' `μ`).
    pub beta: f64,
    /// Kernel shift, `b > 0`.
    pub b: f64,
}

impl OberhettingerParams {
    pub fn new(alpha: f64, beta: f64, b: f64) -> Result<Self> {
        let params = OberhettingerParams { alpha, beta, b };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.beta > self.alpha) {
            return Err(Error::Domain(format!(
                "kernel integral requires 0 < alpha < beta, got alpha = {}, beta = {}",
                self.alpha, self.beta
            )));
        }
        if !(self.b > 0.0) || !self.b.is_finite() {
            return Err(Error::Domain(format!(
                "kernel shift must be positive, got b = {}",
                self.b
            )));
        }
        Ok(())
    }
}

/// The kernel `K(z) = z + b + sqrt(z^2 + 2bz)`.
///
/// `K(0) = b`, `K` is strictly increasing, and `K(z) ~ 2z + b` at infinity.
/// Under `z = b (cosh u - 1)` it equals `b e^u`.
pub fn kernel(z: f64, b: f64) -> f64 {
    debug_assert!(z >= 0.0 && b > 0.0);
    z + b + (z * (z + 2.0 * b)).sqrt()
}

/// `ln sinh x` for `x > 0` without overflow.
fn ln_sinh(x: f64) -> f64 {
    if x > 33.0 {
        // sinh x = e^x (1 - e^{-2x}) / 2 and the correction is below 1 ulp.
        x - LN_2
    } else {
        x.sinh().ln()
    }
}

/// Logarithm of the substituted kernel integrand
/// `(b(cosh u - 1))^{α-1} (b e^u)^{-β} b sinh u`, using
/// `cosh u - 1 = 2 sinh^2(u/2)`.
fn log_kernel_integrand(u: f64, alpha: f64, beta: f64, b: f64) -> f64 {
    (alpha - 1.0) * (LN_2 + b.ln() + 2.0 * ln_sinh(0.5 * u)) - beta * (b.ln() + u)
        + b.ln()
        + ln_sinh(u)
}

/// Closed form of the base kernel integral, evaluated in log space.
pub fn oberhettinger_closed_form(params: &OberhettingerParams) -> Result<f64> {
    params.validate()?;
    let (alpha, beta, b) = (params.alpha, params.beta, params.b);
    let log_value = LN_2 + beta.ln() + (alpha - beta) * b.ln() - alpha * LN_2
        + log_gamma_unchecked(2.0 * alpha)
        + log_gamma_unchecked(beta - alpha)
        - log_gamma_unchecked(1.0 + alpha + beta);
    Ok(log_value.exp())
}

/// The base kernel integral by quadrature.
pub fn oberhettinger_numeric(
    params: &OberhettingerParams,
    tol: &Tolerances,
) -> Result<QuadratureResult> {
    params.validate()?;
    let (alpha, beta, b) = (params.alpha, params.beta, params.b);
    integrate_semi_infinite(
        |u| log_kernel_integrand(u, alpha, beta, b).exp(),
        2.0 * alpha - 1.0,
        tol,
    )
}

/// Which identity a case instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Kernel-damped argument `y / K(z)`, general series.
    T1,
    /// `z`-weighted argument `y z / K(z)`, general series.
    T2,
    /// Gauss specialization of T1.
    C31,
    /// Gauss specialization of T2.
    C32,
    /// C31 at `p = 0`.
    C33,
    /// C32 at `p = 0`.
    C34,
}

impl TheoremId {
    /// True for the identities whose inner argument carries the factor `z`.
    pub fn z_weighted(self) -> bool {
        matches!(self, TheoremId::T2 | TheoremId::C32 | TheoremId::C34)
    }

    /// True for the Gauss (2F1) specializations.
    pub fn is_corollary(self) -> bool {
        !matches!(self, TheoremId::T1 | TheoremId::T2)
    }

    /// True for the corollaries defined at `p = 0`.
    pub fn requires_classical(self) -> bool {
        matches!(self, TheoremId::C33 | TheoremId::C34)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::C31 => "C31",
            TheoremId::C32 => "C32",
            TheoremId::C33 => "C33",
            TheoremId::C34 => "C34",
        }
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which form of the right-hand side to evaluate.
///
/// `AsPrinted` is the published formula exactly as typeset; `Corrected` is
/// the form re-derived from the published proof's own term-wise display.
/// The two agree for T1/C31/C33 and differ for the `z`-weighted family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    AsPrinted,
    Corrected,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::AsPrinted => "as_printed",
            Variant::Corrected => "corrected",
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One identity instance: the inner-series parameters plus `(δ, μ, b, y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCase {
    pub theorem_id: TheoremId,
    /// The extended pair `(a1, p)` of the inner series.
    pub first_numerator: ExtendedParameter,
    /// Classical numerator parameters `a2 ... ar` of the inner series.
    pub other_numerators: Vec<f64>,
    /// Denominator parameters `β1 ... βs` of the inner series.
    pub denominators: Vec<f64>,
    pub delta: f64,
    pub mu: f64,
    pub b: f64,
    pub y: f64,
    pub variant: Variant,
}

impl IdentityCase {
    pub fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.mu > self.delta) {
            return Err(Error::InvalidCase(format!(
                "hypotheses require 0 < delta < mu, got delta = {}, mu = {}",
                self.delta, self.mu
            )));
        }
        if !(self.b > 0.0) || !self.b.is_finite() {
            return Err(Error::InvalidCase(format!("b must be positive, got {}", self.b)));
        }
        if !self.y.is_finite() {
            return Err(Error::InvalidCase(format!("y must be finite, got {}", self.y)));
        }
        if self.first_numerator.extension < 0.0 {
            return Err(Error::InvalidCase(format!(
                "extension parameter must be nonnegative, got {}",
                self.first_numerator.extension
            )));
        }
        for &beta in &self.denominators {
            if is_nonpositive_integer(beta) {
                return Err(Error::InvalidCase(format!(
                    "series denominator {beta} is zero or a negative integer"
                )));
            }
        }
        if self.theorem_id.is_corollary()
            && (self.other_numerators.len() != 1 || self.denominators.len() != 1)
        {
            return Err(Error::InvalidCase(format!(
                "{} is a Gauss specialization and needs exactly one extra numerator and one denominator",
                self.theorem_id
            )));
        }
        if self.theorem_id.requires_classical() && !self.first_numerator.is_classical() {
            return Err(Error::InvalidCase(format!(
                "{} is defined at p = 0, got p = {}",
                self.theorem_id, self.first_numerator.extension
            )));
        }
        // Convergence preconditions for ratio-type series (r = s + 1
        // counting the extended parameter). The augmented right-hand sides
        // inherit the same type, so one bound covers both sides:
        // sup_z |y / K(z)| = |y| / b and sup_z |y z / K(z)| = |y| / 2.
        let r = 1 + self.other_numerators.len();
        let s = self.denominators.len();
        if r > s + 1 {
            return Err(Error::InvalidCase(format!(
                "inner series {r}F{s} diverges for every nonzero argument"
            )));
        }
        if r == s + 1 {
            if self.theorem_id.z_weighted() {
                if self.y.abs() >= 2.0 {
                    return Err(Error::InvalidCase(format!(
                        "z-weighted identities require |y| < 2 for a ratio-type series, got y = {}",
                        self.y
                    )));
                }
            } else if self.y.abs() >= self.b {
                return Err(Error::InvalidCase(format!(
                    "kernel-damped identities require |y| < b for a ratio-type series, got y = {}, b = {}",
                    self.y, self.b
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn inner_spec(&self, argument: f64) -> HypergeometricSpec {
        HypergeometricSpec {
            first_numerator: self.first_numerator,
            other_numerators: self.other_numerators.clone(),
            denominators: self.denominators.clone(),
            argument,
        }
    }
}

/// Left-hand side of the kernel-damped identity:
/// `∫_0^∞ z^{δ-1} K(z)^{-μ} F[y / K(z)] dz`.
pub fn theorem1_lhs(case: &IdentityCase, tol: &Tolerances) -> Result<QuadratureResult> {
    lhs_quadrature(case, tol, false)
}

/// Left-hand side of the `z`-weighted identity:
/// `∫_0^∞ z^{δ-1} K(z)^{-μ} F[y z / K(z)] dz`.
pub fn theorem2_lhs(case: &IdentityCase, tol: &Tolerances) -> Result<QuadratureResult> {
    lhs_quadrature(case, tol, true)
}

fn lhs_quadrature(
    case: &IdentityCase,
    tol: &Tolerances,
    z_weighted: bool,
) -> Result<QuadratureResult> {
    case.validate()?;
    tol.validate()?;
    let (delta, mu, b, y) = (case.delta, case.mu, case.b, case.y);
    // Keep the inner-series truncation error a decade below the quadrature
    // budget.
    let inner_tol = tol.inner();
    let cache = ExtendedTermCache::new(case.first_numerator, inner_tol.clone());
    // The quadrature engine speaks plain f64; inner failures are recorded
    // out of band and poison the run through a NaN.
    let failure: RefCell<Option<(f64, Error)>> = RefCell::new(None);

    let integrand = |u: f64| {
        let weight = log_kernel_integrand(u, delta, mu, b).exp();
        if weight == 0.0 {
            return 0.0;
        }
        // Under z = b(cosh u - 1): y/K = (y/b) e^{-u} and
        // yz/K = y (1 - e^{-u})^2 / 2.
        let argument = if z_weighted {
            let one_minus = -(-u).exp_m1();
            0.5 * y * one_minus * one_minus
        } else {
            y / b * (-u).exp()
        };
        let spec = case.inner_spec(argument);
        match eval_ext_hyper_cached(&spec, &inner_tol, &cache) {
            Ok(series) if series.converged => weight * series.value,
            Ok(series) => {
                let z = b * ((u.cosh()) - 1.0);
                failure.borrow_mut().get_or_insert((
                    z,
                    Error::NonConvergence(format!(
                        "inner series stalled after {} terms at z = {z:.6e}",
                        series.terms_used
                    )),
                ));
                f64::NAN
            }
            Err(e) => {
                let z = b * ((u.cosh()) - 1.0);
                failure
                    .borrow_mut()
                    .get_or_insert((z, Error::NonConvergence(format!("at z = {z:.6e}: {e}"))));
                f64::NAN
            }
        }
    };

    let result = integrate_semi_infinite(integrand, 2.0 * delta - 1.0, tol)?;
    if let Some((_, error)) = failure.into_inner() {
        return Err(error);
    }
    Ok(result)
}
