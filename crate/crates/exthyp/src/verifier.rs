//! Right-hand sides of the kernel-integral identities, left-vs-right
//! comparison, and the suite runner.
//!
//! Each identity equates a kernel integral with `prefactor * series`:
//!
//! * kernel-damped family (T1, C31, C33):
//!   prefactor `Γ(2δ) b^{δ-μ} Γ(μ+1) Γ(μ-δ) / (2^{δ-1} Γ(μ) Γ(1+δ+μ))`,
//!   numerators gain `μ+1, μ-δ`, denominators gain `μ, μ+δ+1`, argument `y/b`.
//!
//! * `z`-weighted family (T2, C32, C34), two variants:
//!   - `AsPrinted`: the published form: prefactor
//!     `Γ(μ-δ) b^{δ-μ} Γ(δ) Γ(δ+1/2) Γ(μ+1) / (2^{δ-1} Γ(μ) Γ(1+δ+μ))`,
//!     numerators gain `μ+1, δ+1/2`, denominators gain
//!     `μ, (μ+δ+1)/2, (μ+δ+2)/2`, and the argument is read as `y/b` (the
//!     published argument contains the bound integration variable and cannot
//!     denote a number).
//!   - `Corrected`: resumming the published proof's own term-wise display
//!     with the Legendre duplication formula. Term `n` of that display is
//!     `c_n y^n 2(μ+n) b^{-(μ+n)} (b/2)^{δ+n} Γ(2δ+2n) Γ(μ-δ) / Γ(1+δ+μ+2n)`;
//!     the powers of `b` cancel to `b^{δ-μ} 2^{-δ-n}` (so the argument is
//!     `y/2`, not `y/b`), and splitting `Γ(2δ+2n)` and `Γ(1+δ+μ+2n)` by
//!     duplication yields numerators `μ+1, δ, δ+1/2`, denominators
//!     `μ, (μ+δ+1)/2, (μ+δ+2)/2`, and the same prefactor as the
//!     kernel-damped family. The two prefactors are linked by the
//!     duplication identity `Γ(2δ) = 2^{2δ-1} Γ(δ) Γ(δ+1/2) / sqrt(pi)`,
//!     so the real discrepancy between the variants lives in the series
//!     argument and the missing `δ` numerator.
//!
//! A mismatch between the two sides is a *verdict*, never an error: the
//! as-printed `z`-weighted forms are expected to disagree and their reports
//! carry an errata note instead of being silently replaced.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::hyper::{eval_ext_hyper, HypergeometricSpec, SeriesValue};
use crate::integrals::{theorem1_lhs, theorem2_lhs, IdentityCase, TheoremId, Variant};
use crate::quadrature::{QuadratureResult, Tolerances};
use crate::special::log_gamma_unchecked;

/// Comparison verdict for one identity case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    /// At least one side failed to converge (or the case never ran).
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one left-vs-right comparison.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub case: IdentityCase,
    pub lhs: QuadratureResult,
    pub rhs: SeriesValue,
    pub rhs_prefactor: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub tolerance_used: f64,
    pub verdict: Verdict,
    /// Present on as-printed `z`-weighted runs (the errata flag) and on
    /// cases that could not be evaluated.
    pub errata_note: Option<String>,
}

fn placeholder_quadrature() -> QuadratureResult {
    QuadratureResult {
        value: f64::NAN,
        error_estimate: f64::NAN,
        evaluations: 0,
        converged: false,
    }
}

fn placeholder_series() -> SeriesValue {
    SeriesValue {
        value: f64::NAN,
        terms_used: 0,
        tail_estimate: f64::NAN,
        converged: false,
    }
}

/// Prefactor shared by the kernel-damped family and the corrected
/// `z`-weighted family.
fn base_prefactor(case: &IdentityCase) -> f64 {
    let (delta, mu, b) = (case.delta, case.mu, case.b);
    (log_gamma_unchecked(2.0 * delta) + (delta - mu) * b.ln() + log_gamma_unchecked(mu + 1.0)
        + log_gamma_unchecked(mu - delta)
        - (delta - 1.0) * LN_2
        - log_gamma_unchecked(mu)
        - log_gamma_unchecked(1.0 + delta + mu))
    .exp()
}

/// Prefactor of the published `z`-weighted form.
fn printed_z_weighted_prefactor(case: &IdentityCase) -> f64 {
    let (delta, mu, b) = (case.delta, case.mu, case.b);
    (log_gamma_unchecked(mu - delta) + (delta - mu) * b.ln() + log_gamma_unchecked(delta)
        + log_gamma_unchecked(delta + 0.5)
        + log_gamma_unchecked(mu + 1.0)
        - (delta - 1.0) * LN_2
        - log_gamma_unchecked(mu)
        - log_gamma_unchecked(1.0 + delta + mu))
    .exp()
}

fn augmented(case: &IdentityCase, extra_num: &[f64], extra_den: &[f64], argument: f64) -> HypergeometricSpec {
    let mut other_numerators = case.other_numerators.clone();
    other_numerators.extend_from_slice(extra_num);
    let mut denominators = case.denominators.clone();
    denominators.extend_from_slice(extra_den);
    HypergeometricSpec {
        first_numerator: case.first_numerator,
        other_numerators,
        denominators,
        argument,
    }
}

/// Right-hand side of the kernel-damped identity: `(prefactor, series)`.
pub fn rhs_theorem1(case: &IdentityCase, tol: &Tolerances) -> Result<(f64, SeriesValue)> {
    case.validate()?;
    let (delta, mu) = (case.delta, case.mu);
    let spec = augmented(
        case,
        &[mu + 1.0, mu - delta],
        &[mu, mu + delta + 1.0],
        case.y / case.b,
    );
    let series = eval_ext_hyper(&spec, tol)?;
    Ok((base_prefactor(case), series))
}

/// Right-hand side of the `z`-weighted identity in the requested variant.
pub fn rhs_theorem2(case: &IdentityCase, tol: &Tolerances) -> Result<(f64, SeriesValue)> {
    case.validate()?;
    let (delta, mu) = (case.delta, case.mu);
    let half_sum = (mu + delta + 1.0) / 2.0;
    match case.variant {
        Variant::Corrected => {
            let spec = augmented(
                case,
                &[mu + 1.0, delta, delta + 0.5],
                &[mu, half_sum, half_sum + 0.5],
                case.y / 2.0,
            );
            let series = eval_ext_hyper(&spec, tol)?;
            Ok((base_prefactor(case), series))
        }
        Variant::AsPrinted => {
            let extra_den: Vec<f64> = if case.theorem_id == TheoremId::C34 {
                // The published C34 form lists five denominators, keeping
                // mu + delta + 1 alongside the halved pair.
                vec![mu, mu + delta + 1.0, half_sum, half_sum + 0.5]
            } else {
                vec![mu, half_sum, half_sum + 0.5]
            };
            let spec = augmented(
                case,
                &[mu + 1.0, delta + 0.5],
                &extra_den,
                case.y / case.b,
            );
            let series = eval_ext_hyper(&spec, tol)?;
            Ok((printed_z_weighted_prefactor(case), series))
        }
    }
}

/// Right-hand side of a Gauss-specialization corollary.
///
/// C31/C33 share the kernel-damped assembly; C32/C34 share the `z`-weighted
/// one, so specialization coherence holds by construction.
pub fn rhs_corollary(case: &IdentityCase, tol: &Tolerances) -> Result<(f64, SeriesValue)> {
    if !case.theorem_id.is_corollary() {
        return Err(Error::InvalidCase(format!(
            "{} is not a corollary id",
            case.theorem_id
        )));
    }
    if case.theorem_id.z_weighted() {
        rhs_theorem2(case, tol)
    } else {
        rhs_theorem1(case, tol)
    }
}

fn rhs_for(case: &IdentityCase, tol: &Tolerances) -> Result<(f64, SeriesValue)> {
    match case.theorem_id {
        TheoremId::T1 => rhs_theorem1(case, tol),
        TheoremId::T2 => rhs_theorem2(case, tol),
        _ => rhs_corollary(case, tol),
    }
}

fn lhs_for(case: &IdentityCase, tol: &Tolerances) -> Result<QuadratureResult> {
    if case.theorem_id.z_weighted() {
        theorem2_lhs(case, tol)
    } else {
        theorem1_lhs(case, tol)
    }
}

/// Floor for relative comparisons; below it only the absolute difference is
/// meaningful.
const DEGENERATE_MAGNITUDE: f64 = 1e-300;

/// Compare both sides of one identity case.
///
/// Returns an error only for invalid cases; numerical trouble on either side
/// yields an `Inconclusive` verdict and a mathematical mismatch yields
/// `Fail`.
pub fn verify_identity(case: &IdentityCase, tol: &Tolerances) -> Result<IdentityReport> {
    case.validate()?;
    tol.validate()?;

    let mut note: Option<String> = None;

    let lhs = match lhs_for(case, tol) {
        Ok(q) => q,
        Err(e) => {
            note = Some(format!("left-hand side failed: {e}"));
            placeholder_quadrature()
        }
    };
    let (rhs_prefactor, rhs) = match rhs_for(case, tol) {
        Ok((p, s)) => (p, s),
        Err(e) => {
            note = Some(match note {
                Some(prev) => format!("{prev}; right-hand side failed: {e}"),
                None => format!("right-hand side failed: {e}"),
            });
            (f64::NAN, placeholder_series())
        }
    };

    let rhs_value = rhs_prefactor * rhs.value;
    let abs_diff = (lhs.value - rhs_value).abs();
    let lhs_magnitude = lhs.value.abs();
    let rel_diff = if abs_diff == 0.0 {
        0.0
    } else {
        abs_diff / lhs_magnitude.max(DEGENERATE_MAGNITUDE)
    };

    // Tie the pass bar to the achieved numerical error rather than a fixed
    // magic number: 1e-6 floor plus twenty times the combined relative
    // error budget of the two sides.
    let lhs_rel_err = lhs.error_estimate / lhs_magnitude.max(DEGENERATE_MAGNITUDE);
    let rhs_rel_err = rhs.tail_estimate / rhs.value.abs().max(DEGENERATE_MAGNITUDE);
    let tolerance_used = (1e-6f64).max(20.0 * (lhs_rel_err + rhs_rel_err));

    let verdict = if !lhs.converged || !rhs.converged {
        Verdict::Inconclusive
    } else if lhs_magnitude < DEGENERATE_MAGNITUDE {
        if abs_diff <= tol.abs_tol {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    } else if rel_diff <= tolerance_used {
        Verdict::Pass
    } else {
        Verdict::Fail
    };

    let errata_note = match note {
        Some(n) => Some(n),
        None if case.theorem_id.z_weighted() && case.variant == Variant::AsPrinted => {
            let mut n = format!(
                "as-printed form (series argument read as y/b, prefactor with Γ(δ)Γ(δ+1/2)): \
                 observed rel_diff {rel_diff:.6e} against the quadrature; the corrected variant \
                 resums the proof's own term-wise display to argument y/2"
            );
            if case.theorem_id == TheoremId::C34 {
                n.push_str(
                    "; the printed denominator list additionally keeps mu+delta+1, \
                     making the series 5F5-shaped",
                );
            }
            Some(n)
        }
        None => None,
    };

    Ok(IdentityReport {
        case: case.clone(),
        lhs,
        rhs,
        rhs_prefactor,
        abs_diff,
        rel_diff,
        tolerance_used,
        verdict,
        errata_note,
    })
}

fn invalid_case_report(case: &IdentityCase, error: &Error) -> IdentityReport {
    IdentityReport {
        case: case.clone(),
        lhs: placeholder_quadrature(),
        rhs: placeholder_series(),
        rhs_prefactor: f64::NAN,
        abs_diff: f64::NAN,
        rel_diff: f64::NAN,
        tolerance_used: f64::NAN,
        verdict: Verdict::Inconclusive,
        errata_note: Some(format!("case not run: {error}")),
    }
}

/// Run a list of cases, never aborting on per-case trouble.
///
/// Reports come back in input order regardless of `jobs`. Invalid cases are
/// marked `Inconclusive` with an explanatory note and do not disturb their
/// neighbours.
pub fn run_suite(cases: &[IdentityCase], tol: &Tolerances, jobs: usize) -> Vec<IdentityReport> {
    let one_case = |case: &IdentityCase| match verify_identity(case, tol) {
        Ok(report) => report,
        Err(e) => invalid_case_report(case, &e),
    };

    if jobs <= 1 || cases.len() <= 1 {
        return cases.iter().map(one_case).collect();
    }

    let worker_count = jobs.min(cases.len());
    let next = std::sync::atomic::AtomicUsize::new(0);
    let (sender, receiver) = std::sync::mpsc::channel::<(usize, IdentityReport)>();
    std::thread::scope(|scope| {
        for _ in 0..worker_count {
            let sender = sender.clone();
            let next = &next;
            scope.spawn(move || loop {
                let index = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if index >= cases.len() {
                    break;
                }
                let report = one_case(&cases[index]);
                if sender.send((index, report)).is_err() {
                    break;
                }
            });
        }
        drop(sender);
    });

    let mut slots: Vec<Option<IdentityReport>> = (0..cases.len()).map(|_| None).collect();
    for (index, report) in receiver {
        slots[index] = Some(report);
    }
    slots
        .into_iter()
        .map(|slot| slot.expect("every case produces a report"))
        .collect()
}

/// The default verification suite.
///
/// Kernel-damped grid: `a1 in {0.8, 1.5}`, `a2 = 1`, `β1 = 2`,
/// `p in {0, 0.5, 1}`, `δ in {0.75, 1}`, `μ = δ + {0.5, 1.5}`, `b in {1, 2}`,
/// `y/b in {±0.25, ±0.5}`. The `z`-weighted grid is the same (its `|y| <= 1`
/// everywhere) and runs in both variants so the published-form discrepancy
/// is recorded rather than hidden. A smaller Gauss-specialization grid
/// exercises C31-C34 the same way.
pub fn builtin_suite() -> Vec<IdentityCase> {
    let mut cases = Vec::new();
    let a1_values = [0.8, 1.5];
    let p_values = [0.0, 0.5, 1.0];
    let delta_values = [0.75, 1.0];
    let mu_offsets = [0.5, 1.5];
    let b_values = [1.0, 2.0];
    let y_fractions = [0.25, 0.5, -0.25, -0.5];

    let grid = |theorem_id: TheoremId, variant: Variant, out: &mut Vec<IdentityCase>| {
        for &a1 in &a1_values {
            for &p in &p_values {
                for &delta in &delta_values {
                    for &offset in &mu_offsets {
                        for &b in &b_values {
                            for &fraction in &y_fractions {
                                out.push(IdentityCase {
                                    theorem_id,
                                    first_numerator: crate::special::ExtendedParameter {
                                        value: a1,
                                        extension: p,
                                    },
                                    other_numerators: vec![1.0],
                                    denominators: vec![2.0],
                                    delta,
                                    mu: delta + offset,
                                    b,
                                    y: fraction * b,
                                    variant,
                                });
                            }
                        }
                    }
                }
            }
        }
    };

    grid(TheoremId::T1, Variant::AsPrinted, &mut cases);
    grid(TheoremId::T2, Variant::Corrected, &mut cases);
    grid(TheoremId::T2, Variant::AsPrinted, &mut cases);

    // Gauss specializations on a representative sub-grid.
    let corollary_grid = |theorem_id: TheoremId, variant: Variant, p: f64, out: &mut Vec<IdentityCase>| {
        for &a in &[0.8, 1.5] {
            for &mu in &[1.25, 2.25] {
                for &y in &[0.5, -0.25] {
                    out.push(IdentityCase {
                        theorem_id,
                        first_numerator: crate::special::ExtendedParameter {
                            value: a,
                            extension: p,
                        },
                        other_numerators: vec![1.0],
                        denominators: vec![2.0],
                        delta: 0.75,
                        mu,
                        b: 1.0,
                        y,
                        variant,
                    });
                }
            }
        }
    };

    corollary_grid(TheoremId::C31, Variant::AsPrinted, 0.5, &mut cases);
    corollary_grid(TheoremId::C32, Variant::Corrected, 0.5, &mut cases);
    corollary_grid(TheoremId::C32, Variant::AsPrinted, 0.5, &mut cases);
    corollary_grid(TheoremId::C33, Variant::AsPrinted, 0.0, &mut cases);
    corollary_grid(TheoremId::C34, Variant::Corrected, 0.0, &mut cases);
    corollary_grid(TheoremId::C34, Variant::AsPrinted, 0.0, &mut cases);

    cases
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals::{oberhettinger_closed_form, OberhettingerParams};
    use crate::special::ExtendedParameter;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    fn gauss_case(
        theorem_id: TheoremId,
        p: f64,
        delta: f64,
        mu: f64,
        b: f64,
        y: f64,
        variant: Variant,
    ) -> IdentityCase {
        IdentityCase {
            theorem_id,
            first_numerator: ExtendedParameter::new(1.0, p).unwrap(),
            other_numerators: vec![1.0],
            denominators: vec![2.0],
            delta,
            mu,
            b,
            y,
            variant,
        }
    }

    #[test]
    fn prefactor_reduces_to_base_integral_at_zero_argument() {
        // With y = 0 the series is 1 and the prefactor must equal the base
        // kernel integral: Γ(μ+1)/Γ(μ) supplies the factor μ.
        let tol = Tolerances::default();
        for (delta, mu, b) in [(1.0, 2.0, 1.0), (0.75, 2.25, 2.0), (1.0, 1.5, 0.5)] {
            let case = gauss_case(TheoremId::T1, 0.0, delta, mu, b, 0.0, Variant::AsPrinted);
            let (prefactor, series) = rhs_theorem1(&case, &tol).unwrap();
            let base = oberhettinger_closed_form(
                &OberhettingerParams::new(delta, mu, b).unwrap(),
            )
            .unwrap();
            assert_eq!(series.value, 1.0);
            assert!(rel(prefactor, base) < 1e-12, "{prefactor} vs {base}");

            let case = gauss_case(TheoremId::T2, 0.0, delta, mu, b, 0.0, Variant::Corrected);
            let (prefactor, series) = rhs_theorem2(&case, &tol).unwrap();
            assert_eq!(series.value, 1.0);
            assert!(rel(prefactor, base) < 1e-12);
        }
    }

    #[test]
    fn duplication_identity_relating_the_two_prefactors() {
        // Γ(2δ) = 2^{2δ-1} Γ(δ) Γ(δ+1/2) / sqrt(pi): exactly the factor
        // separating the as-printed and corrected prefactors.
        for delta in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0] {
            let lhs = log_gamma_unchecked(2.0 * delta).exp();
            let rhs = (2.0f64).powf(2.0 * delta - 1.0)
                * log_gamma_unchecked(delta).exp()
                * log_gamma_unchecked(delta + 0.5).exp()
                / std::f64::consts::PI.sqrt();
            assert!(rel(lhs, rhs) < 1e-12, "duplication failed at delta = {delta}");
        }
    }

    #[test]
    fn verify_passes_kernel_damped_case() {
        let tol = Tolerances::default();
        let case = gauss_case(TheoremId::T1, 0.5, 1.0, 2.0, 1.0, 0.5, Variant::AsPrinted);
        let report = verify_identity(&case, &tol).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "rel_diff = {}", report.rel_diff);
        assert!(report.rel_diff < 1e-6);
        assert!(report.errata_note.is_none());
    }

    #[test]
    fn verify_zero_y_passes_trivially() {
        let tol = Tolerances::default();
        for id in [TheoremId::T1, TheoremId::T2] {
            let case = gauss_case(id, 1.0, 0.75, 2.25, 2.0, 0.0, Variant::Corrected);
            let report = verify_identity(&case, &tol).unwrap();
            assert_eq!(report.verdict, Verdict::Pass);
        }
    }

    #[test]
    fn verify_flags_printed_z_weighted_form() {
        let tol = Tolerances::default();
        let corrected = gauss_case(TheoremId::T2, 0.0, 1.0, 2.5, 1.0, 0.5, Variant::Corrected);
        let report = verify_identity(&corrected, &tol).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "rel_diff = {}", report.rel_diff);

        let printed = gauss_case(TheoremId::T2, 0.0, 1.0, 2.5, 1.0, 0.5, Variant::AsPrinted);
        let report = verify_identity(&printed, &tol).unwrap();
        // The oracle puts the printed form ~8% off here; the report must
        // flag it as errata rather than hide it.
        assert_eq!(report.verdict, Verdict::Fail);
        assert!(report.errata_note.is_some());
        assert!(report.rel_diff > 0.01);
    }

    #[test]
    fn specialization_coherence() {
        let tol = Tolerances::default();
        // C31 must reproduce T1 bit-for-bit (same code path).
        let t1 = gauss_case(TheoremId::T1, 0.5, 0.75, 2.25, 1.0, 0.5, Variant::AsPrinted);
        let c31 = IdentityCase {
            theorem_id: TheoremId::C31,
            ..t1.clone()
        };
        let (pref_a, ser_a) = rhs_theorem1(&t1, &tol).unwrap();
        let (pref_b, ser_b) = rhs_corollary(&c31, &tol).unwrap();
        assert_eq!(pref_a, pref_b);
        assert_eq!(ser_a.value, ser_b.value);

        // C33 equals C31 at p = 0, C34 equals C32 at p = 0 (corrected).
        let c31_p0 = gauss_case(TheoremId::C31, 0.0, 0.75, 2.25, 1.0, 0.5, Variant::AsPrinted);
        let c33 = IdentityCase {
            theorem_id: TheoremId::C33,
            ..c31_p0.clone()
        };
        let (pa, sa) = rhs_corollary(&c31_p0, &tol).unwrap();
        let (pb, sb) = rhs_corollary(&c33, &tol).unwrap();
        assert!(rel(pa, pb) < 1e-14);
        assert!(rel(sa.value, sb.value) < 1e-14);
    }

    #[test]
    fn suite_marks_invalid_case_and_continues() {
        let tol = Tolerances::default();
        let good = gauss_case(TheoremId::T1, 0.0, 1.0, 2.0, 1.0, 0.5, Variant::AsPrinted);
        let bad = gauss_case(TheoremId::T1, 0.0, 2.5, 2.0, 1.0, 0.5, Variant::AsPrinted);
        let reports = run_suite(&[good.clone(), bad, good], &tol, 1);
        assert_eq!(reports.len(), 3);
        assert_eq!(reports[0].verdict, Verdict::Pass);
        assert_eq!(reports[1].verdict, Verdict::Inconclusive);
        assert!(reports[1].errata_note.as_deref().unwrap().contains("not run"));
        assert_eq!(reports[2].verdict, Verdict::Pass);
    }

    #[test]
    fn empty_suite() {
        assert!(run_suite(&[], &Tolerances::default(), 4).is_empty());
    }

    #[test]
    fn parallel_suite_preserves_order_and_verdicts() {
        let tol = Tolerances::default();
        let cases: Vec<IdentityCase> = [0.1, 0.2, 0.3, 0.4, -0.1, -0.3]
            .iter()
            .map(|&y| gauss_case(TheoremId::T1, 0.0, 1.0, 2.0, 1.0, y, Variant::AsPrinted))
            .collect();
        let sequential = run_suite(&cases, &tol, 1);
        let parallel = run_suite(&cases, &tol, 4);
        assert_eq!(sequential.len(), parallel.len());
        for (a, b) in sequential.iter().zip(&parallel) {
            assert_eq!(a.case.y, b.case.y);
            assert_eq!(a.verdict, b.verdict);
            assert_eq!(a.lhs.value.to_bits(), b.lhs.value.to_bits());
        }
    }

    #[test]
    fn builtin_suite_shape() {
        let cases = builtin_suite();
        assert_eq!(cases.len(), 192 * 3 + 8 * 6);
        assert!(cases.iter().all(|c| c.validate().is_ok()));
    }
}
