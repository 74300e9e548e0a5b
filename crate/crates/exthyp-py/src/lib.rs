//! Python bindings: the main types and operations of the `exthyp` crate.
//!
//! Build with `cargo build --release -p exthyp-py`; the resulting
//! `libexthyp_py.so` imports as the module `exthyp_py` (see
//! `python/smoke_test.py` for a loader that works straight out of the
//! target directory).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use exthyp::quadrature::Tolerances;
use exthyp::special::ExtendedParameter;
use exthyp::{Error, HypergeometricSpec, IdentityCase, OberhettingerParams, SeriesValue};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::NonConvergence(m) => PyRuntimeError::new_err(m),
        Error::Domain(m) | Error::Divergence(m) | Error::InvalidCase(m) => {
            PyValueError::new_err(m)
        }
    }
}

fn tolerances(rel_tol: f64, abs_tol: f64, max_terms: u32) -> Tolerances {
    Tolerances {
        rel_tol,
        abs_tol,
        max_terms,
        ..Tolerances::default()
    }
}

fn parse_theorem_id(s: &str) -> PyResult<exthyp::TheoremId> {
    match s.to_ascii_uppercase().as_str() {
        "T1" => Ok(exthyp::TheoremId::T1),
        "T2" => Ok(exthyp::TheoremId::T2),
        "C31" => Ok(exthyp::TheoremId::C31),
        "C32" => Ok(exthyp::TheoremId::C32),
        "C33" => Ok(exthyp::TheoremId::C33),
        "C34" => Ok(exthyp::TheoremId::C34),
        other => Err(PyValueError::new_err(format!("unknown theorem id '{other}'"))),
    }
}

fn parse_variant(s: &str) -> PyResult<exthyp::Variant> {
    match s.to_ascii_lowercase().as_str() {
        "corrected" => Ok(exthyp::Variant::Corrected),
        "printed" | "as_printed" | "as-printed" => Ok(exthyp::Variant::AsPrinted),
        other => Err(PyValueError::new_err(format!("unknown variant '{other}'"))),
    }
}

fn series_dict<'py>(py: Python<'py>, series: &SeriesValue) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("value", series.value)?;
    d.set_item("terms_used", series.terms_used)?;
    d.set_item("tail_estimate", series.tail_estimate)?;
    d.set_item("converged", series.converged)?;
    Ok(d)
}

/// ln Γ(x) for x > 0.
#[pyfunction]
fn log_gamma(x: f64) -> PyResult<f64> {
    exthyp::log_gamma(x).map_err(to_py_err)
}

/// Γ(x) for 0 < x <= 170.
#[pyfunction]
fn gamma(x: f64) -> PyResult<f64> {
    exthyp::gamma(x).map_err(to_py_err)
}

/// Rising factorial (mu)_n.
#[pyfunction]
fn pochhammer(mu: f64, n: u32) -> f64 {
    exthyp::pochhammer(mu, n)
}

/// Extended gamma Γ_p(z); returns (value, error_estimate).
#[pyfunction]
#[pyo3(signature = (z, p, rel_tol=1e-10, abs_tol=1e-14))]
fn gamma_p(z: f64, p: f64, rel_tol: f64, abs_tol: f64) -> PyResult<(f64, f64)> {
    let r = exthyp::extended_gamma(z, p, &tolerances(rel_tol, abs_tol, 10_000))
        .map_err(to_py_err)?;
    Ok((r.value, r.error_estimate))
}

/// Extended Pochhammer symbol (mu; p)_n = Γ_p(mu+n) / Γ(mu).
#[pyfunction]
#[pyo3(signature = (mu, p, n, rel_tol=1e-10, abs_tol=1e-14))]
fn ext_pochhammer(mu: f64, p: f64, n: u32, rel_tol: f64, abs_tol: f64) -> PyResult<f64> {
    let parameter = ExtendedParameter::new(mu, p).map_err(to_py_err)?;
    exthyp::extended_pochhammer(parameter, n, &tolerances(rel_tol, abs_tol, 10_000))
        .map_err(to_py_err)
}

/// Extended generalized hypergeometric series; a_list[0] carries p.
#[pyfunction]
#[pyo3(signature = (a_list, beta_list, p, z, rel_tol=1e-10, abs_tol=1e-14, max_terms=10_000))]
fn ext_hyper<'py>(
    py: Python<'py>,
    a_list: Vec<f64>,
    beta_list: Vec<f64>,
    p: f64,
    z: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_terms: u32,
) -> PyResult<Bound<'py, PyDict>> {
    if a_list.is_empty() {
        return Err(PyValueError::new_err("a_list must not be empty"));
    }
    let spec = HypergeometricSpec {
        first_numerator: ExtendedParameter::new(a_list[0], p).map_err(to_py_err)?,
        other_numerators: a_list[1..].to_vec(),
        denominators: beta_list,
        argument: z,
    };
    let series = exthyp::eval_ext_hyper(&spec, &tolerances(rel_tol, abs_tol, max_terms))
        .map_err(to_py_err)?;
    series_dict(py, &series)
}

/// Extended Gauss hypergeometric 2F1[(a, p), beta; gamma; z].
#[pyfunction]
#[pyo3(signature = (a, p, beta, gamma, z, rel_tol=1e-10, abs_tol=1e-14))]
fn gauss_2f1<'py>(
    py: Python<'py>,
    a: f64,
    p: f64,
    beta: f64,
    gamma: f64,
    z: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let parameter = ExtendedParameter::new(a, p).map_err(to_py_err)?;
    let series =
        exthyp::eval_ext_gauss_2f1(parameter, beta, gamma, z, &tolerances(rel_tol, abs_tol, 10_000))
            .map_err(to_py_err)?;
    series_dict(py, &series)
}

/// Extended Kummer confluent hypergeometric 1F1[(a, p); gamma; z].
#[pyfunction]
#[pyo3(signature = (a, p, gamma, z, rel_tol=1e-10, abs_tol=1e-14))]
fn kummer_1f1<'py>(
    py: Python<'py>,
    a: f64,
    p: f64,
    gamma: f64,
    z: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let parameter = ExtendedParameter::new(a, p).map_err(to_py_err)?;
    let series =
        exthyp::eval_ext_kummer_1f1(parameter, gamma, z, &tolerances(rel_tol, abs_tol, 10_000))
            .map_err(to_py_err)?;
    series_dict(py, &series)
}

/// The algebraic kernel z + b + sqrt(z^2 + 2bz).
#[pyfunction]
fn kernel(z: f64, b: f64) -> f64 {
    exthyp::kernel(z, b)
}

/// Closed form of the base kernel integral.
#[pyfunction]
fn oberhettinger_closed(alpha: f64, beta: f64, b: f64) -> PyResult<f64> {
    let params = OberhettingerParams::new(alpha, beta, b).map_err(to_py_err)?;
    exthyp::oberhettinger_closed_form(&params).map_err(to_py_err)
}

/// Quadrature of the base kernel integral; returns
/// (value, error_estimate, evaluations, converged).
#[pyfunction]
#[pyo3(signature = (alpha, beta, b, rel_tol=1e-10, abs_tol=1e-14))]
fn oberhettinger_numeric(
    alpha: f64,
    beta: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> PyResult<(f64, f64, u64, bool)> {
    let params = OberhettingerParams::new(alpha, beta, b).map_err(to_py_err)?;
    let r = exthyp::oberhettinger_numeric(&params, &tolerances(rel_tol, abs_tol, 10_000))
        .map_err(to_py_err)?;
    Ok((r.value, r.error_estimate, r.evaluations, r.converged))
}

fn build_case(
    theorem_id: &str,
    a_list: &[f64],
    beta_list: &[f64],
    p: f64,
    delta: f64,
    mu: f64,
    b: f64,
    y: f64,
    variant: &str,
) -> PyResult<IdentityCase> {
    if a_list.is_empty() {
        return Err(PyValueError::new_err("a_list must not be empty"));
    }
    Ok(IdentityCase {
        theorem_id: parse_theorem_id(theorem_id)?,
        first_numerator: ExtendedParameter::new(a_list[0], p).map_err(to_py_err)?,
        other_numerators: a_list[1..].to_vec(),
        denominators: beta_list.to_vec(),
        delta,
        mu,
        b,
        y,
        variant: parse_variant(variant)?,
    })
}

fn report_dict<'py>(py: Python<'py>, report: &exthyp::IdentityReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("theorem_id", report.case.theorem_id.as_str())?;
    d.set_item("variant", report.case.variant.as_str())?;
    d.set_item("lhs_value", report.lhs.value)?;
    d.set_item("lhs_error_estimate", report.lhs.error_estimate)?;
    d.set_item("lhs_evaluations", report.lhs.evaluations)?;
    d.set_item("rhs_prefactor", report.rhs_prefactor)?;
    d.set_item("rhs_series_value", report.rhs.value)?;
    d.set_item("rhs_terms_used", report.rhs.terms_used)?;
    d.set_item("rhs_tail_estimate", report.rhs.tail_estimate)?;
    d.set_item("abs_diff", report.abs_diff)?;
    d.set_item("rel_diff", report.rel_diff)?;
    d.set_item("tolerance_used", report.tolerance_used)?;
    d.set_item("verdict", report.verdict.as_str())?;
    d.set_item("errata_note", report.errata_note.clone())?;
    Ok(d)
}

/// Verify a single identity case; returns a report dict.
#[pyfunction]
#[pyo3(signature = (theorem_id, a_list, beta_list, p, delta, mu, b, y,
                    variant="corrected", rel_tol=1e-10, abs_tol=1e-14))]
#[allow(clippy::too_many_arguments)]
fn verify_identity<'py>(
    py: Python<'py>,
    theorem_id: &str,
    a_list: Vec<f64>,
    beta_list: Vec<f64>,
    p: f64,
    delta: f64,
    mu: f64,
    b: f64,
    y: f64,
    variant: &str,
    rel_tol: f64,
    abs_tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let case = build_case(theorem_id, &a_list, &beta_list, p, delta, mu, b, y, variant)?;
    let report = exthyp::verify_identity(&case, &tolerances(rel_tol, abs_tol, 10_000))
        .map_err(to_py_err)?;
    report_dict(py, &report)
}

/// Run the built-in suite; returns a list of report dicts in input order.
#[pyfunction]
#[pyo3(signature = (jobs=0))]
fn run_builtin_suite<'py>(py: Python<'py>, jobs: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let jobs = if jobs == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        jobs
    };
    let cases = exthyp::builtin_suite();
    let reports = exthyp::run_suite(&cases, &Tolerances::default(), jobs);
    reports.iter().map(|r| report_dict(py, r)).collect()
}

#[pymodule]
fn exthyp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(log_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(pochhammer, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_p, m)?)?;
    m.add_function(wrap_pyfunction!(ext_pochhammer, m)?)?;
    m.add_function(wrap_pyfunction!(ext_hyper, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_2f1, m)?)?;
    m.add_function(wrap_pyfunction!(kummer_1f1, m)?)?;
    m.add_function(wrap_pyfunction!(kernel, m)?)?;
    m.add_function(wrap_pyfunction!(oberhettinger_closed, m)?)?;
    m.add_function(wrap_pyfunction!(oberhettinger_numeric, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(run_builtin_suite, m)?)?;
    Ok(())
}
