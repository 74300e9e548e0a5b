//! `exthyp`: evaluate the extended gamma/hypergeometric functions and
//! verify the kernel-integral identities built on them.
//!
//! Exit codes: 0 success, 1 identity failure (a non-errata case failed),
//! 2 usage or config error, 3 non-convergence / inconclusive cases.
//! `EXTHYP_LOG={off,info,debug}` controls diagnostics on stderr.

mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::OnceLock;

use clap::{Args, Parser, Subcommand, ValueEnum};

use exthyp::quadrature::Tolerances;
use exthyp::special::ExtendedParameter;
use exthyp::{
    builtin_suite, eval_ext_hyper, extended_gamma, extended_pochhammer,
    oberhettinger_closed_form, oberhettinger_numeric, run_suite, HypergeometricSpec,
    IdentityCase, OberhettingerParams, Variant, Verdict,
};
use report::{record_of, CaseRecord, ReportRecord, SummaryRecord, VerdictCounts};

const EXIT_OK: u8 = 0;
const EXIT_IDENTITY_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NON_CONVERGENCE: u8 = 3;

#[derive(Clone, Copy, PartialEq, PartialOrd)]
enum LogLevel {
    Off,
    Info,
    Debug,
}

fn log_level() -> LogLevel {
    static LEVEL: OnceLock<LogLevel> = OnceLock::new();
    *LEVEL.get_or_init(|| match std::env::var("EXTHYP_LOG").as_deref() {
        Ok("info") => LogLevel::Info,
        Ok("debug") => LogLevel::Debug,
        _ => LogLevel::Off,
    })
}

macro_rules! log_info {
    ($($arg:tt)*) => {
        if log_level() >= LogLevel::Info { eprintln!($($arg)*); }
    };
}

macro_rules! log_debug {
    ($($arg:tt)*) => {
        if log_level() >= LogLevel::Debug { eprintln!($($arg)*); }
    };
}

#[derive(Parser)]
#[command(
    name = "exthyp",
    about = "Extended hypergeometric functions and kernel-integral identity verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single function and print value and error estimate.
    Eval(EvalArgs),
    /// Run an identity-verification suite and write a report.
    Verify(VerifyArgs),
    /// Re-read a JSON report and print its verdict counts.
    Summarize(SummarizeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalFunction {
    /// Extended gamma Γ_p(z).
    #[value(name = "gamma_p", alias = "gamma-p")]
    GammaP,
    /// Extended Pochhammer (μ; p)_n.
    #[value(name = "ext_pochhammer", alias = "ext-pochhammer")]
    ExtPochhammer,
    /// Extended generalized hypergeometric series from a JSON spec.
    #[value(name = "ext_hyper", alias = "ext-hyper")]
    ExtHyper,
    /// Closed form of the base kernel integral.
    #[value(name = "obe_closed", alias = "obe-closed")]
    ObeClosed,
    /// Quadrature of the base kernel integral.
    #[value(name = "obe_numeric", alias = "obe-numeric")]
    ObeNumeric,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(value_enum)]
    function: EvalFunction,
    /// Exponent parameter of the base integral.
    #[arg(long)]
    alpha: Option<f64>,
    /// Kernel exponent of the base integral.
    #[arg(long)]
    beta: Option<f64>,
    /// Kernel shift.
    #[arg(long)]
    b: Option<f64>,
    /// Argument of the extended gamma function.
    #[arg(long)]
    z: Option<f64>,
    /// Extension parameter (defaults to 0 = classical).
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    /// Base parameter of the extended Pochhammer symbol.
    #[arg(long)]
    mu: Option<f64>,
    /// Index of the extended Pochhammer symbol.
    #[arg(long)]
    n: Option<u32>,
    /// JSON spec for ext_hyper: {"a_list": [...], "beta_list": [...], "p": ..., "z": ...}.
    #[arg(long)]
    spec: Option<String>,
    #[command(flatten)]
    tolerances: ToleranceArgs,
}

#[derive(Args)]
struct ToleranceArgs {
    #[arg(long, default_value_t = 1e-10)]
    rel_tol: f64,
    #[arg(long, default_value_t = 1e-14)]
    abs_tol: f64,
    #[arg(long, default_value_t = 10_000)]
    max_terms: u32,
}

impl ToleranceArgs {
    fn to_tolerances(&self) -> Tolerances {
        Tolerances {
            rel_tol: self.rel_tol,
            abs_tol: self.abs_tol,
            max_terms: self.max_terms,
            ..Tolerances::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Printed,
    Corrected,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run the built-in verification suite.
    #[arg(long, conflicts_with = "config")]
    builtin: bool,
    /// JSON file with a case list.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Report destination (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Which right-hand-side variants to run for the z-weighted family.
    #[arg(long, value_enum, default_value_t = VariantArg::Both)]
    variant: VariantArg,
    /// Worker threads (defaults to the number of processors).
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    tolerances: ToleranceArgs,
}

#[derive(Args)]
struct SummarizeArgs {
    /// JSON report produced by `verify`.
    report: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Eval(args) => cmd_eval(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Summarize(args) => cmd_summarize(&args),
    };
    ExitCode::from(code)
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn print_eval(value: f64, error_estimate: f64) -> u8 {
    println!("{value:.14e}");
    println!("{error_estimate:.14e}");
    EXIT_OK
}

fn require(flag: Option<f64>, name: &str) -> Result<f64, EvalFailure> {
    flag.ok_or_else(|| EvalFailure::Usage(format!("--{name} is required for this function")))
}

/// Distinguishes bad invocations (exit 2) from honest numerical failure
/// (exit 3).
enum EvalFailure {
    Usage(String),
    Numeric(exthyp::Error),
}

impl From<exthyp::Error> for EvalFailure {
    fn from(e: exthyp::Error) -> Self {
        match e {
            exthyp::Error::NonConvergence(_) => EvalFailure::Numeric(e),
            other => EvalFailure::Usage(other.to_string()),
        }
    }
}

fn cmd_eval(args: &EvalArgs) -> u8 {
    let tol = args.tolerances.to_tolerances();
    let outcome: Result<(f64, f64), EvalFailure> = match args.function {
        EvalFunction::GammaP => require(args.z, "z").and_then(|z| {
            let r = extended_gamma(z, args.p, &tol)?;
            Ok((r.value, r.error_estimate))
        }),
        EvalFunction::ExtPochhammer => require(args.mu, "mu").and_then(|mu| {
            let n = args.n.ok_or_else(|| {
                EvalFailure::Usage("--n is required for ext_pochhammer".into())
            })?;
            let parameter = ExtendedParameter::new(mu, args.p)?;
            Ok((extended_pochhammer(parameter, n, &tol)?, 0.0))
        }),
        EvalFunction::ExtHyper => {
            let raw = args.spec.as_deref().ok_or_else(|| {
                EvalFailure::Usage("--spec is required for ext_hyper".into())
            });
            raw.and_then(|raw| {
                let spec = parse_hyper_spec(raw).map_err(EvalFailure::Usage)?;
                let series = eval_ext_hyper(&spec, &tol)?;
                if !series.converged {
                    return Err(EvalFailure::Numeric(exthyp::Error::NonConvergence(
                        format!("series stalled after {} terms", series.terms_used),
                    )));
                }
                Ok((series.value, series.tail_estimate))
            })
        }
        EvalFunction::ObeClosed => build_obe_params(args)
            .and_then(|params| Ok((oberhettinger_closed_form(&params)?, 0.0))),
        EvalFunction::ObeNumeric => build_obe_params(args).and_then(|params| {
            let r = oberhettinger_numeric(&params, &tol)?;
            if !r.converged {
                return Err(EvalFailure::Numeric(exthyp::Error::NonConvergence(
                    format!("quadrature stalled at error {:.3e}", r.error_estimate),
                )));
            }
            Ok((r.value, r.error_estimate))
        }),
    };

    match outcome {
        Ok((value, error)) => print_eval(value, error),
        Err(EvalFailure::Usage(message)) => usage_error(&message),
        Err(EvalFailure::Numeric(e)) => {
            eprintln!("error: {e}");
            EXIT_NON_CONVERGENCE
        }
    }
}

fn build_obe_params(args: &EvalArgs) -> Result<OberhettingerParams, EvalFailure> {
    let alpha = require(args.alpha, "alpha")?;
    let beta = require(args.beta, "beta")?;
    let b = require(args.b, "b")?;
    Ok(OberhettingerParams::new(alpha, beta, b)?)
}

#[derive(serde::Deserialize)]
struct HyperSpecRecord {
    a_list: Vec<f64>,
    beta_list: Vec<f64>,
    #[serde(default)]
    p: f64,
    z: f64,
}

fn parse_hyper_spec(raw: &str) -> Result<HypergeometricSpec, String> {
    let record: HyperSpecRecord =
        serde_json::from_str(raw).map_err(|e| format!("invalid --spec JSON: {e}"))?;
    if record.a_list.is_empty() {
        return Err("--spec a_list must contain at least one parameter".into());
    }
    Ok(HypergeometricSpec {
        first_numerator: ExtendedParameter::new(record.a_list[0], record.p)
            .map_err(|e| e.to_string())?,
        other_numerators: record.a_list[1..].to_vec(),
        denominators: record.beta_list,
        argument: record.z,
    })
}

/// A failed as-printed z-weighted case is an expected erratum, not a suite
/// failure; everything else gates the exit code.
fn is_errata_sensitive(case: &IdentityCase) -> bool {
    case.theorem_id.z_weighted() && case.variant == Variant::AsPrinted
}

fn collect_cases(args: &VerifyArgs) -> Result<Vec<IdentityCase>, (u8, String)> {
    if args.builtin {
        let keep = |case: &IdentityCase| -> bool {
            if !case.theorem_id.z_weighted() {
                return true;
            }
            match args.variant {
                VariantArg::Both => true,
                VariantArg::Printed => case.variant == Variant::AsPrinted,
                VariantArg::Corrected => case.variant == Variant::Corrected,
            }
        };
        return Ok(builtin_suite().into_iter().filter(|c| keep(c)).collect());
    }
    let path = args.config.as_ref().ok_or((
        EXIT_USAGE,
        "either --builtin or --config <FILE> is required".to_string(),
    ))?;
    let raw = std::fs::read_to_string(path)
        .map_err(|e| (EXIT_USAGE, format!("cannot read {}: {e}", path.display())))?;
    let records: Vec<CaseRecord> = serde_json::from_str(&raw)
        .map_err(|e| (EXIT_USAGE, format!("malformed config {}: {e}", path.display())))?;
    if records.is_empty() {
        return Err((EXIT_USAGE, "config contains no cases".to_string()));
    }
    let mut cases = Vec::new();
    for (index, record) in records.iter().enumerate() {
        match args.variant {
            VariantArg::Both if record.variant.is_none() => {
                // Expand z-weighted entries into both variants.
                let corrected = record
                    .to_case(Variant::Corrected)
                    .map_err(|e| (EXIT_USAGE, format!("case {index}: {e}")))?;
                if corrected.theorem_id.z_weighted() {
                    let printed = IdentityCase {
                        variant: Variant::AsPrinted,
                        ..corrected.clone()
                    };
                    cases.push(corrected);
                    cases.push(printed);
                } else {
                    cases.push(corrected);
                }
            }
            VariantArg::Printed => cases.push(
                record
                    .to_case(Variant::AsPrinted)
                    .map_err(|e| (EXIT_USAGE, format!("case {index}: {e}")))?,
            ),
            _ => cases.push(
                record
                    .to_case(Variant::Corrected)
                    .map_err(|e| (EXIT_USAGE, format!("case {index}: {e}")))?,
            ),
        }
    }
    Ok(cases)
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    let tol = args.tolerances.to_tolerances();
    if let Err(e) = tol.validate() {
        return usage_error(&e.to_string());
    }
    let cases = match collect_cases(args) {
        Ok(cases) => cases,
        Err((code, message)) => {
            eprintln!("error: {message}");
            return code;
        }
    };
    for (index, case) in cases.iter().enumerate() {
        if let Err(e) = case.validate() {
            eprintln!("error: case {index}: {e}");
            return EXIT_USAGE;
        }
    }

    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    log_info!("running {} cases on {} worker(s)", cases.len(), jobs);
    let started = std::time::Instant::now();
    let reports = run_suite(&cases, &tol, jobs);
    log_info!("suite finished in {:.2?}", started.elapsed());

    for report in &reports {
        log_debug!(
            "{} {} delta={} mu={} b={} y={} p={} -> {} (rel_diff={:.3e})",
            report.case.theorem_id,
            report.case.variant,
            report.case.delta,
            report.case.mu,
            report.case.b,
            report.case.y,
            report.case.first_numerator.extension,
            report.verdict,
            report.rel_diff
        );
    }

    let records: Vec<ReportRecord> = reports.iter().map(record_of).collect();
    let rendered = match args.format {
        FormatArg::Json => {
            let mut s = serde_json::to_string_pretty(&records).expect("report serializes");
            s.push('\n');
            s
        }
        FormatArg::Csv => report::to_csv(&records),
    };

    let counts = VerdictCounts::tally(
        reports
            .iter()
            .map(|r| (r.verdict.as_str(), r.errata_note.is_some())),
    );

    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
            println!("{}", counts.summary_line());
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(rendered.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            eprintln!("{}", counts.summary_line());
        }
    }

    let non_errata_failure = reports.iter().any(|r| {
        r.verdict == Verdict::Fail && !is_errata_sensitive(&r.case)
    });
    let any_inconclusive = reports.iter().any(|r| r.verdict == Verdict::Inconclusive);
    if non_errata_failure {
        EXIT_IDENTITY_FAILURE
    } else if any_inconclusive {
        EXIT_NON_CONVERGENCE
    } else {
        EXIT_OK
    }
}

fn cmd_summarize(args: &SummarizeArgs) -> u8 {
    let raw = match std::fs::read_to_string(&args.report) {
        Ok(raw) => raw,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", args.report.display())),
    };
    let records: Vec<SummaryRecord> = match serde_json::from_str(&raw) {
        Ok(records) => records,
        Err(e) => return usage_error(&format!("malformed report: {e}")),
    };
    let counts = VerdictCounts::tally(
        records
            .iter()
            .map(|r| (r.verdict.as_str(), r.errata_note.is_some())),
    );
    println!("{}", counts.summary_line());
    // Per-family breakdown.
    let mut keys: Vec<(String, String)> = records
        .iter()
        .map(|r| (r.theorem_id.clone(), r.variant.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    for (theorem, variant) in keys {
        let group = VerdictCounts::tally(records.iter().filter_map(|r| {
            (r.theorem_id == theorem && r.variant == variant)
                .then_some((r.verdict.as_str(), r.errata_note.is_some()))
        }));
        println!("{theorem}/{variant}: {}", group.summary_line());
    }
    EXIT_OK
}
