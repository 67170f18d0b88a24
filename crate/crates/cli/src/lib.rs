//! Library half of the `hml` binary: argument parsing helpers, command
//! implementations and SVG output.

pub mod eval;
pub mod literal;
pub mod plot;
pub mod table;

use std::fmt;

use hml_core::identities::{fourier_reports, verify_suite, GridSpec, SuiteReport};
use hml_core::{CheckReport, ComplexValue, IdentityId};

/// Failures mapped to process exit codes.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// At least one identity check failed (exit 1).
    Failed,
    /// Malformed input (exit 2).
    Parse(String),
    /// Evaluation outside a function's domain (exit 3).
    Domain(String),
    /// Reading or writing files (exit 4).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed => 1,
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Failed => write!(f, "identity check failed"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Domain(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<hml_core::Error> for CliError {
    fn from(e: hml_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Output formats shared by the commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Everything `verify` prints, in order.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOutput {
    pub reports: Vec<CheckReport>,
    pub suite: SuiteReport,
}

impl VerifyOutput {
    pub fn all_passed(&self) -> bool {
        self.suite.all_passed() && self.reports.iter().all(|r| r.pass)
    }
}

/// Runs the identity suite; q-expansion tags contribute one report per
/// coefficient.
pub fn run_verify(ids: &[IdentityId], grid: GridSpec, tol: f64) -> Result<VerifyOutput, CliError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(CliError::Parse(format!("tolerance {tol} must be positive")));
    }
    let (fourier, pointwise): (Vec<IdentityId>, Vec<IdentityId>) = ids.iter().partition(|id| id.is_fourier());
    let suite = verify_suite(&GridSpec { ids: pointwise, ..grid }, tol)?;
    let mut reports = suite.reports.clone();
    for id in fourier {
        reports.extend(fourier_reports(id, 1.1, tol)?);
    }
    Ok(VerifyOutput { reports, suite })
}

fn point_text(p: ComplexValue) -> String {
    eval::format_complex(p)
}

pub fn report_line(r: &CheckReport) -> String {
    format!(
        "{} {} at {} part {}: lhs {} rhs {} residual {:.3e} rel {:.3e}",
        if r.pass { "PASS" } else { "FAIL" },
        r.id,
        point_text(r.point),
        r.part,
        eval::format_complex(r.lhs),
        eval::format_complex(r.rhs),
        r.residual,
        r.rel_residual
    )
}

pub fn verify_text(out: &VerifyOutput) -> String {
    let mut s = String::new();
    for r in &out.reports {
        s.push_str(&report_line(r));
        s.push('\n');
    }
    for sk in &out.suite.skipped {
        s.push_str(&format!("SKIP {} at {}: {}\n", sk.id, point_text(sk.point), sk.reason));
    }
    for e in &out.suite.errors {
        s.push_str(&format!("ERROR {} at {}: {}\n", e.id, point_text(e.point), e.reason));
    }
    let passed = out.reports.iter().filter(|r| r.pass).count();
    s.push_str(&format!(
        "{} checked, {} passed, {} failed, {} skipped, {} out of domain\n",
        out.reports.len(),
        passed,
        out.reports.len() - passed + out.suite.errors.len(),
        out.suite.summary.skipped,
        out.suite.summary.out_of_domain
    ));
    s
}

pub fn verify_csv(out: &VerifyOutput) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record([
        "id",
        "point_re",
        "point_im",
        "part",
        "lhs_re",
        "lhs_im",
        "rhs_re",
        "rhs_im",
        "residual",
        "rel_residual",
        "tol",
        "pass",
    ])
    .map_err(io)?;
    for r in &out.reports {
        w.write_record([
            r.id.tag().to_string(),
            r.point.re.to_string(),
            r.point.im.to_string(),
            r.part.to_string(),
            r.lhs.re.to_string(),
            r.lhs.im.to_string(),
            r.rhs.re.to_string(),
            r.rhs.im.to_string(),
            r.residual.to_string(),
            r.rel_residual.to_string(),
            r.tol.to_string(),
            r.pass.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}
