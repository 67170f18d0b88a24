use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_identity, twelfth_series, CheckReport, IdentityId};
use crate::error::{Error, Result};
use crate::modular::{j_invariant, q_expand, Form, QExpandConfig};
use crate::numcore::{c, ComplexValue};

/// Which points each identity is checked at.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub ids: Vec<IdentityId>,
    /// Grid size for identities in `tau`.
    pub tau_points: usize,
    /// Grid size for identities in `z`.
    pub z_points: usize,
    /// Offset into the Halton sequence.
    pub seed: u64,
    /// Explicit `tau` points replacing the generated grids; points outside
    /// an identity's domain are dropped for that identity.
    pub tau_override: Option<Vec<ComplexValue>>,
    /// Explicit `z` points, likewise.
    pub z_override: Option<Vec<ComplexValue>>,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            ids: IdentityId::ALL.to_vec(),
            tau_points: 10,
            z_points: 10,
            seed: 0,
            tau_override: None,
            z_override: None,
        }
    }
}

impl GridSpec {
    pub fn only(ids: &[IdentityId]) -> Self {
        Self { ids: ids.to_vec(), ..Self::default() }
    }

    fn points_for(&self, id: IdentityId) -> Vec<ComplexValue> {
        if id.is_fourier() {
            return id.domain().grid(1, self.seed);
        }
        let (explicit, n) =
            if id.takes_tau() { (&self.tau_override, self.tau_points) } else { (&self.z_override, self.z_points) };
        match explicit {
            Some(p) => p.clone(),
            None => id.domain().grid(n, self.seed),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedPoint {
    pub id: IdentityId,
    pub point: ComplexValue,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    /// Points on a pole orbit.
    pub skipped: usize,
    /// Explicit points outside an identity's domain.
    pub out_of_domain: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub reports: Vec<CheckReport>,
    pub skipped: Vec<SkippedPoint>,
    /// Evaluation errors other than poles and domain misses; counted as failures.
    pub errors: Vec<SkippedPoint>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

enum Outcome {
    Report(CheckReport),
    Skipped(SkippedPoint),
    OutOfDomain,
    Failed(SkippedPoint),
}

/// Runs every requested identity over its grid in parallel. The merged
/// report is ordered by identity, then by grid position.
pub fn verify_suite(grid: &GridSpec, tol: f64) -> Result<SuiteReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parameter(format!("tolerance {tol} is not positive")));
    }
    let jobs: Vec<(IdentityId, ComplexValue)> =
        grid.ids.iter().flat_map(|id| grid.points_for(*id).into_iter().map(move |p| (*id, p))).collect();
    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|&(id, point)| match check_identity(id, point, tol) {
            Ok(r) => Outcome::Report(r),
            Err(e @ Error::AtPole { .. }) => Outcome::Skipped(SkippedPoint { id, point, reason: e.to_string() }),
            Err(Error::Domain(_)) => Outcome::OutOfDomain,
            Err(e) => Outcome::Failed(SkippedPoint { id, point, reason: e.to_string() }),
        })
        .collect();

    let mut out =
        SuiteReport { reports: Vec::new(), skipped: Vec::new(), errors: Vec::new(), summary: Summary::default() };
    for o in outcomes {
        match o {
            Outcome::Report(r) => {
                out.summary.checked += 1;
                if r.pass {
                    out.summary.passed += 1;
                } else {
                    out.summary.failed += 1;
                }
                out.reports.push(r);
            }
            Outcome::Skipped(s) => {
                out.summary.skipped += 1;
                out.skipped.push(s);
            }
            Outcome::OutOfDomain => out.summary.out_of_domain += 1,
            Outcome::Failed(s) => {
                out.summary.failed += 1;
                out.errors.push(s);
            }
        }
    }
    Ok(out)
}

/// Integer coefficients the q-expansions must round to.
fn expected_coefficients(id: IdentityId) -> Result<(Vec<i64>, bool)> {
    Ok(match id {
        IdentityId::FourierE4 => (vec![1, 240, 2160, 6720], false),
        IdentityId::FourierF2 => (vec![1, 120, -6120, 737760], false),
        IdentityId::FourierF1 => (vec![1, 60, -4860, 660480], false),
        IdentityId::Fourier1728J => (vec![1, 744, 196884], true),
        _ => return Err(Error::Parameter(format!("{id} has no q-expansion"))),
    })
}

/// One report per extracted coefficient, sampled at height `im0`. The
/// report's `part` is the exponent of `q` shifted by one when a `1/q`
/// term is present, and `rhs` is the expected integer.
pub fn fourier_reports(id: IdentityId, im0: f64, tol: f64) -> Result<Vec<CheckReport>> {
    let (expected, polar) = expected_coefficients(id)?;
    let n_terms = expected.len() - usize::from(polar);
    let mut cfg = QExpandConfig::new(n_terms);
    cfg.im0 = im0;
    if polar {
        cfg = cfg.with_polar();
    }
    let series = match id {
        IdentityId::FourierE4 => q_expand(|t| twelfth_series(t, 4), &cfg)?,
        IdentityId::FourierF2 => q_expand(|t| twelfth_series(t, 2), &cfg)?,
        IdentityId::FourierF1 => q_expand(|t| twelfth_series(t, 1), &cfg)?,
        _ => q_expand(|t| Ok(j_invariant(t, Form::Theta)? * 1728.0), &cfg)?,
    };
    let got: Vec<ComplexValue> = series.polar.iter().chain(&series.coeffs).copied().collect();
    Ok(got
        .into_iter()
        .zip(expected)
        .enumerate()
        .map(|(k, (g, e))| CheckReport::new(id, c(0.0, im0), k, g, c(e as f64, 0.0), tol))
        .collect())
}

/// The four q-expansions at height `1.1` with absolute tolerance `1e-4`
/// on every coefficient before rounding.
pub fn fourier_acceptance() -> Result<Vec<CheckReport>> {
    let ids = [IdentityId::FourierE4, IdentityId::FourierF1, IdentityId::FourierF2, IdentityId::Fourier1728J];
    let mut out = Vec::new();
    for id in ids {
        out.extend(fourier_reports(id, 1.1, 1e-4)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::OMEGA2;

    #[test]
    fn fourier_coefficients() {
        for r in fourier_acceptance().unwrap() {
            assert!(r.residual < 1e-4, "{r:?}");
        }
    }

    #[test]
    fn pole_point_is_skipped() {
        let mut grid = GridSpec::only(&[IdentityId::J621]);
        grid.tau_override = Some(vec![c(0.1, 1.4), -OMEGA2, c(3.0, 1.0)]);
        let s = verify_suite(&grid, 1e-8).unwrap();
        assert_eq!(s.summary, Summary { checked: 1, passed: 1, failed: 0, skipped: 1, out_of_domain: 1 });
        assert!(s.all_passed());
    }

    #[test]
    fn tight_tolerance_reports_failures() {
        let grid = GridSpec::only(&[IdentityId::J621, IdentityId::Fe4]);
        let s = verify_suite(&grid, 1e-15).unwrap();
        assert!(s.summary.failed > 0);
        assert!(s.reports.iter().all(|r| r.residual < 1e-8));
    }

    #[test]
    fn order_is_deterministic() {
        let grid = GridSpec::only(&[IdentityId::Fe1, IdentityId::JacobiFormula]);
        let a = verify_suite(&grid, 1e-8).unwrap();
        let b = verify_suite(&grid, 1e-8).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.reports[0].id, IdentityId::Fe1);
        assert_eq!(a.reports[19].id, IdentityId::JacobiFormula);
    }
}
