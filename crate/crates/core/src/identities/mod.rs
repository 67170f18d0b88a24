//! Residual checks for the theta/hypergeometric identities.
//!
//! The modular side of every identity is evaluated from theta sums or
//! Eisenstein series; the other side goes through `hg_principal` with a
//! modular-function argument. Only squares and fourth powers of the
//! hypergeometric values are compared, since the roots are multivalued
//! in `tau`.

mod grid;
mod suite;

pub use grid::{halton, SampleDomain, SMALL_DISK_RADIUS};
pub use suite::{fourier_acceptance, fourier_reports, verify_suite, GridSpec, SkippedPoint, SuiteReport, Summary};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeometric::{hg_principal, HGParams};
use crate::modular::{e4, inverse_j, lambda, nu, theta, E4Method, Form, QConfig, Tau, ThetaChar};
use crate::numcore::{ComplexValue, I, OMEGA, OMEGA2, ONE, SQRT3};
use crate::schwarz::{schwarz_map, SchwarzId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    /// `theta00^4 = theta01^4 + theta10^4`.
    #[serde(rename = "jacobi_id_theta")]
    JacobiIdTheta,
    /// `theta00^2 = F(1/2,1/2,1; lambda)`.
    #[serde(rename = "jacobi_formula")]
    JacobiFormula,
    /// `theta01^2 = F(1/2,1/2,1; lambda/(lambda-1))`.
    #[serde(rename = "jacobi_T")]
    JacobiT,
    /// `F(1/2,1/2,1; z) = theta00(phi0)^2` and `F(1/2,1/2,1; z/(z-1)) = theta01(phi0)^2`.
    #[serde(rename = "jacobi_pullback")]
    JacobiPullback,
    /// `theta00^4 + omega theta10^4 = F(1/6,1/2,1; nu)^2`.
    #[serde(rename = "j621")]
    J621,
    /// `theta01^4 - omega theta10^4 = F(1/6,1/2,1; nu(T tau))^2 = F(1/6,1/2,1; nu/(nu-1))^2`.
    #[serde(rename = "j621_inv")]
    J621Inv,
    /// Linear relations among the theta quartics and the quadratic forms of `E4`.
    #[serde(rename = "theta_quartic_relations")]
    ThetaQuarticRelations,
    /// `E4 = F(1/6,1/2,1; nu)^2 F(1/6,1/2,1; nu/(nu-1))^2`.
    #[serde(rename = "e4_product")]
    E4Product,
    /// `E4 = F(1/12,5/12,1; 1/j)^4`.
    #[serde(rename = "e4_j_formula")]
    E4JFormula,
    /// The three identities above pulled back along `phi1`.
    #[serde(rename = "pullback_phi1")]
    PullbackPhi1,
    /// `F(1/12,5/12,1; z)^4 = E4(phi2(z))`.
    #[serde(rename = "pullback_phi2")]
    PullbackPhi2,
    #[serde(rename = "fe1")]
    Fe1,
    #[serde(rename = "fe2")]
    Fe2,
    #[serde(rename = "fe3")]
    Fe3,
    #[serde(rename = "fe4")]
    Fe4,
    /// q-expansion of `F(1/12,5/12,1; 1/j)^4`.
    #[serde(rename = "fourier_e4")]
    FourierE4,
    /// q-expansion of `F(1/12,5/12,1; 1/j)^2`.
    #[serde(rename = "fourier_F2")]
    FourierF2,
    /// q-expansion of `F(1/12,5/12,1; 1/j)`.
    #[serde(rename = "fourier_F1")]
    FourierF1,
    /// q-expansion of `1728 j`.
    #[serde(rename = "fourier_1728j")]
    Fourier1728J,
}

impl IdentityId {
    pub const ALL: [IdentityId; 19] = [
        IdentityId::JacobiIdTheta,
        IdentityId::JacobiFormula,
        IdentityId::JacobiT,
        IdentityId::JacobiPullback,
        IdentityId::J621,
        IdentityId::J621Inv,
        IdentityId::ThetaQuarticRelations,
        IdentityId::E4Product,
        IdentityId::E4JFormula,
        IdentityId::PullbackPhi1,
        IdentityId::PullbackPhi2,
        IdentityId::Fe1,
        IdentityId::Fe2,
        IdentityId::Fe3,
        IdentityId::Fe4,
        IdentityId::FourierE4,
        IdentityId::FourierF2,
        IdentityId::FourierF1,
        IdentityId::Fourier1728J,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            IdentityId::JacobiIdTheta => "jacobi_id_theta",
            IdentityId::JacobiFormula => "jacobi_formula",
            IdentityId::JacobiT => "jacobi_T",
            IdentityId::JacobiPullback => "jacobi_pullback",
            IdentityId::J621 => "j621",
            IdentityId::J621Inv => "j621_inv",
            IdentityId::ThetaQuarticRelations => "theta_quartic_relations",
            IdentityId::E4Product => "e4_product",
            IdentityId::E4JFormula => "e4_j_formula",
            IdentityId::PullbackPhi1 => "pullback_phi1",
            IdentityId::PullbackPhi2 => "pullback_phi2",
            IdentityId::Fe1 => "fe1",
            IdentityId::Fe2 => "fe2",
            IdentityId::Fe3 => "fe3",
            IdentityId::Fe4 => "fe4",
            IdentityId::FourierE4 => "fourier_e4",
            IdentityId::FourierF2 => "fourier_F2",
            IdentityId::FourierF1 => "fourier_F1",
            IdentityId::Fourier1728J => "fourier_1728j",
        }
    }

    pub fn domain(&self) -> SampleDomain {
        use IdentityId::*;
        match self {
            JacobiIdTheta | ThetaQuarticRelations => SampleDomain::UpperHalfPlane,
            JacobiFormula | JacobiT => SampleDomain::Gamma2Region,
            J621 | J621Inv | E4Product => SampleDomain::CubeRootRegion,
            E4JFormula => SampleDomain::ModularRegion,
            JacobiPullback | PullbackPhi1 | PullbackPhi2 => SampleDomain::Lens,
            Fe1 | Fe2 | Fe3 | Fe4 => SampleDomain::SmallDisk,
            FourierE4 | FourierF2 | FourierF1 | Fourier1728J => SampleDomain::QHeight,
        }
    }

    pub fn is_fourier(&self) -> bool {
        self.domain() == SampleDomain::QHeight
    }

    /// Whether the sample point is a `tau` (as opposed to a `z`).
    pub fn takes_tau(&self) -> bool {
        !matches!(self.domain(), SampleDomain::Lens | SampleDomain::SmallDisk)
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.tag() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown identity {s:?}")))
    }
}

/// Outcome of one identity at one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: IdentityId,
    pub point: ComplexValue,
    /// Which equality of a multi-part identity this report shows; the
    /// worst one is reported.
    pub part: usize,
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub residual: f64,
    pub rel_residual: f64,
    pub tol: f64,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(
        id: IdentityId,
        point: ComplexValue,
        part: usize,
        lhs: ComplexValue,
        rhs: ComplexValue,
        tol: f64,
    ) -> Self {
        let residual = (lhs - rhs).norm();
        let scale = lhs.norm().max(rhs.norm());
        let rel_residual = if scale > 0.0 { residual / scale } else { 0.0 };
        let pass = residual <= tol || rel_residual <= tol;
        Self { id, point, part, lhs, rhs, residual, rel_residual, tol, pass }
    }

    /// `min(residual, rel_residual)`, the quantity compared against `tol`.
    pub fn score(&self) -> f64 {
        self.residual.min(self.rel_residual)
    }
}

pub const DEFAULT_TOL: f64 = 1e-8;

fn tau_at(p: ComplexValue) -> Result<Tau> {
    Tau::new(p)
}

fn theta_direct(ch: ThetaChar, tau: Tau) -> Result<ComplexValue> {
    theta(ch, tau, &QConfig::for_tau(tau))
}

/// `(theta00^4, theta01^4, theta10^4)` from the direct sums.
fn quartics(tau: Tau) -> Result<[ComplexValue; 3]> {
    let mut out = [ONE; 3];
    for (k, ch) in ThetaChar::EVEN.iter().enumerate() {
        out[k] = theta_direct(*ch, tau)?.powi(4);
    }
    Ok(out)
}

fn f_half(z: ComplexValue) -> Result<ComplexValue> {
    hg_principal(&HGParams::half_half_one(), z)
}

fn f_sixth(z: ComplexValue) -> Result<ComplexValue> {
    hg_principal(&HGParams::sixth_half_one(), z)
}

fn f_twelfth(z: ComplexValue) -> Result<ComplexValue> {
    hg_principal(&HGParams::twelfth_five_twelfths_one(), z)
}

fn pfaff_argument(z: ComplexValue) -> ComplexValue {
    z / (z - 1.0)
}

/// Relations among the theta quartics at `tau`, each as an `(lhs, rhs)` pair.
fn quartic_relation_parts(tau: Tau) -> Result<Vec<(ComplexValue, ComplexValue)>> {
    let [a, b, cc] = quartics(tau)?;
    let third = |w: ComplexValue| (ONE - w) / 3.0;
    let first = a + OMEGA * cc;
    let second = a + OMEGA2 * cc;
    let half_sum = (a * a + b * b + cc * cc) * 0.5;
    Ok(vec![
        (first, b - OMEGA2 * cc),
        (first, -OMEGA2 * a - OMEGA * b),
        (first, third(OMEGA2) * (a - OMEGA * b - OMEGA2 * cc)),
        (second, b - OMEGA * cc),
        (second, -OMEGA * a - OMEGA2 * b),
        (second, third(OMEGA) * (a - OMEGA2 * b - OMEGA * cc)),
        (half_sum, a * a - a * cc + cc * cc),
        (half_sum, a * a - a * b + b * b),
        (half_sum, b * b + b * cc + cc * cc),
    ])
}

/// Evaluates a pole-prone ingredient first so that points on a pole orbit
/// are reported as such even when they sit on a domain boundary.
fn pole_probe(id: IdentityId, p: ComplexValue) -> Result<()> {
    use IdentityId::*;
    match id {
        J621 | J621Inv | E4Product => {
            let v = nu(tau_at(p)?, Form::Theta)?;
            if (v - 1.0).norm() < 1e-13 {
                return Err(Error::AtPole { what: "nu/(nu - 1)" });
            }
        }
        E4JFormula => {
            inverse_j(tau_at(p)?)?;
        }
        JacobiPullback | PullbackPhi1 | PullbackPhi2 if p.norm() < 1e-15 => {
            return Err(Error::AtPole { what: "cusp at i infinity" });
        }
        _ => {}
    }
    Ok(())
}

/// All equalities of one identity at `p`, as `(lhs, rhs)` pairs.
fn evaluate(id: IdentityId, p: ComplexValue) -> Result<Vec<(ComplexValue, ComplexValue)>> {
    use IdentityId::*;
    let pairs = match id {
        JacobiIdTheta => {
            let [a, b, cc] = quartics(tau_at(p)?)?;
            vec![(a, b + cc)]
        }
        JacobiFormula => {
            let tau = tau_at(p)?;
            vec![(theta_direct(ThetaChar::T00, tau)?.powi(2), f_half(lambda(tau)?)?)]
        }
        JacobiT => {
            let tau = tau_at(p)?;
            let l = lambda(tau)?;
            vec![(theta_direct(ThetaChar::T01, tau)?.powi(2), f_half(pfaff_argument(l))?)]
        }
        JacobiPullback => {
            let tau = schwarz_map(SchwarzId::Phi0, p)?;
            vec![
                (f_half(p)?, theta_direct(ThetaChar::T00, tau)?.powi(2)),
                (f_half(pfaff_argument(p))?, theta_direct(ThetaChar::T01, tau)?.powi(2)),
            ]
        }
        J621 => {
            let tau = tau_at(p)?;
            let [a, _, cc] = quartics(tau)?;
            vec![(a + OMEGA * cc, f_sixth(nu(tau, Form::Theta)?)?.powi(2))]
        }
        J621Inv => {
            let tau = tau_at(p)?;
            let [a, b, cc] = quartics(tau)?;
            let lhs = b - OMEGA * cc;
            let twisted = -I * (3.0 * SQRT3) * a * b * cc / lhs.powi(3);
            let v = nu(tau, Form::Theta)?;
            vec![(lhs, f_sixth(twisted)?.powi(2)), (lhs, f_sixth(pfaff_argument(v))?.powi(2))]
        }
        ThetaQuarticRelations => quartic_relation_parts(tau_at(p)?)?,
        E4Product => {
            let tau = tau_at(p)?;
            let v = nu(tau, Form::Theta)?;
            let rhs = (f_sixth(v)? * f_sixth(pfaff_argument(v))?).powi(2);
            let [a, b, cc] = quartics(tau)?;
            vec![(e4(tau, E4Method::Fourier)?, rhs), ((a * a + b * b + cc * cc) * 0.5, rhs)]
        }
        E4JFormula => {
            let tau = tau_at(p)?;
            let rhs = f_twelfth(inverse_j(tau)?)?.powi(4);
            let [a, b, cc] = quartics(tau)?;
            vec![(e4(tau, E4Method::Fourier)?, rhs), ((a * a + b * b + cc * cc) * 0.5, rhs)]
        }
        PullbackPhi1 => {
            let tau = schwarz_map(SchwarzId::Phi1, p)?;
            let [a, b, cc] = quartics(tau)?;
            let f = f_sixth(p)?.powi(2);
            let g = f_sixth(pfaff_argument(p))?.powi(2);
            let half_sum = (a * a + b * b + cc * cc) * 0.5;
            vec![(f, a + OMEGA * cc), (g, a + OMEGA2 * cc), (f * g, half_sum), (f * g, e4(tau, E4Method::Fourier)?)]
        }
        PullbackPhi2 => {
            let tau = schwarz_map(SchwarzId::Phi2, p)?;
            let [a, b, cc] = quartics(tau)?;
            let f = f_twelfth(p)?.powi(4);
            vec![(f, (a * a + b * b + cc * cc) * 0.5), (f, e4(tau, E4Method::Fourier)?)]
        }
        Fe1 => {
            let arg = I * (3.0 * SQRT3) * p * (ONE - p) / (ONE + OMEGA * p).powi(3);
            let rhs = -OMEGA2 * f_half(p)?.powi(2) - OMEGA * f_half(pfaff_argument(p))?.powi(2);
            vec![(f_sixth(arg)?.powi(2), rhs)]
        }
        Fe2 => {
            let arg = -I * (3.0 * SQRT3) * p * (ONE - p) / (p + OMEGA).powi(3);
            let rhs = -OMEGA * f_half(p)?.powi(2) - OMEGA2 * f_half(pfaff_argument(p))?.powi(2);
            vec![(f_sixth(arg)?.powi(2), rhs)]
        }
        Fe3 => {
            let arg = p * p / ((p - 1.0) * 4.0);
            vec![(f_twelfth(arg)?.powi(2), f_sixth(p)? * f_sixth(pfaff_argument(p))?)]
        }
        Fe4 => {
            let s = p * p - p + 1.0;
            let arg = p * p * (ONE - p).powi(2) * 27.0 / (s.powi(3) * 4.0);
            let a = f_half(p)?.powi(2);
            let b = f_half(pfaff_argument(p))?.powi(2);
            vec![(f_twelfth(arg)?.powi(4), a * a + b * b - a * b)]
        }
        FourierE4 | FourierF2 | FourierF1 | Fourier1728J => {
            return Err(Error::Unsupported(format!("{id} is checked by coefficient extraction")));
        }
    };
    Ok(pairs)
}

fn worst(reports: Vec<CheckReport>) -> CheckReport {
    reports.into_iter().max_by(|x, y| x.score().total_cmp(&y.score())).expect("every identity has at least one part")
}

/// Checks one identity at one point.
///
/// Returns `Error::AtPole` (the pole-skip marker) when the point lies on a
/// pole orbit of an ingredient, and `Error::Domain` when it is outside the
/// identity's domain. For Fourier tags the point is `i y`, the sampling
/// height, and the report shows the worst extracted coefficient.
pub fn check_identity(id: IdentityId, point: ComplexValue, tol: f64) -> Result<CheckReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parameter(format!("tolerance {tol} is not positive")));
    }
    pole_probe(id, point)?;
    if !id.domain().contains(point) {
        return Err(Error::Domain(format!("{point} is outside the domain {:?} of {id}", id.domain())));
    }
    if id.is_fourier() {
        return Ok(worst(fourier_reports(id, point.im, tol)?));
    }
    let parts = evaluate(id, point)?;
    Ok(worst(
        parts.into_iter().enumerate().map(|(k, (lhs, rhs))| CheckReport::new(id, point, k, lhs, rhs, tol)).collect(),
    ))
}

/// Every relation among the theta quartics at `tau` at relative tolerance
/// `1e-12`.
pub fn check_theta_quartics(tau: Tau) -> Result<Vec<CheckReport>> {
    Ok(quartic_relation_parts(tau)?
        .into_iter()
        .enumerate()
        .map(|(k, (lhs, rhs))| CheckReport::new(IdentityId::ThetaQuarticRelations, tau.value(), k, lhs, rhs, 1e-12))
        .collect())
}

/// `F(1/12,5/12,1; 1/j(tau))^power`.
pub(crate) fn twelfth_series(tau: Tau, power: i32) -> Result<ComplexValue> {
    Ok(f_twelfth(inverse_j(tau)?)?.powi(power))
}
