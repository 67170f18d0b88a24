use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::quadrature::TanhSinh;
use super::{hg_principal, HGParams};
use crate::error::{Error, Result};
use crate::numcore::{beta, gamma, real, ComplexValue, ONE};

/// The solution pair `(f1, f2)`: `f1` is the solution regular at `z = 1`,
/// `f2` the one regular at `z = 0`, both normalized by their Euler integrals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BasisPair {
    pub f1: ComplexValue,
    pub f2: ComplexValue,
}

impl BasisPair {
    pub fn ratio(&self) -> ComplexValue {
        self.f1 / self.f2
    }
}

/// Which Euler-type integral to evaluate by quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegralKind {
    F1,
    F2,
    ZeroToZ,
    ZToOne,
}

fn unwinding_phase(a: f64) -> ComplexValue {
    Complex64::from_polar(1.0, -PI * (a - 1.0))
}

/// `f1 = e^{-pi i (a-1)} B(a, b-c+1) F(a, b, a+b-c+1; 1-z)` and
/// `f2 = B(a, c-a) F(a, b, c; z)`.
pub fn hg_basis(p: &HGParams, z: ComplexValue) -> Result<BasisPair> {
    p.check_basis_hypotheses()?;
    let (a, b, c) = (p.af(), p.bf(), p.cf());
    let f1 = unwinding_phase(a) * beta(real(a), real(b - c + 1.0))? * hg_principal(&p.at_one()?, ONE - z)?;
    let f2 = beta(real(a), real(c - a))? * hg_principal(p, z)?;
    Ok(BasisPair { f1, f2 })
}

/// `Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))`, the value of the
/// series at `z = 1` when `c - a - b > 0`.
pub fn gauss_limit(p: &HGParams) -> Result<ComplexValue> {
    let s = p.excess();
    if s <= 0.into() {
        return Err(Error::Parameter(format!("c - a - b = {s} is not positive")));
    }
    let (a, b, c) = (p.af(), p.bf(), p.cf());
    Ok(gamma(real(c))? * gamma(real(c - a - b))? / (gamma(real(c - a))? * gamma(real(c - b))?))
}

/// Integrates `g(s, 1 - s)` over `(0, 1)`, split at the midpoint.
fn integrate_unit<G>(g: G) -> Result<ComplexValue>
where
    G: Fn(f64, f64) -> ComplexValue,
{
    let ts = TanhSinh::default();
    let left = ts.integrate(0.0, 0.5, |n| g(n.from_left, 0.5 + n.from_right))?;
    let right = ts.integrate(0.5, 1.0, |n| g(0.5 + n.from_left, n.from_right))?;
    Ok(left + right)
}

/// Euler-type integrals evaluated by quadrature, independent of the series.
///
/// `F1` and `F2` are pulled back to `(0, 1)` so that the integrand is
/// `s^alpha (1-s)^beta` times a factor that stays off the negative axis;
/// `ZeroToZ` and `ZToOne` integrate `t^{b-c} (t-z)^{-b} (t-1)^{c-a-1}` along
/// the real segments for `0 < z < 1`, with `arg(t - 1) = pi` and
/// `arg(t - z) = -pi` left of `z`.
pub fn euler_integral(p: &HGParams, z: ComplexValue, which: IntegralKind) -> Result<ComplexValue> {
    p.check_basis_hypotheses()?;
    let (a, b, c) = (p.af(), p.bf(), p.cf());
    match which {
        IntegralKind::F2 => {
            if z.im == 0.0 && z.re >= 1.0 {
                return Err(Error::BranchCut { z: z.to_string() });
            }
            let w = ONE - z;
            integrate_unit(|s, r| {
                let base = (real(r) + w * s).powf(-b);
                base * (s.powf(a - 1.0) * r.powf(c - a - 1.0))
            })
        }
        IntegralKind::F1 => {
            if z.im == 0.0 && z.re <= 0.0 {
                return Err(Error::BranchCut { z: z.to_string() });
            }
            let v = integrate_unit(|s, r| {
                let base = (real(r) + z * s).powf(-b);
                base * (s.powf(a - 1.0) * r.powf(b - c))
            })?;
            Ok(unwinding_phase(a) * v)
        }
        IntegralKind::ZeroToZ | IntegralKind::ZToOne => {
            if z.im != 0.0 || !(z.re > 0.0 && z.re < 1.0) {
                return Err(Error::Domain(format!("segment integrals need 0 < z < 1, got {z}")));
            }
            let x = z.re;
            let phase_one = Complex64::from_polar(1.0, PI * (c - a - 1.0));
            let ts = TanhSinh::default();
            if which == IntegralKind::ZToOne {
                let mid = 0.5 * (x + 1.0);
                let f = |t: f64, tz: f64, t1: f64| real(t.powf(b - c) * tz.powf(-b) * t1.powf(c - a - 1.0));
                let left = ts.integrate(x, mid, |n| f(n.x, n.from_left, n.from_right + (1.0 - mid)))?;
                let right = ts.integrate(mid, 1.0, |n| f(n.x, n.x - x, n.from_right))?;
                Ok(phase_one * (left + right))
            } else {
                let phase_z = Complex64::from_polar(1.0, -PI * b);
                let mid = 0.5 * x;
                let f = |t: f64, zt: f64| real(t.powf(b - c) * zt.powf(-b) * (1.0 - t).powf(c - a - 1.0));
                let left = ts.integrate(0.0, mid, |n| f(n.from_left, x - n.x))?;
                let right = ts.integrate(mid, x, |n| f(n.x, n.from_right))?;
                Ok(phase_one * phase_z * (left + right))
            }
        }
    }
}
