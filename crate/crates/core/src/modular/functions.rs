use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::theta::{theta_quartics, QuarticMethod};
use super::{Tau, MIN_IM};
use crate::error::{Error, Result};
use crate::numcore::{ComplexValue, I, OMEGA, OMEGA2, ONE, SQRT3, ZERO};

/// Denominators below this fraction of the numerator scale count as poles.
const POLE_RATIO: f64 = 1e-13;

fn quartics(tau: Tau) -> Result<[ComplexValue; 3]> {
    theta_quartics(tau, QuarticMethod::Reduced)
}

/// `lambda = theta10^4 / theta00^4`.
pub fn lambda(tau: Tau) -> Result<ComplexValue> {
    let [a, _, c] = quartics(tau)?;
    Ok(c / a)
}

/// Which closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    /// In terms of the theta quartics; the reference form.
    Theta,
    /// As a rational function of `lambda`.
    Lambda,
}

/// `nu = 3 sqrt(3) i theta00^4 theta01^4 theta10^4 / (theta00^4 + omega theta10^4)^3`,
/// equivalently `3 sqrt(3) i lambda (1 - lambda) / (lambda + omega^2)^3`.
pub fn nu(tau: Tau, form: Form) -> Result<ComplexValue> {
    let [a, b, c] = quartics(tau)?;
    let k = I * (3.0 * SQRT3);
    match form {
        Form::Theta => {
            let d = a + OMEGA * c;
            let den = d * d * d;
            let scale = a.norm().max(c.norm()).powi(3);
            if den.norm() < POLE_RATIO * scale {
                return Err(Error::AtPole { what: "nu" });
            }
            Ok(k * a * b * c / den)
        }
        Form::Lambda => {
            let l = c / a;
            let d = l + OMEGA2;
            let den = d * d * d;
            if den.norm() < POLE_RATIO * l.norm().max(1.0).powi(3) {
                return Err(Error::AtPole { what: "nu" });
            }
            Ok(k * l * (ONE - l) / den)
        }
    }
}

/// `j = (theta00^8 + theta01^8 + theta10^8)^3 / (54 theta00^8 theta01^8 theta10^8)`,
/// normalized so that `j(i) = 1`; the lambda form is
/// `(4/27) (lambda^2 - lambda + 1)^3 / (lambda^2 (1 - lambda)^2)`.
pub fn j_invariant(tau: Tau, form: Form) -> Result<ComplexValue> {
    let [a, b, c] = quartics(tau)?;
    match form {
        Form::Theta => {
            let s = a * a + b * b + c * c;
            Ok(s * s * s / ((a * b * c).powi(2) * 54.0))
        }
        Form::Lambda => {
            let l = c / a;
            let s = l * l - l + 1.0;
            Ok(s * s * s * (4.0 / 27.0) / (l * (ONE - l)).powi(2))
        }
    }
}

/// `1 / j`, with a pole on the `SL2(Z)`-orbit of `-omega^2`, where `j` has a
/// triple zero.
pub fn inverse_j(tau: Tau) -> Result<ComplexValue> {
    let [a, b, c] = quartics(tau)?;
    let s = a * a + b * b + c * c;
    let den = s * s * s;
    let scale = (a.norm_sqr() + b.norm_sqr() + c.norm_sqr()).powi(3);
    if den.norm() < POLE_RATIO * scale {
        return Err(Error::AtPole { what: "1/j" });
    }
    Ok((a * b * c).powi(2) * 54.0 / den)
}

/// How to evaluate `E4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum E4Method {
    /// `(theta00^8 + theta01^8 + theta10^8) / 2`
    Theta,
    /// `1 + 240 sum sigma_3(n) q^n`
    Fourier,
    /// `sum' (n1 tau + n2)^{-4} / (2 zeta(4))` over `|n1|, |n2| <= radius`
    Lattice { radius: u32 },
}

fn sigma3(n: u64) -> f64 {
    let mut s = 0u64;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            s += d.pow(3);
            let e = n / d;
            if e != d {
                s += e.pow(3);
            }
        }
        d += 1;
    }
    s as f64
}

/// The normalized Eisenstein series of weight 4.
pub fn e4(tau: Tau, method: E4Method) -> Result<ComplexValue> {
    match method {
        E4Method::Theta => {
            let [a, b, c] = quartics(tau)?;
            Ok((a * a + b * b + c * c) * 0.5)
        }
        E4Method::Fourier => {
            if tau.im() < MIN_IM {
                return Err(Error::LowImaginaryPart(tau.im()));
            }
            let q = (I * 2.0 * PI * tau.value()).exp();
            let mut sum = ZERO;
            let mut qn = ONE;
            let mut quiet = 0;
            for n in 1..100_000u64 {
                qn *= q;
                let term = qn * sigma3(n);
                sum += term;
                if term.norm() < 1e-18 * (1.0 + 240.0 * sum.norm()) {
                    quiet += 1;
                    if quiet >= 3 {
                        return Ok(ONE + sum * 240.0);
                    }
                } else {
                    quiet = 0;
                }
            }
            Err(Error::NoConvergence { terms: 100_000, modulus: q.norm() })
        }
        E4Method::Lattice { radius } => {
            let t = tau.value();
            let r = radius as i64;
            let mut sum = ZERO;
            // Pairs (n1, n2) and (-n1, -n2) contribute equally.
            for n1 in 0..=r {
                let lo = if n1 == 0 { 1 } else { -r };
                for n2 in lo..=r {
                    let w = t * n1 as f64 + n2 as f64;
                    let w2 = w * w;
                    sum += ONE / (w2 * w2);
                }
            }
            let zeta4 = PI.powi(4) / 90.0;
            Ok(sum * 2.0 / (2.0 * zeta4))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::{c, IntMat2};

    fn tau(re: f64, im: f64) -> Tau {
        Tau::new(c(re, im)).unwrap()
    }

    #[test]
    fn lambda_special_values() {
        assert!((lambda(tau(0.0, 1.0)).unwrap() - 0.5).norm() < 1e-13);
        assert!((lambda(tau(0.5, 0.5)).unwrap() - 2.0).norm() < 1e-12);
        assert!((lambda(tau(1.0, 1.0)).unwrap() + 1.0).norm() < 1e-12);
        let t = Tau::new(-OMEGA2).unwrap();
        assert!((lambda(t).unwrap() + OMEGA2).norm() < 1e-12);
    }

    #[test]
    fn lambda_under_t() {
        let t = tau(0.21, 0.83);
        let l = lambda(t).unwrap();
        let lt = lambda(t.act(&IntMat2::T).unwrap()).unwrap();
        assert!((lt - l / (l - 1.0)).norm() < 1e-12);
    }

    #[test]
    fn nu_forms_agree() {
        let t = tau(0.3, 1.7);
        let a = nu(t, Form::Theta).unwrap();
        let b = nu(t, Form::Lambda).unwrap();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn nu_values() {
        assert!((nu(Tau::new(OMEGA).unwrap(), Form::Theta).unwrap() - 1.0).norm() < 1e-10);
        assert!(nu(tau(0.0, 10.0), Form::Theta).unwrap().norm() < 1e-3);
        let pole = Tau::new(-OMEGA2).unwrap();
        assert!(matches!(nu(pole, Form::Theta), Err(Error::AtPole { .. })));
    }

    #[test]
    fn j_values() {
        assert!((j_invariant(tau(0.0, 1.0), Form::Theta).unwrap() - 1.0).norm() < 1e-12);
        let t = tau(-0.17, 1.3);
        let a = j_invariant(t, Form::Theta).unwrap();
        let b = j_invariant(t, Form::Lambda).unwrap();
        assert!((a - b).norm() < 1e-11 * a.norm());
        let near = Tau::new(-OMEGA2 + c(3e-4, 2e-4)).unwrap();
        assert!(inverse_j(near).unwrap().norm() > 1e6);
        assert!(matches!(inverse_j(Tau::new(-OMEGA2).unwrap()), Err(Error::AtPole { .. })));
    }

    #[test]
    fn e4_methods() {
        let t = tau(0.1, 0.9);
        let th = e4(t, E4Method::Theta).unwrap();
        let f = e4(t, E4Method::Fourier).unwrap();
        assert!((th - f).norm() < 1e-12 * th.norm());
        let t = tau(0.0, 2.0);
        let lat = e4(t, E4Method::Lattice { radius: 200 }).unwrap();
        assert!((lat - e4(t, E4Method::Theta).unwrap()).norm() < 1e-6);
    }

    #[test]
    fn e4_weight_four() {
        let t = tau(1.0, 1.0);
        let lhs = e4(t.act(&IntMat2::J).unwrap(), E4Method::Fourier).unwrap();
        let rhs = t.value().powi(4) * e4(t, E4Method::Fourier).unwrap();
        assert!((lhs - rhs).norm() < 1e-11 * rhs.norm());
    }
}
