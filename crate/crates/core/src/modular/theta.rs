use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::reduce::{sl2z_steps, Step};
use super::{QConfig, Tau, ThetaChar, MIN_IM};
use crate::error::{Error, Result};
use crate::monodromy::{group_membership, GroupId};
use crate::numcore::{c, ComplexValue, IntMat2, I, ONE, ZERO};

/// `theta_pq(tau) = sum_n exp(pi i (n + p/2)^2 tau + pi i (n + p/2) q)` by
/// direct summation over `-n_max - p <= n <= n_max`.
pub fn theta(ch: ThetaChar, tau: Tau, cfg: &QConfig) -> Result<ComplexValue> {
    if tau.im() < MIN_IM {
        return Err(Error::LowImaginaryPart(tau.im()));
    }
    if ch.is_identically_zero() {
        return Ok(ZERO);
    }
    let shift = ch.p as f64 / 2.0;
    let n_max = cfg.n_max as i64;
    let t = tau.value();
    let mut sum = ZERO;
    // Sum from the outside in so the small terms are added first.
    let mut ns: Vec<i64> = (-n_max - ch.p as i64..=n_max).collect();
    ns.sort_by_key(|n| std::cmp::Reverse((2 * n + ch.p as i64).abs()));
    for n in ns {
        let m = n as f64 + shift;
        let exponent = I * PI * (t * (m * m) + m * ch.q as f64);
        sum += exponent.exp();
    }
    Ok(sum)
}

/// How to obtain the fourth powers of the even theta constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuarticMethod {
    /// Direct q-series at `tau`.
    Direct,
    /// q-series at the `SL2(Z)`-reduced point, transported back by the
    /// exact transformation laws of the fourth powers.
    Reduced,
}

/// `(theta00^4, theta01^4, theta10^4)` at `tau`.
pub fn theta_quartics(tau: Tau, method: QuarticMethod) -> Result<[ComplexValue; 3]> {
    match method {
        QuarticMethod::Direct => direct_quartics(tau),
        QuarticMethod::Reduced => {
            let (tau0, steps) = sl2z_steps(tau)?;
            let mut q = direct_quartics(tau0)?;
            // Walk back from tau0 to tau. A step maps tau_k to tau_{k+1};
            // values at tau_k come from values at tau_{k+1}.
            let mut points = Vec::with_capacity(steps.len() + 1);
            let mut cur = tau;
            for s in &steps {
                points.push(cur);
                cur = s.apply(cur)?;
            }
            for (s, at) in steps.iter().zip(points).rev() {
                let next = s.apply(at)?.value();
                let [a, b, cc] = q;
                q = match *s {
                    // theta^4 at tau - m from theta^4 at tau: odd shifts swap
                    // theta00 and theta01 and flip theta10.
                    Step::Shift(m) if m % 2 != 0 => [b, a, -cc],
                    Step::Shift(_) => [a, b, cc],
                    // tau_k = -1 / tau_{k+1}.
                    Step::Invert => {
                        let f = -(next * next);
                        [f * a, f * cc, f * b]
                    }
                };
            }
            Ok(q)
        }
    }
}

fn direct_quartics(tau: Tau) -> Result<[ComplexValue; 3]> {
    let cfg = QConfig::for_tau(tau);
    let mut out = [ZERO; 3];
    for (k, ch) in ThetaChar::EVEN.iter().enumerate() {
        let t = theta(*ch, tau, &cfg)?;
        let t2 = t * t;
        out[k] = t2 * t2;
    }
    Ok(out)
}

/// Elements whose action on squared theta constants is tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaMove {
    T,
    TInv,
    J,
    W,
    W2,
    /// An element of `Gamma_12`; only `theta00` has a law.
    Gamma12(IntMat2),
}

impl ThetaMove {
    pub fn matrix(&self) -> IntMat2 {
        match self {
            ThetaMove::T => IntMat2::T,
            ThetaMove::TInv => IntMat2::new(1, -1, 0, 1),
            ThetaMove::J => IntMat2::J,
            ThetaMove::W => IntMat2::W,
            ThetaMove::W2 => IntMat2::W * IntMat2::W,
            ThetaMove::Gamma12(g) => *g,
        }
    }
}

/// Right-hand side of `theta_ch(g . tau)^2 = factor * theta_target(tau)^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformLaw {
    pub target: ThetaChar,
    pub factor: ComplexValue,
    pub expected: ComplexValue,
}

/// Multiplier `chi(g) (g21 tau + g22)` for `theta00^2` under `Gamma_12`,
/// with `g` first normalized to `g21 > 0`, or `g21 = 0` and `g22 > 0`.
fn gamma12_factor(g: &IntMat2, tau: ComplexValue) -> Result<ComplexValue> {
    if !group_membership(g, GroupId::Gamma12)? {
        return Err(Error::Unsupported(format!("{g} is not in Gamma_12")));
    }
    let g = if g.g21 > 0 || (g.g21 == 0 && g.g22 > 0) { *g } else { -*g };
    let ipow = |k: i64| I.powi(k.rem_euclid(4) as i32);
    let chi = if g.g21 % 2 == 0 { ipow(g.g22 - 1) } else { ipow(-g.g21) };
    Ok(chi * (tau * g.g21 as f64 + g.g22 as f64))
}

pub fn theta_transform(ch: ThetaChar, mv: ThetaMove, tau: Tau) -> Result<TransformLaw> {
    use ThetaChar as C;
    if ch.is_identically_zero() {
        return Err(Error::Unsupported("theta11 vanishes identically".into()));
    }
    let t = tau.value();
    let minus_i = c(0.0, -1.0);
    let (target, factor) = match mv {
        ThetaMove::T => match (ch.p, ch.q) {
            (0, 0) => (C::T01, ONE),
            (0, 1) => (C::T00, ONE),
            _ => (C::T10, I),
        },
        ThetaMove::TInv => match (ch.p, ch.q) {
            (0, 0) => (C::T01, ONE),
            (0, 1) => (C::T00, ONE),
            _ => (C::T10, minus_i),
        },
        ThetaMove::J => match (ch.p, ch.q) {
            (0, 0) => (C::T00, minus_i * t),
            (0, 1) => (C::T10, minus_i * t),
            _ => (C::T01, minus_i * t),
        },
        ThetaMove::W => match (ch.p, ch.q) {
            (0, 0) => (C::T10, minus_i * t),
            (0, 1) => (C::T00, minus_i * t),
            _ => (C::T01, -t),
        },
        ThetaMove::W2 => match (ch.p, ch.q) {
            (0, 0) => (C::T01, minus_i * (t + 1.0)),
            (0, 1) => (C::T10, t + 1.0),
            _ => (C::T00, minus_i * (t + 1.0)),
        },
        ThetaMove::Gamma12(g) => {
            if ch != C::T00 {
                return Err(Error::Unsupported(format!("no Gamma_12 law for {ch}")));
            }
            (C::T00, gamma12_factor(&g, t)?)
        }
    };
    let th = theta(target, tau, &QConfig::for_tau(tau))?;
    Ok(TransformLaw { target, factor, expected: factor * th * th })
}
