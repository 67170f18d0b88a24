use serde::{Deserialize, Serialize};

use super::Tau;
use crate::error::{Error, Result};
use crate::numcore::IntMat2;

const MAX_STEPS: usize = 10_000;

/// One move of the `SL2(Z)` reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    /// `tau -> tau + m`
    Shift(i64),
    /// `tau -> -1 / tau`
    Invert,
}

impl Step {
    pub(crate) fn apply(&self, tau: Tau) -> Result<Tau> {
        let t = tau.value();
        match *self {
            Step::Shift(m) => Tau::new(t + m as f64),
            Step::Invert => Tau::new(-1.0 / t),
        }
    }

    fn matrix(&self) -> IntMat2 {
        match *self {
            Step::Shift(m) => IntMat2::new(1, m, 0, 1),
            Step::Invert => IntMat2::J,
        }
    }
}

fn too_many(tau: Tau) -> Error {
    Error::NoConvergence { terms: MAX_STEPS, modulus: tau.value().norm() }
}

/// Reduces `tau` into the standard fundamental domain of `SL2(Z)`,
/// recording the moves taken.
pub(crate) fn sl2z_steps(tau: Tau) -> Result<(Tau, Vec<Step>)> {
    let mut cur = tau;
    let mut steps = Vec::new();
    for _ in 0..MAX_STEPS {
        // Re(tau) - m in (-1/2, 1/2].
        let m = -(cur.re() - 0.5).ceil() as i64;
        if m != 0 {
            let s = Step::Shift(m);
            cur = s.apply(cur)?;
            steps.push(s);
        }
        let r = cur.value().norm_sqr();
        if r < 1.0 || (r == 1.0 && cur.re() < 0.0) {
            cur = Step::Invert.apply(cur)?;
            steps.push(Step::Invert);
            continue;
        }
        return Ok((cur, steps));
    }
    Err(too_many(tau))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReductionGroup {
    SL2Z,
    /// The index-two subgroup generated by `T^2` and `W`.
    Gamma2CubeRoot,
}

/// `tau = g . tau0` with `tau0` in the fundamental region of the group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Reduction {
    pub tau0: Tau,
    pub g: IntMat2,
}

impl Reduction {
    /// `|g . tau0 - tau|` relative to `max(1, |tau|)`.
    pub fn roundtrip_error(&self, tau: Tau) -> Result<f64> {
        let back = self.tau0.act(&self.g)?.value();
        Ok((back - tau.value()).norm() / tau.value().norm().max(1.0))
    }
}

impl ReductionGroup {
    /// Membership of `tau` in the closed-open fundamental region.
    pub fn contains(&self, tau: Tau) -> bool {
        let t = tau.value();
        match self {
            ReductionGroup::SL2Z => {
                let r = t.norm_sqr();
                (t.re > -0.5 && t.re <= 0.5 && r > 1.0) || (r == 1.0 && t.re >= 0.0 && t.re <= 0.5)
            }
            ReductionGroup::Gamma2CubeRoot => {
                t.re > -1.5 && t.re <= 0.5 && t.norm_sqr() >= 1.0 && (t + 1.0).norm_sqr() > 1.0
            }
        }
    }
}

pub fn reduce_fundamental(tau: Tau, group: ReductionGroup) -> Result<Reduction> {
    match group {
        ReductionGroup::SL2Z => {
            let (tau0, steps) = sl2z_steps(tau)?;
            let h = steps.iter().fold(IntMat2::IDENTITY, |h, s| s.matrix() * h);
            Ok(Reduction { tau0, g: h.inverse()? })
        }
        ReductionGroup::Gamma2CubeRoot => {
            let w = IntMat2::W;
            let w2 = w * w;
            let mut cur = tau;
            let mut h = IntMat2::IDENTITY;
            for _ in 0..MAX_STEPS {
                // Re(tau) - 2m in (-3/2, 1/2].
                let m = ((cur.re() - 0.5) / 2.0).ceil() as i64;
                if m != 0 {
                    let shift = IntMat2::new(1, -2 * m, 0, 1);
                    cur = cur.act(&shift)?;
                    h = shift * h;
                }
                let t = cur.value();
                let step = if t.norm_sqr() < 1.0 {
                    w
                } else if (t + 1.0).norm_sqr() <= 1.0 {
                    w2
                } else {
                    return Ok(Reduction { tau0: cur, g: h.inverse()? });
                };
                cur = cur.act(&step)?;
                h = step * h;
            }
            Err(too_many(tau))
        }
    }
}
