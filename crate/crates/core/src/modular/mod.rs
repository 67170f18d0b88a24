//! Theta constants and their transformation laws, the modular functions
//! `lambda`, `nu` and `j`, the Eisenstein series `E4`, reduction to
//! fundamental domains and numerical q-expansions.

mod fourier;
mod functions;
mod reduce;
mod theta;

pub use fourier::{q_expand, FourierSeries, QExpandConfig};
pub use functions::{e4, inverse_j, j_invariant, lambda, nu, E4Method, Form};
pub use reduce::{reduce_fundamental, Reduction, ReductionGroup};
pub use theta::{theta, theta_quartics, theta_transform, QuarticMethod, ThetaMove, TransformLaw};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numcore::{moebius, ComplexValue, IntMat2, Mat2};

/// A point of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tau(ComplexValue);

impl Tau {
    pub fn new(value: ComplexValue) -> Result<Self> {
        if value.im <= 0.0 || !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::Domain(format!("tau = {value} is not in the upper half-plane")));
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> ComplexValue {
        self.0
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    /// `g . tau` for `g` in `SL2(Z)`.
    pub fn act(&self, g: &IntMat2) -> Result<Self> {
        Self::new(moebius(&Mat2::from(*g), self.0)?)
    }
}

/// Theta characteristic `(p, q)` with `p, q` in `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaChar {
    pub p: u8,
    pub q: u8,
}

impl ThetaChar {
    pub const T00: ThetaChar = ThetaChar { p: 0, q: 0 };
    pub const T01: ThetaChar = ThetaChar { p: 0, q: 1 };
    pub const T10: ThetaChar = ThetaChar { p: 1, q: 0 };
    pub const T11: ThetaChar = ThetaChar { p: 1, q: 1 };

    /// The three even characteristics.
    pub const EVEN: [ThetaChar; 3] = [Self::T00, Self::T01, Self::T10];

    pub fn new(p: u8, q: u8) -> Result<Self> {
        if p > 1 || q > 1 {
            return Err(Error::Parameter(format!("theta characteristic ({p}, {q}) is not in {{0, 1}}^2")));
        }
        Ok(Self { p, q })
    }

    /// `theta_11` vanishes identically on the upper half-plane.
    pub fn is_identically_zero(&self) -> bool {
        self.p == 1 && self.q == 1
    }
}

impl std::fmt::Display for ThetaChar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "theta{}{}", self.p, self.q)
    }
}

/// Truncation of the theta q-series: terms `|n| <= n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QConfig {
    pub n_max: u32,
    /// Modulus bound `exp(-pi Im(tau) n_max^2)` of the first omitted term.
    pub tail_bound: f64,
}

impl QConfig {
    /// Smallest `n_max` with `pi Im(tau) n_max^2 > 40`.
    pub fn for_tau(tau: Tau) -> Self {
        let y = tau.im();
        let mut n = 1u32;
        while std::f64::consts::PI * y * (n as f64).powi(2) <= 40.0 {
            n += 1;
        }
        Self { n_max: n, tail_bound: (-std::f64::consts::PI * y * (n as f64).powi(2)).exp() }
    }
}

/// Smallest imaginary part accepted by the direct theta sums.
pub const MIN_IM: f64 = 0.05;
