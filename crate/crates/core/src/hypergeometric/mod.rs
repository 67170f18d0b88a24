//! The Gauss hypergeometric function `F(a, b, c; z)`, the solution basis
//! `(f1, f2)` of the hypergeometric equation around `z = 1/2`, Euler-type
//! integral representations, and residual checks for the differential
//! equation and the Wronskian.

mod basis;
mod continuation;
pub mod quadrature;
mod series;

pub use basis::{euler_integral, gauss_limit, hg_basis, BasisPair, IntegralKind};
pub use continuation::{hg_principal, hg_principal_via, select_route, Route};
pub use series::{hg_series, hg_series_derivs, ode_residual, wronskian_residual, SeriesConfig};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numcore::{rat, rat_to_f64, Rational};

/// Exact rational parameter triple `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HGParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

fn is_integer(r: Rational) -> bool {
    r.is_integer()
}

impl HGParams {
    /// Builds a parameter triple; `c` must not be a non-positive integer.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if is_integer(c) && !c.is_positive() {
            return Err(Error::Parameter(format!("c = {c} is a non-positive integer")));
        }
        Ok(Self { a, b, c })
    }

    /// `(1/2, 1/2, 1)`, whose Schwarz map inverts the lambda function.
    pub fn half_half_one() -> Self {
        Self { a: rat(1, 2), b: rat(1, 2), c: rat(1, 1) }
    }

    /// `(1/6, 1/2, 1)`, triangle group `(3, 3, inf)`.
    pub fn sixth_half_one() -> Self {
        Self { a: rat(1, 6), b: rat(1, 2), c: rat(1, 1) }
    }

    /// `(1/12, 5/12, 1)`, triangle group `(2, 3, inf)`.
    pub fn twelfth_five_twelfths_one() -> Self {
        Self { a: rat(1, 12), b: rat(5, 12), c: rat(1, 1) }
    }

    /// The three triples studied throughout the crate.
    pub fn studied() -> [Self; 3] {
        [Self::half_half_one(), Self::sixth_half_one(), Self::twelfth_five_twelfths_one()]
    }

    pub fn af(&self) -> f64 {
        rat_to_f64(self.a)
    }

    pub fn bf(&self) -> f64 {
        rat_to_f64(self.b)
    }

    pub fn cf(&self) -> f64 {
        rat_to_f64(self.c)
    }

    /// `c - a - b`, the exponent difference at `z = 1`.
    pub fn excess(&self) -> Rational {
        self.c - self.a - self.b
    }

    /// The triple `(a, b, a + b - c + 1)` of the solution regular at `z = 1`.
    pub fn at_one(&self) -> Result<Self> {
        Self::new(self.a, self.b, self.a + self.b - self.c + 1)
    }

    /// Hypotheses for the integral basis: `a, b` not integers and
    /// `a > 0`, `b - c + 1 > 0`, `c - a > 0`.
    pub fn check_basis_hypotheses(&self) -> Result<()> {
        let one = Rational::from_integer(1);
        if is_integer(self.a) || is_integer(self.b) {
            return Err(Error::Parameter(format!("a = {}, b = {} must not be integers", self.a, self.b)));
        }
        if !self.a.is_positive() {
            return Err(Error::Parameter(format!("a = {} must be positive", self.a)));
        }
        if !(self.b - self.c + one).is_positive() {
            return Err(Error::Parameter(format!("b - c + 1 = {} must be positive", self.b - self.c + one)));
        }
        if !(self.c - self.a).is_positive() {
            return Err(Error::Parameter(format!("c - a = {} must be positive", self.c - self.a)));
        }
        Ok(())
    }

    pub(crate) fn excess_is_integer(&self) -> bool {
        is_integer(self.excess())
    }

    pub(crate) fn ab_difference_is_integer(&self) -> bool {
        is_integer(self.b - self.a)
    }
}

impl std::fmt::Display for HGParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}
