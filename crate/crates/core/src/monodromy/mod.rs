//! Monodromy of the hypergeometric equation: local exponents, exact circuit
//! matrices in cyclotomic arithmetic, conjugation of the monodromy group
//! into scalar multiples of `SL2(Z)`, congruence-subgroup tests and
//! Schwarz-triangle data.

mod conjugator;
mod cyclotomic;
mod groups;

pub use conjugator::{find_conjugator, Conjugation};
pub use cyclotomic::{CycMat2, Cyclo};
pub use groups::{
    coset_representatives, group_membership, projective_order, projective_order_exact, sample_words, GroupId, Order,
    ScaledInt, WordSample,
};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeometric::{euler_integral, hg_basis, HGParams, IntegralKind};
use crate::numcore::{exp_2pi_i, real, Rational, ONE};

/// Local exponents at `0`, `1` and infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RiemannScheme {
    pub at_zero: (Rational, Rational),
    pub at_one: (Rational, Rational),
    pub at_infinity: (Rational, Rational),
}

impl RiemannScheme {
    /// Second exponent minus first at each singular point:
    /// `(1 - c, c - a - b, b - a)`.
    pub fn differences(&self) -> [Rational; 3] {
        [self.at_zero.1 - self.at_zero.0, self.at_one.1 - self.at_one.0, self.at_infinity.1 - self.at_infinity.0]
    }
}

pub fn riemann_scheme(p: &HGParams) -> RiemannScheme {
    let zero = Rational::from_integer(0);
    RiemannScheme {
        at_zero: (zero, Rational::from_integer(1) - p.c),
        at_one: (zero, p.c - p.a - p.b),
        at_infinity: (p.a, p.b),
    }
}

fn e(r: Rational) -> Result<Cyclo> {
    Cyclo::exp_2pi_i(r)
}

/// Circuit matrices acting on the row vector `(f1, f2)`: `m0` for a loop
/// around `z = 0`, `m1` around `z = 1`, and the two loops around infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitSet {
    pub m0: CycMat2,
    pub m1: CycMat2,
    /// `(m0 m1)^{-1}`
    pub minf: CycMat2,
    /// `(m1 m0)^{-1}`
    pub minf_prime: CycMat2,
}

pub fn circuit_matrices(p: &HGParams) -> Result<CircuitSet> {
    p.check_basis_hypotheses()?;
    let (a, b, c) = (p.a, p.b, p.c);
    let e_mc = e(-c)?;
    let m0 = CycMat2::new(e_mc.clone(), &e_mc - &e(-a)?, Cyclo::zero(), Cyclo::one());
    let m1 = CycMat2::new(Cyclo::one(), Cyclo::zero(), &e(c - b)? - &Cyclo::one(), e(c - a - b)?);
    let minf = (&m0 * &m1).inverse()?;
    let minf_prime = (&m1 * &m0).inverse()?;
    Ok(CircuitSet { m0, m1, minf, minf_prime })
}

/// Which of the two loops around infinity: `upper` is `(m0 m1)^{-1}`,
/// `lower` is `(m1 m0)^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Upper,
    Lower,
}

/// An eigenvalue with a left eigenvector: `row * M = value * row`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenRow {
    pub value: Cyclo,
    pub row: [Cyclo; 2],
}

/// The circuit matrix around infinity and its eigen rows for
/// `e^{2 pi i a}` and `e^{2 pi i b}`, in that order.
pub fn infinity_circuit(p: &HGParams, cs: &CircuitSet, orientation: Orientation) -> Result<(CycMat2, [EigenRow; 2])> {
    let (a, b, c) = (p.a, p.b, p.c);
    let (ea, eb) = (e(a)?, e(b)?);
    let first = &e(a + b)? - &e(a + c)?;
    match orientation {
        Orientation::Upper => Ok((
            cs.minf.clone(),
            [
                EigenRow { value: ea.clone(), row: [first, &ea - &e(c)?] },
                EigenRow { value: eb, row: [ea, Cyclo::one()] },
            ],
        )),
        Orientation::Lower => Ok((
            cs.minf_prime.clone(),
            [
                EigenRow { value: ea, row: [first, &e(a + b)? - &e(b + c)?] },
                EigenRow { value: eb, row: [Cyclo::one(), Cyclo::one()] },
            ],
        )),
    }
}

/// Order of a generator of a triangle group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleOrder {
    Finite(i64),
    Infinite,
    /// The angle is not `pi / n`; the group is not a triangle group.
    NotReciprocal(Rational),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleData {
    /// Angles as multiples of `pi`: `(|1 - c|, |c - a - b|, |a - b|)`.
    pub angles: [Rational; 3],
    pub orders: [TriangleOrder; 3],
}

pub fn triangle_data(p: &HGParams) -> TriangleData {
    let angles = [(Rational::from_integer(1) - p.c).abs(), (p.c - p.a - p.b).abs(), (p.a - p.b).abs()];
    let order = |t: Rational| {
        if t == Rational::from_integer(0) {
            TriangleOrder::Infinite
        } else if t.recip().is_integer() {
            TriangleOrder::Finite(t.recip().to_integer())
        } else {
            TriangleOrder::NotReciprocal(t)
        }
    };
    TriangleData { angles, orders: angles.map(order) }
}

/// Residuals between the quadrature values of the integrals over `(0, z)`
/// and `(z, 1)` and their expressions as combinations of `f1`, `f2`.
pub fn connection_check(p: &HGParams, z: f64) -> Result<(f64, f64)> {
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::Domain(format!("connection check needs 0 < z < 1, got {z}")));
    }
    let (a, b, c) = (p.a, p.b, p.c);
    let ec = exp_2pi_i;
    let pair = hg_basis(p, real(z))?;
    let zero_to_z = -(ec(c) - ONE) / (ec(b) - ONE) * pair.f1 + (ec(a) - ec(c)) / (ec(a + b) - ec(a)) * pair.f2;
    let z_to_one = (ec(c) - ec(b)) / (ec(b) - ONE) * pair.f1 - (ec(a + b) - ec(c)) / (ec(a + b) - ec(a)) * pair.f2;
    let q0 = euler_integral(p, real(z), IntegralKind::ZeroToZ)?;
    let q1 = euler_integral(p, real(z), IntegralKind::ZToOne)?;
    Ok(((q0 - zero_to_z).norm() / q0.norm(), (q1 - z_to_one).norm() / q1.norm()))
}
