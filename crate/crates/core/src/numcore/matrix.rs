use std::fmt;
use std::ops::{Mul, Neg};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{ComplexValue, ONE, ZERO};
use crate::error::{Error, Result};

/// A 2x2 complex matrix `[[g11, g12], [g21, g22]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat2 {
    pub g11: ComplexValue,
    pub g12: ComplexValue,
    pub g21: ComplexValue,
    pub g22: ComplexValue,
}

impl Mat2 {
    pub const fn new(g11: ComplexValue, g12: ComplexValue, g21: ComplexValue, g22: ComplexValue) -> Self {
        Self { g11, g12, g21, g22 }
    }

    pub fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn scalar(s: ComplexValue) -> Self {
        Self::new(s, ZERO, ZERO, s)
    }

    pub fn diag(a: ComplexValue, b: ComplexValue) -> Self {
        Self::new(a, ZERO, ZERO, b)
    }

    pub fn det(&self) -> ComplexValue {
        self.g11 * self.g22 - self.g12 * self.g21
    }

    pub fn trace(&self) -> ComplexValue {
        self.g11 + self.g22
    }

    pub fn scale(&self, s: ComplexValue) -> Self {
        Self::new(self.g11 * s, self.g12 * s, self.g21 * s, self.g22 * s)
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.norm() == 0.0 {
            return Err(Error::Singular);
        }
        Ok(Self::new(self.g22 / d, -self.g12 / d, -self.g21 / d, self.g11 / d))
    }

    /// Largest entrywise distance.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.entries().iter().zip(other.entries().iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn entries(&self) -> [ComplexValue; 4] {
        [self.g11, self.g12, self.g21, self.g22]
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.g11 * o.g11 + self.g12 * o.g21,
            self.g11 * o.g12 + self.g12 * o.g22,
            self.g21 * o.g11 + self.g22 * o.g21,
            self.g21 * o.g12 + self.g22 * o.g22,
        )
    }
}

impl From<IntMat2> for Mat2 {
    fn from(m: IntMat2) -> Self {
        let f = |x: i64| Complex64::new(x as f64, 0.0);
        Mat2::new(f(m.g11), f(m.g12), f(m.g21), f(m.g22))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.g11, self.g12, self.g21, self.g22)
    }
}

/// A 2x2 integer matrix, used for congruence-subgroup work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMat2 {
    pub g11: i64,
    pub g12: i64,
    pub g21: i64,
    pub g22: i64,
}

impl IntMat2 {
    pub const fn new(g11: i64, g12: i64, g21: i64, g22: i64) -> Self {
        Self { g11, g12, g21, g22 }
    }

    pub const IDENTITY: IntMat2 = IntMat2::new(1, 0, 0, 1);
    /// Translation `tau -> tau + 1`.
    pub const T: IntMat2 = IntMat2::new(1, 1, 0, 1);
    /// Inversion `tau -> -1/tau`.
    pub const J: IntMat2 = IntMat2::new(0, 1, -1, 0);
    /// `W = (J T)^{-1}`, of order 3.
    pub const W: IntMat2 = IntMat2::new(-1, -1, 1, 0);

    pub fn det(&self) -> i64 {
        self.g11 * self.g22 - self.g12 * self.g21
    }

    pub fn trace(&self) -> i64 {
        self.g11 + self.g22
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse(&self) -> Result<Self> {
        match self.det() {
            1 => Ok(Self::new(self.g22, -self.g12, -self.g21, self.g11)),
            d => Err(Error::Determinant(d)),
        }
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let (base, k) = if n < 0 { (self.inverse()?, -n) } else { (*self, n) };
        let mut acc = Self::IDENTITY;
        for _ in 0..k {
            acc = acc * base;
        }
        Ok(acc)
    }

    /// Entries reduced into `0..m`.
    pub fn reduce_mod(&self, m: i64) -> Self {
        Self::new(self.g11.rem_euclid(m), self.g12.rem_euclid(m), self.g21.rem_euclid(m), self.g22.rem_euclid(m))
    }

    pub fn is_plus_minus_identity(&self) -> bool {
        *self == Self::IDENTITY || *self == -Self::IDENTITY
    }
}

impl Mul for IntMat2 {
    type Output = IntMat2;

    fn mul(self, o: IntMat2) -> IntMat2 {
        IntMat2::new(
            self.g11 * o.g11 + self.g12 * o.g21,
            self.g11 * o.g12 + self.g12 * o.g22,
            self.g21 * o.g11 + self.g22 * o.g21,
            self.g21 * o.g12 + self.g22 * o.g22,
        )
    }
}

impl Neg for IntMat2 {
    type Output = IntMat2;

    fn neg(self) -> IntMat2 {
        IntMat2::new(-self.g11, -self.g12, -self.g21, -self.g22)
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.g11, self.g12, self.g21, self.g22)
    }
}

/// Linear fractional action `(g11 tau + g12) / (g21 tau + g22)`.
pub fn moebius(g: &Mat2, tau: ComplexValue) -> Result<ComplexValue> {
    let den = g.g21 * tau + g.g22;
    let scale = (g.g21 * tau).norm().max(g.g22.norm()).max(f64::MIN_POSITIVE);
    if den.norm() <= 1e-300 || den.norm() / scale < 1e-15 {
        return Err(Error::MoebiusPole(den.norm()));
    }
    Ok((g.g11 * tau + g.g12) / den)
}

/// An eigenvalue together with a left (row) eigenvector `v` satisfying
/// `v m = lambda v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPair {
    pub value: ComplexValue,
    pub row: [ComplexValue; 2],
}

fn normalize_row(v: [ComplexValue; 2]) -> [ComplexValue; 2] {
    let pivot = if v[0].norm() >= v[1].norm() { v[0] } else { v[1] };
    [v[0] / pivot, v[1] / pivot]
}

/// Eigenvalues and left eigen rows of a 2x2 matrix.
///
/// Rows are scaled so that the component of largest modulus equals 1. The
/// pairs are ordered by the real part, then the imaginary part, of the
/// eigenvalue. A scalar matrix yields the standard basis rows.
pub fn eigen2(m: &Mat2) -> Result<[EigenPair; 2]> {
    let scale = m.entries().iter().map(|e| e.norm()).fold(0.0, f64::max);
    if m.det().norm() <= 1e-14 * scale * scale {
        return Err(Error::Singular);
    }
    let tr = m.trace();
    let disc = (tr * tr - m.det() * 4.0).sqrt();
    let mut values = [(tr + disc) / 2.0, (tr - disc) / 2.0];
    values.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    let off = m.g12.norm().max(m.g21.norm()).max((m.g11 - m.g22).norm());
    if off <= 1e-14 * scale {
        return Ok([EigenPair { value: m.g11, row: [ONE, ZERO] }, EigenPair { value: m.g22, row: [ZERO, ONE] }]);
    }
    if (values[0] - values[1]).norm() <= 1e-10 * scale {
        return Err(Error::Defective);
    }

    let pairs = values.map(|lambda| {
        // Both rows annihilate m - lambda I; keep the better conditioned one.
        let a = [m.g21, lambda - m.g11];
        let b = [lambda - m.g22, m.g12];
        let na = a[0].norm().max(a[1].norm());
        let nb = b[0].norm().max(b[1].norm());
        let row = if na >= nb { a } else { b };
        EigenPair { value: lambda, row: normalize_row(row) }
    });
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::{c, real, I, OMEGA, OMEGA2};

    fn left_residual(m: &Mat2, p: &EigenPair) -> f64 {
        let v = p.row;
        let vm0 = v[0] * m.g11 + v[1] * m.g21;
        let vm1 = v[0] * m.g12 + v[1] * m.g22;
        (vm0 - p.value * v[0]).norm().max((vm1 - p.value * v[1]).norm())
    }

    #[test]
    fn moebius_examples() {
        let tau = c(0.3, 1.7);
        let t = Mat2::from(IntMat2::T);
        assert!((moebius(&t, tau).unwrap() - (tau + 1.0)).norm() < 1e-15);
        let j = Mat2::from(IntMat2::J);
        assert!((moebius(&j, I).unwrap() - I).norm() < 1e-15);
        let minus = Mat2::from(-IntMat2::IDENTITY);
        assert!((moebius(&minus, tau).unwrap() - tau).norm() < 1e-15);
    }

    #[test]
    fn moebius_pole_is_an_error() {
        let j = Mat2::from(IntMat2::J);
        assert!(matches!(moebius(&j, real(0.0)), Err(Error::MoebiusPole(_))));
    }

    #[test]
    fn eigen_diag() {
        let m = Mat2::diag(real(2.0), real(3.0));
        let [p, q] = eigen2(&m).unwrap();
        assert_eq!(p.value, real(2.0));
        assert_eq!(p.row, [ONE, ZERO]);
        assert_eq!(q.value, real(3.0));
        assert_eq!(q.row, [ZERO, ONE]);
    }

    #[test]
    fn eigen_rows_of_order_three_element() {
        // i * [[0, 1], [-1, 1]] has eigen rows (1, omega) and (1, omega^2).
        let n = Mat2::from(IntMat2::new(0, 1, -1, 1)).scale(I);
        let pairs = eigen2(&n).unwrap();
        for p in &pairs {
            assert!(left_residual(&n, p) < 1e-12);
        }
        let e1 = Complex64::from_polar(1.0, std::f64::consts::PI / 6.0);
        let e5 = Complex64::from_polar(1.0, 5.0 * std::f64::consts::PI / 6.0);
        let find = |lambda: ComplexValue| pairs.iter().find(|p| (p.value - lambda).norm() < 1e-12).unwrap();
        let p1 = find(e1);
        let p5 = find(e5);
        // Normalized rows are proportional to (1, omega) and (1, omega^2).
        assert!((p1.row[1] / p1.row[0] - OMEGA).norm() < 1e-12);
        assert!((p5.row[1] / p5.row[0] - OMEGA2).norm() < 1e-12);
    }

    #[test]
    fn eigen_defective_and_singular() {
        let t = Mat2::from(IntMat2::T);
        assert_eq!(eigen2(&t), Err(Error::Defective));
        let s = Mat2::new(ONE, ONE, ONE, ONE);
        assert_eq!(eigen2(&s), Err(Error::Singular));
    }

    #[test]
    fn int_matrix_basics() {
        let w = IntMat2::W;
        assert_eq!(w.pow(3).unwrap(), IntMat2::IDENTITY);
        assert_eq!((IntMat2::J * IntMat2::T).inverse().unwrap(), w);
        assert_eq!(IntMat2::new(2, 0, 0, 1).inverse(), Err(Error::Determinant(2)));
        assert_eq!(IntMat2::T.pow(-2).unwrap(), IntMat2::new(1, -2, 0, 1));
    }
}
