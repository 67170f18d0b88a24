//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! An element of `Q(zeta_n)` is stored as its coordinate vector in the power
//! basis `1, zeta, ..., zeta^{phi(n)-1}`, i.e. reduced modulo the cyclotomic
//! polynomial. The representation is unique, so equality is coefficient
//! equality. Binary operations on elements of different orders lift both
//! operands to the field of the least common multiple.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numcore::{ComplexValue, IntMat2, Mat2, Rational, ZERO};

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

/// Quotient of integer polynomials when the divisor is monic and divides exactly.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let coef = rem[k + dd];
        quot[k] = coef;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= coef * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Reduces an arbitrary polynomial in `zeta_n` to the power basis.
fn reduce(mut poly: Vec<Rational>, n: u32) -> Vec<Rational> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    // zeta^n = 1 keeps the working degree bounded before the division.
    let nn = n as usize;
    if poly.len() > nn {
        for k in nn..poly.len() {
            let c = poly[k];
            poly[k % nn] += c;
        }
        poly.truncate(nn);
    }
    for k in (deg..poly.len()).rev() {
        let c = poly[k];
        if c.is_zero() {
            continue;
        }
        for (j, &pj) in phi.iter().enumerate() {
            poly[k - deg + j] -= c * Rational::from_integer(pj);
        }
    }
    poly.resize(deg, Rational::zero());
    poly
}

/// An element of `Q(zeta_order)`.
#[derive(Debug, Clone)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclo {
    pub fn rational(r: Rational) -> Self {
        Self { order: 1, coeffs: vec![r] }
    }

    pub fn integer(k: i64) -> Self {
        Self::rational(Rational::from_integer(k))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    /// `zeta_n^k = exp(2 pi i k / n)`.
    pub fn root(k: i64, n: u32) -> Self {
        assert!(n > 0, "cyclotomic order must be positive");
        let k = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        Self { order: n, coeffs: reduce(poly, n) }
    }

    /// `exp(2 pi i r)` for rational `r`.
    pub fn exp_2pi_i(r: Rational) -> Result<Self> {
        let den = u32::try_from(*r.denom()).map_err(|_| Error::Unsupported(format!("denominator of {r} too large")))?;
        Ok(Self::root(*r.numer(), den))
    }

    pub fn i() -> Self {
        Self::root(1, 4)
    }

    pub fn omega() -> Self {
        Self::root(1, 3)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn lift(&self, m: u32) -> Vec<Rational> {
        if m == self.order {
            return self.coeffs.clone();
        }
        let step = (m / self.order) as usize;
        let mut poly = vec![Rational::zero(); self.coeffs.len().saturating_sub(1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            poly[j * step] = *c;
        }
        reduce(poly, m)
    }

    fn common(&self, other: &Self) -> (u32, Vec<Rational>, Vec<Rational>) {
        let m = self.order.lcm(&other.order);
        (m, self.lift(m), other.lift(m))
    }

    /// The value if the element is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// `(k, n)` with `self = zeta_n^k`, where `n` is the number of roots of
    /// unity in the field, if `self` is one of them.
    pub fn root_of_unity(&self) -> Option<(i64, u32)> {
        let n = if self.order % 2 == 1 { 2 * self.order } else { self.order };
        (0..n as i64).find(|&k| *self == Self::root(k, n)).map(|k| (k, n))
    }

    #[allow(clippy::needless_range_loop)]
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular);
        }
        let n = self.order;
        let d = self.coeffs.len();
        // Column j of the multiplication map is self * zeta^j.
        let mut a = vec![vec![Rational::zero(); d + 1]; d];
        for j in 0..d {
            let col = (self * &Self::root(j as i64, n)).lift(n);
            for i in 0..d {
                a[i][j] = col[i];
            }
        }
        a[0][d] = Rational::one();
        for col in 0..d {
            let pivot = (col..d).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            let p = a[col][col];
            for k in col..=d {
                a[col][k] /= p;
            }
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    for k in col..=d {
                        let v = a[col][k];
                        a[r][k] -= f * v;
                    }
                }
            }
        }
        Ok(Self { order: n, coeffs: a.iter().map(|row| row[d]).collect() })
    }

    pub fn to_complex(&self) -> ComplexValue {
        let mut z = ZERO;
        for (j, c) in self.coeffs.iter().enumerate() {
            let r = *c.numer() as f64 / *c.denom() as f64;
            if r != 0.0 {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / self.order as f64;
                z += ComplexValue::from_polar(r, theta);
            }
        }
        z
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        let (_, x, y) = self.common(other);
        x == y
    }
}

impl Eq for Cyclo {}

impl From<i64> for Cyclo {
    fn from(k: i64) -> Self {
        Self::integer(k)
    }
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        let (m, x, y) = self.common(rhs);
        Cyclo { order: m, coeffs: x.iter().zip(&y).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        let (m, x, y) = self.common(rhs);
        Cyclo { order: m, coeffs: x.iter().zip(&y).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        let (m, x, y) = self.common(rhs);
        let mut poly = vec![Rational::zero(); x.len() + y.len() - 1];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                poly[i + j] += a * b;
            }
        }
        Cyclo { order: m, coeffs: reduce(poly, m) }
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z{}", self.order)?,
                _ => write!(f, "({c})z{}^{j}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A 2x2 matrix over a cyclotomic field, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycMat2 {
    pub e: [[Cyclo; 2]; 2],
}

impl CycMat2 {
    pub fn new(g11: Cyclo, g12: Cyclo, g21: Cyclo, g22: Cyclo) -> Self {
        Self { e: [[g11, g12], [g21, g22]] }
    }

    pub fn identity() -> Self {
        Self::scalar(Cyclo::one())
    }

    pub fn scalar(s: Cyclo) -> Self {
        Self::new(s.clone(), Cyclo::zero(), Cyclo::zero(), s)
    }

    pub fn det(&self) -> Cyclo {
        &(&self.e[0][0] * &self.e[1][1]) - &(&self.e[0][1] * &self.e[1][0])
    }

    pub fn trace(&self) -> Cyclo {
        &self.e[0][0] + &self.e[1][1]
    }

    pub fn scale(&self, s: &Cyclo) -> Self {
        let m = |x: &Cyclo| x * s;
        Self::new(m(&self.e[0][0]), m(&self.e[0][1]), m(&self.e[1][0]), m(&self.e[1][1]))
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv_det = self.det().inverse()?;
        let [[a, b], [c, d]] = &self.e;
        Ok(Self::new(d.clone(), -b, -c, a.clone()).scale(&inv_det))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_mat2(&self) -> Mat2 {
        let [[a, b], [c, d]] = &self.e;
        Mat2::new(a.to_complex(), b.to_complex(), c.to_complex(), d.to_complex())
    }

    /// The scalar `s` if the matrix is `s I`.
    pub fn as_scalar(&self) -> Option<Cyclo> {
        let [[a, b], [c, d]] = &self.e;
        (b.is_zero() && c.is_zero() && a == d).then(|| a.clone())
    }

    pub fn as_integer(&self) -> Option<IntMat2> {
        let [[a, b], [c, d]] = &self.e;
        Some(IntMat2::new(a.as_integer()?, b.as_integer()?, c.as_integer()?, d.as_integer()?))
    }

    /// Writes the matrix as a root of unity times an element of `SL2(Z)`.
    ///
    /// Of the two choices `(s, A)` and `(-s, -A)` the one with positive trace
    /// is returned, or with positive lower-left entry when the trace is zero.
    pub fn split_scalar(&self) -> Option<(Cyclo, IntMat2)> {
        let det = self.det();
        let n = {
            let o = self.e.iter().flatten().fold(det.order(), |acc, x| acc.lcm(&x.order()));
            if o % 2 == 1 {
                2 * o
            } else {
                o
            }
        };
        for k in 0..n as i64 {
            let s = Cyclo::root(k, n);
            if &s * &s != det {
                continue;
            }
            let Ok(inv) = s.inverse() else { continue };
            if let Some(a) = self.scale(&inv).as_integer() {
                if a.det() != 1 {
                    continue;
                }
                let positive = a.trace() > 0 || (a.trace() == 0 && (a.g21 > 0 || (a.g21 == 0 && a.g12 > 0)));
                return Some(if positive { (s, a) } else { (-s, -a) });
            }
        }
        None
    }
}

impl From<IntMat2> for CycMat2 {
    fn from(m: IntMat2) -> Self {
        Self::new(m.g11.into(), m.g12.into(), m.g21.into(), m.g22.into())
    }
}

impl Mul for &CycMat2 {
    type Output = CycMat2;
    fn mul(self, rhs: &CycMat2) -> CycMat2 {
        let (a, b) = (&self.e, &rhs.e);
        let entry = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        CycMat2::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1))
    }
}

impl Mul for CycMat2 {
    type Output = CycMat2;
    fn mul(self, rhs: CycMat2) -> CycMat2 {
        &self * &rhs
    }
}

impl fmt::Display for CycMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::{rat, I, OMEGA};

    fn euler_phi(n: u32) -> usize {
        cyclotomic_poly(n).len() - 1
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(24), vec![1, 0, 0, 0, -1, 0, 0, 0, 1]);
        assert_eq!(euler_phi(24), 8);
        assert_eq!(euler_phi(7), 6);
    }

    #[test]
    fn roots_of_unity() {
        let i = Cyclo::i();
        assert_eq!(&i * &i, Cyclo::integer(-1));
        let w = Cyclo::omega();
        assert_eq!(&(&Cyclo::one() + &w) + &(&w * &w), Cyclo::zero());
        assert_eq!(Cyclo::root(6, 24), i);
        assert_eq!(Cyclo::root(8, 24), w);
        assert_eq!(Cyclo::root(-1, 3), &w * &w);
        assert!(
            (Cyclo::root(5, 24).to_complex() - ComplexValue::from_polar(1.0, 5.0 * std::f64::consts::PI / 12.0)).norm()
                < 1e-15
        );
        assert!((w.to_complex() - OMEGA).norm() < 1e-15);
        assert!((i.to_complex() - I).norm() < 1e-15);
    }

    #[test]
    fn sqrt3_in_twelfth_roots() {
        let s = &Cyclo::root(1, 12) + &Cyclo::root(-1, 12);
        assert_eq!(&s * &s, Cyclo::integer(3));
    }

    #[test]
    fn inverse_and_root_detection() {
        let x = &Cyclo::root(1, 24) + &Cyclo::integer(2);
        let y = x.inverse().unwrap();
        assert_eq!(&x * &y, Cyclo::one());
        assert!(Cyclo::zero().inverse().is_err());
        assert_eq!(Cyclo::exp_2pi_i(rat(7, 12)).unwrap().root_of_unity(), Some((7, 12)));
        assert_eq!((-Cyclo::omega()).root_of_unity(), Some((5, 6)));
        assert_eq!(Cyclo::integer(2).root_of_unity(), None);
    }

    #[test]
    fn split_scalar_prefers_positive_trace() {
        let w = CycMat2::from(IntMat2::W).scale(&Cyclo::omega().pow(2));
        let (s, a) = w.split_scalar().unwrap();
        assert_eq!(a, -IntMat2::W);
        assert_eq!(s, -Cyclo::omega().pow(2));
        let j = CycMat2::from(IntMat2::J).scale(&Cyclo::i());
        let (s, a) = j.split_scalar().unwrap();
        assert_eq!((s, a), (-Cyclo::i(), -IntMat2::J));
    }
}
