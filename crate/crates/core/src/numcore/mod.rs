//! Numeric substrate: complex scalars, exact rationals, gamma and beta,
//! 2x2 matrices and the Moebius action on the upper half-plane.

mod gamma;
mod matrix;

pub use gamma::{beta, gamma};
pub use matrix::{eigen2, moebius, EigenPair, IntMat2, Mat2};

use num_complex::Complex64;
use num_traits::ToPrimitive;

/// The universal scalar.
pub type ComplexValue = Complex64;

/// Exact rational with 64-bit components, always kept in lowest terms.
pub type Rational = num_rational::Rational64;

pub const I: ComplexValue = Complex64::new(0.0, 1.0);
pub const ONE: ComplexValue = Complex64::new(1.0, 0.0);
pub const ZERO: ComplexValue = Complex64::new(0.0, 0.0);

pub const SQRT3: f64 = 1.732_050_807_568_877_2;

/// The primitive cube root of unity `(-1 + sqrt(3) i) / 2`.
pub const OMEGA: ComplexValue = Complex64::new(-0.5, SQRT3 / 2.0);

/// `omega^2 = conj(omega)`.
pub const OMEGA2: ComplexValue = Complex64::new(-0.5, -SQRT3 / 2.0);

pub fn c(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}

pub fn real(x: f64) -> ComplexValue {
    Complex64::new(x, 0.0)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub fn rat_to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `exp(2 pi i r)` evaluated with the phase reduced modulo 1 first.
pub fn exp_2pi_i(r: Rational) -> ComplexValue {
    let frac = r - r.floor();
    let theta = 2.0 * std::f64::consts::PI * rat_to_f64(frac);
    Complex64::from_polar(1.0, theta)
}

/// Relative distance `|a - b| / max(|a|, |b|, floor)`.
pub fn rel_diff(a: ComplexValue, b: ComplexValue, floor: f64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(floor)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_primitive_cube_root() {
        assert!((OMEGA * OMEGA * OMEGA - ONE).norm() < 1e-15);
        assert!((OMEGA * OMEGA - OMEGA2).norm() < 1e-15);
        assert!((ONE + OMEGA + OMEGA2).norm() < 1e-15);
    }

    #[test]
    fn exp_2pi_i_reduces_phase() {
        assert!((exp_2pi_i(rat(1, 3)) - OMEGA).norm() < 1e-15);
        assert!((exp_2pi_i(rat(-2, 3)) - OMEGA).norm() < 1e-15);
        assert!((exp_2pi_i(rat(7, 4)) + I).norm() < 1e-15);
    }
}
