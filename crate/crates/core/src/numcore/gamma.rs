use std::f64::consts::PI;

use num_complex::Complex64;

use super::ComplexValue;
use crate::error::{Error, Result};

// Lanczos approximation, g = 607/128 with 15 terms.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_048_8e-4,
    2.174_396_181_152_126_5e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_140_8e-5,
    3.689_918_265_953_162_5e-6,
];

fn is_nonpositive_integer(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Gamma function on the complex plane.
///
/// Uses the Lanczos form for `Re(z) >= 1/2` and the reflection formula
/// `Gamma(z) Gamma(1-z) = pi / sin(pi z)` elsewhere.
pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    if is_nonpositive_integer(z) {
        return Err(Error::GammaPole(z.re));
    }
    if z.re < 0.5 {
        let s = (z * PI).sin();
        let g = gamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(PI / (s * g));
    }
    Ok(lanczos(z))
}

fn lanczos(z: ComplexValue) -> ComplexValue {
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (k, &ck) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += ck / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * ((z + 0.5) * t.ln() - t).exp() * acc
}

/// Beta function `Gamma(a) Gamma(b) / Gamma(a + b)`.
pub fn beta(a: ComplexValue, b: ComplexValue) -> Result<ComplexValue> {
    Ok(gamma(a)? * gamma(b)? / gamma(a + b)?)
}
