use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Tau;
use crate::error::{Error, Result};
use crate::numcore::{c, ComplexValue, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QExpandConfig {
    /// Number of coefficients `c_0 .. c_{n_terms - 1}`.
    pub n_terms: usize,
    /// Height of the sampling segment.
    pub im0: f64,
    /// Sample count `M` of the coarse pass; the fine pass uses `2M`.
    pub samples: usize,
    /// Also extract the coefficient of `1/q`.
    pub polar: bool,
    /// Largest accepted difference between the coarse and fine passes.
    pub tol: f64,
}

impl QExpandConfig {
    pub fn new(n_terms: usize) -> Self {
        Self { n_terms, im0: 1.1, samples: (4 * n_terms).max(256), polar: false, tol: 1e-6 }
    }

    pub fn with_polar(mut self) -> Self {
        self.polar = true;
        self
    }
}

/// Coefficients in powers of `q = e^{2 pi i tau}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourierSeries {
    pub coeffs: Vec<ComplexValue>,
    /// Coefficient of `1/q`, when requested.
    pub polar: Option<ComplexValue>,
    /// Largest change between the `M` and `2M` sample passes.
    pub residual: f64,
}

impl FourierSeries {
    /// Real parts rounded to the nearest integer, polar term first if present.
    pub fn rounded(&self) -> Vec<i64> {
        self.polar.iter().chain(&self.coeffs).map(|z| z.re.round() as i64).collect()
    }

    /// Largest distance of a coefficient from its rounded value.
    pub fn rounding_residual(&self) -> f64 {
        self.polar.iter().chain(&self.coeffs).map(|z| (z - c(z.re.round(), 0.0)).norm()).fold(0.0, f64::max)
    }
}

fn dft(samples: &[ComplexValue], stride: usize, n: i64, im0: f64) -> ComplexValue {
    let m = samples.len() / stride;
    let mut acc = ZERO;
    for k in 0..m {
        let x = k as f64 / m as f64;
        acc += samples[k * stride] * ComplexValue::from_polar(1.0, -2.0 * PI * n as f64 * x);
    }
    acc / m as f64 * (2.0 * PI * n as f64 * im0).exp()
}

/// Fourier coefficients of a 1-periodic function holomorphic above `im0`,
/// by discrete orthogonality on equally spaced points of the segment
/// `[i im0, 1 + i im0]`.
pub fn q_expand<F>(f: F, cfg: &QExpandConfig) -> Result<FourierSeries>
where
    F: Fn(Tau) -> Result<ComplexValue> + Sync,
{
    if cfg.samples < 4 * cfg.n_terms {
        return Err(Error::Parameter(format!("{} samples are fewer than 4 x {} terms", cfg.samples, cfg.n_terms)));
    }
    if cfg.im0.is_nan() || cfg.im0 <= 0.0 {
        return Err(Error::Domain(format!("sampling height {} is not positive", cfg.im0)));
    }
    let fine = 2 * cfg.samples;
    let values: Vec<ComplexValue> =
        (0..fine).into_par_iter().map(|k| f(Tau::new(c(k as f64 / fine as f64, cfg.im0))?)).collect::<Result<_>>()?;

    let first = if cfg.polar { -1 } else { 0 };
    let mut residual = 0.0f64;
    let mut out = Vec::with_capacity(cfg.n_terms + 1);
    for n in first..cfg.n_terms as i64 {
        let coarse = dft(&values, 2, n, cfg.im0);
        let precise = dft(&values, 1, n, cfg.im0);
        residual = residual.max((coarse - precise).norm());
        out.push(precise);
    }
    if residual > cfg.tol {
        return Err(Error::Aliasing(residual));
    }
    let polar = cfg.polar.then(|| out.remove(0));
    Ok(FourierSeries { coeffs: out, polar, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::{e4, E4Method};
    use crate::numcore::{I, ONE};

    #[test]
    fn constant() {
        let s = q_expand(|_| Ok(ONE), &QExpandConfig::new(4)).unwrap();
        assert_eq!(s.rounded(), vec![1, 0, 0, 0]);
        assert!(s.residual < 1e-5);
    }

    #[test]
    fn eisenstein() {
        let s = q_expand(|t| e4(t, E4Method::Theta), &QExpandConfig::new(4)).unwrap();
        assert_eq!(s.rounded(), vec![1, 240, 2160, 6720]);
        assert!(s.rounding_residual() < 1e-4);
    }

    #[test]
    fn polar_term() {
        let f = |t: Tau| {
            let q = (I * 2.0 * PI * t.value()).exp();
            Ok(ONE / q + 3.0 + q * 5.0)
        };
        let s = q_expand(f, &QExpandConfig::new(3).with_polar()).unwrap();
        assert_eq!(s.rounded(), vec![1, 3, 5, 0]);
    }

    #[test]
    fn too_few_samples() {
        let mut cfg = QExpandConfig::new(100);
        cfg.samples = 300;
        assert!(q_expand(|_| Ok(ONE), &cfg).is_err());
    }
}
