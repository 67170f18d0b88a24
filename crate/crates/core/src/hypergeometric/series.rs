use num_complex::Complex64;

use super::HGParams;
use crate::error::{Error, Result};
use crate::numcore::{gamma, real, ComplexValue, ONE, ZERO};

/// Stopping rule for power-series summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Stop once three consecutive terms fall below `rel_tol * |partial sum|`.
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-17, max_terms: 20_000 }
    }
}

impl SeriesConfig {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol <= 1e-6) {
            return Err(Error::Parameter(format!("rel_tol {rel_tol} outside (0, 1e-6]")));
        }
        if max_terms < 64 {
            return Err(Error::Parameter(format!("max_terms {max_terms} below 64")));
        }
        Ok(Self { rel_tol, max_terms })
    }
}

/// Value, first and second derivative of the Gauss series with real
/// parameters, summed term by term.
pub(crate) fn sum_with_derivs(
    a: f64,
    b: f64,
    c: f64,
    z: ComplexValue,
    cfg: &SeriesConfig,
) -> Result<[ComplexValue; 3]> {
    let modulus = z.norm();
    if modulus >= 1.0 {
        return Err(Error::Domain(format!("series argument |z| = {modulus} is not inside the unit disk")));
    }
    // term_n = (a)_n (b)_n / ((c)_n n!) z^n, carried together with its two
    // derivative counterparts n z^{n-1} and n (n-1) z^{n-2} coefficients.
    let mut coef = 1.0_f64;
    let mut zpow = ONE; // z^n
    let mut zpow_m1 = ZERO; // z^{n-1}
    let mut zpow_m2 = ZERO; // z^{n-2}
    let mut sums = [ZERO; 3];
    let mut quiet = 0;
    for n in 0..cfg.max_terms {
        let nf = n as f64;
        let t0 = zpow * coef;
        let t1 = zpow_m1 * (coef * nf);
        let t2 = zpow_m2 * (coef * nf * (nf - 1.0));
        sums[0] += t0;
        sums[1] += t1;
        sums[2] += t2;

        let small = |t: ComplexValue, s: ComplexValue| t.norm() <= cfg.rel_tol * s.norm() || t.norm() == 0.0;
        if n > 2 && small(t0, sums[0]) && small(t1, sums[1]) && small(t2, sums[2]) {
            quiet += 1;
            if quiet >= 3 {
                return Ok(sums);
            }
        } else {
            quiet = 0;
        }
        coef *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0));
        zpow_m2 = zpow_m1;
        zpow_m1 = zpow;
        zpow *= z;
    }
    Err(Error::NoConvergence { terms: cfg.max_terms, modulus })
}

/// `F(a, b, c; z)` by direct summation for `|z| < 1`.
pub fn hg_series(p: &HGParams, z: ComplexValue, cfg: &SeriesConfig) -> Result<ComplexValue> {
    Ok(sum_with_derivs(p.af(), p.bf(), p.cf(), z, cfg)?[0])
}

/// `[F, F', F'']` by the term-wise differentiated series.
pub fn hg_series_derivs(p: &HGParams, z: ComplexValue, cfg: &SeriesConfig) -> Result<[ComplexValue; 3]> {
    sum_with_derivs(p.af(), p.bf(), p.cf(), z, cfg)
}

/// Magnitude of `z(1-z) F'' + (c - (a+b+1) z) F' - ab F` for the summed series.
pub fn ode_residual(p: &HGParams, z: ComplexValue) -> Result<f64> {
    if z.norm() >= 0.95 {
        return Err(Error::Domain(format!("ode residual needs |z| < 0.95, got {}", z.norm())));
    }
    let (a, b, c) = (p.af(), p.bf(), p.cf());
    let [f, d1, d2] = sum_with_derivs(a, b, c, z, &SeriesConfig::default())?;
    let r = z * (ONE - z) * d2 + (real(c) - z * (a + b + 1.0)) * d1 - f * (a * b);
    Ok(r.norm())
}

/// Distance between the Wronskian of `F(a,b,a+b-c+1; 1-z)` and `F(a,b,c; z)`
/// and its closed form `Gamma(c)Gamma(a+b-c+1)/(Gamma(a)Gamma(b)) z^{-c} (1-z)^{c-a-b-1}`.
pub fn wronskian_residual(p: &HGParams, z: ComplexValue) -> Result<f64> {
    let dual = p.at_one()?;
    let cfg = SeriesConfig::default();
    let [g, dg] = {
        let [v, d, _] = hg_series_derivs(&dual, ONE - z, &cfg)?;
        // d/dz F(...; 1 - z) = -F'(1 - z)
        [v, -d]
    };
    let [f, df, _] = hg_series_derivs(p, z, &cfg)?;
    let det = g * df - dg * f;

    let (a, b, c) = (p.af(), p.bf(), p.cf());
    let cplx = |x: f64| Complex64::new(x, 0.0);
    let constant = gamma(cplx(c))? * gamma(cplx(a + b - c + 1.0))? / (gamma(cplx(a))? * gamma(cplx(b))?);
    let closed = constant * z.powc(cplx(-c)) * (ONE - z).powc(cplx(c - a - b - 1.0));
    Ok((det - closed).norm())
}
