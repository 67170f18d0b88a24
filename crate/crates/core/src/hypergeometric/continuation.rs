//! The principal branch of `F(a, b, c; z)` on `C - [1, inf)`.
//!
//! Routes, in order of precedence:
//! 1. direct series for `|z| <= 0.8`;
//! 2. two-term connection at `z = 1` for `|1 - z| < 1/2` when `c - a - b` is not an integer;
//! 3. Pfaff's transformation for `|z / (z - 1)| < 0.8`;
//! 4. two-term connection at infinity for `|z| > 1.25` when `b - a` is not an integer;
//! 5. analytic continuation of the differential equation along the segment
//!    from the origin, by Taylor re-expansion at regular points.
//!
//! The segment `[0, z]` never meets `[1, inf)` for admissible `z`, so the
//! last route lands on the principal sheet as well and covers the
//! logarithmic cases the closed-form connections leave out.

use super::series::sum_with_derivs;
use super::{HGParams, SeriesConfig};
use crate::error::{Error, Result};
use crate::numcore::{gamma, real, ComplexValue, ONE, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Direct,
    ConnectionAtOne,
    Pfaff,
    Inversion,
    OdePath,
}

const DIRECT_RADIUS: f64 = 0.8;
const NEAR_ONE: f64 = 0.5;
const INVERSION_RADIUS: f64 = 1.25;

fn check_cut(z: ComplexValue) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    if z.im == 0.0 && z.re >= 1.0 {
        return Err(Error::BranchCut { z: z.to_string() });
    }
    Ok(())
}

/// The route `hg_principal` takes at `z`.
pub fn select_route(p: &HGParams, z: ComplexValue) -> Result<Route> {
    check_cut(z)?;
    let route = if z.norm() <= DIRECT_RADIUS {
        Route::Direct
    } else if (ONE - z).norm() < NEAR_ONE && !p.excess_is_integer() {
        Route::ConnectionAtOne
    } else if (z / (z - 1.0)).norm() < DIRECT_RADIUS {
        Route::Pfaff
    } else if z.norm() > INVERSION_RADIUS && !p.ab_difference_is_integer() {
        Route::Inversion
    } else {
        Route::OdePath
    };
    Ok(route)
}

/// Principal branch of `F(a, b, c; z)`, single valued on `C - [1, inf)`.
pub fn hg_principal(p: &HGParams, z: ComplexValue) -> Result<ComplexValue> {
    let route = select_route(p, z)?;
    hg_principal_via(p, z, route)
}

/// Evaluates along a forced route; errors if the route does not apply.
pub fn hg_principal_via(p: &HGParams, z: ComplexValue, route: Route) -> Result<ComplexValue> {
    check_cut(z)?;
    let (a, b, c) = (p.af(), p.bf(), p.cf());
    match route {
        Route::Direct => direct(a, b, c, z),
        Route::ConnectionAtOne => {
            if p.excess_is_integer() {
                return Err(Error::Parameter(format!("c - a - b = {} is an integer", p.excess())));
            }
            connection_at_one(a, b, c, z)
        }
        Route::Pfaff => pfaff(a, b, c, z),
        Route::Inversion => {
            if p.ab_difference_is_integer() {
                return Err(Error::Parameter(format!("b - a = {} is an integer", p.b - p.a)));
            }
            inversion(a, b, c, z)
        }
        Route::OdePath => Ok(ode_path(a, b, c, z)?[0]),
    }
}

fn direct(a: f64, b: f64, c: f64, z: ComplexValue) -> Result<ComplexValue> {
    Ok(sum_with_derivs(a, b, c, z, &SeriesConfig::default())?[0])
}

/// `1 / Gamma(x)`, zero at the poles.
fn rgamma(x: f64) -> Result<ComplexValue> {
    if x <= 0.0 && x == x.round() {
        return Ok(ZERO);
    }
    Ok(ONE / gamma(real(x))?)
}

fn connection_at_one(a: f64, b: f64, c: f64, z: ComplexValue) -> Result<ComplexValue> {
    let w = ONE - z;
    let s = c - a - b;
    let gc = gamma(real(c))?;
    let a1 = gc * gamma(real(s))? * rgamma(c - a)? * rgamma(c - b)?;
    let a2 = gc * gamma(real(-s))? * rgamma(a)? * rgamma(b)?;
    let mut total = ZERO;
    if a1 != ZERO {
        total += a1 * direct(a, b, 1.0 - s, w)?;
    }
    if a2 != ZERO {
        total += a2 * w.powf(s) * direct(c - a, c - b, s + 1.0, w)?;
    }
    Ok(total)
}

fn pfaff(a: f64, b: f64, c: f64, z: ComplexValue) -> Result<ComplexValue> {
    let w = z / (z - 1.0);
    Ok((ONE - z).powf(-a) * direct(a, c - b, c, w)?)
}

fn inversion(a: f64, b: f64, c: f64, z: ComplexValue) -> Result<ComplexValue> {
    let w = ONE / z;
    let minus_z = -z;
    let gc = gamma(real(c))?;
    let k1 = gc * gamma(real(b - a))? * rgamma(b)? * rgamma(c - a)?;
    let k2 = gc * gamma(real(a - b))? * rgamma(a)? * rgamma(c - b)?;
    let mut total = ZERO;
    if k1 != ZERO {
        total += k1 * minus_z.powf(-a) * direct(a, a - c + 1.0, a - b + 1.0, w)?;
    }
    if k2 != ZERO {
        total += k2 * minus_z.powf(-b) * direct(b, b - c + 1.0, b - a + 1.0, w)?;
    }
    Ok(total)
}

/// One Taylor step of the hypergeometric equation from a regular point.
fn taylor_step(
    a: f64,
    b: f64,
    c: f64,
    z0: ComplexValue,
    f: [ComplexValue; 2],
    w: ComplexValue,
) -> Result<[ComplexValue; 2]> {
    let p0 = z0 * (ONE - z0);
    let p1 = ONE - z0 * 2.0;
    let q0 = real(c) - z0 * (a + b + 1.0);
    let q1 = -(a + b + 1.0);
    let ab = a * b;

    // Work with the scaled terms t_n = c_n w^n so nothing overflows when
    // the step is small and the coefficients large.
    let (mut prev, mut cur) = (f[0], f[1] * w);
    let mut value = prev + cur;
    let mut deriv = f[1];
    let mut quiet = 0;
    for n in 0..2000usize {
        let nf = n as f64;
        let next = -((p1 * (nf * (nf + 1.0)) + q0 * (nf + 1.0)) * cur * w
            + (-(nf * (nf - 1.0)) + q1 * nf - ab) * prev * w * w)
            / (p0 * ((nf + 2.0) * (nf + 1.0)));
        let term_deriv = next * (nf + 2.0) / w;
        value += next;
        deriv += term_deriv;
        if next.norm() <= 1e-18 * value.norm() && term_deriv.norm() <= 1e-18 * deriv.norm() {
            quiet += 1;
            if quiet >= 3 {
                return Ok([value, deriv]);
            }
        } else {
            quiet = 0;
        }
        prev = cur;
        cur = next;
    }
    Err(Error::NoConvergence { terms: 2000, modulus: w.norm() })
}

/// `[F, F']` continued from the origin along the straight segment to `z`.
pub(crate) fn ode_path(a: f64, b: f64, c: f64, z: ComplexValue) -> Result<[ComplexValue; 2]> {
    let r = z.norm();
    if r == 0.0 {
        return Ok([ONE, real(a * b / c)]);
    }
    let dir = z / r;
    let mut pos = dir * r.min(0.5);
    let s = sum_with_derivs(a, b, c, pos, &SeriesConfig::default())?;
    let mut state = [s[0], s[1]];
    let mut steps = 0;
    while pos != z {
        let radius = pos.norm().min((pos - 1.0).norm());
        let remaining = z - pos;
        let step =
            if remaining.norm() <= 0.5 * radius { remaining } else { remaining / remaining.norm() * (0.5 * radius) };
        state = taylor_step(a, b, c, pos, state, step)?;
        pos = if step == remaining { z } else { pos + step };
        steps += 1;
        if steps > 100_000 {
            return Err(Error::NoConvergence { terms: steps, modulus: r });
        }
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::numcore::{c, rat};

    fn all_routes() -> [Route; 5] {
        [Route::Direct, Route::ConnectionAtOne, Route::Pfaff, Route::Inversion, Route::OdePath]
    }

    #[test]
    fn route_precedence() {
        let p = HGParams::sixth_half_one();
        assert_eq!(select_route(&p, c(0.5, 0.0)).unwrap(), Route::Direct);
        assert_eq!(select_route(&p, c(0.9, 0.2)).unwrap(), Route::ConnectionAtOne);
        assert_eq!(select_route(&p, c(-3.0, 0.0)).unwrap(), Route::Pfaff);
        assert_eq!(select_route(&p, c(3.0, 4.0)).unwrap(), Route::Inversion);
        let q = HGParams::half_half_one();
        assert_eq!(select_route(&q, c(0.9, 0.2)).unwrap(), Route::OdePath);
        assert_eq!(select_route(&q, c(3.0, 4.0)).unwrap(), Route::OdePath);
    }

    #[test]
    fn branch_cut_rejected() {
        let p = HGParams::sixth_half_one();
        assert!(matches!(hg_principal(&p, c(1.0, 0.0)), Err(Error::BranchCut { .. })));
        assert!(matches!(hg_principal(&p, c(7.5, 0.0)), Err(Error::BranchCut { .. })));
        assert!(hg_principal(&p, c(7.5, 1e-9)).is_ok());
    }

    #[test]
    fn routes_agree_where_they_overlap() {
        let p = HGParams::new(rat(1, 6), rat(1, 3), rat(5, 4)).unwrap();
        let points = [c(0.7, 0.1), c(0.75, -0.3), c(-0.6, 0.4), c(1.1, 0.3), c(1.3, -0.05), c(-2.0, 1.0), c(4.0, 3.0)];
        for z in points {
            let reference = hg_principal_via(&p, z, Route::OdePath).unwrap();
            for route in all_routes() {
                if let Ok(v) = hg_principal_via(&p, z, route) {
                    // Routes outside their disks either error or are not asked for.
                    let ok = match route {
                        Route::Direct => z.norm() < 0.9,
                        Route::ConnectionAtOne => (ONE - z).norm() < 0.9,
                        Route::Pfaff => (z / (z - 1.0)).norm() < 0.9,
                        Route::Inversion => z.norm() > 1.1,
                        Route::OdePath => true,
                    };
                    if ok {
                        assert!(
                            (v - reference).norm() < 1e-12 * reference.norm(),
                            "{route:?} at {z}: {v} vs {reference}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn complete_elliptic_integral_across_the_lens() {
        // F(1/2, 1/2, 1; m) = 2 K(m) / pi; K(1/2) = Gamma(1/4)^2 / (4 sqrt(pi)).
        let p = HGParams::half_half_one();
        let g = gamma(real(0.25)).unwrap().re;
        let want = 2.0 / PI * g * g / (4.0 * PI.sqrt());
        let got = hg_principal_via(&p, c(0.5, 0.0), Route::OdePath).unwrap();
        assert!((got.re - want).abs() < 1e-13);
    }
}
