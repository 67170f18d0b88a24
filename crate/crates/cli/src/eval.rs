use std::str::FromStr;

use hml_core::hypergeometric::hg_principal;
use hml_core::modular::{e4, j_invariant, lambda, nu, theta, E4Method, Form, QConfig, ThetaChar};
use hml_core::numcore::Rational;
use hml_core::schwarz::schwarz_map;
use hml_core::{ComplexValue, HGParams, SchwarzId, Tau};
use serde::{Deserialize, Serialize};

use crate::literal::parse_complex;
use crate::CliError;

/// Functions the `eval` and `table` commands know.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    /// Principal branch of the Gauss hypergeometric function.
    Hypergeometric,
    Theta(ThetaChar),
    Lambda,
    Nu,
    J,
    E4,
    Schwarz(SchwarzId),
}

impl Function {
    pub const NAMES: [&'static str; 12] =
        ["F", "theta00", "theta01", "theta10", "theta11", "lambda", "nu", "j", "E4", "phi0", "phi1", "phi2"];

    /// Whether the argument is a point of the upper half-plane.
    pub fn takes_tau(&self) -> bool {
        !matches!(self, Function::Hypergeometric | Function::Schwarz(_))
    }

    pub fn evaluate(&self, params: Option<&HGParams>, x: ComplexValue) -> Result<ComplexValue, CliError> {
        let tau = || Tau::new(x);
        let v = match self {
            Function::Hypergeometric => {
                let p = params.ok_or_else(|| CliError::Parse("F needs parameters a b c".into()))?;
                hg_principal(p, x)?
            }
            Function::Theta(ch) => {
                let t = tau()?;
                theta(*ch, t, &QConfig::for_tau(t))?
            }
            Function::Lambda => lambda(tau()?)?,
            Function::Nu => nu(tau()?, Form::Theta)?,
            Function::J => j_invariant(tau()?, Form::Theta)?,
            Function::E4 => e4(tau()?, E4Method::Theta)?,
            Function::Schwarz(id) => schwarz_map(*id, x)?.value(),
        };
        Ok(v)
    }
}

impl FromStr for Function {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "F" => Function::Hypergeometric,
            "theta00" => Function::Theta(ThetaChar::T00),
            "theta01" => Function::Theta(ThetaChar::T01),
            "theta10" => Function::Theta(ThetaChar::T10),
            "theta11" => Function::Theta(ThetaChar::T11),
            "lambda" => Function::Lambda,
            "nu" => Function::Nu,
            "j" => Function::J,
            "E4" => Function::E4,
            "phi0" => Function::Schwarz(SchwarzId::Phi0),
            "phi1" => Function::Schwarz(SchwarzId::Phi1),
            "phi2" => Function::Schwarz(SchwarzId::Phi2),
            _ => {
                return Err(CliError::Parse(format!(
                    "unknown function {s:?}; expected one of {}",
                    Function::NAMES.join(", ")
                )))
            }
        })
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Parse(format!("cannot parse {s:?} as a rational number"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: i64 = n.trim().parse().map_err(|_| bad())?;
    let d: i64 = d.trim().parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Splits `F a b c z...` style arguments into parameters and points.
pub fn split_args(f: Function, args: &[String]) -> Result<(Option<HGParams>, Vec<ComplexValue>), CliError> {
    let (params, rest) = if f == Function::Hypergeometric {
        if args.len() < 3 {
            return Err(CliError::Parse("F needs parameters a b c before the points".into()));
        }
        let p = HGParams::new(parse_rational(&args[0])?, parse_rational(&args[1])?, parse_rational(&args[2])?)?;
        (Some(p), &args[3..])
    } else {
        (None, args)
    };
    let points = rest.iter().map(|s| parse_complex(s)).collect::<Result<Vec<_>, _>>()?;
    Ok((params, points))
}

/// One evaluated point, as emitted in json mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub function: String,
    pub input: String,
    pub re: f64,
    pub im: f64,
}

/// Rounds to 15 significant digits.
fn round15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// Text form with 15 significant digits. A component below `1e-14` of the
/// modulus is roundoff and is dropped.
pub fn format_complex(z: ComplexValue) -> String {
    let floor = 1e-14 * z.norm().max(1.0);
    let re = if z.re.abs() < floor { 0.0 } else { round15(z.re) };
    let im = if z.im.abs() < floor { 0.0 } else { round15(z.im) };
    match (re == 0.0, im == 0.0) {
        (_, true) => format!("{re}"),
        (true, false) => format!("{im}i"),
        (false, false) if im < 0.0 => format!("{re}-{}i", -im),
        _ => format!("{re}+{im}i"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(format_complex(ComplexValue::new(0.5000000000000001, 1e-17)), "0.5");
        assert_eq!(format_complex(ComplexValue::new(0.0, -2.0)), "-2i");
        assert_eq!(format_complex(ComplexValue::new(1.0, -0.25)), "1-0.25i");
        assert_eq!(format_complex(ComplexValue::new(-0.5, 0.8660254037844386)), "-0.5+0.866025403784439i");
    }

    #[test]
    fn names_parse() {
        for n in Function::NAMES {
            assert!(n.parse::<Function>().is_ok());
        }
        assert!("zeta".parse::<Function>().is_err());
    }
}
