//! Complex literals: `a`, `ai`, `a+bi`, `a-bi`, `i`, `-i`, where each
//! component is a decimal (`0.25`, `1e-3`) or a rational (`1/4`).

use hml_core::ComplexValue;

use crate::CliError;

fn component(s: &str, whole: &str) -> Result<f64, CliError> {
    let bad = || CliError::Parse(format!("cannot parse {whole:?} as a complex number"));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let value = match s.split_once('/') {
        Some((n, d)) => {
            let n: f64 = n.trim().parse().map_err(|_| bad())?;
            let d: f64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0.0 {
                return Err(bad());
            }
            n / d
        }
        None => s.parse().map_err(|_| bad())?,
    };
    if !value.is_finite() {
        return Err(bad());
    }
    Ok(value)
}

/// Coefficient of `i`: a bare sign stands for one.
fn imaginary(s: &str, whole: &str) -> Result<f64, CliError> {
    match s.trim() {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        t => component(t, whole),
    }
}

pub fn parse_complex(input: &str) -> Result<ComplexValue, CliError> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = s.strip_suffix('i') else {
        return Ok(ComplexValue::new(component(&s, input)?, 0.0));
    };
    // The real/imaginary split is the last sign that is not leading and
    // not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E' | b'/'));
    match split {
        Some(k) => Ok(ComplexValue::new(component(&body[..k], input)?, imaginary(&body[k..], input)?)),
        None => Ok(ComplexValue::new(0.0, imaginary(body, input)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> (f64, f64) {
        let z = parse_complex(s).unwrap();
        (z.re, z.im)
    }

    #[test]
    fn grammar() {
        assert_eq!(p("0.5"), (0.5, 0.0));
        assert_eq!(p("i"), (0.0, 1.0));
        assert_eq!(p("-i"), (0.0, -1.0));
        assert_eq!(p("2i"), (0.0, 2.0));
        assert_eq!(p("1+i"), (1.0, 1.0));
        assert_eq!(p("0.1+1.4i"), (0.1, 1.4));
        assert_eq!(p("-1/2+3/4i"), (-0.5, 0.75));
        assert_eq!(p("1/2-1/2i"), (0.5, -0.5));
        assert_eq!(p("1e-3-2e-1i"), (1e-3, -0.2));
        assert_eq!(p(" 3 - 4i "), (3.0, -4.0));
        assert_eq!(p("-7"), (-7.0, 0.0));
    }

    #[test]
    fn rejects() {
        for s in ["", "abc", "1+", "1/0", "1+2j", "i+1", "1++2i", "nan"] {
            assert!(parse_complex(s).is_err(), "{s}");
        }
    }
}
