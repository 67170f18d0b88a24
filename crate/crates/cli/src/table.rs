use hml_core::identities::SampleDomain;
use hml_core::monodromy::{circuit_matrices, find_conjugator, riemann_scheme, CycMat2};
use hml_core::numcore::Rational;
use hml_core::{ComplexValue, HGParams};

use crate::eval::Function;
use crate::CliError;

fn csv_text(rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).map_err(|e| CliError::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

/// Default sample points when none are given: the interior of the modular
/// region for functions of `tau`, the lens for functions of `z`.
pub fn default_points(f: Function, count: usize) -> Vec<ComplexValue> {
    let domain = if f.takes_tau() { SampleDomain::ModularRegion } else { SampleDomain::Lens };
    domain.grid(count, 0)
}

pub fn function_table(
    f: Function,
    name: &str,
    params: Option<&HGParams>,
    points: &[ComplexValue],
) -> Result<String, CliError> {
    let mut rows = vec![vec!["function", "input_re", "input_im", "re", "im"].into_iter().map(String::from).collect()];
    for p in points {
        let v = f.evaluate(params, *p)?;
        rows.push(vec![name.to_string(), p.re.to_string(), p.im.to_string(), v.re.to_string(), v.im.to_string()]);
    }
    csv_text(rows)
}

fn triple(p: &HGParams) -> String {
    format!("({}, {}, {})", p.a, p.b, p.c)
}

pub fn riemann_table(params: &[HGParams]) -> Result<String, CliError> {
    let mut rows =
        vec![vec!["triple", "point", "exponent_1", "exponent_2", "difference"].into_iter().map(String::from).collect()];
    for p in params {
        let s = riemann_scheme(p);
        let d = s.differences();
        let r = |x: Rational| x.to_string();
        for (k, (name, (e1, e2))) in
            [("0", s.at_zero), ("1", s.at_one), ("infinity", s.at_infinity)].into_iter().enumerate()
        {
            rows.push(vec![triple(p), name.into(), r(e1), r(e2), r(d[k])]);
        }
    }
    csv_text(rows)
}

fn matrix_row(p: &HGParams, name: &str, m: &CycMat2) -> Vec<String> {
    let num = m.to_mat2();
    let mut row = vec![triple(p), name.to_string()];
    row.extend(m.e.iter().flatten().map(|x| x.to_string()));
    row.extend(num.entries().iter().map(|z| format!("{:.12}{:+.12}i", z.re, z.im)));
    row
}

/// Circuit matrices of every triple, with the conjugator and the
/// conjugated generators when they exist. Exact entries are in the power
/// basis of `Q(zeta_n)`, written `zN` for `zeta_N`.
pub fn circuit_table(params: &[HGParams]) -> Result<String, CliError> {
    let mut header: Vec<String> = vec!["triple".into(), "matrix".into()];
    for e in ["11", "12", "21", "22"] {
        header.push(format!("exact_{e}"));
    }
    for e in ["11", "12", "21", "22"] {
        header.push(format!("numeric_{e}"));
    }
    let mut rows = vec![header];
    for p in params {
        let cs = circuit_matrices(p)?;
        rows.push(matrix_row(p, "M0", &cs.m0));
        rows.push(matrix_row(p, "M1", &cs.m1));
        rows.push(matrix_row(p, "Minf", &cs.minf));
        rows.push(matrix_row(p, "Minf_prime", &cs.minf_prime));
        if let Ok(conj) = find_conjugator(p) {
            rows.push(matrix_row(p, "R", &conj.r));
            rows.push(matrix_row(p, "N0", &conj.n0_full()));
            rows.push(matrix_row(p, "N1", &conj.n1_full()));
            rows.push(matrix_row(p, "Ninf", &conj.ninf_full()?));
        }
    }
    csv_text(rows)
}
