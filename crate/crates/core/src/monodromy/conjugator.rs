//! Conjugating the monodromy group into scalar multiples of `SL2(Z)`.
//!
//! `m1` has eigenvalues `1` and `mu = e^{2 pi i (c - a - b)}`. A target
//! `s G` with `G` of finite order in `SL2(Z)` and the same eigenvalues is
//! diagonalized by a fixed matrix `Q`, while `m1` is diagonalized by the
//! one-parameter family `P_x = [[u, 0], [1, x]]`. Every `R_x = Q P_x^{-1}`
//! sends `m1` to `s G`; the parameter is then fixed by requiring the
//! lower-left entry of `R_x m0 R_x^{-1}` to vanish.

use super::cyclotomic::{CycMat2, Cyclo};
use super::{circuit_matrices, CircuitSet};
use crate::error::{Error, Result};
use crate::hypergeometric::HGParams;
use crate::numcore::IntMat2;

/// `r * m0 * r^{-1} = s0 * n0` and `r * m1 * r^{-1} = s1 * n1` with
/// `n0, n1` in `SL2(Z)` and `s0, s1` roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugation {
    pub r: CycMat2,
    pub n0: IntMat2,
    pub s0: Cyclo,
    pub n1: IntMat2,
    pub s1: Cyclo,
}

impl Conjugation {
    /// `s0 n0` as a cyclotomic matrix.
    pub fn n0_full(&self) -> CycMat2 {
        CycMat2::from(self.n0).scale(&self.s0)
    }

    pub fn n1_full(&self) -> CycMat2 {
        CycMat2::from(self.n1).scale(&self.s1)
    }

    /// `(n0_full n1_full)^{-1}`, the image of the loop around infinity.
    pub fn ninf_full(&self) -> Result<CycMat2> {
        (&self.n0_full() * &self.n1_full()).inverse()
    }
}

// Integral targets of finite order, tried in this order.
const TARGETS: [IntMat2; 2] = [IntMat2::W, IntMat2::J];

fn eigenvalues_of_target(g: &IntMat2) -> [Cyclo; 2] {
    if *g == IntMat2::W {
        [Cyclo::omega(), Cyclo::omega().pow(2)]
    } else {
        [-Cyclo::i(), Cyclo::i()]
    }
}

/// Finds `R` with `R m0 R^{-1}` and `R m1 R^{-1}` scalar multiples of
/// integral matrices, normalized so that `R[1][1] = 1`.
pub fn find_conjugator(p: &HGParams) -> Result<Conjugation> {
    let cs = circuit_matrices(p)?;
    conjugate(&cs)
}

fn conjugate(cs: &CircuitSet) -> Result<Conjugation> {
    let one = Cyclo::one();
    let m21 = &cs.m1.e[1][0];
    let mu = &cs.m1.e[1][1];
    if *mu == one || m21.is_zero() {
        return Err(Error::NoSolution("m1 is not diagonalizable with distinct eigenvalues".into()));
    }
    // Eigen column of m1 for 1 is (u, 1); for mu it is (0, 1).
    let u = &(&one - mu) * &m21.inverse()?;

    for g in TARGETS {
        let [l1, l2] = eigenvalues_of_target(&g);
        // s * l1 = 1 and s * l2 = mu, either ordering of the target eigenvalues.
        for (first, second) in [(&l1, &l2), (&l2, &l1)] {
            let s = first.inverse()?;
            if &s * second != *mu {
                continue;
            }
            let gm = CycMat2::from(g);
            let g21inv = gm.e[1][0].inverse()?;
            let col = |lambda: &Cyclo| &(lambda - &gm.e[1][1]) * &g21inv;
            let q = CycMat2::new(col(first), col(second), one.clone(), one.clone());
            if let Some(found) = solve_parameter(cs, &q, &u, &s, g)? {
                return Ok(found);
            }
        }
    }
    Err(Error::NoSolution("no integral target matches the eigenvalues of m1".into()))
}

fn solve_parameter(cs: &CircuitSet, q: &CycMat2, u: &Cyclo, s: &Cyclo, g: IntMat2) -> Result<Option<Conjugation>> {
    // Up to a scalar, R_x = Q [[x, 0], [-1, u]] = [[q11 x - q12, q12 u], [q21 x - q22, q22 u]].
    // With m0 upper triangular the lower-left entry of R_x m0 R_x^{-1} is
    // proportional to r21 (-a12 r21 + (a11 - a22) r22), so either r21 = 0
    // or r21 = (a11 - a22) r22 / a12.
    let [[q11, q12], [q21, q22]] = &q.e;
    let [[a11, a12], _] = &cs.m0.e;
    let a22 = &cs.m0.e[1][1];
    let r22 = q22 * u;
    let mut r21_candidates = vec![Cyclo::zero()];
    if !a12.is_zero() {
        let other = &(&(a11 - a22) * &r22) * &a12.inverse()?;
        if !other.is_zero() {
            r21_candidates.push(other);
        }
    }
    let q21inv = q21.inverse()?;
    for r21 in r21_candidates {
        let x = &(&r21 + q22) * &q21inv;
        let r11 = &(q11 * &x) - q12;
        let r12 = q12 * u;
        let raw = CycMat2::new(r11, r12, r21, r22.clone());
        let r = raw.scale(&r22.inverse()?);
        let rinv = r.inverse()?;
        let n0 = &(&r * &cs.m0) * &rinv;
        let n1 = &(&r * &cs.m1) * &rinv;
        debug_assert_eq!(n1, CycMat2::from(g).scale(s));
        if let Some((s0, n0)) = n0.split_scalar() {
            return Ok(Some(Conjugation { r, n0, s0, n1: g, s1: s.clone() }));
        }
    }
    Ok(None)
}
