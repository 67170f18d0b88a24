//! Congruence subgroups of `SL2(Z)`, projective orders, coset enumeration
//! modulo `Gamma(2)` and random words in the conjugated monodromy group.

use std::collections::{HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::conjugator::Conjugation;
use super::cyclotomic::{CycMat2, Cyclo};
use crate::error::{Error, Result};
use crate::numcore::{IntMat2, Mat2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupId {
    SL2Z,
    /// Principal congruence subgroup of level 2.
    Gamma2,
    /// Elements of `Gamma(2)` with diagonal entries `1 mod 4`.
    Gamma24,
    /// Elements whose cube lies in `Gamma(2)`.
    Gamma2CubeRoot,
    /// `g11 g12` and `g21 g22` both even.
    Gamma12,
}

impl GroupId {
    pub const ALL: [GroupId; 5] =
        [GroupId::SL2Z, GroupId::Gamma2, GroupId::Gamma24, GroupId::Gamma2CubeRoot, GroupId::Gamma12];
}

fn even(x: i64) -> bool {
    x.rem_euclid(2) == 0
}

/// Exact membership test; `g` must have determinant 1.
pub fn group_membership(g: &IntMat2, id: GroupId) -> Result<bool> {
    if g.det() != 1 {
        return Err(Error::Determinant(g.det()));
    }
    let in_gamma2 = |m: &IntMat2| m.reduce_mod(2) == IntMat2::IDENTITY;
    Ok(match id {
        GroupId::SL2Z => true,
        GroupId::Gamma2 => in_gamma2(g),
        GroupId::Gamma24 => in_gamma2(g) && g.g11.rem_euclid(4) == 1 && g.g22.rem_euclid(4) == 1,
        GroupId::Gamma2CubeRoot => {
            let r = g.reduce_mod(2);
            in_gamma2(&(r * r * r))
        }
        GroupId::Gamma12 => even(g.g11 * g.g12) && even(g.g21 * g.g22),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Order {
    Finite(u32),
    Infinite,
}

const ORDER_CAP: u32 = 24;

/// Least `n <= 24` with `g^n` scalar, compared with a relative tolerance.
pub fn projective_order(g: &Mat2) -> Order {
    let scale = g.entries().iter().map(|x| x.norm()).fold(0.0, f64::max).max(1.0);
    let mut acc = *g;
    for n in 1..=ORDER_CAP {
        let tol = 1e-9 * scale.powi(n as i32);
        if acc.g12.norm() <= tol && acc.g21.norm() <= tol && (acc.g11 - acc.g22).norm() <= tol {
            return Order::Finite(n);
        }
        acc = acc * *g;
    }
    Order::Infinite
}

/// Exact variant of [`projective_order`] over a cyclotomic field.
pub fn projective_order_exact(g: &CycMat2) -> Order {
    let mut acc = g.clone();
    for n in 1..=ORDER_CAP {
        if acc.as_scalar().is_some() {
            return Order::Finite(n);
        }
        acc = &acc * g;
    }
    Order::Infinite
}

/// Representatives of the cosets of `Gamma(2)` in the group generated by
/// `gens` together with `Gamma(2)`, found by breadth-first search over
/// residues modulo 2. Each representative is the shortest word reaching
/// its residue class, the identity first.
pub fn coset_representatives(gens: &[IntMat2]) -> Vec<IntMat2> {
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    let mut queue = VecDeque::from([IntMat2::IDENTITY]);
    seen.insert(IntMat2::IDENTITY.reduce_mod(2));
    while let Some(g) = queue.pop_front() {
        reps.push(g);
        for h in gens {
            let next = g * *h;
            if seen.insert(next.reduce_mod(2)) {
                queue.push_back(next);
            }
        }
    }
    reps
}

/// A root of unity times an element of `SL2(Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledInt {
    pub scalar: Cyclo,
    pub int: IntMat2,
}

impl ScaledInt {
    pub fn identity() -> Self {
        Self { scalar: Cyclo::one(), int: IntMat2::IDENTITY }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { scalar: &self.scalar * &other.scalar, int: self.int * other.int }
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self { scalar: self.scalar.inverse()?, int: self.int.inverse()? })
    }

    pub fn to_cyc(&self) -> CycMat2 {
        CycMat2::from(self.int).scale(&self.scalar)
    }
}

/// A random word in `n0, n1` and their inverses, evaluated twice: once as
/// scalar and integer parts separately, once as a full cyclotomic product.
#[derive(Debug, Clone)]
pub struct WordSample {
    /// Letters `0, 1, 2, 3` for `n0, n0^{-1}, n1, n1^{-1}`.
    pub letters: Vec<u8>,
    pub value: ScaledInt,
    /// Whether the split product equals the full product exactly.
    pub consistent: bool,
}

pub fn sample_words(conj: &Conjugation, count: usize, max_len: usize, seed: u64) -> Result<Vec<WordSample>> {
    let n0 = ScaledInt { scalar: conj.s0.clone(), int: conj.n0 };
    let n1 = ScaledInt { scalar: conj.s1.clone(), int: conj.n1 };
    let letters_split = [n0.clone(), n0.inverse()?, n1.clone(), n1.inverse()?];
    let full = [conj.n0_full(), conj.n0_full().inverse()?, conj.n1_full(), conj.n1_full().inverse()?];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let len = rng.gen_range(1..=max_len);
        let letters: Vec<u8> = (0..len).map(|_| rng.gen_range(0..4)).collect();
        let mut value = ScaledInt::identity();
        let mut product = CycMat2::identity();
        for &l in &letters {
            value = value.mul(&letters_split[l as usize]);
            product = &product * &full[l as usize];
        }
        let consistent = value.to_cyc() == product;
        out.push(WordSample { letters, value, consistent });
    }
    Ok(out)
}
