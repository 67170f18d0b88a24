//! Schwarz maps of the three studied hypergeometric equations, normalized
//! so that their inverses are `lambda`, `nu` and `1/j`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeometric::{hg_principal, HGParams};
use crate::modular::{inverse_j, lambda, nu, Form, Tau};
use crate::numcore::{beta, c, rat, real, ComplexValue, I, OMEGA, OMEGA2, ONE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchwarzId {
    /// `i F(1/2,1/2,1;1-z) / F(1/2,1/2,1;z)`, inverse `lambda`.
    Phi0,
    /// `omega^2 + i B(1/6,1/2)/pi F(1/6,1/2,2/3;1-z) / F(1/6,1/2,1;z)`, inverse `nu`.
    Phi1,
    /// `i B(1/12,5/12)/(2 pi) F(1/12,5/12,1/2;1-z) / F(1/12,5/12,1;z) - i`, inverse `1/j`.
    Phi2,
}

impl SchwarzId {
    pub const ALL: [SchwarzId; 3] = [SchwarzId::Phi0, SchwarzId::Phi1, SchwarzId::Phi2];

    pub fn params(&self) -> HGParams {
        match self {
            SchwarzId::Phi0 => HGParams::half_half_one(),
            SchwarzId::Phi1 => HGParams::sixth_half_one(),
            SchwarzId::Phi2 => HGParams::twelfth_five_twelfths_one(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SchwarzId::Phi0 => "phi0",
            SchwarzId::Phi1 => "phi1",
            SchwarzId::Phi2 => "phi2",
        }
    }
}

impl std::str::FromStr for SchwarzId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SchwarzId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown Schwarz map {s:?}")))
    }
}

/// Below this modulus `z` is treated as the cusp at `i inf`.
const CUSP_RADIUS: f64 = 1e-15;

/// The Schwarz map on `C - ((-inf, 0] u [1, inf))`, the principal sheet of
/// both hypergeometric factors.
pub fn schwarz_map(id: SchwarzId, z: ComplexValue) -> Result<Tau> {
    if z.norm() < CUSP_RADIUS {
        return Err(Error::AtPole { what: "cusp at i infinity" });
    }
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::Domain(format!("z = {z} lies on the cut (-inf, 0]")));
    }
    let p = id.params();
    let w = ONE - z;
    let value = match id {
        SchwarzId::Phi0 => I * hg_principal(&p, w)? / hg_principal(&p, z)?,
        SchwarzId::Phi1 => {
            let k = beta(real(1.0 / 6.0), real(0.5))? / PI;
            let dual = HGParams::new(rat(1, 6), rat(1, 2), rat(2, 3))?;
            OMEGA2 + I * k * hg_principal(&dual, w)? / hg_principal(&p, z)?
        }
        SchwarzId::Phi2 => {
            let k = beta(real(1.0 / 12.0), real(5.0 / 12.0))? / (2.0 * PI);
            let dual = HGParams::new(rat(1, 12), rat(5, 12), rat(1, 2))?;
            I * k * hg_principal(&dual, w)? / hg_principal(&p, z)? - I
        }
    };
    Tau::new(value)
}

/// Image of a vertex of the upper half `z`-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Vertex {
    /// The cusp `i inf`.
    Cusp,
    Point {
        label: &'static str,
        value: ComplexValue,
    },
}

/// Images of `z = 0, 1, inf`.
pub fn vertex_limits(id: SchwarzId) -> [Vertex; 3] {
    let point = |label, value| Vertex::Point { label, value };
    match id {
        SchwarzId::Phi0 => [Vertex::Cusp, point("0", c(0.0, 0.0)), point("1", ONE)],
        SchwarzId::Phi1 => [Vertex::Cusp, point("omega", OMEGA), point("-omega^2", -OMEGA2)],
        SchwarzId::Phi2 => [Vertex::Cusp, point("i", I), point("-omega^2", -OMEGA2)],
    }
}

/// The inverse modular function of the map.
pub fn inverse_map(id: SchwarzId, tau: Tau) -> Result<ComplexValue> {
    match id {
        SchwarzId::Phi0 => lambda(tau),
        SchwarzId::Phi1 => nu(tau, Form::Theta),
        SchwarzId::Phi2 => inverse_j(tau),
    }
}

/// `|inverse(schwarz_map(z)) - z|`.
pub fn roundtrip_residual(id: SchwarzId, z: ComplexValue) -> Result<f64> {
    let tau = schwarz_map(id, z)?;
    Ok((inverse_map(id, tau)? - z).norm())
}
