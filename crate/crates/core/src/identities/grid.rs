use serde::{Deserialize, Serialize};

use crate::numcore::{c, ComplexValue, ONE};

/// Where an identity is asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleDomain {
    /// `Im(tau) >= 0.05`, where the direct theta sums are used.
    UpperHalfPlane,
    /// Interior of the fundamental region of `PGamma(2)`:
    /// `{0 < Re < 1, |tau - 1/2| > 1/2} u {-1 < Re < 0, |tau + 1/2| > 1/2}`.
    Gamma2Region,
    /// Interior of `{-3/2 < Re <= 1/2, |tau| >= 1, |tau + 1| > 1}`.
    CubeRootRegion,
    /// Interior of `{-1/2 < Re <= 1/2, |tau| > 1}`.
    ModularRegion,
    /// `|z| < 1` and `|1 - z| < 1`.
    Lens,
    /// `|z| <= 0.15`.
    SmallDisk,
    /// `tau = i y` with `y > 1`, the sampling height of a q-expansion.
    QHeight,
}

pub const SMALL_DISK_RADIUS: f64 = 0.15;

impl SampleDomain {
    pub fn contains(&self, p: ComplexValue) -> bool {
        self.contains_with_margin(p, 0.0)
    }

    /// Membership with every boundary pushed inwards by `margin`.
    pub fn contains_with_margin(&self, p: ComplexValue, m: f64) -> bool {
        let (x, y) = (p.re, p.im);
        match self {
            SampleDomain::UpperHalfPlane => y >= 0.05 + m,
            SampleDomain::Gamma2Region => {
                let right = x > m && x < 1.0 - m && (p - 0.5).norm() > 0.5 + m;
                let left = x > -1.0 + m && x < -m && (p + 0.5).norm() > 0.5 + m;
                y > 0.0 && (right || left)
            }
            SampleDomain::CubeRootRegion => {
                y > 0.0 && x > -1.5 + m && x < 0.5 - m && p.norm() > 1.0 + m && (p + 1.0).norm() > 1.0 + m
            }
            SampleDomain::ModularRegion => y > 0.0 && x > -0.5 + m && x < 0.5 - m && p.norm() > 1.0 + m,
            SampleDomain::Lens => p.norm() < 1.0 - m && (ONE - p).norm() < 1.0 - m,
            SampleDomain::SmallDisk => p.norm() <= SMALL_DISK_RADIUS - m,
            SampleDomain::QHeight => x == 0.0 && y > 1.0,
        }
    }

    /// Box `(re_min, re_max, im_min, im_max)` the grid is drawn from.
    fn bounding_box(&self) -> (f64, f64, f64, f64) {
        match self {
            SampleDomain::UpperHalfPlane => (-1.5, 1.5, 0.1, 2.0),
            SampleDomain::Gamma2Region => (-1.0, 1.0, 0.1, 2.0),
            SampleDomain::CubeRootRegion => (-1.5, 0.5, 0.5, 2.0),
            SampleDomain::ModularRegion => (-0.5, 0.5, 0.86, 2.0),
            SampleDomain::Lens => (0.0, 1.0, -0.87, 0.87),
            SampleDomain::SmallDisk => (-SMALL_DISK_RADIUS, SMALL_DISK_RADIUS, -SMALL_DISK_RADIUS, SMALL_DISK_RADIUS),
            SampleDomain::QHeight => (0.0, 0.0, 1.1, 1.1),
        }
    }

    /// `count` reproducible points inside the domain, kept `0.02` away
    /// from its boundary. `seed` offsets the Halton sequence.
    pub fn grid(&self, count: usize, seed: u64) -> Vec<ComplexValue> {
        if *self == SampleDomain::QHeight {
            return vec![c(0.0, 1.1)];
        }
        let (x0, x1, y0, y1) = self.bounding_box();
        let mut out = Vec::with_capacity(count);
        let mut index = seed + 1;
        while out.len() < count {
            let p = c(x0 + (x1 - x0) * halton(index, 2), y0 + (y1 - y0) * halton(index, 3));
            index += 1;
            if self.contains_with_margin(p, 0.02) {
                out.push(p);
            }
        }
        out
    }
}

/// Radical inverse of `index` in `base`.
pub fn halton(mut index: u64, base: u64) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while index > 0 {
        f /= base as f64;
        r += f * (index % base) as f64;
        index /= base;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halton_prefix() {
        let v: Vec<f64> = (1..5).map(|i| halton(i, 2)).collect();
        assert_eq!(v, vec![0.5, 0.25, 0.75, 0.125]);
        assert!((halton(2, 3) - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn grids_stay_inside() {
        let all = [
            SampleDomain::UpperHalfPlane,
            SampleDomain::Gamma2Region,
            SampleDomain::CubeRootRegion,
            SampleDomain::ModularRegion,
            SampleDomain::Lens,
            SampleDomain::SmallDisk,
        ];
        for d in all {
            let g = d.grid(25, 7);
            assert_eq!(g.len(), 25);
            assert!(g.iter().all(|p| d.contains(*p)), "{d:?}");
            assert_eq!(g, d.grid(25, 7));
        }
    }

    #[test]
    fn region_boundaries() {
        let d = SampleDomain::CubeRootRegion;
        assert!(d.contains(c(-0.5, 1.5)));
        assert!(!d.contains(c(-0.5, 0.8)));
        assert!(!d.contains(c(0.6, 1.5)));
        assert!(SampleDomain::Gamma2Region.contains(c(0.5, 0.6)));
        assert!(!SampleDomain::Gamma2Region.contains(c(0.5, 0.4)));
        assert!(!SampleDomain::Gamma2Region.contains(c(0.0, 1.0)));
        assert!(SampleDomain::ModularRegion.contains(c(0.0, 2.0)));
    }
}
