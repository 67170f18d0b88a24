//! Fixed inputs shared by the benchmarks.

use hml_core::numcore::c;
use hml_core::ComplexValue;

/// One point per continuation route of `hg_principal`.
pub fn route_points() -> [(&'static str, ComplexValue); 5] {
    [
        ("direct", c(0.3, 0.2)),
        ("connection_at_one", c(0.9, 0.2)),
        ("pfaff", c(-3.0, 0.5)),
        ("inversion", c(3.0, 4.0)),
        ("ode_path", c(1.0, 1.0)),
    ]
}

/// Points of the upper half-plane from high to low imaginary part.
pub fn tau_points() -> [(&'static str, ComplexValue); 3] {
    [("high", c(0.1, 2.0)), ("mid", c(-0.3, 0.9)), ("low", c(0.37, 0.06))]
}
