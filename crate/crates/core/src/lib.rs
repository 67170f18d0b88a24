//! Hypergeometric functions, theta constants and the Schwarz maps that tie
//! them together, with numerical verification of the resulting identities.

pub mod error;
pub mod hypergeometric;
pub mod identities;
pub mod modular;
pub mod monodromy;
pub mod numcore;
pub mod schwarz;

pub use error::{Error, Result};
pub use hypergeometric::HGParams;
pub use identities::{CheckReport, IdentityId};
pub use modular::Tau;
pub use numcore::{ComplexValue, IntMat2, Mat2, Rational};
pub use schwarz::SchwarzId;
