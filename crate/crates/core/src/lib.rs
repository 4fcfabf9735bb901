//! Exact arithmetic for supersymmetric Laurent polynomials and the
//! supercharacter combinatorics of `GL(m|n)`.
//!
//! Everything is exact: coefficients live in `Q` or `F_p`, and every
//! decision procedure reduces to exact linear algebra on monomial
//! coordinates of a fixed total degree.

pub mod algebra;
pub mod campaign;
pub mod characters;
pub mod error;
pub mod generators;
pub mod json;
pub mod laurent;
pub mod linalg;
pub mod poset;
pub mod profile;
pub mod scalar;
pub mod series;
pub mod signs;

pub mod weight;

pub use characters::{Parity, SuperBasis};
pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use profile::Profile;
pub use scalar::{Characteristic, Coefficient};
pub use weight::Weight;
