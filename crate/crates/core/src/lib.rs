//! Exact Hilbert series, moment maps and Gorenstein certification for
//! symplectic quotients by tori and by SL2.
//!
//! The algebra layer is generic over the coefficient ring; the analyzers
//! work with arbitrary-precision integers through the aliases below.

pub mod algebra;
pub mod certify;
mod error;
mod guess;
pub mod linalg;
mod lp;
pub mod quadratic;
pub mod sl2;
pub mod torus;

use num_bigint::BigInt;

pub use algebra::{expand, reconstruct, ReconstructError, DEFAULT_GUARD};
pub use error::{Error, Result};

pub type IntPolynomial = algebra::Polynomial<BigInt>;
pub type TruncatedSeries = algebra::PowerSeries<BigInt>;
pub type HilbertSeries = algebra::RationalSeries<BigInt>;
pub type LaurentCharacter = algebra::LaurentPolynomial<BigInt>;

/// How a reported closed form was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormSource {
    /// Reconstructed with the caller's denominator.
    Supplied,
    /// Reconstructed with a denominator assembled from generator degrees.
    Guessed,
    /// Computed exactly without reconstruction.
    Exact,
}
