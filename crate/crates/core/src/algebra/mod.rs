//! Exact arithmetic foundation: dense polynomials, truncated power series,
//! Laurent polynomials and rational Hilbert series whose denominators are
//! products of `(1 - t^e)`.
//!
//! Every type here is generic over a coefficient ring implementing
//! [`Scalar`]. The analyzers instantiate them with [`num_bigint::BigInt`];
//! the crate root exports the concrete aliases.

mod hilbert;
mod laurent;
mod poly;
mod series;

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

pub use hilbert::{expand, reconstruct, RationalSeries, ReconstructError, DEFAULT_GUARD};
pub use laurent::LaurentPolynomial;
pub use poly::Polynomial;
pub use series::PowerSeries;

/// Coefficient ring for the exact types in this module.
///
/// Only ring operations are used by the generic code, so any exact
/// commutative ring with a `Num` implementation qualifies (`BigInt`,
/// `BigRational`, fixed-width integers for small tests).
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug {}

impl<T> Scalar for T where T: Num + Neg<Output = T> + Clone + Debug {}
