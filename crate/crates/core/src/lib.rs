//! Exact q-Euler, q-tangent and q-Salié polynomials, the cyclotomic divisor
//! families attached to them, and executable checks of their congruence and
//! divisibility properties.
//!
//! The polynomial layer is generic over any [`Scalar`] coefficient ring;
//! everything above it works over arbitrary-precision integers through the
//! [`IntPoly`] alias.

pub mod arith;
pub mod cyclotomic;
pub mod divisors;
pub mod perm;
pub mod poly;
pub mod qbinom;
pub mod residue;
pub mod scalar;
pub mod sequences;
pub mod verify;

pub use cyclotomic::{cyclotomic, factor_one_plus_qd, CycloCache, Divisibility, FactoredPoly};
pub use poly::{Poly, PolyError};
pub use scalar::Scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = Poly<BigInt>;
/// Polynomial with exact rational coefficients.
pub type RatPoly = Poly<BigRational>;
/// Polynomial with `f64` coefficients, for quick numeric experiments.
pub type FloatPoly = Poly<f64>;
pub type IntPolyError = PolyError<BigInt>;
