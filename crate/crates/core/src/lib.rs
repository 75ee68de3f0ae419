//! Exact reducibility analysis for the trinomial families
//! `x^n + e1*x^m + e2` and `x^n + e1*x^m + e2*p^k` over the rationals.
//!
//! The polynomial layer is generic over its coefficient ring ([`Poly<T>`]);
//! the number-theoretic modules work over arbitrary-precision integers
//! through the [`IntPoly`] alias.

pub mod arith;
pub mod cyclotomic;
pub mod error;
pub mod factor;
pub mod pk_trinomial;
pub mod poly;
pub mod scalar;
pub mod trinomial;
pub mod unit_disk;
pub mod unit_trinomial;

pub use error::{Error, Result};
pub use factor::{factor_over_z, is_irreducible, FactorTag, Factorization};
pub use poly::Poly;
pub use scalar::{IntegerScalar, Scalar};
pub use trinomial::{Sign, TrinomialSpec};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Polynomials over the integers; the main currency of the crate.
pub type IntPoly = Poly<BigInt>;
/// Polynomials over the rationals.
pub type RatPoly = Poly<BigRational>;
/// Machine-word integer polynomials, for small hand-built inputs.
pub type SmallIntPoly = Poly<i64>;
