//! Exact counting polynomials of character varieties of free groups.
//!
//! The crate computes, for the free group `F_m`, the polynomials counting
//! semisimple, absolutely irreducible and absolutely indecomposable
//! `d`-dimensional representations over `F_q`, together with the derived
//! E-polynomials and Euler characteristics of the `GL_d` and `PGL_d`
//! character varieties. Everything is exact: polynomials carry
//! arbitrary-precision rational coefficients and power series carry an
//! explicit truncation order.
//!
//! Independent brute-force oracles live alongside the generating-function
//! machinery: [`ffield`] enumerates representations over small prime fields
//! and [`combinatorics`] enumerates permutation tuples and permutation
//! representations.
//!
//! The arithmetic core ([`Poly`], [`RatFun`], [`TSeries`]) is generic over the
//! scalar field; the aliases below fix it to exact rationals, which is what
//! every computation in the crate uses.

pub mod arith;
pub mod charvar;
pub mod combinatorics;
pub mod error;
pub mod ffield;
pub mod numtheory;
pub mod plethystic;
pub mod scalar;
pub mod series;
pub mod verify;

pub use arith::{Poly, RatFun};
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use series::{Coeff, TSeries};

/// Arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Polynomial in `q` with rational coefficients.
pub type QPoly = Poly<Rat>;
/// Rational function in `q` over the rationals.
pub type QRatFun = RatFun<Rat>;
/// Truncated power series in `t` with [`QPoly`] coefficients.
pub type QSeries = TSeries<QPoly>;
/// Truncated power series in `t` with [`QRatFun`] coefficients.
pub type QRatSeries = TSeries<QRatFun>;
/// Truncated power series in `x` with plain rational coefficients.
pub type RatSeries = TSeries<Rat>;

/// Shorthand for the rational `n / 1`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for the rational `num / den`.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}
