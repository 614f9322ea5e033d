//! Exact univariate arithmetic in the variable `q`.
//!
//! [`Poly`] is a dense polynomial over a [`Scalar`](crate::Scalar) field and
//! [`RatFun`] a reduced quotient of two of them. Both are kept in canonical
//! form so that derived equality is mathematical equality.

mod poly;
mod ratfun;

pub use poly::Poly;
pub use ratfun::RatFun;

use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};

/// True if every coefficient of `p` is an integer.
pub fn is_integral(p: &Poly<Rat>) -> bool {
    p.coeffs().iter().all(|c| c.is_integer())
}

/// Integer coefficient list of `p`, or `None` if some coefficient is not
/// integral.
pub fn integer_coeffs(p: &Poly<Rat>) -> Option<Vec<Int>> {
    p.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

/// Formats a rational as a plain decimal string (`"3"`, `"-1/2"`).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True if every entry is a nonnegative integer.
pub fn all_natural(coeffs: &[Rat]) -> bool {
    coeffs
        .iter()
        .all(|c| c.is_integer() && (c.is_zero() || c.is_positive()))
}
