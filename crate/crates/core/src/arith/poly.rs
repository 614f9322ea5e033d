use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense polynomial in `q`, coefficients indexed by exponent.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has an empty coefficient vector and the leading coefficient of a nonzero
/// polynomial is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

fn add_into<F: Scalar>(acc: &mut F, x: &F) {
    let v = std::mem::replace(acc, F::zero());
    *acc = v + x;
}

fn sub_into<F: Scalar>(acc: &mut F, x: &F) {
    let v = std::mem::replace(acc, F::zero());
    *acc = v - x;
}

impl<F: Scalar> Poly<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// `c * q^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// `q^k - 1`.
    pub fn q_pow_minus_one(k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[0] = -F::one();
        coeffs[k] = coeffs[k].clone() + F::one();
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The constant value if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<F> {
        match self.coeffs.len() {
            0 => Some(F::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
    }

    /// Adams operation on the coefficient ring: `q ↦ q^n`.
    pub fn adams(&self, n: usize) -> Self {
        assert!(n >= 1, "Adams operation needs n >= 1");
        if n == 1 || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(); (self.coeffs.len() - 1) * n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * n] = c.clone();
        }
        Poly { coeffs }
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `q^k`, failing unless the division is exact.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.is_zero() || k == 0 {
            return Ok(self.clone());
        }
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Poly {
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Long division over the coefficient field.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                sub_into(&mut rem[k + j], &(c.clone() * dc));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Scales to leading coefficient one; returns the removed factor too.
    pub fn monic(&self) -> (F, Self) {
        match self.leading() {
            None => (F::one(), Self::zero()),
            Some(lc) => {
                let lc = lc.clone();
                let inv = F::one() / &lc;
                (lc, self.scale(&inv))
            }
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic().1
    }

    /// Synthetic division by `q - 1`: returns quotient and remainder `p(1)`.
    pub fn div_q_minus_one(&self) -> (Self, F) {
        if self.coeffs.is_empty() {
            return (Self::zero(), F::zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![F::zero(); n - 1];
        let mut carry = F::zero();
        for k in (0..n).rev() {
            carry = carry + &self.coeffs[k];
            if k > 0 {
                quot[k - 1] = carry.clone();
            }
        }
        (Self::from_coeffs(quot), carry)
    }

    /// Multiplicity of the root `q = 1`; `None` for the zero polynomial.
    pub fn order_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (quot, rem) = p.div_q_minus_one();
            if !rem.is_zero() {
                return Some(k);
            }
            p = quot;
            k += 1;
        }
    }

    /// Coefficients `c_k` with `p(q) = Σ c_k (q - 1)^k`, by repeated
    /// synthetic division at `q = 1`.
    pub fn expand_in_s(&self) -> Vec<F> {
        if self.is_zero() {
            return vec![F::zero()];
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut p = self.clone();
        while !p.is_zero() {
            let (quot, rem) = p.div_q_minus_one();
            out.push(rem);
            p = quot;
        }
        out
    }

    /// Reassembles `Σ c_k (q - 1)^k`.
    pub fn from_s_coeffs(coeffs: &[F]) -> Self {
        let s = Self::from_coeffs(vec![-F::one(), F::one()]);
        coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &s) + &Self::constant(c.clone())
        })
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Scalar + Signed + fmt::Display> Poly<F> {
    /// Human-readable form in the given variable, highest degree first.
    pub fn format_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl<F: Scalar + Signed + fmt::Display> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_in("q"))
    }
}

impl<'a, F: Scalar> Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &'a Poly<F>) -> Poly<F> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            add_into(a, b);
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<'a, F: Scalar> Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &'a Poly<F>) -> Poly<F> {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), F::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            sub_into(a, b);
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<'a, F: Scalar> Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &'a Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                add_into(&mut coeffs[i + j], &(a.clone() * b));
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<F: Scalar> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<F: Scalar> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<F: Scalar> $tr<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, F: Scalar> $tr<&'a Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: &'a Poly<F>) -> Poly<F> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Scalar> Zero for Poly<F> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Scalar> One for Poly<F> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<F: Scalar> From<F> for Poly<F> {
    fn from(c: F) -> Self {
        Poly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, QPoly, Rat};
    use num_rational::Ratio;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn evaluate_at_one() {
        // q^3 - q^2 - 1
        assert_eq!(p(&[-1, 0, -1, 1]).eval(&rat(1)), rat(-1));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).div_exact(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(
            p(&[1, 0, 1]).div_exact(&p(&[-1, 1])),
            Err(Error::NotDivisible)
        );
        assert_eq!(
            p(&[1]).div_exact(&QPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn expand_in_s_examples() {
        // q^3 (q-1)^2
        let a2 = &QPoly::monomial(rat(1), 3) * &p(&[-1, 1]).pow(2);
        assert_eq!(a2.expand_in_s(), [0, 0, 1, 3, 3, 1].map(rat).to_vec());
        assert_eq!(p(&[-1, 1]).expand_in_s(), vec![rat(0), rat(1)]);
        assert_eq!(QPoly::one().expand_in_s(), vec![rat(1)]);
    }

    #[test]
    fn adams_examples() {
        assert_eq!(p(&[-1, 1]).adams(2), p(&[-1, 0, 1]));
        assert_eq!(p(&[0, 1, 1]).adams(3), p(&[0, 0, 0, 1, 0, 0, 1]));
        let s2 = p(&[-1, 1]).pow(2);
        assert_eq!(s2.adams(2), p(&[-1, 0, 1]).pow(2));
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[-2, 2]) * &p(&[1, 1]);
        let b = &p(&[-3, 3]) * &p(&[2, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn order_at_one_counts_multiplicity() {
        let a = &p(&[-1, 1]).pow(3) * &p(&[1, 1]);
        assert_eq!(a.order_at_one(), Some(3));
        assert_eq!(p(&[5]).order_at_one(), Some(0));
        assert_eq!(QPoly::zero().order_at_one(), None);
    }

    #[test]
    fn display_is_readable() {
        let a = &QPoly::monomial(rat(1), 3) * &p(&[-1, 1]).pow(2);
        assert_eq!(a.to_string(), "q^5 - 2*q^4 + q^3");
        let b = QPoly::from_coeffs(vec![Rat::new(1.into(), 2.into()), rat(-1)]);
        assert_eq!(b.to_string(), "-q + 1/2");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn generic_over_small_rationals() {
        type P = Poly<Ratio<i64>>;
        let a = P::from_ints(&[-1, 1]);
        assert_eq!(
            (&a * &a).eval(&Ratio::from_integer(3)),
            Ratio::from_integer(4)
        );
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-20i64..20, 0..8).prop_map(|c| QPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn s_expansion_reassembles(a in small_poly()) {
            prop_assert_eq!(QPoly::from_s_coeffs(&a.expand_in_s()), a);
        }

        #[test]
        fn adams_composes(a in small_poly(), x in 1usize..=6, y in 1usize..=6) {
            prop_assert_eq!(a.adams(x).adams(y), a.adams(x * y));
        }

        #[test]
        fn div_rem_recombines(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert!(r.degree() < b.degree() || r.is_zero());
            prop_assert_eq!(&(&q * &b) + &r, a);
        }
    }
}
