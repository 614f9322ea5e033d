//! Truncated power series in `t`.
//!
//! A [`TSeries`] stores `c_0, …, c_N` and represents `Σ c_d t^d mod t^{N+1}`.
//! Binary operations between series of different orders truncate to the
//! smaller order, so precision is never silently invented.

use std::fmt::{self, Debug};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{Poly, RatFun};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Rat;

/// Coefficient ring of a [`TSeries`]: a commutative algebra over a scalar
/// field carrying the Adams operations `q ↦ q^n`.
pub trait Coeff: Clone + PartialEq + Debug {
    type Scalar: Scalar;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_scalar(c: Self::Scalar) -> Self;
    /// The scalar value of a constant element.
    fn as_scalar(&self) -> Option<Self::Scalar>;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, c: &Self::Scalar) -> Self;
    /// Adams operation `q ↦ q^n` on the coefficient.
    fn adams(&self, n: usize) -> Self;
    /// Multiplication by `q^e`; fails where the ring cannot represent it.
    fn mul_q_pow(&self, e: i64) -> Result<Self>;
}

impl<F: Scalar> Coeff for Poly<F> {
    type Scalar = F;

    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn from_scalar(c: F) -> Self {
        Poly::constant(c)
    }
    fn as_scalar(&self) -> Option<F> {
        self.as_constant()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, c: &F) -> Self {
        Poly::scale(self, c)
    }
    fn adams(&self, n: usize) -> Self {
        Poly::adams(self, n)
    }
    fn mul_q_pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.shift_up(e as usize))
        } else {
            self.shift_down(e.unsigned_abs() as usize)
        }
    }
}

impl<F: Scalar> Coeff for RatFun<F> {
    type Scalar = F;

    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn from_scalar(c: F) -> Self {
        RatFun::constant(c)
    }
    fn as_scalar(&self) -> Option<F> {
        self.as_poly().and_then(Poly::as_constant)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, c: &F) -> Self {
        RatFun::scale(self, c)
    }
    fn adams(&self, n: usize) -> Self {
        RatFun::adams(self, n)
    }
    fn mul_q_pow(&self, e: i64) -> Result<Self> {
        Ok(RatFun::mul_q_pow(self, e))
    }
}

/// Plain rational coefficients (series in a single variable, no `q`).
impl Coeff for Rat {
    type Scalar = Rat;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_scalar(c: Rat) -> Self {
        c
    }
    fn as_scalar(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rat) -> Self {
        self * c
    }
    fn adams(&self, _n: usize) -> Self {
        self.clone()
    }
    fn mul_q_pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            Ok(self.clone())
        } else {
            Err(Error::InvalidArgument(
                "rational coefficients carry no q".into(),
            ))
        }
    }
}

/// Power series in `t` truncated after `t^order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TSeries<C> {
    /// Builds a series of order `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        TSeries { coeffs }
    }

    /// Series of the given order from the first coefficients; missing
    /// coefficients are zero and extra ones are dropped.
    pub fn from_prefix(order: usize, prefix: Vec<C>) -> Self {
        let mut coeffs = prefix;
        coeffs.resize(order + 1, C::zero());
        TSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        TSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_prefix(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::from_prefix(order, vec![C::one()])
    }

    /// `c t^k`, truncated.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> &C {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        TSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn map<D: Coeff>(&self, f: impl FnMut(&C) -> D) -> TSeries<D> {
        TSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &C::Scalar) -> Self {
        self.map(|x| x.scale(c))
    }

    /// Multiplies every coefficient by the ring element `g`.
    pub fn mul_coeff(&self, g: &C) -> Self {
        self.map(|x| if x.is_zero() { C::zero() } else { x.mul_ref(g) })
    }

    pub fn has_zero_constant(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn has_unit_constant(&self) -> bool {
        self.coeffs[0] == C::one()
    }

    /// Multiplicative inverse up to the truncation order.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .as_scalar()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NonUnitConstant)?;
        let inv0 = C::Scalar::one() / c0;
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(C::from_scalar(inv0.clone()));
        for k in 1..self.coeffs.len() {
            let mut acc = C::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() || out[k - j].is_zero() {
                    continue;
                }
                acc = acc.add_ref(&self.coeffs[j].mul_ref(&out[k - j]));
            }
            out.push(acc.scale(&(-inv0.clone())));
        }
        Ok(TSeries { coeffs: out })
    }

    /// Adams operation on both variables: `q^i t^j ↦ q^{ni} t^{nj}`.
    pub fn adams(&self, n: usize) -> Self {
        assert!(n >= 1, "Adams operation needs n >= 1");
        let mut out = Self::zero(self.order());
        for (j, c) in self.coeffs.iter().enumerate() {
            if j * n > self.order() {
                break;
            }
            out.coeffs[j * n] = c.adams(n);
        }
        out
    }

    /// The shift operator `T^{power}`, multiplying the coefficient of `t^d`
    /// by `q^{power (1 - m) binom(d, 2)}`.
    pub fn shift_t(&self, m: u32, power: i32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be at least 1".into()));
        }
        if power != 1 && power != -1 {
            return Err(Error::InvalidArgument("power must be +1 or -1".into()));
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (d, c) in self.coeffs.iter().enumerate() {
            let d = d as i64;
            let e = i64::from(power) * (1 - i64::from(m)) * (d * (d - 1) / 2);
            coeffs.push(c.mul_q_pow(e)?);
        }
        Ok(TSeries { coeffs })
    }

    /// Ordinary exponential; needs a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.has_zero_constant() {
            return Err(Error::NonzeroConstant);
        }
        // n E_n = Σ_{k=1}^{n} k f_k E_{n-k}
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(C::one());
        for n in 1..self.coeffs.len() {
            let mut acc = C::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || out[n - k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k].mul_ref(&out[n - k]);
                acc = acc.add_ref(&term.scale(&C::Scalar::from_int(k as i64)));
            }
            out.push(acc.scale(&(C::Scalar::one() / C::Scalar::from_int(n as i64))));
        }
        Ok(TSeries { coeffs: out })
    }

    /// Ordinary logarithm; needs constant term one.
    pub fn log(&self) -> Result<Self> {
        if !self.has_unit_constant() {
            return Err(Error::ConstantNotOne);
        }
        // n L_n = n g_n - Σ_{k=1}^{n-1} k L_k g_{n-k}
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(C::zero());
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[n].scale(&C::Scalar::from_int(n as i64));
            for (k, l_k) in out.iter().enumerate().skip(1) {
                if l_k.is_zero() || self.coeffs[n - k].is_zero() {
                    continue;
                }
                let term = l_k.mul_ref(&self.coeffs[n - k]);
                acc = acc.sub_ref(&term.scale(&C::Scalar::from_int(k as i64)));
            }
            out.push(acc.scale(&(C::Scalar::one() / C::Scalar::from_int(n as i64))));
        }
        Ok(TSeries { coeffs: out })
    }

    /// `self^e` for a nonnegative integer exponent.
    pub fn powi(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| &acc * self)
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for TSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| format!("({c})*t^{d}"))
            .collect();
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        write!(f, "{body} + O(t^{})", self.order() + 1)
    }
}

impl<'a, C: Coeff> Add<&'a TSeries<C>> for &'a TSeries<C> {
    type Output = TSeries<C>;
    fn add(self, rhs: &'a TSeries<C>) -> TSeries<C> {
        TSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }
}

impl<'a, C: Coeff> Sub<&'a TSeries<C>> for &'a TSeries<C> {
    type Output = TSeries<C>;
    fn sub(self, rhs: &'a TSeries<C>) -> TSeries<C> {
        TSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }
}

impl<'a, C: Coeff> Mul<&'a TSeries<C>> for &'a TSeries<C> {
    type Output = TSeries<C>;
    fn mul(self, rhs: &'a TSeries<C>) -> TSeries<C> {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        TSeries { coeffs }
    }
}

impl<C: Coeff> Neg for &TSeries<C> {
    type Output = TSeries<C>;
    fn neg(self) -> TSeries<C> {
        self.map(|c| c.neg_ref())
    }
}
