use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Reduced quotient `num / den` of polynomials in `q`.
///
/// The denominator is nonzero and monic and shares no factor with the
/// numerator; the zero function is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Scalar> RatFun<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let (lc, den) = den.monic();
        let num = num.scale(&(F::one() / &lc));
        Ok(RatFun { num, den })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this function equals, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly<F>> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn into_poly(self) -> Result<Poly<F>> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            Err(Error::NotDivisible)
        }
    }

    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `q ↦ q^n` applied to numerator and denominator.
    pub fn adams(&self, n: usize) -> Self {
        // q ↦ q^n keeps coprime polynomials coprime and monic ones monic.
        RatFun {
            num: self.num.adams(n),
            den: self.den.adams(n),
        }
    }

    /// Multiplies by `q^e` for any integer `e`.
    pub fn mul_q_pow(&self, e: i64) -> Self {
        let k = e.unsigned_abs() as usize;
        if e >= 0 {
            Self::new(self.num.shift_up(k), self.den.clone()).expect("nonzero denominator")
        } else {
            Self::new(self.num.clone(), self.den.shift_up(k)).expect("nonzero denominator")
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Value at `q = 1` after cancelling the common `(q - 1)`-power.
    ///
    /// Fails with [`Error::PoleAtOne`] if the denominator vanishes to higher
    /// order than the numerator.
    pub fn limit_at_one(&self) -> Result<F> {
        let Some(num_ord) = self.num.order_at_one() else {
            return Ok(F::zero());
        };
        let den_ord = self.den.order_at_one().expect("nonzero denominator");
        if den_ord > num_ord {
            return Err(Error::PoleAtOne(den_ord - num_ord));
        }
        let mut num = self.num.clone();
        for _ in 0..num_ord {
            num = num.div_q_minus_one().0;
        }
        let mut den = self.den.clone();
        for _ in 0..den_ord {
            den = den.div_q_minus_one().0;
        }
        // the remaining (q-1)^(num_ord - den_ord) factor vanishes at 1
        if num_ord > den_ord {
            return Ok(F::zero());
        }
        Ok(num.eval(&F::one()) / den.eval(&F::one()))
    }
}

impl<F: Scalar + Signed + fmt::Display> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<'a, F: Scalar> Add<&'a RatFun<F>> for &'a RatFun<F> {
    type Output = RatFun<F>;
    fn add(self, rhs: &'a RatFun<F>) -> RatFun<F> {
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<'a, F: Scalar> Sub<&'a RatFun<F>> for &'a RatFun<F> {
    type Output = RatFun<F>;
    fn sub(self, rhs: &'a RatFun<F>) -> RatFun<F> {
        self + &(-rhs)
    }
}

impl<'a, F: Scalar> Mul<&'a RatFun<F>> for &'a RatFun<F> {
    type Output = RatFun<F>;
    fn mul(self, rhs: &'a RatFun<F>) -> RatFun<F> {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<'a, F: Scalar> Div<&'a RatFun<F>> for &'a RatFun<F> {
    type Output = RatFun<F>;
    fn div(self, rhs: &'a RatFun<F>) -> RatFun<F> {
        let inv = rhs.recip().expect("division by zero rational function");
        self.mul(&inv)
    }
}

impl<F: Scalar> Neg for &RatFun<F> {
    type Output = RatFun<F>;
    fn neg(self) -> RatFun<F> {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: Scalar> Neg for RatFun<F> {
    type Output = RatFun<F>;
    fn neg(self) -> RatFun<F> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<F: Scalar> $tr<RatFun<F>> for RatFun<F> {
            type Output = RatFun<F>;
            fn $method(self, rhs: RatFun<F>) -> RatFun<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl<F: Scalar> From<Poly<F>> for RatFun<F> {
    fn from(p: Poly<F>) -> Self {
        RatFun::from_poly(p)
    }
}

impl<F: Scalar> Zero for RatFun<F> {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Scalar> One for RatFun<F> {
    fn one() -> Self {
        RatFun::one()
    }
}
