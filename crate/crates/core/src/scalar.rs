use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, NumRef};

/// Coefficient field of [`Poly`](crate::Poly) and [`RatFun`](crate::RatFun).
///
/// Division is assumed to be exact field division. The crate only ever
/// instantiates this with [`Rat`](crate::Rat); small exact types such as
/// `Ratio<i64>` also satisfy the bounds and are handy in tests.
pub trait Scalar: NumRef + Neg<Output = Self> + Clone + Debug + FromPrimitive {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer not representable in scalar type")
    }
}

impl<T> Scalar for T where T: NumRef + Neg<Output = T> + Clone + Debug + FromPrimitive {}
