//! Scalar abstraction shared by the root solvers.
//!
//! Root isolation only needs ring operations, ordering and halving, so the
//! same bisection code runs over `f32`, `f64` and exact [`BigRational`]
//! values. The exact instantiation gives rigorous dyadic brackets; the float
//! ones are what the lattice scan uses.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};
use std::fmt::Debug;

pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync {
    fn from_bigint(v: &BigInt) -> Self;
    fn from_rational(v: &BigRational) -> Self;
    fn half(&self) -> Self;
    fn as_f64(&self) -> f64;

    fn from_i64(v: i64) -> Self {
        Self::from_bigint(&BigInt::from(v))
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_bigint(v: &BigInt) -> Self {
                ToPrimitive::to_f64(v).unwrap_or(f64::NAN) as $t
            }

            fn from_rational(v: &BigRational) -> Self {
                ToPrimitive::to_f64(v).unwrap_or(f64::NAN) as $t
            }

            fn half(&self) -> Self {
                self / 2.0
            }

            fn as_f64(&self) -> f64 {
                *self as f64
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl Scalar for BigRational {
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn from_rational(v: &BigRational) -> Self {
        v.clone()
    }

    fn half(&self) -> Self {
        self / BigRational::from_integer(BigInt::from(2))
    }

    fn as_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}
