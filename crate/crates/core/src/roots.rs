//! Bracketing root isolation for polynomials with a dominant real root.
//!
//! The bracket is located with exact integer arithmetic: starting at the
//! Cauchy bound, integers are scanned downward until the sign first differs
//! from the sign at infinity. Bisection then runs in the caller's scalar type.

use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// Positive rational tolerance. The default is `2^-40`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tolerance(BigRational);

impl Tolerance {
    pub fn new(r: BigRational) -> Result<Self> {
        if r.is_positive() {
            Ok(Tolerance(r))
        } else {
            Err(Error::NonPositiveTolerance)
        }
    }

    /// `2^-bits`.
    pub fn dyadic(bits: u32) -> Self {
        Tolerance(BigRational::new(BigInt::one(), BigInt::one() << bits))
    }

    /// Largest power of two not exceeding `eps`.
    pub fn dyadic_at_most(eps: f64) -> Result<Self> {
        if eps.is_nan() || eps <= 0.0 || !eps.is_finite() {
            return Err(Error::NonPositiveTolerance);
        }
        let mut bits: i32 = 0;
        let mut v = 1.0f64;
        while v > eps {
            v /= 2.0;
            bits += 1;
        }
        while v * 2.0 <= eps {
            v *= 2.0;
            bits -= 1;
        }
        if bits >= 0 {
            Ok(Self::dyadic(bits as u32))
        } else {
            Ok(Tolerance(BigRational::from_integer(BigInt::one() << (-bits) as u32)))
        }
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(0.0)
    }

    pub fn scaled(&self, factor: u32) -> Tolerance {
        Tolerance(&self.0 * BigRational::from_integer(BigInt::from(factor)))
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::dyadic(40)
    }
}

impl fmt::Display for Tolerance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

/// Interval `[low, high]` containing a root, refined until narrower than
/// `tolerance` or until the scalar type runs out of precision.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootBracket<T> {
    pub low: T,
    pub high: T,
    #[serde(skip)]
    pub tolerance: BigRational,
}

impl<T: Scalar> RootBracket<T> {
    pub fn midpoint(&self) -> T {
        (self.low.clone() + self.high.clone()).half()
    }

    pub fn width(&self) -> T {
        self.high.clone() - self.low.clone()
    }

    pub fn contains(&self, v: &T) -> bool {
        &self.low <= v && v <= &self.high
    }
}

fn sign_of_int(v: &BigInt) -> Ordering {
    v.cmp(&BigInt::zero())
}

fn sign_of<T: Scalar>(v: &T) -> Ordering {
    if v.is_positive() {
        Ordering::Greater
    } else if v.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// Sign of `p(t)` for `t >= 1`, computed as the sign of `t^{-d} p(t)` so that
/// floats never overflow. Terms are summed sparsely with repeated squaring.
fn sign_above_one<T: Scalar>(p: &IntPolynomial, t: &T) -> Ordering {
    let d = p.degree().expect("nonzero polynomial");
    let s = T::one() / t.clone();
    let mut acc = T::zero();
    for (e, c) in p.terms() {
        acc = acc + T::from_bigint(c) * pow(&s, (d - e) as u64);
    }
    sign_of(&acc)
}

fn pow<T: Scalar>(base: &T, mut e: u64) -> T {
    let mut out = T::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            out = out * b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    out
}

/// `ceil(1 + max|c_i| / |c_d|)`.
pub fn cauchy_bound(p: &IntPolynomial) -> Result<BigInt> {
    let lead = p.leading().ok_or(Error::ZeroPolynomial)?.abs();
    let (q, r) = p.max_abs_coeff().div_rem(&lead);
    Ok(BigInt::one() + q + if r.is_zero() { 0 } else { 1 })
}

/// Integer bracket `[n, n+1]` (or `[n, n]` on an exact integer root)
/// containing the largest real root in `[1, B]`.
fn integer_bracket(p: &IntPolynomial) -> Result<(BigInt, BigInt)> {
    let bound = cauchy_bound(p)?;
    let top = sign_of_int(p.leading().expect("nonzero"));
    let mut n = bound.clone();
    while n >= BigInt::one() {
        let v = sign_of_int(&p.eval(&n));
        if v == Ordering::Equal {
            return Ok((n.clone(), n));
        }
        if v != top {
            return Ok((n.clone(), n + 1));
        }
        n -= 1;
    }
    Err(Error::NoRootAboveOne {
        bound: bound.to_string(),
    })
}

/// Largest real root of `p`, assumed to lie above 1.
pub fn largest_real_root<T: Scalar>(p: &IntPolynomial, tolerance: &Tolerance) -> Result<RootBracket<T>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Err(Error::NoRootAboveOne { bound: "1".into() });
    }
    let (lo, hi) = integer_bracket(p)?;
    let tol = T::from_rational(tolerance.as_rational());
    let mut low = T::from_bigint(&lo);
    let mut high = T::from_bigint(&hi);
    if lo == hi {
        return Ok(RootBracket {
            low,
            high,
            tolerance: tolerance.as_rational().clone(),
        });
    }
    let s_low = sign_above_one(p, &low);
    while high.clone() - low.clone() >= tol {
        let mid = (low.clone() + high.clone()).half();
        if mid <= low || mid >= high {
            break;
        }
        match sign_above_one(p, &mid) {
            Ordering::Equal => {
                low = mid.clone();
                high = mid;
                break;
            }
            s if s == s_low => low = mid,
            _ => high = mid,
        }
    }
    Ok(RootBracket {
        low,
        high,
        tolerance: tolerance.as_rational().clone(),
    })
}

/// Smallest positive root of `p`, assumed to lie in `(0, 1]`. Computed as the
/// reciprocal of the largest root of the reversed polynomial.
pub fn smallest_positive_root<T: Scalar>(p: &IntPolynomial, tolerance: &Tolerance) -> Result<RootBracket<T>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let rev = p.reversed();
    let b: RootBracket<T> = match largest_real_root(&rev, tolerance) {
        Ok(b) => b,
        Err(Error::NoRootAboveOne { .. }) => return Err(Error::NoRootInUnitInterval),
        Err(e) => return Err(e),
    };
    if b.high < T::one() {
        return Err(Error::NoRootInUnitInterval);
    }
    Ok(RootBracket {
        low: T::one() / b.high,
        high: T::one() / b.low,
        tolerance: b.tolerance,
    })
}

/// Midpoint of the largest-root bracket in double precision.
pub fn largest_root_f64(p: &IntPolynomial, tolerance: &Tolerance) -> Result<f64> {
    largest_real_root::<f64>(p, tolerance).map(|b| b.midpoint())
}
