//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use crate::error::{Error, Result};
use crate::homology::{FiberedClass, IjkClass};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{self, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients indexed by degree, with no trailing zeros. The zero
/// polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = IntPolynomial {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Sum of `c t^d` over `(c, d)`, combining repeated exponents.
    pub fn from_terms(terms: &[(i64, usize)]) -> Self {
        let degree = terms.iter().map(|&(_, d)| d).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        for &(c, d) in terms {
            coeffs[d] += c;
        }
        Self::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero terms as `(degree, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// `t^deg p(1/t)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    /// Palindromic coefficient sequence. Only meaningful for nonzero `p`.
    pub fn is_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|d| self.coeffs[d] == self.coeffs[n - 1 - d])
    }

    /// Exact quotient over the integers, or the remainder left when the long
    /// division gets stuck.
    pub fn divide_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible { remainder: r })
        }
    }

    /// Long division keeping integer coefficients. Stops early when the
    /// divisor's leading coefficient does not divide the current one; the
    /// partial remainder is then returned as is.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = rem[top].clone();
            if !c.is_zero() {
                let (q, r) = c.div_rem(lead);
                if !r.is_zero() {
                    break;
                }
                let shift = top - dd;
                for (d, dc) in divisor.coeffs.iter().enumerate() {
                    rem[shift + d] -= &q * dc;
                }
                quot[shift] = q;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|d| self.coeff(d) + rhs.coeff(d)))
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|d| self.coeff(d) - rhs.coeff(d)))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Monomial form, highest degree first: `t^7 - t^6 - t^5 - t^2 - t + 1`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match d {
                0 => write!(f, "{mag}")?,
                _ if unit => {}
                _ => write!(f, "{mag}")?,
            }
            match d {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for IntPolynomial {
    type Err = Error;

    /// Parses the monomial form written by `Display`, e.g. `t^4 - 2t^3 - 2t + 1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidParameter(format!("cannot parse polynomial {s:?}: {why}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms: Vec<(BigInt, usize)> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ if terms.is_empty() => (false, rest),
                _ => return Err(bad("expected + or -")),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let (coef, power) = match term.find('t') {
                Some(pos) => {
                    let c = &term[..pos];
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let c = if c.is_empty() {
                        BigInt::one()
                    } else {
                        c.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?
                    };
                    let p = &term[pos + 1..];
                    let p = if p.is_empty() {
                        1
                    } else {
                        p.strip_prefix('^')
                            .ok_or_else(|| bad("expected ^"))?
                            .parse::<usize>()
                            .map_err(|_| bad("bad exponent"))?
                    };
                    (c, p)
                }
                None => (term.parse::<BigInt>().map_err(|_| bad("bad constant"))?, 0),
            };
            terms.push((if neg { -coef } else { coef }, power));
        }
        let degree = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        for (c, d) in terms {
            coeffs[d] += c;
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

/// JSON form: array of integer coefficients, index = degree.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            let v = c
                .to_i64()
                .ok_or_else(|| ser::Error::custom(format!("coefficient {c} exceeds 64 bits")))?;
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<i64> = Vec::deserialize(d).map_err(de::Error::custom)?;
        Ok(IntPolynomial::from_coeffs(v))
    }
}

/// `t^{x+y-z} - t^x - t^y - t^{x-z} - t^{y-z} + 1`, like terms combined.
pub fn dilatation_polynomial(a: &FiberedClass) -> IntPolynomial {
    let (x, y, z) = a.coords();
    let d = |e: i64| usize::try_from(e).expect("exponents are positive on the fibered cone");
    IntPolynomial::from_terms(&[
        (1, d(x + y - z)),
        (-1, d(x)),
        (-1, d(y)),
        (-1, d(x - z)),
        (-1, d(y - z)),
        (1, 0),
    ])
}

/// `1 - (t^k + t^{i+k} + t^{j+k} + t^{i+j+k}) + t^{i+j+2k}`; independent of the sign.
pub fn clique_polynomial_formula(c: &IjkClass) -> IntPolynomial {
    let d = |e: i64| e as usize;
    let (i, j, k) = (c.i, c.j, c.k);
    IntPolynomial::from_terms(&[
        (1, 0),
        (-1, d(k)),
        (-1, d(i + k)),
        (-1, d(j + k)),
        (-1, d(i + j + k)),
        (1, d(i + j + 2 * k)),
    ])
}

/// `t^{2a} - t^{a+b} - t^a - t^{a-b} + 1`.
pub fn lanneau_thiffeault(a: i64, b: i64) -> Result<IntPolynomial> {
    if !(a > b && b >= 0) {
        return Err(Error::InvalidLanneauThiffeault { a, b });
    }
    let d = |e: i64| e as usize;
    Ok(IntPolynomial::from_terms(&[
        (1, d(2 * a)),
        (-1, d(a + b)),
        (-1, d(a)),
        (-1, d(a - b)),
        (1, 0),
    ]))
}

/// `t^n + 1`.
pub fn t_pow_plus_one(n: usize) -> IntPolynomial {
    IntPolynomial::from_terms(&[(1, n), (1, 0)])
}
