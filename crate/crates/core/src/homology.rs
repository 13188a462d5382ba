//! Coordinates on the second homology of the magic manifold relative to its
//! boundary, the open fibered cone and the closed-form fiber invariants.
//!
//! A class `x α + y β + z γ` is fibered (lies over the interior of the fibered
//! face) exactly when `x > 0`, `y > 0`, `x > z` and `y > z`; its Thurston norm is
//! then `x + y - z`. Every routine here is exact integer or rational arithmetic.

use crate::error::{Error, Result};
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::fmt;

pub fn is_fibered(x: i64, y: i64, z: i64) -> bool {
    x > 0 && y > 0 && x > z && y > z
}

/// `gcd(x, y, z) == 1`, for any integral triple.
pub fn is_primitive_triple(x: i64, y: i64, z: i64) -> bool {
    x.gcd(&y).gcd(&z) == 1
}

/// Integral class `(x, y, z)` in the basis `α, β, γ`, guaranteed fibered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawClass", into = "RawClass")]
pub struct FiberedClass {
    x: i64,
    y: i64,
    z: i64,
}

#[derive(Serialize, Deserialize)]
struct RawClass {
    x: i64,
    y: i64,
    z: i64,
}

impl TryFrom<RawClass> for FiberedClass {
    type Error = Error;
    fn try_from(r: RawClass) -> Result<Self> {
        FiberedClass::new(r.x, r.y, r.z)
    }
}

impl From<FiberedClass> for RawClass {
    fn from(a: FiberedClass) -> Self {
        RawClass { x: a.x, y: a.y, z: a.z }
    }
}

impl FiberedClass {
    pub fn new(x: i64, y: i64, z: i64) -> Result<Self> {
        if is_fibered(x, y, z) {
            Ok(FiberedClass { x, y, z })
        } else {
            Err(Error::NotFibered { x, y, z })
        }
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    pub fn z(&self) -> i64 {
        self.z
    }

    pub fn coords(&self) -> (i64, i64, i64) {
        (self.x, self.y, self.z)
    }

    /// Thurston norm `x + y - z`.
    pub fn norm(&self) -> i64 {
        self.x + self.y - self.z
    }

    pub fn content(&self) -> i64 {
        self.x.gcd(&self.y).gcd(&self.z)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// `(x, y, z) -> (y, x, z)`; the monodromies of the two classes are
    /// conjugate up to inversion, so they share dilatation polynomials.
    pub fn swap_symmetry(&self) -> FiberedClass {
        FiberedClass {
            x: self.y,
            y: self.x,
            z: self.z,
        }
    }

    /// Representative of the swap orbit with `y >= x`.
    pub fn canonical(&self) -> FiberedClass {
        if self.y >= self.x {
            *self
        } else {
            self.swap_symmetry()
        }
    }

    pub fn to_ijk(&self) -> Result<IjkClass> {
        IjkClass::from_xyz(self)
    }

    pub fn projection_to_face(&self) -> FaceCoordinates {
        let n = self.norm();
        FaceCoordinates {
            u: Ratio::new(self.x, n),
            v: Ratio::new(self.y, n),
        }
    }

    /// Boundary slopes at the α, β and γ cusps:
    /// `(y+z)/(-x)`, `(z+x)/(-y)` and `(x+y)/(-z)`.
    pub fn boundary_slopes(&self) -> [Slope; 3] {
        let (x, y, z) = self.coords();
        [
            Slope::from_parts(y + z, -x),
            Slope::from_parts(z + x, -y),
            Slope::from_parts(x + y, -z),
        ]
    }

    /// Boundary circle counts on `T_α`, `T_β`, `T_γ`.
    pub fn boundary_counts(&self) -> [i64; 3] {
        let (x, y, z) = self.coords();
        [gcd0(x, y + z), gcd0(y, z + x), gcd0(z, x + y)]
    }

    pub fn fiber_topology(&self) -> Result<FiberTopology> {
        let gcd = self.content();
        if gcd != 1 {
            return Err(Error::NotPrimitive {
                x: self.x,
                y: self.y,
                z: self.z,
                gcd,
            });
        }
        let (x, y, z) = self.coords();
        let [ba, bb, bg] = self.boundary_counts();
        let total = ba + bb + bg;
        // 2 - 2g - b = -norm
        let twice_genus = 2 + self.norm() - total;
        assert!(
            twice_genus >= 0 && twice_genus % 2 == 0,
            "inconsistent Euler characteristic for ({x},{y},{z})"
        );
        Ok(FiberTopology {
            genus: (twice_genus / 2) as u64,
            boundary_alpha: ba as u64,
            boundary_beta: bb as u64,
            boundary_gamma: bg as u64,
            prongs_alpha: (x / ba) as u64,
            prongs_beta: (y / bb) as u64,
            prongs_gamma: ((x + y - 2 * z) / bg) as u64,
            orientable: x % 2 == 0 && y % 2 == 0 && z.rem_euclid(2) == 1,
        })
    }
}

impl fmt::Display for FiberedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// `gcd(0, w) = |w|`. Both arguments zero cannot happen for a fibered class.
fn gcd0(a: i64, b: i64) -> i64 {
    debug_assert!(a != 0 || b != 0, "gcd(0,0) is unreachable for fibered classes");
    a.gcd(&b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// Class written as `(i,j,k)_±`. With `i = 0` both signs name the same class
/// `(j,k)_0`; the constructor normalises that case to [`Sign::Plus`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IjkClass {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub sign: Sign,
}

impl IjkClass {
    pub fn new(i: i64, j: i64, k: i64, sign: Sign) -> Result<Self> {
        if i < 0 || j < 0 || k < 1 {
            return Err(Error::InvalidCoordinates { i, j, k });
        }
        let sign = if i == 0 { Sign::Plus } else { sign };
        Ok(IjkClass { i, j, k, sign })
    }

    pub fn plus(i: i64, j: i64, k: i64) -> Result<Self> {
        Self::new(i, j, k, Sign::Plus)
    }

    pub fn minus(i: i64, j: i64, k: i64) -> Result<Self> {
        Self::new(i, j, k, Sign::Minus)
    }

    /// `(j,k)_0`.
    pub fn zero(j: i64, k: i64) -> Result<Self> {
        Self::new(0, j, k, Sign::Plus)
    }

    pub fn is_zero_form(&self) -> bool {
        self.i == 0
    }

    pub fn is_degenerate(&self) -> bool {
        self.i == 0 || self.j == 0
    }

    pub fn norm(&self) -> i64 {
        self.i + self.j + 2 * self.k
    }

    pub fn to_xyz(&self) -> FiberedClass {
        let (i, j, k) = (self.i, self.j, self.k);
        let (x, y, z) = match self.sign {
            Sign::Plus => (i + k, i + j + k, i),
            Sign::Minus => (k, j + k, -i),
        };
        FiberedClass::new(x, y, z).expect("(i,j,k) coordinates with k >= 1 are always fibered")
    }

    pub fn from_xyz(a: &FiberedClass) -> Result<Self> {
        let (x, y, z) = a.coords();
        if y < x {
            return Err(Error::SwapRequired { x, y, z });
        }
        if z >= 0 {
            Self::new(z, y - x, x - z, Sign::Plus)
        } else {
            Self::new(-z, y - x, x, Sign::Minus)
        }
    }

    /// Swap `i` and `j`; the clique polynomial is unchanged.
    pub fn swap_ij(&self) -> Result<IjkClass> {
        IjkClass::new(self.j, self.i, self.k, self.sign)
    }
}

impl fmt::Display for IjkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i == 0 {
            write!(f, "({},{})_0", self.j, self.k)
        } else {
            let s = match self.sign {
                Sign::Plus => '+',
                Sign::Minus => '-',
            };
            write!(f, "({},{},{})_{}", self.i, self.j, self.k, s)
        }
    }
}

/// Point `[u, v]` of the open fibered face, `0 < u, v < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FaceCoordinates {
    pub u: Ratio<i64>,
    pub v: Ratio<i64>,
}

impl fmt::Display for FaceCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.u, self.v)
    }
}

/// A boundary slope or a Dehn filling slope. The infinite slope is its own
/// variant rather than a sentinel number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(Ratio<i64>),
    Infinite,
}

impl Slope {
    /// `num / den`, reduced with positive denominator; `den = 0` gives ∞.
    pub fn from_parts(num: i64, den: i64) -> Slope {
        if den == 0 {
            assert!(num != 0, "0/0 is not a slope");
            Slope::Infinite
        } else {
            Slope::Finite(Ratio::new(num, den))
        }
    }

    /// `(p, q)` with `q >= 0`; infinity is `(1, 0)`.
    pub fn parts(&self) -> (i64, i64) {
        match self {
            Slope::Finite(r) => (*r.numer(), *r.denom()),
            Slope::Infinite => (1, 0),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Slope::Infinite)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Slope::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Slope::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let t = s.trim();
        if matches!(t, "inf" | "infinity" | "∞" | "1/0") {
            return Ok(Slope::Infinite);
        }
        let bad = || Error::InvalidParameter(format!("cannot parse slope {s:?}"));
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|_| bad())?,
                d.trim().parse::<i64>().map_err(|_| bad())?,
            ),
            None => (t.parse::<i64>().map_err(|_| bad())?, 1),
        };
        if n == 0 && d == 0 {
            return Err(bad());
        }
        Ok(Slope::from_parts(n, d))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiberTopology {
    pub genus: u64,
    pub boundary_alpha: u64,
    pub boundary_beta: u64,
    pub boundary_gamma: u64,
    pub prongs_alpha: u64,
    pub prongs_beta: u64,
    pub prongs_gamma: u64,
    pub orientable: bool,
}

impl FiberTopology {
    pub fn total_boundary(&self) -> u64 {
        self.boundary_alpha + self.boundary_beta + self.boundary_gamma
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.total_boundary() as i64
    }

    /// `Σ_{g,n}`.
    pub fn surface_name(&self) -> String {
        format!("Σ_{{{},{}}}", self.genus, self.total_boundary())
    }
}

/// For every `0 <= s <= g`, `gcd(2g+1, s) = 1` or `gcd(2g+1, s+1) = 1`.
pub fn satisfies_star(g: i64) -> Result<bool> {
    if g < 2 {
        return Err(Error::InvalidParameter(format!(
            "the coprimality condition needs g >= 2, got {g}"
        )));
    }
    let m = 2 * g + 1;
    Ok((0..=g).all(|s| m.gcd(&s) == 1 || m.gcd(&(s + 1)) == 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: i64, y: i64, z: i64) -> FiberedClass {
        FiberedClass::new(x, y, z).unwrap()
    }

    #[test]
    fn fibered_predicate() {
        assert!(is_fibered(2, 6, 1));
        assert!(!is_fibered(1, 1, 1));
        assert!(is_fibered(3, 5, 0));
        assert!(!is_fibered(0, 0, 0));
        assert!(FiberedClass::new(0, 0, 0).is_err());
    }

    #[test]
    fn norms() {
        assert_eq!(c(2, 6, 1).norm(), 7);
        assert_eq!(c(1, 1, 0).norm(), 2);
        assert_eq!(c(3, 5, 0).norm(), 8);
    }

    #[test]
    fn ijk_conversions() {
        assert_eq!(IjkClass::plus(1, 4, 1).unwrap().to_xyz(), c(2, 6, 1));
        assert_eq!(IjkClass::minus(3, 1, 1).unwrap().to_xyz(), c(1, 2, -3));
        assert_eq!(IjkClass::zero(2, 3).unwrap().to_xyz(), c(3, 5, 0));

        assert_eq!(
            IjkClass::from_xyz(&c(2, 6, 1)).unwrap(),
            IjkClass::plus(1, 4, 1).unwrap()
        );
        assert_eq!(
            IjkClass::from_xyz(&c(1, 2, -3)).unwrap(),
            IjkClass::minus(3, 1, 1).unwrap()
        );
        assert_eq!(IjkClass::from_xyz(&c(3, 5, 0)).unwrap(), IjkClass::zero(2, 3).unwrap());
    }

    #[test]
    fn from_xyz_refuses_to_swap_silently() {
        let err = IjkClass::from_xyz(&c(6, 2, 1)).unwrap_err();
        assert!(matches!(err, Error::SwapRequired { .. }));
    }

    #[test]
    fn zero_forms_agree_across_signs() {
        assert_eq!(IjkClass::plus(0, 2, 3).unwrap(), IjkClass::minus(0, 2, 3).unwrap());
        assert!(IjkClass::plus(1, 0, 0).is_err());
    }

    #[test]
    fn primitivity() {
        assert!(c(2, 6, 1).is_primitive());
        assert!(!is_primitive_triple(2, 4, 2));
        assert!(!c(4, 6, 2).is_primitive());
        assert!(c(3, 5, 0).is_primitive());
    }

    #[test]
    fn topology_of_quoted_examples() {
        let t = c(2, 6, 1).fiber_topology().unwrap();
        assert_eq!(t.genus, 2);
        assert_eq!((t.boundary_alpha, t.boundary_beta, t.boundary_gamma), (1, 3, 1));
        assert_eq!(t.total_boundary(), 5);
        assert_eq!((t.prongs_alpha, t.prongs_beta, t.prongs_gamma), (2, 2, 6));
        assert!(t.orientable);
        assert_eq!(t.surface_name(), "Σ_{2,5}");

        let t = c(3, 5, 0).fiber_topology().unwrap();
        assert_eq!(t.genus, 0);
        assert_eq!((t.boundary_alpha, t.boundary_beta, t.boundary_gamma), (1, 1, 8));
        assert_eq!((t.prongs_alpha, t.prongs_beta, t.prongs_gamma), (3, 5, 1));
        assert!(!t.orientable);

        let g = 4;
        let t = c(g, 2 * g + 2, 1).fiber_topology().unwrap();
        assert_eq!(t.genus, 4);
        assert_eq!(t.total_boundary(), 7);
    }

    #[test]
    fn topology_rejects_non_primitive() {
        let err = c(4, 6, 2).fiber_topology().unwrap_err();
        assert_eq!(
            err,
            Error::NotPrimitive {
                x: 4,
                y: 6,
                z: 2,
                gcd: 2
            }
        );
    }

    #[test]
    fn gcd_with_zero_is_absolute_value() {
        assert_eq!(gcd0(0, -8), 8);
        assert_eq!(c(1, 2, -3).boundary_counts(), [1, 2, 3]);
    }

    #[test]
    fn swap() {
        assert_eq!(c(2, 6, 1).swap_symmetry(), c(6, 2, 1));
        assert_eq!(c(1, 2, -3).swap_symmetry(), c(2, 1, -3));
        assert_eq!(c(3, 5, 0).swap_symmetry(), c(5, 3, 0));
    }

    #[test]
    fn face_projection() {
        let p = c(2, 6, 1).projection_to_face();
        assert_eq!((p.u, p.v), (Ratio::new(2, 7), Ratio::new(6, 7)));
        let p = c(1, 1, 0).projection_to_face();
        assert_eq!((p.u, p.v), (Ratio::new(1, 2), Ratio::new(1, 2)));
        // (g, 2g+2, 1) tends to [1/3, 2/3].
        let g = 1_000_000;
        let p = c(g, 2 * g + 2, 1).projection_to_face();
        assert!(num_traits::Signed::abs(&(p.u - Ratio::new(1, 3))) < Ratio::new(1, 100_000));
        assert!(num_traits::Signed::abs(&(p.v - Ratio::new(2, 3))) < Ratio::new(1, 100_000));
    }

    #[test]
    fn slopes() {
        let [a, b, g] = c(2, 6, 1).boundary_slopes();
        assert_eq!(a, Slope::Finite(Ratio::new(-7, 2)));
        assert_eq!(b, Slope::Finite(Ratio::new(-1, 2)));
        assert_eq!(g, Slope::Finite(Ratio::new(-8, 1)));
        for g in 2..20 {
            assert_eq!(
                c(g, 2 * g + 2, 1).boundary_slopes()[1],
                Slope::Finite(Ratio::new(-1, 2))
            );
        }
        assert_eq!(c(3, 5, 0).boundary_slopes()[2], Slope::Infinite);
        assert_eq!("1/-2".parse::<Slope>().unwrap(), Slope::Finite(Ratio::new(-1, 2)));
        assert_eq!("inf".parse::<Slope>().unwrap(), Slope::Infinite);
        assert_eq!(Slope::Finite(Ratio::new(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn star_condition() {
        assert!(satisfies_star(2).unwrap());
        assert!(satisfies_star(3).unwrap());
        assert!(!satisfies_star(7).unwrap());
        assert!(satisfies_star(1).is_err());
    }

    #[test]
    fn star_condition_matches_brute_force() {
        fn gcd(a: i64, b: i64) -> i64 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        for g in 2..200 {
            let m = 2 * g + 1;
            let brute = (0..=g).all(|s| gcd(m, s) == 1 || gcd(m, s + 1) == 1);
            assert_eq!(satisfies_star(g).unwrap(), brute, "g = {g}");
        }
    }
}
