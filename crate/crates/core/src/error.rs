use crate::polynomial::IntPolynomial;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("class ({x},{y},{z}) is not fibered: need x>0, y>0, x>z, y>z")]
    NotFibered { x: i64, y: i64, z: i64 },

    #[error("class ({x},{y},{z}) is not primitive (gcd {gcd}); its fiber is disconnected")]
    NotPrimitive { x: i64, y: i64, z: i64, gcd: i64 },

    #[error("class ({x},{y},{z}) has y < x; apply the swap (x,y,z) -> (y,x,z) first")]
    SwapRequired { x: i64, y: i64, z: i64 },

    #[error("invalid (i,j,k) coordinates ({i},{j},{k}): k must be positive")]
    InvalidCoordinates { i: i64, j: i64, k: i64 },

    #[error("Lanneau-Thiffeault polynomial needs a > b >= 0, got ({a},{b})")]
    InvalidLanneauThiffeault { a: i64, b: i64 },

    #[error("the zero polynomial has no roots to isolate")]
    ZeroPolynomial,

    #[error("division is not exact; remainder {remainder}")]
    NotDivisible { remainder: IntPolynomial },

    #[error("no real root in [1, {bound}] (no sign change detected)")]
    NoRootAboveOne { bound: String },

    #[error("no root in the unit interval (0, 1]")]
    NoRootInUnitInterval,

    #[error("tolerance must be positive")]
    NonPositiveTolerance,

    #[error("digraph is not strongly connected ({components} strong components)")]
    NotStronglyConnected { components: usize },

    #[error("power iteration did not converge within {iterations} iterations")]
    PowerIterationDiverged { iterations: usize },

    #[error("edge lengths must be positive")]
    ZeroLengthEdge,

    #[error("family {family} does not accept parameters ({i},{j},{k}): {reason}")]
    FamilyMismatch {
        family: String,
        i: i64,
        j: i64,
        k: i64,
        reason: String,
    },

    #[error("curve complex has a loop or a repeated edge at ({0},{1})")]
    MalformedComplex(usize, usize),

    #[error("sequence {sequence} rejects parameter {param}: {required}")]
    Congruence {
        sequence: String,
        param: String,
        required: String,
    },

    #[error("class ({x},{y},{z}) is not in the section {section}")]
    NotInSection { x: i64, y: i64, z: i64, section: String },

    #[error("slope {slope} is exceptional: the filling is not hyperbolic")]
    ExceptionalSlope { slope: String },

    #[error("norm bound {requested} exceeds the configured cap {cap}")]
    CapExceeded { requested: i64, cap: i64 },

    #[error("{0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
