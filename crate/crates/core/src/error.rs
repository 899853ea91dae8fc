use thiserror::Error;

/// Errors raised by the algebra, representation and ideal routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: u32, n: usize },

    #[error("dimension n must be at least 1")]
    ZeroDimension,

    #[error("point is not on the unit sphere (sum of |z_i|^2 = {norm})")]
    NotOnSphere { norm: String },

    #[error("crossed-product components must have T-weights 0 and 1")]
    WrongWeight,

    #[error("point is not real")]
    NotReal,

    #[error("point is regular; its 2-dimensional representation does not split")]
    RegularPoint,

    #[error("element has a nonzero odd component")]
    NotEven,

    #[error("generator {index} is not even")]
    OddGenerator { index: usize },

    #[error("span of the generated even ideal is not gamma-stable at degree {degree}")]
    GammaUnstable { degree: usize },

    #[error("ideal is not Z2-graded at degree {degree}")]
    NotGraded { degree: usize },

    #[error("element of degree {degree} exceeds the degree bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("exact arithmetic required; approximate points are not supported here")]
    ExactRequired,

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("expression mixes the v and p alphabets")]
    MixedAlphabets,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
