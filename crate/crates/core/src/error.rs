use thiserror::Error;

use crate::arith::Scalar;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not divisible by the given affine form")]
    NotDivisible,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("a denominator factor vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("operation would create a non-linear denominator")]
    NonLinearDenominator,
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("group order exceeds cap {0}")]
    OrderCapExceeded(usize),
    #[error("not a root system: {0}")]
    NotARootSystem(String),
    #[error("subgroup is not parabolic")]
    NotParabolic,
    #[error("no parabolic representative found for {0:?}")]
    NoParabolicRepresentative(Vec<String>),
    #[error("character values are inconsistent with the group relations")]
    InconsistentCharacter,
    #[error("element is not in the group")]
    NotInGroup,

    #[error("stabilizer of {0:?} is not parabolic")]
    NotParabolicStabilizer(Vec<String>),
    #[error("coefficient is not invariant under the stabilizer of its shift")]
    NotInvariantCoefficient,
    #[error("word is not the longest shortest coset representative")]
    WrongLongestElement,
    #[error("operator is not invariant under the group")]
    NotInvariantOperator,

    #[error("output is not holomorphic at target {target:?}")]
    NotHolomorphicAtGerm { target: Vec<String> },
    #[error("local representative is not invariant under the stabilizer of {0:?}")]
    NotInvariantGerm(Vec<String>),
    #[error("generator {0} does not preserve invariant germs for the subgroup")]
    ModuleStructureMissing(usize),
    #[error("point {0:?} is not in the lattice orbit")]
    NotInOrbit(Vec<String>),

    #[error("coefficient has a pole on the orbit at {0:?}")]
    PoleOnOrbit(Vec<String>),
    #[error("generator shifts are linearly dependent or empty")]
    DegenerateLattice,

    #[error("parse error: {0}")]
    Parse(String),
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub(crate) fn show_point(p: &[Scalar]) -> Vec<String> {
    p.iter().map(crate::arith::fmt_scalar).collect()
}
