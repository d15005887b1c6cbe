use alloc::string::String;

use crate::lie::{Family, GroupSpec, Root};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("family {family:?} needs rank at least {min}, got {rank}")]
    InvalidGroup { family: Family, rank: usize, min: usize },
    #[error("painting has no black nodes")]
    EmptyPainting,
    #[error("node {node} is outside 1..={nodes}")]
    NodeOutOfRange { node: usize, nodes: usize },
    #[error("{group}: last black node d-1 with node d white leaves a rank-one orthogonal factor; not supported")]
    UnitTail { group: GroupSpec },
    #[error("{0} is not a root")]
    NotARoot(Root),
    #[error("{0} is not a positive root")]
    NotPositive(Root),
    #[error("Poincaré product does not reduce to a polynomial")]
    PoincareNotPolynomial,
    #[error("Poincaré product overflowed")]
    PoincareOverflow,
    #[error("matrix position ({row}, {col}) receives two coordinate variables")]
    PositionCollision { row: usize, col: usize },
    #[error("truncation degrees differ: {0:?} vs {1:?}")]
    TruncationMismatch(Option<u32>, Option<u32>),
    #[error("product of two parameter-dependent coefficients is not linear in the Kähler parameters")]
    NonlinearCoefficient,
    #[error("logarithm series needs a polynomial with zero constant term")]
    NonzeroConstant,
    #[error("minor size {size} exceeds matrix size {matrix}")]
    MinorTooLarge { size: usize, matrix: usize },
    #[error("expected {expected} Kähler parameters, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("expansion degree must be at least 2, got {0}")]
    DegreeTooLow(u32),
    #[error("Kähler parameters must be positive")]
    NonPositiveCoefficient,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
