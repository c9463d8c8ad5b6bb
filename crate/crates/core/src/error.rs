use std::fmt;

use thiserror::Error;

/// Which law of a monoid action was broken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionAxiom {
    /// `1 ⋆ a = a`
    A1,
    /// `(b1 b2) ⋆ a = b1 ⋆ (b2 ⋆ a)`
    A2,
    /// `b ⋆ 1 = 1`
    A3,
    /// `b ⋆ (a1 a2) = (b ⋆ a1)(b ⋆ a2)`
    A4,
}

impl fmt::Display for ActionAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ActionAxiom::A1 => "A1",
            ActionAxiom::A2 => "A2",
            ActionAxiom::A3 => "A3",
            ActionAxiom::A4 => "A4",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("table must be a non-empty square array, got {rows} rows (row {bad_row} has length {len})")]
    NotSquare { rows: usize, bad_row: usize, len: usize },

    #[error("entry {value} at ({row}, {col}) is outside [0, {size})")]
    IndexOutOfRange { row: usize, col: usize, value: usize, size: usize },

    #[error("element {value} is outside [0, {size})")]
    ElementOutOfRange { value: usize, size: usize },

    #[error("operation is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },

    #[error("table has no two-sided identity")]
    NoIdentity,

    #[error("declared identity {declared} does not match the table's identity {found}")]
    IdentityMismatch { declared: usize, found: usize },

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("{what}: size {size} exceeds the exhaustive bound {bound}")]
    SizeBoundExceeded { what: &'static str, size: usize, bound: usize },

    #[error("subset is not a submonoid: {0}")]
    NotASubmonoid(String),

    #[error("submonoids belong to different parent monoids")]
    ParentMismatch,

    #[error("map is not total into its codomain: {0}")]
    NotAMap(String),

    #[error("map is not a monoid homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("element {0} is not invertible in the required submonoid")]
    NotInvertible(usize),

    #[error("submonoid is not a subgroup")]
    NotASubgroup,

    #[error("map is not a descent cocycle: {0}")]
    NotACocycle(String),

    #[error("pair is not a factorization")]
    NotAFactorization,

    #[error("action axiom {axiom} fails at {witness:?}")]
    AxiomViolation { axiom: ActionAxiom, witness: Vec<usize> },

    #[error("action does not relate the given monoids")]
    ActionMismatch,

    #[error("cocycle is not unit-valued at {0}")]
    NotUnitValued(usize),

    #[error("not a split pair: {0}")]
    NotASplitPair(String),

    #[error("map is not a unit-valued homomorphism: {0}")]
    NotUnitValuedHom(String),

    #[error("not a group action on the given objects: {0}")]
    NotAnAction(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
