use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} outside 1..=16")]
    DegreeOutOfRange(u32),
    #[error("field of size {0} exceeds the 2^20 element cap")]
    TooLarge(u64),
    #[error("operands belong to different fields")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("GF({q}) has no element of order {n}")]
    NoElementOfOrder { n: u64, q: u64 },
    #[error("X^q + X = c has no solution for this c")]
    Unsolvable,
    #[error("polynomial is not monic of positive degree")]
    NotMonic,
    #[error("unsupported field operation: {0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group exceeds the enumeration budget of {0} elements")]
    BudgetExceeded(usize),
    #[error("element kind does not match the group law ({0})")]
    KindMismatch(String),
    #[error("element is not a member of the group")]
    NotMember,
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid central identification: {0}")]
    InvalidCentralIso(String),
    #[error("group is not a {0}-group")]
    NotPGroup(u64),
    #[error("group is not solvable")]
    NotSolvable,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
