use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not invertible: {0} has no inverse modulo {1}")]
    NotInvertible(u32, u32),

    #[error("field mismatch: operands live in different fields")]
    FieldMismatch,

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("p must be prime (got {0})")]
    NotPrime(u64),

    #[error("link parameters: gcd({m}, {n}) = {gcd}, K({m},{n}) is a link, not a knot")]
    LinkParameters { m: u64, n: u64, gcd: u64 },

    #[error("invalid knot parameters: m and n must be positive (got m={m}, n={n})")]
    InvalidKnot { m: u64, n: u64 },

    #[error("tuple does not color K({m},{n})")]
    NotAColoring { m: u64, n: u64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("search infeasible: {0}")]
    SearchInfeasible(String),

    #[error("not in GL: matrix {0} is singular")]
    NotInGl(String),

    #[error("not type 4: x^2 - {b}x - {a} is reducible over F_{q}")]
    NotType4 { a: u32, b: u32, q: u32 },

    #[error("use recurrence path: the closed form needs an odd characteristic")]
    UseRecurrencePath,

    #[error("use criterion path: closed-form predicates require an odd prime p")]
    UseCriterionPath,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("group too large: {0}")]
    TooLarge(String),

    #[error("internal error: {0}")]
    Internal(String),
}
