use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or transforming algebras and modules.
///
/// Indices are 1-based vertex labels, matching the text form of sequences.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse sequence: {0}")]
    Parse(String),
    #[error("admissible sequence is empty")]
    EmptySequence,
    #[error("entry c_{index} = {value} is not positive")]
    NonPositiveEntry { index: usize, value: i64 },
    #[error("c_{next} = {next_value} < c_{index} - 1 = {bound} (rad P_{index} is not a factor of P_{next})")]
    ViolatesFactorCondition {
        index: usize,
        next: usize,
        next_value: usize,
        bound: usize,
    },
    #[error("line algebra has c_{index} = 1 before the last vertex")]
    LineEntryTooSmall { index: usize },
    #[error("c_{index} = 1 is a simple projective inside a sequence whose last entry is not 1")]
    MixedKind { index: usize },
    #[error("operation requires a cycle algebra")]
    NotCycleAlgebra,
    #[error("rotation {r} out of range for n = {n}")]
    RotationOutOfRange { r: usize, n: usize },
    #[error("sequence is self-injective")]
    AlreadySelfInjective,
    #[error("sequence is not normalized (need c_1 = p(A) = c_n - 1)")]
    NotNormalized,
    #[error("pi needs n >= 2, got {0}")]
    PiDomainTooSmall(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid arrow table: {0}")]
    InvalidQuiver(String),
    #[error("vertex list {0:?} is not a cycle of the resolution quiver")]
    NotACycle(Vec<usize>),
    #[error("no uniserial module with top {top} and length {len}")]
    InvalidModule { top: usize, len: usize },
    #[error("zero module")]
    ZeroModule,
    #[error("module is projective")]
    ProjectiveModule,
    #[error("module is injective")]
    InjectiveModule,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolated(String),
}
