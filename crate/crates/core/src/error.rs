use thiserror::Error;

use crate::sets::{GeneratorSet, KSet};

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the library. Variants that certify a
/// failed property carry the witnessing sets so callers can print them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context requires 4 <= 2k <= n, got n={n} k={k}")]
    InvalidContext { n: u32, k: u32 },
    #[error("element {element} outside [1, {n}]")]
    ElementOutOfRange { element: u32, n: u32 },
    #[error("elements must be strictly increasing (position {position})")]
    NotIncreasing { position: usize },
    #[error("expected {expected} elements, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("generator must be nonempty")]
    EmptyGenerator,
    #[error("generator has {got} elements, more than k={k}")]
    GeneratorTooLong { got: usize, k: u32 },
    #[error("duplicate set {set}")]
    DuplicateSet { set: String },
    #[error("empty family")]
    EmptyFamily,
    #[error("empty generator collection")]
    EmptyCollection,
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("level {level} outside [1, {n}]")]
    LevelOutOfRange { level: u32, n: u32 },
    #[error("operands belong to different contexts")]
    ContextMismatch,
    #[error("family is not left-compressed: contains {member} but not {missing}")]
    NotLeftCompressed { member: KSet, missing: KSet },
    #[error("family is not intersecting: {left} and {right} are disjoint")]
    NotIntersecting { left: KSet, right: KSet },
    #[error("generator {generator} incompatible with any intersecting family (smallest element exceeds k)")]
    IncompatibleGenerator { generator: GeneratorSet },
    #[error("criterion holds at level {level}; no disjoint witness exists")]
    CriterionHolds { level: u32 },
    #[error("witness padding needs {needed} elements but only {available} remain")]
    NoPaddingRoom { needed: usize, available: usize },
    #[error("shift requires 1 <= i < j <= n, got i={i} j={j} n={n}")]
    InvalidShift { i: u32, j: u32, n: u32 },
    #[error("{vertices} k-sets exceed the enumeration budget {budget}")]
    BudgetExceeded { vertices: usize, budget: usize },
    #[error("missing '{what}' line")]
    MissingHeader { what: &'static str },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("empty input: document contains no G or S lines")]
    EmptyInput,
}
