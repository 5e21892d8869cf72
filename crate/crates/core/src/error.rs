use alloc::string::String;

/// Errors raised by constructions and contract checks.
///
/// Failures of a *property* (a semigroup that is not Boolean, a morphism
/// that is not callitic) are reported through the report types of the
/// relevant module. This enum is for inputs that break an operation's
/// precondition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index {index} out of range for structure of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("empty set where a non-empty one is required: {0}")]
    EmptyInput(&'static str),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("poset has no bottom element")]
    NoBottom,
    #[error("not a meet semilattice: {0}")]
    NotMeetSemilattice(String),
    #[error("not a filter: {0}")]
    NotFilter(String),
    #[error("not an ultrafilter: {0}")]
    NotUltrafilter(String),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("not an inverse semigroup: {0}")]
    NotInverseSemigroup(String),
    #[error("not a group: {0}")]
    NotGroup(String),
    #[error("not a groupoid: {0}")]
    NotGroupoid(String),
    #[error("not a Boolean inverse semigroup: {0}")]
    NotBoolean(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("not a functor: {0}")]
    NotFunctor(String),
    #[error("elements {0} and {1} are not compatible")]
    Incompatible(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size cap exceeded: {what} would have {size} elements (cap {cap})")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("not an additive ideal: {0}")]
    NotAdditiveIdeal(String),
    #[error("not callitic: {0}")]
    NotCallitic(String),
    #[error("not a covering functor: {0}")]
    NotCovering(String),
}

pub type Result<T> = core::result::Result<T, Error>;
