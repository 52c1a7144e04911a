//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point is not valid for this line: {0}")]
    InvalidPoint(String),
    #[error("objects live on different lines")]
    LineMismatch,
    #[error("point is not right-isolated: {0}")]
    NotRightIsolated(String),
    #[error("line is not zero-dimensional; operation requires Finite, Ordinal or LexDouble")]
    NotZeroDimensional,
    #[error("line variant not supported here: {0}")]
    UnsupportedLine(String),
    #[error("clopen partition must contain the maximum of the line")]
    MaxMissingFromCuts,
    #[error("basis functions are linearly dependent")]
    DependentBasis,
    #[error("linear program is unbounded")]
    LpUnbounded,
    #[error("linear program is infeasible")]
    LpInfeasible,
    #[error("dual vector is incompatible with this operator variant")]
    IncompatibleDualVector,
    #[error("hierarchy did not stabilize within {0} stages")]
    NotStabilized(usize),
    #[error("no admissible schedule index within horizon {0}")]
    ScheduleNotFound(u32),
    #[error("measure must have total mass zero")]
    MassNotZero,
    #[error("skeleton target set is empty but the measure has nonzero mass on the interval")]
    EmptySkeletonTarget,
    #[error("sequence bound violated: sup norm exceeds {0}")]
    BoundViolated(String),
    #[error("extension requires an Extendable criterion verdict")]
    NotExtendable,
    #[error("enumeration cap exceeded while scanning ordinal points")]
    EnumerationCap,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),
}
