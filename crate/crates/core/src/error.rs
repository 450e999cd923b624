use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frame must contain at least one element")]
    EmptyFrame,
    #[error("duplicate label {0:?} in frame")]
    DuplicateLabel(String),
    #[error("frame has {0} elements, at most {max} are supported", max = crate::MAX_FRAME_SIZE)]
    FrameTooLarge(usize),
    #[error("focal set must not be empty")]
    EmptyFocalSet,
    #[error("unknown element {0:?}")]
    UnknownLabel(String),
    #[error("element index {index} is outside 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("mass {0} is negative or not finite")]
    InvalidMass(f64),
    #[error("masses sum to {0}, expected 1")]
    MassSum(f64),
    #[error("operands are defined on different frames")]
    FrameMismatch,
    #[error("total conflict (k = {0}): the orthogonal sum does not exist")]
    TotalConflict(f64),
    #[error("nothing to combine")]
    NothingToCombine,
    #[error("no candidates to rank")]
    EmptyCandidates,
    #[error("negative quadratic form {0} (numerical fault)")]
    NegativeRadicand(f64),
    #[error("unknown distance measure {0:?}")]
    UnknownMeasure(String),
}
