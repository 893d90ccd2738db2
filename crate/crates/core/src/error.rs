use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{msg}, line {line}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("target has {0} vertices, at most 128 are supported")]
    TargetTooLarge(usize),
    #[error("work budget of {0} branch nodes exceeded (raise HOMLAB_MAX_WORK to allow more)")]
    WorkBudget(u64),
    #[error("comparison still undecided at {0} bits of precision")]
    Uncertain(u32),
    #[error("no distinguishing graph found with at most {0} vertices")]
    SearchExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
