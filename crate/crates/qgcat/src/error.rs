use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context to
/// be reported without the call site.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("colour clash at position {0}: contraction needs opposite colours")]
    ColourClash(usize),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("operation needs a non-empty word")]
    EmptyWord,
    #[error("frame matrix is singular")]
    SingularFrame,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("cutoff violation: {0}")]
    Cutoff(String),
    #[error("frame or cutoff mismatch: {0}")]
    TableMismatch(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
