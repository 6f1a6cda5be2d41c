use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid index at {pos}: {source}")]
    Index {
        pos: usize,
        source: qpows_core::Error,
    },
    #[error("unknown order `{0}`")]
    UnknownOrder(String),
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("degree {degree} exceeds the limit {limit} (QPOWS_MAX_DEGREE)")]
    DegreeLimit { degree: u32, limit: u32 },
    #[error(transparent)]
    Core(#[from] qpows_core::Error),
}

impl CliError {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Self::Syntax {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn index(pos: usize, source: qpows_core::Error) -> Self {
        Self::Index { pos, source }
    }

    /// Byte offset into the input, for errors that have one.
    pub fn position(&self) -> Option<usize> {
        match self {
            Self::Syntax { pos, .. } | Self::Index { pos, .. } => Some(*pos),
            _ => None,
        }
    }
}
