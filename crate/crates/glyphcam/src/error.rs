use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type.
///
/// Variants map onto the CLI exit-code categories: parse and integrity
/// failures exit 2, validation failures exit 3, numeric failures exit 4,
/// and I/O failures exit 5.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("unsupported character U+{codepoint:04X} ({ch:?}): no glyph in the font")]
    UnsupportedCharacter { ch: char, codepoint: u32 },

    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code for the CLI: 2 parse, 3 validation, 4 numeric, 5 I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse { .. } | Error::Integrity(_) => 2,
            Error::Validation(_) | Error::UnsupportedCharacter { .. } => 3,
            Error::Numeric(_) => 4,
            Error::Io { .. } => 5,
        }
    }
}
