use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the toolkit can report.
///
/// Each variant maps onto a stable process exit code via [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("cipher has {cipher} units but key has {key}")]
    LengthMismatch { cipher: usize, key: usize },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("dictionary has no {0}")]
    EmptyBucket(BucketQuery),

    #[error("malformed stego input at line {line}: {reason}")]
    MalformedStego { line: usize, reason: String },

    #[error("cover too short: need {needed} usable words, found {found}")]
    CoverTooShort { needed: usize, found: usize },

    #[error("key letter {key_index} ('{letter}') matches neither end of word {token_index}")]
    KeyMismatch {
        key_index: usize,
        token_index: usize,
        letter: char,
    },

    #[error("bit count {0} is not a multiple of 8")]
    BadBitCount(usize),

    #[error("cover size must be greater than zero")]
    ZeroCover,

    #[error("cover has {cover} lines but stego has {stego}")]
    LineCountMismatch { cover: usize, stego: usize },

    #[error("invalid similarity parameters: {0}")]
    InvalidParams(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) | Error::Parse { .. } | Error::Usage(_) => 2,
            Error::LengthMismatch { .. } => 3,
            Error::EmptyBucket(_) => 4,
            Error::CoverTooShort { .. } => 5,
            Error::MalformedStego { .. } | Error::KeyMismatch { .. } | Error::BadBitCount(_) => 6,
            Error::ZeroCover | Error::LineCountMismatch { .. } | Error::InvalidParams(_) => 7,
        }
    }

    pub(crate) fn malformed(line: usize, reason: impl Into<String>) -> Self {
        Error::MalformedStego {
            line,
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(line: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            line,
            reason: reason.into(),
        }
    }
}

/// The (length, initial, gloss) combination a word lookup asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BucketQuery {
    pub length: usize,
    pub initial: Option<char>,
    pub needs_gloss: bool,
}

impl fmt::Display for BucketQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.needs_gloss {
            f.write_str("glossed ")?;
        }
        write!(f, "{}-letter word", self.length)?;
        if let Some(c) = self.initial {
            write!(f, " starting with '{c}'")?;
        }
        Ok(())
    }
}
