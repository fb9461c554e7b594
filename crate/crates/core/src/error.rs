use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {}: {source}", path.display())]
    Load { path: PathBuf, source: io::Error },

    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },

    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },

    /// A `word_TAG` token without a usable tag.
    #[error("line {line}, token {token_index}: `{token}` is not a word_TAG pair")]
    Tagged {
        line: usize,
        token_index: usize,
        token: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid synset record: {0}")]
    Validation(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("report output failed: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn load(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Load {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(source_name: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            source_name: source_name.into(),
            line,
            message: message.into(),
        }
    }
}
