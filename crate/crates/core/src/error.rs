use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read corpus at {path}")]
    Ingest {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("corpus at {0} contains no documents")]
    NoDocuments(PathBuf),

    #[error("not a SentiWordNet file: no parseable data lines ({malformed} malformed)")]
    NotSentiWordNet { malformed: usize },

    #[error("cannot read {what}")]
    Resource {
        what: String,
        #[source]
        source: io::Error,
    },

    #[error("cannot build a vocabulary index from zero documents")]
    EmptyIndex,

    #[error("verdict for unknown document {0:?}")]
    UnknownDocument(String),

    #[error("no verdict for document {0:?}")]
    MissingVerdict(String),

    #[error("duplicate verdict for document {0:?}")]
    DuplicateVerdict(String),

    #[error("report for {category:?} does not partition: {positive} + {negative} + {neutral} != {total}")]
    BrokenPartition {
        category: String,
        total: usize,
        positive: usize,
        negative: usize,
        neutral: usize,
    },

    #[error("nothing to render")]
    EmptyReport,

    #[error("invalid report csv: {0}")]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] io::Error),
}
