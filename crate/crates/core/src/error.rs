use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed document: {0}")]
    Document(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("vertex `{0}` is not in the vertex support")]
    NotInSupport(String),
    #[error("vertex sets overlap on `{0}`")]
    OverlappingVertices(String),
    #[error("{0} is not a subset of the vertex set")]
    NotASubset(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("vertex `{0}` is not colored")]
    Uncolored(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("infeasible instance spec: {0}")]
    InfeasibleSpec(String),
    #[error("{count} vertices exceed the capacity limit of {limit}")]
    Capacity { count: usize, limit: usize },
}

/// Coarse classification used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input text, documents or labels.
    Input,
    /// Well-formed input outside an operation's domain.
    Domain,
    Capacity,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. }
            | Error::Document(_)
            | Error::DuplicateLabel(_)
            | Error::UnknownVertex(_)
            | Error::MalformedCertificate(_)
            | Error::InfeasibleSpec(_) => ErrorKind::Input,
            Error::NotAFace(_)
            | Error::NotInSupport(_)
            | Error::OverlappingVertices(_)
            | Error::NotASubset(_)
            | Error::InvalidColoring(_)
            | Error::Uncolored(_) => ErrorKind::Domain,
            Error::Capacity { .. } => ErrorKind::Capacity,
        }
    }
}
