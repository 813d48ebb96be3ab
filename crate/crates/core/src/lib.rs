use std::fmt;

pub mod certificates;
pub mod model;
pub mod planarity;
pub mod oracles;
pub mod pqtree;
pub mod solver;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Document is not valid JSON or does not follow the schema.
    Malformed(String),
    /// Document has a `kind` we do not recognize.
    UnknownKind(String),
    /// Document parses but violates a semantic invariant.
    Invariant(String),
    /// Instance is outside what the requested operation handles.
    Unsupported(String),
    /// Exploration budget exhausted before reaching a verdict.
    Budget(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Malformed(m) => write!(f, "malformed input: {m}"),
            Error::UnknownKind(k) => write!(f, "unknown instance kind `{k}`"),
            Error::Invariant(m) => write!(f, "invariant violation: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported instance: {m}"),
            Error::Budget(m) => write!(f, "budget exceeded: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
