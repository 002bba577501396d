use std::fmt;

use crate::cipher::Role;

/// Why a mesh file failed to parse.
#[derive(Debug, Clone, PartialEq)]
pub enum ParseErrorKind {
    MalformedHeader(String),
    MalformedLine(String),
    NonNumeric(String),
    IndexOutOfRange { index: i64, vertex_count: usize },
    NonTriangle(usize),
    BinaryPly,
    UnexpectedEof,
    TrailingData,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MalformedHeader(what) => write!(f, "malformed header: {what}"),
            ParseErrorKind::MalformedLine(what) => write!(f, "malformed line: {what}"),
            ParseErrorKind::NonNumeric(tok) => write!(f, "non-numeric value {tok:?}"),
            ParseErrorKind::IndexOutOfRange { index, vertex_count } => {
                write!(f, "vertex index {index} out of range for {vertex_count} vertices")
            }
            ParseErrorKind::NonTriangle(k) => write!(f, "face with {k} vertices, only triangles are supported"),
            ParseErrorKind::BinaryPly => write!(f, "binary PLY is not supported, convert to ASCII"),
            ParseErrorKind::UnexpectedEof => write!(f, "unexpected end of file"),
            ParseErrorKind::TrailingData => write!(f, "unexpected data after the last element"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("vertex {vertex}: coordinate {value} is outside the open interval (-1, 1)")]
    Domain { vertex: usize, value: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("payload of {requested} bits exceeds capacity of {capacity} bits")]
    Capacity { requested: u64, capacity: u64 },

    #[error("corrupt container: {0}")]
    Corrupt(String),

    #[error("wrong key role: expected {expected}, got {actual}")]
    WrongRole { expected: Role, actual: Role },

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, kind: ParseErrorKind) -> Self {
        Error::Parse { line, kind }
    }

    pub(crate) fn corrupt(msg: impl Into<String>) -> Self {
        Error::Corrupt(msg.into())
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::WrongRole { .. } => 2,
            Error::Parse { .. } | Error::Domain { .. } | Error::Json(_) => 3,
            Error::Capacity { .. } => 4,
            Error::Corrupt(_) => 5,
            Error::Invalid(_) | Error::Io(_) | Error::Csv(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
