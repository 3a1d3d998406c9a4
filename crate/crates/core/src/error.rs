// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed arguments or inputs violating an operation's precondition.
    #[error("invalid input: {0}")]
    Input(String),

    /// The graph has a directed cycle where a DAG was required.
    #[error("graph contains a directed cycle")]
    Cyclic,

    /// A quadratic-memory computation was asked for more vertices than allowed.
    #[error("capacity exceeded: {n} vertices, cap is {cap}")]
    Capacity { n: usize, cap: usize },

    /// A tree decomposition failed validation.
    #[error("invalid tree decomposition: {0}")]
    Decomposition(String),

    /// A text file could not be parsed.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
