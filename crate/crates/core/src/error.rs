use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("invalid word literal {literal:?}: {reason}")]
    InvalidWord {
        literal: String,
        reason: &'static str,
    },

    #[error("malformed automaton: {0}")]
    InvalidNfa(String),

    #[error("invalid state sequence: {0}")]
    InvalidStateSequence(String),

    #[error("new edge {from}->{to} at position {position} enters state {to}, which already lies on a closed lump")]
    LumpViolation {
        position: usize,
        from: usize,
        to: usize,
    },

    #[error("no path from the initial to the accepting state")]
    NoPath,

    #[error("no witness with at most {0} states")]
    NoWitness(usize),

    #[error("word of length {0} exceeds the search limit of {max}", max = crate::search::MAX_WORD_LEN)]
    WordTooLong(usize),

    #[error("necklace sum for n = {0} is not divisible by n")]
    NonIntegralNecklaceCount(u32),

    #[error(
        "census length {n} exceeds the feasibility limit {limit}; pass an override to force it"
    )]
    OverLimit { n: usize, limit: usize },

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("cache file {path}: {reason}")]
    Cache { path: PathBuf, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
