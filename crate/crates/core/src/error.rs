use std::fmt;

use thiserror::Error;

/// Axioms checked by [`crate::root_datum::BasedRootDatum::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Shape,
    Pairing,
    Negation,
    Distinct,
    Reduced,
    RootReflection,
    CorootReflection,
    SimplePositivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Shape => "vector shape",
            Axiom::Pairing => "pairing axiom",
            Axiom::Negation => "closure under negation",
            Axiom::Distinct => "distinct roots",
            Axiom::Reduced => "reducedness",
            Axiom::RootReflection => "reflection closure of roots",
            Axiom::CorootReflection => "reflection closure of coroots",
            Axiom::SimplePositivity => "simple-root positivity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{axiom} violated at root {index}")]
    Axiom { axiom: Axiom, index: usize },
    #[error("unsupported group {family}{n}")]
    UnsupportedFamily { family: String, n: usize },
    #[error("twist does not preserve the datum: {0}")]
    TwistMismatch(String),
    #[error("{what} exceeds bound {bound} (needs {size})")]
    BoundExceeded { what: &'static str, bound: u64, size: u64 },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("automorphism does not preserve the group")]
    NotPreserved,
    #[error("datum has roots; a torus is required")]
    NotATorus,
    #[error("incompatible pair: {0}")]
    Incompatible(String),
    #[error("no compatible Frobenius for {0}")]
    NoCompatibleFrobenius(String),
    #[error("unsupported exceptional factor {0}")]
    UnsupportedFactor(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
