use std::fmt;

use thiserror::Error;

/// A single violation found while validating an automaton description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("no start state declared")]
    MissingStart,
    #[error("unknown state `{name}` referenced by {context}")]
    UnknownState { name: String, context: String },
    #[error("symbol `{symbol}` in {context} is not in the alphabet")]
    SymbolOutsideAlphabet { symbol: char, context: String },
    #[error("rule {from} -> {to} has an empty word")]
    EmptyRuleWord { from: String, to: String },
    #[error("more than one rule reads `{word}` from state {from}")]
    DuplicateRuleKey { from: String, word: String },
    #[error("`{0}` cannot be an alphabet symbol (printable non-whitespace ASCII only)")]
    InvalidSymbol(char),
}

/// Every violation found in one description, in discovery order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violations(pub Vec<ValidationError>);

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Violations {
    pub fn iter(&self) -> impl Iterator<Item = &ValidationError> {
        self.0.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid automaton: {0}")]
    Invalid(Violations),
    #[error("symbol `{symbol}` at position {position} is not in the alphabet")]
    SymbolOutsideAlphabet { symbol: char, position: usize },
    #[error("unknown state {0}")]
    UnknownState(String),
    #[error("automaton has a rule word longer than one symbol")]
    NotUnitRule,
    #[error("alphabets differ: `{left}` vs `{right}`")]
    AlphabetMismatch { left: String, right: String },
    #[error("expected a {expected} automaton")]
    WrongKind { expected: &'static str },
    #[error("unknown oracle `{0}`")]
    UnknownOracle(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
