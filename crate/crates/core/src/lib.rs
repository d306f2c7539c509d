//! Generalized linear one-way jumping finite automata.
//!
//! A right-linear automaton deletes a whole rule word per step, jumping over
//! text in which its current state can read nothing, and returns to the left
//! end of the remaining input when nothing ahead is readable. The
//! left-linear kind is the mirror image. This crate provides
//!
//! * the automaton type and its `.jfa` file format ([`automaton`], [`format`]),
//! * the step relation, membership search with shortest traces and bounded
//!   enumeration ([`engine`]), plus a brute-force rendering of the same
//!   relation ([`literal`]),
//! * reversal, a one-symbol reference simulator and bounded language
//!   comparison ([`transforms`]),
//! * a marked-tape linear-bounded machine for right-linear automata ([`lba`]),
//! * reference predicates and the bundled example automata ([`oracles`]),
//! * the `jumpfa` command line ([`cli`]).
//!
//! ```
//! use jumpfa::{engine, format, Word};
//!
//! let dyck = format::parse_automaton(
//!     "kind: grl\nalphabet: ab\nstates: q0\nstart: q0\nfinal: q0\nrule: q0 ab q0\n",
//! )
//! .unwrap();
//! assert!(engine::member(&dyck, &Word::from("aabb")).unwrap().accepted);
//! assert!(!engine::member(&dyck, &Word::from("abba")).unwrap().accepted);
//! ```

pub mod automaton;
pub mod cli;
pub mod engine;
pub mod error;
pub mod format;
pub mod lba;
pub mod literal;
pub mod oracles;
pub mod transforms;
pub mod word;

pub use automaton::{validate_automaton, Automaton, Kind, RawAutomaton, Rule, StateId};
pub use engine::{Configuration, Move, Trace};
pub use error::{Error, Result, ValidationError};
pub use word::Word;
