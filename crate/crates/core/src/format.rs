//! The line-based `.jfa` automaton file format.
//!
//! ```text
//! # Dyck language, right-linear
//! kind: grl
//! alphabet: ab
//! states: q0
//! start: q0
//! final: q0
//! rule: q0 ab q0
//! ```
//!
//! `#` starts a comment and blank lines are ignored. Header lines may come
//! in any order but all must precede the first `rule:` line. `final:` may be
//! empty or omitted. A rule is `FROM WORD TO`, read "in FROM, delete WORD,
//! enter TO" for both kinds.

use std::fmt::Write as _;

use crate::automaton::{validate_automaton, Automaton, Kind, RawAutomaton};
use crate::error::{Error, Result};
use crate::word::{is_symbol_char, EPSILON};

/// Parses and validates an automaton file.
pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let raw = parse_raw(text)?;
    validate_automaton(&raw).map_err(Error::Invalid)
}

/// Parses the file structure without checking automaton invariants.
pub fn parse_raw(text: &str) -> Result<RawAutomaton> {
    let mut kind = None;
    let mut alphabet = None;
    let mut states = None;
    let mut start = None;
    let mut finals = None;
    let mut rules = Vec::new();
    let mut last_line = 0;

    for (idx, full) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = full.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let syntax = |message: String| Error::Syntax { line, message };
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| syntax(format!("expected `key: value`, found `{content}`")))?;
        let key = key.trim();
        let value = value.trim();
        let fields: Vec<&str> = value.split_whitespace().collect();

        if key != "rule" && !rules.is_empty() {
            return Err(syntax(format!("header `{key}` after the first rule")));
        }
        let once = |slot: bool| {
            if slot {
                Err(syntax(format!("duplicate `{key}` line")))
            } else {
                Ok(())
            }
        };
        match key {
            "kind" => {
                once(kind.is_some())?;
                let k = match fields.as_slice() {
                    [k] => Kind::from_keyword(k),
                    _ => None,
                };
                kind = Some(k.ok_or_else(|| {
                    syntax(format!("kind must be `grl` or `gll`, found `{value}`"))
                })?);
            }
            "alphabet" => {
                once(alphabet.is_some())?;
                let symbols: String = fields.concat();
                if let Some(bad) = symbols.chars().find(|&c| !is_symbol_char(c)) {
                    return Err(syntax(format!("`{bad}` is not a printable ASCII symbol")));
                }
                alphabet = Some(symbols.chars().collect::<Vec<_>>());
            }
            "states" => {
                once(states.is_some())?;
                states = Some(fields.iter().map(|s| s.to_string()).collect::<Vec<_>>());
            }
            "start" => {
                once(start.is_some())?;
                match fields.as_slice() {
                    [s] => start = Some(s.to_string()),
                    _ => return Err(syntax("start takes exactly one state".into())),
                }
            }
            "final" => {
                once(finals.is_some())?;
                finals = Some(fields.iter().map(|s| s.to_string()).collect::<Vec<_>>());
            }
            "rule" => match fields.as_slice() {
                [from, word, to] => {
                    let word = if *word == EPSILON { "" } else { word };
                    rules.push((from.to_string(), word.to_string(), to.to_string()));
                }
                _ => {
                    return Err(syntax(format!(
                        "rule takes `FROM WORD TO`, found `{value}`"
                    )))
                }
            },
            other => return Err(syntax(format!("unknown key `{other}`"))),
        }
    }

    let missing = |what: &str| Error::Syntax {
        line: last_line,
        message: format!("missing `{what}` line"),
    };
    Ok(RawAutomaton {
        kind: kind.ok_or_else(|| missing("kind"))?,
        alphabet: alphabet.ok_or_else(|| missing("alphabet"))?,
        states: states.ok_or_else(|| missing("states"))?,
        start,
        finals: finals.unwrap_or_default(),
        rules,
    })
}

/// Canonical text for `aut`: fixed header order, states and rules in
/// declaration order, no comments.
pub fn serialize_automaton(aut: &Automaton) -> String {
    let mut out = String::new();
    let names = |ids: &mut dyn Iterator<Item = crate::automaton::StateId>| {
        ids.map(|s| aut.state_name(s)).collect::<Vec<_>>().join(" ")
    };
    writeln!(out, "kind: {}", aut.kind()).unwrap();
    writeln!(out, "alphabet: {}", aut.alphabet_str()).unwrap();
    writeln!(out, "states: {}", names(&mut aut.states())).unwrap();
    writeln!(out, "start: {}", aut.state_name(aut.start())).unwrap();
    let finals = names(&mut aut.finals());
    if finals.is_empty() {
        writeln!(out, "final:").unwrap();
    } else {
        writeln!(out, "final: {finals}").unwrap();
    }
    for r in aut.rules() {
        writeln!(
            out,
            "rule: {} {} {}",
            aut.state_name(r.from),
            r.word.as_str(),
            aut.state_name(r.to)
        )
        .unwrap();
    }
    out
}
