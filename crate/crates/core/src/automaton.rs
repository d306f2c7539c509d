//! Automaton definition, validation and the per-state rule-word sets.
//!
//! Rules are always stored in "from → to" orientation: in state `from`,
//! delete `word`, enter `to`. This holds for both kinds; the left-linear
//! literature writes the same rule as the triple `(to, word, from)`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result, ValidationError, Violations};
use crate::word::{is_symbol_char, Word};

/// Scanning direction of a generalized linear one-way jumping automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Reads left to right, returns to the left end when stuck (`grl`).
    RightLinear,
    /// Reads right to left, returns to the right end when stuck (`gll`).
    LeftLinear,
}

impl Kind {
    pub fn flipped(self) -> Kind {
        match self {
            Kind::RightLinear => Kind::LeftLinear,
            Kind::LeftLinear => Kind::RightLinear,
        }
    }

    /// Keyword used in automaton files.
    pub fn keyword(self) -> &'static str {
        match self {
            Kind::RightLinear => "grl",
            Kind::LeftLinear => "gll",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Kind> {
        match s {
            "grl" => Some(Kind::RightLinear),
            "gll" => Some(Kind::LeftLinear),
            _ => None,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Index of a state in its automaton's state list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    pub from: StateId,
    pub word: Word,
    pub to: StateId,
}

/// An unvalidated automaton description, with states referred to by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawAutomaton {
    pub kind: Kind,
    pub alphabet: Vec<char>,
    pub states: Vec<String>,
    pub start: Option<String>,
    pub finals: Vec<String>,
    /// `(from, word, to)`.
    pub rules: Vec<(String, String, String)>,
}

/// A validated automaton. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    kind: Kind,
    alphabet: Vec<u8>,
    states: Vec<String>,
    start: StateId,
    finals: Vec<bool>,
    rules: Vec<Rule>,
    // Rule indices leaving each state, in declaration order.
    outgoing: Vec<Vec<usize>>,
}

/// The rule words readable from one state, in rule declaration order.
#[derive(Debug, Clone, Copy)]
pub struct SigmaP<'a> {
    aut: &'a Automaton,
    state: StateId,
}

impl<'a> SigmaP<'a> {
    pub fn iter(&self) -> impl Iterator<Item = &'a Word> + 'a {
        let aut = self.aut;
        aut.outgoing[self.state.0]
            .iter()
            .map(move |&i| &aut.rules[i].word)
    }

    pub fn len(&self) -> usize {
        self.aut.outgoing[self.state.0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, w: &[u8]) -> bool {
        self.iter().any(|x| x.as_bytes() == w)
    }

    pub fn to_vec(&self) -> Vec<Word> {
        self.iter().cloned().collect()
    }
}

/// Checks every invariant of `raw` and builds the automaton, or returns every
/// violation found.
pub fn validate_automaton(raw: &RawAutomaton) -> Result<Automaton, Violations> {
    let mut errors = Vec::new();

    let mut alphabet: Vec<u8> = Vec::new();
    for &c in &raw.alphabet {
        if !is_symbol_char(c) {
            errors.push(ValidationError::InvalidSymbol(c));
        } else if !alphabet.contains(&(c as u8)) {
            alphabet.push(c as u8);
        }
    }

    let mut states: Vec<String> = Vec::new();
    for s in &raw.states {
        if !states.contains(s) {
            states.push(s.clone());
        }
    }
    let lookup = |name: &str, context: &str, errors: &mut Vec<ValidationError>| {
        let id = states.iter().position(|s| s == name).map(StateId);
        if id.is_none() {
            errors.push(ValidationError::UnknownState {
                name: name.to_string(),
                context: context.to_string(),
            });
        }
        id
    };

    let start = match &raw.start {
        None => {
            errors.push(ValidationError::MissingStart);
            None
        }
        Some(name) => lookup(name, "start", &mut errors),
    };

    let mut finals = vec![false; states.len()];
    for name in &raw.finals {
        if let Some(id) = lookup(name, "final", &mut errors) {
            finals[id.0] = true;
        }
    }

    let mut rules = Vec::new();
    let mut keys: HashSet<(StateId, &str)> = HashSet::new();
    for (from, word, to) in &raw.rules {
        let context = format!("rule {from} {word} {to}");
        let from_id = lookup(from, &context, &mut errors);
        let to_id = lookup(to, &context, &mut errors);
        if word.is_empty() {
            errors.push(ValidationError::EmptyRuleWord {
                from: from.clone(),
                to: to.clone(),
            });
        }
        let mut word_ok = !word.is_empty();
        for c in word.chars() {
            if !c.is_ascii() || !alphabet.contains(&(c as u8)) {
                errors.push(ValidationError::SymbolOutsideAlphabet {
                    symbol: c,
                    context: context.clone(),
                });
                word_ok = false;
            }
        }
        if let Some(f) = from_id {
            if !word.is_empty() && !keys.insert((f, word.as_str())) {
                errors.push(ValidationError::DuplicateRuleKey {
                    from: from.clone(),
                    word: word.clone(),
                });
                word_ok = false;
            }
        }
        if let (Some(from), Some(to), true) = (from_id, to_id, word_ok) {
            rules.push(Rule {
                from,
                word: Word::from(word.as_str()),
                to,
            });
        }
    }

    if !errors.is_empty() {
        return Err(Violations(errors));
    }
    let start = start.expect("start resolved when no errors were found");
    Ok(Automaton::assemble(
        raw.kind, alphabet, states, start, finals, rules,
    ))
}

impl Automaton {
    fn assemble(
        kind: Kind,
        alphabet: Vec<u8>,
        states: Vec<String>,
        start: StateId,
        finals: Vec<bool>,
        rules: Vec<Rule>,
    ) -> Automaton {
        let mut outgoing = vec![Vec::new(); states.len()];
        for (i, r) in rules.iter().enumerate() {
            outgoing[r.from.0].push(i);
        }
        Automaton {
            kind,
            alphabet,
            states,
            start,
            finals,
            rules,
            outgoing,
        }
    }

    /// Same automaton with a different kind and rule words. Used by
    /// transformations that preserve every other component.
    pub(crate) fn with_kind_and_rules(&self, kind: Kind, rules: Vec<Rule>) -> Automaton {
        Automaton::assemble(
            kind,
            self.alphabet.clone(),
            self.states.clone(),
            self.start,
            self.finals.clone(),
            rules,
        )
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Alphabet symbols in declaration order.
    pub fn alphabet(&self) -> &[u8] {
        &self.alphabet
    }

    pub fn alphabet_str(&self) -> &str {
        std::str::from_utf8(&self.alphabet).expect("alphabet is ASCII")
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        (0..self.states.len()).map(StateId)
    }

    pub fn state_name(&self, id: StateId) -> &str {
        &self.states[id.0]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s == name).map(StateId)
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_final(&self, id: StateId) -> bool {
        self.finals[id.0]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.states().filter(|&s| self.is_final(s))
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Rules leaving `state`, in declaration order.
    pub fn rules_from(&self, state: StateId) -> impl Iterator<Item = &Rule> + '_ {
        self.outgoing[state.0].iter().map(move |&i| &self.rules[i])
    }

    /// The set of rule words readable from `p`.
    pub fn sigma_p(&self, p: StateId) -> Result<SigmaP<'_>> {
        if p.0 >= self.states.len() {
            return Err(Error::UnknownState(format!("#{}", p.0)));
        }
        Ok(self.sigma(p))
    }

    /// Infallible variant for ids obtained from this automaton.
    pub fn sigma(&self, p: StateId) -> SigmaP<'_> {
        SigmaP {
            aut: self,
            state: p,
        }
    }

    /// Checks that `w` is over the alphabet and converts it to a [`Word`].
    pub fn word(&self, w: &str) -> Result<Word> {
        for (position, symbol) in w.chars().enumerate() {
            if !symbol.is_ascii() || !self.alphabet.contains(&(symbol as u8)) {
                return Err(Error::SymbolOutsideAlphabet { symbol, position });
            }
        }
        Ok(Word::from(w))
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.as_bytes().iter().position(|s| !self.alphabet.contains(s)) {
            Some(position) => Err(Error::SymbolOutsideAlphabet {
                symbol: w.as_bytes()[position] as char,
                position,
            }),
            None => Ok(()),
        }
    }

    /// The named description this automaton was built from.
    pub fn to_raw(&self) -> RawAutomaton {
        RawAutomaton {
            kind: self.kind,
            alphabet: self.alphabet.iter().map(|&b| b as char).collect(),
            states: self.states.clone(),
            start: Some(self.state_name(self.start).to_string()),
            finals: self
                .finals()
                .map(|s| self.state_name(s).to_string())
                .collect(),
            rules: self
                .rules
                .iter()
                .map(|r| {
                    (
                        self.state_name(r.from).to_string(),
                        r.word.as_str().to_string(),
                        self.state_name(r.to).to_string(),
                    )
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(rules: &[(&str, &str, &str)]) -> RawAutomaton {
        RawAutomaton {
            kind: Kind::RightLinear,
            alphabet: vec!['a', 'b'],
            states: vec!["q0".into(), "q1".into(), "q2".into(), "q3".into()],
            start: Some("q0".into()),
            finals: vec!["q2".into()],
            rules: rules
                .iter()
                .map(|(f, w, t)| (f.to_string(), w.to_string(), t.to_string()))
                .collect(),
        }
    }

    fn example1() -> Automaton {
        validate_automaton(&raw(&[
            ("q0", "b", "q1"),
            ("q0", "a", "q2"),
            ("q2", "a", "q3"),
            ("q3", "b", "q2"),
        ]))
        .unwrap()
    }

    #[test]
    fn example1_is_valid() {
        let a = example1();
        assert_eq!(a.state_count(), 4);
        assert_eq!(a.rules().len(), 4);
        let q2 = a.state_id("q2").unwrap();
        assert_eq!(a.sigma_p(q2).unwrap().to_vec(), vec![Word::from("a")]);
        let q0 = a.state_id("q0").unwrap();
        assert_eq!(a.sigma(q0).to_vec(), vec![Word::from("b"), Word::from("a")]);
        assert!(a.sigma(a.state_id("q1").unwrap()).is_empty());
    }

    #[test]
    fn duplicate_key_rejected() {
        let err = validate_automaton(&raw(&[("q0", "ab", "q1"), ("q0", "ab", "q2")])).unwrap_err();
        assert_eq!(
            err.0,
            vec![ValidationError::DuplicateRuleKey {
                from: "q0".into(),
                word: "ab".into()
            }]
        );
    }

    #[test]
    fn same_word_from_different_states_is_fine() {
        assert!(validate_automaton(&raw(&[("q0", "ab", "q1"), ("q1", "ab", "q2")])).is_ok());
    }

    #[test]
    fn symbol_outside_alphabet() {
        let err = validate_automaton(&raw(&[("q0", "ad", "q1")])).unwrap_err();
        assert!(matches!(
            err.0.as_slice(),
            [ValidationError::SymbolOutsideAlphabet { symbol: 'd', .. }]
        ));
    }

    #[test]
    fn empty_word_unknown_state_missing_start() {
        let mut r = raw(&[("q0", "", "q1"), ("q9", "a", "q1")]);
        r.start = None;
        let err = validate_automaton(&r).unwrap_err();
        assert_eq!(err.0.len(), 3);
        assert_eq!(err.0[0], ValidationError::MissingStart);
        assert!(matches!(err.0[1], ValidationError::EmptyRuleWord { .. }));
        assert!(matches!(&err.0[2], ValidationError::UnknownState { name, .. } if name == "q9"));

        let mut r = raw(&[]);
        r.start = Some("nope".into());
        r.finals.push("alsonope".into());
        assert_eq!(validate_automaton(&r).unwrap_err().0.len(), 2);
    }

    #[test]
    fn sigma_p_unknown_state() {
        let a = example1();
        assert_eq!(
            a.sigma_p(StateId(7)).unwrap_err(),
            Error::UnknownState("#7".into())
        );
    }

    #[test]
    fn word_conversion_checks_alphabet() {
        let a = example1();
        assert_eq!(a.word("abba").unwrap(), Word::from("abba"));
        assert_eq!(
            a.word("abca").unwrap_err(),
            Error::SymbolOutsideAlphabet {
                symbol: 'c',
                position: 2
            }
        );
    }

    #[test]
    fn raw_round_trip() {
        let a = example1();
        assert_eq!(validate_automaton(&a.to_raw()).unwrap(), a);
    }
}
