//! Step relation, membership search and bounded enumeration.
//!
//! A configuration `(left, p, right)` stands for the string `left p right`.
//! For a right-linear automaton in state `p`, a rule `(p, x, q)` fires on the
//! leftmost occurrence of `x` in `right` provided the skipped gap `u` before
//! it contains no word of Σ_p; the gap moves to `left`. When `right` contains
//! no word of Σ_p and `left` is nonempty, the head returns to the left end.
//! The left-linear relation is the mirror image, implemented natively.
//!
//! Any occurrence other than the leftmost one is blocked: the gap before it
//! either contains `x` or overlaps the leftmost occurrence, which is exactly
//! the case excluded by the straddle condition. [`crate::literal`] enumerates
//! all occurrences and splits as an independent check of this.

use std::collections::{HashSet, VecDeque};
use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::automaton::{Automaton, Kind, Rule, SigmaP, StateId};
use crate::error::Result;
use crate::word::{words_up_to, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub left: Word,
    pub state: StateId,
    pub right: Word,
}

impl Configuration {
    pub fn new(left: impl Into<Word>, state: StateId, right: impl Into<Word>) -> Self {
        Configuration {
            left: left.into(),
            state,
            right: right.into(),
        }
    }

    /// Number of symbols still on the tape.
    pub fn remaining(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// `LEFT | STATE | RIGHT` with `<eps>` for empty buffers.
    pub fn display<'a>(&'a self, aut: &'a Automaton) -> impl fmt::Display + 'a {
        DisplayConfig { config: self, aut }
    }
}

struct DisplayConfig<'a> {
    config: &'a Configuration,
    aut: &'a Automaton,
}

impl fmt::Display for DisplayConfig<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {}",
            self.config.left,
            self.aut.state_name(self.config.state),
            self.config.right
        )
    }
}

/// One application of the step relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Delete `rule.word` after jumping over `skip`.
    Consume { rule: Rule, skip: Word },
    /// Wrap around to the far end of the tape.
    Return,
}

impl Move {
    pub fn render(&self, aut: &Automaton) -> String {
        match self {
            Move::Consume { rule, skip } => format!(
                "consume({},{},{} skip={})",
                aut.state_name(rule.from),
                rule.word,
                aut.state_name(rule.to),
                skip
            ),
            Move::Return => "return".to_string(),
        }
    }
}

/// An accepting run: the initial configuration followed by `(move, result)`
/// pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub start: Configuration,
    pub steps: Vec<(Move, Configuration)>,
}

impl Trace {
    pub fn configurations(&self) -> impl Iterator<Item = &Configuration> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|(_, c)| c))
    }

    pub fn moves(&self) -> impl Iterator<Item = &Move> {
        self.steps.iter().map(|(m, _)| m)
    }

    pub fn last(&self) -> &Configuration {
        self.steps.last().map(|(_, c)| c).unwrap_or(&self.start)
    }

    /// One configuration per line; every line but the last carries the move
    /// leaving it as a `  -- ...` suffix.
    pub fn render(&self, aut: &Automaton) -> String {
        let mut out = String::new();
        let mut current = &self.start;
        for (mv, next) in &self.steps {
            writeln!(out, "{}  -- {}", current.display(aut), mv.render(aut)).unwrap();
            current = next;
        }
        writeln!(out, "{}", current.display(aut)).unwrap();
        out
    }
}

#[derive(Debug, Clone)]
pub struct Membership {
    pub accepted: bool,
    /// A shortest accepting run, when one exists and was requested.
    pub trace: Option<Trace>,
    /// Configurations expanded by the search.
    pub expansions: usize,
}

pub fn initial_config(aut: &Automaton, w: &Word) -> Result<Configuration> {
    aut.check_word(w)?;
    Ok(match aut.kind() {
        Kind::RightLinear => Configuration::new(Word::empty(), aut.start(), w.clone()),
        Kind::LeftLinear => Configuration::new(w.clone(), aut.start(), Word::empty()),
    })
}

pub fn is_accepting(aut: &Automaton, c: &Configuration) -> bool {
    c.left.is_empty() && c.right.is_empty() && aut.is_final(c.state)
}

/// Smallest `i` with `haystack[i..i + needle.len()] == needle`.
pub fn leftmost_occurrence(haystack: &[u8], needle: &[u8]) -> Option<usize> {
    debug_assert!(!needle.is_empty());
    haystack.windows(needle.len()).position(|w| w == needle)
}

/// Largest `i` with `haystack[i..i + needle.len()] == needle`.
pub fn rightmost_occurrence(haystack: &[u8], needle: &[u8]) -> Option<usize> {
    debug_assert!(!needle.is_empty());
    haystack.windows(needle.len()).rposition(|w| w == needle)
}

/// True iff some word of `words` occurs as a factor of `w`.
pub fn contains_factor<'a, I>(w: &[u8], words: I) -> bool
where
    I: IntoIterator<Item = &'a Word>,
{
    words
        .into_iter()
        .any(|x| leftmost_occurrence(w, x.as_bytes()).is_some())
}

fn sigma_free(w: &[u8], sigma: SigmaP<'_>) -> bool {
    !contains_factor(w, sigma.iter())
}

/// Successors by rule 1, one per firing rule, in rule declaration order.
pub fn consume_successors(aut: &Automaton, c: &Configuration) -> Vec<(Move, Configuration)> {
    let sigma = aut.sigma(c.state);
    let mut out = Vec::new();
    for rule in aut.rules_from(c.state) {
        let x = rule.word.as_bytes();
        match aut.kind() {
            Kind::RightLinear => {
                let right = c.right.as_bytes();
                let Some(i) = leftmost_occurrence(right, x) else {
                    continue;
                };
                let gap = &right[..i];
                if !sigma_free(gap, sigma) {
                    continue;
                }
                out.push((
                    Move::Consume {
                        rule: rule.clone(),
                        skip: Word::from(gap),
                    },
                    Configuration::new(c.left.concat(gap), rule.to, &right[i + x.len()..]),
                ));
            }
            Kind::LeftLinear => {
                let left = c.left.as_bytes();
                let Some(j) = rightmost_occurrence(left, x) else {
                    continue;
                };
                let gap = &left[j + x.len()..];
                if !sigma_free(gap, sigma) {
                    continue;
                }
                out.push((
                    Move::Consume {
                        rule: rule.clone(),
                        skip: Word::from(gap),
                    },
                    Configuration::new(
                        &left[..j],
                        rule.to,
                        Word::from(gap).concat(c.right.as_bytes()),
                    ),
                ));
            }
        }
    }
    out
}

/// Successor by rule 2, if the return jump applies.
pub fn return_successor(aut: &Automaton, c: &Configuration) -> Option<(Move, Configuration)> {
    let sigma = aut.sigma(c.state);
    let (jumped, ahead) = match aut.kind() {
        Kind::RightLinear => (&c.left, &c.right),
        Kind::LeftLinear => (&c.right, &c.left),
    };
    if jumped.is_empty() || !sigma_free(ahead.as_bytes(), sigma) {
        return None;
    }
    let all = c.left.concat(c.right.as_bytes());
    let next = match aut.kind() {
        Kind::RightLinear => Configuration::new(Word::empty(), c.state, all),
        Kind::LeftLinear => Configuration::new(all, c.state, Word::empty()),
    };
    Some((Move::Return, next))
}

/// All successors: consumes in rule declaration order, then the return.
pub fn successors(aut: &Automaton, c: &Configuration) -> Vec<(Move, Configuration)> {
    let mut out = consume_successors(aut, c);
    out.extend(return_successor(aut, c));
    out
}

/// Decides membership by breadth-first search of the configuration graph
/// and returns a shortest accepting trace.
pub fn member(aut: &Automaton, w: &Word) -> Result<Membership> {
    search(aut, w, true)
}

/// Membership verdict only.
pub fn accepts(aut: &Automaton, w: &Word) -> Result<bool> {
    Ok(search(aut, w, false)?.accepted)
}

struct Node {
    config: Configuration,
    parent: Option<(usize, Move)>,
}

fn search(aut: &Automaton, w: &Word, keep_trace: bool) -> Result<Membership> {
    let init = initial_config(aut, w)?;
    let mut seen: HashSet<Configuration> = HashSet::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut queue = VecDeque::new();

    seen.insert(init.clone());
    nodes.push(Node {
        config: init,
        parent: None,
    });
    queue.push_back(0usize);

    let mut expansions = 0;
    while let Some(idx) = queue.pop_front() {
        if is_accepting(aut, &nodes[idx].config) {
            let trace = keep_trace.then(|| rebuild(&nodes, idx));
            return Ok(Membership {
                accepted: true,
                trace,
                expansions,
            });
        }
        expansions += 1;
        for (mv, next) in successors(aut, &nodes[idx].config) {
            if seen.contains(&next) {
                continue;
            }
            seen.insert(next.clone());
            nodes.push(Node {
                config: next,
                parent: keep_trace.then_some((idx, mv)),
            });
            queue.push_back(nodes.len() - 1);
        }
    }
    Ok(Membership {
        accepted: false,
        trace: None,
        expansions,
    })
}

fn rebuild(nodes: &[Node], mut idx: usize) -> Trace {
    let mut steps = Vec::new();
    while let Some((parent, mv)) = &nodes[idx].parent {
        steps.push((mv.clone(), nodes[idx].config.clone()));
        idx = *parent;
    }
    steps.reverse();
    Trace {
        start: nodes[idx].config.clone(),
        steps,
    }
}

/// All accepted words of length at most `max_len`, in length-lexicographic
/// order following the alphabet declaration order.
pub fn enumerate(aut: &Automaton, max_len: usize) -> Vec<Word> {
    let words: Vec<Word> = words_up_to(aut.alphabet(), max_len).collect();
    words
        .into_par_iter()
        .filter(|w| accepts(aut, w).expect("enumerated words are over the alphabet"))
        .collect()
}
