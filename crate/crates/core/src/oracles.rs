//! Reference predicates for the named languages and the bundled automata
//! that claim to accept them.

use std::collections::BTreeMap;

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::format::parse_automaton;
use crate::word::Word;

/// A language given by its characteristic function over a fixed alphabet.
#[derive(Clone, Copy)]
pub struct NamedPredicate {
    pub name: &'static str,
    pub alphabet: &'static str,
    pub eval: fn(&[u8]) -> bool,
}

impl std::fmt::Debug for NamedPredicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NamedPredicate")
            .field("name", &self.name)
            .field("alphabet", &self.alphabet)
            .finish()
    }
}

impl NamedPredicate {
    pub fn eval_word(&self, w: &Word) -> Result<bool> {
        let bytes = w.as_bytes();
        if let Some(position) = bytes
            .iter()
            .position(|s| !self.alphabet.as_bytes().contains(s))
        {
            return Err(Error::SymbolOutsideAlphabet {
                symbol: bytes[position] as char,
                position,
            });
        }
        Ok((self.eval)(bytes))
    }
}

fn count(w: &[u8], s: u8) -> usize {
    w.iter().filter(|&&c| c == s).count()
}

/// Balanced over `a` (+1) and `b` (-1): no prefix goes negative, total zero.
pub fn is_dyck(w: &[u8]) -> bool {
    let mut depth: i64 = 0;
    for &s in w {
        depth += match s {
            b'a' => 1,
            b'b' => -1,
            _ => return false,
        };
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

fn example1(w: &[u8]) -> bool {
    matches!(w.split_first(), Some((b'a', rest)) if count(rest, b'a') == count(rest, b'b'))
}

fn dyck_c(w: &[u8]) -> bool {
    matches!(w.split_last(), Some((b'c', rest)) if is_dyck(rest))
}

fn c_dyck(w: &[u8]) -> bool {
    matches!(w.split_first(), Some((b'c', rest)) if is_dyck(rest))
}

fn eq_or_nob(w: &[u8]) -> bool {
    count(w, b'a') == count(w, b'b') || count(w, b'b') == 0
}

/// Positions of the two `b`s when `w` has exactly two.
fn two_bs(w: &[u8]) -> Option<(usize, usize)> {
    let bs: Vec<usize> = (0..w.len()).filter(|&i| w[i] == b'b').collect();
    match bs.as_slice() {
        [i, j] => Some((*i, *j)),
        _ => None,
    }
}

/// `a^n bb` or `a^l b a^m b a^n` with `m >= 1`.
fn exrl_grl(w: &[u8]) -> bool {
    match two_bs(w) {
        Some((i, j)) if j == i + 1 => j == w.len() - 1,
        Some(_) => true,
        None => false,
    }
}

/// `bb a^n` or `a^l b a^m b a^n` with `m >= 1`.
fn exrl_gll(w: &[u8]) -> bool {
    match two_bs(w) {
        Some((i, j)) if j == i + 1 => i == 0,
        Some(_) => true,
        None => false,
    }
}

/// `b^m ab b^n`.
fn bm_ab_bn(w: &[u8]) -> bool {
    let Some(i) = w.iter().position(|&s| s == b'a') else {
        return false;
    };
    count(w, b'a') == 1 && w.get(i + 1) == Some(&b'b')
}

fn anbn(w: &[u8]) -> bool {
    let n = w.len() / 2;
    w.len().is_multiple_of(2)
        && w[..n].iter().all(|&s| s == b'a')
        && w[n..].iter().all(|&s| s == b'b')
}

fn astar_bstar(w: &[u8]) -> bool {
    let split = w.iter().position(|&s| s != b'a').unwrap_or(w.len());
    w[split..].iter().all(|&s| s == b'b')
}

fn singleton_c(w: &[u8]) -> bool {
    w == b"c"
}

pub const ORACLES: &[NamedPredicate] = &[
    NamedPredicate {
        name: "example1",
        alphabet: "ab",
        eval: example1,
    },
    NamedPredicate {
        name: "dyck",
        alphabet: "ab",
        eval: is_dyck,
    },
    NamedPredicate {
        name: "dyck_c",
        alphabet: "abc",
        eval: dyck_c,
    },
    NamedPredicate {
        name: "c_dyck",
        alphabet: "abc",
        eval: c_dyck,
    },
    NamedPredicate {
        name: "eq_or_nob",
        alphabet: "ab",
        eval: eq_or_nob,
    },
    NamedPredicate {
        name: "exrl_grl",
        alphabet: "ab",
        eval: exrl_grl,
    },
    NamedPredicate {
        name: "exrl_gll",
        alphabet: "ab",
        eval: exrl_gll,
    },
    NamedPredicate {
        name: "bm_ab_bn",
        alphabet: "ab",
        eval: bm_ab_bn,
    },
    NamedPredicate {
        name: "anbn",
        alphabet: "ab",
        eval: anbn,
    },
    NamedPredicate {
        name: "astar_bstar",
        alphabet: "ab",
        eval: astar_bstar,
    },
    NamedPredicate {
        name: "singleton_c",
        alphabet: "abc",
        eval: singleton_c,
    },
];

pub fn oracle(name: &str) -> Result<&'static NamedPredicate> {
    ORACLES
        .iter()
        .find(|o| o.name == name)
        .ok_or_else(|| Error::UnknownOracle(name.to_string()))
}

pub fn oracle_eval(name: &str, w: &Word) -> Result<bool> {
    oracle(name)?.eval_word(w)
}

/// A bundled automaton and the language it claims to accept.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub oracle: &'static str,
    pub source: &'static str,
    pub automaton: Automaton,
}

macro_rules! corpus_file {
    ($name:literal, $oracle:literal) => {
        (
            $name,
            $oracle,
            include_str!(concat!("../corpus/", $name, ".jfa")),
        )
    };
}

const CORPUS: &[(&str, &str, &str)] = &[
    corpus_file!("example1-rowj", "example1"),
    corpus_file!("exrl", "exrl_grl"),
    corpus_file!("exrl-gll", "exrl_gll"),
    corpus_file!("bmabbn-grl", "bm_ab_bn"),
    corpus_file!("bmabbn-gll", "bm_ab_bn"),
    corpus_file!("nonrowj-grl", "eq_or_nob"),
    corpus_file!("dyck-gll", "dyck"),
    corpus_file!("dyck-grl", "dyck"),
    corpus_file!("dc-gll", "dyck_c"),
    corpus_file!("cdyck-grl", "c_dyck"),
    corpus_file!("c-singleton", "singleton_c"),
    corpus_file!("astarbstar-dfa", "astar_bstar"),
];

fn load((name, oracle, source): &(&'static str, &'static str, &'static str)) -> CorpusEntry {
    CorpusEntry {
        name,
        oracle,
        source,
        automaton: parse_automaton(source)
            .unwrap_or_else(|e| panic!("bundled automaton {name} is invalid: {e}")),
    }
}

/// Every bundled automaton by name.
pub fn bundled_corpus() -> BTreeMap<&'static str, CorpusEntry> {
    CORPUS.iter().map(|e| (e.0, load(e))).collect()
}

/// Bundled automata in declaration order.
pub fn corpus_entries() -> Vec<CorpusEntry> {
    CORPUS.iter().map(load).collect()
}

/// Looks up a bundled automaton, accepting an optional `.jfa` suffix.
pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    let name = name.strip_suffix(".jfa").unwrap_or(name);
    CORPUS.iter().find(|e| e.0 == name).map(load)
}
