//! The step relation computed straight from its defining clauses.
//!
//! Every occurrence of every rule word is tried, the skipped gap is checked
//! for Σ_p factors by enumerating all of its substrings, and the straddle
//! condition is checked over all splits of the gap and the rule word. This
//! is slow and shares no code with [`crate::engine`]; it exists to check the
//! engine's leftmost/rightmost-occurrence shortcut.

use crate::automaton::{Automaton, Kind};
use crate::engine::{Configuration, Move};
use crate::word::Word;

fn sigma_words(aut: &Automaton, c: &Configuration) -> Vec<Vec<u8>> {
    aut.rules()
        .iter()
        .filter(|r| r.from == c.state)
        .map(|r| r.word.as_bytes().to_vec())
        .collect()
}

/// Whether some substring of `u` is one of `words`.
fn has_factor(u: &[u8], words: &[Vec<u8>]) -> bool {
    (0..u.len()).any(|a| (a + 1..=u.len()).any(|b| words.iter().any(|w| w.as_slice() == &u[a..b])))
}

/// Right-linear straddle: some nonempty suffix of `u` followed by a nonempty
/// prefix of `x` spells `x`.
fn straddles_right(u: &[u8], x: &[u8]) -> bool {
    (1..=u.len()).any(|k| {
        (1..=x.len()).any(|m| {
            let mut s = u[u.len() - k..].to_vec();
            s.extend_from_slice(&x[..m]);
            s == x
        })
    })
}

/// Left-linear straddle: some nonempty suffix of `x` followed by a nonempty
/// prefix of `u` spells `x`.
fn straddles_left(u: &[u8], x: &[u8]) -> bool {
    (1..=u.len()).any(|k| {
        (1..=x.len()).any(|m| {
            let mut s = x[x.len() - m..].to_vec();
            s.extend_from_slice(&u[..k]);
            s == x
        })
    })
}

/// All rule-1 successors, sorted.
pub fn consume_successors(aut: &Automaton, c: &Configuration) -> Vec<(Move, Configuration)> {
    let sigma = sigma_words(aut, c);
    let mut out = Vec::new();
    for rule in aut.rules().iter().filter(|r| r.from == c.state) {
        let x = rule.word.as_bytes();
        match aut.kind() {
            Kind::RightLinear => {
                // right = u x v
                let r = c.right.as_bytes();
                for i in 0..r.len() {
                    if i + x.len() > r.len() || &r[i..i + x.len()] != x {
                        continue;
                    }
                    let (u, v) = (&r[..i], &r[i + x.len()..]);
                    if has_factor(u, &sigma) || straddles_right(u, x) {
                        continue;
                    }
                    let mut left = c.left.as_bytes().to_vec();
                    left.extend_from_slice(u);
                    out.push((
                        Move::Consume {
                            rule: rule.clone(),
                            skip: Word::from(u),
                        },
                        Configuration::new(Word::from_bytes(left), rule.to, Word::from(v)),
                    ));
                }
            }
            Kind::LeftLinear => {
                // left = v x u
                let l = c.left.as_bytes();
                for j in 0..l.len() {
                    if j + x.len() > l.len() || &l[j..j + x.len()] != x {
                        continue;
                    }
                    let (v, u) = (&l[..j], &l[j + x.len()..]);
                    if has_factor(u, &sigma) || straddles_left(u, x) {
                        continue;
                    }
                    let mut right = u.to_vec();
                    right.extend_from_slice(c.right.as_bytes());
                    out.push((
                        Move::Consume {
                            rule: rule.clone(),
                            skip: Word::from(u),
                        },
                        Configuration::new(Word::from(v), rule.to, Word::from_bytes(right)),
                    ));
                }
            }
        }
    }
    out.sort();
    out
}

/// The rule-2 successor, if any.
pub fn return_successor(aut: &Automaton, c: &Configuration) -> Option<(Move, Configuration)> {
    let sigma = sigma_words(aut, c);
    let mut all = c.left.as_bytes().to_vec();
    all.extend_from_slice(c.right.as_bytes());
    match aut.kind() {
        Kind::RightLinear if !c.left.is_empty() && !has_factor(c.right.as_bytes(), &sigma) => {
            Some((
                Move::Return,
                Configuration::new(Word::empty(), c.state, Word::from_bytes(all)),
            ))
        }
        Kind::LeftLinear if !c.right.is_empty() && !has_factor(c.left.as_bytes(), &sigma) => {
            Some((
                Move::Return,
                Configuration::new(Word::from_bytes(all), c.state, Word::empty()),
            ))
        }
        _ => None,
    }
}

/// All successors, sorted.
pub fn successors(aut: &Automaton, c: &Configuration) -> Vec<(Move, Configuration)> {
    let mut out = consume_successors(aut, c);
    out.extend(return_successor(aut, c));
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straddle_examples() {
        // u = "a", x = "aa": "a" + "a" == "aa".
        assert!(straddles_right(b"a", b"aa"));
        assert!(!straddles_right(b"b", b"aa"));
        assert!(!straddles_right(b"", b"aa"));
        // u = "b", x = "ab": "b" + "a" != "ab"; suffix "b" + prefix "b"? no.
        assert!(!straddles_right(b"b", b"ab"));
        assert!(straddles_left(b"a", b"aa"));
        assert!(straddles_left(b"ab", b"bab"));
        assert!(!straddles_left(b"b", b"bab"));
    }

    #[test]
    fn factor_by_substrings() {
        let ws = vec![b"a".to_vec(), b"bb".to_vec()];
        assert!(has_factor(b"bb", &ws));
        assert!(!has_factor(b"b", &ws));
        assert!(!has_factor(b"", &ws));
    }
}
