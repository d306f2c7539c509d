//! Reversal, the one-symbol-per-step reference simulator, and bounded
//! language comparison.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::automaton::{Automaton, Kind, Rule, StateId};
use crate::engine;
use crate::error::{Error, Result};
use crate::word::{words_up_to, Word};

/// Flips the kind and reverses every rule word. States, start, finals and
/// rule orientation are unchanged. The result accepts exactly the reversals
/// of the words the input accepts.
pub fn reverse_automaton(aut: &Automaton) -> Automaton {
    let rules = aut
        .rules()
        .iter()
        .map(|r| Rule {
            from: r.from,
            word: r.word.reversed(),
            to: r.to,
        })
        .collect();
    aut.with_kind_and_rules(aut.kind().flipped(), rules)
}

/// True iff every rule deletes exactly one symbol.
pub fn is_unit_rule(aut: &Automaton) -> bool {
    aut.rules().iter().all(|r| r.word.len() == 1)
}

/// Configuration of a one-symbol one-way jumping automaton: the state and
/// the circular remainder of the input (`q y` for the right variant, `y q`
/// for the left one).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OwjConfiguration {
    pub state: StateId,
    pub remaining: Word,
}

/// One step of the one-symbol relation: delete the nearest readable symbol
/// (scanning right for the right variant, left for the left variant) and
/// rotate the skipped segment to the far end.
pub fn owj_step(aut: &Automaton, c: &OwjConfiguration) -> Option<OwjConfiguration> {
    let rem = c.remaining.as_bytes();
    let readable = |s: &u8| aut.rules_from(c.state).any(|r| r.word.as_bytes() == [*s]);
    let k = match aut.kind() {
        Kind::RightLinear => rem.iter().position(readable)?,
        Kind::LeftLinear => rem.iter().rposition(readable)?,
    };
    let rule = aut
        .rules_from(c.state)
        .find(|r| r.word.as_bytes() == [rem[k]])?;
    // Right: p x a y -> q y x.  Left: y a x p -> x y q.  Both keep the part
    // after the deleted symbol, then the part before it.
    let mut next = rem[k + 1..].to_vec();
    next.extend_from_slice(&rem[..k]);
    Some(OwjConfiguration {
        state: rule.to,
        remaining: Word::from_bytes(next),
    })
}

/// Membership for unit-rule automata by direct simulation of the
/// one-symbol relation.
pub fn owj_reference_member(aut: &Automaton, w: &Word) -> Result<bool> {
    if !is_unit_rule(aut) {
        return Err(Error::NotUnitRule);
    }
    aut.check_word(w)?;
    let mut c = OwjConfiguration {
        state: aut.start(),
        remaining: w.clone(),
    };
    let mut seen = HashSet::new();
    loop {
        if c.remaining.is_empty() {
            return Ok(aut.is_final(c.state));
        }
        if !seen.insert(c.clone()) {
            return Ok(false);
        }
        match owj_step(aut, &c) {
            Some(next) => c = next,
            None => return Ok(false),
        }
    }
}

/// A word on which two languages disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Difference {
    pub word: Word,
    pub in_a: bool,
    pub in_b: bool,
}

/// Words of length at most `max_len` over `alphabet` on which `a` and `b`
/// disagree, in length-lexicographic order.
pub fn difference_by<A, B>(alphabet: &[u8], max_len: usize, a: A, b: B) -> Vec<Difference>
where
    A: Fn(&Word) -> bool + Sync,
    B: Fn(&Word) -> bool + Sync,
{
    let words: Vec<Word> = words_up_to(alphabet, max_len).collect();
    words
        .into_par_iter()
        .filter_map(|word| {
            let (in_a, in_b) = (a(&word), b(&word));
            (in_a != in_b).then_some(Difference { word, in_a, in_b })
        })
        .collect()
}

pub(crate) fn same_symbols(x: &[u8], y: &[u8]) -> bool {
    let xs: HashSet<_> = x.iter().collect();
    let ys: HashSet<_> = y.iter().collect();
    xs == ys
}

/// Bounded language comparison of two automata over the same alphabet. An
/// empty result certifies equality up to `max_len`.
pub fn language_difference(
    a: &Automaton,
    b: &Automaton,
    max_len: usize,
) -> Result<Vec<Difference>> {
    if !same_symbols(a.alphabet(), b.alphabet()) {
        return Err(Error::AlphabetMismatch {
            left: a.alphabet_str().to_string(),
            right: b.alphabet_str().to_string(),
        });
    }
    let member = |aut: &Automaton, w: &Word| engine::accepts(aut, w).expect("word over alphabet");
    Ok(difference_by(
        a.alphabet(),
        max_len,
        |w| member(a, w),
        |w| member(b, w),
    ))
}
