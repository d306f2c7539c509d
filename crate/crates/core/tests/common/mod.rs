#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use jumpfa::engine::{self, Configuration, Move};
use jumpfa::{validate_automaton, Automaton, Kind, RawAutomaton, Rule, Word};
use rand::seq::SliceRandom;
use rand::Rng;

/// Shape limits for random automata.
#[derive(Clone, Copy)]
pub struct Shape {
    pub max_states: usize,
    pub max_rules_per_state: usize,
    pub max_word_len: usize,
}

pub const SMALL: Shape = Shape {
    max_states: 4,
    max_rules_per_state: 3,
    max_word_len: 3,
};

pub fn random_automaton<R: Rng>(
    rng: &mut R,
    kind: Kind,
    alphabet: &str,
    shape: Shape,
) -> Automaton {
    let n = rng.gen_range(1..=shape.max_states);
    let states: Vec<String> = (0..n).map(|i| format!("q{i}")).collect();
    let symbols: Vec<char> = alphabet.chars().collect();
    let finals = states
        .iter()
        .filter(|_| rng.gen_bool(0.5))
        .cloned()
        .collect();
    let mut rules = Vec::new();
    for from in &states {
        let mut used = HashSet::new();
        for _ in 0..rng.gen_range(0..=shape.max_rules_per_state) {
            let len = rng.gen_range(1..=shape.max_word_len);
            let word: String = (0..len).map(|_| *symbols.choose(rng).unwrap()).collect();
            if used.insert(word.clone()) {
                let to = states.choose(rng).unwrap().clone();
                rules.push((from.clone(), word, to));
            }
        }
    }
    validate_automaton(&RawAutomaton {
        kind,
        alphabet: symbols,
        states: states.clone(),
        start: Some(states[0].clone()),
        finals,
        rules,
    })
    .expect("generated automaton is valid")
}

pub fn random_kind<R: Rng>(rng: &mut R) -> Kind {
    if rng.gen_bool(0.5) {
        Kind::RightLinear
    } else {
        Kind::LeftLinear
    }
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &[u8], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_bytes(
        (0..len)
            .map(|_| *alphabet.choose(rng).unwrap())
            .collect::<Vec<_>>(),
    )
}

/// Every configuration reachable from the initial configuration for `w`.
pub fn reachable(aut: &Automaton, w: &Word) -> Vec<Configuration> {
    let init = engine::initial_config(aut, w).unwrap();
    let mut seen = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::from([init.clone()]);
    seen.insert(init);
    while let Some(c) = queue.pop_front() {
        for (_, next) in engine::successors(aut, &c) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        order.push(c);
    }
    order
}

/// `(l, p, r)` ↦ `(rᴿ, p, lᴿ)`.
pub fn mirror(c: &Configuration) -> Configuration {
    Configuration::new(c.right.reversed(), c.state, c.left.reversed())
}

pub fn mirror_move(m: &Move) -> Move {
    match m {
        Move::Consume { rule, skip } => Move::Consume {
            rule: Rule {
                from: rule.from,
                word: rule.word.reversed(),
                to: rule.to,
            },
            skip: skip.reversed(),
        },
        Move::Return => Move::Return,
    }
}

pub fn sorted(mut v: Vec<(Move, Configuration)>) -> Vec<(Move, Configuration)> {
    v.sort();
    v
}

/// Symbol multiset of a configuration's tape.
pub fn symbol_counts(c: &Configuration) -> [usize; 256] {
    let mut counts = [0; 256];
    for &s in c.left.as_bytes().iter().chain(c.right.as_bytes()) {
        counts[s as usize] += 1;
    }
    counts
}

/// Checks the structural step invariants at `c`; returns a description of
/// the first violation.
pub fn check_step_invariants(aut: &Automaton, c: &Configuration) -> Result<(), String> {
    let consumes = engine::consume_successors(aut, c);
    let ret = engine::return_successor(aut, c);
    if ret.is_some() && !consumes.is_empty() {
        return Err(format!(
            "return and consume both enabled at {}",
            c.display(aut)
        ));
    }
    for (mv, next) in &consumes {
        let Move::Consume { rule, .. } = mv else {
            return Err("consume list holds a return".into());
        };
        if next.remaining() + rule.word.len() != c.remaining() {
            return Err(format!(
                "consume at {} did not shrink by |x|",
                c.display(aut)
            ));
        }
    }
    if let Some((_, next)) = &ret {
        if symbol_counts(next) != symbol_counts(c) {
            return Err(format!("return at {} changed the symbols", c.display(aut)));
        }
        if !(next.left.is_empty() || next.right.is_empty()) {
            return Err(format!(
                "return at {} left both buffers nonempty",
                c.display(aut)
            ));
        }
        if engine::return_successor(aut, next).is_some() {
            return Err(format!("two consecutive returns from {}", c.display(aut)));
        }
    }
    Ok(())
}
