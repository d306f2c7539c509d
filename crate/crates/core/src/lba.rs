//! A linear-bounded marked-tape machine equivalent to a right-linear
//! automaton.
//!
//! The tape holds `$ w #`. One macro-step in state `p` either
//!
//! * picks a rule `(p, x, q)`, finds the nearest occurrence of `x` at or
//!   right of the head whose gap contains no word of Σ_p, and marks it; if
//!   unmarked symbols remain to its right the head moves there and the
//!   machine enters `q`, otherwise the tape is compacted and the machine
//!   enters `q`; or
//! * when no word of Σ_p occurs right of the head, compacts and stays in `p`.
//!
//! Compaction deletes the marked cells, shifts the remaining content left
//! against `$`, pulls `#` in behind it and puts the head on the first cell.
//! A branch accepts when the tape is empty in a final state. Rule choice is
//! explored breadth-first over machine configurations; a repeated
//! configuration cuts its branch.
//!
//! Marks are a flag per cell rather than a doubled (capitalized) alphabet.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::automaton::{Automaton, Kind, StateId};
use crate::engine::{self, leftmost_occurrence, Configuration};
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub symbol: u8,
    pub marked: bool,
}

/// Tape contents between the end markers, head position and control state.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedTape {
    pub cells: Vec<Cell>,
    pub head: usize,
    pub state: StateId,
}

impl MarkedTape {
    pub fn new(w: &Word, state: StateId) -> Self {
        MarkedTape {
            cells: w
                .as_bytes()
                .iter()
                .map(|&symbol| Cell {
                    symbol,
                    marked: false,
                })
                .collect(),
            head: 0,
            state,
        }
    }

    /// Unmarked content left of the head and the content from the head on,
    /// read as a configuration of the jumping automaton.
    pub fn project(&self) -> Configuration {
        let unmarked = |cells: &[Cell]| -> Word {
            Word::from_bytes(
                cells
                    .iter()
                    .filter(|c| !c.marked)
                    .map(|c| c.symbol)
                    .collect::<Vec<_>>(),
            )
        };
        Configuration::new(
            unmarked(&self.cells[..self.head]),
            self.state,
            unmarked(&self.cells[self.head..]),
        )
    }

    /// Cells in use including both end markers.
    pub fn footprint(&self) -> usize {
        self.cells.len() + 2
    }

    fn compact(&mut self) {
        self.cells.retain(|c| !c.marked);
        self.head = 0;
    }
}

impl fmt::Display for MarkedTape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("$")?;
        for (i, c) in self.cells.iter().enumerate() {
            if i == self.head {
                f.write_str("^")?;
            }
            let ch = c.symbol as char;
            if c.marked {
                write!(f, "[{ch}]")?;
            } else {
                write!(f, "{ch}")?;
            }
        }
        if self.head >= self.cells.len() {
            f.write_str("^")?;
        }
        f.write_str("#")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SpaceReport {
    /// Largest footprint seen, end markers included.
    pub max_cells_used: usize,
    /// Most compactions along any explored branch.
    pub compactions: usize,
    /// Most macro-steps along any explored branch.
    pub steps: usize,
}

impl fmt::Display for SpaceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cells={} compactions={} steps={}",
            self.max_cells_used, self.compactions, self.steps
        )
    }
}

/// How the gap before a candidate occurrence is screened.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapCheck {
    /// The gap may contain no word of Σ_p (the jumping relation's condition).
    SigmaFree,
    /// Only the nearest occurrence of the rule word itself is taken, with no
    /// look at other words of Σ_p. Not equivalent to the jumping automaton;
    /// kept for comparison.
    NearestOnly,
}

/// Machine variants. The default is the faithful construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LbaOptions {
    pub gap_check: GapCheck,
    /// When false, the machine never compacts; reaching the right end with
    /// content left over is a dead end.
    pub compaction: bool,
}

impl Default for LbaOptions {
    fn default() -> Self {
        LbaOptions {
            gap_check: GapCheck::SigmaFree,
            compaction: true,
        }
    }
}

/// What a macro-step did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LbaStep {
    /// Marked an occurrence of rule `rule` and moved right.
    Mark { rule: usize },
    /// Marked an occurrence of rule `rule` at the right end, then compacted.
    MarkAndCompact { rule: usize },
    /// Nothing readable right of the head; compacted in place.
    Compact,
}

impl LbaStep {
    pub fn compacts(self) -> bool {
        !matches!(self, LbaStep::Mark { .. })
    }
}

/// Successor machine configurations of `tape`, rules in declaration order,
/// the bare compaction last.
pub fn lba_successors(
    aut: &Automaton,
    tape: &MarkedTape,
    opts: LbaOptions,
) -> Vec<(LbaStep, MarkedTape)> {
    debug_assert!(tape.cells[tape.head.min(tape.cells.len())..]
        .iter()
        .all(|c| !c.marked));
    let ahead: Vec<u8> = tape.cells[tape.head..].iter().map(|c| c.symbol).collect();
    let sigma = aut.sigma(tape.state);
    let mut out = Vec::new();

    for (idx, rule) in aut.rules().iter().enumerate() {
        if rule.from != tape.state {
            continue;
        }
        let x = rule.word.as_bytes();
        let Some(i) = leftmost_occurrence(&ahead, x) else {
            continue;
        };
        if opts.gap_check == GapCheck::SigmaFree
            && engine::contains_factor(&ahead[..i], sigma.iter())
        {
            continue;
        }
        let mut next = tape.clone();
        let start = tape.head + i;
        for cell in &mut next.cells[start..start + x.len()] {
            cell.marked = true;
        }
        next.state = rule.to;
        let after = start + x.len();
        if after < next.cells.len() {
            next.head = after;
            out.push((LbaStep::Mark { rule: idx }, next));
        } else if opts.compaction {
            next.compact();
            out.push((LbaStep::MarkAndCompact { rule: idx }, next));
        } else {
            next.head = after;
            out.push((LbaStep::Mark { rule: idx }, next));
        }
    }

    let readable = engine::contains_factor(&ahead, sigma.iter());
    if !readable && opts.compaction && !tape.cells.is_empty() {
        let mut next = tape.clone();
        next.compact();
        out.push((LbaStep::Compact, next));
    }
    out
}

fn accepting(aut: &Automaton, tape: &MarkedTape) -> bool {
    tape.cells.iter().all(|c| c.marked) && aut.is_final(tape.state)
}

fn require_right(aut: &Automaton) -> Result<()> {
    if aut.kind() != Kind::RightLinear {
        return Err(Error::WrongKind {
            expected: "right-linear (grl)",
        });
    }
    Ok(())
}

/// Runs the machine on `w`.
pub fn lba_run(aut: &Automaton, w: &Word) -> Result<(bool, SpaceReport)> {
    lba_run_with(aut, w, LbaOptions::default())
}

pub fn lba_run_with(aut: &Automaton, w: &Word, opts: LbaOptions) -> Result<(bool, SpaceReport)> {
    require_right(aut)?;
    aut.check_word(w)?;

    let init = MarkedTape::new(w, aut.start());
    let mut report = SpaceReport {
        max_cells_used: init.footprint(),
        ..SpaceReport::default()
    };
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(init.clone());
    queue.push_back((init, 0usize, 0usize));

    while let Some((tape, steps, compactions)) = queue.pop_front() {
        report.max_cells_used = report.max_cells_used.max(tape.footprint());
        report.steps = report.steps.max(steps);
        report.compactions = report.compactions.max(compactions);
        if accepting(aut, &tape) {
            return Ok((true, report));
        }
        for (step, next) in lba_successors(aut, &tape, opts) {
            if seen.insert(next.clone()) {
                queue.push_back((next, steps + 1, compactions + step.compacts() as usize));
            }
        }
    }
    Ok((false, report))
}

/// Words of length at most `max_len` on which the machine and the jumping
/// automaton disagree. Empty certifies equivalence up to the bound.
pub fn lba_equivalence(aut: &Automaton, max_len: usize) -> Result<Vec<Word>> {
    lba_equivalence_with(aut, max_len, LbaOptions::default())
}

pub fn lba_equivalence_with(
    aut: &Automaton,
    max_len: usize,
    opts: LbaOptions,
) -> Result<Vec<Word>> {
    require_right(aut)?;
    let diffs = crate::transforms::difference_by(
        aut.alphabet(),
        max_len,
        |w| lba_run_with(aut, w, opts).expect("word over alphabet").0,
        |w| engine::accepts(aut, w).expect("word over alphabet"),
    );
    Ok(diffs.into_iter().map(|d| d.word).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_automaton;

    fn dyck() -> Automaton {
        parse_automaton(
            "kind: grl\nalphabet: ab\nstates: q0\nstart: q0\nfinal: q0\nrule: q0 ab q0\n",
        )
        .unwrap()
    }

    fn exrl() -> Automaton {
        parse_automaton(
            "kind: grl\nalphabet: ab\nstates: q0 q1\nstart: q0\nfinal: q1\nrule: q0 a q0\nrule: q0 bb q1\n",
        )
        .unwrap()
    }

    #[test]
    fn dyck_aabb() {
        let (ok, report) = lba_run(&dyck(), &"aabb".into()).unwrap();
        assert!(ok);
        assert_eq!(report.max_cells_used, 6);
        // mark the inner ab, compact (nothing readable), mark ab and compact.
        assert_eq!(report.compactions, 2);
        assert_eq!(report.steps, 3);
        assert_eq!(report.to_string(), "cells=6 compactions=2 steps=3");
    }

    #[test]
    fn exrl_bb_and_empty() {
        assert!(lba_run(&exrl(), &"bb".into()).unwrap().0);
        let (ok, report) = lba_run(&exrl(), &Word::empty()).unwrap();
        assert!(!ok);
        assert_eq!(report.compactions, 0);
        let (ok, report) = lba_run(&dyck(), &Word::empty()).unwrap();
        assert!(ok);
        assert_eq!((report.compactions, report.max_cells_used), (0, 2));
    }

    #[test]
    fn marking_and_projection() {
        let a = dyck();
        let tape = MarkedTape::new(&"aabba".into(), a.start());
        let succ = lba_successors(&a, &tape, LbaOptions::default());
        assert_eq!(succ.len(), 1);
        let (step, next) = &succ[0];
        assert_eq!(*step, LbaStep::Mark { rule: 0 });
        assert_eq!(next.head, 3);
        assert_eq!(next.to_string(), "$a[a][b]^ba#");
        assert_eq!(next.project(), Configuration::new("a", a.start(), "ba"));
    }

    #[test]
    fn stuck_branch_terminates() {
        // Nothing is ever readable: compaction is the identity and the
        // repeated configuration cuts the branch.
        let a = parse_automaton(
            "kind: grl\nalphabet: ab\nstates: q0\nstart: q0\nfinal: q0\nrule: q0 ab q0\n",
        )
        .unwrap();
        assert!(!lba_run(&a, &"ba".into()).unwrap().0);
    }

    #[test]
    fn rejects_left_linear() {
        let a = parse_automaton(
            "kind: gll\nalphabet: ab\nstates: q0\nstart: q0\nfinal: q0\nrule: q0 ab q0\n",
        )
        .unwrap();
        assert!(matches!(
            lba_run(&a, &"ab".into()),
            Err(Error::WrongKind { .. })
        ));
        assert!(matches!(
            lba_equivalence(&a, 2),
            Err(Error::WrongKind { .. })
        ));
    }

    #[test]
    fn nearest_only_variant_overaccepts() {
        // `a` sits behind `bb`, which a Σ_p-free gap check refuses to skip.
        let opts = LbaOptions {
            gap_check: GapCheck::NearestOnly,
            ..LbaOptions::default()
        };
        assert!(lba_run_with(&exrl(), &"bba".into(), opts).unwrap().0);
        assert!(!lba_run(&exrl(), &"bba".into()).unwrap().0);
    }
}
