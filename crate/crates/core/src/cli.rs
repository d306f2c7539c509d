//! The `jumpfa` command line.
//!
//! Exit codes: 0 accept (or success), 1 reject (or languages differ),
//! 2 usage, parse or validation error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::automaton::Automaton;
use crate::engine::{enumerate, member};
use crate::error::Error;
use crate::format::{parse_automaton, serialize_automaton};
use crate::lba::lba_run;
use crate::oracles::{self, corpus_entries, corpus_entry};
use crate::transforms::{difference_by, language_difference, reverse_automaton, Difference};
use crate::word::Word;

#[derive(Debug, Parser)]
#[command(
    name = "jumpfa",
    about = "Generalized linear one-way jumping finite automata"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an automaton file.
    Validate { file: String },
    /// Decide membership of WORD (`<eps>` for the empty word).
    Member { file: String, word: String },
    /// Print a shortest accepting run.
    Trace { file: String, word: String },
    /// List accepted words up to a length, length-lexicographically.
    Enumerate {
        file: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Print the reversed automaton.
    Reverse { file: String },
    /// Run the marked-tape linear-bounded machine.
    Lba { file: String, word: String },
    /// Compare two languages on all words up to a length.
    Compare {
        file: String,
        #[arg(conflicts_with = "oracle", required_unless_present = "oracle")]
        other: Option<String>,
        #[arg(long)]
        oracle: Option<String>,
        #[arg(long)]
        max_len: usize,
    },
    /// Evaluate a reference predicate.
    Oracle { name: String, word: String },
    /// List the bundled automata.
    Examples,
}

/// Reads FILE from disk, falling back to the bundled automaton of that name.
fn load(file: &str) -> Result<Automaton, String> {
    let path = Path::new(file);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{file}: {e}"))?;
        return parse_automaton(&text).map_err(|e| format!("{file}: {e}"));
    }
    corpus_entry(file)
        .map(|e| e.automaton)
        .ok_or_else(|| format!("{file}: no such file or bundled automaton"))
}

fn word_for(aut: &Automaton, arg: &str) -> Result<Word, String> {
    let w = Word::from_arg(arg);
    aut.check_word(&w).map_err(|e| e.to_string())?;
    Ok(w)
}

fn verdict(accepted: bool) -> &'static str {
    if accepted {
        "accept"
    } else {
        "reject"
    }
}

fn print_differences(
    out: &mut dyn Write,
    diffs: &[Difference],
    max_len: usize,
) -> std::io::Result<i32> {
    if diffs.is_empty() {
        writeln!(out, "equivalent up to length {max_len}")?;
        return Ok(0);
    }
    for d in diffs {
        writeln!(out, "{} {} {}", d.word, verdict(d.in_a), verdict(d.in_b))?;
    }
    Ok(1)
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    let err = |e: Error| e.to_string();
    match cmd {
        Command::Validate { file } => {
            let aut = load(&file)?;
            writeln!(
                out,
                "valid {} automaton: {} states, {} rules",
                aut.kind(),
                aut.state_count(),
                aut.rules().len()
            )
            .map_err(io)?;
            Ok(0)
        }
        Command::Member { file, word } => {
            let aut = load(&file)?;
            let w = word_for(&aut, &word)?;
            let accepted = member(&aut, &w).map_err(err)?.accepted;
            writeln!(out, "{}", verdict(accepted)).map_err(io)?;
            Ok(if accepted { 0 } else { 1 })
        }
        Command::Trace { file, word } => {
            let aut = load(&file)?;
            let w = word_for(&aut, &word)?;
            match member(&aut, &w).map_err(err)?.trace {
                Some(trace) => {
                    write!(out, "{}", trace.render(&aut)).map_err(io)?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "reject").map_err(io)?;
                    Ok(1)
                }
            }
        }
        Command::Enumerate { file, max_len } => {
            let aut = load(&file)?;
            for w in enumerate(&aut, max_len) {
                writeln!(out, "{w}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Reverse { file } => {
            let aut = load(&file)?;
            write!(out, "{}", serialize_automaton(&reverse_automaton(&aut))).map_err(io)?;
            Ok(0)
        }
        Command::Lba { file, word } => {
            let aut = load(&file)?;
            let w = word_for(&aut, &word)?;
            let (accepted, report) = lba_run(&aut, &w).map_err(err)?;
            writeln!(out, "{}\n{}", verdict(accepted), report).map_err(io)?;
            Ok(if accepted { 0 } else { 1 })
        }
        Command::Compare {
            file,
            other,
            oracle,
            max_len,
        } => {
            let a = load(&file)?;
            let diffs = match (other, oracle) {
                (Some(other), _) => {
                    let b = load(&other)?;
                    language_difference(&a, &b, max_len).map_err(err)?
                }
                (None, Some(name)) => {
                    let pred = oracles::oracle(&name).map_err(err)?;
                    if !crate::transforms::same_symbols(a.alphabet(), pred.alphabet.as_bytes()) {
                        return Err(err(Error::AlphabetMismatch {
                            left: a.alphabet_str().to_string(),
                            right: pred.alphabet.to_string(),
                        }));
                    }
                    difference_by(
                        a.alphabet(),
                        max_len,
                        |w| crate::engine::accepts(&a, w).expect("word over alphabet"),
                        |w| (pred.eval)(w.as_bytes()),
                    )
                }
                (None, None) => unreachable!("clap requires FILE or --oracle"),
            };
            print_differences(out, &diffs, max_len).map_err(io)
        }
        Command::Oracle { name, word } => {
            let accepted = oracles::oracle_eval(&name, &Word::from_arg(&word)).map_err(err)?;
            writeln!(out, "{}", verdict(accepted)).map_err(io)?;
            Ok(if accepted { 0 } else { 1 })
        }
        Command::Examples => {
            for e in corpus_entries() {
                writeln!(out, "{}", e.name).map_err(io)?;
            }
            Ok(0)
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid usage");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
