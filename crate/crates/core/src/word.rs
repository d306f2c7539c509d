//! Words over single-character ASCII symbols.

use std::fmt;

/// Spelling of the empty word in files, traces and on the command line.
pub const EPSILON: &str = "<eps>";

/// True for characters usable as alphabet symbols.
pub fn is_symbol_char(c: char) -> bool {
    c.is_ascii_graphic()
}

/// A finite (possibly empty) sequence of symbols.
///
/// Symbols are printable ASCII bytes, so a word is also a valid `&str`.
/// `Display` spells the empty word as `<eps>`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_bytes(bytes: impl Into<Vec<u8>>) -> Self {
        Word(bytes.into())
    }

    /// Parses a command-line spelling: `<eps>` is the empty word, anything
    /// else is taken literally.
    pub fn from_arg(arg: &str) -> Self {
        if arg == EPSILON {
            Word::empty()
        } else {
            Word::from(arg)
        }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // Only ever built from ASCII through the public constructors used by
        // the validated paths; fall back to lossy output otherwise.
        std::str::from_utf8(&self.0).unwrap_or("\u{fffd}")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Number of occurrences of `symbol`.
    pub fn count(&self, symbol: u8) -> usize {
        self.0.iter().filter(|&&s| s == symbol).count()
    }

    pub fn concat(&self, other: &[u8]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.as_bytes().to_vec())
    }
}

impl From<&[u8]> for Word {
    fn from(s: &[u8]) -> Self {
        Word(s.to_vec())
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str(EPSILON)
        } else {
            f.write_str(self.as_str())
        }
    }
}

/// All words of length `0..=max_len` over `alphabet`, in length-then-
/// lexicographic order where the alphabet order is the slice order.
pub fn words_up_to(alphabet: &[u8], max_len: usize) -> impl Iterator<Item = Word> + '_ {
    (0..=max_len).flat_map(move |len| words_of_len(alphabet, len))
}

/// All words of exactly `len` symbols in lexicographic order.
pub fn words_of_len(alphabet: &[u8], len: usize) -> impl Iterator<Item = Word> + '_ {
    let k = alphabet.len();
    // An odometer over symbol indices; `None` once exhausted.
    let mut digits: Option<Vec<usize>> = if len > 0 && k == 0 {
        None
    } else {
        Some(vec![0; len])
    };
    std::iter::from_fn(move || {
        let current = digits.as_mut()?;
        let word = Word(current.iter().map(|&d| alphabet[d]).collect());
        let mut pos = len;
        loop {
            if pos == 0 {
                digits = None;
                break;
            }
            pos -= 1;
            current[pos] += 1;
            if current[pos] < k {
                break;
            }
            current[pos] = 0;
        }
        Some(word)
    })
}
