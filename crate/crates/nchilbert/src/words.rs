//! Alphabets, words over them, multidegrees, and the sub-word predicates
//! the colon-ideal machinery is built on.
//!
//! Words are stored as sequences of 0-based variable indices; attaching
//! names to indices is the job of the input layer. The canonical order on
//! words is total degree first, then lexicographic on the index sequence,
//! and it is used everywhere a deterministic ordering is needed.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// 0-based variable index.
pub type Var = u16;

/// A multidegree: per-variable occurrence counts.
pub type MultiDegree = Vec<u32>;

/// An ordered list of distinct variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphabetError {
    Empty,
    Duplicate(String),
    TooManyVariables(usize),
}

impl fmt::Display for AlphabetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetError::Empty => write!(f, "alphabet must declare at least one variable"),
            AlphabetError::Duplicate(name) => write!(f, "duplicate variable `{name}`"),
            AlphabetError::TooManyVariables(n) => {
                write!(
                    f,
                    "{n} variables exceed the supported maximum of {}",
                    Var::MAX
                )
            }
        }
    }
}

impl std::error::Error for AlphabetError {}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, AlphabetError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(AlphabetError::Empty);
        }
        if names.len() > Var::MAX as usize {
            return Err(AlphabetError::TooManyVariables(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(AlphabetError::Duplicate(name.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, var: Var) -> &str {
        &self.names[var as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<Var> {
        self.names.iter().position(|n| n == name).map(|i| i as Var)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> {
        (0..self.names.len() as Var).map(|i| i as Var)
    }
}

/// A word over the variable alphabet; the empty word is the monoid identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Var>,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<Var>) -> Self {
        Word { letters }
    }

    pub fn single(var: Var) -> Self {
        Word { letters: vec![var] }
    }

    pub fn letters(&self) -> &[Var] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.letters.len() as u32
    }

    pub fn first(&self) -> Option<Var> {
        self.letters.first().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The suffix starting at position `at` (so `w == w[..at] * w.suffix_from(at)`).
    pub fn suffix_from(&self, at: usize) -> Word {
        Word {
            letters: self.letters[at..].to_vec(),
        }
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word {
            letters: self.letters[..len].to_vec(),
        }
    }
}

// Canonical word order: total degree first, then lexicographic on the
// index sequence.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Occurrence counts of each variable of the `n`-letter alphabet in `w`.
pub fn multidegree(w: &Word, n: usize) -> MultiDegree {
    let mut counts = vec![0u32; n];
    for &letter in w.letters() {
        counts[letter as usize] += 1;
    }
    counts
}

/// Does `w` start with `u`?
pub fn is_prefix(u: &Word, w: &Word) -> bool {
    w.letters().len() >= u.letters().len() && &w.letters()[..u.letters().len()] == u.letters()
}

/// Is `u` a contiguous sub-word of `w`? The empty word is a factor of everything.
pub fn is_factor(u: &Word, w: &Word) -> bool {
    if u.is_empty() {
        return true;
    }
    if u.letters().len() > w.letters().len() {
        return false;
    }
    w.letters()
        .windows(u.letters().len())
        .any(|win| win == u.letters())
}

/// All words `v` with `u * wj == w * v` for some word `u` and
/// `total_degree(v) < total_degree(wj)`.
///
/// Equivalently: for every nonempty suffix `s` of `w` that is a prefix of
/// `wj`, the complementary suffix of `wj`. The empty word appears in the
/// result exactly when `wj` is a factor of `w` ending at `w`'s last letter.
pub fn overlap_suffixes(w: &Word, wj: &Word) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    let max_s = w.letters().len().min(wj.letters().len());
    for s_len in 1..=max_s {
        let s_start = w.letters().len() - s_len;
        if wj.letters()[..s_len] == w.letters()[s_start..] {
            out.insert(wj.suffix_from(s_len));
        }
    }
    out
}

/// All words of total degree at most `max_degree` over `n` letters, in
/// generation order (by degree, then lexicographic). Test support.
#[cfg(test)]
pub(crate) fn all_words(n: Var, max_degree: u32) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for word in &frontier {
            for v in 0..n {
                let mut letters = word.letters().to_vec();
                letters.push(v);
                next.push(Word::from_letters(letters));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
