//! Canonical monomial right ideals and the colon operators that drive the
//! orbit construction.
//!
//! An ideal is held as a triple: a two-sided generator base `T` shared by
//! every element of an orbit, an accumulated right part `P`, and an optional
//! truncation level `e` standing for all words of total degree > `e` (which
//! are never materialized). An optional knowledge bound `D` supports the
//! degree-bound guess mode for infinitely generated inputs, where generator
//! lists are only complete up to degree `D`.

use std::fmt;
use std::sync::Arc;

use crate::words::{is_factor, is_prefix, Var, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColonError {
    /// The degree-bound budget of guess mode is used up; continuing would
    /// silently compare ideals on no information at all.
    DegreeBudgetExhausted,
}

impl fmt::Display for ColonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColonError::DegreeBudgetExhausted => {
                write!(
                    f,
                    "degree budget exhausted; increase the generator degree bound"
                )
            }
        }
    }
}

impl std::error::Error for ColonError {}

/// Factor-minimal, canonically sorted two-sided generator set.
#[derive(Debug, PartialEq, Eq)]
pub struct TwoSidedBase {
    words: Vec<Word>,
}

impl TwoSidedBase {
    /// Minimalize: drop any generator that has another one as a factor.
    /// The input must not contain the empty word.
    fn new(mut gens: Vec<Word>) -> Self {
        gens.sort();
        gens.dedup();
        let mut kept: Vec<Word> = Vec::with_capacity(gens.len());
        'outer: for w in gens {
            debug_assert!(!w.is_empty());
            // kept is sorted ascending; only strictly shorter words can be
            // proper factors, so the scan stops early.
            for k in &kept {
                if k.total_degree() >= w.total_degree() {
                    break;
                }
                if is_factor(k, &w) {
                    continue 'outer;
                }
            }
            kept.push(w);
        }
        TwoSidedBase { words: kept }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }
}

/// A monomial right ideal in canonical form.
#[derive(Debug, Clone)]
pub struct MonomialIdeal {
    base: Arc<TwoSidedBase>,
    right: Vec<Word>,
    truncation: Option<u32>,
    known_up_to: Option<u32>,
}

impl MonomialIdeal {
    /// The two-sided ideal generated by `gens`; a quotient algebra input.
    pub fn two_sided(gens: impl IntoIterator<Item = Word>) -> Self {
        let gens: Vec<Word> = gens.into_iter().collect();
        if gens.iter().any(Word::is_empty) {
            return Self::unit();
        }
        MonomialIdeal {
            base: Arc::new(TwoSidedBase::new(gens)),
            right: Vec::new(),
            truncation: None,
            known_up_to: None,
        }
    }

    /// The right ideal generated by `gens`.
    pub fn right_ideal(gens: impl IntoIterator<Item = Word>) -> Self {
        Self::from_parts(
            Arc::new(TwoSidedBase::new(Vec::new())),
            gens.into_iter().collect(),
            None,
            None,
        )
    }

    /// The unit ideal `<1>`; a fixed point of every colon operator.
    pub fn unit() -> Self {
        MonomialIdeal {
            base: Arc::new(TwoSidedBase::new(Vec::new())),
            right: vec![Word::empty()],
            truncation: None,
            known_up_to: None,
        }
    }

    /// General constructor; canonicalizes the right part against the base
    /// and the truncation level.
    pub fn from_parts(
        base: Arc<TwoSidedBase>,
        right: Vec<Word>,
        truncation: Option<u32>,
        known_up_to: Option<u32>,
    ) -> Self {
        if right.iter().any(Word::is_empty) {
            return Self::unit();
        }
        let right = canonical_right_part(&base, right, truncation);
        MonomialIdeal {
            base,
            right,
            truncation,
            known_up_to,
        }
    }

    /// Add the truncation level `e`: the ideal also contains every word of
    /// total degree > `e`.
    pub fn truncated(self, e: u32) -> Self {
        if self.is_unit() {
            return self;
        }
        Self::from_parts(self.base, self.right, Some(e), self.known_up_to)
    }

    /// Mark the generator list as complete only up to total degree `d`
    /// (guess mode for infinitely generated ideals).
    pub fn with_degree_bound(self, d: u32) -> Self {
        if self.is_unit() {
            return self;
        }
        MonomialIdeal {
            known_up_to: Some(d),
            ..self
        }
    }

    pub fn base(&self) -> &Arc<TwoSidedBase> {
        &self.base
    }

    pub fn right_part(&self) -> &[Word] {
        &self.right
    }

    pub fn truncation_level(&self) -> Option<u32> {
        self.truncation
    }

    pub fn known_up_to(&self) -> Option<u32> {
        self.known_up_to
    }

    pub fn is_unit(&self) -> bool {
        self.right.first().map(Word::is_empty).unwrap_or(false)
    }

    /// Language membership: some base word is a factor of `w`, or some right
    /// generator is a prefix of `w`, or `w` lies beyond the truncation level.
    pub fn contains(&self, w: &Word) -> bool {
        if let Some(e) = self.truncation {
            if w.total_degree() > e {
                return true;
            }
        }
        for p in &self.right {
            if p.total_degree() > w.total_degree() {
                break;
            }
            if is_prefix(p, w) {
                return true;
            }
        }
        for t in self.base.words() {
            if t.total_degree() > w.total_degree() {
                break;
            }
            if is_factor(t, w) {
                return true;
            }
        }
        false
    }

    /// The colon ideal `(I :_R x_i)`.
    pub fn colon_var(&self, i: Var) -> Result<MonomialIdeal, ColonError> {
        if self.is_unit() {
            return Ok(self.clone());
        }
        if self.known_up_to == Some(0) {
            return Err(ColonError::DegreeBudgetExhausted);
        }
        let xi = Word::single(i);
        if self.contains(&xi) {
            return Ok(Self::unit());
        }
        let mut cands: Vec<Word> = Vec::new();
        for p in &self.right {
            if p.first() == Some(i) {
                cands.push(p.suffix_from(1));
            }
        }
        for t in self.base.words() {
            if t.first() == Some(i) {
                cands.push(t.suffix_from(1));
            }
        }
        Ok(Self::from_parts(
            Arc::clone(&self.base),
            cands,
            self.truncation.map(|e| e - 1),
            self.known_up_to.map(|d| d - 1),
        ))
    }

    /// Left-to-right iterated colon: `(I :_R w)`.
    pub fn colon_word(&self, w: &Word) -> Result<MonomialIdeal, ColonError> {
        let mut out = self.clone();
        for &letter in w.letters() {
            out = out.colon_var(letter)?;
        }
        Ok(out)
    }

    /// Deterministic encoding of `(P, truncation_level)`. Two orbit elements
    /// over the same base are equal in exact mode iff their keys are equal.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut out = Vec::new();
        match self.truncation {
            None => out.push(0u8),
            Some(e) => {
                out.push(1u8);
                out.extend_from_slice(&e.to_be_bytes());
            }
        }
        out.extend_from_slice(&(self.right.len() as u32).to_be_bytes());
        for w in &self.right {
            out.extend_from_slice(&(w.total_degree()).to_be_bytes());
            for &l in w.letters() {
                out.extend_from_slice(&l.to_be_bytes());
            }
        }
        out
    }

    /// Orbit-element equality. In exact mode this is key equality; in guess
    /// mode generators are compared only up to the smaller knowledge bound.
    pub fn same_orbit_element(&self, other: &MonomialIdeal) -> bool {
        debug_assert!(Arc::ptr_eq(&self.base, &other.base) || self.is_unit() || other.is_unit());
        if self.is_unit() || other.is_unit() {
            return self.is_unit() == other.is_unit();
        }
        if self.truncation != other.truncation {
            return false;
        }
        let bound = match (self.known_up_to, other.known_up_to) {
            (None, None) => return self.right == other.right,
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
        };
        let mut lhs = self.right.iter().filter(|w| w.total_degree() <= bound);
        let mut rhs = other.right.iter().filter(|w| w.total_degree() <= bound);
        loop {
            match (lhs.next(), rhs.next()) {
                (None, None) => return true,
                (Some(a), Some(b)) if a == b => continue,
                _ => return false,
            }
        }
    }
}

/// Canonicalize a right part against the base: drop words with a base
/// factor, words beyond the truncation level, duplicates, and words with a
/// proper prefix already kept. Returns a sorted, prefix-incomparable set.
fn canonical_right_part(
    base: &TwoSidedBase,
    mut cands: Vec<Word>,
    truncation: Option<u32>,
) -> Vec<Word> {
    if let Some(e) = truncation {
        cands.retain(|w| w.total_degree() <= e);
    }
    cands.retain(|w| {
        for t in base.words() {
            if t.total_degree() > w.total_degree() {
                return true;
            }
            if is_factor(t, w) {
                return false;
            }
        }
        true
    });
    cands.sort();
    cands.dedup();
    let mut accepted: std::collections::HashSet<&[Var]> = std::collections::HashSet::new();
    let mut keep = vec![true; cands.len()];
    for (idx, w) in cands.iter().enumerate() {
        let letters = w.letters();
        let dominated = (1..letters.len()).any(|k| accepted.contains(&letters[..k]));
        if dominated {
            keep[idx] = false;
        } else {
            accepted.insert(letters);
        }
    }
    cands
        .into_iter()
        .zip(keep)
        .filter_map(|(w, k)| if k { Some(w) } else { None })
        .collect()
}
