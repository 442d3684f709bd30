//! Exact graded and multigraded Hilbert series of (quotients of) free
//! associative algebras and right modules presented by monomial generators.
//!
//! The engine builds the orbit of the input ideal under the colon
//! operators `I -> (I :_R x_i)` — a finite automaton whenever the monomial
//! language is regular — and solves the resulting linear system
//! `(E - sum_i t_i A^(i)) H = C` exactly over the integers. Truncation,
//! finite-dimension detection, degree-bound guessing for infinitely
//! generated ideals, affine (growth) series and Schur-function
//! decomposition of symmetric answers sit on top.
//!
//! Entry points:
//!
//! * [`series::hilbert_series`] — the full pipeline for a
//!   [`series::ComputationRequest`].
//! * [`series::normal_words_oracle`] — brute-force enumeration of normal
//!   words, the independent cross-check.
//! * [`cli::run`] — the command-line front end (see the `nchilbert` binary).
//!
//! ```
//! use nchilbert::series::{hilbert_series, ComputationRequest, IdealKind};
//! use nchilbert::words::{Alphabet, Word};
//!
//! // K<x, y> / <x*x>: graded dimensions are the Fibonacci numbers
//! let alphabet = Alphabet::new(["x", "y"]).unwrap();
//! let gens = vec![Word::from_letters(vec![0, 0])];
//! let req = ComputationRequest::new(alphabet, gens, IdealKind::TwoSided);
//! let res = hilbert_series(&req).unwrap();
//! assert_eq!(res.series.as_ratfun().to_string(), "(1 + t) / (1 - t - t^2)");
//! ```

pub mod cli;
pub mod fixtures;
pub mod ideals;
pub mod input;
pub mod orbit;
pub mod polyring;
pub mod report;
pub mod schur;
pub mod series;
pub mod solver;
pub mod words;
