//! The computation façade: request validation, ideal construction, orbit
//! computation, solver dispatch, grading/affine/Schur post-processing, and
//! the brute-force normal-word oracle.

use std::collections::BTreeMap;
use std::fmt;

use crate::ideals::MonomialIdeal;
use crate::orbit::{compute_orbit, OrbitError};
use crate::polyring::{MPoly, PolyError, RatFun};
use crate::schur::{decompose, SchurDecomposition, SchurError};
use crate::solver::{solve_polynomial, solve_rational};
use crate::words::{Alphabet, MultiDegree, Word};

pub const DEFAULT_MAX_ORBIT: usize = 10_000;
/// Cap on `n^d` for the enumeration oracle.
pub const DEFAULT_ORACLE_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    TwoSided,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Truncate(u32),
    DegreeBound(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grading {
    Graded,
    Multigraded,
}

#[derive(Debug, Clone)]
pub struct ComputationRequest {
    pub alphabet: Alphabet,
    pub generators: Vec<Word>,
    pub kind: IdealKind,
    pub mode: Mode,
    pub grading: Grading,
    pub affine: bool,
    pub schur: bool,
    pub max_orbit: usize,
}

impl ComputationRequest {
    pub fn new(alphabet: Alphabet, generators: Vec<Word>, kind: IdealKind) -> Self {
        ComputationRequest {
            alphabet,
            generators,
            kind,
            mode: Mode::Exact,
            grading: Grading::Graded,
            affine: false,
            schur: false,
            max_orbit: DEFAULT_MAX_ORBIT,
        }
    }
}

/// Either a closed rational form or the polynomial of a finite-dimensional
/// (or truncated) algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesOutput {
    Rational(RatFun),
    Polynomial(MPoly),
}

impl SeriesOutput {
    pub fn as_ratfun(&self) -> RatFun {
        match self {
            SeriesOutput::Rational(r) => r.clone(),
            SeriesOutput::Polynomial(p) => RatFun::from_poly(p.clone()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ComputationResult {
    pub series: SeriesOutput,
    pub orbit_size: usize,
    pub max_word_length: u32,
    pub heuristic: bool,
    pub schur: Option<SchurDecomposition>,
    pub oracle: Option<BTreeMap<MultiDegree, u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComputeError {
    OrbitLimitExceeded { limit: usize },
    DegreeBudgetExhausted,
    InvalidRequest(String),
    EnumerationBudgetExceeded { words: u64, cap: u64 },
}

impl fmt::Display for ComputeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComputeError::OrbitLimitExceeded { limit } => {
                write!(
                    f,
                    "orbit exceeds {limit} elements; the ideal may not be regular"
                )
            }
            ComputeError::DegreeBudgetExhausted => write!(
                f,
                "degree budget exhausted; supply generators up to a higher degree bound"
            ),
            ComputeError::InvalidRequest(msg) => write!(f, "{msg}"),
            ComputeError::EnumerationBudgetExceeded { words, cap } => {
                write!(
                    f,
                    "oracle would enumerate ~{words} words, over the cap of {cap}"
                )
            }
        }
    }
}

impl std::error::Error for ComputeError {}

impl From<OrbitError> for ComputeError {
    fn from(e: OrbitError) -> Self {
        match e {
            OrbitError::LimitExceeded { limit } => ComputeError::OrbitLimitExceeded { limit },
            OrbitError::DegreeBudgetExhausted => ComputeError::DegreeBudgetExhausted,
            OrbitError::EmptyReducedOrbit => {
                unreachable!("unit input is handled before reduction")
            }
        }
    }
}

impl From<SchurError> for ComputeError {
    fn from(e: SchurError) -> Self {
        ComputeError::InvalidRequest(format!("Schur decomposition failed: {e}"))
    }
}

impl From<PolyError> for ComputeError {
    fn from(e: PolyError) -> Self {
        ComputeError::InvalidRequest(e.to_string())
    }
}

fn validate(req: &ComputationRequest) -> Result<(), ComputeError> {
    let n = req.alphabet.n();
    for g in &req.generators {
        if g.letters().iter().any(|&l| l as usize >= n) {
            return Err(ComputeError::InvalidRequest(
                "generator uses a variable outside the alphabet".into(),
            ));
        }
    }
    if req.affine && req.grading == Grading::Multigraded {
        return Err(ComputeError::InvalidRequest(
            "affine series are univariate; combine --affine with graded output".into(),
        ));
    }
    if req.schur && req.grading != Grading::Multigraded {
        return Err(ComputeError::InvalidRequest(
            "Schur decomposition needs multigraded output".into(),
        ));
    }
    if req.max_orbit == 0 {
        return Err(ComputeError::InvalidRequest(
            "max orbit size must be positive".into(),
        ));
    }
    if let Mode::DegreeBound(d) = req.mode {
        let max_gen = req
            .generators
            .iter()
            .map(Word::total_degree)
            .max()
            .unwrap_or(0);
        if d < max_gen {
            return Err(ComputeError::InvalidRequest(format!(
                "degree bound {d} is below the largest generator degree {max_gen}"
            )));
        }
    }
    Ok(())
}

fn build_ideal(req: &ComputationRequest) -> MonomialIdeal {
    let ideal = match req.kind {
        IdealKind::TwoSided => MonomialIdeal::two_sided(req.generators.iter().cloned()),
        IdealKind::Right => MonomialIdeal::right_ideal(req.generators.iter().cloned()),
    };
    match req.mode {
        Mode::Exact => ideal,
        Mode::Truncate(d) => ideal.truncated(d),
        Mode::DegreeBound(d) => ideal.with_degree_bound(d),
    }
}

/// Orbit plus dispatch: the polynomial path whenever the reduced orbit is
/// acyclic (even in exact mode), the rational solve otherwise.
pub fn hilbert_series(req: &ComputationRequest) -> Result<ComputationResult, ComputeError> {
    validate(req)?;
    let n = req.alphabet.n();
    let multigraded = req.grading == Grading::Multigraded;
    let series_nvars = if multigraded { n } else { 1 };
    let ideal = build_ideal(req);
    let orbit = compute_orbit(&ideal, n, req.max_orbit)?;
    let heuristic = matches!(req.mode, Mode::DegreeBound(_));

    let (series, polynomial) = if ideal.is_unit() {
        (RatFun::zero(series_nvars), true)
    } else {
        let reduced = orbit.reduced().expect("non-unit input has a reduced orbit");
        match reduced.nilpotency_order() {
            Some(order) => {
                let full_order: Vec<usize> = order
                    .iter()
                    .map(|&k| reduced.original_indices()[k])
                    .collect();
                let sol = solve_polynomial(&orbit, &full_order, multigraded)
                    .expect("topological order from the orbit itself");
                (sol.principal().clone(), true)
            }
            None => {
                let sol = solve_rational(&orbit, multigraded);
                (sol.principal().clone(), false)
            }
        }
    };

    let series = if req.affine {
        // growth series: divide the graded series by (1 - t)
        let den = MPoly::one(1).sub(&MPoly::var(1, 0));
        series.div(&RatFun::from_poly(den))?
    } else {
        series
    };

    let output = if !req.affine && polynomial {
        let p = series
            .as_polynomial()
            .expect("polynomial-path series has denominator 1")
            .clone();
        SeriesOutput::Polynomial(p)
    } else {
        SeriesOutput::Rational(series)
    };

    let schur = if req.schur {
        let poly = match &output {
            SeriesOutput::Polynomial(p) => p.clone(),
            SeriesOutput::Rational(r) => match r.as_polynomial() {
                Some(p) => p.clone(),
                None => {
                    return Err(ComputeError::InvalidRequest(
                        "Schur decomposition needs a polynomial series; truncate the input or \
                         use a finite-dimensional algebra"
                            .into(),
                    ))
                }
            },
        };
        Some(decompose(&poly)?)
    } else {
        None
    };

    Ok(ComputationResult {
        series: output,
        orbit_size: orbit.len(),
        max_word_length: orbit.max_defining_word_length(),
        heuristic,
        schur,
        oracle: None,
    })
}

/// Exhaustive enumeration of normal words (words outside the ideal) up to
/// the truncation degree, counted per multidegree. Requires truncate mode;
/// this is the brute-force Hilbert function by definition and stays
/// independent of the orbit/solver path.
pub fn normal_words_oracle(
    req: &ComputationRequest,
) -> Result<BTreeMap<MultiDegree, u64>, ComputeError> {
    normal_words_oracle_capped(req, DEFAULT_ORACLE_CAP)
}

pub fn normal_words_oracle_capped(
    req: &ComputationRequest,
    cap: u64,
) -> Result<BTreeMap<MultiDegree, u64>, ComputeError> {
    validate(req)?;
    let d = match req.mode {
        Mode::Truncate(d) => d,
        _ => {
            return Err(ComputeError::InvalidRequest(
                "the normal-word oracle needs truncate mode".into(),
            ))
        }
    };
    let n = req.alphabet.n();
    let mut words: u64 = 1;
    for _ in 0..d {
        words = words.saturating_mul(n as u64);
        if words > cap {
            return Err(ComputeError::EnumerationBudgetExceeded { words, cap });
        }
    }

    let mut counts: BTreeMap<MultiDegree, u64> = BTreeMap::new();
    if req.generators.iter().any(Word::is_empty) {
        return Ok(counts); // unit ideal: no normal words at all
    }
    *counts.entry(vec![0; n]).or_insert(0) += 1;
    let mut stack: Vec<u16> = Vec::with_capacity(d as usize);
    enumerate(
        &mut stack,
        d,
        n as u16,
        req.kind,
        &req.generators,
        &mut counts,
    );
    Ok(counts)
}

/// Walk the word tree, pruning at the first word that enters the ideal
/// (the ideal language is closed under right multiplication, so nothing is
/// missed). Membership of `w * a` given that `w` is normal reduces to a
/// check at the last position.
fn enumerate(
    stack: &mut Vec<u16>,
    max_depth: u32,
    n: u16,
    kind: IdealKind,
    gens: &[Word],
    counts: &mut BTreeMap<MultiDegree, u64>,
) {
    if stack.len() as u32 == max_depth {
        return;
    }
    for a in 0..n {
        stack.push(a);
        let entered = match kind {
            // a new two-sided factor must end at the last letter
            IdealKind::TwoSided => gens.iter().any(|g| {
                let gl = g.letters();
                gl.len() <= stack.len() && &stack[stack.len() - gl.len()..] == gl
            }),
            // a new prefix must be the whole word
            IdealKind::Right => gens.iter().any(|g| g.letters() == stack.as_slice()),
        };
        if !entered {
            let mut md = vec![0u32; n as usize];
            for &l in stack.iter() {
                md[l as usize] += 1;
            }
            *counts.entry(md).or_insert(0) += 1;
            enumerate(stack, max_depth, n, kind, gens, counts);
        }
        stack.pop();
    }
}

/// Graded totals of a per-multidegree table.
pub fn graded_totals(table: &BTreeMap<MultiDegree, u64>) -> BTreeMap<u32, u64> {
    let mut out = BTreeMap::new();
    for (md, count) in table {
        *out.entry(md.iter().sum::<u32>()).or_insert(0) += count;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{grassmann_alphabet, grassmann_generators};
    use crate::polyring::Mono;
    use num_rational::BigRational;

    fn grassmann_request(mode: Mode, grading: Grading) -> ComputationRequest {
        let mut req = ComputationRequest::new(
            grassmann_alphabet(),
            grassmann_generators(match mode {
                Mode::DegreeBound(d) | Mode::Truncate(d) => d,
                Mode::Exact => 10,
            }),
            IdealKind::TwoSided,
        );
        req.mode = mode;
        req.grading = grading;
        req
    }

    #[test]
    fn grassmann_degree_bound_mode() {
        let req = grassmann_request(Mode::DegreeBound(10), Grading::Multigraded);
        let res = hilbert_series(&req).unwrap();
        assert!(res.heuristic);
        assert_eq!(res.orbit_size, 7);
        assert_eq!(res.max_word_length, 3);
        let expect = crate::solver::grassmann_expected_series();
        assert_eq!(res.series.as_ratfun(), expect);
    }

    #[test]
    fn grassmann_truncated_mode() {
        let req = grassmann_request(Mode::Truncate(10), Grading::Multigraded);
        let res = hilbert_series(&req).unwrap();
        assert!(!res.heuristic);
        assert_eq!(res.orbit_size, 51);
        match &res.series {
            SeriesOutput::Polynomial(p) => assert_eq!(p.num_terms(), 286),
            other => panic!("expected polynomial output, got {other:?}"),
        }
    }

    #[test]
    fn fibonacci_affine_series() {
        let alphabet = Alphabet::new(["x", "y"]).unwrap();
        let mut req = ComputationRequest::new(
            alphabet,
            vec![Word::from_letters(vec![0, 0])],
            IdealKind::TwoSided,
        );
        req.affine = true;
        let res = hilbert_series(&req).unwrap();
        // (1 + t) / ((1 - t - t^2)(1 - t)); coefficients are partial sums
        // of the Fibonacci dimensions
        let series = res.series.as_ratfun();
        let p = series.taylor_truncate(6).unwrap();
        let coeffs: Vec<i64> = (0..=6)
            .map(|k| {
                let c = p.coeff(&Mono(vec![k]));
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect();
        // graded dims: 1 2 3 5 8 13 21 -> partial sums
        assert_eq!(coeffs, vec![1, 3, 6, 11, 19, 32, 53]);
    }

    #[test]
    fn mode_validation() {
        let mut req = grassmann_request(Mode::Exact, Grading::Multigraded);
        req.affine = true;
        assert!(matches!(
            hilbert_series(&req),
            Err(ComputeError::InvalidRequest(_))
        ));

        let mut req = grassmann_request(Mode::Exact, Grading::Graded);
        req.schur = true;
        assert!(matches!(
            hilbert_series(&req),
            Err(ComputeError::InvalidRequest(_))
        ));

        // degree bound below the largest generator degree
        let mut req = grassmann_request(Mode::DegreeBound(10), Grading::Graded);
        req.mode = Mode::DegreeBound(2);
        assert!(matches!(
            hilbert_series(&req),
            Err(ComputeError::InvalidRequest(_))
        ));
    }

    #[test]
    fn schur_on_rational_series_is_rejected() {
        let mut req = grassmann_request(Mode::DegreeBound(10), Grading::Multigraded);
        req.schur = true;
        assert!(matches!(
            hilbert_series(&req),
            Err(ComputeError::InvalidRequest(_))
        ));
    }

    #[test]
    fn orbit_limit_surfaces() {
        let mut req = grassmann_request(Mode::Exact, Grading::Graded);
        req.max_orbit = 2;
        match hilbert_series(&req) {
            Err(ComputeError::OrbitLimitExceeded { limit: 2 }) => {}
            other => panic!("expected orbit limit error, got {other:?}"),
        }
    }

    #[test]
    fn unit_ideal_yields_zero_series() {
        let alphabet = Alphabet::new(["x"]).unwrap();
        let req = ComputationRequest::new(alphabet, vec![Word::empty()], IdealKind::TwoSided);
        let res = hilbert_series(&req).unwrap();
        assert_eq!(res.orbit_size, 1);
        match &res.series {
            SeriesOutput::Polynomial(p) => assert!(p.is_zero()),
            other => panic!("expected zero polynomial, got {other:?}"),
        }
    }

    #[test]
    fn oracle_grassmann_low_degrees() {
        let mut req = grassmann_request(Mode::Truncate(3), Grading::Multigraded);
        req.generators = grassmann_generators(10);
        let table = normal_words_oracle(&req).unwrap();
        let totals = graded_totals(&table);
        assert_eq!(totals, BTreeMap::from([(0, 1), (1, 3), (2, 9), (3, 19)]));
    }

    #[test]
    fn oracle_trivial_cases() {
        // unit ideal: empty table
        let alphabet = Alphabet::new(["x", "y"]).unwrap();
        let mut req =
            ComputationRequest::new(alphabet.clone(), vec![Word::empty()], IdealKind::TwoSided);
        req.mode = Mode::Truncate(4);
        assert!(normal_words_oracle(&req).unwrap().is_empty());

        // zero ideal over n = 2, d = 2: binomial counts per multidegree
        let mut req = ComputationRequest::new(alphabet, Vec::new(), IdealKind::TwoSided);
        req.mode = Mode::Truncate(2);
        let table = normal_words_oracle(&req).unwrap();
        let expect = BTreeMap::from([
            (vec![0, 0], 1),
            (vec![1, 0], 1),
            (vec![0, 1], 1),
            (vec![2, 0], 1),
            (vec![1, 1], 2),
            (vec![0, 2], 1),
        ]);
        assert_eq!(table, expect);
    }

    #[test]
    fn oracle_budget() {
        let alphabet = Alphabet::new(["x", "y", "z"]).unwrap();
        let mut req = ComputationRequest::new(alphabet, Vec::new(), IdealKind::TwoSided);
        req.mode = Mode::Truncate(10);
        assert!(matches!(
            normal_words_oracle_capped(&req, 100),
            Err(ComputeError::EnumerationBudgetExceeded { .. })
        ));
    }

    #[test]
    fn truncated_series_matches_oracle_small() {
        let alphabet = Alphabet::new(["x", "y", "z"]).unwrap();
        let gens = vec![
            Word::from_letters(vec![0, 1]),
            Word::from_letters(vec![1, 1, 2]),
            Word::from_letters(vec![2, 2]),
        ];
        let mut req = ComputationRequest::new(alphabet, gens, IdealKind::TwoSided);
        req.mode = Mode::Truncate(6);
        req.grading = Grading::Multigraded;
        let res = hilbert_series(&req).unwrap();
        let table = normal_words_oracle(&req).unwrap();
        let poly = match &res.series {
            SeriesOutput::Polynomial(p) => p.clone(),
            other => panic!("expected polynomial, got {other:?}"),
        };
        let mut expect = MPoly::zero(3);
        for (md, count) in &table {
            expect.add_term(Mono(md.clone()), BigRational::from_integer((*count).into()));
        }
        assert_eq!(poly, expect);
    }

    #[test]
    fn graded_equals_specialized_multigraded() {
        for mode in [Mode::Exact, Mode::Truncate(7)] {
            let multi = hilbert_series(&grassmann_request(mode, Grading::Multigraded)).unwrap();
            let graded = hilbert_series(&grassmann_request(mode, Grading::Graded)).unwrap();
            assert_eq!(
                multi.series.as_ratfun().specialize_graded(),
                graded.series.as_ratfun()
            );
        }
    }

    #[test]
    fn free_algebra_truncation_is_schur_positive() {
        // tensor powers of the natural module: every multiplicity >= 0
        let alphabet = Alphabet::new(["x", "y", "z"]).unwrap();
        let mut req = ComputationRequest::new(alphabet, Vec::new(), IdealKind::TwoSided);
        req.mode = Mode::Truncate(5);
        req.grading = Grading::Multigraded;
        req.schur = true;
        let res = hilbert_series(&req).unwrap();
        let schur = res.schur.unwrap();
        assert!(schur.residual.is_zero());
        assert!(schur.multiplicities.values().all(|m| m > &num_bigint::BigInt::from(0)));
        // weight-2 layer of (t1+t2+t3)^2: S_(2) + S_(1,1)
        assert_eq!(schur.multiplicities[&vec![2]], 1.into());
        assert_eq!(schur.multiplicities[&vec![1, 1]], 1.into());
        // weight-3 layer: S_(3) + 2 S_(2,1) + S_(1,1,1)
        assert_eq!(schur.multiplicities[&vec![2, 1]], 2.into());
        assert_eq!(schur.multiplicities[&vec![1, 1, 1]], 1.into());
    }

    #[test]
    fn guess_mode_stabilizes() {
        let base = hilbert_series(&grassmann_request(
            Mode::DegreeBound(8),
            Grading::Multigraded,
        ))
        .unwrap()
        .series
        .as_ratfun();
        for d in [9u32, 10] {
            let s = hilbert_series(&grassmann_request(
                Mode::DegreeBound(d),
                Grading::Multigraded,
            ))
            .unwrap()
            .series
            .as_ratfun();
            assert_eq!(s, base);
        }
    }
}
