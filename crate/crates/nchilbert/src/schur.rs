//! Integer partitions, Schur polynomials, and the decomposition of
//! symmetric polynomials into Schur functions with integer multiplicities.
//!
//! Schur polynomials are computed by summing `t^weight` over all
//! semistandard Young tableaux of the given shape with entries in `1..=n`,
//! with a row-by-row recursion memoized on (remaining shape, previous row)
//! and a global memo across calls. Decomposition peels the graded-lex
//! leading exponent of the residual; since that exponent is dominance-
//! maximal and Kostka matrices are unitriangular, the loop terminates with
//! integer multiplicities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::polyring::{MPoly, Mono};

/// A weakly decreasing sequence of positive parts; the empty partition is
/// allowed and indexes the trivial module.
pub type Partition = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchurError {
    PartitionTooLong { parts: usize, nvars: usize },
    NotAPartition,
    NotSymmetric,
    NonIntegerCoefficient,
}

impl fmt::Display for SchurError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchurError::PartitionTooLong { parts, nvars } => {
                write!(
                    f,
                    "partition with {parts} parts does not fit in {nvars} variables"
                )
            }
            SchurError::NotAPartition => write!(f, "parts must be positive and weakly decreasing"),
            SchurError::NotSymmetric => write!(f, "polynomial is not symmetric"),
            SchurError::NonIntegerCoefficient => {
                write!(f, "symmetric polynomial has a non-integer coefficient")
            }
        }
    }
}

impl std::error::Error for SchurError {}

/// Multiplicities of a symmetric polynomial in the Schur basis. The
/// residual is what remains after subtracting every recognized Schur
/// polynomial; it is zero on success and kept for inspection.
#[derive(Debug, Clone)]
pub struct SchurDecomposition {
    pub multiplicities: BTreeMap<Partition, BigInt>,
    pub residual: MPoly,
}

impl SchurDecomposition {
    /// Entries sorted by weight, then lexicographically.
    pub fn sorted_entries(&self) -> Vec<(&Partition, &BigInt)> {
        let mut v: Vec<_> = self.multiplicities.iter().collect();
        v.sort_by_key(|(p, _)| (p.iter().sum::<u32>(), (*p).clone()));
        v
    }

    /// Recombine `sum m_lambda S_lambda(n)`; the decomposition invariant is
    /// that this returns the decomposed polynomial exactly.
    pub fn recombine(&self, nvars: usize) -> MPoly {
        let mut out = self.residual.clone();
        for (lambda, mult) in &self.multiplicities {
            let s = schur_polynomial(lambda, nvars).expect("stored partitions fit");
            out = out.add(&s.scale(&BigRational::from_integer(mult.clone())));
        }
        out
    }
}

fn validate_partition(lambda: &[u32], nvars: usize) -> Result<(), SchurError> {
    if lambda.contains(&0) || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(SchurError::NotAPartition);
    }
    if lambda.len() > nvars {
        return Err(SchurError::PartitionTooLong {
            parts: lambda.len(),
            nvars,
        });
    }
    Ok(())
}

type SchurMemo = RwLock<HashMap<(Partition, usize), MPoly>>;

fn schur_memo() -> &'static SchurMemo {
    static MEMO: OnceLock<SchurMemo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The Schur polynomial `S_lambda` in `nvars` variables: the multidegree
/// generating function of semistandard Young tableaux of shape `lambda`
/// with entries in `1..=nvars`.
pub fn schur_polynomial(lambda: &[u32], nvars: usize) -> Result<MPoly, SchurError> {
    validate_partition(lambda, nvars)?;
    let key = (lambda.to_vec(), nvars);
    if let Some(hit) = schur_memo().read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let mut local: HashMap<(usize, Vec<u8>), MPoly> = HashMap::new();
    let result = fill_rows(lambda, 0, &[], nvars, &mut local);
    schur_memo().write().unwrap().insert(key, result.clone());
    Ok(result)
}

/// Sum of `t^weight` over all ways to fill rows `row..` given the previous
/// row's entries (1-based values).
fn fill_rows(
    shape: &[u32],
    row: usize,
    prev: &[u8],
    nvars: usize,
    memo: &mut HashMap<(usize, Vec<u8>), MPoly>,
) -> MPoly {
    if row == shape.len() {
        return MPoly::one(nvars);
    }
    let width = shape[row] as usize;
    // only the first `width` entries of the previous row constrain this one
    let key = (row, prev[..width.min(prev.len())].to_vec());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut acc = MPoly::zero(nvars);
    let mut entries: Vec<u8> = Vec::with_capacity(width);
    fill_row_entries(shape, row, prev, nvars, &mut entries, &mut acc, memo);
    memo.insert(key, acc.clone());
    acc
}

fn fill_row_entries(
    shape: &[u32],
    row: usize,
    prev: &[u8],
    nvars: usize,
    entries: &mut Vec<u8>,
    acc: &mut MPoly,
    memo: &mut HashMap<(usize, Vec<u8>), MPoly>,
) {
    let width = shape[row] as usize;
    if entries.len() == width {
        let rest = fill_rows(shape, row + 1, entries, nvars, memo);
        if rest.is_zero() {
            return;
        }
        let mut weight = vec![0u32; nvars];
        for &e in entries.iter() {
            weight[e as usize - 1] += 1;
        }
        *acc = acc.add(&rest.mul_mono(&Mono(weight)));
        return;
    }
    let col = entries.len();
    // weakly increasing along the row, strictly increasing down the column
    let mut lo = entries.last().copied().unwrap_or(1);
    if col < prev.len() {
        lo = lo.max(prev[col] + 1);
    }
    for v in lo..=nvars as u8 {
        entries.push(v);
        fill_row_entries(shape, row, prev, nvars, entries, acc, memo);
        entries.pop();
    }
}

/// Invariance under every adjacent-variable transposition (these generate
/// the full symmetric group).
pub fn is_symmetric(f: &MPoly) -> bool {
    let n = f.nvars();
    for i in 0..n.saturating_sub(1) {
        for (mono, coeff) in f.terms() {
            let mut swapped = mono.0.clone();
            swapped.swap(i, i + 1);
            if &f.coeff(&Mono(swapped)) != coeff {
                return false;
            }
        }
    }
    true
}

/// Decompose a symmetric polynomial with integer coefficients into Schur
/// polynomials. Multiplicities may be negative when the input is not
/// Schur-positive; callers can inspect the signs.
pub fn decompose(f: &MPoly) -> Result<SchurDecomposition, SchurError> {
    if !f.is_integer() {
        return Err(SchurError::NonIntegerCoefficient);
    }
    if !is_symmetric(f) {
        return Err(SchurError::NotSymmetric);
    }
    let nvars = f.nvars();
    let mut residual = f.clone();
    let mut multiplicities: BTreeMap<Partition, BigInt> = BTreeMap::new();
    while let Some((mono, coeff)) = residual.leading().map(|(m, c)| (m.clone(), c.clone())) {
        // the graded-lex-greatest exponent of a symmetric polynomial is
        // weakly decreasing, hence a partition after stripping zeros
        let mut lambda: Partition = mono.0;
        debug_assert!(lambda.windows(2).all(|w| w[0] >= w[1]));
        while lambda.last() == Some(&0) {
            lambda.pop();
        }
        let mult = coeff.to_integer();
        let s = schur_polynomial(&lambda, nvars)?;
        residual = residual.sub(&s.scale(&BigRational::from_integer(mult.clone())));
        if !mult.is_zero() {
            multiplicities.insert(lambda, mult);
        }
    }
    Ok(SchurDecomposition {
        multiplicities,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn t(nvars: usize, i: usize) -> MPoly {
        MPoly::var(nvars, i)
    }

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn single_box_and_column() {
        // S_(1), n = 3 = t1 + t2 + t3
        let s = schur_polynomial(&[1], 3).unwrap();
        assert_eq!(s, t(3, 0).add(&t(3, 1)).add(&t(3, 2)));
        // S_(1,1), n = 2 = t1 t2
        let s = schur_polynomial(&[1, 1], 2).unwrap();
        assert_eq!(s, t(2, 0).mul(&t(2, 1)));
        // empty partition: the constant 1
        assert_eq!(schur_polynomial(&[], 3).unwrap(), MPoly::one(3));
    }

    #[test]
    fn hook_2_1_in_three_variables() {
        // 8 tableaux: every t_i^2 t_j (i != j) once plus 2 t1 t2 t3
        let s = schur_polynomial(&[2, 1], 3).unwrap();
        let mut expect = MPoly::zero(3);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    expect = expect.add(&t(3, i).pow(2).mul(&t(3, j)));
                }
            }
        }
        expect = expect.add(
            &t(3, 0)
                .mul(&t(3, 1))
                .mul(&t(3, 2))
                .scale(&BigRational::from_integer(2.into())),
        );
        assert_eq!(s, expect);
        assert_eq!(s.eval_at_ones(), BigRational::from_integer(8.into()));
    }

    #[test]
    fn schur_polynomials_are_symmetric_with_ssyt_counts() {
        let shapes: Vec<Partition> = vec![vec![], vec![3], vec![2, 2], vec![3, 1, 1], vec![2, 1]];
        for lambda in shapes {
            for n in lambda.len().max(1)..=4 {
                let s = schur_polynomial(&lambda, n).unwrap();
                assert!(is_symmetric(&s));
                assert!(s.is_integer());
                assert!(s.terms().all(|(_, c)| c > &BigRational::zero()));
                // value at all-ones counts the tableaux
                let count = s.eval_at_ones();
                let brute = count_ssyt_brute(&lambda, n);
                assert_eq!(count, BigRational::from_integer(brute.into()));
            }
        }
    }

    fn count_ssyt_brute(shape: &[u32], n: usize) -> u64 {
        fn rec(shape: &[u32], row: usize, prev: &[u8], n: usize) -> u64 {
            if row == shape.len() {
                return 1;
            }
            let width = shape[row] as usize;
            let mut total = 0;
            let mut entries = vec![0u8; width];
            fn fill(
                shape: &[u32],
                row: usize,
                prev: &[u8],
                n: usize,
                entries: &mut Vec<u8>,
                col: usize,
                total: &mut u64,
            ) {
                let width = shape[row] as usize;
                if col == width {
                    *total += rec(shape, row + 1, entries, n);
                    return;
                }
                let mut lo = if col == 0 { 1 } else { entries[col - 1] };
                if col < prev.len() {
                    lo = lo.max(prev[col] + 1);
                }
                for v in lo..=n as u8 {
                    entries[col] = v;
                    fill(shape, row, prev, n, entries, col + 1, total);
                }
            }
            fill(shape, row, prev, n, &mut entries, 0, &mut total);
            total
        }
        rec(shape, 0, &[], n)
    }

    #[test]
    fn partition_validation() {
        match schur_polynomial(&[1, 1, 1], 2) {
            Err(SchurError::PartitionTooLong { parts: 3, nvars: 2 }) => {}
            other => panic!("expected partition-too-long, got {other:?}"),
        }
        assert_eq!(schur_polynomial(&[1, 2], 3), Err(SchurError::NotAPartition));
        assert_eq!(schur_polynomial(&[2, 0], 3), Err(SchurError::NotAPartition));
    }

    #[test]
    fn symmetry_examples() {
        let p = t(3, 0)
            .mul(&t(3, 1))
            .add(&t(3, 0).mul(&t(3, 2)))
            .add(&t(3, 1).mul(&t(3, 2)))
            .add(&MPoly::one(3));
        assert!(is_symmetric(&p));
        assert!(!is_symmetric(&t(3, 0).pow(2).mul(&t(3, 1))));
        assert!(is_symmetric(&MPoly::int(2, 7)));
        assert!(is_symmetric(&MPoly::zero(4)));
    }

    #[test]
    fn decompose_complete_and_elementary() {
        // h_2 in 2 variables = S_(2)
        let h2 = t(2, 0)
            .pow(2)
            .add(&t(2, 0).mul(&t(2, 1)))
            .add(&t(2, 1).pow(2));
        let d = decompose(&h2).unwrap();
        assert_eq!(d.multiplicities, BTreeMap::from([(vec![2], int(1))]));
        assert!(d.residual.is_zero());
        // e_2 in 3 variables = S_(1,1)
        let e2 = t(3, 0)
            .mul(&t(3, 1))
            .add(&t(3, 0).mul(&t(3, 2)))
            .add(&t(3, 1).mul(&t(3, 2)));
        let d = decompose(&e2).unwrap();
        assert_eq!(d.multiplicities, BTreeMap::from([(vec![1, 1], int(1))]));
    }

    #[test]
    fn decompose_rejects_bad_inputs() {
        assert_eq!(decompose(&t(3, 0)).unwrap_err(), SchurError::NotSymmetric);
        let half = MPoly::constant(2, BigRational::new(1.into(), 2.into()));
        assert_eq!(
            decompose(&half).unwrap_err(),
            SchurError::NonIntegerCoefficient
        );
    }

    #[test]
    fn decompose_inverts_schur_polynomial() {
        // every partition of weight <= 6 in up to 4 variables
        for n in 1..=4usize {
            for lambda in partitions_up_to(6, n) {
                let s = schur_polynomial(&lambda, n).unwrap();
                let d = decompose(&s).unwrap();
                assert_eq!(
                    d.multiplicities,
                    BTreeMap::from([(lambda.clone(), int(1))]),
                    "{lambda:?}"
                );
                assert!(d.residual.is_zero());
            }
        }
    }

    fn partitions_up_to(max_weight: u32, max_parts: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(
            remaining: u32,
            max_part: u32,
            parts_left: usize,
            cur: &mut Partition,
            out: &mut Vec<Partition>,
        ) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            if parts_left == 0 {
                return;
            }
            for p in 1..=remaining.min(max_part) {
                cur.push(p);
                rec(remaining - p, p, parts_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut cur = Vec::new();
        rec(max_weight, max_weight, max_parts, &mut cur, &mut out);
        out.sort();
        out.dedup();
        // nonempty partitions only; the empty one is exercised elsewhere
        out
    }

    #[test]
    fn recombination_of_symmetrized_random_polys() {
        // symmetrize small integer polynomials over S_3 and decompose
        let seeds = vec![
            t(3, 0).pow(3).add(&t(3, 1).mul(&t(3, 2))),
            t(3, 0)
                .pow(2)
                .mul(&t(3, 1))
                .scale(&BigRational::from_integer(3.into())),
            MPoly::int(3, 2).add(&t(3, 0).pow(4)),
        ];
        for seed in seeds {
            let mut sym = MPoly::zero(3);
            for perm in [
                [0, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0],
            ] {
                for (mono, c) in seed.terms() {
                    let mut e = vec![0u32; 3];
                    for (src, &dst) in perm.iter().enumerate() {
                        e[dst] = mono.0[src];
                    }
                    sym.add_term(Mono(e), c.clone());
                }
            }
            let d = decompose(&sym).unwrap();
            assert!(d.residual.is_zero());
            assert_eq!(d.recombine(3), sym);
        }
    }

    #[test]
    fn sorted_entries_order() {
        let p = schur_polynomial(&[2], 2)
            .unwrap()
            .add(&schur_polynomial(&[1, 1], 2).unwrap())
            .add(&MPoly::one(2));
        let d = decompose(&p).unwrap();
        let order: Vec<Partition> = d
            .sorted_entries()
            .iter()
            .map(|(p, _)| (*p).clone())
            .collect();
        assert_eq!(order, vec![vec![], vec![1, 1], vec![2]]);
        let total: i64 = d.multiplicities.values().map(|m| m.to_i64().unwrap()).sum();
        assert_eq!(total, 3);
    }
}
