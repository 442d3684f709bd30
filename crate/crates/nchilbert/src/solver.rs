//! Exact solvers for the key linear system `(E - sum_i t_i A^(i)) H = C`.
//!
//! Two routes are provided and cross-checked in the tests:
//!
//! * `solve_rational` — fraction-free (Bareiss) elimination over the
//!   polynomial ring. Entries of the system matrix have total degree <= 1;
//!   the denominator of every solution entry emerges as a single
//!   determinant, so no rational-function arithmetic happens during
//!   elimination.
//! * `solve_polynomial` — back-substitution in reverse topological order
//!   for orbits whose reduced transition graph is acyclic. All entries are
//!   then polynomials with nonnegative integer coefficients and no division
//!   is needed at all.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::orbit::Orbit;
use crate::polyring::{MPoly, Mono, RatFun};
use crate::words::MultiDegree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The supplied order is not a topological order of the reduced orbit.
    OrderInvalid(String),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::OrderInvalid(msg) => write!(f, "invalid topological order: {msg}"),
        }
    }
}

impl std::error::Error for SolveError {}

/// Per-orbit-element Hilbert series.
#[derive(Debug, Clone)]
pub struct SeriesSolution {
    /// One series per orbit element, indexed like the orbit. The entry of
    /// the unit-ideal state is 0.
    pub entries: Vec<RatFun>,
    pub multigraded: bool,
    /// All entries are polynomials (denominator 1).
    pub polynomial: bool,
    /// Set downstream when the orbit came from degree-bound guess mode.
    pub heuristic: bool,
}

impl SeriesSolution {
    /// The series of the input ideal (orbit element 0).
    pub fn principal(&self) -> &RatFun {
        &self.entries[0]
    }
}

fn system_nvars(orbit: &Orbit, multigraded: bool) -> usize {
    if multigraded {
        orbit.nvars()
    } else {
        1
    }
}

/// Monomial `t_1^{d_1} ... t_n^{d_n}` for a multidegree.
pub fn shift_monomial(delta: &MultiDegree, nvars: usize) -> MPoly {
    debug_assert_eq!(delta.len(), nvars);
    MPoly::monomial(nvars, Mono(delta.clone()), BigRational::one())
}

/// Solve the full system exactly; works for every closed orbit. The matrix
/// `E - sum_i t_i A^(i)` (or `E - t A` in graded mode) is invertible, so no
/// error case exists.
pub fn solve_rational(orbit: &Orbit, multigraded: bool) -> SeriesSolution {
    let r = orbit.len();
    let nv = system_nvars(orbit, multigraded);
    // augmented matrix [E - M | C]
    let mut rows: Vec<Vec<MPoly>> = vec![vec![MPoly::zero(nv); r + 1]; r];
    for (k, row) in orbit.transitions().iter().enumerate() {
        rows[k][k] = rows[k][k].add(&MPoly::one(nv));
        for (i, &l) in row.iter().enumerate() {
            let var = if multigraded { i } else { 0 };
            rows[k][l] = rows[k][l].sub(&MPoly::var(nv, var));
        }
        rows[k][r] = MPoly::int(nv, i64::from(orbit.constants()[k]));
    }

    let numerators_and_det = fraction_free_solve(&mut rows, r, nv);
    let (numerators, det) = numerators_and_det;
    let entries = numerators
        .into_iter()
        .map(|n| RatFun::new(n, det.clone()).expect("nonsingular system"))
        .collect();
    SeriesSolution {
        entries,
        multigraded,
        polynomial: false,
        heuristic: false,
    }
}

/// Fraction-free Gaussian elimination with Bareiss one-step updates and
/// exact back-substitution. Pivots are chosen per column by minimal term
/// count, ties broken by row index. Returns the Cramer numerators and the
/// shared determinant denominator.
fn fraction_free_solve(rows: &mut [Vec<MPoly>], r: usize, nv: usize) -> (Vec<MPoly>, MPoly) {
    let mut prev = MPoly::one(nv);
    for col in 0..r {
        let pivot_row = (col..r)
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| (rows[i][col].num_terms(), i))
            .expect("system matrix is invertible");
        rows.swap(col, pivot_row);
        let pivot = rows[col][col].clone();
        for i in col + 1..r {
            if rows[i][col].is_zero() {
                if pivot == prev {
                    continue;
                }
                for j in col + 1..=r {
                    if rows[i][j].is_zero() {
                        continue;
                    }
                    rows[i][j] = rows[i][j]
                        .mul(&pivot)
                        .div_exact(&prev)
                        .expect("Bareiss scaling divides exactly");
                }
            } else {
                let factor = rows[i][col].clone();
                for j in col + 1..=r {
                    let scaled = rows[i][j].mul(&pivot).sub(&factor.mul(&rows[col][j]));
                    rows[i][j] = scaled
                        .div_exact(&prev)
                        .expect("Bareiss update divides exactly");
                }
                rows[i][col] = MPoly::zero(nv);
            }
        }
        prev = pivot;
    }

    // rows is now upper triangular with rows[k][k] the k-th leading minor
    // of the pivoted matrix; det = rows[r-1][r-1]. Every solution entry is
    // x_k = N_k / det with polynomial N_k (Cramer), recovered by exact
    // divisions only.
    let det = rows[r - 1][r - 1].clone();
    let mut numerators = vec![MPoly::zero(nv); r];
    for k in (0..r).rev() {
        let mut acc = rows[k][r].mul(&det);
        for j in k + 1..r {
            if !rows[k][j].is_zero() && !numerators[j].is_zero() {
                acc = acc.sub(&rows[k][j].mul(&numerators[j]));
            }
        }
        numerators[k] = acc
            .div_exact(&rows[k][k])
            .expect("back-substitution divides exactly");
    }
    (numerators, det)
}

/// Polynomial fast path for orbits whose reduced transition graph is
/// acyclic. `order` lists the non-unit states (full-orbit indices) in
/// topological order; series are accumulated in reverse.
pub fn solve_polynomial(
    orbit: &Orbit,
    order: &[usize],
    multigraded: bool,
) -> Result<SeriesSolution, SolveError> {
    let r = orbit.len();
    let nv = system_nvars(orbit, multigraded);
    let unit = orbit.unit_index();

    // validate: `order` is a permutation of the non-unit states...
    let mut position = vec![usize::MAX; r];
    for (pos, &k) in order.iter().enumerate() {
        if k >= r || Some(k) == unit || position[k] != usize::MAX {
            return Err(SolveError::OrderInvalid(format!("bad state {k}")));
        }
        position[k] = pos;
    }
    let expected = r - usize::from(unit.is_some());
    if order.len() != expected {
        return Err(SolveError::OrderInvalid(format!(
            "order lists {} states, expected {expected}",
            order.len()
        )));
    }
    // ... and respects every transition edge
    for &k in order {
        for &l in &orbit.transitions()[k] {
            if Some(l) != unit && position[k] >= position[l] {
                return Err(SolveError::OrderInvalid(format!(
                    "edge {k} -> {l} is not forward"
                )));
            }
        }
    }

    let mut polys: Vec<MPoly> = vec![MPoly::zero(nv); r];
    for &k in order.iter().rev() {
        let mut acc = MPoly::int(nv, i64::from(orbit.constants()[k]));
        for (i, &l) in orbit.transitions()[k].iter().enumerate() {
            if Some(l) == unit || polys[l].is_zero() {
                continue;
            }
            let var = if multigraded { i } else { 0 };
            acc = acc.add(&polys[l].mul_var(var));
        }
        polys[k] = acc;
    }
    let entries = polys.into_iter().map(RatFun::from_poly).collect();
    Ok(SeriesSolution {
        entries,
        multigraded,
        polynomial: true,
        heuristic: false,
    })
}

/// Closed formula for a finitely presented module:
/// `(sum_i t^{delta_i} - sum_j t^{Delta_j}) / (1 - (t_1 + ... + t_n))`.
pub fn hs_finitely_presented(
    shifts: &[MultiDegree],
    relation_degrees: &[MultiDegree],
    nvars: usize,
) -> RatFun {
    let mut num = MPoly::zero(nvars);
    for d in shifts {
        num = num.add(&shift_monomial(d, nvars));
    }
    for d in relation_degrees {
        num = num.sub(&shift_monomial(d, nvars));
    }
    let mut den = MPoly::one(nvars);
    for i in 0..nvars {
        den = den.sub(&MPoly::var(nvars, i));
    }
    RatFun::new(num, den).expect("denominator 1 - sum t_i is nonzero")
}

/// Series of a direct sum of shifted cyclic parts: `sum_i t^{delta_i} HS_i`.
pub fn direct_sum(parts: &[(MultiDegree, RatFun)]) -> RatFun {
    assert!(!parts.is_empty(), "direct sum of no parts");
    let nvars = parts[0].1.nvars();
    let mut acc = RatFun::zero(nvars);
    for (delta, series) in parts {
        acc = acc.add(&series.mul_poly(&shift_monomial(delta, nvars)));
    }
    acc
}

/// The closed multigraded series of the Grassmann relatively free algebra
/// fixture: `(t1 t2 + t1 t3 + t2 t3 + 1) / ((1-t1)(1-t2)(1-t3))`.
/// Test support.
#[cfg(test)]
pub(crate) fn grassmann_expected_series() -> RatFun {
    let t = |i: usize| MPoly::var(3, i);
    let num = t(0)
        .mul(&t(1))
        .add(&t(0).mul(&t(2)))
        .add(&t(1).mul(&t(2)))
        .add(&MPoly::one(3));
    let mut den = MPoly::one(3);
    for i in 0..3 {
        den = den.mul(&MPoly::one(3).sub(&t(i)));
    }
    RatFun::new(num, den).unwrap()
}
