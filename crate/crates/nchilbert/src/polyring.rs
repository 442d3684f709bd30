//! Exact sparse multivariate polynomials and rational functions over
//! arbitrary-precision rationals.
//!
//! Everything downstream (series solving, truncation, Schur decomposition)
//! runs on these two types; no floating point appears anywhere. Terms are
//! kept in a `BTreeMap` keyed by graded-lex exponent vectors, so iteration
//! order is canonical and printing is deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Term-count bound below which rational functions are fully reduced by a
/// polynomial gcd; above it only contents and monomial factors are removed.
pub const GCD_TERM_LIMIT: usize = 5_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    DivisionByZero,
    DenominatorVanishesAtOrigin,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DivisionByZero => write!(f, "division by the zero polynomial"),
            PolyError::DenominatorVanishesAtOrigin => {
                write!(
                    f,
                    "denominator vanishes at the origin; no power series expansion"
                )
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// Exponent vector of a commutative monomial, ordered graded-lex:
/// total degree first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn unit(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Mono(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exponent-wise division; `None` if some exponent would go negative.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with `BigRational` coefficients.
///
/// Zero coefficients are never stored; the zero polynomial is the empty map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Mono, BigRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Mono::unit(nvars), c);
        p
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Mono::var(nvars, i), BigRational::one());
        p
    }

    pub fn monomial(nvars: usize, mono: Mono, c: BigRational) -> Self {
        debug_assert_eq!(mono.0.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(mono, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Mono) -> BigRational {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn constant_coeff(&self) -> BigRational {
        self.coeff(&Mono::unit(self.nvars))
    }

    /// Graded-lex greatest term.
    pub fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.last_key_value()
    }

    /// Graded-lex least term.
    pub fn trailing(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.first_key_value()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::total_degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, mono: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_mono(&self, mono: &Mono) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone()))
                .collect(),
        }
    }

    /// Multiply by the variable `i` (exponent shift).
    pub fn mul_var(&self, i: usize) -> MPoly {
        self.mul_mono(&Mono::var(self.nvars, i))
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut out = MPoly::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Identify every variable with a single `t`.
    pub fn specialize_graded(&self) -> MPoly {
        let mut out = MPoly::zero(1);
        for (m, c) in &self.terms {
            out.add_term(Mono(vec![m.total_degree()]), c.clone());
        }
        out
    }

    /// Value at `t_i = 1` for all `i` (the sum of the coefficients).
    pub fn eval_at_ones(&self) -> BigRational {
        let mut s = BigRational::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    pub fn truncate_total_degree(&self, d: u32) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Split into homogeneous slices keyed by total degree.
    pub fn degree_slices(&self) -> BTreeMap<u32, MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.total_degree())
                .or_insert_with(|| MPoly::zero(self.nvars))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn is_integer(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Positive rational `c` such that `self / c` is an integer polynomial
    /// with coprime coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigRational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            BigRational::zero()
        } else {
            BigRational::new(num_gcd, den_lcm)
        }
    }

    /// Exponent-wise minimum over all terms (the common monomial factor).
    pub fn monomial_content(&self) -> Mono {
        let mut min = match self.terms.keys().next() {
            Some(m) => m.0.clone(),
            None => return Mono::unit(self.nvars),
        };
        for m in self.terms.keys() {
            for (a, b) in min.iter_mut().zip(&m.0) {
                *a = (*a).min(*b);
            }
        }
        Mono(min)
    }

    /// Exact polynomial division; `None` when the division is not exact.
    pub fn div_exact(&self, g: &MPoly) -> Option<MPoly> {
        if g.is_zero() {
            return None;
        }
        let (g_mono, g_coeff) = g.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut q = MPoly::zero(self.nvars);
        while let Some((r_mono, r_coeff)) = rem.leading() {
            let qm = r_mono.div(&g_mono)?;
            let qc = r_coeff / &g_coeff;
            rem = rem.sub(&g.mul_mono(&qm).scale(&qc));
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Primitive associate with positive graded-lex-leading coefficient.
    pub fn canonical(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, coeff) in &self.terms {
            let neg = coeff.is_negative();
            let abs = coeff.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || mono.total_degree() == 0 {
                parts.push(abs.to_string());
            }
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if self.nvars == 1 {
                    "t".to_string()
                } else {
                    format!("t{}", i + 1)
                };
                if e == 1 {
                    parts.push(name);
                } else {
                    parts.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

fn rational_gcd(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = (a.numer() * b.denom()).gcd(&(b.numer() * a.denom()));
    BigRational::new(num, a.denom() * b.denom())
}

// ---------------------------------------------------------------------------
// gcd: primitive pseudo-remainder sequences on a recursive univariate view.

fn degree_in(f: &MPoly, v: usize) -> u32 {
    f.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
}

/// Coefficient of `x_v^k` in `f`, with the `v` exponent zeroed out.
fn coeff_in(f: &MPoly, v: usize, k: u32) -> MPoly {
    let mut out = MPoly::zero(f.nvars);
    for (m, c) in &f.terms {
        if m.0[v] == k {
            let mut e = m.0.clone();
            e[v] = 0;
            out.add_term(Mono(e), c.clone());
        }
    }
    out
}

fn nonzero_coeffs_in(f: &MPoly, v: usize) -> Vec<MPoly> {
    let mut ks: Vec<u32> = f.terms.keys().map(|m| m.0[v]).collect();
    ks.sort_unstable();
    ks.dedup();
    ks.iter().map(|&k| coeff_in(f, v, k)).collect()
}

/// Pseudo-remainder of `f` by `g` in the variable `v` (any scalar associate
/// of the classical prem; callers re-primitivize anyway).
fn prem(f: &MPoly, g: &MPoly, v: usize) -> MPoly {
    let dg = degree_in(g, v);
    let lc_g = coeff_in(g, v, dg);
    let mut r = f.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = degree_in(&r, v);
        if dr < dg {
            return r;
        }
        let lc_r = coeff_in(&r, v, dr);
        let mut shift = Mono::unit(r.nvars);
        shift.0[v] = dr - dg;
        r = r.mul(&lc_g).sub(&g.mul(&lc_r).mul_mono(&shift));
    }
}

/// Content of `f` with respect to `x_v`: gcd of the coefficient polynomials.
fn content_wrt(f: &MPoly, v: usize) -> MPoly {
    if v == 0 {
        return MPoly::constant(f.nvars, f.content());
    }
    let coeffs = nonzero_coeffs_in(f, v);
    let mut g = coeffs[0].clone();
    for c in &coeffs[1..] {
        g = gcd_rec(&g, c, v - 1);
    }
    g
}

/// gcd of two nonzero polynomials involving only variables `0..=v`
/// (an arbitrary associate; the public entry point normalizes).
fn gcd_rec(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    if degree_in(a, v) == 0 && degree_in(b, v) == 0 {
        if v == 0 {
            // both constant
            let ca = a.constant_coeff();
            let cb = b.constant_coeff();
            return MPoly::constant(a.nvars, rational_gcd(&ca, &cb));
        }
        return gcd_rec(a, b, v - 1);
    }
    let cont_a = content_wrt(a, v);
    let cont_b = content_wrt(b, v);
    let pp_a = a.div_exact(&cont_a).expect("content divides");
    let pp_b = b.div_exact(&cont_b).expect("content divides");
    let cont_g = if v == 0 {
        MPoly::constant(
            a.nvars,
            rational_gcd(&cont_a.constant_coeff(), &cont_b.constant_coeff()),
        )
    } else {
        gcd_rec(&cont_a, &cont_b, v - 1)
    };

    let (mut f, mut g) = if degree_in(&pp_a, v) >= degree_in(&pp_b, v) {
        (pp_a, pp_b)
    } else {
        (pp_b, pp_a)
    };
    loop {
        if degree_in(&g, v) == 0 {
            // primitive parts are coprime
            return cont_g;
        }
        let r = prem(&f, &g, v);
        if r.is_zero() {
            return cont_g.mul(&g);
        }
        let rc = content_wrt(&r, v);
        let rp = r.div_exact(&rc).expect("content divides");
        f = g;
        g = rp;
    }
}

/// A greatest common divisor, primitive, with positive graded-lex-leading
/// coefficient. `gcd(f, 0)` is the canonical associate of `f`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    debug_assert_eq!(a.nvars(), b.nvars());
    if a.is_zero() {
        return b.canonical();
    }
    if b.is_zero() {
        return a.canonical();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m = Mono(ma.0.iter().zip(&mb.0).map(|(x, y)| *x.min(y)).collect());
    let a1 = a
        .div_exact(&MPoly::monomial(a.nvars, ma.clone(), BigRational::one()))
        .unwrap();
    let b1 = b
        .div_exact(&MPoly::monomial(b.nvars, mb.clone(), BigRational::one()))
        .unwrap();
    let g = if a.nvars == 0 {
        MPoly::one(0)
    } else {
        gcd_rec(&a1.canonical(), &b1.canonical(), a.nvars - 1)
    };
    g.canonical().mul_mono(&m)
}

// ---------------------------------------------------------------------------
// Rational functions.

/// A reduced numerator/denominator pair.
///
/// Normal form: common rational content and common monomial factors are
/// always removed; a full polynomial gcd is run when the combined term count
/// is below [`GCD_TERM_LIMIT`] (always, in the univariate case); the
/// denominator's graded-lex-least coefficient is positive.
///
/// Equality is mathematical (cross-multiplication), so it does not depend on
/// whether the full reduction ran.
#[derive(Debug, Clone)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

impl RatFun {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, PolyError> {
        Self::with_gcd_limit(num, den, GCD_TERM_LIMIT)
    }

    pub fn with_gcd_limit(num: MPoly, den: MPoly, limit: usize) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        debug_assert_eq!(num.nvars(), den.nvars());
        let mut r = RatFun { num, den };
        r.normalize(limit);
        Ok(r)
    }

    pub fn from_poly(p: MPoly) -> Self {
        let nvars = p.nvars();
        RatFun {
            num: p,
            den: MPoly::one(nvars),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(MPoly::one(nvars))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == MPoly::one(self.den.nvars())
    }

    pub fn as_polynomial(&self) -> Option<&MPoly> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn normalize(&mut self, limit: usize) {
        if self.num.is_zero() {
            self.den = MPoly::one(self.den.nvars());
            return;
        }
        // joint rational content
        let c = rational_gcd(&self.num.content(), &self.den.content());
        let inv = c.recip();
        self.num = self.num.scale(&inv);
        self.den = self.den.scale(&inv);
        // common monomial factor
        let mn = self.num.monomial_content();
        let md = self.den.monomial_content();
        let m = Mono(mn.0.iter().zip(&md.0).map(|(a, b)| *a.min(b)).collect());
        if m.total_degree() > 0 {
            let mp = MPoly::monomial(self.num.nvars(), m, BigRational::one());
            self.num = self.num.div_exact(&mp).unwrap();
            self.den = self.den.div_exact(&mp).unwrap();
        }
        // full reduction when cheap enough
        if self.nvars() <= 1 || self.num.num_terms() + self.den.num_terms() <= limit {
            let g = gcd(&self.num, &self.den);
            if g.num_terms() > 1 || g.total_degree() > 0 {
                self.num = self.num.div_exact(&g).unwrap();
                self.den = self.den.div_exact(&g).unwrap();
            }
        }
        // denominator sign convention
        if self
            .den
            .trailing()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFun::new(num, den).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominator")
    }

    pub fn mul_poly(&self, p: &MPoly) -> RatFun {
        RatFun::new(self.num.mul(p), self.den.clone()).expect("nonzero denominator")
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun, PolyError> {
        if other.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        RatFun::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Identify every variable with a single `t`.
    ///
    /// Panics if the denominator collapses to zero under the identification,
    /// which cannot happen for a denominator with nonzero constant term.
    pub fn specialize_graded(&self) -> RatFun {
        let den = self.den.specialize_graded();
        assert!(
            !den.is_zero(),
            "denominator vanished under grading specialization"
        );
        RatFun::new(self.num.specialize_graded(), den).unwrap()
    }

    /// The unique polynomial of total degree <= `d` with
    /// `den * P == num (mod total degree d+1)`, computed degree by degree.
    pub fn taylor_truncate(&self, d: u32) -> Result<MPoly, PolyError> {
        let den0 = self.den.constant_coeff();
        if den0.is_zero() {
            return Err(PolyError::DenominatorVanishesAtOrigin);
        }
        let inv0 = den0.recip();
        let num_slices = self.num.degree_slices();
        let den_slices = self.den.degree_slices();
        let nvars = self.nvars();
        let mut out_slices: Vec<MPoly> = Vec::with_capacity(d as usize + 1);
        for k in 0..=d {
            let mut acc = num_slices
                .get(&k)
                .cloned()
                .unwrap_or_else(|| MPoly::zero(nvars));
            if k >= 1 {
                for (j, dj) in den_slices.range(1..=k) {
                    acc = acc.sub(&dj.mul(&out_slices[(k - j) as usize]));
                }
            }
            out_slices.push(acc.scale(&inv0));
        }
        let mut out = MPoly::zero(nvars);
        for s in out_slices {
            out = out.add(&s);
        }
        Ok(out)
    }
}

impl PartialEq for RatFun {
    /// Mathematical equality by cross-multiplication.
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RatFun {}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
