//! Truncated expansions `Σ_k 𝕃^k Σ_{m,n} a^{(k)}_{m,n} q^m q̄^n`, holomorphic log-series in
//! `q, log q`, and the staging type carrying `log q − log q̄`.

use crate::error::{Error, Result};
use crate::exact_arith::{bernoulli, int, sigma, Coeff, Rational, SvScalar};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Default q-truncation.
pub const DEFAULT_TRUNC: u32 = 16;

fn accumulate<K: Ord, C: Coeff>(map: &mut BTreeMap<K, C>, key: K, c: C) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            o.get_mut().accumulate(&c);
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn merge_maps<K: Ord + Clone, C: Coeff>(
    mut a: BTreeMap<K, C>,
    b: BTreeMap<K, C>,
) -> BTreeMap<K, C> {
    for (k, c) in b {
        accumulate(&mut a, k, c);
    }
    a
}

/// Raise or lower.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    /// `∂_r`, weights `(r, s) → (r+1, s−1)`.
    Raise,
    /// `∂̄_s`, weights `(r, s) → (r−1, s+1)`.
    Lower,
}

/// Truncated expansion with modular weights `(r, s)`; coefficients keyed by `(k, m, n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BiSeries {
    weights: (i32, i32),
    trunc: u32,
    #[serde(serialize_with = "serialize_keyed")]
    coeffs: BTreeMap<(i32, u32, u32), SvScalar>,
}

fn serialize_keyed<S: serde::Serializer, K: Serialize, V: Serialize>(
    m: &BTreeMap<K, V>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(m.iter())
}

impl BiSeries {
    /// Zero series.
    pub fn zero(weights: (i32, i32), trunc: u32) -> Self {
        Self {
            weights,
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    /// `c · 𝕃^k q^m q̄^n`.
    pub fn monomial(weights: (i32, i32), trunc: u32, k: i32, m: u32, n: u32, c: SvScalar) -> Self {
        let mut s = Self::zero(weights, trunc);
        s.add_term(k, m, n, c);
        s
    }

    /// Builds a series from `(k, m, n, c)` terms, dropping those beyond the truncation.
    pub fn from_terms(
        weights: (i32, i32),
        trunc: u32,
        terms: impl IntoIterator<Item = (i32, u32, u32, SvScalar)>,
    ) -> Self {
        let mut s = Self::zero(weights, trunc);
        for (k, m, n, c) in terms {
            s.add_term(k, m, n, c);
        }
        s
    }

    /// Adds `c · 𝕃^k q^m q̄^n`; ignored beyond the truncation.
    pub fn add_term(&mut self, k: i32, m: u32, n: u32, c: SvScalar) {
        if m <= self.trunc && n <= self.trunc {
            accumulate(&mut self.coeffs, (k, m, n), c);
        }
    }

    /// Modular weights.
    pub fn weights(&self) -> (i32, i32) {
        self.weights
    }

    /// q-truncation order.
    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// Coefficient `a^{(k)}_{m,n}`.
    pub fn coeff(&self, k: i32, m: u32, n: u32) -> SvScalar {
        self.coeffs.get(&(k, m, n)).cloned().unwrap_or_default()
    }

    /// Stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (&(i32, u32, u32), &SvScalar)> {
        self.coeffs.iter()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// True when nothing is stored.
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero series.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest power of `𝕃` present.
    pub fn min_ell_power(&self) -> Option<i32> {
        self.coeffs.keys().map(|k| k.0).min()
    }

    /// Largest power of `𝕃` present.
    pub fn max_ell_power(&self) -> Option<i32> {
        self.coeffs.keys().map(|k| k.0).max()
    }

    /// Pole order `max(0, −min k)`.
    pub fn pole_order(&self) -> u32 {
        self.min_ell_power().map_or(0, |k| (-k).max(0) as u32)
    }

    /// True when every stored `k ≥ −p`, i.e. the series lies in the pole filtration `P^{−p}`.
    pub fn in_pole_filtration(&self, p: i32) -> bool {
        self.coeffs.keys().all(|(k, _, _)| *k >= -p)
    }

    /// The `(0, 0)` Fourier mode as a Laurent polynomial in `𝕃`.
    pub fn constant_part(&self) -> BTreeMap<i32, SvScalar> {
        self.coeffs
            .iter()
            .filter(|((_, m, n), _)| *m == 0 && *n == 0)
            .map(|((k, _, _), c)| (*k, c.clone()))
            .collect()
    }

    /// Same coefficients, new weights.
    pub fn with_weights(mut self, weights: (i32, i32)) -> Self {
        self.weights = weights;
        self
    }

    /// Drops modes beyond a smaller truncation.
    pub fn truncate(&self, trunc: u32) -> Self {
        let trunc = trunc.min(self.trunc);
        Self {
            weights: self.weights,
            trunc,
            coeffs: self
                .coeffs
                .iter()
                .filter(|((_, m, n), _)| *m <= trunc && *n <= trunc)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    fn check_weights(&self, other: &Self) -> Result<()> {
        if self.weights != other.weights {
            return Err(Error::InvalidArgument(format!(
                "weights {:?} and {:?} differ",
                self.weights, other.weights
            )));
        }
        Ok(())
    }

    /// Sum; weights must agree, truncation is the minimum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_weights(other)?;
        let trunc = self.trunc.min(other.trunc);
        let mut out = self.truncate(trunc);
        for ((k, m, n), c) in &other.coeffs {
            out.add_term(*k, *m, *n, c.clone());
        }
        Ok(out)
    }

    /// Difference; weights must agree.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&SvScalar::from(int(-1))))
    }

    /// Multiplication by a scalar.
    pub fn scale(&self, c: &SvScalar) -> Self {
        let mut out = Self::zero(self.weights, self.trunc);
        for (k, v) in &self.coeffs {
            accumulate(&mut out.coeffs, *k, v.times(c));
        }
        out
    }

    /// Multiplication by `𝕃^j`; weights shift by `(−j, −j)`.
    pub fn mul_ell_power(&self, j: i32) -> Self {
        Self {
            weights: (self.weights.0 - j, self.weights.1 - j),
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .map(|((k, m, n), c)| ((k + j, *m, *n), c.clone()))
                .collect(),
        }
    }

    /// Complex conjugate: swaps `q` and `q̄` and the two weights.
    pub fn conjugate(&self) -> Self {
        Self {
            weights: (self.weights.1, self.weights.0),
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .map(|((k, m, n), c)| ((*k, *n, *m), c.clone()))
                .collect(),
        }
    }

    /// Product: weights add, coefficients convolve, truncation is the minimum.
    pub fn multiply(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let right: Vec<_> = other.coeffs.iter().collect();
        let coeffs = self
            .coeffs
            .par_iter()
            .filter(|((_, m, n), _)| *m <= trunc && *n <= trunc)
            .fold(BTreeMap::new, |mut acc, ((k1, m1, n1), c1)| {
                for ((k2, m2, n2), c2) in &right {
                    let (m, n) = (m1 + m2, n1 + n2);
                    if m <= trunc && n <= trunc {
                        accumulate(&mut acc, (k1 + k2, m, n), c1.times(c2));
                    }
                }
                acc
            })
            .reduce(BTreeMap::new, merge_maps);
        Self {
            weights: (
                self.weights.0 + other.weights.0,
                self.weights.1 + other.weights.1,
            ),
            trunc,
            coeffs,
        }
    }

    /// Maass-type raising or lowering operator.
    pub fn maass(&self, direction: Direction) -> Self {
        let (r, s) = self.weights;
        let (wt, new_weights) = match direction {
            Direction::Raise => (r, (r + 1, s - 1)),
            Direction::Lower => (s, (r - 1, s + 1)),
        };
        let mut out = Self::zero(new_weights, self.trunc);
        for ((k, m, n), a) in &self.coeffs {
            let diag = int((*k + wt) as i64);
            out.add_term(*k, *m, *n, a.scale(&diag));
            let shift = match direction {
                Direction::Raise => *m,
                Direction::Lower => *n,
            };
            if shift > 0 {
                out.add_term(k + 1, *m, *n, a.scale(&int(2 * shift as i64)));
            }
        }
        out
    }

    /// `∂`.
    pub fn raise(&self) -> Self {
        self.maass(Direction::Raise)
    }

    /// `∂̄`.
    pub fn lower(&self) -> Self {
        self.maass(Direction::Lower)
    }

    /// `Δ = −∂̄∂ + r(s−1)`, checked against `−∂∂̄ + s(r−1)`.
    ///
    /// # Panics
    /// Panics if the two presentations disagree, which would indicate a defect in the
    /// operator rules.
    pub fn laplacian(&self) -> Self {
        let (r, s) = self.weights;
        let one = self
            .raise()
            .lower()
            .scale(&SvScalar::from(int(-1)))
            .add(&self.scale(&SvScalar::from(int((r * (s - 1)) as i64))))
            .expect("equal weights");
        let two = self
            .lower()
            .raise()
            .scale(&SvScalar::from(int(-1)))
            .add(&self.scale(&SvScalar::from(int((s * (r - 1)) as i64))))
            .expect("equal weights");
        assert_eq!(one, two, "the two Laplacian presentations disagree");
        one
    }

    /// Rows `(k, m, n, coeff-json)` for CSV export.
    pub fn csv_rows(&self) -> Vec<(i32, u32, u32, String)> {
        self.coeffs
            .iter()
            .map(|((k, m, n), c)| (*k, *m, *n, serde_json::to_string(c).expect("serializable")))
            .collect()
    }
}

/// Holomorphic Eisenstein series `G_k = −B_k/2k + Σ σ_{k−1}(m) q^m` with weights `(k, 0)`.
pub fn eisenstein_q(k: u32, trunc: u32) -> Result<BiSeries> {
    let coeffs = eisenstein_coefficients(k, trunc)?;
    Ok(BiSeries::from_terms(
        (k as i32, 0),
        trunc,
        coeffs
            .into_iter()
            .enumerate()
            .map(|(m, c)| (0, m as u32, 0, SvScalar::from(c))),
    ))
}

/// `Ḡ_k` with weights `(0, k)`.
pub fn eisenstein_q_bar(k: u32, trunc: u32) -> Result<BiSeries> {
    Ok(eisenstein_q(k, trunc)?.conjugate())
}

/// `[−B_k/2k, σ_{k−1}(1), …, σ_{k−1}(N)]`.
pub fn eisenstein_coefficients(k: u32, trunc: u32) -> Result<Vec<Rational>> {
    if k % 2 == 1 {
        return Err(Error::OddWeight(k as i64));
    }
    if k < 4 {
        return Err(Error::InvalidArgument(format!("weight {k} < 4")));
    }
    let mut out = vec![-bernoulli(k as usize) / int(2 * k as i64)];
    out.extend((1..=trunc as u64).map(|m| Rational::from_integer(sigma(k - 1, m))));
    Ok(out)
}

/// Element of `C[[q]][log q]` truncated at `q^N`, keyed by `(i, j)` for `q^i (log q)^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct HolLogSeries<C: Coeff = Rational> {
    trunc: u32,
    coeffs: BTreeMap<(u32, u32), C>,
}

impl<C: Coeff> HolLogSeries<C> {
    /// Zero series.
    pub fn zero(trunc: u32) -> Self {
        Self {
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 1.
    pub fn one(trunc: u32) -> Self {
        Self::monomial(trunc, 0, 0, C::one())
    }

    /// `c · q^i (log q)^j`.
    pub fn monomial(trunc: u32, i: u32, j: u32, c: C) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(i, j, c);
        s
    }

    /// Holomorphic Eisenstein series as a log-free series.
    pub fn eisenstein(k: u32, trunc: u32) -> Result<Self> {
        let mut s = Self::zero(trunc);
        for (i, c) in eisenstein_coefficients(k, trunc)?.iter().enumerate() {
            s.add_term(i as u32, 0, C::from_rational(c));
        }
        Ok(s)
    }

    /// Adds `c · q^i (log q)^j`; ignored beyond the truncation.
    pub fn add_term(&mut self, i: u32, j: u32, c: C) {
        if i <= self.trunc {
            accumulate(&mut self.coeffs, (i, j), c);
        }
    }

    /// Truncation order.
    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// Coefficient of `q^i (log q)^j`.
    pub fn coeff(&self, i: u32, j: u32) -> C {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    /// Stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &C)> {
        self.coeffs.iter()
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest power of `log q` present (0 for zero).
    pub fn log_degree(&self) -> u32 {
        self.coeffs.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(trunc);
        for ((i, j), c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_term(*i, *j, c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        self.scale(&C::one().negate())
    }

    /// Multiplication by a scalar.
    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.trunc);
        for ((i, j), v) in &self.coeffs {
            out.add_term(*i, *j, v.times(c));
        }
        out
    }

    /// Multiplication by a rational.
    pub fn scale_rational(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.trunc);
        for ((i, j), v) in &self.coeffs {
            out.add_term(*i, *j, v.scale(r));
        }
        out
    }

    /// Multiplication by `(log q)^e`.
    pub fn mul_log_power(&self, e: u32) -> Self {
        Self {
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .map(|((i, j), c)| ((*i, j + e), c.clone()))
                .collect(),
        }
    }

    /// Product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(trunc);
        for ((i1, j1), c1) in &self.coeffs {
            for ((i2, j2), c2) in other
                .coeffs
                .range((0, 0)..=(trunc - i1.min(&trunc), u32::MAX))
            {
                out.add_term(i1 + i2, j1 + j2, c1.times(c2));
            }
        }
        out
    }

    /// Logarithmic derivative `q d/dq`.
    pub fn log_derivative(&self) -> Self {
        let mut out = Self::zero(self.trunc);
        for ((i, j), c) in &self.coeffs {
            if *i > 0 {
                out.add_term(*i, *j, c.scale(&int(*i as i64)));
            }
            if *j > 0 {
                out.add_term(*i, j - 1, c.scale(&int(*j as i64)));
            }
        }
        out
    }

    /// Regularized primitive for `dq/q`, vanishing at the tangential base point.
    ///
    /// `(log q)^j ↦ (log q)^{j+1}/(j+1)` and, for `i ≥ 1`,
    /// `q^i (log q)^j ↦ q^i Σ_t (−1)^t j!/(j−t)! (log q)^{j−t} / i^{t+1}`.
    pub fn reg_primitive(&self) -> Self {
        let mut out = Self::zero(self.trunc);
        for ((i, j), c) in &self.coeffs {
            if *i == 0 {
                out.add_term(0, j + 1, c.scale(&Rational::new(1.into(), (j + 1).into())));
                continue;
            }
            let mut falling = Rational::one();
            let inv_i = Rational::new(1.into(), (*i).into());
            let mut ipow = inv_i.clone();
            for t in 0..=*j {
                let mut f = &falling * &ipow;
                if t % 2 == 1 {
                    f = -f;
                }
                out.add_term(*i, j - t, c.scale(&f));
                falling *= int((j - t) as i64);
                ipow *= &inv_i;
            }
        }
        out
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> HolLogSeries<D> {
        let mut out = HolLogSeries::zero(self.trunc);
        for ((i, j), c) in &self.coeffs {
            out.add_term(*i, *j, f(c));
        }
        out
    }
}

/// Staging expansion in `𝕃^{±}`, `D = log q − log q̄`, `q`, `q̄`; keys `(k, d, m, n)`.
///
/// `log q = 𝕃 + D/2` and `log q̄ = 𝕃 − D/2`, so T-invariance is the vanishing of every
/// coefficient with `d ≥ 1`. A truncation of `None` marks an exact polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedSeries {
    trunc: Option<u32>,
    coeffs: BTreeMap<(i32, u32, u32, u32), SvScalar>,
}

impl ExtendedSeries {
    /// Zero with the given truncation.
    pub fn zero_with(trunc: Option<u32>) -> Self {
        Self {
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    /// `c · 𝕃^k D^d q^m q̄^n`.
    pub fn monomial(k: i32, d: u32, m: u32, n: u32, c: SvScalar) -> Self {
        let mut s = Self::zero_with(None);
        s.add_term(k, d, m, n, c);
        s
    }

    /// `𝕃^k`.
    pub fn ell_power(k: i32) -> Self {
        Self::monomial(k, 0, 0, 0, SvScalar::one())
    }

    /// `log q = 𝕃 + D/2`.
    pub fn log_q() -> Self {
        let mut s = Self::ell_power(1);
        s.add_term(
            0,
            1,
            0,
            0,
            SvScalar::from(Rational::new(1.into(), 2.into())),
        );
        s
    }

    /// `log q̄ = 𝕃 − D/2`.
    pub fn log_qbar() -> Self {
        let mut s = Self::ell_power(1);
        s.add_term(
            0,
            1,
            0,
            0,
            SvScalar::from(Rational::new((-1).into(), 2.into())),
        );
        s
    }

    /// Adds a term; ignored beyond the truncation.
    pub fn add_term(&mut self, k: i32, d: u32, m: u32, n: u32, c: SvScalar) {
        if let Some(t) = self.trunc {
            if m > t || n > t {
                return;
            }
        }
        accumulate(&mut self.coeffs, (k, d, m, n), c);
    }

    /// Truncation order.
    pub fn trunc(&self) -> Option<u32> {
        self.trunc
    }

    /// Stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (&(i32, u32, u32, u32), &SvScalar)> {
        self.coeffs.iter()
    }

    /// Lifts a holomorphic log-series, or its conjugate when `conjugate` is set.
    pub fn from_hol<C: Coeff + Into<SvScalar>>(h: &HolLogSeries<C>, conjugate: bool) -> Self {
        let log = if conjugate {
            Self::log_qbar()
        } else {
            Self::log_q()
        };
        let mut powers = vec![Self::one()];
        let mut out = Self::zero_with(Some(h.trunc()));
        for ((i, j), c) in h.terms() {
            while powers.len() <= *j as usize {
                let next = powers.last().expect("non-empty").times(&log);
                powers.push(next);
            }
            let c: SvScalar = c.clone().into();
            for ((k, d, _, _), v) in &powers[*j as usize].coeffs {
                let (m, n) = if conjugate { (0, *i) } else { (*i, 0) };
                out.add_term(*k, *d, m, n, v.times(&c));
            }
        }
        out
    }

    /// Lifts a modular expansion.
    pub fn from_bi(f: &BiSeries) -> Self {
        let mut out = Self::zero_with(Some(f.trunc()));
        for ((k, m, n), c) in f.terms() {
            out.add_term(*k, 0, *m, *n, c.clone());
        }
        out
    }

    /// Sets the truncation, dropping modes beyond it.
    pub fn truncated(&self, trunc: u32) -> Self {
        let t = self.trunc.map_or(trunc, |x| x.min(trunc));
        let mut out = Self::zero_with(Some(t));
        for ((k, d, m, n), c) in &self.coeffs {
            out.add_term(*k, *d, *m, *n, c.clone());
        }
        out
    }

    /// Eliminates the log variables, returning the modular expansion with the given weights.
    ///
    /// Fails with [`Error::NonModularResidue`] if any coefficient survives on a positive power
    /// of `log q − log q̄`.
    pub fn reduce_to_l(&self, weights: (i32, i32)) -> Result<BiSeries> {
        if let Some(((k, d, m, n), _)) = self.coeffs.iter().find(|((_, d, _, _), _)| *d > 0) {
            return Err(Error::NonModularResidue {
                k: *k,
                d: *d,
                m: *m,
                n: *n,
            });
        }
        let trunc = self.trunc.unwrap_or(DEFAULT_TRUNC);
        Ok(BiSeries::from_terms(
            weights,
            trunc,
            self.coeffs
                .iter()
                .map(|((k, _, m, n), c)| (*k, *m, *n, c.clone())),
        ))
    }
}

fn min_trunc(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Zero for ExtendedSeries {
    fn zero() -> Self {
        Self::zero_with(None)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for ExtendedSeries {
    fn one() -> Self {
        Self::ell_power(0)
    }
}

impl std::ops::Add for ExtendedSeries {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.plus(&rhs)
    }
}

impl std::ops::Mul for ExtendedSeries {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.times(&rhs)
    }
}

impl Coeff for ExtendedSeries {
    fn from_rational(r: &Rational) -> Self {
        Self::monomial(0, 0, 0, 0, SvScalar::from(r.clone()))
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = Self::zero_with(min_trunc(self.trunc, other.trunc));
        for ((k, d, m, n), c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_term(*k, *d, *m, *n, c.clone());
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        let trunc = min_trunc(self.trunc, other.trunc);
        let mut out = Self::zero_with(trunc);
        for ((k1, d1, m1, n1), c1) in &self.coeffs {
            for ((k2, d2, m2, n2), c2) in &other.coeffs {
                out.add_term(k1 + k2, d1 + d2, m1 + m2, n1 + n2, c1.times(c2));
            }
        }
        out
    }
    fn negate(&self) -> Self {
        self.scale(&int(-1))
    }
    fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero_with(self.trunc);
        for ((k, d, m, n), c) in &self.coeffs {
            out.add_term(*k, *d, *m, *n, c.scale(r));
        }
        out
    }
}

impl From<Rational> for ExtendedSeries {
    fn from(r: Rational) -> Self {
        Self::from_rational(&r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    fn sv(n: i64, d: i64) -> SvScalar {
        SvScalar::from(rat(n, d))
    }

    #[test]
    fn eisenstein_examples() {
        let g4 = eisenstein_q(4, 3).unwrap();
        assert_eq!(g4.coeff(0, 0, 0), sv(1, 240));
        assert_eq!(g4.coeff(0, 2, 0), sv(9, 1));
        assert_eq!(eisenstein_q(6, 1).unwrap().coeff(0, 0, 0), sv(-1, 504));
        assert!(eisenstein_q(5, 3).is_err());
        assert!(eisenstein_q(2, 3).is_err());
    }

    #[test]
    fn maass_examples() {
        let ell = BiSeries::monomial((-1, -1), 4, 1, 0, 0, sv(1, 1));
        assert!(ell.raise().is_zero());
        assert!(ell.lower().is_zero());
        let g4bar = eisenstein_q_bar(4, 5).unwrap();
        assert!(g4bar.raise().is_zero());
        let q = BiSeries::monomial((0, 0), 4, 0, 1, 0, sv(1, 1));
        assert_eq!(q.raise(), BiSeries::monomial((1, -1), 4, 1, 1, 0, sv(2, 1)));
    }

    #[test]
    fn laplacian_examples() {
        let ell = BiSeries::monomial((1, 1), 4, 1, 0, 0, sv(1, 1));
        assert_eq!(ell.laplacian(), ell.scale(&sv(-2, 1)));
        let one = BiSeries::monomial((0, 0), 4, 0, 0, 0, sv(1, 1));
        assert!(one.laplacian().is_zero());
        let inv = BiSeries::monomial((1, 1), 4, -2, 0, 0, sv(1, 1));
        assert_eq!(inv.laplacian(), inv.scale(&sv(-2, 1)));
    }

    #[test]
    fn multiply_examples() {
        let q = BiSeries::monomial((0, 0), 3, 0, 1, 0, sv(1, 1));
        let qb = BiSeries::monomial((0, 0), 3, 0, 0, 1, sv(1, 1));
        assert_eq!(
            q.multiply(&qb),
            BiSeries::monomial((0, 0), 3, 0, 1, 1, sv(1, 1))
        );
        let l = BiSeries::monomial((-1, -1), 3, 1, 0, 0, sv(1, 1));
        let li = BiSeries::monomial((1, 1), 3, -1, 0, 0, sv(1, 1));
        assert_eq!(
            l.multiply(&li),
            BiSeries::monomial((0, 0), 3, 0, 0, 0, sv(1, 1))
        );
        let g4 = eisenstein_q(4, 4).unwrap();
        // q^2 coefficient of G4^2: 2·(1/240)·9 + 1.
        assert_eq!(g4.multiply(&g4).coeff(0, 2, 0), sv(43, 40));
    }

    #[test]
    fn primitive_examples() {
        let one = HolLogSeries::<Rational>::one(4);
        assert_eq!(one.reg_primitive(), HolLogSeries::monomial(4, 0, 1, int(1)));
        let q = HolLogSeries::monomial(4, 1, 0, int(1));
        assert_eq!(q.reg_primitive(), q);
        let qlog = HolLogSeries::monomial(4, 1, 1, int(1));
        let mut expected = HolLogSeries::monomial(4, 1, 1, int(1));
        expected.add_term(1, 0, int(-1));
        assert_eq!(qlog.reg_primitive(), expected);
    }

    #[test]
    fn reduce_examples() {
        let half = Rational::new(1.into(), 2.into());
        let sym = ExtendedSeries::log_q()
            .plus(&ExtendedSeries::log_qbar())
            .scale(&half);
        assert_eq!(
            sym.reduce_to_l((-1, -1)).unwrap(),
            BiSeries::monomial((-1, -1), DEFAULT_TRUNC, 1, 0, 0, sv(1, 1))
        );
        assert!(matches!(
            ExtendedSeries::log_q().reduce_to_l((0, 0)),
            Err(Error::NonModularResidue { .. })
        ));
        let prod = ExtendedSeries::log_q().times(&ExtendedSeries::log_qbar());
        assert!(matches!(
            prod.reduce_to_l((0, 0)),
            Err(Error::NonModularResidue { d: 2, .. })
        ));
    }
}
