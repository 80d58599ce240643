//! Regularized iterated Eisenstein integrals `I^E`, their image `J` under the monodromy map,
//! the single-valued twist, and the length-one equivariant series.

use crate::error::{Error, Result};
use crate::exact_arith::{bernoulli, binomial, factorial, int, Coeff, Rational, SvScalar};
use crate::freelie::{epsilon, epsilon_depth, DerivationTheta, Variant};
use crate::qseries::{ExtendedSeries, HolLogSeries};
use crate::raeis::{build_real_eisenstein, components_from_vector, VectorModularForm};
use crate::sl2rep::{Basis, HomPoly};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Largest word length accepted by [`build_i`].
pub const MAX_LENGTH: usize = 3;

/// Common interface of the two alphabets.
pub trait Letter: Clone + Ord + Send + Sync + fmt::Debug {
    /// Eisenstein weight `2n + 2`.
    fn weight(&self) -> u32;
    /// Exponent `m` (power of `𝖸`, or `sl₂`-depth).
    fn depth(&self) -> u32;
    /// M-degree `−1 − m`.
    fn m_degree(&self) -> i64 {
        -1 - self.depth() as i64
    }
}

/// Letter `𝐞_{2n+2} 𝖷^{2n−m} 𝖸^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EisLetter {
    /// Weight `2n + 2`.
    pub weight: u32,
    /// Power of `𝖸`.
    pub m: u32,
}

/// Letter `ε^{(m)}_{2n+2} = ad(−ε₀)^m ε_{2n+2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EpsLetter {
    /// Weight `2n + 2`.
    pub weight: u32,
    /// `sl₂`-depth.
    pub m: u32,
}

fn check_letter(weight: u32, m: u32) -> Result<()> {
    if weight % 2 == 1 {
        return Err(Error::OddWeight(weight as i64));
    }
    if weight < 4 {
        return Err(Error::InvalidArgument(format!(
            "letter weight {weight} < 4"
        )));
    }
    if m > weight - 2 {
        return Err(Error::InvalidArgument(format!(
            "depth {m} > {}",
            weight - 2
        )));
    }
    Ok(())
}

impl EisLetter {
    /// Validated letter.
    pub fn new(weight: u32, m: u32) -> Result<Self> {
        check_letter(weight, m)?;
        Ok(Self { weight, m })
    }
}

impl EpsLetter {
    /// Validated letter.
    pub fn new(weight: u32, m: u32) -> Result<Self> {
        check_letter(weight, m)?;
        Ok(Self { weight, m })
    }

    /// The derivation this letter denotes.
    pub fn value(&self) -> Result<DerivationTheta> {
        epsilon_depth(self.weight, self.m)
    }
}

impl Letter for EisLetter {
    fn weight(&self) -> u32 {
        self.weight
    }
    fn depth(&self) -> u32 {
        self.m
    }
}

impl Letter for EpsLetter {
    fn weight(&self) -> u32 {
        self.weight
    }
    fn depth(&self) -> u32 {
        self.m
    }
}

/// Length-truncated series `Σ_w c_w(q) w` with coefficients in `ℚ[[q]][log q]`, or in
/// `ℚ[[q̄]][log q̄]` when `conjugated` is set.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupSeries<L: Letter> {
    maxlen: usize,
    trunc: u32,
    conjugated: bool,
    coeffs: BTreeMap<Vec<L>, HolLogSeries>,
}

impl<L: Letter> GroupSeries<L> {
    /// Series with the given coefficients; zero coefficients are dropped.
    pub fn new(
        maxlen: usize,
        trunc: u32,
        conjugated: bool,
        coeffs: impl IntoIterator<Item = (Vec<L>, HolLogSeries)>,
    ) -> Self {
        Self {
            maxlen,
            trunc,
            conjugated,
            coeffs: coeffs
                .into_iter()
                .filter(|(w, c)| w.len() <= maxlen && !c.is_zero())
                .collect(),
        }
    }

    /// Length bound.
    pub fn maxlen(&self) -> usize {
        self.maxlen
    }

    /// q-truncation.
    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// True when coefficients are series in `q̄, log q̄`.
    pub fn is_conjugated(&self) -> bool {
        self.conjugated
    }

    /// Coefficient of a word.
    pub fn coeff(&self, word: &[L]) -> HolLogSeries {
        self.coeffs
            .get(word)
            .cloned()
            .unwrap_or_else(|| HolLogSeries::zero(self.trunc))
    }

    /// Non-zero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<L>, &HolLogSeries)> {
        self.coeffs.iter()
    }
}

/// Letters `𝐞_{2n+2}𝖷^{2n−m}𝖸^m` for `4 ≤ 2n+2 ≤ maxweight`.
pub fn eis_alphabet(maxweight: u32) -> Vec<EisLetter> {
    (2..=maxweight / 2)
        .flat_map(|h| {
            let weight = 2 * h;
            (0..=weight - 2).map(move |m| EisLetter { weight, m })
        })
        .collect()
}

/// `G_{2n+2} C(2n, m) (−log q)^m`, the `dq/q`-coefficient of the letter in `Ω^E`.
pub fn omega_coefficient(letter: &EisLetter, trunc: u32) -> Result<HolLogSeries> {
    let g = HolLogSeries::<Rational>::eisenstein(letter.weight, trunc)?;
    let two_n = letter.weight as u64 - 2;
    let mut c = Rational::from_integer(binomial(two_n, letter.m as u64));
    if letter.m % 2 == 1 {
        c = -c;
    }
    Ok(g.scale(&c).mul_log_power(letter.m))
}

/// `I^E` up to word length `maxlen`, letters of weight `≤ maxweight`, q-order `trunc`.
///
/// Coefficients satisfy `c(a w) = −RegPrim(ω_a c(w))` and `c(∅) = 1`.
pub fn build_i(maxlen: usize, maxweight: u32, trunc: u32) -> Result<GroupSeries<EisLetter>> {
    if maxlen > MAX_LENGTH {
        return Err(Error::CostGuard(format!(
            "word length {maxlen} > {MAX_LENGTH}"
        )));
    }
    if maxweight % 2 == 1 {
        return Err(Error::OddWeight(maxweight as i64));
    }
    let alphabet = eis_alphabet(maxweight);
    let omegas: BTreeMap<EisLetter, HolLogSeries> = alphabet
        .iter()
        .map(|l| omega_coefficient(l, trunc).map(|o| (*l, o)))
        .collect::<Result<_>>()?;
    let mut coeffs: BTreeMap<Vec<EisLetter>, HolLogSeries> = BTreeMap::new();
    coeffs.insert(Vec::new(), HolLogSeries::one(trunc));
    let omegas = &omegas;
    let alphabet = &alphabet;
    let mut previous: Vec<(Vec<EisLetter>, HolLogSeries)> =
        vec![(Vec::new(), HolLogSeries::one(trunc))];
    for _ in 0..maxlen {
        let next: Vec<(Vec<EisLetter>, HolLogSeries)> = previous
            .par_iter()
            .flat_map_iter(|(w, c)| {
                alphabet.iter().map(move |a| {
                    let mut word = Vec::with_capacity(w.len() + 1);
                    word.push(*a);
                    word.extend_from_slice(w);
                    (word, omegas[a].mul(c).reg_primitive().neg())
                })
            })
            .collect();
        coeffs.extend(next.iter().cloned());
        previous = next;
    }
    Ok(GroupSeries::new(maxlen, trunc, false, coeffs))
}

/// One checked family of identities at a fixed word length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumReport {
    /// Word length.
    pub length: usize,
    /// Number of identities checked.
    pub checked: usize,
    /// Words whose identity failed.
    pub failures: Vec<String>,
}

/// Identities grouped by word length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// Name of the identity.
    pub identity: String,
    /// Per-length results.
    pub strata: Vec<StratumReport>,
}

impl IdentityReport {
    /// True when no identity failed.
    pub fn passes(&self) -> bool {
        self.strata.iter().all(|s| s.failures.is_empty())
    }

    /// Total number of failures.
    pub fn failure_count(&self) -> usize {
        self.strata.iter().map(|s| s.failures.len()).sum()
    }
}

fn word_label<L: Letter>(w: &[L]) -> String {
    let parts: Vec<String> = w
        .iter()
        .map(|l| format!("{}^{}", l.weight(), l.depth()))
        .collect();
    format!("[{}]", parts.join(","))
}

fn report<L: Letter>(
    identity: &str,
    maxlen: usize,
    results: Vec<(Vec<L>, bool)>,
) -> IdentityReport {
    let strata = (0..=maxlen)
        .map(|length| {
            let at: Vec<_> = results.iter().filter(|(w, _)| w.len() == length).collect();
            StratumReport {
                length,
                checked: at.len(),
                failures: at
                    .iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(w, _)| word_label(w))
                    .collect(),
            }
        })
        .collect();
    IdentityReport {
        identity: identity.to_string(),
        strata,
    }
}

fn all_words<L: Letter>(alphabet: &[L], maxlen: usize) -> Vec<Vec<L>> {
    let mut out = vec![Vec::new()];
    let mut level = vec![Vec::new()];
    for _ in 0..maxlen {
        level = level
            .iter()
            .flat_map(|w: &Vec<L>| {
                alphabet.iter().map(move |a| {
                    let mut x = vec![a.clone()];
                    x.extend_from_slice(w);
                    x
                })
            })
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// Checks `q d/dq c(a w) = −ω_a c(w)` for every word, and `c(∅) = 1`.
pub fn verify_di(i: &GroupSeries<EisLetter>, maxweight: u32) -> Result<IdentityReport> {
    let trunc = i.trunc();
    let alphabet = eis_alphabet(maxweight);
    let omegas: BTreeMap<EisLetter, HolLogSeries> = alphabet
        .iter()
        .map(|l| omega_coefficient(l, trunc).map(|o| (*l, o)))
        .collect::<Result<_>>()?;
    let words = all_words(&alphabet, i.maxlen());
    let results = words
        .par_iter()
        .map(|w| {
            let ok = match w.split_first() {
                None => i.coeff(w) == HolLogSeries::one(trunc),
                Some((a, rest)) => {
                    i.coeff(w).log_derivative() == omegas[a].mul(&i.coeff(rest)).neg()
                }
            };
            (w.clone(), ok)
        })
        .collect();
    Ok(report("dI = -Omega I", i.maxlen(), results))
}

/// All positive-length coefficients vanish at the tangential base point.
pub fn verify_base_point<L: Letter>(g: &GroupSeries<L>) -> bool {
    g.terms()
        .filter(|(w, _)| !w.is_empty())
        .all(|(_, c)| c.coeff(0, 0).is_zero())
}

/// Largest `log q` degree over words of each length, with the bound `Σ (2n_i) + r`.
pub fn log_degree_violations<L: Letter>(g: &GroupSeries<L>) -> Vec<String> {
    g.terms()
        .filter(|(w, c)| {
            let bound: u32 = w.iter().map(|l| l.weight() - 2).sum::<u32>() + w.len() as u32;
            c.log_degree() > bound
        })
        .map(|(w, _)| word_label(w))
        .collect()
}

fn shuffles<L: Clone>(u: &[L], v: &[L]) -> Vec<Vec<L>> {
    if u.is_empty() {
        return vec![v.to_vec()];
    }
    if v.is_empty() {
        return vec![u.to_vec()];
    }
    let mut out = Vec::new();
    for mut s in shuffles(&u[1..], v) {
        s.insert(0, u[0].clone());
        out.push(s);
    }
    for mut s in shuffles(u, &v[1..]) {
        s.insert(0, v[0].clone());
        out.push(s);
    }
    out
}

/// Checks `c(u) c(v) = Σ_{w ∈ u ш v} c(w)` for all non-empty `u, v` with `|u| + |v| ≤ maxlen`,
/// including the unit axiom for the empty word.
pub fn shuffle_check<L: Letter>(g: &GroupSeries<L>, alphabet: &[L]) -> IdentityReport {
    let words = all_words(alphabet, g.maxlen());
    let mut pairs = Vec::new();
    for u in &words {
        for v in &words {
            if u.len() + v.len() <= g.maxlen() && u <= v {
                pairs.push((u.clone(), v.clone()));
            }
        }
    }
    let results = pairs
        .par_iter()
        .map(|(u, v)| {
            let lhs = g.coeff(u).mul(&g.coeff(v));
            let mut rhs = HolLogSeries::zero(g.trunc());
            for w in shuffles(u, v) {
                rhs = rhs.add(&g.coeff(&w));
            }
            let mut label = u.clone();
            label.extend(v.iter().cloned());
            (label, lhs == rhs)
        })
        .collect();
    report("shuffle", g.maxlen(), results)
}

/// `2/(2n)! · (2n−m)!/(2n)!`, the factor of `𝐞_{2n+2}𝖷^{2n−m}𝖸^m ↦ ε^{(m)}_{2n+2}`.
pub fn mu_factor(weight: u32, m: u32) -> Rational {
    let two_n = weight as u64 - 2;
    let f = Rational::from_integer(factorial(two_n));
    int(2) / &f * Rational::from_integer(factorial(two_n - m as u64)) / f
}

/// Letterwise monodromy map into the free algebra on `ε^{(m)}_{2n+2}`.
pub fn mu_map(i: &GroupSeries<EisLetter>) -> GroupSeries<EpsLetter> {
    let coeffs = i.terms().filter_map(|(w, c)| {
        if w.iter().any(|l| l.m > l.weight - 2) {
            return None;
        }
        let factor = w
            .iter()
            .fold(Rational::one(), |acc, l| acc * mu_factor(l.weight, l.m));
        let word = w
            .iter()
            .map(|l| EpsLetter {
                weight: l.weight,
                m: l.m,
            })
            .collect();
        Some((word, c.scale(&factor)))
    });
    GroupSeries::new(i.maxlen(), i.trunc(), i.is_conjugated(), coeffs)
}

/// `δ = ad(−ε₀)` on words: a derivation with `ε^{(m)} ↦ ε^{(m+1)}`, zero past `m = 2n`.
fn delta_word(w: &[EpsLetter]) -> Vec<Vec<EpsLetter>> {
    let mut out = Vec::new();
    for (i, l) in w.iter().enumerate() {
        if l.m < l.weight - 2 {
            let mut x = w.to_vec();
            x[i].m += 1;
            out.push(x);
        }
    }
    out
}

fn apply_delta(g: &GroupSeries<EpsLetter>) -> BTreeMap<Vec<EpsLetter>, HolLogSeries> {
    let mut out: BTreeMap<Vec<EpsLetter>, HolLogSeries> = BTreeMap::new();
    for (w, c) in g.terms() {
        for x in delta_word(w) {
            let e = out
                .entry(x)
                .or_insert_with(|| HolLogSeries::zero(g.trunc()));
            *e = e.add(c);
        }
    }
    out
}

/// `exp(log q · δ) J`.
pub fn gauge(j: &GroupSeries<EpsLetter>) -> GroupSeries<EpsLetter> {
    let trunc = j.trunc();
    let mut total: BTreeMap<Vec<EpsLetter>, HolLogSeries> =
        j.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    let mut current = j.clone();
    let mut k = 1u32;
    loop {
        let next = apply_delta(&current);
        if next.is_empty() {
            break;
        }
        let scale = Rational::new(1.into(), k.into());
        let next: BTreeMap<_, _> = next
            .into_iter()
            .map(|(w, c)| (w, c.mul_log_power(1).scale(&scale)))
            .collect();
        for (w, c) in &next {
            let e = total
                .entry(w.clone())
                .or_insert_with(|| HolLogSeries::zero(trunc));
            *e = e.add(c);
        }
        current = GroupSeries::new(j.maxlen(), trunc, false, next);
        k += 1;
    }
    GroupSeries::new(j.maxlen(), trunc, j.is_conjugated(), total)
}

/// The three readings of the differential equation for `J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DjReport {
    /// `q d/dq c(ε^{(m)}_{2n+2} w) = −(2/(2n)!) (−log q)^m/m! G_{2n+2} c(w)`.
    pub twisted: IdentityReport,
    /// `K = exp(log q · δ) J` satisfies `q d/dq K = δK − ω₀K`, `ω₀ = Σ (2/(2n)!) ε_{2n+2} G_{2n+2}`.
    pub gauge: IdentityReport,
    /// `q d/dq J = ad(ε₀) J − ω₀ J` with `ad(ε₀)` acting on every letter.
    pub literal: IdentityReport,
}

fn eps_alphabet(maxweight: u32) -> Vec<EpsLetter> {
    eis_alphabet(maxweight)
        .into_iter()
        .map(|l| EpsLetter {
            weight: l.weight,
            m: l.m,
        })
        .collect()
}

/// Checks the differential equation of `J = μ(I^E)` in three forms.
pub fn verify_dj(j: &GroupSeries<EpsLetter>, maxweight: u32) -> Result<DjReport> {
    let trunc = j.trunc();
    let alphabet = eps_alphabet(maxweight);
    let words = all_words(&alphabet, j.maxlen());
    let mut g = BTreeMap::new();
    for h in 2..=maxweight / 2 {
        let weight = 2 * h;
        let two_n = weight as u64 - 2;
        let f = int(2) / Rational::from_integer(factorial(two_n));
        g.insert(
            weight,
            HolLogSeries::<Rational>::eisenstein(weight, trunc)?.scale(&f),
        );
    }
    let omega0 = |w: &[EpsLetter], k: &GroupSeries<EpsLetter>| -> HolLogSeries {
        match w.split_first() {
            Some((a, rest)) if a.m == 0 => g[&a.weight].mul(&k.coeff(rest)),
            _ => HolLogSeries::zero(trunc),
        }
    };
    let twisted: Vec<_> = words
        .par_iter()
        .map(|w| {
            let expected = match w.split_first() {
                None => HolLogSeries::zero(trunc),
                Some((a, rest)) => {
                    let mut c = Rational::new(1.into(), factorial(a.m as u64));
                    if a.m % 2 == 1 {
                        c = -c;
                    }
                    g[&a.weight]
                        .mul(&j.coeff(rest))
                        .mul_log_power(a.m)
                        .scale(&c)
                        .neg()
                }
            };
            (w.clone(), j.coeff(w).log_derivative() == expected)
        })
        .collect();
    let k = gauge(j);
    let dk = apply_delta(&k);
    let dj = apply_delta(j);
    let zero = HolLogSeries::zero(trunc);
    let gauge_results: Vec<_> = words
        .par_iter()
        .map(|w| {
            let rhs = dk.get(w).unwrap_or(&zero).sub(&omega0(w, &k));
            (w.clone(), k.coeff(w).log_derivative() == rhs)
        })
        .collect();
    let literal: Vec<_> = words
        .par_iter()
        .map(|w| {
            let rhs = dj.get(w).unwrap_or(&zero).neg().sub(&omega0(w, j));
            (w.clone(), j.coeff(w).log_derivative() == rhs)
        })
        .collect();
    Ok(DjReport {
        twisted: report("dJ = -mu(Omega) J", j.maxlen(), twisted),
        gauge: report("dK = delta K - omega0 K", j.maxlen(), gauge_results),
        literal: report("dJ = -omega J (literal)", j.maxlen(), literal),
    })
}

/// Complex conjugation of coefficients composed with `(−1)^{M-degree}` on words.
pub fn sv_twist<L: Letter>(g: &GroupSeries<L>) -> GroupSeries<L> {
    let coeffs = g.terms().map(|(w, c)| {
        let m: i64 = w.iter().map(Letter::m_degree).sum();
        let c = if m.rem_euclid(2) == 1 {
            c.neg()
        } else {
            c.clone()
        };
        (w.clone(), c)
    });
    GroupSeries::new(g.maxlen(), g.trunc(), !g.is_conjugated(), coeffs)
}

/// `λ` with `ε^{(2n)}_{2n+2} = λ ε^∨_{2n+2}`.
pub fn highest_weight_ratio(weight: u32) -> Result<Rational> {
    let top = epsilon_depth(weight, weight - 2)?;
    let dual = epsilon(weight, Variant::Dual)?;
    let (w, c) = dual
        .on_a()
        .word_terms()
        .next()
        .map(|(w, c)| (w.clone(), c.clone()))
        .ok_or_else(|| Error::InvalidArgument("zero derivation".into()))?;
    let lambda = top.on_a().word_coeff(&w) / c;
    if top != dual.scale(&lambda) {
        return Err(Error::InconsistentSystem(format!(
            "ε^({}) is not proportional to the dual generator",
            weight - 2
        )));
    }
    Ok(lambda)
}

/// Length-one equivariant series `J₁ − sv(J₁) − β₁` of total weight `w`, split into modular
/// components; `β₁ = ζˢᵛ(w+1) ε^∨_{w+2}`.
pub fn jeqv_length1(w: u32, trunc: u32) -> Result<VectorModularForm> {
    if w % 2 == 1 {
        return Err(Error::OddWeight(w as i64));
    }
    if w < 2 {
        return Err(Error::InvalidArgument(format!("weight {w} < 2")));
    }
    let weight = w + 2;
    let i = build_i(1, weight, trunc)?;
    let j = mu_map(&i);
    let sv = sv_twist(&j);
    let lambda = highest_weight_ratio(weight)?;
    let beta = SvScalar::zeta_sv(w + 1)?.scale(&(Rational::one() / lambda));
    let mut terms = Vec::new();
    for m in 0..=w {
        let letter = vec![EpsLetter { weight, m }];
        let mut c = ExtendedSeries::from_hol(&j.coeff(&letter), false)
            .plus(&ExtendedSeries::from_hol(&sv.coeff(&letter), true).negate());
        if m == w {
            c = c.plus(&ExtendedSeries::monomial(0, 0, 0, 0, beta.clone()).negate());
        }
        let c = c.scale(&(Rational::one() / mu_factor(weight, m)));
        terms.push((w - m, m, c));
    }
    let f = HomPoly::from_terms(w, Basis::DeRham, terms)?;
    components_from_vector(&f)
}

/// The scalar `c` with `F = c · 𝓔` componentwise, or `None` if no such scalar exists.
pub fn proportionality_to_eisenstein(f: &VectorModularForm) -> Result<Option<SvScalar>> {
    let w = f.total_weight();
    let e = build_real_eisenstein(w, f.trunc())?;
    let (r, s) = (w, 0);
    let reference = e.component(r, s).expect("component exists");
    let Some(((k, m, n), c)) = reference
        .terms()
        .find(|((_, m, n), c)| (*m, *n) != (0, 0) && c.as_rational().is_some())
    else {
        return Ok(None);
    };
    let denom = c.as_rational().expect("checked");
    let scalar = f
        .component(r, s)
        .expect("component exists")
        .coeff(*k, *m, *n)
        .scale(&(Rational::one() / denom));
    Ok((e.scale(&scalar) == *f).then_some(scalar))
}

/// `N₊ = Σ (B_{2n+2}/(4n+4)) (2/(2n)!) ε_{2n+2}` as weight ↦ coefficient.
pub fn n_plus(maxweight: u32) -> BTreeMap<u32, Rational> {
    (2..=maxweight / 2)
        .map(|h| {
            let weight = 2 * h;
            let c = bernoulli(weight as usize) / int(2 * weight as i64)
                * (int(2) / Rational::from_integer(factorial(weight as u64 - 2)));
            (weight, c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    #[test]
    fn length_one_constant_term() {
        let i = build_i(1, 4, 4).unwrap();
        let c = i.coeff(&[EisLetter { weight: 4, m: 0 }]);
        assert_eq!(c.coeff(0, 1), rat(-1, 240));
        assert_eq!(c.coeff(1, 0), int(-1));
        assert_eq!(i.coeff(&[]), HolLogSeries::one(4));
    }

    #[test]
    fn mu_factors() {
        assert_eq!(mu_factor(4, 0), int(1));
        assert_eq!(mu_factor(4, 2), rat(1, 2));
        assert_eq!(mu_factor(6, 0), rat(1, 12));
    }

    #[test]
    fn n_plus_values() {
        let n = n_plus(6);
        assert_eq!(n[&4], rat(-1, 240));
        assert_eq!(n[&6], rat(1, 6048));
        assert_eq!(n_plus(4).len(), 1);
    }

    #[test]
    fn sv_twist_is_an_involution() {
        let j = mu_map(&build_i(2, 6, 4).unwrap());
        let once = sv_twist(&j);
        assert_eq!(sv_twist(&once), j);
        let letter = [EpsLetter { weight: 4, m: 0 }];
        assert_eq!(once.coeff(&letter), j.coeff(&letter).neg());
        assert_eq!(once.coeff(&[]), HolLogSeries::one(4));
    }

    #[test]
    fn letter_bridge_matches_derivations() {
        let e0 = crate::freelie::epsilon0();
        for m in 0..2 {
            let l = EpsLetter::new(4, m).unwrap();
            let next = EpsLetter::new(4, m + 1).unwrap();
            let lhs = e0.bracket(&l.value().unwrap()).scale(&int(-1));
            assert_eq!(lhs, next.value().unwrap());
        }
        assert!(e0
            .ad_power(3, &epsilon(4, Variant::Lowest).unwrap())
            .is_zero());
    }
}
