//! The free Lie algebra `Lie(a, b)`, derivations annihilating `Θ = [a, b]`, the Tsunogai
//! derivations `ε_{2n+2}` and `ε^∨_{2n+2}`, and exact rank computations.
//!
//! Lie elements are stored through their image in the free associative algebra, which is
//! injective and canonical; Lyndon coordinates are recovered on demand.

use crate::error::{Error, Result};
use crate::exact_arith::{int, Rational};
use crate::linalg::rank_and_kernel;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

/// Letter `a`.
pub const A: u8 = 0;
/// Letter `b`.
pub const B: u8 = 1;

/// Non-commutative polynomial: words over `{a, b}` to coefficients.
type Tensor = BTreeMap<Vec<u8>, Rational>;

fn acc(t: &mut Tensor, w: Vec<u8>, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match t.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn from_hash(h: HashMap<Vec<u8>, Rational>) -> Tensor {
    h.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn tensor_mul(x: &Tensor, y: &Tensor) -> HashMap<Vec<u8>, Rational> {
    let mut out: HashMap<Vec<u8>, Rational> = HashMap::new();
    for (u, c) in x {
        for (v, d) in y {
            let mut w = Vec::with_capacity(u.len() + v.len());
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            *out.entry(w).or_insert_with(Rational::zero) += c * d;
        }
    }
    out
}

fn tensor_bracket(x: &Tensor, y: &Tensor) -> Tensor {
    let mut out = tensor_mul(x, y);
    for (w, c) in tensor_mul(y, x) {
        *out.entry(w).or_insert_with(Rational::zero) -= c;
    }
    from_hash(out)
}

fn word_string(w: &[u8]) -> String {
    w.iter().map(|l| if *l == A { 'a' } else { 'b' }).collect()
}

fn parse_word(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            'a' => Ok(A),
            'b' => Ok(B),
            _ => Err(Error::Parse(format!("letter {c:?} in {s:?}"))),
        })
        .collect()
}

/// True for Lyndon words: strictly smaller than every proper suffix.
pub fn is_lyndon<T: Ord>(w: &[T]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Standard bracketing `P_w` of a Lyndon word, expanded in the free associative algebra.
fn standard_bracketing(w: &[u8], memo: &mut HashMap<Vec<u8>, Tensor>) -> Tensor {
    if let Some(t) = memo.get(w) {
        return t.clone();
    }
    let t = if w.len() == 1 {
        Tensor::from([(w.to_vec(), Rational::one())])
    } else {
        let split = (1..w.len())
            .find(|&i| is_lyndon(&w[i..]))
            .expect("a Lyndon word of length ≥ 2 has a proper Lyndon suffix");
        let u = standard_bracketing(&w[..split], memo);
        let v = standard_bracketing(&w[split..], memo);
        tensor_bracket(&u, &v)
    };
    memo.insert(w.to_vec(), t.clone());
    t
}

/// Element of `Lie(a, b)` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    tensor: Tensor,
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lyndon_coords() {
            Ok(c) => f.debug_map().entries(c.iter()).finish(),
            Err(_) => f.write_str("<not a Lie element>"),
        }
    }
}

impl LieElement {
    /// Zero.
    pub fn zero() -> Self {
        Self::default()
    }

    /// Generator `a`.
    pub fn a() -> Self {
        Self::letter(A)
    }

    /// Generator `b`.
    pub fn b() -> Self {
        Self::letter(B)
    }

    fn letter(l: u8) -> Self {
        Self {
            tensor: Tensor::from([(vec![l], Rational::one())]),
        }
    }

    /// Lyndon basis element `P_w` for a Lyndon word given as a string over `{a, b}`.
    pub fn lyndon(word: &str) -> Result<Self> {
        let w = parse_word(word)?;
        if !is_lyndon(&w) {
            return Err(Error::InvalidArgument(format!(
                "{word:?} is not a Lyndon word"
            )));
        }
        Ok(Self {
            tensor: standard_bracketing(&w, &mut HashMap::new()),
        })
    }

    /// Linear combination of Lyndon basis elements.
    pub fn from_lyndon(coords: &BTreeMap<String, Rational>) -> Result<Self> {
        let mut out = Self::zero();
        for (w, c) in coords {
            out = out.add(&Self::lyndon(w)?.scale(c));
        }
        Ok(out)
    }

    /// Coordinates in the Lyndon basis, keyed by Lyndon words.
    pub fn lyndon_coords(&self) -> Result<BTreeMap<String, Rational>> {
        let mut rest = self.tensor.clone();
        let mut memo = HashMap::new();
        let mut out = BTreeMap::new();
        while let Some((w, c)) = rest.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            if !is_lyndon(&w) {
                return Err(Error::InvalidArgument(format!(
                    "leading word {} is not Lyndon",
                    word_string(&w)
                )));
            }
            for (u, d) in standard_bracketing(&w, &mut memo) {
                acc(&mut rest, u, -(&c * d));
            }
            out.insert(word_string(&w), c);
        }
        Ok(out)
    }

    /// Words of the associative expansion with their coefficients.
    pub fn words(&self) -> impl Iterator<Item = (String, &Rational)> {
        self.tensor.iter().map(|(w, c)| (word_string(w), c))
    }

    /// Coefficient of a word of the associative expansion.
    pub fn word_coeff(&self, word: &[u8]) -> Rational {
        self.tensor
            .get(word)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Associative expansion with letters `0 = a`, `1 = b`.
    pub fn word_terms(&self) -> impl Iterator<Item = (&Vec<u8>, &Rational)> {
        self.tensor.iter()
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.tensor.is_empty()
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut t = self.tensor.clone();
        for (w, c) in &other.tensor {
            acc(&mut t, w.clone(), c.clone());
        }
        Self { tensor: t }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            tensor: self
                .tensor
                .iter()
                .map(|(w, d)| (w.clone(), d * c))
                .collect(),
        }
    }

    /// Lie bracket `[self, other]`.
    pub fn bracket(&self, other: &Self) -> Self {
        Self {
            tensor: tensor_bracket(&self.tensor, &other.tensor),
        }
    }

    /// `ad(self)^k (y)`.
    pub fn ad_power(&self, k: u32, y: &Self) -> Self {
        (0..k).fold(y.clone(), |acc, _| self.bracket(&acc))
    }

    /// Bidegrees `(deg_a, deg_b)` present.
    pub fn bidegrees(&self) -> BTreeSet<(u32, u32)> {
        self.tensor.keys().map(|w| bidegree(w)).collect()
    }

    /// The bidegree if homogeneous and non-zero.
    pub fn homogeneous_bidegree(&self) -> Option<(u32, u32)> {
        let d = self.bidegrees();
        (d.len() == 1).then(|| *d.iter().next().expect("one element"))
    }

    /// Homogeneous slice of the given bidegree.
    pub fn slice(&self, deg_a: u32, deg_b: u32) -> Self {
        Self {
            tensor: self
                .tensor
                .iter()
                .filter(|(w, _)| bidegree(w) == (deg_a, deg_b))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Slice of `b`-degree `r`.
    pub fn b_slice(&self, r: u32) -> Self {
        Self {
            tensor: self
                .tensor
                .iter()
                .filter(|(w, _)| bidegree(w).1 == r)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// M-degree `−deg_a` of a homogeneous element.
    pub fn m_degree(&self) -> Option<i64> {
        self.homogeneous_bidegree().map(|(a, _)| -(a as i64))
    }

    /// Algebra substitution `a ↦ img_a`, `b ↦ img_b`.
    pub fn substitute(&self, img_a: &Self, img_b: &Self) -> Self {
        let mut out: HashMap<Vec<u8>, Rational> = HashMap::new();
        let imgs = [&img_a.tensor, &img_b.tensor];
        for (w, c) in &self.tensor {
            let mut prod: Tensor = Tensor::from([(Vec::new(), c.clone())]);
            for l in w {
                prod = from_hash(tensor_mul(&prod, imgs[*l as usize]));
            }
            for (u, d) in prod {
                *out.entry(u).or_insert_with(Rational::zero) += d;
            }
        }
        Self {
            tensor: from_hash(out),
        }
    }
}

fn bidegree(w: &[u8]) -> (u32, u32) {
    let nb = w.iter().filter(|l| **l == B).count() as u32;
    (w.len() as u32 - nb, nb)
}

/// Lie bracket.
pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    x.bracket(y)
}

/// Derivation of `Lie(a, b)` annihilating `Θ = [a, b]`, stored by its values on `a` and `b`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DerivationTheta {
    on_a: LieElement,
    on_b: LieElement,
}

impl DerivationTheta {
    /// Builds a derivation, checking `[on_a, b] + [a, on_b] = 0`.
    pub fn new(on_a: LieElement, on_b: LieElement) -> Result<Self> {
        let theta = on_a
            .bracket(&LieElement::b())
            .add(&LieElement::a().bracket(&on_b));
        if !theta.is_zero() {
            return Err(Error::NotThetaDerivation);
        }
        Ok(Self { on_a, on_b })
    }

    /// Zero derivation.
    pub fn zero() -> Self {
        Self::default()
    }

    /// Value on `a`.
    pub fn on_a(&self) -> &LieElement {
        &self.on_a
    }

    /// Value on `b`.
    pub fn on_b(&self) -> &LieElement {
        &self.on_b
    }

    /// True for the zero derivation.
    pub fn is_zero(&self) -> bool {
        self.on_a.is_zero() && self.on_b.is_zero()
    }

    /// Applies the derivation by the Leibniz rule.
    pub fn apply(&self, x: &LieElement) -> LieElement {
        let imgs = [&self.on_a.tensor, &self.on_b.tensor];
        let mut out: HashMap<Vec<u8>, Rational> = HashMap::new();
        for (w, c) in &x.tensor {
            for (i, l) in w.iter().enumerate() {
                for (u, d) in imgs[*l as usize] {
                    let mut nw = Vec::with_capacity(w.len() + u.len() - 1);
                    nw.extend_from_slice(&w[..i]);
                    nw.extend_from_slice(u);
                    nw.extend_from_slice(&w[i + 1..]);
                    *out.entry(nw).or_insert_with(Rational::zero) += c * d;
                }
            }
        }
        LieElement {
            tensor: from_hash(out),
        }
    }

    /// Commutator `self ∘ other − other ∘ self`.
    pub fn bracket(&self, other: &Self) -> Self {
        let on_a = self.apply(&other.on_a).sub(&other.apply(&self.on_a));
        let on_b = self.apply(&other.on_b).sub(&other.apply(&self.on_b));
        Self::new(on_a, on_b).expect("the commutator of Θ-derivations annihilates Θ")
    }

    /// `ad(self)^k (other)`.
    pub fn ad_power(&self, k: u32, other: &Self) -> Self {
        (0..k).fold(other.clone(), |acc, _| self.bracket(&acc))
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        Self {
            on_a: self.on_a.add(&other.on_a),
            on_b: self.on_b.add(&other.on_b),
        }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            on_a: self.on_a.scale(c),
            on_b: self.on_b.scale(c),
        }
    }

    /// Bidegree shift `(Δdeg_a, Δdeg_b)` if homogeneous and non-zero.
    pub fn shift(&self) -> Result<Option<(i64, i64)>> {
        let mut shifts = BTreeSet::new();
        for (base, v) in [((1i64, 0i64), &self.on_a), ((0, 1), &self.on_b)] {
            for (da, db) in v.bidegrees() {
                shifts.insert((da as i64 - base.0, db as i64 - base.1));
            }
        }
        match shifts.len() {
            0 => Ok(None),
            1 => Ok(shifts.into_iter().next()),
            _ => Err(Error::Inhomogeneous(format!("shifts {shifts:?}"))),
        }
    }

    /// Conjugation `σ ∘ self ∘ σ^{-1}` by the automorphism `a ↦ σa`, `b ↦ σb`.
    pub fn conjugate(
        &self,
        sigma: (&LieElement, &LieElement),
        sigma_inv: (&LieElement, &LieElement),
    ) -> Result<Self> {
        let image = |g: &LieElement| self.apply(g).substitute(sigma.0, sigma.1);
        Self::new(image(sigma_inv.0), image(sigma_inv.1))
    }

    fn flatten(&self) -> BTreeMap<(u8, Vec<u8>), Rational> {
        let mut out = BTreeMap::new();
        for (slot, v) in [(A, &self.on_a), (B, &self.on_b)] {
            for (w, c) in &v.tensor {
                out.insert((slot, w.clone()), c.clone());
            }
        }
        out
    }
}

/// Highest-weight (`ε^∨`) or lowest-weight (`ε`) Tsunogai derivation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    /// `ε^∨_{2n+2}`.
    Dual,
    /// `ε_{2n+2}`, the conjugate of the dual variant by `(a, b) ↦ (−b, a)`.
    Lowest,
}

/// `ε^∨_{2n+2}` or `ε_{2n+2}` for an even index `2n + 2 ≥ 2`.
pub fn epsilon(index: u32, variant: Variant) -> Result<DerivationTheta> {
    if index % 2 == 1 {
        return Err(Error::OddWeight(index as i64));
    }
    if index < 2 {
        return Err(Error::InvalidArgument(format!("index {index} < 2")));
    }
    let a = LieElement::a();
    let b = LieElement::b();
    let odd = index - 1;
    let powers: Vec<LieElement> = (0..=odd)
        .scan(b.clone(), |cur, _| {
            let out = cur.clone();
            *cur = a.bracket(cur);
            Some(out)
        })
        .collect();
    let on_a = a.bracket(&powers[odd as usize]);
    let mut on_b = LieElement::zero();
    for i in 0..=odd {
        let j = odd - i;
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        on_b = on_b.add(&powers[i as usize].bracket(&powers[j as usize]).scale(&sign));
    }
    let on_b = on_b.scale(&Rational::new(1.into(), 2.into()));
    let dual = DerivationTheta::new(on_a, on_b)?;
    match variant {
        Variant::Dual => Ok(dual),
        Variant::Lowest => {
            let neg_b = b.scale(&int(-1));
            let neg_a = a.scale(&int(-1));
            dual.conjugate((&neg_b, &a), (&b, &neg_a))
        }
    }
}

/// `ε₀ = −a ∂/∂b`.
pub fn epsilon0() -> DerivationTheta {
    DerivationTheta::new(LieElement::zero(), LieElement::a().scale(&int(-1)))
        .expect("ε₀ annihilates Θ")
}

/// `ε₀^∨ = b ∂/∂a`.
pub fn epsilon0_dual() -> DerivationTheta {
    DerivationTheta::new(LieElement::b(), LieElement::zero()).expect("ε₀^∨ annihilates Θ")
}

/// `ε^{(m)}_{2n+2} = ad(−ε₀)^m ε_{2n+2}`.
pub fn epsilon_depth(index: u32, m: u32) -> Result<DerivationTheta> {
    let neg = epsilon0().scale(&int(-1));
    Ok(neg.ad_power(m, &epsilon(index, Variant::Lowest)?))
}

/// Applies a derivation.
pub fn der_apply(d: &DerivationTheta, x: &LieElement) -> LieElement {
    d.apply(x)
}

/// Commutator of derivations.
pub fn der_bracket(d1: &DerivationTheta, d2: &DerivationTheta) -> DerivationTheta {
    d1.bracket(d2)
}

/// Rank of the span of homogeneous derivations of a common bidegree shift, with a basis of
/// the linear relations as primitive integer vectors.
pub fn rank_of_span(ds: &[DerivationTheta]) -> Result<(usize, Vec<Vec<Rational>>)> {
    let mut common = None;
    for d in ds {
        if let Some(s) = d.shift()? {
            match common {
                None => common = Some(s),
                Some(c) if c != s => {
                    return Err(Error::Inhomogeneous(format!("shifts {c:?} and {s:?}")))
                }
                _ => {}
            }
        }
    }
    let vectors: Vec<_> = ds.iter().map(DerivationTheta::flatten).collect();
    Ok(rank_and_kernel(&vectors))
}

/// Generator `ad(ε₀^∨)^i ε^∨_{2n+2}` of the geometric derivation algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct StringGenerator {
    /// Index `2n + 2`.
    pub index: u32,
    /// Power `i` of `ad(ε₀^∨)`.
    pub i: u32,
}

impl StringGenerator {
    /// Shift of `deg_a` (the exponent of `s` in the Poincaré series).
    pub fn a_shift(&self) -> u32 {
        self.index - 1 - self.i
    }

    /// Shift of `deg_b`.
    pub fn b_shift(&self) -> u32 {
        1 + self.i
    }
}

/// One row of the dimension table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionRow {
    /// Number of generators in each bracket.
    pub bracket_length: u32,
    /// Shift of `deg_b` (the grading `k` of `u_k`).
    pub b_degree: u32,
    /// Shift of `deg_a`.
    pub a_degree: u32,
    /// Dimension of the free Lie algebra on the generators in this degree.
    pub formal_count: usize,
    /// Rank of the span of all brackets of this length and degree.
    pub rank: usize,
}

/// Dimension table and comparison with the closed-form Poincaré series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionTable {
    /// Per (length, degree) ranks.
    pub rows: Vec<DimensionRow>,
    /// `(k, a_degree, rank of all brackets, coefficient of s^{a_degree} in u_k)`.
    pub poincare: Vec<(u32, u32, usize, i64)>,
}

/// Largest `a`-degree accepted by [`dimension_table`].
pub const MAX_WINDOW: u32 = 17;

/// Coefficients of `u_1 = s/(1−s²)`, `u_2 = s²/((1−s²)(1−s⁶))`,
/// `u_3 = s/((1−s²)(1−s⁴)(1−s⁶))` up to `s^max`.
pub fn poincare_series(k: u32, max: u32) -> Result<Vec<i64>> {
    let (shift, factors): (usize, &[usize]) = match k {
        1 => (1, &[2]),
        2 => (2, &[2, 6]),
        3 => (1, &[2, 4, 6]),
        _ => return Err(Error::InvalidArgument(format!("u_{k} not available"))),
    };
    let len = max as usize + 1;
    let mut c = vec![0i64; len];
    if shift < len {
        c[shift] = 1;
    }
    for f in factors {
        for i in *f..len {
            c[i] += c[i - f];
        }
    }
    Ok(c)
}

fn string_generators(max_a: u32, max_b: u32) -> Vec<StringGenerator> {
    let mut out = Vec::new();
    let mut index = 4;
    while index - 1 - (index - 2).min(max_b - 1) <= max_a {
        for i in 0..=(index - 2).min(max_b - 1) {
            let g = StringGenerator { index, i };
            if g.a_shift() <= max_a && g.a_shift() >= 1 {
                out.push(g);
            }
        }
        index += 2;
    }
    out
}

/// Ranks of iterated brackets of `ad(ε₀^∨)^i ε^∨_{2n+2}` (`n ≥ 1`) by bracket length and
/// bidegree shift, for `b`-degree up to 3 and `a`-degree up to `max_a_degree`.
///
/// `ε₂` is central and only enters the `b`-degree-1 comparison with `u_1`.
pub fn dimension_table(max_bracket_length: u32, max_a_degree: u32) -> Result<DimensionTable> {
    if max_bracket_length == 0 || max_bracket_length > 3 {
        return Err(Error::CostGuard(format!(
            "bracket length {max_bracket_length} outside 1..=3"
        )));
    }
    if max_a_degree > MAX_WINDOW {
        return Err(Error::CostGuard(format!(
            "a-degree window {max_a_degree} > {MAX_WINDOW}; derivation values would carry about {} words",
            crate::exact_arith::binomial(max_a_degree as u64 + 4, 3)
        )));
    }
    let max_b = 3;
    let gens = string_generators(max_a_degree, max_b);
    let mut values: BTreeMap<StringGenerator, DerivationTheta> = BTreeMap::new();
    let e0d = epsilon0_dual();
    for g in &gens {
        let d = e0d.ad_power(g.i, &epsilon(g.index, Variant::Dual)?);
        values.insert(*g, d);
    }
    // Brackets by length: sequences of generator positions (right-normed).
    type Key = (u32, u32);
    type Level = BTreeMap<Key, Vec<(Vec<usize>, DerivationTheta)>>;
    let mut by_len: Vec<Level> = vec![BTreeMap::new()];
    let mut level1: Level = BTreeMap::new();
    for (idx, g) in gens.iter().enumerate() {
        level1
            .entry((g.b_shift(), g.a_shift()))
            .or_default()
            .push((vec![idx], values[g].clone()));
    }
    by_len.push(level1);
    for len in 2..=max_bracket_length as usize {
        let mut level: BTreeMap<Key, Vec<(Vec<usize>, DerivationTheta)>> = BTreeMap::new();
        for (idx, g) in gens.iter().enumerate() {
            for ((kb, ka), items) in &by_len[len - 1] {
                let key = (kb + g.b_shift(), ka + g.a_shift());
                if key.0 > max_b || key.1 > max_a_degree {
                    continue;
                }
                for (seq, d) in items {
                    let mut s = vec![idx];
                    s.extend(seq);
                    level
                        .entry(key)
                        .or_default()
                        .push((s, values[g].bracket(d)));
                }
            }
        }
        by_len.push(level);
    }
    let mut rows = Vec::new();
    let mut all: BTreeMap<Key, Vec<DerivationTheta>> = BTreeMap::new();
    for (len, level) in by_len.iter().enumerate().skip(1) {
        for ((kb, ka), items) in level {
            let ds: Vec<DerivationTheta> = items.iter().map(|(_, d)| d.clone()).collect();
            let (rank, _) = rank_of_span(&ds)?;
            let formal = items.iter().filter(|(s, _)| is_lyndon(s)).count();
            rows.push(DimensionRow {
                bracket_length: len as u32,
                b_degree: *kb,
                a_degree: *ka,
                formal_count: formal,
                rank,
            });
            all.entry((*kb, *ka)).or_default().extend(ds);
        }
    }
    let mut poincare = Vec::new();
    for k in 1..=max_b.min(max_bracket_length.max(1) * 3).min(3) {
        let series = poincare_series(k, max_a_degree)?;
        for ka in 0..=max_a_degree {
            let mut rank = all
                .get(&(k, ka))
                .map(|ds| rank_of_span(ds).map(|r| r.0))
                .transpose()?
                .unwrap_or(0);
            if k == 1 && ka == 1 {
                rank += 1; // ε₂
            }
            if rank > 0 || series[ka as usize] != 0 {
                poincare.push((k, ka, rank, series[ka as usize]));
            }
        }
    }
    Ok(DimensionTable { rows, poincare })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(x: &LieElement) -> BTreeMap<String, Rational> {
        x.lyndon_coords().unwrap()
    }

    #[test]
    fn bracket_examples() {
        let a = LieElement::a();
        let b = LieElement::b();
        assert!(a.bracket(&a).is_zero());
        assert_eq!(
            coords(&a.bracket(&b)),
            BTreeMap::from([("ab".to_string(), int(1))])
        );
        let ab = a.bracket(&b);
        assert_eq!(ab.bracket(&a), a.bracket(&ab).scale(&int(-1)));
        assert_eq!(
            coords(&ab.bracket(&a)),
            BTreeMap::from([("aab".to_string(), int(-1))])
        );
    }

    #[test]
    fn epsilon_examples() {
        let a = LieElement::a();
        let b = LieElement::b();
        let e4 = epsilon(4, Variant::Dual).unwrap();
        assert_eq!(e4.on_a(), &a.ad_power(4, &b));
        let expected = b
            .bracket(&a.ad_power(3, &b))
            .sub(&a.bracket(&b).bracket(&a.ad_power(2, &b)));
        assert_eq!(e4.on_b(), &expected);
        assert!(epsilon(5, Variant::Dual).is_err());
        assert_eq!(
            epsilon(2, Variant::Dual).unwrap(),
            epsilon(2, Variant::Lowest).unwrap()
        );
        let low = epsilon(6, Variant::Lowest).unwrap();
        assert_eq!(low.on_b(), &b.ad_power(6, &a).scale(&int(-1)));
    }

    #[test]
    fn derivation_examples() {
        let e4 = epsilon(4, Variant::Dual).unwrap();
        assert!(e4
            .apply(&LieElement::a().bracket(&LieElement::b()))
            .is_zero());
        assert!(e4.bracket(&e4).is_zero());
        let e0d = epsilon0_dual();
        for n in 1..=3u32 {
            let e = epsilon(2 * n + 2, Variant::Dual).unwrap();
            assert!(!e0d.ad_power(2 * n, &e).is_zero());
            assert!(e0d.ad_power(2 * n + 1, &e).is_zero());
        }
        assert!(DerivationTheta::new(LieElement::b(), LieElement::b()).is_err());
    }

    #[test]
    fn pollack_first_relation() {
        let br = |i, j| {
            epsilon(i, Variant::Dual)
                .unwrap()
                .bracket(&epsilon(j, Variant::Dual).unwrap())
        };
        let (rank, kernel) = rank_of_span(&[br(10, 4), br(8, 6)]).unwrap();
        assert_eq!(rank, 1);
        assert_eq!(kernel, vec![vec![int(1), int(-3)]]);
        assert!(rank_of_span(&[br(10, 4), epsilon(4, Variant::Dual).unwrap()]).is_err());
    }

    #[test]
    fn lyndon_round_trip() {
        let a = LieElement::a();
        let b = LieElement::b();
        let x = a
            .ad_power(2, &b)
            .bracket(&a.bracket(&b))
            .add(&b.bracket(&a.ad_power(3, &b)));
        let back = LieElement::from_lyndon(&coords(&x)).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn poincare_coefficients() {
        assert_eq!(poincare_series(1, 5).unwrap(), vec![0, 1, 0, 1, 0, 1]);
        assert_eq!(
            poincare_series(2, 8).unwrap(),
            vec![0, 0, 1, 0, 1, 0, 1, 0, 2]
        );
        assert_eq!(poincare_series(3, 5).unwrap(), vec![0, 1, 0, 1, 0, 2]);
    }
}
