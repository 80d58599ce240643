//! Free polynomial model of the single-valued multiple zeta values up to weight 11.
//!
//! The ring is modelled as `ℚ[ζsv(3), ζsv(5), ζsv(7), ζsv(9), ζsv(11), ζsv(3,5,3)]` with no
//! relations. This is a model of the true ring, which agrees with it in weights ≤ 11.

use super::numeric::{mzv_3_5, mzv_3_5_3, zeta_real};
use super::{format_rational, parse_rational, rational_to_f64, Coeff, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Generators of the coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SvGen {
    /// `ζsv(3) = 2ζ(3)`.
    Z3,
    /// `ζsv(5) = 2ζ(5)`.
    Z5,
    /// `ζsv(7) = 2ζ(7)`.
    Z7,
    /// `ζsv(9) = 2ζ(9)`.
    Z9,
    /// `ζsv(11) = 2ζ(11)`.
    Z11,
    /// `ζsv(3,5,3) = 2ζ(3,5,3) − 2ζ(3)ζ(3,5) − 10ζ(3)²ζ(5)`.
    Z353,
}

impl SvGen {
    /// All generators in canonical order.
    pub const ALL: [SvGen; 6] = [
        SvGen::Z3,
        SvGen::Z5,
        SvGen::Z7,
        SvGen::Z9,
        SvGen::Z11,
        SvGen::Z353,
    ];

    /// M-weight of the generator.
    pub fn weight(self) -> u32 {
        match self {
            SvGen::Z3 => 3,
            SvGen::Z5 => 5,
            SvGen::Z7 => 7,
            SvGen::Z9 => 9,
            SvGen::Z11 | SvGen::Z353 => 11,
        }
    }

    /// Serialization name, e.g. `zsv3`.
    pub fn name(self) -> &'static str {
        match self {
            SvGen::Z3 => "zsv3",
            SvGen::Z5 => "zsv5",
            SvGen::Z7 => "zsv7",
            SvGen::Z9 => "zsv9",
            SvGen::Z11 => "zsv11",
            SvGen::Z353 => "zsv3_5_3",
        }
    }

    /// Inverse of [`SvGen::name`].
    pub fn from_name(s: &str) -> Result<Self> {
        SvGen::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown generator {s:?}")))
    }

    /// The single-valued odd zeta value of the given argument.
    pub fn odd_zeta(n: u32) -> Result<Self> {
        match n {
            3 => Ok(SvGen::Z3),
            5 => Ok(SvGen::Z5),
            7 => Ok(SvGen::Z7),
            9 => Ok(SvGen::Z9),
            11 => Ok(SvGen::Z11),
            _ => Err(Error::InvalidArgument(format!(
                "ζsv({n}) is not a generator of the model"
            ))),
        }
    }

    /// Numeric value in double precision.
    pub fn value(self) -> f64 {
        match self {
            SvGen::Z3 => 2.0 * zeta_real(3.0),
            SvGen::Z5 => 2.0 * zeta_real(5.0),
            SvGen::Z7 => 2.0 * zeta_real(7.0),
            SvGen::Z9 => 2.0 * zeta_real(9.0),
            SvGen::Z11 => 2.0 * zeta_real(11.0),
            SvGen::Z353 => {
                let z3 = zeta_real(3.0);
                2.0 * mzv_3_5_3() - 2.0 * z3 * mzv_3_5() - 10.0 * z3 * z3 * zeta_real(5.0)
            }
        }
    }
}

/// A monomial: a sorted multiset of generators.
pub type SvMonomial = Vec<SvGen>;

/// Element of the single-valued zeta coefficient ring; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SvScalar {
    terms: BTreeMap<SvMonomial, Rational>,
}

impl SvScalar {
    /// A single generator.
    pub fn generator(g: SvGen) -> Self {
        Self::monomial(vec![g], Rational::one())
    }

    /// `ζsv(n)` for odd `3 ≤ n ≤ 11`.
    pub fn zeta_sv(n: u32) -> Result<Self> {
        SvGen::odd_zeta(n).map(Self::generator)
    }

    /// `c · Π gens`.
    pub fn monomial(mut gens: SvMonomial, c: Rational) -> Self {
        gens.sort();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(gens, c);
        }
        Self { terms }
    }

    /// Iterator over `(monomial, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&SvMonomial, &Rational)> {
        self.terms.iter()
    }

    /// The coefficient of a monomial.
    pub fn coeff(&self, mono: &[SvGen]) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if the element is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Weight of a monomial.
    pub fn monomial_weight(mono: &[SvGen]) -> u32 {
        mono.iter().map(|g| g.weight()).sum()
    }

    /// Maximal weight of a stored monomial (0 for zero).
    pub fn max_weight(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| Self::monomial_weight(m))
            .max()
            .unwrap_or(0)
    }

    /// The weight if every stored monomial has the same weight.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut ws = self.terms.keys().map(|m| Self::monomial_weight(m));
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    /// Multiplication by a rational.
    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::default();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    /// Numeric value in double precision.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| rational_to_f64(c) * m.iter().map(|g| g.value()).product::<f64>())
            .sum()
    }

    fn insert_add(terms: &mut BTreeMap<SvMonomial, Rational>, m: SvMonomial, c: Rational) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl From<Rational> for SvScalar {
    fn from(c: Rational) -> Self {
        Self::monomial(Vec::new(), c)
    }
}

impl From<i64> for SvScalar {
    fn from(c: i64) -> Self {
        Self::from(super::int(c))
    }
}

impl Add for &SvScalar {
    type Output = SvScalar;
    fn add(self, rhs: &SvScalar) -> SvScalar {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            SvScalar::insert_add(&mut terms, m.clone(), c.clone());
        }
        SvScalar { terms }
    }
}

impl Sub for &SvScalar {
    type Output = SvScalar;
    fn sub(self, rhs: &SvScalar) -> SvScalar {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            SvScalar::insert_add(&mut terms, m.clone(), -c);
        }
        SvScalar { terms }
    }
}

impl Mul for &SvScalar {
    type Output = SvScalar;
    fn mul(self, rhs: &SvScalar) -> SvScalar {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let mut m: SvMonomial = m1.iter().chain(m2.iter()).copied().collect();
                m.sort();
                SvScalar::insert_add(&mut terms, m, c1 * c2);
            }
        }
        SvScalar { terms }
    }
}

impl Neg for &SvScalar {
    type Output = SvScalar;
    fn neg(self) -> SvScalar {
        SvScalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for SvScalar {
            type Output = SvScalar;
            fn $f(self, rhs: SvScalar) -> SvScalar {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SvScalar {
    type Output = SvScalar;
    fn neg(self) -> SvScalar {
        -&self
    }
}

impl Zero for SvScalar {
    fn zero() -> Self {
        SvScalar::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for SvScalar {
    fn one() -> Self {
        SvScalar::from(Rational::one())
    }
}

impl Coeff for SvScalar {
    fn from_rational(r: &Rational) -> Self {
        SvScalar::from(r.clone())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        // Fast path for the common rational-times-anything case.
        if let Some(r) = self.as_rational() {
            return other.scale(&r);
        }
        if let Some(r) = other.as_rational() {
            return self.scale(&r);
        }
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        SvScalar::scale(self, r)
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn accumulate(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            SvScalar::insert_add(&mut self.terms, m.clone(), c.clone());
        }
    }
}

impl fmt::Display for SvScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_empty() {
                    format_rational(c)
                } else {
                    let names: Vec<&str> = m.iter().map(|g| g.name()).collect();
                    format!("{}*{}", format_rational(c), names.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SvScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct SerTerm {
    monomial: Vec<String>,
    coeff: String,
}

impl Serialize for SvScalar {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<SerTerm> = self
            .terms
            .iter()
            .map(|(m, c)| SerTerm {
                monomial: m.iter().map(|g| g.name().to_string()).collect(),
                coeff: format_rational(c),
            })
            .collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SvScalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<SerTerm>::deserialize(de)?;
        let mut out = SvScalar::zero();
        for t in v {
            let gens = t
                .monomial
                .iter()
                .map(|s| SvGen::from_name(s))
                .collect::<Result<Vec<_>>>()
                .map_err(D::Error::custom)?;
            let c = parse_rational(&t.coeff).map_err(D::Error::custom)?;
            out = &out + &SvScalar::monomial(gens, c);
        }
        Ok(out)
    }
}

/// Numeric value of `x` with absolute error below `10^(1 - precision)`.
pub fn sv_eval(x: &SvScalar, precision: u32) -> Result<f64> {
    if precision > 15 {
        return Err(Error::PrecisionTooHigh(precision));
    }
    Ok(x.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    #[test]
    fn eval_examples() {
        let z3 = SvScalar::zeta_sv(3).unwrap();
        assert!((sv_eval(&z3, 10).unwrap() - 2.404_113_806_3).abs() < 1e-9);
        assert_eq!(sv_eval(&SvScalar::one(), 10).unwrap(), 1.0);
        assert!(sv_eval(&z3, 16).is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = &SvScalar::monomial(vec![SvGen::Z5, SvGen::Z3], rat(-3, 7))
            + &SvScalar::from(rat(1, 2));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(
            s,
            r#"[{"monomial":[],"coeff":"1/2"},{"monomial":["zsv3","zsv5"],"coeff":"-3/7"}]"#
        );
        let y: SvScalar = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn weights() {
        let x = SvScalar::monomial(vec![SvGen::Z3, SvGen::Z353], rat(1, 1));
        assert_eq!(x.homogeneous_weight(), Some(14));
        assert_eq!(SvScalar::zero().homogeneous_weight(), None);
    }
}
