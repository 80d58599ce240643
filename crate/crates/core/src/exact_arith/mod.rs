//! Exact rational arithmetic, Bernoulli numbers, divisor sums and the
//! single-valued zeta coefficient ring.

mod numeric;
mod svscalar;

pub use numeric::{
    gamma, hurwitz_tail, ln_gamma_real, mzv_3_5, mzv_3_5_3, mzv_5_3, zeta, zeta_real,
};
pub use svscalar::{sv_eval, SvGen, SvMonomial, SvScalar};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;

/// Arbitrary-precision rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `n/d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p/q`, or `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse(q)?;
            if q.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rational::new(parse(p)?, q))
        }
        None => Ok(Rational::from_integer(parse(s)?)),
    }
}

/// Converts a rational to the nearest double.
pub fn rational_to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale both parts down to fit a double.
            let bits = r.numer().bits().max(r.denom().bits()) as i64 - 1000;
            let shift = bits.max(0) as usize;
            let n = (r.numer().abs() >> shift).to_f64().unwrap_or(f64::MAX);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::MAX);
            let v = if d == 0.0 { f64::INFINITY } else { n / d };
            if r.is_negative() {
                -v
            } else {
                v
            }
        }
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`.
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        if m > 1 && m % 2 == 1 {
            b.push(Rational::zero());
            continue;
        }
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += Rational::from_integer(binomial(m as u64 + 1, j as u64)) * bj;
            }
        }
        b.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// The Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    bernoulli_table(n).pop().expect("table is non-empty")
}

/// Divisor sum `σ_k(n) = Σ_{d | n} d^k`.
///
/// # Panics
/// Panics if `n == 0`.
pub fn sigma(k: u32, n: u64) -> BigInt {
    assert!(n >= 1, "sigma requires n >= 1");
    let mut acc = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            acc += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                acc += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    acc
}

/// Commutative ring of coefficients, containing the rationals.
///
/// Every series and polynomial type in the crate is generic over this trait so that the
/// same routines serve rational, single-valued-zeta and log-polynomial coefficients.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + Zero + One {
    /// Embeds a rational.
    fn from_rational(r: &Rational) -> Self;
    /// Sum.
    fn plus(&self, other: &Self) -> Self;
    /// Product.
    fn times(&self, other: &Self) -> Self;
    /// Negation.
    fn negate(&self) -> Self;
    /// Multiplication by a rational.
    fn scale(&self, r: &Rational) -> Self;
    /// Difference.
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    /// In-place accumulation.
    fn accumulate(&mut self, other: &Self) {
        *self = self.plus(other);
    }
}

impl Coeff for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(bernoulli(7), int(0));
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(3, 1), BigInt::from(1));
        assert_eq!(sigma(3, 2), BigInt::from(9));
        assert_eq!(sigma(5, 4), BigInt::from(1057));
        for n in 1..60u64 {
            let brute: u64 = (1..=n).filter(|d| n % d == 0).map(|d| d.pow(3)).sum();
            assert_eq!(sigma(3, n), BigInt::from(brute));
        }
    }

    #[test]
    fn rational_round_trip() {
        for s in ["1/720", "-691/2730", "7", "0"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
