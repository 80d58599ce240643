//! Dense-exponent sparse multivariate polynomials over the rationals.

use crate::exact_arith::{format_rational, int, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in `nvars` variables: exponent vectors to non-zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| **p > 0)
                    .map(|(i, p)| {
                        let v = if self.nvars == 1 {
                            "s".to_string()
                        } else {
                            format!("x{}", i + 1)
                        };
                        if *p == 1 {
                            v
                        } else {
                            format!("{v}^{p}")
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    format_rational(c)
                } else {
                    format!("{}*{}", format_rational(c), mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Poly {
    /// Zero polynomial.
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// Constant.
    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// `c · x^e`.
    pub fn monomial(exponents: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// The variable `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, int(*c));
        }
        p
    }

    /// Adds `c · x^e`.
    pub fn add_term(&mut self, exponents: Vec<u32>, c: Rational) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(exponents.clone())
            .or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `x^e`.
    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree (0 for zero).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, d) in &self.terms {
            out.add_term(e.clone(), d * c);
        }
        out
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.nvars, Rational::one()), |acc, _| {
            acc.mul(self)
        })
    }

    /// Substitutes `x_i ↦ images[i]`.
    pub fn substitute(&self, images: &[Poly]) -> Self {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, Poly::nvars);
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Self::constant(p.nvars, Rational::one()), p.clone()])
            .collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut prod = Self::constant(target, c.clone());
            for (i, p) in e.iter().enumerate() {
                while powers[i].len() <= *p as usize {
                    let next = powers[i].last().expect("non-empty").mul(&images[i]);
                    powers[i].push(next);
                }
                prod = prod.mul(&powers[i][*p as usize]);
            }
            out = out.add(&prod);
        }
        out
    }

    /// Univariate coefficients `[c_0, c_1, …]` of a one-variable polynomial.
    pub fn univariate_coeffs(&self) -> Vec<Rational> {
        assert_eq!(self.nvars, 1, "univariate polynomial");
        let mut out = vec![Rational::zero(); self.degree() as usize + 1];
        for (e, c) in &self.terms {
            out[e[0] as usize] = c.clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_substitution() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let sq = x.add(&y).pow(2);
        assert_eq!(sq.coeff(&[1, 1]), int(2));
        let swapped = sq.substitute(&[y.clone(), x.clone()]);
        assert_eq!(swapped, sq);
        let diff = x.sub(&y).mul(&x.add(&y));
        assert_eq!(diff, x.pow(2).sub(&y.pow(2)));
        assert!(x.sub(&x).is_zero());
    }
}
