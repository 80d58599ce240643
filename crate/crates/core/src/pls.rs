//! The map `ρ` from `b`-graded words to rational functions and the linearized double
//! shuffle equations in depths 2 and 3.

use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::freelie::{LieElement, B};
use crate::poly::Poly;
use num_traits::One;
use serde::Serialize;

/// Rational function `N(x₁,…,x_r) / (x₁(x₁−x₂)…(x_{r−1}−x_r)x_r)`; for `r = 1` the
/// denominator is `x₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFn {
    depth: usize,
    numerator: Poly,
}

/// Canonical denominator in `depth` variables.
pub fn canonical_denominator(depth: usize) -> Poly {
    let x = |i| Poly::var(depth, i);
    let mut d = x(0);
    if depth >= 2 {
        for i in 0..depth - 1 {
            d = d.mul(&x(i).sub(&x(i + 1)));
        }
        d = d.mul(&x(depth - 1));
    }
    d
}

impl RatFn {
    /// Builds from a numerator over the canonical denominator.
    pub fn new(numerator: Poly) -> Result<Self> {
        let depth = numerator.nvars();
        if depth == 0 {
            return Err(Error::InvalidArgument("depth 0".into()));
        }
        Ok(Self { depth, numerator })
    }

    /// Depth `r`.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Numerator over the canonical denominator.
    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

/// Treatment of the leading exponent `i₀` in `ρ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RhoConvention {
    /// Every word contributes and `i₀` is ignored.
    Verbatim,
    /// Only words with `i₀ = 0` contribute, i.e. a factor `x₀^{i₀}` evaluated at `x₀ = 0`.
    LeadingB,
}

/// `ρ`: the `b`-degree-`r` slice, with `a^{i₀} b a^{i₁} … b a^{i_r} ↦ x₁^{i₁}…x_r^{i_r}` over the
/// canonical denominator.
pub fn rho(x: &LieElement, r: usize) -> Result<RatFn> {
    rho_with(x, r, RhoConvention::Verbatim)
}

/// `ρ` under the given convention for `i₀`.
pub fn rho_with(x: &LieElement, r: usize, convention: RhoConvention) -> Result<RatFn> {
    if r == 0 {
        return Err(Error::InvalidArgument("depth must be positive".into()));
    }
    let mut num = Poly::zero(r);
    for (w, c) in x.word_terms() {
        let positions: Vec<usize> = w
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == B)
            .map(|(i, _)| i)
            .collect();
        if positions.len() != r {
            continue;
        }
        if convention == RhoConvention::LeadingB && positions[0] != 0 {
            continue;
        }
        let mut e = Vec::with_capacity(r);
        for j in 0..r {
            let end = positions.get(j + 1).copied().unwrap_or(w.len());
            e.push((end - positions[j] - 1) as u32);
        }
        num.add_term(e, c.clone());
    }
    RatFn::new(num)
}

/// One linearized double shuffle equation and its residue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residue {
    /// Equation label.
    pub equation: String,
    /// Numerator of the left-hand side after clearing denominators.
    pub residue: String,
    /// True when the residue vanishes.
    pub vanishes: bool,
}

/// Residues of the defining equations; membership holds when all vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LdsReport {
    /// Depth of the checked function.
    pub depth: usize,
    /// One entry per equation.
    pub residues: Vec<Residue>,
}

impl LdsReport {
    /// True when every residue is zero.
    pub fn passes(&self) -> bool {
        self.residues.iter().all(|r| r.vanishes)
    }
}

/// Numerator of `Σ_i f(L_i(x))` over the product of substituted denominators.
fn cleared_sum(f: &RatFn, substitutions: &[Vec<Poly>]) -> Poly {
    let den = canonical_denominator(f.depth);
    let nums: Vec<Poly> = substitutions
        .iter()
        .map(|s| f.numerator.substitute(s))
        .collect();
    let dens: Vec<Poly> = substitutions.iter().map(|s| den.substitute(s)).collect();
    let n = f.depth;
    let mut total = Poly::zero(n);
    for (i, num) in nums.iter().enumerate() {
        let mut term = num.clone();
        for (j, d) in dens.iter().enumerate() {
            if j != i {
                term = term.mul(d);
            }
        }
        total = total.add(&term);
    }
    total
}

/// Evaluates the depth-2 or depth-3 linearized double shuffle equations exactly.
pub fn check_lds(f: &RatFn) -> Result<LdsReport> {
    let r = f.depth;
    let lin = |c: &[i64]| Poly::linear(c);
    let equations: Vec<(&str, Vec<Vec<Poly>>)> = match r {
        2 => vec![
            (
                "f(x1,x2) + f(x2,x1)",
                vec![
                    vec![lin(&[1, 0]), lin(&[0, 1])],
                    vec![lin(&[0, 1]), lin(&[1, 0])],
                ],
            ),
            (
                "f(x1,x12) + f(x2,x12)",
                vec![
                    vec![lin(&[1, 0]), lin(&[1, 1])],
                    vec![lin(&[0, 1]), lin(&[1, 1])],
                ],
            ),
        ],
        3 => vec![
            (
                "f(x1,x2,x3) + f(x2,x1,x3) + f(x2,x3,x1)",
                vec![
                    vec![lin(&[1, 0, 0]), lin(&[0, 1, 0]), lin(&[0, 0, 1])],
                    vec![lin(&[0, 1, 0]), lin(&[1, 0, 0]), lin(&[0, 0, 1])],
                    vec![lin(&[0, 1, 0]), lin(&[0, 0, 1]), lin(&[1, 0, 0])],
                ],
            ),
            (
                "f(x1,x12,x123) + f(x2,x12,x123) + f(x2,x23,x123)",
                vec![
                    vec![lin(&[1, 0, 0]), lin(&[1, 1, 0]), lin(&[1, 1, 1])],
                    vec![lin(&[0, 1, 0]), lin(&[1, 1, 0]), lin(&[1, 1, 1])],
                    vec![lin(&[0, 1, 0]), lin(&[0, 1, 1]), lin(&[1, 1, 1])],
                ],
            ),
        ],
        _ => {
            return Err(Error::InvalidArgument(format!(
                "double shuffle equations implemented for depth 2 and 3, not {r}"
            )))
        }
    };
    let residues = equations
        .into_iter()
        .map(|(name, subs)| {
            let p = cleared_sum(f, &subs);
            Residue {
                equation: name.to_string(),
                vanishes: p.is_zero(),
                residue: p.to_string(),
            }
        })
        .collect();
    Ok(LdsReport { depth: r, residues })
}

/// `ρ` of the `b`-degree-2 slice of `ev_a([ε^∨_i, ε^∨_j])`.
pub fn rho_of_bracket(i: u32, j: u32, convention: RhoConvention) -> Result<RatFn> {
    use crate::freelie::{epsilon, Variant};
    let d = epsilon(i, Variant::Dual)?.bracket(&epsilon(j, Variant::Dual)?);
    rho_with(d.on_a(), 2, convention)
}

/// The function `f` itself given as a polynomial, i.e. numerator `f · denominator`.
pub fn from_polynomial(f: &Poly) -> Result<RatFn> {
    RatFn::new(f.mul(&canonical_denominator(f.nvars())))
}

/// `1` as a depth-`r` numerator, convenient for building test functions.
pub fn unit_numerator(r: usize) -> Poly {
    Poly::constant(r, Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int;

    #[test]
    fn rho_examples() {
        let b = LieElement::b();
        let a = LieElement::a();
        // b a b appears in [b,[a,b]] with coefficient 2.
        let x = b.bracket(&a.bracket(&b));
        let f = rho(&x, 2).unwrap();
        assert_eq!(f.numerator().coeff(&[1, 0]), int(2));
        assert!(rho(&LieElement::zero(), 2).unwrap().is_zero());
        assert!(rho(&a, 0).is_err());
        let ab = rho(&a.bracket(&b), 1).unwrap();
        assert_eq!(ab.numerator(), &unit_numerator(1).sub(&Poly::var(1, 0)));
    }

    #[test]
    fn lds_examples() {
        let anti = from_polynomial(&Poly::linear(&[1, -1])).unwrap();
        assert!(check_lds(&anti).unwrap().residues[0].vanishes);
        // x₁ − x₂ as a numerator over the antisymmetric denominator is symmetric.
        let sym = RatFn::new(Poly::linear(&[1, -1])).unwrap();
        assert!(!check_lds(&sym).unwrap().residues[0].vanishes);
        let bad = RatFn::new(Poly::var(2, 0)).unwrap();
        assert!(!check_lds(&bad).unwrap().residues[0].vanishes);
        assert!(check_lds(&RatFn::new(Poly::var(1, 0)).unwrap()).is_err());
    }

    #[test]
    fn bracket_images() {
        let verbatim = check_lds(&rho_of_bracket(4, 6, RhoConvention::Verbatim).unwrap()).unwrap();
        assert!(verbatim.residues[0].vanishes);
        assert!(!verbatim.residues[1].vanishes);
        let leading = check_lds(&rho_of_bracket(4, 6, RhoConvention::LeadingB).unwrap()).unwrap();
        assert!(leading.passes());
    }
}
