//! Homogeneous binary forms `V_{2n}` in the Betti `(X, Y)` and de Rham `(𝖷, 𝖸)` bases, the
//! right `SL₂` action and the bilinear operators `δ^k`.

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, factorial, Coeff, Rational, SvScalar};
use serde::Serialize;
use std::collections::BTreeMap;

/// Coordinate system of a binary form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Basis {
    /// Betti coordinates `X, Y`.
    Betti,
    /// de Rham coordinates `𝖷, 𝖸`.
    DeRham,
}

/// Homogeneous polynomial of fixed degree, keyed by exponent pairs `(r, s)` of `X^r Y^s`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomPoly<C: Coeff = SvScalar> {
    degree: u32,
    basis: Basis,
    coeffs: BTreeMap<(u32, u32), C>,
}

/// A 2×2 matrix acting on binary forms by `(X, Y) ↦ (aX + bY, cX + dY)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sl2Matrix<C: Coeff = SvScalar> {
    /// Basis convention of the matrix.
    pub basis: Basis,
    /// Entries `[[a, b], [c, d]]`.
    pub entries: [[C; 2]; 2],
}

impl<C: Coeff> Sl2Matrix<C> {
    /// Matrix from integer entries.
    pub fn from_ints(basis: Basis, e: [[i64; 2]; 2]) -> Self {
        let f = |x: i64| C::from_rational(&Rational::from_integer(x.into()));
        Self {
            basis,
            entries: [[f(e[0][0]), f(e[0][1])], [f(e[1][0]), f(e[1][1])]],
        }
    }

    /// Identity.
    pub fn identity(basis: Basis) -> Self {
        Self::from_ints(basis, [[1, 0], [0, 1]])
    }

    /// `S = [[0, −1], [1, 0]]`.
    pub fn s(basis: Basis) -> Self {
        Self::from_ints(basis, [[0, -1], [1, 0]])
    }

    /// `T = [[1, 1], [0, 1]]`.
    pub fn t(basis: Basis) -> Self {
        Self::from_ints(basis, [[1, 1], [0, 1]])
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Self {
        let a = &self.entries;
        let b = &other.entries;
        let e = |i: usize, j: usize| a[i][0].times(&b[0][j]).plus(&a[i][1].times(&b[1][j]));
        Self {
            basis: self.basis,
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }
}

impl<C: Coeff> HomPoly<C> {
    /// The zero form of the given degree.
    pub fn zero(degree: u32, basis: Basis) -> Self {
        Self {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// `c · X^r Y^s`.
    pub fn monomial(r: u32, s: u32, c: C, basis: Basis) -> Self {
        let mut p = Self::zero(r + s, basis);
        p.add_term(r, s, c);
        p
    }

    /// Builds a form from `(r, s, c)` triples; every pair must have `r + s = degree`.
    pub fn from_terms(
        degree: u32,
        basis: Basis,
        terms: impl IntoIterator<Item = (u32, u32, C)>,
    ) -> Result<Self> {
        let mut p = Self::zero(degree, basis);
        for (r, s, c) in terms {
            if r + s != degree {
                return Err(Error::InvalidArgument(format!(
                    "monomial X^{r}Y^{s} in a form of degree {degree}"
                )));
            }
            p.add_term(r, s, c);
        }
        Ok(p)
    }

    /// Degree of the form.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Basis flag.
    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Coefficient of `X^r Y^s`.
    pub fn coeff(&self, r: u32, s: u32) -> C {
        self.coeffs.get(&(r, s)).cloned().unwrap_or_else(C::zero)
    }

    /// Stored `((r, s), c)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &C)> {
        self.coeffs.iter()
    }

    /// True for the zero form.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// M-degree of `𝖷^r 𝖸^s` in the de Rham basis.
    pub fn m_degree(_r: u32, s: u32) -> i64 {
        -(s as i64)
    }

    fn add_term(&mut self, r: u32, s: u32, c: C) {
        debug_assert_eq!(r + s, self.degree);
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((r, s)).or_insert_with(C::zero);
        e.accumulate(&c);
        if e.is_zero() {
            self.coeffs.remove(&(r, s));
        }
    }

    /// Sum of two forms of equal degree and basis.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::InvalidArgument("degree mismatch in sum".into()));
        }
        let mut out = if self.is_zero() {
            other.clone()
        } else {
            self.clone()
        };
        if !self.is_zero() {
            for ((r, s), c) in &other.coeffs {
                out.add_term(*r, *s, c.clone());
            }
        }
        Ok(out)
    }

    /// Multiplication by a scalar.
    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for ((r, s), v) in &self.coeffs {
            out.add_term(*r, *s, v.times(c));
        }
        out
    }

    /// Product of forms.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let mut out = Self::zero(self.degree + other.degree, self.basis);
        for ((r1, s1), c1) in &self.coeffs {
            for ((r2, s2), c2) in &other.coeffs {
                out.add_term(r1 + r2, s1 + s2, c1.times(c2));
            }
        }
        Ok(out)
    }

    /// `∂^i/∂X^i ∂^j/∂Y^j`; degree drops by `i + j` (saturating at zero forms).
    pub fn derivative(&self, i: u32, j: u32) -> Self {
        let degree = self.degree.saturating_sub(i + j);
        let mut out = Self::zero(degree, self.basis);
        for ((r, s), c) in &self.coeffs {
            if *r < i || *s < j {
                continue;
            }
            let f = Rational::from_integer(
                factorial(*r as u64) / factorial((r - i) as u64) * factorial(*s as u64)
                    / factorial((s - j) as u64),
            );
            out.add_term(r - i, s - j, c.scale(&f));
        }
        out
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(format!(
                "{:?} vs {:?}",
                self.basis, other.basis
            )));
        }
        Ok(())
    }

    /// Reinterprets the form in another basis without changing coefficients.
    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }
}

/// Right action `p|_g`: substitute `X ↦ aX + bY`, `Y ↦ cX + dY`.
pub fn sl2_act<C: Coeff>(p: &HomPoly<C>, g: &Sl2Matrix<C>) -> Result<HomPoly<C>> {
    if p.basis != g.basis {
        return Err(Error::BasisMismatch(format!(
            "form in {:?}, matrix in {:?}",
            p.basis, g.basis
        )));
    }
    let [[a, b], [c, d]] = &g.entries;
    let lx = HomPoly::from_terms(1, p.basis, [(1, 0, a.clone()), (0, 1, b.clone())])?;
    let ly = HomPoly::from_terms(1, p.basis, [(1, 0, c.clone()), (0, 1, d.clone())])?;
    let pow = |l: &HomPoly<C>, e: u32| -> Result<HomPoly<C>> {
        let mut acc = HomPoly::monomial(0, 0, C::one(), p.basis);
        for _ in 0..e {
            acc = acc.mul(l)?;
        }
        Ok(acc)
    };
    let mut out = HomPoly::zero(p.degree, p.basis);
    for ((r, s), coef) in &p.coeffs {
        let term = pow(&lx, *r)?.mul(&pow(&ly, *s)?)?.scale(coef);
        out = out.add(&term)?;
    }
    Ok(out)
}

/// `μ ∘ (∂_X ⊗ ∂_Y − ∂_Y ⊗ ∂_X)^k (p ⊗ q)`.
pub fn delta_k<C: Coeff>(p: &HomPoly<C>, q: &HomPoly<C>, k: u32) -> Result<HomPoly<C>> {
    p.check_basis(q)?;
    let degree = (p.degree + q.degree).saturating_sub(2 * k);
    if k > p.degree || k > q.degree {
        return Ok(HomPoly::zero(degree, p.basis));
    }
    let mut out = HomPoly::zero(degree, p.basis);
    for j in 0..=k {
        // (A − B)^k = Σ_j C(k, j) (−1)^j A^{k−j} B^j with A = ∂X⊗∂Y, B = ∂Y⊗∂X.
        let mut c = Rational::from_integer(binomial(k as u64, j as u64));
        if j % 2 == 1 {
            c = -c;
        }
        let left = p.derivative(k - j, j);
        let right = q.derivative(j, k - j);
        let term = left.mul(&right)?.scale(&C::from_rational(&c));
        out = out.add(&term)?;
    }
    Ok(out)
}

/// A Betti form whose monomials carry explicit powers of `2πi`:
/// terms `c · X^r Y^s · (2πi)^e` keyed by `(r, s, e)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BettiImage<C: Coeff = SvScalar> {
    terms: BTreeMap<(u32, u32, i32), C>,
}

impl<C: Coeff> BettiImage<C> {
    /// The comparison map `(𝖷, 𝖸) ↦ (X, (2πi)^{−1} Y)` applied to a de Rham form.
    pub fn from_de_rham(p: &HomPoly<C>) -> Result<Self> {
        if p.basis != Basis::DeRham {
            return Err(Error::BasisMismatch(
                "comparison expects a de Rham form".into(),
            ));
        }
        Ok(Self {
            terms: p
                .coeffs
                .iter()
                .map(|((r, s), c)| ((*r, *s, -(*s as i32)), c.clone()))
                .collect(),
        })
    }

    /// Multiplication by `(2πi)^e`.
    pub fn shift(&self, e: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((r, s, x), c)| ((*r, *s, x + e), c.clone()))
                .collect(),
        }
    }

    /// `δ^k` in Betti coordinates, with `2πi` exponents adding.
    pub fn delta_k(&self, other: &Self, k: u32) -> Result<Self> {
        let mut acc: BTreeMap<(u32, u32, i32), C> = BTreeMap::new();
        for ((r1, s1, e1), c1) in &self.terms {
            for ((r2, s2, e2), c2) in &other.terms {
                let p = HomPoly::monomial(*r1, *s1, c1.clone(), Basis::Betti);
                let q = HomPoly::monomial(*r2, *s2, c2.clone(), Basis::Betti);
                for ((r, s), c) in delta_k(&p, &q, k)?.coeffs {
                    let e = acc.entry((r, s, e1 + e2)).or_insert_with(C::zero);
                    e.accumulate(&c);
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { terms: acc })
    }
}

/// Convenience constructor for rational-coefficient forms in tests and examples.
pub fn form<C: Coeff>(basis: Basis, terms: &[(u32, u32, i64)]) -> HomPoly<C> {
    let degree = terms.first().map(|(r, s, _)| r + s).unwrap_or(0);
    HomPoly::from_terms(
        degree,
        basis,
        terms.iter().map(|(r, s, c)| {
            (
                *r,
                *s,
                C::from_rational(&Rational::from_integer((*c).into())),
            )
        }),
    )
    .expect("homogeneous terms")
}

/// `(X − zY)^n` for a coefficient `z`.
pub fn linear_power<C: Coeff>(z: &C, n: u32, basis: Basis) -> HomPoly<C> {
    let mut out = HomPoly::zero(n, basis);
    let mut zpow = C::one();
    for s in 0..=n {
        let mut c = Rational::from_integer(binomial(n as u64, s as u64));
        if s % 2 == 1 {
            c = -c;
        }
        out.add_term(n - s, s, zpow.scale(&c));
        zpow = zpow.times(z);
    }
    out
}

impl<C: Coeff> HomPoly<C> {
    /// Evaluates every coefficient through `f`, keeping the basis.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> HomPoly<D> {
        let mut out = HomPoly::zero(self.degree, self.basis);
        for ((r, s), c) in &self.coeffs {
            out.add_term(*r, *s, f(c));
        }
        out
    }
}

impl<C: Coeff> Sl2Matrix<C> {
    /// `ST`.
    pub fn st(basis: Basis) -> Self {
        Self::s(basis).mul(&Self::t(basis))
    }
}

impl HomPoly<Rational> {
    /// Lifts rational coefficients to the single-valued ring.
    pub fn to_sv(&self) -> HomPoly<SvScalar> {
        self.map_coeffs(|c| SvScalar::from(c.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int;

    type P = HomPoly<Rational>;

    fn b(terms: &[(u32, u32, i64)]) -> P {
        form(Basis::Betti, terms)
    }

    #[test]
    fn action_examples() {
        let x2 = b(&[(2, 0, 1)]);
        assert_eq!(
            sl2_act(&x2, &Sl2Matrix::s(Basis::Betti)).unwrap(),
            b(&[(0, 2, 1)])
        );
        let xy = b(&[(1, 1, 1)]);
        assert_eq!(
            sl2_act(&xy, &Sl2Matrix::identity(Basis::Betti)).unwrap(),
            xy
        );
        assert_eq!(
            sl2_act(&x2, &Sl2Matrix::t(Basis::Betti)).unwrap(),
            b(&[(2, 0, 1), (1, 1, 2), (0, 2, 1)])
        );
        assert!(sl2_act(&x2, &Sl2Matrix::t(Basis::DeRham)).is_err());
    }

    #[test]
    fn delta_examples() {
        let x2 = b(&[(2, 0, 1)]);
        let y2 = b(&[(0, 2, 1)]);
        assert_eq!(delta_k(&x2, &y2, 1).unwrap(), b(&[(1, 1, 4)]));
        assert_eq!(delta_k(&x2, &y2, 0).unwrap(), x2.mul(&y2).unwrap());
        assert!(delta_k(&x2, &x2, 1).unwrap().is_zero());
        assert!(delta_k(&x2, &y2, 3).unwrap().is_zero());
    }

    #[test]
    fn comparison_tracks_two_pi_i() {
        let p: P = form(Basis::DeRham, &[(2, 1, 3), (0, 3, -1)]);
        let q: P = form(Basis::DeRham, &[(1, 1, 2), (2, 0, 5)]);
        for k in 0..=2 {
            let lhs = BettiImage::from_de_rham(&delta_k(&p, &q, k).unwrap()).unwrap();
            let rhs = BettiImage::from_de_rham(&p)
                .unwrap()
                .delta_k(&BettiImage::from_de_rham(&q).unwrap(), k)
                .unwrap()
                .shift(k as i32);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn linear_power_expands() {
        let p = linear_power(&int(2), 2, Basis::Betti);
        assert_eq!(p, b(&[(2, 0, 1), (1, 1, -4), (0, 2, 4)]));
    }
}
