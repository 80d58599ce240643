//! The real-analytic Eisenstein family `𝓔_{r,s}`, built mode by mode from its differential
//! system and constant part, and the change of basis between `𝖷^r𝖸^s` and
//! `(𝖷 − log q 𝖸)^r (𝖷 + log q̄ 𝖸)^s`.

use crate::error::{Error, Result};
use crate::exact_arith::{bernoulli, binomial, factorial, int, sigma, Coeff, Rational, SvScalar};
use crate::linalg::{Echelon, SparseRow};
use crate::qseries::{BiSeries, ExtendedSeries};
use crate::sl2rep::{sl2_act, Basis, HomPoly, Sl2Matrix};
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Family of modular components `f_{r,s}` with `r + s = w`.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorModularForm {
    total_weight: u32,
    components: BTreeMap<(u32, u32), BiSeries>,
}

impl VectorModularForm {
    /// Validates that there are `w + 1` components with matching weights.
    pub fn new(total_weight: u32, components: BTreeMap<(u32, u32), BiSeries>) -> Result<Self> {
        if components.len() != total_weight as usize + 1 {
            return Err(Error::InvalidArgument(format!(
                "{} components for total weight {total_weight}",
                components.len()
            )));
        }
        for ((r, s), f) in &components {
            if r + s != total_weight || f.weights() != (*r as i32, *s as i32) {
                return Err(Error::InvalidArgument(format!(
                    "component ({r},{s}) has weights {:?}",
                    f.weights()
                )));
            }
        }
        Ok(Self {
            total_weight,
            components,
        })
    }

    /// Total weight `w`.
    pub fn total_weight(&self) -> u32 {
        self.total_weight
    }

    /// Component of weights `(r, s)`.
    pub fn component(&self, r: u32, s: u32) -> Option<&BiSeries> {
        self.components.get(&(r, s))
    }

    /// All components keyed by `(r, s)`.
    pub fn components(&self) -> &BTreeMap<(u32, u32), BiSeries> {
        &self.components
    }

    /// Smallest truncation among the components.
    pub fn trunc(&self) -> u32 {
        self.components
            .values()
            .map(BiSeries::trunc)
            .min()
            .unwrap_or(0)
    }

    /// Multiplies every component by a scalar.
    pub fn scale(&self, c: &SvScalar) -> Self {
        Self {
            total_weight: self.total_weight,
            components: self
                .components
                .iter()
                .map(|(k, f)| (*k, f.scale(c)))
                .collect(),
        }
    }
}

fn check_weight(w: u32) -> Result<()> {
    if w % 2 == 1 {
        return Err(Error::OddWeight(w as i64));
    }
    if w < 2 {
        return Err(Error::InvalidArgument(format!("weight {w} < 2")));
    }
    Ok(())
}

/// Constant part of `𝓔_{r,s}` as a Laurent polynomial in `𝕃`:
/// `−B_{w+2}/(2(w+1)(w+2)) 𝕃 + (−1)^s w! C(w,r) ζˢᵛ(w+1)/2^{w+2} 𝕃^{−w}`.
pub fn constant_part(r: u32, s: u32) -> Result<BTreeMap<i32, SvScalar>> {
    let w = r + s;
    check_weight(w)?;
    let w64 = w as i64;
    let lin = -bernoulli(w as usize + 2) / int(2 * (w64 + 1) * (w64 + 2));
    let mut pole = Rational::from_integer(factorial(w as u64) * binomial(w as u64, r as u64))
        / Rational::from_integer(num_bigint::BigInt::from(2u32).pow(w + 2));
    if s % 2 == 1 {
        pole = -pole;
    }
    let mut out = BTreeMap::new();
    out.insert(1, SvScalar::from(lin));
    out.insert(-(w as i32), SvScalar::zeta_sv(w + 1)?.scale(&pole));
    Ok(out)
}

/// Lowest and highest `𝕃`-powers carried by the unknowns of a non-constant mode.
fn k_range(w: u32) -> (i32, i32) {
    (-(w as i32) - 2, 2)
}

/// Solution of one Fourier mode: `(r, s) → (k → a^{(k)})`.
pub type ModeSolution = BTreeMap<(u32, u32), BTreeMap<i32, Rational>>;

/// Solves the differential system for one non-constant Fourier mode.
///
/// `two_m` and `two_n` stand for `2m` and `2n`; `hol` and `antihol` are the `q^m q̄^n`
/// coefficients of `G_{w+2}` and `Ḡ_{w+2}`. Fails with [`Error::InconsistentSystem`] unless
/// the solution is unique.
pub fn solve_mode(
    w: u32,
    two_m: &Rational,
    two_n: &Rational,
    hol: &Rational,
    antihol: &Rational,
) -> Result<ModeSolution> {
    check_weight(w)?;
    let (kmin, kmax) = k_range(w);
    let width = (kmax - kmin + 1) as usize;
    let var = |r: u32, k: i32| -> usize { r as usize * width + (k - kmin) as usize };
    let ncols = (w as usize + 1) * width;
    let mut ech = Echelon::<Rational>::new();
    for k in kmin..=kmax + 1 {
        for r in 0..=w {
            let s = w - r;
            let k_ok = |k: i32| (kmin..=kmax).contains(&k);
            // ∂ equations.
            let mut row = SparseRow::new();
            if k_ok(k) {
                row.insert(var(r, k), int((k + r as i32) as i64));
            }
            if k_ok(k - 1) && !two_m.is_zero() {
                row.insert(var(r, k - 1), two_m.clone());
            }
            let rhs = if s == 0 {
                if k == 1 {
                    hol.clone()
                } else {
                    Rational::zero()
                }
            } else {
                if k_ok(k) {
                    let e = row.entry(var(r + 1, k)).or_insert_with(Rational::zero);
                    *e -= int(r as i64 + 1);
                }
                Rational::zero()
            };
            ech.insert(row, rhs);
            // ∂̄ equations.
            let mut row = SparseRow::new();
            if k_ok(k) {
                row.insert(var(r, k), int((k + s as i32) as i64));
            }
            if k_ok(k - 1) && !two_n.is_zero() {
                row.insert(var(r, k - 1), two_n.clone());
            }
            let rhs = if r == 0 {
                if k == 1 {
                    antihol.clone()
                } else {
                    Rational::zero()
                }
            } else {
                if k_ok(k) {
                    let e = row.entry(var(r - 1, k)).or_insert_with(Rational::zero);
                    *e -= int(s as i64 + 1);
                }
                Rational::zero()
            };
            ech.insert(row, rhs);
        }
    }
    let x = ech.unique_solution(ncols)?;
    let mut out = ModeSolution::new();
    for r in 0..=w {
        let band: BTreeMap<i32, Rational> = (kmin..=kmax)
            .filter_map(|k| {
                let v = &x[var(r, k)];
                (!v.is_zero()).then(|| (k, v.clone()))
            })
            .collect();
        out.insert((r, w - r), band);
    }
    Ok(out)
}

/// Mode profile `β^{(k)}_{r,s}` with `a^{(k)}_{r,s}(m, 0) = σ_{w+1}(m) (2m)^{k−1} β^{(k)}_{r,s}`.
///
/// The `(0, n)` modes follow by exchanging `r` and `s`.
pub fn mode_profile(w: u32) -> Result<ModeSolution> {
    solve_mode(
        w,
        &Rational::one(),
        &Rational::zero(),
        &Rational::one(),
        &Rational::zero(),
    )
}

/// Builds `𝓔_{r,s}` for `r + s = w` to q-order `trunc`.
pub fn build_real_eisenstein(w: u32, trunc: u32) -> Result<VectorModularForm> {
    check_weight(w)?;
    let modes: Vec<(u32, u32)> = (0..=trunc)
        .flat_map(|m| (0..=trunc).map(move |n| (m, n)))
        .filter(|mn| *mn != (0, 0))
        .collect();
    let solved: Vec<((u32, u32), ModeSolution)> = modes
        .par_iter()
        .map(|&(m, n)| {
            let hol = if n == 0 {
                Rational::from_integer(sigma(w + 1, m as u64))
            } else {
                Rational::zero()
            };
            let antihol = if m == 0 {
                Rational::from_integer(sigma(w + 1, n as u64))
            } else {
                Rational::zero()
            };
            solve_mode(w, &int(2 * m as i64), &int(2 * n as i64), &hol, &antihol)
                .map(|sol| ((m, n), sol))
        })
        .collect::<Result<_>>()?;
    let mut components = BTreeMap::new();
    for r in 0..=w {
        let s = w - r;
        let mut f = BiSeries::zero((r as i32, s as i32), trunc);
        for (k, c) in constant_part(r, s)? {
            f.add_term(k, 0, 0, c);
        }
        for ((m, n), sol) in &solved {
            for (k, c) in &sol[&(r, s)] {
                f.add_term(*k, *m, *n, SvScalar::from(c.clone()));
            }
        }
        components.insert((r, s), f);
    }
    VectorModularForm::new(w, components)
}

fn half_inverse_ell() -> ExtendedSeries {
    ExtendedSeries::ell_power(-1).scale(&Rational::new(1.into(), 2.into()))
}

/// Splits a de Rham vector `Σ f^{r,s} 𝖷^r 𝖸^s` into modular components
/// `Σ f_{r,s} (𝖷 − log q 𝖸)^r (𝖷 + log q̄ 𝖸)^s`, reducing each to a [`BiSeries`].
pub fn components_from_vector(f: &HomPoly<ExtendedSeries>) -> Result<VectorModularForm> {
    let raw = split_components(f)?;
    let w = f.degree();
    let mut components = BTreeMap::new();
    for r in 0..=w {
        let s = w - r;
        components.insert((r, s), raw.coeff(r, s).reduce_to_l((r as i32, s as i32))?);
    }
    VectorModularForm::new(w, components)
}

/// Coefficients in the `(𝖷 − log q 𝖸, 𝖷 + log q̄ 𝖸)` basis before log-reduction.
pub fn split_components(f: &HomPoly<ExtendedSeries>) -> Result<HomPoly<ExtendedSeries>> {
    let h = half_inverse_ell();
    let g = Sl2Matrix {
        basis: f.basis(),
        entries: [
            [
                ExtendedSeries::log_qbar().times(&h),
                ExtendedSeries::log_q().times(&h),
            ],
            [h.negate(), h.clone()],
        ],
    };
    sl2_act(f, &g)
}

/// Inverse of [`components_from_vector`].
pub fn vector_from_components(v: &VectorModularForm) -> Result<HomPoly<ExtendedSeries>> {
    let w = v.total_weight();
    let in_basis = HomPoly::from_terms(
        w,
        Basis::DeRham,
        v.components()
            .iter()
            .map(|((r, s), f)| (*r, *s, ExtendedSeries::from_bi(f))),
    )?;
    let g = Sl2Matrix {
        basis: Basis::DeRham,
        entries: [
            [ExtendedSeries::one(), ExtendedSeries::log_q().negate()],
            [ExtendedSeries::one(), ExtendedSeries::log_qbar()],
        ],
    };
    sl2_act(&in_basis, &g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    #[test]
    fn constant_part_examples() {
        let c20 = constant_part(2, 0).unwrap();
        assert_eq!(c20[&1], SvScalar::from(rat(1, 720)));
        assert_eq!(c20[&-2], SvScalar::zeta_sv(3).unwrap().scale(&rat(1, 8)));
        let c11 = constant_part(1, 1).unwrap();
        assert_eq!(c11[&1], SvScalar::from(rat(1, 720)));
        assert_eq!(c11[&-2], SvScalar::zeta_sv(3).unwrap().scale(&rat(-1, 4)));
        assert!(matches!(constant_part(2, 1), Err(Error::OddWeight(3))));
    }

    #[test]
    fn system_and_eigenvalue_at_weight_two() {
        let e = build_real_eisenstein(2, 4).unwrap();
        let g = crate::qseries::eisenstein_q(4, 4).unwrap();
        let top = e.component(2, 0).unwrap().raise();
        assert_eq!(top, g.mul_ell_power(1));
        for ((r, s), f) in e.components() {
            let lap = f.laplacian();
            assert_eq!(lap, f.scale(&SvScalar::from(int(-2))), "Δ on ({r},{s})");
        }
    }

    #[test]
    fn mixed_modes_vanish() {
        let e = build_real_eisenstein(4, 3).unwrap();
        for f in e.components().values() {
            assert!(f.terms().all(|((_, m, n), _)| *m == 0 || *n == 0));
        }
    }

    #[test]
    fn profile_reproduces_modes() {
        let w = 4;
        let e = build_real_eisenstein(w, 5).unwrap();
        let prof = mode_profile(w).unwrap();
        for ((r, s), band) in &prof {
            for (k, beta) in band {
                for m in 1..=5u32 {
                    let sig = Rational::from_integer(sigma(w + 1, m as u64));
                    let expected = sig
                        * beta
                        * Rational::from_integer(num_bigint::BigInt::from(2 * m)).pow(k - 1);
                    let f = e.component(*r, *s).unwrap();
                    assert_eq!(f.coeff(*k, m, 0), SvScalar::from(expected.clone()));
                    assert_eq!(
                        e.component(*s, *r).unwrap().coeff(*k, 0, m),
                        SvScalar::from(expected)
                    );
                }
            }
        }
    }

    #[test]
    fn basis_change_round_trip() {
        let e = build_real_eisenstein(2, 3).unwrap();
        let v = vector_from_components(&e).unwrap();
        let back = components_from_vector(&v).unwrap();
        assert_eq!(back, e);
        let one = HomPoly::monomial(0, 0, ExtendedSeries::one(), Basis::DeRham);
        let c = components_from_vector(&one).unwrap();
        assert_eq!(c.component(0, 0).unwrap().coeff(0, 0, 0), SvScalar::one());
    }
}
