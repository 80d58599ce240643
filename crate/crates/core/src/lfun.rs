//! Completed L-functions of class-ℳ expansions: Dirichlet streams, numeric `Λ`, the exact
//! `∂/∂̄` identity, the tridiagonal determinant and the `ξ` comparison.

use crate::error::{Error, Result};
use crate::exact_arith::{gamma, int, rational_to_f64, sv_eval, zeta, zeta_real, Rational, SvGen};
use crate::poly::Poly;
use crate::qseries::BiSeries;
use crate::raeis::mode_profile;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Precision passed to `sv_eval` for coefficients.
const SV_DIGITS: u32 = 15;

/// Dirichlet coefficient streams `c^{(k)}(ℓ) = Σ_{m+n=ℓ} a^{(k)}_{m,n}` for `1 ≤ ℓ ≤ terms`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LSeriesData {
    weights: (i32, i32),
    terms: usize,
    streams: BTreeMap<i32, Vec<f64>>,
}

/// `σ_p(ℓ)` for `0 ≤ ℓ ≤ n` as floats (index 0 unused).
fn sigma_table(p: u32, n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n + 1];
    for d in 1..=n {
        let dp = (d as f64).powi(p as i32);
        for m in (d..=n).step_by(d) {
            out[m] += dp;
        }
    }
    out
}

impl LSeriesData {
    /// Streams of a truncated expansion; the constant part is excluded.
    pub fn from_bi(f: &BiSeries) -> Result<Self> {
        let terms = f.trunc() as usize;
        let mut streams: BTreeMap<i32, Vec<f64>> = BTreeMap::new();
        for ((k, m, n), c) in f.terms() {
            let ell = (m + n) as usize;
            if ell == 0 || ell > terms {
                continue;
            }
            let v = sv_eval(c, SV_DIGITS)?;
            streams.entry(*k).or_insert_with(|| vec![0.0; terms + 1])[ell] += v;
        }
        Ok(Self {
            weights: f.weights(),
            terms,
            streams,
        })
    }

    /// Streams of `𝓔_{r,s}` from the mode profile, to any length.
    pub fn eisenstein(r: u32, s: u32, terms: usize) -> Result<Self> {
        let w = r + s;
        let profile = mode_profile(w)?;
        let beta = |r: u32, s: u32| profile.get(&(r, s)).cloned().unwrap_or_default();
        let (hol, antihol) = (beta(r, s), beta(s, r));
        let sig = sigma_table(w + 1, terms);
        let mut streams = BTreeMap::new();
        let ks: std::collections::BTreeSet<i32> =
            hol.keys().chain(antihol.keys()).copied().collect();
        for k in ks {
            let b = hol.get(&k).cloned().unwrap_or_else(Rational::zero)
                + antihol.get(&k).cloned().unwrap_or_else(Rational::zero);
            if b.is_zero() {
                continue;
            }
            let b = rational_to_f64(&b);
            let stream: Vec<f64> = (0..=terms)
                .map(|l| {
                    if l == 0 {
                        0.0
                    } else {
                        sig[l] * (2.0 * l as f64).powi(k - 1) * b
                    }
                })
                .collect();
            streams.insert(k, stream);
        }
        Ok(Self {
            weights: (r as i32, s as i32),
            terms,
            streams,
        })
    }

    /// Streams of the holomorphic `G_k` at weights `(k, 0)`: `c^{(0)}(ℓ) = σ_{k−1}(ℓ)`.
    pub fn holomorphic_eisenstein(k: u32, terms: usize) -> Result<Self> {
        if k % 2 == 1 {
            return Err(Error::OddWeight(k as i64));
        }
        if k < 4 {
            return Err(Error::InvalidArgument(format!("weight {k} < 4")));
        }
        let mut streams = BTreeMap::new();
        streams.insert(0, sigma_table(k - 1, terms));
        Ok(Self {
            weights: (k as i32, 0),
            terms,
            streams,
        })
    }

    /// Modular weights.
    pub fn weights(&self) -> (i32, i32) {
        self.weights
    }

    /// Cutoff `ℓ ≤ terms`.
    pub fn terms(&self) -> usize {
        self.terms
    }

    /// `c^{(k)}(ℓ)`.
    pub fn coeff(&self, k: i32, ell: usize) -> f64 {
        self.streams
            .get(&k)
            .and_then(|s| s.get(ell))
            .copied()
            .unwrap_or(0.0)
    }

    /// `𝕃`-powers with a non-zero stream.
    pub fn ell_powers(&self) -> impl Iterator<Item = i32> + '_ {
        self.streams.keys().copied()
    }
}

/// Numeric value of `Λ` with an upper bound on the truncation error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambdaValue {
    /// Real part.
    pub re: f64,
    /// Imaginary part.
    pub im: f64,
    /// Bound on the omitted Dirichlet tail.
    pub tail_bound: f64,
}

impl LambdaValue {
    /// The value as a complex number.
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Compensated sum of a stream of complex terms.
fn kahan_sum(terms: impl Iterator<Item = Complex64>) -> Complex64 {
    let mut sum = Complex64::zero();
    let mut comp = Complex64::zero();
    for t in terms {
        let y = t - comp;
        let next = sum + y;
        comp = (next - sum) - y;
        sum = next;
    }
    sum
}

/// `Λ(f;s) = Σ_k (−1)^k (2π)^{−s} Γ(s+k) Σ_{ℓ ≤ terms} c^{(k)}(ℓ) ℓ^{−(s+k)}`.
///
/// Requires `Re(s) ≥ α + β + 3`. The tail bound assumes `|c^{(k)}(ℓ)| ≤ C_k ℓ^{α+β+k}`, with
/// `C_k` twice the largest observed ratio.
pub fn lambda_completed(data: &LSeriesData, s: Complex64) -> Result<LambdaValue> {
    let (alpha, beta) = data.weights();
    let growth = (alpha + beta) as f64;
    if s.re < growth + 3.0 {
        return Err(Error::OutOfRegime(format!(
            "Re(s) = {} < {}",
            s.re,
            growth + 3.0
        )));
    }
    let prefactor = Complex64::new(2.0 * PI, 0.0).powc(-s);
    let per_k: Vec<(Complex64, f64)> = data
        .streams
        .par_iter()
        .map(|(&k, stream)| {
            let exponent = -(s + k as f64);
            let sum = kahan_sum(
                (1..stream.len())
                    .filter(|&l| stream[l] != 0.0)
                    .map(|l| stream[l] * Complex64::new(l as f64, 0.0).powc(exponent)),
            );
            let g = gamma(s + k as f64);
            let sign = if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            let c = (1..stream.len())
                .map(|l| stream[l].abs() / (l as f64).powf(growth + k as f64))
                .fold(0.0, f64::max)
                * 2.0;
            let t = data.terms() as f64;
            let decay = s.re - growth - 1.0;
            let tail = c * t.powf(-decay) / decay * g.norm() * prefactor.norm();
            (sign * prefactor * g * sum, tail)
        })
        .collect();
    let value = kahan_sum(per_k.iter().map(|(v, _)| *v));
    Ok(LambdaValue {
        re: value.re,
        im: value.im,
        tail_bound: per_k.iter().map(|(_, t)| t).sum(),
    })
}

/// `Λ(𝔾_{2n};s) = (2π)^{−s} Γ(s) ζ(s) ζ(s−2n+1)`.
pub fn lambda_holomorphic_reference(weight: u32, s: Complex64) -> Complex64 {
    Complex64::new(2.0 * PI, 0.0).powc(-s) * gamma(s) * zeta(s) * zeta(s - (weight as f64 - 1.0))
}

/// Completed Riemann zeta `ξ(s) = π^{−s/2} Γ(s/2) ζ(s)` for real `s > 1`.
pub fn xi(s: f64) -> f64 {
    PI.powf(-s / 2.0) * gamma(Complex64::new(s / 2.0, 0.0)).re * zeta_real(s)
}

/// Residues of `Λ(∂f) + Λ(∂̄f) + (2s−w)Λ(f)` per Dirichlet index and coefficient monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DLambdaReport {
    /// Number of `(ℓ, monomial)` symbols checked.
    pub checked: usize,
    /// Non-zero residues as `(ℓ, monomial, polynomial in s)`.
    pub residues: Vec<(u32, String, String)>,
}

impl DLambdaReport {
    /// True when every residue vanishes.
    pub fn passes(&self) -> bool {
        self.residues.is_empty()
    }
}

/// Exact check of `Λ(∂f;s) + Λ(∂̄f;s) + (2s−w)Λ(f;s) = 0` as an identity in formal `s`.
///
/// Each Dirichlet term is divided by `(2π)^{−s} Γ(s+k₀) ℓ^{−s}`, leaving
/// `(−1)^k (s+k₀)…(s+k−1) c^{(k)}(ℓ) ℓ^{−k}`, a polynomial in `s`.
pub fn verify_dlambda_identity(f: &BiSeries) -> Result<DLambdaReport> {
    let (alpha, beta) = f.weights();
    let w = (alpha + beta) as i64;
    let parts = [
        (f.raise(), Poly::constant(1, Rational::one())),
        (f.lower(), Poly::constant(1, Rational::one())),
        (
            f.clone(),
            Poly::linear(&[2]).add(&Poly::constant(1, int(-w))),
        ),
    ];
    let k0 = parts
        .iter()
        .filter_map(|(g, _)| g.min_ell_power())
        .min()
        .unwrap_or(0);
    let s = Poly::var(1, 0);
    let rising = |k: i32| -> Poly {
        (k0..k).fold(Poly::constant(1, Rational::one()), |acc, j| {
            acc.mul(&s.add(&Poly::constant(1, int(j as i64))))
        })
    };
    let mut symbols: BTreeMap<(u32, Vec<SvGen>), Poly> = BTreeMap::new();
    for (g, factor) in &parts {
        for ((k, m, n), c) in g.terms() {
            let ell = m + n;
            if ell == 0 {
                continue;
            }
            let mut scale = Rational::new(1.into(), ell.into()).pow(*k);
            if k.rem_euclid(2) == 1 {
                scale = -scale;
            }
            let base = rising(*k).mul(factor).scale(&scale);
            for (mono, r) in c.terms() {
                let e = symbols
                    .entry((ell, mono.clone()))
                    .or_insert_with(|| Poly::zero(1));
                *e = e.add(&base.scale(r));
            }
        }
    }
    let checked = symbols.len();
    let residues = symbols
        .into_iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|((ell, mono), p)| {
            let name: Vec<&str> = mono.iter().map(|g| g.name()).collect();
            (ell, name.join("*"), p.to_string())
        })
        .collect();
    Ok(DLambdaReport { checked, residues })
}

/// Determinant of the tridiagonal `M_w` (diagonal `2s−w`, superdiagonal `1,…,w`,
/// subdiagonal `w,…,1`) as a polynomial in `s`.
pub fn det_mw(w: u32) -> Result<Poly> {
    if w % 2 == 1 {
        return Err(Error::OddWeight(w as i64));
    }
    let diag = Poly::linear(&[2]).add(&Poly::constant(1, int(-(w as i64))));
    let mut prev = Poly::constant(1, Rational::one());
    let mut cur = diag.clone();
    for i in 1..=w as i64 {
        // M[i-1][i] = i, M[i][i-1] = w - i + 1.
        let off = int(i * (w as i64 - i + 1));
        let next = diag.mul(&cur).sub(&prev.scale(&off));
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `2^{w+1} s(s−1)…(s−w)`.
pub fn det_mw_product(w: u32) -> Poly {
    let s = Poly::var(1, 0);
    (0..=w as i64).fold(
        Poly::constant(
            1,
            Rational::from_integer(num_bigint::BigInt::from(2).pow(w + 1)),
        ),
        |acc, j| acc.mul(&s.add(&Poly::constant(1, int(-j)))),
    )
}

/// Comparison of a numeric value with a closed-form reference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericCheck {
    /// Computed value.
    pub value: f64,
    /// Closed-form reference.
    pub reference: f64,
    /// `|value − reference| / |reference|`.
    pub discrepancy: f64,
    /// Truncation error bound of `value`, when it comes from a Dirichlet sum.
    pub tail_bound: f64,
}

impl NumericCheck {
    fn new(value: f64, reference: f64, tail_bound: f64) -> Self {
        Self {
            value,
            reference,
            discrepancy: (value - reference).abs() / reference.abs(),
            tail_bound,
        }
    }
}

/// `Λ(𝓔_{r,s}; s₀)` summed to `terms` against the printed closed forms for total weight 2:
/// `Λ(𝓔_{2,0}) = (s−1)π/(s(s−2)) Λ(𝔾₄;s+1)` and `Λ(𝓔_{1,1}) = −2π/(s(s−2)) Λ(𝔾₄;s+1)`.
pub fn eisenstein_lambda_check(r: u32, s: u32, s0: f64, terms: usize) -> Result<NumericCheck> {
    if r + s != 2 {
        return Err(Error::InvalidArgument(
            "closed forms are available for total weight 2".into(),
        ));
    }
    let data = LSeriesData::eisenstein(r, s, terms)?;
    let v = lambda_completed(&data, Complex64::new(s0, 0.0))?;
    let g = lambda_holomorphic_reference(4, Complex64::new(s0 + 1.0, 0.0)).re;
    let factor = if r == 1 {
        -2.0 * PI / (s0 * (s0 - 2.0))
    } else {
        (s0 - 1.0) * PI / (s0 * (s0 - 2.0))
    };
    Ok(NumericCheck::new(v.re, factor * g, v.tail_bound))
}

/// Compares `(−4π)^k Λ(𝓔_{k,k};s)` with `((2k−1)!/(k−1)!) ξ(s+1) ξ(s−2k)` for `k = 1`.
pub fn xi_identity_check(k: u32, s: f64, terms: usize) -> Result<NumericCheck> {
    if k != 1 {
        return Err(Error::CostGuard(format!(
            "k = {k}; only k = 1 is supported"
        )));
    }
    let data = LSeriesData::eisenstein(k, k, terms)?;
    let v = lambda_completed(&data, Complex64::new(s, 0.0))?;
    let lhs = -4.0 * PI * v.re;
    let rhs = xi(s + 1.0) * xi(s - 2.0);
    Ok(NumericCheck::new(lhs, rhs, 4.0 * PI * v.tail_bound))
}

/// `(−1)^k (2π)^{−s} Γ(s+k) ℓ^{−(s+k)}`, the Mellin transform of `𝕃^k e^{−2πℓy}`.
pub fn mellin_mode_closed_form(k: i32, ell: u32, s: f64) -> f64 {
    let sign = if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    sign * (2.0 * PI).powf(-s)
        * gamma(Complex64::new(s + k as f64, 0.0)).re
        * (ell as f64).powf(-(s + k as f64))
}

/// `∫₀^∞ (−2πy)^k e^{−2πℓy} y^{s−1} dy` by the trapezoidal rule in `t = log y`.
pub fn mellin_mode_quadrature(k: i32, ell: u32, s: f64) -> f64 {
    let (lo, hi, steps) = (-40.0_f64, 6.0_f64, 20_000usize);
    let h = (hi - lo) / steps as f64;
    let sign = if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let scale = sign * (2.0 * PI).powi(k);
    let f = |t: f64| -> f64 {
        let y = t.exp();
        ((s + k as f64) * t - 2.0 * PI * ell as f64 * y).exp()
    };
    let inner: f64 = (1..steps).map(|i| f(lo + i as f64 * h)).sum();
    scale * h * (inner + 0.5 * (f(lo) + f(hi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;
    use crate::qseries::eisenstein_q;

    #[test]
    fn determinant_small_cases() {
        assert_eq!(det_mw(0).unwrap(), Poly::linear(&[2]));
        assert_eq!(det_mw(2).unwrap(), det_mw_product(2));
        assert_eq!(det_mw(2).unwrap().coeff(&[3]), int(8));
        assert!(det_mw(3).is_err());
    }

    #[test]
    fn holomorphic_lambda() {
        let data = LSeriesData::holomorphic_eisenstein(4, 20_000).unwrap();
        let v = lambda_completed(&data, Complex64::new(8.0, 0.0)).unwrap();
        let r = lambda_holomorphic_reference(4, Complex64::new(8.0, 0.0)).re;
        assert!((v.re - r).abs() / r < 1e-8);
        assert!(lambda_completed(&data, Complex64::new(6.0, 0.0)).is_err());
        let zero = LSeriesData::from_bi(&BiSeries::zero((4, 0), 8)).unwrap();
        assert_eq!(
            lambda_completed(&zero, Complex64::new(8.0, 0.0))
                .unwrap()
                .re,
            0.0
        );
    }

    #[test]
    fn dlambda_on_g4() {
        let g4 = eisenstein_q(4, 8).unwrap();
        assert!(verify_dlambda_identity(&g4).unwrap().passes());
        let one = BiSeries::monomial((0, 0), 8, 0, 0, 0, rat(1, 1).into());
        let report = verify_dlambda_identity(&one).unwrap();
        assert!(report.passes());
        assert_eq!(report.checked, 0);
    }

    #[test]
    fn mellin_modes() {
        for (k, ell) in [(0, 1), (1, 2), (-2, 1), (2, 3), (-1, 5)] {
            let a = mellin_mode_quadrature(k, ell, 8.0);
            let b = mellin_mode_closed_form(k, ell, 8.0);
            assert!((a - b).abs() / b.abs() < 1e-10, "{k} {ell}: {a} {b}");
        }
    }

    #[test]
    fn xi_consistency() {
        let direct = gamma(Complex64::new(1.0, 0.0)).re * zeta_real(2.0) / PI;
        assert!((xi(2.0) - direct).abs() < 1e-12);
    }
}
