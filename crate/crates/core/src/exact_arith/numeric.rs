//! Double-precision special functions: Γ by Lanczos, ζ by Euler–Maclaurin and the
//! multiple zeta values needed by the weight-11 generator.

use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `B_{2j}/(2j)!` for `j = 1..=12`.
const EM_COEFFS: [f64; 12] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3_617.0 / 10_670_622_842_880_000.0,
    43_867.0 / 5_109_094_217_170_944_000.0,
    -174_611.0 / 802_857_662_698_291_200_000.0,
    77_683.0 / 14_101_100_039_391_805_440_000.0,
    -236_364_091.0 / 1_693_824_136_731_743_669_452_800_000.0,
];

/// Complex Γ via the Lanczos approximation (g = 7) with reflection for `Re z < 1/2`.
pub fn gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return Complex64::new(PI, 0.0) / (s * gamma(Complex64::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += *c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// `ln Γ(x)` for real `x > 0`, via the Lanczos sum.
pub fn ln_gamma_real(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma_real needs a positive argument");
    if x < 0.5 {
        return (PI / (PI * x).sin()).ln() - ln_gamma_real(1.0 - x);
    }
    let z = x - 1.0;
    let mut s = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + s.ln()
}

/// Complex `Σ_{n ≥ start} n^{-s}` by Euler–Maclaurin; requires `Re s > 1` or `s ≠ 1`
/// with analytic continuation of the tail formula.
fn tail_em(s: Complex64, start: u64) -> Complex64 {
    let n0 = start.max(1);
    let cut = n0.max(24);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in n0..cut {
        acc += Complex64::new(n as f64, 0.0).powc(-s);
    }
    let nn = Complex64::new(cut as f64, 0.0);
    acc += nn.powc(Complex64::new(1.0, 0.0) - s) / (s - 1.0);
    acc += 0.5 * nn.powc(-s);
    // Rising factorial s(s+1)...(s+2j-2) times N^{-s-2j+1}.
    let mut rising = s;
    let mut power = nn.powc(-s - 1.0);
    for (j, c) in EM_COEFFS.iter().enumerate() {
        acc += *c * rising * power;
        let k = 2.0 * j as f64;
        rising *= (s + k + 1.0) * (s + k + 2.0);
        power /= nn * nn;
    }
    acc
}

/// Complex Riemann ζ by Euler–Maclaurin (accurate to about `1e-13` for `|Im s| ≲ 20`).
pub fn zeta(s: Complex64) -> Complex64 {
    if s.re < 0.5 {
        // Functional equation ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s).
        let one = Complex64::new(1.0, 0.0);
        return Complex64::new(2.0, 0.0).powc(s)
            * Complex64::new(PI, 0.0).powc(s - 1.0)
            * (s * PI / 2.0).sin()
            * gamma(one - s)
            * zeta(one - s);
    }
    tail_em(s, 1)
}

/// Real Riemann ζ.
pub fn zeta_real(s: f64) -> f64 {
    zeta(Complex64::new(s, 0.0)).re
}

/// `Σ_{n ≥ start} n^{-s}` for real `s > 1`.
pub fn hurwitz_tail(s: f64, start: u64) -> f64 {
    tail_em(Complex64::new(s, 0.0), start).re
}

const MZV_CUTOFF: u64 = 4000;

/// Neumaier-compensated accumulator.
#[derive(Default)]
struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }
    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Double sum `Σ_{m>n≥1} m^{-a} n^{-b}` with the tail closed by
/// `ζ(b)·Σ_{m>M} m^{-a}`; the neglected remainder is of order `M^{2-a-b}`.
fn double_mzv(a: f64, b: f64) -> f64 {
    let mut inner = 0.0f64;
    let mut acc = Kahan::default();
    for m in 1..=MZV_CUTOFF {
        let mf = m as f64;
        acc.add(mf.powf(-a) * inner);
        inner += mf.powf(-b);
    }
    acc.add(zeta_real(b) * hurwitz_tail(a, MZV_CUTOFF + 1));
    acc.value()
}

/// `ζ(3,5) = Σ_{m>n≥1} m^{-3} n^{-5}`.
pub fn mzv_3_5() -> f64 {
    double_mzv(3.0, 5.0)
}

/// `ζ(5,3) = Σ_{m>n≥1} m^{-5} n^{-3}`.
pub fn mzv_5_3() -> f64 {
    double_mzv(5.0, 3.0)
}

/// `ζ(3,5,3) = Σ_{m>n>p≥1} m^{-3} n^{-5} p^{-3}`, tail closed by `ζ(5,3)·Σ_{m>M} m^{-3}`.
pub fn mzv_3_5_3() -> f64 {
    let mut h3 = 0.0f64;
    let mut z53 = Kahan::default();
    let mut acc = Kahan::default();
    for m in 1..=MZV_CUTOFF {
        let mf = m as f64;
        acc.add(mf.powi(-3) * z53.value());
        z53.add(mf.powi(-5) * h3);
        h3 += mf.powi(-3);
    }
    acc.add(mzv_5_3() * hurwitz_tail(3.0, MZV_CUTOFF + 1));
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_even_values() {
        assert!((zeta_real(2.0) - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta_real(4.0) - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((zeta_real(3.0) - 1.202_056_903_159_594_3).abs() < 1e-14);
    }

    #[test]
    fn gamma_factorials() {
        for n in 1..15u32 {
            let f: f64 = (1..n).map(f64::from).product();
            let g = gamma(Complex64::new(n as f64, 0.0)).re;
            assert!((g / f - 1.0).abs() < 1e-13, "Γ({n})");
        }
        let half = gamma(Complex64::new(0.5, 0.0)).re;
        assert!((half - PI.sqrt()).abs() < 1e-13);
        assert!((ln_gamma_real(10.0) - (362_880.0f64).ln()).abs() < 1e-12);
    }

    #[test]
    fn mzv_stuffle() {
        // ζ(3)ζ(5) = ζ(3,5) + ζ(5,3) + ζ(8).
        let lhs = zeta_real(3.0) * zeta_real(5.0);
        let rhs = mzv_3_5() + mzv_5_3() + zeta_real(8.0);
        assert!((lhs - rhs).abs() < 1e-14);
    }
}
