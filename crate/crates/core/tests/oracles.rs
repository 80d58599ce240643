//! Values frozen from independent high-precision evaluations (mpmath, sympy).

#![allow(clippy::excessive_precision)]

use eisenworks::exact_arith::{rat, sigma};
use eisenworks::lfun::{
    det_mw, lambda_completed, mellin_mode_closed_form, mellin_mode_quadrature, xi,
};
use eisenworks::{bernoulli, HolLogSeries, LSeriesData};
use num_bigint::BigInt;
use num_complex::Complex64;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn bernoulli_numbers() {
    let cases = [
        (2, rat(1, 6)),
        (4, rat(-1, 30)),
        (12, rat(-691, 2730)),
        (20, rat(-174611, 330)),
        (30, rat(8615841276005, 14322)),
    ];
    for (n, b) in cases {
        assert_eq!(bernoulli(n), b, "B_{n}");
    }
}

#[test]
fn divisor_sums() {
    let sigma3: Vec<BigInt> = (1..=8).map(|n| sigma(3, n)).collect();
    let expected: Vec<BigInt> = [1, 9, 28, 73, 126, 252, 344, 585]
        .map(BigInt::from)
        .to_vec();
    assert_eq!(sigma3, expected);
    assert_eq!(sigma(5, 360), BigInt::from(6269460976350i64));
}

#[test]
fn holomorphic_eisenstein_coefficients() {
    let g4 = HolLogSeries::<eisenworks::Rational>::eisenstein(4, 4).unwrap();
    assert_eq!(g4.coeff(0, 0), rat(1, 240));
    assert_eq!(g4.coeff(3, 0), rat(28, 1));
    let g12 = HolLogSeries::<eisenworks::Rational>::eisenstein(12, 1).unwrap();
    assert_eq!(g12.coeff(0, 0), rat(691, 65520));
}

#[test]
fn determinant_polynomials() {
    let cases: [(u32, Vec<i64>); 2] = [
        (4, vec![32, -320, 1120, -1600, 768, 0]),
        (
            6,
            vec![128, -2688, 22400, -94080, 207872, -225792, 92160, 0],
        ),
    ];
    for (w, descending) in cases {
        let p = det_mw(w).unwrap();
        let deg = descending.len() as u32 - 1;
        for (i, c) in descending.iter().enumerate() {
            assert_eq!(
                p.coeff(&[deg - i as u32]),
                rat(*c, 1),
                "w = {w}, s^{}",
                deg - i as u32
            );
        }
    }
}

#[test]
fn completed_holomorphic_l_values() {
    let cases = [
        (4, 9.0, 0.002693025681965439213),
        (6, 10.0, 0.00392775664827034063),
        (8, 12.0, 0.010935852851099948399),
    ];
    for (k, s, expected) in cases {
        let data = LSeriesData::holomorphic_eisenstein(k, 20_000).unwrap();
        let v = lambda_completed(&data, Complex64::new(s, 0.0)).unwrap();
        assert!(
            rel(v.re, expected) < 1e-9,
            "k = {k}: {} vs {expected}",
            v.re
        );
        assert!(v.im.abs() < 1e-15);
    }
}

#[test]
fn completed_real_analytic_l_values() {
    let cases = [
        (2, 0, 0.0012338068310153930706),
        (1, 1, -0.00035251623743296944874),
    ];
    for (r, s, expected) in cases {
        let data = LSeriesData::eisenstein(r, s, 20_000).unwrap();
        let v = lambda_completed(&data, Complex64::new(8.0, 0.0)).unwrap();
        assert!(
            rel(v.re, expected) < 1e-9,
            "({r},{s}): {} vs {expected}",
            v.re
        );
        assert!(v.tail_bound < 1e-6 * expected.abs());
    }
}

#[test]
fn completed_zeta_values() {
    assert!(rel(xi(2.0), std::f64::consts::FRAC_PI_6) < 1e-14);
    assert!(rel(xi(9.0) * xi(6.0), 0.0044298496871621283736) < 1e-14);
}

#[test]
fn mellin_transforms_of_modes() {
    let cases = [
        (-1, 1, 5.0, -0.00061270568307250977612),
        (2, 3, 4.5, 0.000058360888186551830974),
        (0, 2, 3.0, 0.001007860451037484037),
    ];
    for (k, ell, s, expected) in cases {
        assert!(rel(mellin_mode_closed_form(k, ell, s), expected) < 1e-13);
        assert!(rel(mellin_mode_quadrature(k, ell, s), expected) < 1e-9);
    }
}
