//! Seeded randomized property checks run by `selftest`.

use eisenworks::exact_arith::rat;
use eisenworks::lfun::verify_dlambda_identity;
use eisenworks::{BiSeries, HolLogSeries, SvGen, SvScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

const TRUNC: u32 = 4;

/// Outcome of one property over all random cases.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
}

fn scalar(rng: &mut ChaCha8Rng) -> SvScalar {
    let c = rat(rng.gen_range(-12..=12), rng.gen_range(1..=6));
    let gens: Vec<SvGen> = (0..rng.gen_range(0..=1))
        .map(|_| SvGen::ALL[rng.gen_range(0..SvGen::ALL.len())])
        .collect();
    SvScalar::monomial(gens, c)
}

fn bi_series(rng: &mut ChaCha8Rng) -> BiSeries {
    let weights = (rng.gen_range(0..=6), rng.gen_range(0..=6));
    let terms: Vec<_> = (0..rng.gen_range(1..=8))
        .map(|_| {
            (
                rng.gen_range(-4..=2),
                rng.gen_range(0..=TRUNC),
                rng.gen_range(0..=TRUNC),
                scalar(rng),
            )
        })
        .collect();
    BiSeries::from_terms(weights, TRUNC, terms)
}

fn hol_log_series(rng: &mut ChaCha8Rng) -> HolLogSeries {
    let mut h = HolLogSeries::zero(TRUNC);
    for _ in 0..rng.gen_range(1..=6) {
        let c = rat(rng.gen_range(-12..=12), rng.gen_range(1..=6));
        h.add_term(rng.gen_range(0..=TRUNC), rng.gen_range(0..=3), c);
    }
    h
}

fn int(n: i32) -> SvScalar {
    SvScalar::from(rat(n as i64, 1))
}

fn laplacians_agree(f: &BiSeries) -> bool {
    let (r, s) = f.weights();
    let one = f.scale(&int(r * (s - 1))).sub(&f.raise().lower());
    let two = f.scale(&int(s * (r - 1))).sub(&f.lower().raise());
    matches!((one, two), (Ok(a), Ok(b)) if a == b)
}

fn commutator_is_weight_difference(f: &BiSeries) -> bool {
    let (r, s) = f.weights();
    f.lower().raise().sub(&f.raise().lower()).ok() == Some(f.scale(&int(r - s)))
}

fn pole_filtration(f: &BiSeries, g: &BiSeries) -> bool {
    f.multiply(g)
        .in_pole_filtration((f.pole_order() + g.pole_order()) as i32)
}

fn check(name: &'static str, cases: usize, mut case: impl FnMut() -> bool) -> PropertyReport {
    let failures = (0..cases).filter(|_| !case()).count();
    PropertyReport {
        name,
        cases,
        failures,
    }
}

/// Runs every property on `cases` random inputs drawn from a generator seeded with `seed`.
pub fn run(seed: u64, cases: usize) -> Vec<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        check("laplacian presentations agree", cases, || {
            laplacians_agree(&bi_series(&mut rng))
        }),
        check("[d, dbar] f = (r - s) f", cases, || {
            commutator_is_weight_difference(&bi_series(&mut rng))
        }),
        check("pole filtration is multiplicative", cases, || {
            let (f, g) = (bi_series(&mut rng), bi_series(&mut rng));
            pole_filtration(&f, &g)
        }),
        check("reg_primitive is a right inverse", cases, || {
            let h = hol_log_series(&mut rng);
            h.reg_primitive().log_derivative() == h
        }),
        check("formal d-Lambda identity", cases, || {
            verify_dlambda_identity(&bi_series(&mut rng)).is_ok_and(|r| r.passes())
        }),
    ]
}
