use eisenworks::exact_arith::{format_rational, parse_rational, rat, sv_eval};
use eisenworks::freelie::{epsilon, epsilon0, epsilon0_dual, DerivationTheta};
use eisenworks::lfun::verify_dlambda_identity;
use eisenworks::sl2rep::{delta_k, sl2_act};
use eisenworks::{
    sigma, Basis, BiSeries, HolLogSeries, HomPoly, LieElement, Rational, Sl2Matrix, SvGen,
    SvScalar, Variant,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

const TRUNC: u32 = 4;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn sv_scalar() -> impl Strategy<Value = SvScalar> {
    let gen = prop::sample::select(SvGen::ALL.to_vec());
    prop::collection::vec((prop::collection::vec(gen, 0..=2), rational()), 0..=3).prop_map(
        |terms| {
            terms.into_iter().fold(SvScalar::zero(), |acc, (gens, c)| {
                &acc + &SvScalar::monomial(gens, c)
            })
        },
    )
}

fn bi_series_with(weights: (i32, i32)) -> impl Strategy<Value = BiSeries> {
    prop::collection::vec((-3i32..=2, 0u32..=3, 0u32..=3, sv_scalar()), 0..=6)
        .prop_map(move |terms| BiSeries::from_terms(weights, TRUNC, terms))
}

fn bi_series() -> impl Strategy<Value = BiSeries> {
    (0i32..=5, 0i32..=5).prop_flat_map(bi_series_with)
}

fn hol_log_series() -> impl Strategy<Value = HolLogSeries> {
    prop::collection::vec((0u32..=TRUNC, 0u32..=3, rational()), 0..=6).prop_map(|terms| {
        let mut h = HolLogSeries::zero(TRUNC);
        for (i, j, c) in terms {
            h.add_term(i, j, c);
        }
        h
    })
}

fn lie_element() -> impl Strategy<Value = LieElement> {
    let words = ["a", "b", "ab", "aab", "abb", "aabb", "aaab"];
    prop::collection::vec((prop::sample::select(words.to_vec()), -3i64..=3), 1..=3).prop_map(
        |terms| {
            terms.into_iter().fold(LieElement::zero(), |acc, (w, c)| {
                acc.add(&LieElement::lyndon(w).unwrap().scale(&rat(c, 1)))
            })
        },
    )
}

fn derivation() -> impl Strategy<Value = DerivationTheta> {
    prop::sample::select(vec![0usize, 1, 2, 3]).prop_map(|i| match i {
        0 => epsilon0(),
        1 => epsilon0_dual(),
        2 => epsilon(4, Variant::Dual).unwrap(),
        _ => epsilon(4, Variant::Lowest).unwrap(),
    })
}

fn hom_poly(degree: u32) -> impl Strategy<Value = HomPoly<Rational>> {
    prop::collection::vec(rational(), (degree + 1) as usize).prop_map(move |cs| {
        HomPoly::from_terms(
            degree,
            Basis::Betti,
            cs.into_iter()
                .enumerate()
                .map(|(s, c)| (degree - s as u32, s as u32, c)),
        )
        .unwrap()
    })
}

fn sl2_generator() -> impl Strategy<Value = Sl2Matrix<Rational>> {
    prop::sample::select(vec![0usize, 1, 2]).prop_map(|i| match i {
        0 => Sl2Matrix::s(Basis::Betti),
        1 => Sl2Matrix::t(Basis::Betti),
        _ => Sl2Matrix::st(Basis::Betti),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn maass_commutator_is_weight_difference(f in bi_series()) {
        let (r, s) = f.weights();
        let lhs = f.lower().raise().sub(&f.raise().lower()).unwrap();
        prop_assert_eq!(lhs, f.scale(&SvScalar::from(rat((r - s) as i64, 1))));
    }

    #[test]
    fn laplacian_presentations_agree(f in bi_series()) {
        let (r, s) = f.weights();
        let expected = f
            .scale(&SvScalar::from(rat((r * (s - 1)) as i64, 1)))
            .sub(&f.raise().lower())
            .unwrap();
        prop_assert_eq!(f.laplacian(), expected);
    }

    #[test]
    fn conjugation_swaps_raise_and_lower(f in bi_series()) {
        prop_assert_eq!(f.raise().conjugate(), f.conjugate().lower());
    }

    #[test]
    fn raise_is_a_derivation(
        f in bi_series_with((2, 0)),
        g in bi_series_with((1, 3)),
    ) {
        let lhs = f.multiply(&g).raise();
        let rhs = f.raise().multiply(&g).add(&f.multiply(&g.raise())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pole_filtration_is_multiplicative(f in bi_series(), g in bi_series()) {
        let p = (f.pole_order() + g.pole_order()) as i32;
        prop_assert!(f.multiply(&g).in_pole_filtration(p));
        prop_assert!(f.raise().in_pole_filtration(f.pole_order() as i32));
        prop_assert!(f.lower().in_pole_filtration(f.pole_order() as i32));
    }

    #[test]
    fn dlambda_identity_holds_formally(f in bi_series()) {
        let report = verify_dlambda_identity(&f).unwrap();
        prop_assert!(report.passes(), "{:?}", report.residues);
    }

    #[test]
    fn reg_primitive_is_a_right_inverse(h in hol_log_series()) {
        let p = h.reg_primitive();
        prop_assert_eq!(p.log_derivative(), h);
        prop_assert!(p.coeff(0, 0).is_zero());
    }

    #[test]
    fn lie_bracket_is_antisymmetric_and_jacobi(
        x in lie_element(),
        y in lie_element(),
        z in lie_element(),
    ) {
        prop_assert!(x.bracket(&y).add(&y.bracket(&x)).is_zero());
        let jacobi = x
            .bracket(&y.bracket(&z))
            .add(&y.bracket(&z.bracket(&x)))
            .add(&z.bracket(&x.bracket(&y)));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn derivation_acts_by_leibniz(d in derivation(), x in lie_element(), y in lie_element()) {
        let lhs = d.apply(&x.bracket(&y));
        let rhs = d.apply(&x).bracket(&y).add(&x.bracket(&d.apply(&y)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivation_commutator_satisfies_jacobi(
        d1 in derivation(),
        d2 in derivation(),
        d3 in derivation(),
    ) {
        let jacobi = d1
            .bracket(&d2.bracket(&d3))
            .add(&d2.bracket(&d3.bracket(&d1)))
            .add(&d3.bracket(&d1.bracket(&d2)));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn delta_k_is_sl2_equivariant(
        (p, q, k) in (0u32..=4, 0u32..=4)
            .prop_flat_map(|(a, b)| (hom_poly(a), hom_poly(b), 0..=a.min(b))),
        g in sl2_generator(),
    ) {
        let lhs = delta_k(&sl2_act(&p, &g).unwrap(), &sl2_act(&q, &g).unwrap(), k).unwrap();
        let rhs = sl2_act(&delta_k(&p, &q, k).unwrap(), &g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_k_has_parity_symmetry(
        (p, q, k) in (0u32..=4, 0u32..=4)
            .prop_flat_map(|(a, b)| (hom_poly(a), hom_poly(b), 0..=a.min(b))),
    ) {
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        prop_assert_eq!(delta_k(&q, &p, k).unwrap(), delta_k(&p, &q, k).unwrap().scale(&sign));
    }

    #[test]
    fn sv_scalars_form_a_commutative_ring(
        x in sv_scalar(),
        y in sv_scalar(),
        z in sv_scalar(),
    ) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, SvScalar::zero());
        prop_assert_eq!(&x * &SvScalar::one(), x.clone());
    }

    #[test]
    fn sv_eval_is_a_ring_homomorphism(x in sv_scalar(), y in sv_scalar()) {
        let (vx, vy) = (sv_eval(&x, 12).unwrap(), sv_eval(&y, 12).unwrap());
        let prod = sv_eval(&(&x * &y), 12).unwrap();
        let sum = sv_eval(&(&x + &y), 12).unwrap();
        let tol = |v: f64| 1e-9 * (1.0 + v.abs());
        prop_assert!((prod - vx * vy).abs() <= tol(prod));
        prop_assert!((sum - vx - vy).abs() <= tol(sum));
    }

    #[test]
    fn rationals_round_trip_through_text(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn divisor_sums_are_multiplicative(k in 0u32..=7, m in 1u64..=40, n in 1u64..=40) {
        prop_assume!(num_integer::gcd(m, n) == 1);
        prop_assert_eq!(sigma(k, m * n), sigma(k, m) * sigma(k, n));
    }
}

#[test]
fn odd_bernoulli_numbers_vanish() {
    for n in (3..=61).step_by(2) {
        assert!(eisenworks::bernoulli(n).is_zero(), "B_{n}");
    }
}
