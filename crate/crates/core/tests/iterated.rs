use eisenworks::exact_arith::rat;
use eisenworks::itereis::{
    build_i, eis_alphabet, gauge, log_degree_violations, mu_map, n_plus, shuffle_check, sv_twist,
    verify_base_point, verify_di, verify_dj,
};

#[test]
fn length_two_group_series_identities() {
    let (maxlen, maxweight, trunc) = (2, 6, 6);
    let i = build_i(maxlen, maxweight, trunc).unwrap();
    assert!(shuffle_check(&i, &eis_alphabet(maxweight)).passes());
    assert!(log_degree_violations(&i).is_empty());
    assert!(verify_base_point(&i));
    assert!(verify_di(&i, maxweight).unwrap().passes());

    let j = mu_map(&i);
    let dj = verify_dj(&j, maxweight).unwrap();
    assert!(dj.twisted.passes());
    assert!(dj.gauge.passes());
    assert!(!dj.literal.passes());

    assert_eq!(sv_twist(&sv_twist(&j)), j);
    assert!(verify_base_point(&gauge(&j)));
}

#[test]
fn constant_terms_of_length_one_integrals() {
    let n = n_plus(8);
    assert_eq!(n[&4], rat(-1, 240));
    assert_eq!(n[&6], rat(1, 6048));
}
