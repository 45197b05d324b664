mod common;

use common::{exact_c_vector, seeded_c_vectors};
use hankel_core::coefficients::{
    convex_from_caratheodory, h31_from_c, h31_from_t, hankel_det, inverse_by_reversion,
    inverse_from_caratheodory, inverse_from_schlicht, CaratheodoryCoeffs, InverseCoeffs,
};
use hankel_core::identity::h31_bracket;
use hankel_core::scalar::{rat, real, ExactScalar};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn three_inverse_routes_agree(c in exact_c_vector(4)) {
        let direct = inverse_from_caratheodory(&c).unwrap();
        let a = convex_from_caratheodory(&c, 5).unwrap();
        prop_assert_eq!(&inverse_from_schlicht(&a).unwrap(), &direct);
        prop_assert_eq!(&inverse_by_reversion(&a).unwrap(), &direct);
    }

    #[test]
    fn determinant_equals_expansion(t in prop::collection::vec(common::bounded_complex(), 4)) {
        let t = InverseCoeffs::new(t);
        prop_assert_eq!(hankel_det(3, 1, &t.sequence()).unwrap(), h31_from_t(&t).unwrap());
    }

    #[test]
    fn c_formula_equals_t_formula(c in exact_c_vector(4)) {
        let t = inverse_from_caratheodory(&c).unwrap();
        prop_assert_eq!(h31_from_c(&c).unwrap(), h31_from_t(&t).unwrap());
    }

    #[test]
    fn recurrence_longer_than_five(c in exact_c_vector(8)) {
        let a = convex_from_caratheodory(&c, 9).unwrap();
        prop_assert_eq!(a.order(), 9);
        let long = inverse_by_reversion(&a).unwrap();
        prop_assert_eq!(long.tail().len(), 8);
        let short = inverse_from_schlicht(&a).unwrap();
        prop_assert_eq!(short.tail(), &long.tail()[..4]);
    }
}

#[test]
fn seeded_corpus_routes_agree() {
    for c in seeded_c_vectors(1, 200, 4) {
        let direct = inverse_from_caratheodory(&c).unwrap();
        let a = convex_from_caratheodory(&c, 5).unwrap();
        assert_eq!(inverse_from_schlicht(&a).unwrap(), direct);
        assert_eq!(inverse_by_reversion(&a).unwrap(), direct);
    }
}

#[test]
fn bracket_has_weight_six() {
    let b = h31_bracket();
    for (m, _) in b.terms() {
        assert_eq!(m.exponents().iter().zip(1..).map(|(e, w)| e * w).sum::<u32>(), 6);
    }
    assert_eq!(b.weighted_degree(&[1, 2, 3, 4]), Some(6));
}

#[test]
fn documented_values() {
    let c = CaratheodoryCoeffs::from_real(&[rat(2, 1), rat(2, 1), rat(2, 1), rat(2, 1)]);
    let t = inverse_from_caratheodory(&c).unwrap();
    let expect: Vec<_> = [-1, 1, -1, 1].iter().map(|&x| real(rat(x, 1))).collect();
    assert_eq!(t.tail(), expect.as_slice());
    assert_eq!(h31_from_c(&c).unwrap(), real(rat(0, 1)));

    let c = CaratheodoryCoeffs::from_real(&[rat(0, 1), rat(0, 1), rat(2, 1), rat(0, 1)]);
    let t = inverse_from_caratheodory(&c).unwrap();
    assert_eq!(t.get(4).unwrap(), real(rat(-1, 6)));
    assert_eq!(h31_from_c(&c).unwrap(), real(rat(-1, 36)));

    let ones = CaratheodoryCoeffs::from_real(&vec![rat(1, 1); 4]);
    let lhs: ExactScalar = h31_from_c(&ones).unwrap().re;
    assert_eq!(lhs, rat(-1, 8640));
    assert_eq!(h31_from_t(&inverse_from_caratheodory(&ones).unwrap()).unwrap().re, lhs);
}
