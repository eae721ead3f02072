use hurwitz_core::exec::Sequential;
use hurwitz_core::group::congruence::{congruent_pm_one, congruent_pm_one_via_split};
use hurwitz_core::group::half::{CongruenceTester, HalfQuat};
use hurwitz_core::group::systole::systole_bfs;
use hurwitz_core::order::hur_congruence_test;
use hurwitz_core::residue::{reduce, reduce_via_order, split, Mat2, SplitMap};
use hurwitz_core::{FieldElem, IdealK, Order, Precision, QuatElem};
use num_rational::BigRational;
use proptest::prelude::*;

fn field(c: [i64; 3]) -> FieldElem {
    FieldElem::from_ints(c[0], c[1], c[2])
}

fn field_elem() -> impl Strategy<Value = FieldElem> {
    prop::array::uniform3(-20i64..=20).prop_map(field)
}

fn half_integral() -> impl Strategy<Value = QuatElem> {
    prop::array::uniform4(prop::array::uniform3(-6i64..=6)).prop_map(|v| {
        let half = BigRational::new(1.into(), 2.into());
        QuatElem::from_coords(v.map(|c| field(c).scale(&half)))
    })
}

fn hurwitz_elem() -> impl Strategy<Value = QuatElem> {
    prop::array::uniform4(prop::array::uniform3(-4i64..=4)).prop_map(|v| {
        let hur = Order::hurwitz();
        let basis = hur.basis();
        v.iter()
            .zip(basis)
            .fold(QuatElem::zero(), |acc, (c, b)| &acc + &b.scale(&field(*c)))
    })
}

fn images_mul(s: &SplitMap, a: &[Mat2], b: &[Mat2]) -> Vec<Mat2> {
    a.iter()
        .zip(b)
        .zip(s.components())
        .map(|((x, y), c)| x.mul(c.ring(), y))
        .collect()
}

fn images_add(s: &SplitMap, a: &[Mat2], b: &[Mat2]) -> Vec<Mat2> {
    a.iter()
        .zip(b)
        .zip(s.components())
        .map(|((x, y), c)| x.add(c.ring(), y))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn trace_is_linear_and_norm_multiplicative(a in field_elem(), b in field_elem()) {
        prop_assert_eq!((&a + &b).trace(), a.trace() + b.trace());
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn nonzero_elements_invert(a in field_elem()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inverse().unwrap()).is_one());
    }

    #[test]
    fn reduced_norm_is_multiplicative(x in half_integral(), y in half_integral()) {
        prop_assert_eq!((&x * &y).reduced_norm(), &x.reduced_norm() * &y.reduced_norm());
        prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
    }

    #[test]
    fn hurwitz_is_closed(x in hurwitz_elem(), y in hurwitz_elem()) {
        let hur = Order::hurwitz();
        prop_assert!(hur.contains(&(&x * &y)).member);
        prop_assert!(hur_congruence_test(&(&x * &y)));
        prop_assert!(hur.contains(&QuatElem::scalar(x.reduced_norm())).member);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn membership_paths_agree(x in half_integral()) {
        prop_assert_eq!(Order::hurwitz().contains(&x).member, hur_congruence_test(&x));
    }

    #[test]
    fn splitting_mod_26_is_a_ring_map(x in hurwitz_elem(), y in hurwitz_elem()) {
        let s = split(&IdealK::from_int(26).unwrap()).unwrap();
        let (rx, ry) = (reduce(&x, &s).unwrap(), reduce(&y, &s).unwrap());
        prop_assert_eq!(reduce(&(&x * &y), &s).unwrap(), images_mul(&s, &rx, &ry));
        prop_assert_eq!(reduce(&(&x + &y), &s).unwrap(), images_add(&s, &rx, &ry));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn splitting_is_a_ring_map_for_small_levels(
        x in hurwitz_elem(),
        y in hurwitz_elem(),
        level in prop::sample::select(vec![[2, -1, 0], [2, 0, 0], [-1, 2, 0], [3, -2, 0], [3, 1, 0], [4, 0, 0], [7, 0, 0]]),
    ) {
        let s = split(&IdealK::new(field(level)).unwrap()).unwrap();
        let (rx, ry) = (reduce(&x, &s).unwrap(), reduce(&y, &s).unwrap());
        prop_assert_eq!(reduce(&(&x * &y), &s).unwrap(), images_mul(&s, &rx, &ry));
        prop_assert_eq!(reduce_via_order(&x, &s, &Order::hurwitz()).unwrap(), rx);
    }

    #[test]
    fn half_representation_round_trips(x in hurwitz_elem(), y in hurwitz_elem()) {
        let (hx, hy) = (HalfQuat::from_quat(&x).unwrap(), HalfQuat::from_quat(&y).unwrap());
        prop_assert_eq!(hx.to_quat(), x.clone());
        prop_assert_eq!(hx.mul(&hy).unwrap(), HalfQuat::from_quat(&(&x * &y)).unwrap());
        prop_assert_eq!(hx.conj().to_quat(), x.conj());
    }
}

#[test]
fn bfs_elements_pass_the_split_test() {
    for level in [[2, -1, 0], [3, -2, 0]] {
        let ideal = IdealK::new(field(level)).unwrap();
        let s = split(&ideal).unwrap();
        let tester = CongruenceTester::new(ideal.generator()).unwrap();
        let r = systole_bfs(&ideal, 26, Precision::DEFAULT, &Sequential).unwrap();
        let w = r.witness.to_quat();
        assert!(tester.congruent_pm_one(&r.witness));
        assert!(congruent_pm_one(&w, &ideal).unwrap());
        assert!(congruent_pm_one_via_split(&w, &s).unwrap());
        let word = r.witness_word.unwrap().evaluate();
        assert!(congruent_pm_one_via_split(&word, &s).unwrap());
    }
}
