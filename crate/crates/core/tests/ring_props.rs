mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use recpoly::ring::IntPoint;
use recpoly::{MultiPoly, QuadExtElem, VarList};

fn vars() -> VarList {
    VarList::new(["x", "y", "z"])
}

prop_compose! {
    fn arb_poly()(terms in prop::collection::vec(
        (prop::collection::vec(0u32..4, 3), -1_000_000i64..=1_000_000), 0..=6)) -> MultiPoly {
        common::poly(&vars(), &terms)
    }
}

prop_compose! {
    fn arb_point()(vals in prop::collection::vec(-20i64..=20, 3)) -> IntPoint {
        ["x", "y", "z"].iter().zip(vals).map(|(n, v)| (n.to_string(), BigInt::from(v))).collect::<BTreeMap<_, _>>()
    }
}

fn delta() -> Arc<MultiPoly> {
    let v = vars();
    let x = MultiPoly::var(&v, "x").unwrap();
    let y = MultiPoly::var(&v, "y").unwrap();
    Arc::new(&x.pow(2) + &y.scale(&4.into()))
}

prop_compose! {
    fn arb_quad()(u in arb_poly(), v in arb_poly()) -> QuadExtElem {
        QuadExtElem::new(u, v, delta()).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_is_commutative_and_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributivity(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn additive_inverse_and_units(a in arb_poly()) {
        let zero = MultiPoly::zero(&vars());
        let one = MultiPoly::one(&vars());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert!((&a * &zero).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), p in arb_point()) {
        let ea = a.eval_int(&p).unwrap();
        let eb = b.eval_int(&p).unwrap();
        prop_assert_eq!((&a * &b).eval_int(&p).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_int(&p).unwrap(), &ea + &eb);
        prop_assert_eq!((-&a).eval_int(&p).unwrap(), -ea);
    }

    #[test]
    fn power_matches_repeated_product(a in arb_poly(), m in 0u32..4) {
        let mut acc = MultiPoly::one(&vars());
        for _ in 0..m {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.pow(m), acc);
    }

    #[test]
    fn quadext_commutative_and_associative(a in arb_quad(), b in arb_quad(), c in arb_quad()) {
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap().try_mul(&c).unwrap(), a.try_mul(&b.try_mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.try_add(&b).unwrap().try_add(&c).unwrap(), a.try_add(&b.try_add(&c).unwrap()).unwrap());
    }

    #[test]
    fn quadext_power_law(a in arb_quad(), m in 0u32..3, n in 0u32..3) {
        prop_assert_eq!(a.pow(m + n).unwrap(), a.pow(m).unwrap().try_mul(&a.pow(n).unwrap()).unwrap());
    }

    #[test]
    fn quadext_conjugation_is_multiplicative(a in arb_quad(), b in arb_quad()) {
        prop_assert_eq!(a.try_mul(&b).unwrap().conjugate(), a.conjugate().try_mul(&b.conjugate()).unwrap());
    }
}
