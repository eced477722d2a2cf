use faclr::ring::{rat, Family, IndexRule, Monomial, MultiPoly, Rational, Specialization, VarRef};
use num_bigint::BigInt;
use proptest::prelude::*;

fn var() -> impl Strategy<Value = VarRef> {
    prop_oneof![
        (1usize..=3).prop_map(VarRef::x),
        (1i64..=4).prop_map(VarRef::a),
        (-1i64..=3).prop_map(VarRef::b),
    ]
}

fn coeff() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (coeff(), prop::collection::vec((var(), 1u32..=2), 0..=3)),
        0..=5,
    )
    .prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(c, m)| (Monomial::from_pairs(m), c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes_and_associates(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p + &MultiPoly::zero(), p.clone());
    }

    #[test]
    fn multiplication_is_a_ring_product(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &MultiPoly::one(), p.clone());
    }

    #[test]
    fn text_form_round_trips(p in poly()) {
        let back: MultiPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn json_form_round_trips(p in poly()) {
        let back = MultiPoly::from_json(&p.to_json()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn exact_division_undoes_multiplication(q in poly(), d in poly()) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&q * &d).exact_div(&d).unwrap(), q);
    }

    #[test]
    fn homogeneous_components_reassemble(p in poly()) {
        let top = p.x_degree().unwrap_or(0);
        let sum: MultiPoly = (0..=top).map(|d| p.homogeneous_component(d)).sum();
        prop_assert_eq!(sum, p.clone());
        for d in 0..=top {
            let once = p.homogeneous_component(d);
            prop_assert_eq!(once.homogeneous_component(d), once.clone());
        }
    }

    #[test]
    fn substitution_is_a_ring_map(p in poly(), q in poly(), vals in prop::collection::vec(coeff(), 12)) {
        let mut s = Specialization::new();
        for (k, v) in vals.into_iter().enumerate() {
            let v_ref = match k {
                0..=2 => VarRef::x(k + 1),
                3..=6 => VarRef::a(k as i64 - 2),
                _ => VarRef::b(k as i64 - 8),
            };
            s.set(v_ref, v);
        }
        let lhs = (&p * &q).substitute(&s).unwrap();
        let rhs = &p.substitute(&s).unwrap() * &q.substitute(&s).unwrap();
        prop_assert_eq!(lhs.clone(), rhs);
        prop_assert!(lhs.as_constant().is_some());
    }
}

#[test]
fn shifted_rule_fills_unassigned_indices() {
    let s = Specialization::with_rules(IndexRule::Shifted, IndexRule::Zero);
    let p: MultiPoly = "a3 * b2 + a5".parse().unwrap();
    assert_eq!(p.substitute(&s).unwrap(), MultiPoly::integer(4));
    assert!(s.value(VarRef::a(1)).is_some());
    assert!(!s.assigns_family(Family::X));
    assert_eq!(s.value(VarRef::b(9)), Some(rat(0)));
}

#[test]
fn not_divisible_is_reported() {
    let p: MultiPoly = "x1^2 + a1".parse().unwrap();
    let d: MultiPoly = "x1 - a2".parse().unwrap();
    assert_eq!(p.exact_div(&d).unwrap_err(), faclr::Error::NotDivisible);
}
