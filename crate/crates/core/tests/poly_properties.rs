use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qcong_core::{FloatPoly, IntPoly, PolyError, RatPoly};

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 0..=9).prop_map(|c| IntPoly::from_i64s(&c))
}

fn monic_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 0..=8).prop_map(|mut c| {
        c.push(1);
        IntPoly::from_i64s(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in int_poly(), b in int_poly(), c in int_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + IntPoly::zero(), a.clone());
        prop_assert_eq!(&a * IntPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn canonical_form(a in int_poly(), b in int_poly()) {
        let s = &a - &b;
        if let Some(lead) = s.leading() {
            prop_assert!(*lead != BigInt::from(0));
        } else {
            prop_assert!(s.coeffs().is_empty());
        }
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(a in int_poly(), b in int_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b), Ok(a));
    }

    #[test]
    fn inexact_division_reports_remainder(a in int_poly(), m in monic_poly()) {
        prop_assume!(m.degree() > Some(0));
        let shifted = &a * &m + IntPoly::one();
        match shifted.exact_div(&m) {
            Err(PolyError::NotDivisible { remainder }) => prop_assert!(!remainder.is_zero()),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn remainder_identity(a in int_poly(), m in monic_poly()) {
        let r = a.rem_monic(&m).unwrap();
        prop_assert!(r.is_zero() || r.degree() < m.degree());
        let quotient = (&a - &r).exact_div(&m).unwrap();
        prop_assert_eq!(quotient * &m + &r, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in int_poly(), b in int_poly(), x in -5i64..=5) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn substitute_power_composes(a in int_poly(), j in 1usize..4, k in 1usize..4, x in -3i64..=3) {
        prop_assert_eq!(a.substitute_power(j).substitute_power(k), a.substitute_power(j * k));
        let x = BigInt::from(x);
        prop_assert_eq!(a.substitute_power(k).eval(&x), a.eval(&x.pow(k as u32)));
    }

    #[test]
    fn shift_matches_monomial_product(a in int_poly(), k in 0usize..6) {
        prop_assert_eq!(a.shift(k), &a * IntPoly::q_pow(k));
    }
}

#[test]
fn other_scalar_types() {
    let half = BigRational::new(1.into(), 2.into());
    let p = RatPoly::new(vec![half.clone(), half.clone()]);
    let sq = &p * &p;
    assert_eq!(sq.exact_div(&p), Ok(p.clone()));
    assert_eq!(
        p.eval(&BigRational::from_integer(3.into())),
        BigRational::from_integer(2.into())
    );

    let f = FloatPoly::new(vec![1.0, -2.0, 1.0]);
    assert_eq!(f.eval(&1.0), 0.0);
    assert_eq!(
        f.exact_div(&FloatPoly::new(vec![-1.0, 1.0])),
        Ok(FloatPoly::new(vec![-1.0, 1.0]))
    );
    assert_eq!(
        IntPoly::from_i64s(&[1, 2]).exact_div(&IntPoly::zero()),
        Err(PolyError::DivisionByZero)
    );
}
