use num_traits::Zero;
use proptest::prelude::*;

use qident_core::arith::{IntPoly, Polynomial};
use qident_core::distributions::{sample, CLFamily, CLParams};
use qident_core::partitions::{enumerate, weight_exponent, ParityConstraint, Partition, WeightSign};
use qident_core::qseries::{pochhammer, qchu_sides, TruncatedSeries};
use qident_core::{BigRational, RationalFunction, Scalar};

fn small_int_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 0..6)
}

fn rf() -> impl Strategy<Value = RationalFunction> {
    (small_int_poly(), small_int_poly()).prop_filter_map("zero denominator", |(n, d)| {
        let den = Polynomial::from_integers(&d);
        if den.is_zero() {
            return None;
        }
        RationalFunction::from_polynomials(&Polynomial::from_integers(&n), &den).ok()
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=7, 0..9).prop_map(Partition::new)
}

fn constraint() -> impl Strategy<Value = ParityConstraint> {
    prop_oneof![
        Just(ParityConstraint::None),
        Just(ParityConstraint::OddPartsEvenMultiplicity),
        Just(ParityConstraint::EvenPartsEvenMultiplicity),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(a in rf(), b in rf(), c in rf()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !b.is_zero() {
            prop_assert_eq!(a.try_div(&b).unwrap() * &b, a.clone());
            prop_assert!(b.recip().unwrap().recip().unwrap() == b);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in rf(), b in rf(), p in rational()) {
        if let (Ok(x), Ok(y), Ok(s), Ok(t)) = (a.eval(&p), b.eval(&p), (&a + &b).eval(&p), (&a * &b).eval(&p)) {
            prop_assert_eq!(s, &x + &y);
            prop_assert_eq!(t, x * y);
        }
    }

    #[test]
    fn canonical_form_is_unique(a in rf(), k in small_int_poly()) {
        // Multiplying numerator and denominator by a common factor changes nothing.
        let f = Polynomial::from_integers(&k);
        prop_assume!(!f.is_zero());
        let num = a.numerator() * &f;
        let den = a.denominator() * &f;
        prop_assert_eq!(RationalFunction::from_polynomials(&num, &den).unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in rf()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: RationalFunction = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn integer_gcd_matches_euclid(a in small_int_poly(), b in small_int_poly(), c in small_int_poly()) {
        let (a, b, c) = (IntPoly::from_i64s(&a), IntPoly::from_i64s(&b), IntPoly::from_i64s(&c));
        let (x, y) = (&a * &c, &b * &c);
        prop_assume!(!x.is_zero() || !y.is_zero());
        let euclid = x.to_rational().gcd(&y.to_rational());
        prop_assert_eq!(x.gcd(&y).to_rational().monic(), euclid.clone());
        prop_assert_eq!(x.gcd_prs(&y).to_rational().monic(), euclid);
    }

    #[test]
    fn conjugation_and_columns(l in partition()) {
        let c = l.conjugate();
        prop_assert_eq!(c.conjugate(), l.clone());
        prop_assert_eq!(c.size(), l.size());
        for (i, &col) in l.columns().iter().enumerate() {
            let from_mults: u32 = l.multiplicities().range(i as u32 + 1..).map(|(_, &m)| m).sum();
            prop_assert_eq!(col, from_mults);
        }
        let odd: u32 = l.multiplicities().iter().filter(|(p, _)| *p % 2 == 1).map(|(_, &m)| m).sum();
        prop_assert_eq!(l.odd_count(), odd);
    }

    #[test]
    fn weight_exponent_is_always_integral(l in partition()) {
        prop_assert!(weight_exponent(&l, WeightSign::Plus).is_ok());
        prop_assert!(weight_exponent(&l, WeightSign::Minus).is_ok());
    }

    #[test]
    fn enumeration_equals_filtering(n in 0u32..=16, c in constraint()) {
        let filtered: Vec<_> = enumerate(n, ParityConstraint::None).into_iter().filter(|l| c.accepts(l)).collect();
        let listed = enumerate(n, c);
        prop_assert!(listed.iter().all(|l| l.size() == n));
        prop_assert_eq!(listed, filtered);
    }

    #[test]
    fn series_reciprocal(c0 in rational(), rest in prop::collection::vec(rational(), 0..6)) {
        prop_assume!(!c0.is_zero());
        let mut coeffs = vec![c0];
        coeffs.extend(rest);
        let s = TruncatedSeries::from_coeffs(coeffs, 6);
        prop_assert_eq!(s.mul(&s.reciprocal().unwrap()), TruncatedSeries::one(6));
    }

    #[test]
    fn pochhammer_splits(a in rational(), base in rational(), m in 0u32..5, n in 0u32..5) {
        prop_assume!(!base.is_zero());
        let shifted = a.clone() * base.powi(i64::from(m)).unwrap();
        let lhs = pochhammer(&a, &base, m + n);
        prop_assert_eq!(lhs, pochhammer(&a, &base, m) * pochhammer(&shifted, &base, n));
    }

    #[test]
    fn chu_vandermonde_on_rationals(n in 0u32..6, b in rational(), c in rational(), base in rational()) {
        if let Ok((l, r)) = qchu_sides(n, &b, &c, &base) {
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn sampler_is_reproducible(seed in any::<u64>()) {
        let params = CLParams::new(BigRational::from_i64(3), BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 1_000_000.into())).unwrap();
        let a = sample(CLFamily::O, &params, 5, 20, seed).unwrap();
        let b = sample(CLFamily::O, &params, 5, 20, seed).unwrap();
        prop_assert_eq!(a, b);
    }
}
