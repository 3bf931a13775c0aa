//! Values computed by an independent enumeration in exact rational arithmetic.

use qident_core::identities::*;
use qident_core::partitions::{enumerate, ParityConstraint};
use qident_core::{parse_rational, BigRational, Scalar};

fn r(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

#[test]
fn first_identity_at_q_two() {
    let q = BigRational::from_i64(2);
    for (m, v) in [(2, "53/256"), (3, "17367/163840"), (5, "221029375275461/8279837953228800")] {
        assert_eq!(lhs_anz1_at(&q, m).unwrap(), r(v), "lhs m={m}");
        assert_eq!(rhs_anz1_at(&q, m).unwrap(), r(v), "rhs m={m}");
        assert_eq!(lhs_anz1(m).unwrap().eval(&q).unwrap(), r(v), "symbolic m={m}");
    }
}

#[test]
fn second_identity_at_q_two() {
    let q = BigRational::from_i64(2);
    for (m, v) in [(1, "19/48"), (2, "5011/23040"), (4, "1356716454931/24257337753600")] {
        assert_eq!(lhs_anz2_at(&q, m).unwrap(), r(v), "lhs m={m}");
        assert_eq!(rhs_anz2_at(&q, m).unwrap(), r(v), "rhs m={m}");
    }
}

#[test]
fn third_identity_at_q_three() {
    let q = BigRational::from_i64(3);
    for (m, v) in [(2, "73/648"), (3, "473761/12597120")] {
        assert_eq!(lhs_anz3_at(&q, m).unwrap(), r(v), "lhs m={m}");
        assert_eq!(rhs_anz3_at(&q, m).unwrap(), r(v), "rhs m={m}");
    }
}

#[test]
fn summation_domain_sizes_at_m_ten() {
    assert_eq!(enumerate(20, ParityConstraint::OddPartsEvenMultiplicity).len(), 232);
    assert_eq!(enumerate(21, ParityConstraint::EvenPartsEvenMultiplicity).len(), 196);
    assert_eq!(enumerate(20, ParityConstraint::None).len(), 627);
}

#[test]
fn limit_series_value() {
    use qident_core::qseries::limit_two_phi_one;
    let q = BigRational::from_i64(2);
    let x = q.powi(-2).unwrap();
    let v = limit_two_phi_one(2, &x, &x, &q.powi(-8).unwrap()).unwrap();
    assert_eq!(v, r("3181/2880"));
}
