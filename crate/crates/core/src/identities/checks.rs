use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde_json::Value;

use crate::arith::{BigRational, RationalFunction, Scalar};
use crate::error::Result;
use crate::report::{index, Check, IdentityId, Index, VerificationReport};

use super::{
    lhs_anz1_at, lhs_anz2_at, lhs_anz3_at, rhs_anz1_at, rhs_anz2_at, rhs_anz3_at, sum, QContext,
};

/// Compares two sides built from a [`QContext`] named `$c` over `Q(q)`,
/// then rebuilds the same expression over `Q` at each numeric point.
macro_rules! compare_sides {
    ($check:expr, $idx:expr, $max:expr, |$c:ident| $body:expr) => {{
        let max: u32 = $max;
        let symbolic = (|| -> Result<(RationalFunction, RationalFunction)> {
            let $c = QContext::new(RationalFunction::q(), max)?;
            $body
        })();
        $check.compare($idx, symbolic, |p: &BigRational| -> Result<(BigRational, BigRational)> {
            let $c = QContext::new(p.clone(), max)?;
            $body
        })
    }};
}

fn per_m(
    id: IdentityId,
    m_max: u32,
    range: RangeInclusive<u32>,
    body: impl Fn(&mut Check, u32) + Sync + Send,
) -> VerificationReport {
    let parts: Vec<Check> = range
        .into_par_iter()
        .map(|m| {
            let mut c = Check::new(id);
            body(&mut c, m);
            c
        })
        .collect();
    let mut check = Check::new(id).param("m_max", m_max);
    for part in parts {
        check.absorb(part);
    }
    check.finish()
}

fn m_index(m: u32) -> Index {
    index([("m", i64::from(m))])
}

fn km_index(k: u32, m: u32) -> Index {
    index([("k", i64::from(k)), ("m", i64::from(m))])
}

fn with_form(mut idx: Index, form: &str) -> Index {
    idx.insert("form".into(), Value::from(form));
    idx
}

fn sum_terms<F: Scalar>(ks: RangeInclusive<u32>, term: impl Fn(u32) -> Result<F>) -> Result<F> {
    sum(ks.map(term))
}

/// First identity, `m = 0..=m_max`.
pub fn check_anz1(m_max: u32) -> VerificationReport {
    per_m(IdentityId::Anz1, m_max, 0..=m_max, |check, m| {
        compare_sides!(check, m_index(m), 0, |c| Ok((lhs_anz1_at(c.q(), m)?, rhs_anz1_at(c.q(), m)?)));
    })
}

/// Second identity, `m = 0..=m_max`.
pub fn check_anz2(m_max: u32) -> VerificationReport {
    per_m(IdentityId::Anz2, m_max, 0..=m_max, |check, m| {
        compare_sides!(check, m_index(m), 0, |c| Ok((lhs_anz2_at(c.q(), m)?, rhs_anz2_at(c.q(), m)?)));
    })
}

/// Third identity, `m = 0..=m_max`.
pub fn check_anz3(m_max: u32) -> VerificationReport {
    per_m(IdentityId::Anz3, m_max, 0..=m_max, |check, m| {
        compare_sides!(check, m_index(m), 0, |c| Ok((lhs_anz3_at(c.q(), m)?, rhs_anz3_at(c.q(), m)?)));
    })
}

/// `Σ_{k=1}^m (a_k + b_k)` against the right side of the first identity.
pub fn check_eq4(m_max: u32) -> VerificationReport {
    per_m(IdentityId::Eq4, m_max, 1..=m_max, |check, m| {
        compare_sides!(check, m_index(m), m, |c| {
            let lhs = sum_terms(1..=m, |k| Ok(c.term_a(k, m)? + &c.term_b(k, m)?))?;
            Ok((lhs, rhs_anz1_at(c.q(), m)?))
        });
    })
}

/// The closed forms of `Σ a2_k` and `Σ b2_k` recombine into the right side
/// of the first identity.
pub fn check_final_combine(m_max: u32) -> VerificationReport {
    per_m(IdentityId::FinalCombine, m_max, 1..=m_max, |check, m| {
        compare_sides!(check, m_index(m), m, |c| {
            Ok((c.sum_a2_closed(m)? + &c.sum_b2_closed(m)?, rhs_anz1_at(c.q(), m)?))
        });
    })
}

/// `Σ_{k=1}^{m+1} c_k` against the right side of the second identity.
pub fn check_eq5(m_max: u32) -> VerificationReport {
    per_m(IdentityId::Eq5, m_max, 0..=m_max, |check, m| {
        compare_sides!(check, m_index(m), m + 1, |c| {
            let lhs = sum_terms(1..=m + 1, |k| c.term_c(k, m))?;
            Ok((lhs, rhs_anz2_at(c.q(), m)?))
        });
    })
}

/// Direct `Σ a2_k` against the closed form and the limiting `2phi1` form.
pub fn check_a2_sum(m_max: u32) -> VerificationReport {
    per_m(IdentityId::A2Sum, m_max, 1..=m_max, |check, m| {
        compare_sides!(check, with_form(m_index(m), "closed"), m, |c| {
            Ok((sum_terms(1..=m, |k| c.term_a2(k, m))?, c.sum_a2_closed(m)?))
        });
        compare_sides!(check, with_form(m_index(m), "limit_2phi1"), m, |c| {
            Ok((sum_terms(1..=m, |k| c.term_a2(k, m))?, c.sum_a2_limit(m)?))
        });
    })
}

/// Direct `Σ b2_k` against the closed form and the limiting `2phi1` form.
pub fn check_b2_sum(m_max: u32) -> VerificationReport {
    per_m(IdentityId::B2Sum, m_max, 1..=m_max, |check, m| {
        compare_sides!(check, with_form(m_index(m), "closed"), m, |c| {
            Ok((sum_terms(1..=m, |k| c.term_b2(k, m))?, c.sum_b2_closed(m)?))
        });
        compare_sides!(check, with_form(m_index(m), "limit_2phi1"), m, |c| {
            Ok((sum_terms(1..=m, |k| c.term_b2(k, m))?, c.sum_b2_limit(m)?))
        });
    })
}

/// Direct `Σ_{k=1}^{m+1} c1_k` against `1/(q^m (q^-2;q^-2)_m)`, and against
/// the intermediate series and limiting `2phi1` forms.
pub fn check_c1_sum(m_max: u32) -> VerificationReport {
    per_m(IdentityId::C1Sum, m_max, 0..=m_max, |check, m| {
        compare_sides!(check, with_form(m_index(m), "closed"), m + 1, |c| {
            Ok((sum_terms(1..=m + 1, |k| c.term_c1(k, m))?, c.sum_c1_closed(m)?))
        });
        compare_sides!(check, with_form(m_index(m), "series"), m + 1, |c| {
            Ok((sum_terms(1..=m + 1, |k| c.term_c1(k, m))?, c.sum_c1_series(m)?))
        });
        compare_sides!(check, with_form(m_index(m), "limit_2phi1"), m + 1, |c| {
            Ok((sum_terms(1..=m + 1, |k| c.term_c1(k, m))?, c.sum_c1_limit(m)?))
        });
    })
}

/// Direct `Σ_{k=1}^{m+1} c2_k` against its closed form.
pub fn check_c2_sum(m_max: u32) -> VerificationReport {
    per_m(IdentityId::C2Sum, m_max, 0..=m_max, |check, m| {
        compare_sides!(check, m_index(m), m + 1, |c| {
            Ok((sum_terms(1..=m + 1, |k| c.term_c2(k, m))?, c.sum_c2_closed(m)?))
        });
    })
}

/// `Σ (a_k + b_k)` against the enumerated left side of the first identity.
pub fn check_bridge_ab(m_max: u32) -> VerificationReport {
    per_m(IdentityId::BridgeAb, m_max, 0..=m_max, |check, m| {
        compare_sides!(check, m_index(m), m, |c| {
            let terms = sum_terms(1..=m, |k| Ok(c.term_a(k, m)? + &c.term_b(k, m)?))?;
            Ok((terms, lhs_anz1_at(c.q(), m)?))
        });
    })
}

/// `Σ c_k` against the enumerated left side of the second identity.
pub fn check_bridge_c(m_max: u32) -> VerificationReport {
    per_m(IdentityId::BridgeC, m_max, 0..=m_max, |check, m| {
        compare_sides!(check, m_index(m), m + 1, |c| {
            Ok((sum_terms(1..=m + 1, |k| c.term_c(k, m))?, lhs_anz2_at(c.q(), m)?))
        });
    })
}

/// `Σ d_k` against the enumerated left side of the third identity.
pub fn check_bridge_d(m_max: u32) -> VerificationReport {
    per_m(IdentityId::BridgeD, m_max, 0..=m_max, |check, m| {
        compare_sides!(check, m_index(m), m, |c| {
            Ok((sum_terms(1..=m, |k| c.term_d(k, m))?, lhs_anz3_at(c.q(), m)?))
        });
    })
}

/// `a_k + b_k = a2_k + b2_k` for `1 <= k <= m`.
pub fn check_ab_split(m_max: u32) -> VerificationReport {
    per_m(IdentityId::AbSplit, m_max, 1..=m_max, |check, m| {
        for k in 1..=m {
            compare_sides!(check, km_index(k, m), m, |c| {
                Ok((c.term_a(k, m)? + &c.term_b(k, m)?, c.term_a2(k, m)? + &c.term_b2(k, m)?))
            });
        }
    })
}

/// `c_k = c1_k + c2_k` for `1 <= k <= m+1`.
pub fn check_c_split(m_max: u32) -> VerificationReport {
    per_m(IdentityId::CSplit, m_max, 0..=m_max, |check, m| {
        for k in 1..=m + 1 {
            compare_sides!(check, km_index(k, m), m + 1, |c| {
                Ok((c.term_c(k, m)?, c.term_c1(k, m)? + &c.term_c2(k, m)?))
            });
        }
    })
}

/// `d_k = b2_k` for `1 <= k <= m`.
pub fn check_d_eq_b2(m_max: u32) -> VerificationReport {
    per_m(IdentityId::DEqB2, m_max, 1..=m_max, |check, m| {
        for k in 1..=m {
            compare_sides!(check, km_index(k, m), m, |c| Ok((c.term_d(k, m)?, c.term_b2(k, m)?)));
        }
    })
}

/// `c2_k(m) = -b2_k(m+1)` for `1 <= k <= m+1`.
pub fn check_c2_neg_b2(m_max: u32) -> VerificationReport {
    per_m(IdentityId::C2NegB2, m_max, 0..=m_max, |check, m| {
        for k in 1..=m + 1 {
            compare_sides!(check, km_index(k, m), m + 1, |c| {
                Ok((c.term_c2(k, m)?, -c.term_b2(k, m + 1)?))
            });
        }
    })
}

/// The literal `a_k` against the `λ'_1 = 2k` marginal before
/// `(1 - q^-2k)` is absorbed into the Pochhammer symbol.
pub fn check_absorption(m_max: u32) -> VerificationReport {
    per_m(IdentityId::Absorption, m_max, 1..=m_max, |check, m| {
        for k in 1..=m {
            compare_sides!(check, km_index(k, m), m, |c| {
                Ok((c.term_a(k, m)?, c.term_a_unabsorbed(k, m)?))
            });
        }
    })
}

/// Every identity-level check for `m <= m_max`, in a fixed order.
pub fn verify_identities(m_max: u32) -> Vec<VerificationReport> {
    let checks: [fn(u32) -> VerificationReport; 18] = [
        check_anz1,
        check_anz2,
        check_anz3,
        check_eq4,
        check_eq5,
        check_a2_sum,
        check_b2_sum,
        check_c1_sum,
        check_c2_sum,
        check_final_combine,
        check_bridge_ab,
        check_bridge_c,
        check_bridge_d,
        check_ab_split,
        check_c_split,
        check_d_eq_b2,
        check_c2_neg_b2,
        check_absorption,
    ];
    checks.iter().map(|f| f(m_max)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range_passes() {
        for report in verify_identities(4) {
            assert!(report.pass, "{}", report.to_text());
            assert!(report.checked > 0, "{} checked nothing", report.identity);
        }
    }

    #[test]
    fn reports_are_ordered_by_index() {
        let r = check_ab_split(3);
        let ks: Vec<_> = r.outcomes.iter().map(|o| (o.index["m"].clone(), o.index["k"].clone())).collect();
        assert_eq!(ks.len(), 6);
        assert_eq!(ks[0], (Value::from(1), Value::from(1)));
        assert_eq!(ks[5], (Value::from(3), Value::from(3)));
    }

    #[test]
    fn numeric_points_are_used() {
        let r = check_anz1(2);
        assert!(r.outcomes.iter().all(|o| o.numeric_points == vec![2, 3, 5]));
    }

    #[test]
    fn vacuous_ranges() {
        let r = check_eq4(0);
        assert!(r.pass);
        assert_eq!(r.checked, 0);
        assert!(r.to_text().contains("PASS (vacuous)"));
    }

    #[test]
    fn sign_error_is_caught_at_m_one() {
        let mut check = Check::new(IdentityId::Anz1);
        for m in 0..=3u32 {
            compare_sides!(check, m_index(m), 0, |c| {
                Ok((lhs_anz1_at(c.q(), m)?, -rhs_anz1_at(c.q(), m)?))
            });
        }
        let report = check.finish();
        assert!(!report.pass);
        let ce = report.counterexample.expect("counterexample");
        assert_eq!(ce.index["m"], Value::from(1));
    }
}
