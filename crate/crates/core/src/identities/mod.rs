//! The three partition identities, the coefficient-extraction terms of their
//! derivations, and the closed-form sums those terms are recombined into.
//!
//! Every function is generic over [`Scalar`] so the same formula can be
//! evaluated in `Q(q)` or directly at a rational `q`.

mod checks;

pub use checks::{
    check_a2_sum, check_ab_split, check_absorption, check_anz1, check_anz2, check_anz3,
    check_b2_sum, check_bridge_ab, check_bridge_c, check_bridge_d, check_c1_sum, check_c2_neg_b2,
    check_c2_sum, check_c_split, check_d_eq_b2, check_eq4, check_eq5, check_final_combine,
    verify_identities,
};

use crate::arith::{sign_power, RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::partitions::{enumerate, ParityConstraint, WeightContext, WeightSign};
use crate::qseries::{coeff_u_lemma_at, limit_two_phi_one, pochhammer, pochhammer_table};

/// `q` together with a table of `(q^-2; q^-2)_k`.
#[derive(Clone, Debug)]
pub struct QContext<F> {
    q: F,
    x: F,
    half: Vec<F>,
}

impl<F: Scalar> QContext<F> {
    /// Tabulates `(q^-2; q^-2)_k` for `k <= max`.
    pub fn new(q: F, max: u32) -> Result<Self> {
        let x = q.powi(-2)?;
        let half = pochhammer_table(&x, &x, max);
        Ok(QContext { q, x, half })
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    /// `q^e`.
    pub fn qp(&self, e: i64) -> Result<F> {
        Ok(self.q.powi(e)?)
    }

    /// `(q^-2; q^-2)_k`.
    pub fn half(&self, k: u32) -> F {
        match self.half.get(k as usize) {
            Some(v) => v.clone(),
            None => pochhammer(&self.x, &self.x, k),
        }
    }

    /// `(q^-2k; q^-2)_s / (q^-2; q^-2)_s`.
    fn binomial_ratio(&self, k: u32, s: u32) -> Result<F> {
        let top = self.x.powi(i64::from(k))?;
        Ok(pochhammer(&top, &self.x, s).try_div(&self.half(s))?)
    }

    /// Coefficient of `u^(m-k)` in `1/(u/q; q^-2)_k`.
    fn coeff(&self, k: u32, m: u32) -> Result<F> {
        coeff_u_lemma_at(&self.q, k, m)
    }
}

fn symbolic(max: u32) -> QContext<RationalFunction> {
    QContext::new(RationalFunction::q(), max).expect("q is invertible")
}

fn require(k: u32, m: u32, max: u32) -> Result<()> {
    if k == 0 || k > max {
        return Err(Error::IndexOutOfRange { k, m, max });
    }
    Ok(())
}

fn sum<F: Scalar>(terms: impl IntoIterator<Item = Result<F>>) -> Result<F> {
    terms.into_iter().try_fold(F::zero(), |acc, t| Ok(acc + &t?))
}

/// Sum of `summand_weight` over partitions of `n` under the given constraint.
fn partition_side<F: Scalar>(q: &F, n: u32, constraint: ParityConstraint, sign: WeightSign) -> Result<F> {
    let ctx = WeightContext::new(q.clone(), n)?;
    sum(enumerate(n, constraint).iter().map(|l| ctx.summand_weight(l, sign)))
}

/// Left side of the first identity: partitions of `2m` whose odd parts have
/// even multiplicity.
pub fn lhs_anz1_at<F: Scalar>(q: &F, m: u32) -> Result<F> {
    partition_side(q, 2 * m, ParityConstraint::OddPartsEvenMultiplicity, WeightSign::Plus)
}

/// `1/(q^m (q+1)) Σ_{i=1}^m (-1)^(i-1) (q^(2i+1) + 1) / (q^(i(i+1)) (1/q^2;1/q^2)_(m-i))`.
pub fn rhs_anz1_at<F: Scalar>(q: &F, m: u32) -> Result<F> {
    let c = QContext::new(q.clone(), m)?;
    let s = sum((1..=m).map(|i| {
        let ii = i64::from(i);
        let num = sign_power::<F>(ii - 1) * &(c.qp(2 * ii + 1)? + &F::one());
        Ok(num.try_div(&(c.qp(ii * (ii + 1))? * &c.half(m - i)))?)
    }))?;
    let den = c.qp(i64::from(m))? * &(q.clone() + &F::one());
    Ok(s.try_div(&den)?)
}

/// Left side of the second identity: partitions of `2m+1` whose even parts
/// have even multiplicity.
pub fn lhs_anz2_at<F: Scalar>(q: &F, m: u32) -> Result<F> {
    partition_side(q, 2 * m + 1, ParityConstraint::EvenPartsEvenMultiplicity, WeightSign::Minus)
}

/// `1/(q^m (1/q^2;1/q^2)_m) + q^-(m+1) Σ_{i=0}^m (-1)^(i-1) / (q^(i(i+1)) (1/q^2;1/q^2)_(m-i))`.
pub fn rhs_anz2_at<F: Scalar>(q: &F, m: u32) -> Result<F> {
    let c = QContext::new(q.clone(), m)?;
    let mi = i64::from(m);
    let first = (c.qp(mi)? * &c.half(m)).try_inv()?;
    let s = sum((0..=m).map(|i| {
        let ii = i64::from(i);
        Ok(sign_power::<F>(ii - 1).try_div(&(c.qp(ii * (ii + 1))? * &c.half(m - i)))?)
    }))?;
    Ok(first + &(s * &c.qp(-mi - 1)?))
}

/// Left side of the third identity: partitions of `2m` whose even parts have
/// even multiplicity.
pub fn lhs_anz3_at<F: Scalar>(q: &F, m: u32) -> Result<F> {
    partition_side(q, 2 * m, ParityConstraint::EvenPartsEvenMultiplicity, WeightSign::Minus)
}

/// `q^-m Σ_{i=1}^m (-1)^(i-1) / (q^(i(i-1)) (1/q^2;1/q^2)_(m-i))`.
pub fn rhs_anz3_at<F: Scalar>(q: &F, m: u32) -> Result<F> {
    let c = QContext::new(q.clone(), m)?;
    let s = sum((1..=m).map(|i| {
        let ii = i64::from(i);
        Ok(sign_power::<F>(ii - 1).try_div(&(c.qp(ii * (ii - 1))? * &c.half(m - i)))?)
    }))?;
    Ok(s * &c.qp(-i64::from(m))?)
}

pub fn lhs_anz1(m: u32) -> Result<RationalFunction> {
    lhs_anz1_at(&RationalFunction::q(), m)
}

pub fn rhs_anz1(m: u32) -> Result<RationalFunction> {
    rhs_anz1_at(&RationalFunction::q(), m)
}

pub fn lhs_anz2(m: u32) -> Result<RationalFunction> {
    lhs_anz2_at(&RationalFunction::q(), m)
}

pub fn rhs_anz2(m: u32) -> Result<RationalFunction> {
    rhs_anz2_at(&RationalFunction::q(), m)
}

pub fn lhs_anz3(m: u32) -> Result<RationalFunction> {
    lhs_anz3_at(&RationalFunction::q(), m)
}

pub fn rhs_anz3(m: u32) -> Result<RationalFunction> {
    rhs_anz3_at(&RationalFunction::q(), m)
}

/// Terms of the three derivations over a fixed [`QContext`].
///
/// `a`, `b`, `c`, `d` come from coefficient extraction; `a2`, `b2`, `c1`,
/// `c2` from their explicit product formulas.
impl<F: Scalar> QContext<F> {
    /// `coeff / (q^(2k^2+k) (1/q^2;1/q^2)_(k-1))`, `1 <= k <= m`.
    pub fn term_a(&self, k: u32, m: u32) -> Result<F> {
        require(k, m, m)?;
        let (k2, ki) = (2 * i64::from(k) * i64::from(k), i64::from(k));
        Ok(self.coeff(k, m)?.try_div(&(self.qp(k2 + ki)? * &self.half(k - 1)))?)
    }

    /// The `λ'_1 = 2k` marginal in its original form, before absorbing
    /// `1 - q^-2k`: `(1 - q^-2k) coeff / (q^(2k^2+k) (1/q^2;1/q^2)_k)`.
    pub fn term_a_unabsorbed(&self, k: u32, m: u32) -> Result<F> {
        require(k, m, m)?;
        let (k2, ki) = (2 * i64::from(k) * i64::from(k), i64::from(k));
        let lead = F::one() - &self.qp(-2 * ki)?;
        Ok((lead * &self.coeff(k, m)?).try_div(&(self.qp(k2 + ki)? * &self.half(k)))?)
    }

    /// `(1 - q^(1-2k)) coeff / (q^(2k^2-k) (1/q^2;1/q^2)_(k-1))`, `1 <= k <= m`.
    pub fn term_b(&self, k: u32, m: u32) -> Result<F> {
        require(k, m, m)?;
        let (k2, ki) = (2 * i64::from(k) * i64::from(k), i64::from(k));
        let lead = F::one() - &self.qp(1 - 2 * ki)?;
        Ok((lead * &self.coeff(k, m)?).try_div(&(self.qp(k2 - ki)? * &self.half(k - 1)))?)
    }

    /// `(1-q) q^(-2k^2-k) / (q^-2;q^-2)_(k-1) * (q^-2k;q^-2)_(m-k) / (q^-2;q^-2)_(m-k) * q^(k-m)`.
    pub fn term_a2(&self, k: u32, m: u32) -> Result<F> {
        require(k, m, m)?;
        let b = self.b2_shape(k, m, -1)?;
        Ok((F::one() - &self.q) * &b)
    }

    /// `q^(-2k^2+k) / (q^-2;q^-2)_(k-1) * (q^-2k;q^-2)_(m-k) / (q^-2;q^-2)_(m-k) * q^(k-m)`.
    pub fn term_b2(&self, k: u32, m: u32) -> Result<F> {
        require(k, m, m)?;
        self.b2_shape(k, m, 1)
    }

    fn b2_shape(&self, k: u32, m: u32, linear: i64) -> Result<F> {
        let (k2, ki, mi) = (2 * i64::from(k) * i64::from(k), i64::from(k), i64::from(m));
        let head = self.qp(-k2 + linear * ki)?.try_div(&self.half(k - 1))?;
        Ok(head * &self.binomial_ratio(k, m - k)? * &self.qp(ki - mi)?)
    }

    /// `(1 - q^(1-2k)) / (q^(2k^2-3k+1) (1/q^2;1/q^2)_(k-1))` times the
    /// coefficient of `u^(m-k+1)`, `1 <= k <= m+1`.
    pub fn term_c(&self, k: u32, m: u32) -> Result<F> {
        require(k, m, m + 1)?;
        let ki = i64::from(k);
        let lead = F::one() - &self.qp(1 - 2 * ki)?;
        let den = self.qp(2 * ki * ki - 3 * ki + 1)? * &self.half(k - 1);
        Ok((lead * &self.coeff(k, m + 1)?).try_div(&den)?)
    }

    /// `q^(-2k^2+3k-1) / (q^-2;q^-2)_(k-1) * (q^-2k;q^-2)_(m-k+1) / (q^-2;q^-2)_(m-k+1) * q^(k-m-1)`.
    pub fn term_c1(&self, k: u32, m: u32) -> Result<F> {
        require(k, m, m + 1)?;
        let (ki, mi) = (i64::from(k), i64::from(m));
        let head = self.qp(-2 * ki * ki + 3 * ki - 1)?.try_div(&self.half(k - 1))?;
        Ok(head * &self.binomial_ratio(k, m + 1 - k)? * &self.qp(ki - mi - 1)?)
    }

    /// `-q^(1-2k)` times the [`term_c1`](Self::term_c1) product, written out.
    pub fn term_c2(&self, k: u32, m: u32) -> Result<F> {
        require(k, m, m + 1)?;
        let (ki, mi) = (i64::from(k), i64::from(m));
        let head = self.qp(1 - 2 * ki)? * &self.qp(-2 * ki * ki + 3 * ki - 1)?;
        let body = head.try_div(&self.half(k - 1))? * &self.binomial_ratio(k, m + 1 - k)?;
        Ok(-(body * &self.qp(ki - mi - 1)?))
    }

    /// `coeff / (q^(2k^2-k) (1/q^2;1/q^2)_(k-1))`, `1 <= k <= m`.
    pub fn term_d(&self, k: u32, m: u32) -> Result<F> {
        require(k, m, m)?;
        let ki = i64::from(k);
        Ok(self.coeff(k, m)?.try_div(&(self.qp(2 * ki * ki - ki)? * &self.half(k - 1)))?)
    }

    /// `1/(q^m (1+q)) Σ_{i=1}^m (-1)^(i-1) q^(-i(i+1)) (1 - q^(2i)) / (1/q^2;1/q^2)_(m-i)`.
    pub fn sum_a2_closed(&self, m: u32) -> Result<F> {
        let s = sum((1..=m).map(|i| {
            let ii = i64::from(i);
            let num = sign_power::<F>(ii - 1) * &self.qp(-ii * (ii + 1))? * &(F::one() - &self.qp(2 * ii)?);
            Ok(num.try_div(&self.half(m - i))?)
        }))?;
        let den = self.qp(i64::from(m))? * &(F::one() + &self.q);
        Ok(s.try_div(&den)?)
    }

    /// `q^-m Σ_{i=1}^m (-1)^(i-1) q^(-i(i+1)) q^(2i) / (1/q^2;1/q^2)_(m-i)`.
    pub fn sum_b2_closed(&self, m: u32) -> Result<F> {
        let s = sum((1..=m).map(|i| {
            let ii = i64::from(i);
            let num = sign_power::<F>(ii - 1) * &self.qp(-ii * (ii + 1))? * &self.qp(2 * ii)?;
            Ok(num.try_div(&self.half(m - i))?)
        }))?;
        Ok(s * &self.qp(-i64::from(m))?)
    }

    /// `q^-(m+1) Σ_{i=0}^m (-1)^(i-1) q^(-i(i+1)) / (1/q^2;1/q^2)_(m-i)`.
    pub fn sum_c2_closed(&self, m: u32) -> Result<F> {
        let s = sum((0..=m).map(|i| {
            let ii = i64::from(i);
            let num = sign_power::<F>(ii - 1) * &self.qp(-ii * (ii + 1))?;
            Ok(num.try_div(&self.half(m - i))?)
        }))?;
        Ok(s * &self.qp(-i64::from(m) - 1)?)
    }

    /// `1 / (q^m (q^-2;q^-2)_m)`.
    pub fn sum_c1_closed(&self, m: u32) -> Result<F> {
        Ok((self.qp(i64::from(m))? * &self.half(m)).try_inv()?)
    }

    /// `q^(-m-2) (1-q)` times the `B -> infinity` limit of
    /// `2phi1(q^(2m-2), B; q^-2; q^-2, q^(-2m-4)/B)`, `m >= 1`.
    pub fn sum_a2_limit(&self, m: u32) -> Result<F> {
        let mi = i64::from(m);
        let lim = limit_two_phi_one(m - 1, &self.x, &self.x, &self.qp(-2 * mi - 4)?)?;
        Ok(self.qp(-mi - 2)? * &(F::one() - &self.q) * &lim)
    }

    /// `q^-m` times the `B -> infinity` limit of
    /// `2phi1(q^(2m-2), B; q^-2; q^-2, q^(-2m-2)/B)`, `m >= 1`.
    pub fn sum_b2_limit(&self, m: u32) -> Result<F> {
        let mi = i64::from(m);
        let lim = limit_two_phi_one(m - 1, &self.x, &self.x, &self.qp(-2 * mi - 2)?)?;
        Ok(self.qp(-mi)? * &lim)
    }

    /// `q^-m` times the `B -> infinity` limit of
    /// `2phi1(q^(2m), B; q^-2; q^-2, q^(-2m-2)/B)`.
    pub fn sum_c1_limit(&self, m: u32) -> Result<F> {
        let mi = i64::from(m);
        let lim = limit_two_phi_one(m, &self.x, &self.x, &self.qp(-2 * mi - 2)?)?;
        Ok(self.qp(-mi)? * &lim)
    }

    /// `q^-m Σ_{k=0}^m (q^-2m; q^2)_k / (q^-2;q^-2)_k^2 q^(-2k^2)`.
    pub fn sum_c1_series(&self, m: u32) -> Result<F> {
        let mi = i64::from(m);
        let top = self.qp(-2 * mi)?;
        let base = self.qp(2)?;
        let s = sum((0..=m).map(|k| {
            let ki = i64::from(k);
            let den = self.half(k) * &self.half(k);
            Ok((pochhammer(&top, &base, k) * &self.qp(-2 * ki * ki)?).try_div(&den)?)
        }))?;
        Ok(s * &self.qp(-mi)?)
    }
}

macro_rules! symbolic_terms {
    ($($(#[$doc:meta])* $name:ident => $method:ident, $extra:expr;)*) => {
        $(
            $(#[$doc])*
            pub fn $name(k: u32, m: u32) -> Result<RationalFunction> {
                symbolic(m + $extra).$method(k, m)
            }
        )*
    };
}

symbolic_terms! {
    /// [`QContext::term_a`] in `Q(q)`.
    term_a => term_a, 0;
    /// [`QContext::term_b`] in `Q(q)`.
    term_b => term_b, 0;
    /// [`QContext::term_a2`] in `Q(q)`.
    term_a2 => term_a2, 0;
    /// [`QContext::term_b2`] in `Q(q)`.
    term_b2 => term_b2, 0;
    /// [`QContext::term_c`] in `Q(q)`.
    term_c => term_c, 1;
    /// [`QContext::term_c1`] in `Q(q)`.
    term_c1 => term_c1, 1;
    /// [`QContext::term_c2`] in `Q(q)`.
    term_c2 => term_c2, 1;
    /// [`QContext::term_d`] in `Q(q)`.
    term_d => term_d, 0;
}

pub fn sum_a2_closed(m: u32) -> Result<RationalFunction> {
    symbolic(m).sum_a2_closed(m)
}

pub fn sum_b2_closed(m: u32) -> Result<RationalFunction> {
    symbolic(m).sum_b2_closed(m)
}

pub fn sum_c1_closed(m: u32) -> Result<RationalFunction> {
    symbolic(m).sum_c1_closed(m)
}

pub fn sum_c2_closed(m: u32) -> Result<RationalFunction> {
    symbolic(m).sum_c2_closed(m)
}
