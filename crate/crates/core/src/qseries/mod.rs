//! q-Pochhammer symbols, terminating `2phi1` series, and coefficient
//! extraction from truncated power series in `u`.

mod checks;
mod hypergeometric;
mod series;

pub use checks::{
    coeff_lemma_check, derive_seed, limit_transform_check, qbinomial_check, qchu_check,
    random_limit_transform_suite, random_qchu_suite, random_transform_suite, small_rational,
    transform_check, RandomSuite,
};
pub use hypergeometric::{
    limit_transform_sides, limit_two_phi_one, qchu_sides, transform_sides, two_phi_one,
    HypergeometricSpec,
};
pub use series::{ts_geometric, ts_pochhammer, ts_reciprocal_pochhammer, TruncatedSeries};

use crate::arith::{RationalFunction, Scalar};
use crate::error::Result;

/// `(A; Q)_n = (1 - A)(1 - AQ) ... (1 - AQ^(n-1))`.
pub fn pochhammer<F: Scalar>(a: &F, base: &F, n: u32) -> F {
    let mut acc = F::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc = acc * &(F::one() - &term);
        term = term * base;
    }
    acc
}

/// `[(A;Q)_0, (A;Q)_1, ..., (A;Q)_n]`.
pub fn pochhammer_table<F: Scalar>(a: &F, base: &F, n: u32) -> Vec<F> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(F::one());
    let mut term = a.clone();
    for k in 0..n as usize {
        let next = out[k].clone() * &(F::one() - &term);
        out.push(next);
        term = term * base;
    }
    out
}

/// Coefficient of `Z^s` in `1 / (Z; Q)_k`, namely `(Q^k; Q)_s / (Q; Q)_s`.
pub fn qbinomial_coefficient<F: Scalar>(k: u32, s: u32, base: &F) -> Result<F> {
    let a = base.powi(i64::from(k))?;
    Ok(pochhammer(&a, base, s).try_div(&pochhammer(base, base, s))?)
}

/// Closed form for the coefficient of `u^(m-k)` in `1 / (u/q; q^-2)_k`:
/// `(q^-2k; q^-2)_(m-k) / (q^-2; q^-2)_(m-k) * q^(k-m)`.
pub fn coeff_u_lemma_at<F: Scalar>(q: &F, k: u32, m: u32) -> Result<F> {
    if m < k {
        return Err(crate::error::Error::IndexOutOfRange { k, m, max: m });
    }
    let base = q.powi(-2)?;
    let s = m - k;
    Ok(qbinomial_coefficient(k, s, &base)? * &q.powi(i64::from(k) - i64::from(m))?)
}

/// [`coeff_u_lemma_at`] in `Q(q)`.
pub fn coeff_u_lemma(k: u32, m: u32) -> Result<RationalFunction> {
    coeff_u_lemma_at(&RationalFunction::q(), k, m)
}
