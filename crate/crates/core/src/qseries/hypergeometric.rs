use crate::arith::{sign_power, RationalFunction, Scalar};
use crate::error::Result;

use super::pochhammer;

/// Parameters `(n, B, C, Q, Z)` of the terminating series
/// `2phi1(Q^-n, B; C; Q, Z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricSpec<F = RationalFunction> {
    pub n: u32,
    pub b: F,
    pub c: F,
    pub base: F,
    pub z: F,
}

impl<F: Scalar> HypergeometricSpec<F> {
    pub fn new(n: u32, b: F, c: F, base: F, z: F) -> Self {
        HypergeometricSpec { n, b, c, base, z }
    }

    /// `Q^-n`, the terminating numerator parameter.
    pub fn top(&self) -> Result<F> {
        Ok(self.base.powi(-i64::from(self.n))?)
    }
}

/// `sum_{k=0}^{n} (Q^-n;Q)_k (B;Q)_k / ((Q;Q)_k (C;Q)_k) Z^k`.
pub fn two_phi_one<F: Scalar>(spec: &HypergeometricSpec<F>) -> Result<F> {
    let top = spec.top()?;
    let q = &spec.base;
    let mut sum = F::one();
    let (mut num, mut den) = (F::one(), F::one());
    let (mut top_k, mut b_k, mut q_k, mut c_k) =
        (top.clone(), spec.b.clone(), q.clone(), spec.c.clone());
    let mut z_k = F::one();
    for _ in 1..=spec.n {
        num = num * &(F::one() - &top_k) * &(F::one() - &b_k);
        den = den * &(F::one() - &q_k) * &(F::one() - &c_k);
        z_k = z_k * &spec.z;
        sum = sum + num.try_div(&den)? * &z_k;
        top_k = top_k * q;
        b_k = b_k * q;
        q_k = q_k * q;
        c_k = c_k * q;
    }
    Ok(sum)
}

/// The `B -> infinity` limit of `2phi1(Q^-n, B; C; Q, Z/B)`, by its term
/// formula `(Q^-n;Q)_k (-1)^k Q^binom(k,2) Z^k / ((Q;Q)_k (C;Q)_k)`.
pub fn limit_two_phi_one<F: Scalar>(n: u32, c: &F, base: &F, z: &F) -> Result<F> {
    let top = base.powi(-i64::from(n))?;
    let mut sum = F::zero();
    for k in 0..=n {
        let kk = i64::from(k);
        let num = pochhammer(&top, base, k)
            * &sign_power::<F>(kk)
            * &base.powi(kk * (kk - 1) / 2)?
            * &z.powi(kk)?;
        let den = pochhammer(base, base, k) * &pochhammer(c, base, k);
        sum = sum + num.try_div(&den)?;
    }
    Ok(sum)
}

/// Both sides of `2phi1(Q^-n, B; C; Q, C Q^n / B) = (C/B;Q)_n / (C;Q)_n`.
pub fn qchu_sides<F: Scalar>(n: u32, b: &F, c: &F, base: &F) -> Result<(F, F)> {
    let z = c.clone() * &base.powi(i64::from(n))?.try_div(b)?;
    let spec = HypergeometricSpec::new(n, b.clone(), c.clone(), base.clone(), z);
    let lhs = two_phi_one(&spec)?;
    let rhs = pochhammer(&c.try_div(b)?, base, n).try_div(&pochhammer(c, base, n))?;
    Ok((lhs, rhs))
}

/// Both sides of the terminating transformation
/// `2phi1(Q^-n, B; C; Q, Z) = (C/B;Q)_n/(C;Q)_n
///   * sum_k (Q^-n;Q)_k (B;Q)_k (B Z Q^-n / C;Q)_k / ((Q;Q)_k (B Q^(1-n) / C;Q)_k) Q^k`.
pub fn transform_sides<F: Scalar>(spec: &HypergeometricSpec<F>) -> Result<(F, F)> {
    let lhs = two_phi_one(spec)?;
    let HypergeometricSpec { n, b, c, base, z } = spec;
    let n = *n;
    let ni = i64::from(n);
    let top = base.powi(-ni)?;
    let prefactor = pochhammer(&c.try_div(b)?, base, n).try_div(&pochhammer(c, base, n))?;
    let upper = (b.clone() * z * &top).try_div(c)?;
    let lower = (b.clone() * &base.powi(1 - ni)?).try_div(c)?;
    let mut sum = F::zero();
    for k in 0..=n {
        let num = pochhammer(&top, base, k) * &pochhammer(b, base, k) * &pochhammer(&upper, base, k);
        let den = pochhammer(base, base, k) * &pochhammer(&lower, base, k);
        sum = sum + num.try_div(&den)? * &base.powi(i64::from(k))?;
    }
    Ok((lhs, prefactor * &sum))
}

/// Both sides of the limiting transformation: [`limit_two_phi_one`] against
/// `1/(C;Q)_n * sum_k (Q^-n;Q)_k (Z Q^-n / C;Q)_k / (Q;Q)_k * Q^k (C Q^(n-1))^k`.
pub fn limit_transform_sides<F: Scalar>(n: u32, c: &F, base: &F, z: &F) -> Result<(F, F)> {
    let lhs = limit_two_phi_one(n, c, base, z)?;
    let ni = i64::from(n);
    let top = base.powi(-ni)?;
    let upper = (z.clone() * &top).try_div(c)?;
    let ratio = base.clone() * c * &base.powi(ni - 1)?;
    let mut sum = F::zero();
    for k in 0..=n {
        let term = (pochhammer(&top, base, k) * &pochhammer(&upper, base, k))
            .try_div(&pochhammer(base, base, k))?
            * &ratio.powi(i64::from(k))?;
        sum = sum + term;
    }
    Ok((lhs, sum.try_div(&pochhammer(c, base, n))?))
}
