use crate::arith::Scalar;
use crate::error::{Error, Result};

/// Formal power series in `u`, exact through `u^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> TruncatedSeries<F> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![F::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(F::one(), 0, order)
    }

    /// `c * u^power`, which is zero when `power > order`.
    pub fn monomial(c: F, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Pads with zeros or truncates to the given order.
    pub fn from_coeffs(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.resize(order + 1, F::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `u^j`; zero past the order.
    pub fn coeff(&self, j: usize) -> F {
        self.coeffs.get(j).cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() + b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() - b)
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(&F, &F) -> F) -> Self {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|j| op(&self.coeffs[j], &rhs.coeffs[j])).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![F::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonUnitSeries);
        }
        let inv0 = c0.try_inv()?;
        let mut out: Vec<F> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = F::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    acc = acc + self.coeffs[j].clone() * &out[n - j];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Substitutes `u -> u^p`, keeping the same order.
    pub fn dilate(&self, p: usize) -> Self {
        assert!(p >= 1, "dilation factor must be positive");
        let order = self.order();
        let mut out = Self::zero(order);
        for (j, c) in self.coeffs.iter().enumerate() {
            if j * p > order {
                break;
            }
            out.coeffs[j * p] = c.clone();
        }
        out
    }

    /// Multiplies by `u^s`.
    pub fn shift(&self, s: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for j in s..=order {
            out.coeffs[j] = self.coeffs[j - s].clone();
        }
        out
    }
}

/// `(1 - a u)(1 - a Q u) ... (1 - a Q^(k-1) u)` as a series.
pub fn ts_pochhammer<F: Scalar>(a: &F, base: &F, k: u32, order: usize) -> TruncatedSeries<F> {
    let mut acc = TruncatedSeries::one(order);
    let mut step = a.clone();
    for _ in 0..k {
        let factor = TruncatedSeries::from_coeffs(vec![F::one(), -step.clone()], order);
        acc = acc.mul(&factor);
        step = step * base;
    }
    acc
}

/// Exact coefficients through `u^order` of `1 / (a u; Q)_k`.
pub fn ts_reciprocal_pochhammer<F: Scalar>(
    a: &F,
    base: &F,
    k: u32,
    order: usize,
) -> Result<TruncatedSeries<F>> {
    ts_pochhammer(a, base, k, order).reciprocal()
}

/// `1 / (1 - c u) = sum c^j u^j` through `u^order`.
pub fn ts_geometric<F: Scalar>(c: &F, order: usize) -> TruncatedSeries<F> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = F::one();
    for _ in 0..=order {
        coeffs.push(power.clone());
        power = power * c;
    }
    TruncatedSeries { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{BigRational, RationalFunction};
    use num_traits::One;

    fn q() -> RationalFunction {
        RationalFunction::q()
    }

    #[test]
    fn empty_product_is_one() {
        let s = ts_reciprocal_pochhammer(&q(), &q(), 0, 4).unwrap();
        assert_eq!(s, TruncatedSeries::one(4));
    }

    #[test]
    fn geometric_series() {
        let a = q().recip().unwrap();
        let base = RationalFunction::q_monomial(-2);
        let s = ts_reciprocal_pochhammer(&a, &base, 1, 2).unwrap();
        assert_eq!(s.coeffs(), &[RationalFunction::one(), a.clone(), a.pow(2).unwrap()]);
    }

    #[test]
    fn product_of_two_geometric_series() {
        let a = q().recip().unwrap();
        let base = RationalFunction::q_monomial(-2);
        let s = ts_reciprocal_pochhammer(&a, &base, 2, 1).unwrap();
        let expected = RationalFunction::q_monomial(-1) + RationalFunction::q_monomial(-3);
        assert_eq!(s.coeff(1), expected);
        let oracle = ts_geometric(&a, 1).mul(&ts_geometric(&(a.clone() * &base), 1));
        assert_eq!(s, oracle);
    }

    #[test]
    fn reciprocal_requires_unit() {
        let s = TruncatedSeries::monomial(BigRational::from_i64(1), 1, 3);
        assert_eq!(s.reciprocal(), Err(Error::NonUnitSeries));
    }

    #[test]
    fn dilate_and_shift() {
        let s = ts_geometric(&BigRational::from_i64(2), 6);
        let d = s.dilate(2);
        let expect: Vec<BigRational> = [1, 0, 2, 0, 4, 0, 8].iter().map(|&v| BigRational::from_i64(v)).collect();
        assert_eq!(d.coeffs(), expect.as_slice());
        let sh = d.shift(1);
        assert_eq!(sh.coeff(0), BigRational::from_i64(0));
        assert_eq!(sh.coeff(3), BigRational::from_i64(2));
        assert_eq!(sh.order(), 6);
    }

    #[test]
    fn reciprocal_times_original_is_one() {
        let a = q() + RationalFunction::from_integer(2);
        let p = ts_pochhammer(&a, &q(), 3, 5);
        assert_eq!(p.mul(&p.reciprocal().unwrap()), TruncatedSeries::one(5));
    }
}
