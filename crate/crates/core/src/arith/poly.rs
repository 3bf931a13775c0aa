use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient ring for [`Poly`].
pub trait Coefficient:
    Clone
    + Eq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;
}

impl Coefficient for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Coefficient for BigRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Dense univariate polynomial in `q`, coefficients in ascending degree.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial over the rationals.
pub type Polynomial = Poly<BigRational>;

/// Polynomial over the integers; the working representation inside
/// [`RationalFunction`](super::RationalFunction).
pub type IntPoly = Poly<BigInt>;

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^degree`.
    pub fn monomial(c: C, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    /// The variable `q`.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> C {
        self.coeffs.get(degree).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Multiplicity of `q` as a factor; zero for the zero polynomial.
    pub fn order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `q^k`; `k` must not exceed [`order`](Self::order).
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(k <= self.order() || self.is_zero());
        Poly {
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn eval(&self, point: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc *= point;
            acc += c;
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Self::from_coeffs(coeffs)
    }

    fn sub_impl(&self, rhs: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), C::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        Self::from_coeffs(coeffs)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &a.mul_ref(b);
                }
            }
        }
        Self::from_coeffs(coeffs)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl<C: Coefficient> $trait<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$impl(rhs)
            }
        }
        impl<C: Coefficient> $trait<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                self.$impl(&rhs)
            }
        }
        impl<C: Coefficient> $trait<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$impl(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect(),
        }
    }
}

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = magnitude == "1";
            match deg {
                0 => f.write_str(&magnitude)?,
                _ => {
                    if !unit {
                        if magnitude.contains('/') {
                            write!(f, "({magnitude})*")?;
                        } else {
                            write!(f, "{magnitude}*")?;
                        }
                    }
                    if deg == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<C: Coefficient + fmt::Display> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

// ---------------------------------------------------------------------------
// Rational coefficients.

impl Polynomial {
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + d_deg] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(d_deg);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic GCD by the Euclidean algorithm over `Q`.
    ///
    /// This is the slow reference route; [`IntPoly::gcd`] is what the
    /// rational-function arithmetic uses.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Writes the polynomial as `int_poly / denominator` with `denominator > 0`
    /// the least common multiple of the coefficient denominators.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        (IntPoly::from_coeffs(coeffs), lcm)
    }
}

// ---------------------------------------------------------------------------
// Integer coefficients.

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> Polynomial {
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the content and fixes the sign so the leading coefficient
    /// is positive.
    pub fn primitive_part(&self) -> Self {
        let Some(lc) = self.leading() else {
            return Self::zero();
        };
        let mut g = self.content();
        if lc.is_negative() {
            g = -g;
        }
        if g.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&g)
        }
    }

    pub(crate) fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    pub fn max_norm(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn eval_rational(&self, point: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc *= point;
            acc += BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact quotient in `Z[q]`, or `None` when `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() <= d_deg {
            return None;
        }
        if d_deg == 0 {
            let c = &divisor.coeffs[0];
            let mut coeffs = Vec::with_capacity(self.coeffs.len());
            for a in &self.coeffs {
                let (q, r) = a.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                coeffs.push(q);
            }
            return Some(Poly { coeffs });
        }
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + d_deg];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        if rem[..d_deg].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let b_deg = b.degree().expect("pseudo-division by zero");
        let lc = b.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(r_deg) = r.degree() {
            if r_deg < b_deg {
                break;
            }
            let top = r.coeffs[r_deg].clone();
            let shift = r_deg - b_deg;
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc).collect();
            for (j, d) in b.coeffs.iter().enumerate() {
                coeffs[j + shift] -= &top * d;
            }
            r = Self::from_coeffs(coeffs);
        }
        r
    }

    /// GCD in `Z[q]`, normalized to be primitive with positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let shift = self.order().min(other.order());
        let a = self.shift_down(self.order()).primitive_part();
        let b = other.shift_down(other.order()).primitive_part();
        let core = if a.degree() == Some(0) || b.degree() == Some(0) {
            Self::one()
        } else if a == b {
            a
        } else {
            heuristic_gcd(&a, &b).unwrap_or_else(|| primitive_prs_gcd(a, b))
        };
        core.shift_up(shift)
    }

    /// GCD by the primitive remainder sequence, with no heuristic shortcut.
    pub fn gcd_prs(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        primitive_prs_gcd(self.primitive_part(), other.primitive_part())
    }
}

fn primitive_prs_gcd(mut a: IntPoly, mut b: IntPoly) -> IntPoly {
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    a
}

/// Integer-evaluation GCD: evaluate at a large integer, take the integer gcd,
/// and read the candidate back off its balanced base-`xi` digits. A candidate
/// that divides both inputs is the gcd. Inputs are primitive, of positive
/// degree, with nonzero constant terms.
fn heuristic_gcd(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    let bound = a.max_norm().min(b.max_norm());
    let mut xi: BigInt = bound * 2u32 + 29u32;
    for _ in 0..6 {
        let ga = a.eval(&xi);
        let gb = b.eval(&xi);
        if !ga.is_zero() && !gb.is_zero() {
            let g = ga.gcd(&gb);
            let candidate = balanced_digits(g, &xi).primitive_part();
            if a.div_exact(&candidate).is_some() && b.div_exact(&candidate).is_some() {
                return Some(candidate);
            }
        }
        xi = xi * 73794u32 / 27011u32 + 1u32;
    }
    None
}

fn balanced_digits(mut value: BigInt, xi: &BigInt) -> IntPoly {
    let half = xi / 2u32;
    let mut coeffs = Vec::new();
    while !value.is_zero() {
        let mut digit = value.mod_floor(xi);
        if digit > half {
            digit -= xi;
        }
        value = (value - &digit) / xi;
        coeffs.push(digit);
    }
    if coeffs.is_empty() {
        return IntPoly::zero();
    }
    IntPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn degree_of_product() {
        let a = p(&[1, 2, 3]);
        let b = p(&[0, -1, 0, 4]);
        assert_eq!((&a * &b).degree(), Some(5));
        assert!((&a * &IntPoly::zero()).is_zero());
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let a = p(&[1, 2, 0, 0]);
        assert_eq!(a.coeffs().len(), 2);
        assert!((&a - &a).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "q^2 - q + 1");
        assert_eq!(p(&[0, 0, 0, -2]).to_string(), "-2*q^3");
        let half = Polynomial::from_coeffs(vec![BigRational::new(1.into(), 2.into()), BigRational::one()]);
        assert_eq!(half.to_string(), "q + 1/2");
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])), Some(p(&[1, 2])));
        assert_eq!(p(&[2, 3]).div_exact(&p(&[2])), None);
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (q^4 - 1) and (q^6 - 1) share q^2 - 1.
        let a = p(&[-1, 0, 0, 0, 1]);
        let b = p(&[-1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 0, 1]));
        assert_eq!(a.gcd_prs(&b), p(&[-1, 0, 1]));
        let shifted = a.shift_up(3);
        assert_eq!(shifted.gcd(&b.shift_up(1)), p(&[0, -1, 0, 1]));
        assert_eq!(p(&[6, 12]).gcd(&p(&[4])), IntPoly::one());
        assert_eq!(p(&[0, 0, 5]).gcd(&p(&[0, 3])), p(&[0, 1]));
    }

    #[test]
    fn rational_euclid_matches_integer_gcd() {
        let a = p(&[2, -3, 1]).to_rational();
        let b = p(&[-1, 1]).to_rational().scale(&BigRational::new(3.into(), 7.into()));
        assert_eq!(a.gcd(&b), p(&[-1, 1]).to_rational());
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(&q * &b, a);
    }

    #[test]
    fn clear_denominators_round_trip() {
        let a = Polynomial::from_coeffs(vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new((-2).into(), 3.into()),
        ]);
        let (ip, den) = a.clear_denominators();
        assert_eq!(den, BigInt::from(6));
        assert_eq!(ip, p(&[3, -4]));
    }
}
