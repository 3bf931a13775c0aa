use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::poly::{IntPoly, Polynomial};
use super::{format_rational, parse_rational, Scalar};
use crate::error::ArithError;

/// An element of `Q(q)` in canonical form.
///
/// Stored as a pair of integer polynomials with no common factor over `Q`,
/// coprime contents, and a denominator with positive leading coefficient.
/// This is unique for every element, so `==` is mathematical equality. The
/// monic-denominator form over `Q` is available through
/// [`numerator`](Self::numerator) and [`denominator`](Self::denominator).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    /// The variable `q`.
    pub fn q() -> Self {
        RationalFunction {
            num: IntPoly::x(),
            den: IntPoly::one(),
        }
    }

    /// `q^e` for any integer `e`.
    pub fn q_monomial(e: i64) -> Self {
        let mono = IntPoly::monomial(BigInt::one(), e.unsigned_abs() as usize);
        if e >= 0 {
            RationalFunction {
                num: mono,
                den: IntPoly::one(),
            }
        } else {
            RationalFunction {
                num: IntPoly::one(),
                den: mono,
            }
        }
    }

    pub fn constant(c: BigRational) -> Self {
        let (n, d) = c.into_raw();
        RationalFunction {
            num: IntPoly::constant(n),
            den: IntPoly::constant(d),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    /// Builds `numerator / denominator` from rational polynomials.
    pub fn from_polynomials(numerator: &Polynomial, denominator: &Polynomial) -> Result<Self, ArithError> {
        if denominator.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (n, dn) = numerator.clear_denominators();
        let (d, dd) = denominator.clear_denominators();
        // (n / dn) / (d / dd) = (n * dd) / (d * dn)
        Ok(Self::from_int_polys(n.scale(&dd), d.scale(&dn)))
    }

    /// Builds `numerator / denominator` from integer polynomials via a full
    /// gcd reduction.
    pub fn from_int_polys(numerator: IntPoly, denominator: IntPoly) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        let g = numerator.gcd(&denominator);
        if g.is_one() || g.is_zero() {
            Self::finish(numerator, denominator)
        } else {
            Self::finish(
                numerator.div_exact(&g).expect("gcd divides numerator"),
                denominator.div_exact(&g).expect("gcd divides denominator"),
            )
        }
    }

    /// Fixes contents and sign for a pair already coprime over `Q`.
    fn finish(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if c.is_one() {
            RationalFunction { num, den }
        } else {
            RationalFunction {
                num: num.div_scalar_exact(&c),
                den: den.div_scalar_exact(&c),
            }
        }
    }

    /// Numerator of the form with monic denominator.
    pub fn numerator(&self) -> Polynomial {
        let lc = BigRational::from_integer(self.den.leading().unwrap().clone());
        self.num.to_rational().scale(&lc.recip())
    }

    /// Monic denominator.
    pub fn denominator(&self) -> Polynomial {
        self.den.to_rational().monic()
    }

    /// Integer numerator of the internal form.
    pub fn int_numerator(&self) -> &IntPoly {
        &self.num
    }

    /// Integer denominator of the internal form.
    pub fn int_denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
    }

    /// Exact value at a rational point.
    pub fn eval(&self, point: &BigRational) -> Result<BigRational, ArithError> {
        let d = self.den.eval_rational(point);
        if d.is_zero() {
            return Err(ArithError::Pole(format_rational(point)));
        }
        Ok(self.num.eval_rational(point) / d)
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.num.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::finish(self.den.clone(), self.num.clone()))
    }

    /// `self^e`; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let e = u32::try_from(e.unsigned_abs()).expect("exponent fits in u32");
        // Powers of coprime polynomials stay coprime, and so do the contents.
        Ok(RationalFunction {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Self::from_int_polys(&self.num + &rhs.num, self.den.clone());
        }
        // Henrici: with g = gcd(d1, d2) only gcd(num, g) can be nontrivial.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &self.num * &rhs.den + &rhs.num * &self.den;
            return Self::finish(num, &self.den * &rhs.den);
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides denominator");
        let d2 = rhs.den.div_exact(&g).expect("gcd divides denominator");
        let num = &self.num * &d2 + &rhs.num * &d1;
        if num.is_zero() {
            return Self::zero();
        }
        let h = num.gcd(&g);
        if h.is_one() {
            Self::finish(num, &d1 * &rhs.den)
        } else {
            let num = num.div_exact(&h).expect("gcd divides numerator");
            let rest = rhs.den.div_exact(&h).expect("gcd divides denominator");
            Self::finish(num, &d1 * &rest)
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        Self::finish(&n1 * &n2, &d1 * &d2)
    }

    fn neg_impl(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

fn cancel(a: &IntPoly, b: &IntPoly) -> (IntPoly, IntPoly) {
    let g = a.gcd(b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (
            a.div_exact(&g).expect("gcd divides"),
            b.div_exact(&g).expect("gcd divides"),
        )
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.$impl(rhs)
            }
        }
        impl $trait<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                self.$impl(&rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.$impl(rhs)
            }
        }
    };
}

impl RationalFunction {
    fn sub_impl(&self, rhs: &Self) -> Self {
        self.add_impl(&rhs.neg_impl())
    }

    fn div_impl(&self, rhs: &Self) -> Self {
        self.mul_impl(&rhs.recip().expect("division by zero rational function"))
    }
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_impl()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_impl()
    }
}

impl Scalar for RationalFunction {
    fn from_i64(n: i64) -> Self {
        Self::from_integer(n)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.mul_impl(&rhs.recip()?))
    }

    fn try_inv(&self) -> Result<Self, ArithError> {
        self.recip()
    }

    fn powi(&self, e: i64) -> Result<Self, ArithError> {
        self.pow(e)
    }
}

impl From<BigRational> for RationalFunction {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator();
        let den = self.denominator();
        let wrap = |p: &Polynomial| {
            let text = p.to_string();
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({text})")
            } else {
                text
            }
        };
        if den.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "{}/{}", wrap(&num), wrap(&den))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// Coefficients serialize as JSON integers when integral and as `"p/r"`
/// strings otherwise.
fn coeff_values(p: &Polynomial) -> Vec<serde_json::Value> {
    p.coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                match i64::try_from(c.numer()) {
                    Ok(v) => serde_json::Value::from(v),
                    Err(_) => serde_json::Value::String(c.numer().to_string()),
                }
            } else {
                serde_json::Value::String(format_rational(c))
            }
        })
        .collect()
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RationalFunction", 2)?;
        s.serialize_field("num", &coeff_values(&self.numerator()))?;
        s.serialize_field("den", &coeff_values(&self.denominator()))?;
        s.end()
    }
}

#[derive(Deserialize)]
struct RawRationalFunction {
    num: Vec<serde_json::Value>,
    den: Vec<serde_json::Value>,
}

fn parse_coeffs<E: de::Error>(raw: &[serde_json::Value]) -> Result<Polynomial, E> {
    raw.iter()
        .map(|v| match v {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(|i| BigRational::from_integer(i.into()))
                .ok_or_else(|| E::custom(format!("non-integer coefficient {n}"))),
            serde_json::Value::String(s) => parse_rational(s).map_err(E::custom),
            other => Err(E::custom(format!("bad coefficient {other}"))),
        })
        .collect::<Result<Vec<_>, E>>()
        .map(Polynomial::from_coeffs)
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawRationalFunction::deserialize(deserializer)?;
        let num = parse_coeffs(&raw.num)?;
        let den = parse_coeffs(&raw.den)?;
        RationalFunction::from_polynomials(&num, &den).map_err(de::Error::custom)
    }
}
