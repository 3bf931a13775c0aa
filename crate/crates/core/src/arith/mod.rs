//! Exact arithmetic over the rationals and the rational-function field `Q(q)`.
//!
//! Everything else in the crate is written against the [`Scalar`] trait so the
//! same formula can be evaluated symbolically (as a [`RationalFunction`]) or
//! numerically at a fixed rational `q` (as a [`BigRational`]). The identity
//! checks use both routes and compare them.

mod poly;
mod rational_function;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use num_rational::BigRational;
pub use poly::{Coefficient, IntPoly, Poly, Polynomial};
pub use rational_function::RationalFunction;

use crate::error::ArithError;

/// A field element usable by every formula in the crate.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_i64(n: i64) -> Self;

    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError>;

    fn try_inv(&self) -> Result<Self, ArithError> {
        Self::one().try_div(self)
    }

    /// Integer power; negative exponents invert first.
    fn powi(&self, e: i64) -> Result<Self, ArithError> {
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        Ok(pow_unsigned(base, e.unsigned_abs()))
    }
}

fn pow_unsigned<F: Scalar>(mut base: F, mut e: u64) -> F {
    let mut acc = F::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * &base;
        }
    }
    acc
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

/// `(-1)^e` as a scalar.
pub fn sign_power<F: Scalar>(e: i64) -> F {
    if e.rem_euclid(2) == 0 {
        F::one()
    } else {
        -F::one()
    }
}

/// Parses `"p"` or `"p/r"` into a reduced rational. Floats are rejected.
pub fn parse_rational(text: &str) -> Result<BigRational, ArithError> {
    let bad = || ArithError::Parse(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Formats a rational as `p` or `p/r`.
pub fn format_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
