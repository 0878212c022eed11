//! Exact arithmetic: big rationals, Laurent polynomials in `t`, and rational
//! functions in `t`.
//!
//! All symbolic work in the crate is generic over [`Ring`], which the three
//! coefficient types implement. Rational functions additionally form a
//! [`Field`], as do the rationals.

mod laurent;
mod poly;
mod ratfunc;

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// Commutative ring with a unital embedding of the rationals.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(r: &BigRational) -> Self;

    fn from_int(k: i64) -> Self {
        Self::from_rational(&rat(k))
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring {
    fn checked_inv(&self) -> Option<Self>;
}

impl Ring for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Field for BigRational {
    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Exact specialization `t = q` of a coefficient.
pub trait Specialize {
    fn eval_at(&self, q: &BigRational) -> Result<BigRational>;
}

impl Specialize for BigRational {
    fn eval_at(&self, _q: &BigRational) -> Result<BigRational> {
        Ok(self.clone())
    }
}

impl Specialize for LaurentPoly {
    fn eval_at(&self, q: &BigRational) -> Result<BigRational> {
        self.eval(q)
    }
}

impl Specialize for RatFunc {
    fn eval_at(&self, q: &BigRational) -> Result<BigRational> {
        self.eval(q)
    }
}

/// Shorthand for the rational `k/1`.
pub fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Shorthand for the rational `p/q`.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `base^exp` for a possibly negative exponent.
pub fn rat_pow(base: &BigRational, exp: i64) -> Result<BigRational> {
    if exp < 0 && base.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut acc = BigRational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    Ok(if exp < 0 { acc.recip() } else { acc })
}

/// True when `r` is an integer.
pub fn is_integral(r: &BigRational) -> bool {
    r.is_integer()
}

/// True when `r` is a nonnegative integer.
pub fn is_nonneg_integer(r: &BigRational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}

/// Parses `p` or `p/q` (optional sign, optional surrounding whitespace).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(alloc::format!("bad rational `{s}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(alloc::format!("bad rational `{s}`")))?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}
