use alloc::format;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{poly, Field, LaurentPoly, Ring};
use crate::error::{Error, Result};

/// Rational function in `t` over the rationals.
///
/// Canonical form: the denominator is a monic polynomial with nonzero
/// constant term, coprime to the numerator; any power of `t` lives in the
/// (Laurent) numerator. Equality is structural on this form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (nlow, n) = num.raw();
        let (dlow, d) = den.raw();
        let g = poly::gcd(n, d);
        let (mut n, mut d) = if g.len() > 1 {
            (poly::divrem(n, &g).0, poly::divrem(d, &g).0)
        } else {
            (n.to_vec(), d.to_vec())
        };
        let lc = d[d.len() - 1].clone();
        if !lc.is_one() {
            let inv = lc.recip();
            for c in n.iter_mut().chain(d.iter_mut()) {
                *c *= &inv;
            }
        }
        RatFunc {
            num: LaurentPoly::new(nlow - dlow, n),
            den: LaurentPoly::new(0, d),
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    /// The exact Laurent polynomial this function equals; errors with the
    /// remainder when the denominator does not divide out.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            // Reduced form: any nontrivial denominator leaves a remainder.
            self.num.exact_div(&self.den)
        }
    }

    /// Exact value at `t = q`.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q)?;
        if d.is_zero() {
            return Err(Error::Pole { at: format!("{q}") });
        }
        let n = self.num.eval(q).map_err(|_| Error::Pole { at: format!("{q}") })?;
        Ok(n / d)
    }

    /// The substitution `t -> t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self::reduced(self.num.invert_variable(), self.den.invert_variable())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        RatFunc {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_laurent(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_laurent(LaurentPoly::one())
    }
}

impl Ring for RatFunc {
    fn from_rational(r: &BigRational) -> Self {
        RatFunc::from_laurent(LaurentPoly::constant(r.clone()))
    }
}

impl Field for RatFunc {
    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduced(self.den.clone(), self.num.clone()))
        }
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_laurent(p)
    }
}

impl From<BigRational> for RatFunc {
    fn from(r: BigRational) -> Self {
        RatFunc::from_laurent(LaurentPoly::constant(r))
    }
}

fn add_impl(a: &RatFunc, b: &RatFunc, negate_b: bool) -> RatFunc {
    if b.is_zero() {
        return a.clone();
    }
    let bn = if negate_b { -b.num.clone() } else { b.num.clone() };
    if a.is_zero() {
        return RatFunc { num: bn, den: b.den.clone() };
    }
    if a.den == b.den {
        return RatFunc::reduced(a.num.clone() + &bn, a.den.clone());
    }
    let num = &a.num * &b.den + &(&bn * &a.den);
    RatFunc::reduced(num, &a.den * &b.den)
}

fn mul_impl(a: &RatFunc, b: &RatFunc) -> RatFunc {
    if a.is_zero() || b.is_zero() {
        return RatFunc::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return RatFunc::from_laurent(&a.num * &b.num);
    }
    RatFunc::reduced(&a.num * &b.num, &a.den * &b.den)
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, rhs, false)
    }
}

impl Add<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        add_impl(&self, rhs, false)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        add_impl(&self, &rhs, false)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, rhs, true)
    }
}

impl Sub<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        add_impl(&self, rhs, true)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        add_impl(&self, &rhs, true)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        mul_impl(self, rhs)
    }
}

impl Mul<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        mul_impl(&self, rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        mul_impl(&self, &rhs)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`Field::checked_inv`] to avoid it.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        mul_impl(self, &rhs.checked_inv().expect("division by zero rational function"))
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for RatFunc {
    /// `num` when the denominator is 1, else `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let mut depth = 1;
            for (i, ch) in rest.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
                if depth == 0 {
                    let num: LaurentPoly = rest[..i].parse()?;
                    let tail = rest[i + 1..].trim();
                    if tail.is_empty() {
                        return Ok(RatFunc::from_laurent(num));
                    }
                    let den = tail
                        .strip_prefix('/')
                        .map(str::trim)
                        .and_then(|d| d.strip_prefix('('))
                        .and_then(|d| d.strip_suffix(')'))
                        .ok_or_else(|| Error::Parse(format!("bad rational function `{s}`")))?;
                    return RatFunc::new(num, den.parse()?);
                }
            }
            return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
        }
        Ok(RatFunc::from_laurent(s.parse()?))
    }
}
