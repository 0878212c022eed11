use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{parse_rational, poly, rat, rat_pow, Ring};
use crate::error::{Error, Result};

/// Laurent polynomial in one indeterminate `t` with rational coefficients.
///
/// Canonical form: `coeffs[i]` is the coefficient of `t^(low + i)`, the first
/// and last stored coefficients are nonzero, and zero is the empty vector
/// with `low == 0`. Derived equality is therefore mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn new(low: i64, coeffs: Vec<BigRational>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    /// Polynomial from integer coefficients, constant term first.
    pub fn from_ints(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(0, alloc::vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, exp: i64) -> Self {
        Self::new(exp, alloc::vec![c])
    }

    /// `t^k - 1`, handy for plethystic denominators.
    pub fn t_pow_minus_one(k: i64) -> Self {
        Self::monomial(BigRational::one(), k) - &Self::one()
    }

    fn normalize(&mut self) {
        poly::trim(&mut self.coeffs);
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn high_exp(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        let i = exp - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty() || (self.low == 0 && self.coeffs.len() == 1)
    }

    /// Exact value at `t = q`.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        if self.coeffs.is_empty() {
            return Ok(BigRational::zero());
        }
        if q.is_zero() {
            return if self.low < 0 {
                Err(Error::DivisionByZero)
            } else {
                Ok(self.coeff(0))
            };
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        Ok(acc * rat_pow(q, self.low)?)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The substitution `t -> t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        match self.high_exp() {
            None => self.clone(),
            Some(h) => LaurentPoly {
                low: -h,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|c| c * r).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self;
        }
        acc
    }

    /// Exact quotient in the Laurent ring; errors with the remainder when
    /// `d` does not divide `self`.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (q, r) = poly::divrem(&self.coeffs, &d.coeffs);
        if !r.is_empty() {
            return Err(Error::NotDivisible {
                remainder: format!("{}", LaurentPoly::new(self.low, r)),
            });
        }
        Ok(LaurentPoly::new(self.low - d.low, q))
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// True when this is a polynomial (no negative powers) with nonnegative
    /// integer coefficients.
    pub fn is_nonneg_integer_poly(&self) -> bool {
        self.low >= 0 && self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub(crate) fn raw(&self) -> (i64, &[BigRational]) {
        (self.low, &self.coeffs)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
}

impl Ring for LaurentPoly {
    fn from_rational(r: &BigRational) -> Self {
        Self::constant(r.clone())
    }
}

impl From<BigRational> for LaurentPoly {
    fn from(r: BigRational) -> Self {
        Self::constant(r)
    }
}

fn add_impl(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b.clone() } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.high_exp().unwrap().max(b.high_exp().unwrap());
    let mut coeffs = alloc::vec![BigRational::zero(); (high - low + 1) as usize];
    for (e, c) in a.terms() {
        coeffs[(e - low) as usize] += c;
    }
    for (e, c) in b.terms() {
        if negate_b {
            coeffs[(e - low) as usize] -= c;
        } else {
            coeffs[(e - low) as usize] += c;
        }
    }
    LaurentPoly::new(low, coeffs)
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_impl(self, rhs, false)
    }
}

impl Add<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_impl(&self, rhs, false)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        add_impl(&self, &rhs, false)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = add_impl(self, rhs, false);
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_impl(self, rhs, true)
    }
}

impl Sub<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_impl(&self, rhs, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        add_impl(&self, &rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::new(self.low + rhs.low, poly::mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        &self * rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents: `t^2 + 4*t + 1`, `-3/2*t^-1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (exp, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if exp == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if exp == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{exp}")?;
            }
        }
        Ok(())
    }
}

fn parse_term(term: &str, negative: bool) -> Result<(i64, BigRational)> {
    let bad = || Error::Parse(format!("bad Laurent term `{term}`"));
    let (coef_str, var_str) = match term.find('t') {
        None => (term, None),
        Some(pos) => {
            let (c, v) = term.split_at(pos);
            let c = c.strip_suffix('*').unwrap_or(c);
            (c, Some(v))
        }
    };
    let mut coef = if coef_str.is_empty() {
        if var_str.is_none() {
            return Err(bad());
        }
        BigRational::one()
    } else {
        parse_rational(coef_str).map_err(|_| bad())?
    };
    if negative {
        coef = -coef;
    }
    let exp = match var_str {
        None => 0,
        Some("t") => 1,
        Some(v) => {
            let e = v.strip_prefix("t^").ok_or_else(bad)?;
            let e = e
                .strip_prefix('(')
                .and_then(|x| x.strip_suffix(')'))
                .unwrap_or(e);
            e.parse::<i64>().map_err(|_| bad())?
        }
    };
    Ok((exp, coef))
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Inverse of `Display`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = compact.as_bytes();
        let mut acc = LaurentPoly::zero();
        let mut start = 0;
        let mut negative = false;
        if bytes[0] == b'-' || bytes[0] == b'+' {
            negative = bytes[0] == b'-';
            start = 1;
        }
        let mut i = start;
        let mut depth = 0i32;
        while i <= bytes.len() {
            let at_end = i == bytes.len();
            let split = !at_end
                && depth == 0
                && (bytes[i] == b'+' || bytes[i] == b'-')
                && i > start
                && bytes[i - 1] != b'^'
                && bytes[i - 1] != b'(';
            if !at_end {
                match bytes[i] {
                    b'(' => depth += 1,
                    b')' => depth -= 1,
                    _ => {}
                }
            }
            if at_end || split {
                let (exp, c) = parse_term(&compact[start..i], negative)?;
                acc += &LaurentPoly::monomial(c, exp);
                if !at_end {
                    negative = bytes[i] == b'-';
                    start = i + 1;
                }
            }
            i += 1;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn eval_examples() {
        let f = LaurentPoly::from_ints(0, &[1, 4, 1]);
        assert_eq!(f.eval(&rat(2)).unwrap(), rat(13));
        assert_eq!(LaurentPoly::one().eval(&rat(7)).unwrap(), rat(1));
        let inv_t = LaurentPoly::monomial(rat(1), -1);
        assert_eq!(inv_t.eval(&rat(0)), Err(Error::DivisionByZero));
        assert_eq!(inv_t.eval(&rat(4)).unwrap(), ratio(1, 4));
    }

    #[test]
    fn exact_division() {
        let t2m1 = LaurentPoly::from_ints(0, &[-1, 0, 1]);
        let tm1 = LaurentPoly::from_ints(0, &[-1, 1]);
        assert_eq!(t2m1.exact_div(&tm1).unwrap(), LaurentPoly::from_ints(0, &[1, 1]));
        let t3mt = LaurentPoly::from_ints(0, &[0, -1, 0, 1]);
        assert_eq!(t3mt.exact_div(&LaurentPoly::t()).unwrap(), t2m1);
        let tp1 = LaurentPoly::from_ints(0, &[1, 1]);
        assert!(matches!(tp1.exact_div(&tm1), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn display_and_parse() {
        let f = LaurentPoly::from_ints(0, &[1, 4, 1]);
        assert_eq!(f.to_string(), "t^2 + 4*t + 1");
        let g = LaurentPoly::new(-2, alloc::vec![ratio(-3, 2), rat(0), rat(0), rat(-1)]);
        assert_eq!(g.to_string(), "-t - 3/2*t^-2");
        assert_eq!("-t - 3/2*t^-2".parse::<LaurentPoly>().unwrap(), g);
        assert_eq!("t+1".parse::<LaurentPoly>().unwrap(), LaurentPoly::from_ints(0, &[1, 1]));
        assert_eq!("2*t^(-1) - 5".parse::<LaurentPoly>().unwrap().to_string(), "-5 + 2*t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn inversion_of_variable() {
        let f = LaurentPoly::from_ints(0, &[1, 4, 1]);
        let g = f.invert_variable().shift(2);
        assert_eq!(f, g);
        assert_eq!(LaurentPoly::t().invert_variable(), LaurentPoly::monomial(rat(1), -1));
    }
}
