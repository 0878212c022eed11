//! Dense univariate polynomials over the rationals, index `i` holding the
//! coefficient of `t^i`. Internal helpers for the Laurent and rational
//! function types.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division; `b` must be nonzero (trimmed).
pub(crate) fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    debug_assert!(b.last().is_some_and(|c| !c.is_zero()));
    let mut rem: Vec<BigRational> = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b[b.len() - 1].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = &rem[rem.len() - 1] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[shift + j] -= &c * bj;
            }
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn make_monic(p: &mut [BigRational]) {
    if let Some(lc) = p.last().cloned() {
        if !lc.is_one() {
            let inv = lc.recip();
            for c in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// Monic gcd; the gcd of two zero polynomials is zero (empty).
pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, mut r) = divrem(&x, &y);
        make_monic(&mut r);
        x = y;
        y = r;
    }
    make_monic(&mut x);
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn p(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&k| rat(k)).collect()
    }

    #[test]
    fn divrem_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let (q, r) = divrem(&p(&[-1, 0, 1]), &p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_empty());
        let (_, r) = divrem(&p(&[1, 1]), &p(&[-1, 1]));
        assert_eq!(r, p(&[2]));
        // gcd(t^2 - 1, t^2 + 2t + 1) = t + 1
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[1, 2, 1])), p(&[1, 1]));
        assert_eq!(gcd(&p(&[2]), &p(&[0, 3])), p(&[1]));
    }
}
