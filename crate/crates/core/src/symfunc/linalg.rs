//! Small dense matrices over exact coefficient rings, as row vectors.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Ring};

pub(crate) type Matrix<C> = Vec<Vec<C>>;

/// Row vector times matrix.
pub(crate) fn vec_mat<C: Ring, D>(v: &[C], m: &[Vec<D>], lift: impl Fn(&D) -> C) -> Vec<C> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![C::zero(); cols];
    for (vi, row) in v.iter().zip(m) {
        if vi.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            let y = lift(x);
            if !y.is_zero() {
                *o = core::mem::replace(o, C::zero()) + &(vi.clone() * &y);
            }
        }
    }
    out
}

/// Gauss–Jordan inverse over a field.
pub(crate) fn invert<F: Field>(m: &[Vec<F>]) -> Result<Matrix<F>> {
    let n = m.len();
    let mut a: Matrix<F> = m.to_vec();
    let mut inv: Matrix<F> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let s = a[col][col].checked_inv().ok_or(Error::Singular)?;
        for j in 0..n {
            a[col][j] = a[col][j].clone() * &s;
            inv[col][j] = inv[col][j].clone() * &s;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let x = a[col][j].clone() * &f;
                a[r][j] = a[r][j].clone() - &x;
                let y = inv[col][j].clone() * &f;
                inv[r][j] = inv[r][j].clone() - &y;
            }
        }
    }
    Ok(inv)
}

/// Inverse of an upper unitriangular matrix; needs no division.
pub(crate) fn invert_upper_unitriangular<C: Ring>(m: &[Vec<C>]) -> Result<Matrix<C>> {
    let n = m.len();
    for i in 0..n {
        if !m[i][i].is_one() || (0..i).any(|j| !m[i][j].is_zero()) {
            return Err(Error::Singular);
        }
    }
    let mut inv = vec![vec![C::zero(); n]; n];
    for j in 0..n {
        inv[j][j] = C::one();
        for i in (0..j).rev() {
            let mut s = C::zero();
            for k in i + 1..=j {
                if !m[i][k].is_zero() && !inv[k][j].is_zero() {
                    s = s + &(m[i][k].clone() * &inv[k][j]);
                }
            }
            inv[i][j] = -s;
        }
    }
    Ok(inv)
}
