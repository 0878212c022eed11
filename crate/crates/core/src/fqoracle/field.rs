use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{EdgeSet, IndiffGraph, Partition};
use crate::error::{Error, Result};

/// Largest matrix size handled by [`Mat`].
pub const MAX_MATRIX_SIZE: usize = 6;

/// The prime field `F_q`, `q ∈ {2, 3, 5, 7}`. Elements are residues `0..q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fq {
    q: u8,
    inv: [u8; 7],
}

impl Fq {
    pub fn new(q: u64) -> Result<Self> {
        if !matches!(q, 2 | 3 | 5 | 7) {
            return Err(Error::Invalid(format!("q = {q}; supported fields are F_2, F_3, F_5, F_7")));
        }
        let q = q as u8;
        let mut inv = [0u8; 7];
        for a in 1..q {
            inv[a as usize] = (1..q).find(|&b| (a as u16 * b as u16) % q as u16 == 1).unwrap();
        }
        Ok(Fq { q, inv })
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.q as u16) as u8
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }
}

/// An `n × n` matrix over `F_q`, `n ≤ 6`, entries stored row-major in a
/// fixed array.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mat {
    n: u8,
    a: [[u8; MAX_MATRIX_SIZE]; MAX_MATRIX_SIZE],
}

impl Mat {
    pub fn zero(n: usize) -> Result<Self> {
        if n > MAX_MATRIX_SIZE {
            return Err(Error::SizeGuard {
                what: "matrix size",
                limit: MAX_MATRIX_SIZE as u64,
                got: n as u64,
            });
        }
        Ok(Mat { n: n as u8, a: [[0; MAX_MATRIX_SIZE]; MAX_MATRIX_SIZE] })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zero(n)?;
        for i in 0..n {
            m.a[i][i] = 1;
        }
        Ok(m)
    }

    /// Builds from rows; entries are reduced mod `q`.
    pub fn from_rows(f: &Fq, rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zero(n)?;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::Invalid(format!("row {} has length {}, expected {n}", i + 1, r.len())));
            }
            for (j, &x) in r.iter().enumerate() {
                m.a[i][j] = (x % f.q()) as u8;
            }
        }
        Ok(m)
    }

    /// Parses a row-major digit string such as `"110/011/001"`; `/`, `,` and
    /// whitespace separate rows, or the digits may run together when the
    /// length is a perfect square.
    pub fn parse(f: &Fq, s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .chars()
            .filter(|c| !matches!(c, '/' | ',' | ';') && !c.is_whitespace())
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("bad matrix digit `{c}`")))
            })
            .collect::<Result<_>>()?;
        let n = (0..=MAX_MATRIX_SIZE).find(|k| k * k == digits.len()).ok_or_else(|| {
            Error::Parse(format!("{} entries do not form a square matrix", digits.len()))
        })?;
        let mut m = Self::zero(n)?;
        for (k, d) in digits.into_iter().enumerate() {
            if d as u64 >= f.q() {
                return Err(Error::Parse(format!("digit {d} is not a residue mod {}", f.q())));
            }
            m.a[k / n][k % n] = d;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.a[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.a[i - 1][j - 1] = v;
    }

    #[inline]
    pub(crate) fn at(&self, i: usize, j: usize) -> u8 {
        self.a[i][j]
    }

    #[inline]
    pub(crate) fn put(&mut self, i: usize, j: usize, v: u8) {
        self.a[i][j] = v;
    }

    pub fn mul(&self, f: &Fq, other: &Mat) -> Mat {
        let n = self.n();
        let mut out = Mat { n: self.n, a: [[0; MAX_MATRIX_SIZE]; MAX_MATRIX_SIZE] };
        for i in 0..n {
            for k in 0..n {
                let x = self.a[i][k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let y = other.a[k][j];
                    if y != 0 {
                        out.a[i][j] = f.add(out.a[i][j], f.mul(x, y));
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, f: &Fq, other: &Mat) -> Mat {
        let mut out = *self;
        for i in 0..self.n() {
            for j in 0..self.n() {
                out.a[i][j] = f.sub(self.a[i][j], other.a[i][j]);
            }
        }
        out
    }

    /// Inverse by Gauss–Jordan; `None` when singular.
    pub fn inverse(&self, f: &Fq) -> Option<Mat> {
        let n = self.n();
        let mut a = *self;
        let mut inv = Mat::identity(n).expect("size already checked");
        for col in 0..n {
            let piv = (col..n).find(|&r| a.a[r][col] != 0)?;
            a.a.swap(col, piv);
            inv.a.swap(col, piv);
            let s = f.inv(a.a[col][col])?;
            for j in 0..n {
                a.a[col][j] = f.mul(a.a[col][j], s);
                inv.a[col][j] = f.mul(inv.a[col][j], s);
            }
            for r in 0..n {
                let c = a.a[r][col];
                if r == col || c == 0 {
                    continue;
                }
                for j in 0..n {
                    a.a[r][j] = f.sub(a.a[r][j], f.mul(c, a.a[col][j]));
                    inv.a[r][j] = f.sub(inv.a[r][j], f.mul(c, inv.a[col][j]));
                }
            }
        }
        Some(inv)
    }

    /// Upper triangular with ones on the diagonal.
    pub fn is_upper_unitriangular(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| self.a[i][i] == 1 && (0..i).all(|j| self.a[i][j] == 0))
    }

    /// Upper triangular with zeros on the diagonal.
    pub fn is_strictly_upper(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..=i).all(|j| self.a[i][j] == 0))
    }

    /// Zero at every position `(i, j)` with `{i, j}` an edge, `i < j`.
    pub fn vanishes_on(&self, edges: &EdgeSet) -> bool {
        edges.edges().into_iter().all(|(i, j)| self.get(i, j) == 0)
    }

    /// Row-major digits with rows separated by `/`.
    pub fn to_digit_string(&self) -> String {
        let n = self.n();
        let mut s = String::with_capacity(n * (n + 1));
        for i in 0..n {
            if i > 0 {
                s.push('/');
            }
            for j in 0..n {
                s.push(char::from(b'0' + self.a[i][j]));
            }
        }
        s
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_digit_string())
    }
}

/// The unipotent Jordan matrix `J_λ`: blocks of sizes `λ_1, λ_2, ...` down
/// the diagonal, each with ones on its diagonal and superdiagonal.
pub fn jordan(lam: &Partition) -> Result<Mat> {
    let n = lam.size();
    let mut m = Mat::identity(n)?;
    let mut start = 0;
    for &b in lam.parts() {
        for k in start..start + b - 1 {
            m.a[k][k + 1] = 1;
        }
        start += b;
    }
    Ok(m)
}

/// The finest superclass label of `u ∈ UT_n`: all `{i, l}` such that
/// `u_{jk} = 0` whenever `i ≤ j < k ≤ l`.
pub fn superclass_label(u: &Mat) -> Result<IndiffGraph> {
    if !u.is_upper_unitriangular() {
        return Err(Error::Invalid(format!("{u} is not upper unitriangular")));
    }
    Ok(label_unchecked(u))
}

pub(crate) fn label_unchecked(u: &Mat) -> IndiffGraph {
    let n = u.n();
    let mut e = EdgeSet::empty(n).expect("n within bounds");
    // zero[i][l]: the block i..=l above the diagonal vanishes.
    let mut zero = [[false; MAX_MATRIX_SIZE]; MAX_MATRIX_SIZE];
    for span in 1..n {
        for i in 0..n - span {
            let l = i + span;
            let inner = span == 1 || (zero[i + 1][l] && zero[i][l - 1]);
            zero[i][l] = inner && u.a[i][l] == 0;
            if zero[i][l] {
                e.insert(i + 1, l + 1).expect("in range");
            }
        }
    }
    IndiffGraph::new(e).expect("block-zero sets are interval-closed")
}
