use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::OnceCell;

use num_traits::{One, Zero};

use super::linalg::{invert, invert_upper_unitriangular, vec_mat, Matrix};
use super::poly::SymPoly;
use super::Basis;
use crate::combinatorics::{partitions_unguarded, Partition};
use crate::error::{guard, Error, Result};
use crate::exactnum::{BigRational, LaurentPoly, RatFunc, Ring};

/// Largest degree for which basis tables are built.
pub const MAX_DEGREE: usize = 8;

/// Lazily built change-of-basis tables, one set per degree.
///
/// Not `Sync`: each thread keeps its own instance.
#[derive(Default)]
pub struct BasisTables {
    degrees: [OnceCell<DegreeTables>; MAX_DEGREE + 1],
}

impl BasisTables {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn degree(&self, n: usize) -> Result<&DegreeTables> {
        guard("symmetric function degree", n as u64, MAX_DEGREE as u64)?;
        Ok(self.degrees[n].get_or_init(|| DegreeTables::new(n)))
    }
}

type Pair<C> = (Matrix<C>, Matrix<C>);

/// Tables for one degree `n`. Row `i` of a basis matrix holds the
/// `m`-coordinates of the basis element indexed by `partitions()[i]`; the
/// paired matrix is its inverse.
pub struct DegreeTables {
    n: usize,
    parts: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    constant: [OnceCell<Pair<BigRational>>; 5],
    hl: OnceCell<Pair<RatFunc>>,
    pt: OnceCell<Pair<RatFunc>>,
}

impl DegreeTables {
    fn new(n: usize) -> Self {
        let parts = partitions_unguarded(n);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        DegreeTables {
            n,
            parts,
            index,
            constant: Default::default(),
            hl: OnceCell::new(),
            pt: OnceCell::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n` in reverse lexicographic order.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, lam: &Partition) -> Result<usize> {
        self.index
            .get(lam)
            .copied()
            .ok_or_else(|| Error::Invalid(alloc::format!("{lam} is not a partition of {}", self.n)))
    }

    /// Row vector of `m`-coefficients.
    pub(crate) fn m_vector<C: Ring>(&self, f: &SymPoly<C>) -> Result<Vec<C>> {
        if f.degree() != self.n {
            return Err(Error::Mismatch(alloc::format!(
                "degree {} against tables for degree {}",
                f.degree(),
                self.n
            )));
        }
        let mut v = vec![C::zero(); self.parts.len()];
        for (lam, c) in f.terms() {
            v[self.index[lam]] = c.clone();
        }
        Ok(v)
    }

    pub(crate) fn m_vector_to_poly<C: Ring>(&self, v: Vec<C>) -> SymPoly<C> {
        SymPoly::new(self.n, self.parts.iter().cloned().zip(v)).expect("sizes match")
    }

    /// Rows and inverse for a basis with rational entries.
    pub(crate) fn constant_pair(&self, basis: Basis) -> Result<&Pair<BigRational>> {
        let slot = match basis {
            Basis::M => 0,
            Basis::E => 1,
            Basis::H => 2,
            Basis::P => 3,
            Basis::S => 4,
            Basis::HLP | Basis::PT => return Err(Error::UnsupportedBasis(basis.name())),
        };
        Ok(self.constant[slot].get_or_init(|| {
            let rows = self.constant_rows(basis);
            let inv = invert(&rows).expect("bases are invertible");
            (rows, inv)
        }))
    }

    /// Borrowing access when the basis is a Hall–Littlewood one.
    pub(crate) fn hl_like_pair(&self, basis: Basis) -> Option<&Pair<RatFunc>> {
        match basis {
            Basis::HLP => Some(self.hl_pair()),
            Basis::PT => Some(self.pt_pair()),
            _ => None,
        }
    }

    fn constant_rows(&self, basis: Basis) -> Matrix<BigRational> {
        let n = self.n;
        match basis {
            Basis::M => (0..self.parts.len())
                .map(|i| (0..self.parts.len()).map(|j| int(i64::from(i == j))).collect())
                .collect(),
            Basis::E => self.product_rows(|k| SymPoly::monomial(Partition::column(k))),
            Basis::H => self.product_rows(|k| {
                SymPoly::new(k, partitions_unguarded(k).into_iter().map(|p| (p, int(1))))
                    .expect("sizes match")
            }),
            Basis::P => self.product_rows(|k| SymPoly::monomial(Partition::row(k))),
            Basis::S => {
                let (e_rows, _) = self.constant_pair(Basis::E).expect("E is constant");
                self.parts
                    .iter()
                    .map(|lam| {
                        let mut row = vec![int(0); self.parts.len()];
                        for (nu, c) in schur_in_e(lam) {
                            let r = &e_rows[self.index[&nu]];
                            for (x, y) in row.iter_mut().zip(r) {
                                *x += y * int(c);
                            }
                        }
                        row
                    })
                    .collect()
            }
            Basis::HLP | Basis::PT => unreachable!("not a constant basis at degree {n}"),
        }
    }

    /// Rows of `b_λ = Π b_{λ_i}` for a multiplicative basis.
    fn product_rows(&self, single: impl Fn(usize) -> SymPoly<BigRational>) -> Matrix<BigRational> {
        let singles: Vec<SymPoly<BigRational>> = (0..=self.n).map(&single).collect();
        self.parts
            .iter()
            .map(|lam| {
                let f = lam
                    .parts()
                    .iter()
                    .fold(SymPoly::constant(int(1)), |acc, &k| acc.mul(&singles[k]));
                self.m_vector(&f).expect("degree matches")
            })
            .collect()
    }

    fn hl_pair(&self) -> &Pair<RatFunc> {
        self.hl.get_or_init(|| {
            let rows = self.hall_littlewood_rows();
            let inv = invert_upper_unitriangular(&rows).expect("unitriangular");
            (rows, inv)
        })
    }

    /// `P̃_λ(t) = t^{-n(λ)} P_λ(t^{-1})`; the inverse follows by the same
    /// substitution applied to the inverse of the `P` table.
    fn pt_pair(&self) -> &Pair<RatFunc> {
        self.pt.get_or_init(|| {
            let (rows, inv) = self.hl_pair();
            let shifts: Vec<i64> = self.parts.iter().map(|l| l.nstat() as i64).collect();
            let rows = rows
                .iter()
                .zip(&shifts)
                .map(|(r, &s)| r.iter().map(|c| c.invert_variable().shift(-s)).collect())
                .collect();
            let inv = inv
                .iter()
                .map(|r| {
                    r.iter()
                        .zip(&shifts)
                        .map(|(c, &s)| c.invert_variable().shift(s))
                        .collect()
                })
                .collect();
            (rows, inv)
        })
    }

    /// Hall–Littlewood `P_λ` by Gram–Schmidt in power-sum coordinates,
    /// where the `t`-deformed inner product is diagonal.
    ///
    /// Partitions are taken in increasing lexicographic order, a linear
    /// extension of dominance. The result is then checked to be unitriangular
    /// with respect to dominance itself.
    fn hall_littlewood_rows(&self) -> Matrix<RatFunc> {
        let (p_rows, p_inv) = self.constant_pair(Basis::P).expect("P is constant");
        let weights: Vec<RatFunc> = self.parts.iter().map(hl_weight).collect();
        let ip = |u: &[RatFunc], w: &[RatFunc]| {
            let mut s = RatFunc::zero();
            for ((a, b), c) in u.iter().zip(w).zip(&weights) {
                if !a.is_zero() && !b.is_zero() {
                    s = s + &(a.clone() * b * c);
                }
            }
            s
        };
        let len = self.parts.len();
        let mut ortho: Vec<Option<(Vec<RatFunc>, RatFunc)>> = vec![None; len];
        for i in (0..len).rev() {
            let m_lam: Vec<RatFunc> = p_inv[i].iter().map(RatFunc::from_rational).collect();
            let mut v = m_lam.clone();
            for (pj, norm) in ortho[i + 1..].iter().flatten() {
                let c = &ip(&m_lam, pj) / norm;
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(pj) {
                    *x = x.clone() - &(c.clone() * y);
                }
            }
            let norm = ip(&v, &v);
            ortho[i] = Some((v, norm));
        }
        let rows: Matrix<RatFunc> = ortho
            .into_iter()
            .map(|o| {
                let (v, _) = o.expect("all processed");
                vec_mat(&v, p_rows, RatFunc::from_rational)
            })
            .collect();
        for (i, row) in rows.iter().enumerate() {
            assert!(row[i].is_one(), "Hall–Littlewood leading coefficient");
            for (j, c) in row.iter().enumerate() {
                if j != i && !c.is_zero() {
                    assert!(
                        self.parts[i].dominates(&self.parts[j]),
                        "Hall–Littlewood triangularity"
                    );
                }
            }
        }
        rows
    }
}

fn int(k: i64) -> BigRational {
    crate::exactnum::rat(k)
}

/// `⟨p_ν, p_ν⟩_t = z_ν / Π_i (1 − t^{ν_i})`.
fn hl_weight(nu: &Partition) -> RatFunc {
    let den = nu.parts().iter().fold(LaurentPoly::one(), |acc, &k| {
        &acc * &(LaurentPoly::one() - &LaurentPoly::monomial(int(1), k as i64))
    });
    let z = LaurentPoly::constant(BigRational::from_integer(nu.z()));
    RatFunc::new(z, den).expect("nonzero denominator")
}

/// `s_λ = det(e_{λ'_i − i + j})`, expanded as an integer combination of
/// products `e_ν`.
pub(crate) fn schur_in_e(lam: &Partition) -> BTreeMap<Partition, i64> {
    let conj = lam.transpose();
    let l = conj.len();
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut chosen = Vec::with_capacity(l);
    fn rec(
        conj: &[usize],
        row: usize,
        used: u32,
        sign: i64,
        chosen: &mut Vec<usize>,
        out: &mut BTreeMap<Partition, i64>,
    ) {
        let l = conj.len();
        if row == l {
            let nu = Partition::from_unsorted(chosen.clone());
            *out.entry(nu).or_insert(0) += sign;
            return;
        }
        for col in 0..l {
            if used & (1 << col) != 0 {
                continue;
            }
            let k = conj[row] as i64 - row as i64 + col as i64;
            if k < 0 {
                continue;
            }
            let inversions = (used >> col).count_ones();
            let s = if inversions % 2 == 0 { sign } else { -sign };
            chosen.push(k as usize);
            rec(conj, row + 1, used | (1 << col), s, chosen, out);
            chosen.pop();
        }
    }
    rec(conj.parts(), 0, 0, 1, &mut chosen, &mut out);
    debug_assert!(l < 32);
    out.retain(|_, c| *c != 0);
    out
}
