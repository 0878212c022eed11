use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::combinatorics::{partitions_unguarded, Partition};
use crate::error::{Error, Result};
use crate::exactnum::Ring;

/// A homogeneous symmetric polynomial of degree `n` in `n` variables,
/// stored by its coefficients on the monomial orbit sums `m_λ`.
///
/// With as many variables as the degree, every `m_λ` with `|λ| = n` is
/// nonzero, so this is a faithful image of the symmetric function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPoly<C> {
    degree: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Ring> SymPoly<C> {
    pub fn zero(degree: usize) -> Self {
        SymPoly { degree, terms: BTreeMap::new() }
    }

    /// The constant polynomial (degree 0).
    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Partition::empty(), c);
        }
        SymPoly { degree: 0, terms }
    }

    /// `m_λ`.
    pub fn monomial(lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, C::one());
        SymPoly { degree, terms }
    }

    /// Builds from `m`-coefficients; zero entries are dropped.
    pub fn new(degree: usize, terms: impl IntoIterator<Item = (Partition, C)>) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (lam, c) in terms {
            if lam.size() != degree {
                return Err(Error::Invalid(format!(
                    "partition {lam} in a degree {degree} polynomial"
                )));
            }
            out.add_term(lam, c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, lam: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lam) {
            Some(v) => {
                let s = core::mem::replace(v, C::zero()) + &c;
                if s.is_zero() {
                    self.terms.remove(&lam);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(lam, c);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of variables, equal to the degree.
    pub fn nvars(&self) -> usize {
        self.degree
    }

    /// Coefficient of `m_λ`.
    pub fn coeff(&self, lam: &Partition) -> C {
        self.terms.get(lam).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero `(λ, coefficient)` pairs in increasing lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.degree);
        for (lam, v) in &self.terms {
            out.add_term(lam.clone(), v.clone() * c);
        }
        out
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> SymPoly<D> {
        let mut out = SymPoly::zero(self.degree);
        for (lam, v) in &self.terms {
            out.add_term(lam.clone(), f(v));
        }
        out
    }

    pub fn try_map<D: Ring>(&self, f: impl Fn(&C) -> Result<D>) -> Result<SymPoly<D>> {
        let mut out = SymPoly::zero(self.degree);
        for (lam, v) in &self.terms {
            out.add_term(lam.clone(), f(v)?);
        }
        Ok(out)
    }

    /// Product of symmetric functions.
    ///
    /// The coefficient of `x^μ` in `f·g` is `Σ_{α+β=μ} f_α g_β`, with α and β
    /// supported inside the support of μ.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (self.degree, other.degree);
        let n = a + b;
        let mut out = Self::zero(n);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        for mu in partitions_unguarded(n) {
            let mut acc = C::zero();
            let parts = mu.parts();
            let mut alpha = vec![0usize; parts.len()];
            split_compositions(parts, a, 0, &mut alpha, &mut |alpha| {
                let left = Partition::from_unsorted(alpha.to_vec());
                let Some(f) = self.terms.get(&left) else { return };
                let rest: Vec<usize> = parts.iter().zip(alpha).map(|(m, x)| m - x).collect();
                if let Some(g) = other.terms.get(&Partition::from_unsorted(rest)) {
                    acc = core::mem::replace(&mut acc, C::zero()) + &(f.clone() * g);
                }
            });
            out.add_term(mu, acc);
        }
        out
    }

    /// Coefficient of `x_1^n`, i.e. the value at `x = (1, 0, 0, ...)`.
    pub fn ps1(&self) -> C {
        self.coeff(&Partition::row(self.degree))
    }

    /// Builds from a full table of exponent vectors, failing unless the
    /// table is constant on symmetric-group orbits and homogeneous.
    pub fn from_exponent_table(nvars: usize, table: &BTreeMap<Vec<usize>, C>) -> Result<Self> {
        if !check_symmetric(nvars, table) {
            return Err(Error::NotSymmetric);
        }
        let mut degree = None;
        let mut out = BTreeMap::new();
        for (exp, c) in table.iter().filter(|(_, c)| !c.is_zero()) {
            let d: usize = exp.iter().sum();
            if *degree.get_or_insert(d) != d {
                return Err(Error::Invalid(String::from("inhomogeneous exponent table")));
            }
            if nvars < d {
                return Err(Error::Invalid(format!(
                    "{nvars} variables cannot represent degree {d} faithfully"
                )));
            }
            out.insert(Partition::from_unsorted(exp.clone()), c.clone());
        }
        Ok(SymPoly { degree: degree.unwrap_or(nvars), terms: out })
    }
}

/// Enumerates `α` with `0 ≤ α_i ≤ parts_i` and `Σα = target`.
fn split_compositions(
    parts: &[usize],
    target: usize,
    i: usize,
    alpha: &mut [usize],
    emit: &mut dyn FnMut(&[usize]),
) {
    if i == parts.len() {
        if target == 0 {
            emit(alpha);
        }
        return;
    }
    let room: usize = parts[i + 1..].iter().sum();
    let lo = target.saturating_sub(room);
    for x in lo..=parts[i].min(target) {
        alpha[i] = x;
        split_compositions(parts, target - x, i + 1, alpha, emit);
    }
    alpha[i] = 0;
}

/// True when the coefficient table (exponent vectors of length `nvars`) is
/// constant on orbits of the symmetric group. Zero entries count as absent.
pub fn check_symmetric<C: Ring>(nvars: usize, table: &BTreeMap<Vec<usize>, C>) -> bool {
    let mut orbits: BTreeMap<Vec<usize>, (C, u64)> = BTreeMap::new();
    for (exp, c) in table.iter().filter(|(_, c)| !c.is_zero()) {
        if exp.len() != nvars {
            return false;
        }
        let mut key = exp.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        match orbits.get_mut(&key) {
            Some((c0, count)) => {
                if c0 != c {
                    return false;
                }
                *count += 1;
            }
            None => {
                orbits.insert(key, (c.clone(), 1));
            }
        }
    }
    orbits.iter().all(|(key, (_, count))| *count == orbit_size(key))
}

/// Number of distinct rearrangements of `v`.
fn orbit_size(v: &[usize]) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    let mut denom = 1u64;
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        denom *= fact(j - i);
        i = j;
    }
    fact(v.len()) / denom
}

impl<C: Ring> Add for &SymPoly<C> {
    type Output = SymPoly<C>;
    /// Panics if the degrees differ.
    fn add(self, rhs: &SymPoly<C>) -> SymPoly<C> {
        assert_eq!(self.degree, rhs.degree, "adding symmetric polynomials of different degree");
        let mut out = self.clone();
        for (lam, v) in &rhs.terms {
            out.add_term(lam.clone(), v.clone());
        }
        out
    }
}

impl<C: Ring> Sub for &SymPoly<C> {
    type Output = SymPoly<C>;
    /// Panics if the degrees differ.
    fn sub(self, rhs: &SymPoly<C>) -> SymPoly<C> {
        assert_eq!(self.degree, rhs.degree, "subtracting symmetric polynomials of different degree");
        let mut out = self.clone();
        for (lam, v) in &rhs.terms {
            out.add_term(lam.clone(), -v.clone());
        }
        out
    }
}

impl<C: Ring> Neg for SymPoly<C> {
    type Output = SymPoly<C>;
    fn neg(self) -> SymPoly<C> {
        self.map(|c| -c.clone())
    }
}

impl<C: Ring> fmt::Display for SymPoly<C> {
    /// `c*m(2,1) + c*m(1,1,1)`, largest partition first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (lam, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*m{lam}")?;
        }
        Ok(())
    }
}
