//! Homogeneous symmetric functions in the bases `m`, `e`, `h`, `p`, `s`,
//! Hall–Littlewood `P` and its modified form `P̃`.
//!
//! [`SymPoly`] is the common coordinate system (monomial orbit sums). A
//! [`SymFunc`] is a coefficient vector tagged with its [`Basis`]. Basis
//! changes go through [`BasisTables`], which caches the transition matrices
//! per degree.

mod linalg;
mod poly;
mod tables;

use alloc::collections::BTreeMap;
use alloc::format;
use core::fmt;
use core::str::FromStr;

pub use poly::{check_symmetric, SymPoly};
pub use tables::{BasisTables, DegreeTables, MAX_DEGREE};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactnum::{BigRational, LaurentPoly, RatFunc, Ring, Specialize};
use linalg::vec_mat;
use num_traits::One;

/// A basis of the degree-`n` symmetric functions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Basis {
    /// Monomial `m_λ`.
    M,
    /// Elementary `e_λ`.
    E,
    /// Complete homogeneous `h_λ`.
    H,
    /// Power sums `p_λ`.
    P,
    /// Schur `s_λ`.
    S,
    /// Hall–Littlewood `P_λ(x; t)`.
    HLP,
    /// Modified Hall–Littlewood `P̃_λ(x; t) = t^{-n(λ)} P_λ(x; t^{-1})`.
    PT,
}

impl Basis {
    pub const ALL: [Basis; 7] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S, Basis::HLP, Basis::PT];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::E => "E",
            Basis::H => "H",
            Basis::P => "P",
            Basis::S => "S",
            Basis::HLP => "HLP",
            Basis::PT => "PT",
        }
    }

    /// Whether the transition matrix to `m` involves `t`.
    pub fn depends_on_t(self) -> bool {
        matches!(self, Basis::HLP | Basis::PT)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown basis `{s}`")))
    }
}

/// A symmetric function of fixed degree as coefficients on a named basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc<C> {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, C>,
}

impl<C: Ring> SymFunc<C> {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc { degree, basis, coeffs: BTreeMap::new() }
    }

    /// The basis element indexed by `lam`.
    pub fn unit(basis: Basis, lam: Partition) -> Self {
        let degree = lam.size();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lam, C::one());
        SymFunc { degree, basis, coeffs }
    }

    /// Builds from `(λ, c)` pairs; repeated partitions accumulate and zero
    /// coefficients are dropped.
    pub fn new(
        degree: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, C)>,
    ) -> Result<Self> {
        let mut out = Self::zero(degree, basis);
        for (lam, c) in terms {
            if lam.size() != degree {
                return Err(Error::Invalid(format!("partition {lam} in degree {degree}")));
            }
            let cur = out.coeffs.remove(&lam).unwrap_or_else(C::zero);
            let s = cur + &c;
            if !s.is_zero() {
                out.coeffs.insert(lam, s);
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, lam: &Partition) -> C {
        self.coeffs.get(lam).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero coefficients in increasing lexicographic order of partitions.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &C)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> SymFunc<D> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(l, c)| (l.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        SymFunc { degree: self.degree, basis: self.basis, coeffs }
    }

    pub fn try_map<D: Ring>(&self, f: impl Fn(&C) -> Result<D>) -> Result<SymFunc<D>> {
        let mut coeffs = BTreeMap::new();
        for (l, c) in &self.coeffs {
            let d = f(c)?;
            if !d.is_zero() {
                coeffs.insert(l.clone(), d);
            }
        }
        Ok(SymFunc { degree: self.degree, basis: self.basis, coeffs })
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.clone() * c)
    }

    /// Coefficient-wise sum; the operands must share degree and basis.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Self::new(
            self.degree,
            self.basis,
            self.coeffs.iter().chain(&other.coeffs).map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.map(|c| -c.clone()))
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree || self.basis != other.basis {
            return Err(Error::Mismatch(format!(
                "degree {} basis {} against degree {} basis {}",
                self.degree, self.basis, other.degree, other.basis
            )));
        }
        Ok(())
    }

    /// Specializes every coefficient at `t = q`.
    pub fn eval_t(&self, q: &BigRational) -> Result<SymFunc<BigRational>>
    where
        C: Specialize,
    {
        self.try_map(|c| c.eval_at(q))
    }
}

impl<C: Ring> fmt::Display for SymFunc<C> {
    /// `(c)*S(2,1) + ...`, largest partition first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (lam, c)) in self.coeffs.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{}{lam}", self.basis)?;
        }
        Ok(())
    }
}

/// The basis element `b_λ` in monomial coordinates.
pub fn basis_element(tables: &BasisTables, basis: Basis, lam: &Partition) -> Result<SymPoly<RatFunc>> {
    to_monomial_t(tables, &SymFunc::unit(basis, lam.clone()))
}

/// Rewrites `f` in monomial coordinates. `f` must be in a basis without `t`
/// in its transition matrix; see [`to_monomial_t`] otherwise.
pub fn to_monomial<C: Ring>(tables: &BasisTables, f: &SymFunc<C>) -> Result<SymPoly<C>> {
    let dt = tables.degree(f.degree)?;
    let (rows, _) = dt.constant_pair(f.basis)?;
    let v = coeff_vector(dt, f)?;
    Ok(dt.m_vector_to_poly(vec_mat(&v, rows, C::from_rational)))
}

/// [`to_monomial`] for rational-function coefficients, any basis.
pub fn to_monomial_t(tables: &BasisTables, f: &SymFunc<RatFunc>) -> Result<SymPoly<RatFunc>> {
    let dt = tables.degree(f.degree)?;
    let v = coeff_vector(dt, f)?;
    let out = match dt.hl_like_pair(f.basis) {
        Some((rows, _)) => vec_mat(&v, rows, Clone::clone),
        None => vec_mat(&v, &dt.constant_pair(f.basis)?.0, RatFunc::from_rational),
    };
    Ok(dt.m_vector_to_poly(out))
}

/// Coefficients `c` with `Σ c_λ b_λ = f`, for a basis whose transition
/// matrix is free of `t`; see [`expand_in_basis_t`] otherwise.
pub fn expand_in_basis<C: Ring>(tables: &BasisTables, f: &SymPoly<C>, basis: Basis) -> Result<SymFunc<C>> {
    let dt = tables.degree(f.degree())?;
    let (_, inv) = dt.constant_pair(basis)?;
    let v = dt.m_vector(f)?;
    from_vector(dt, basis, vec_mat(&v, inv, C::from_rational))
}

/// [`expand_in_basis`] for rational-function coefficients, any basis.
pub fn expand_in_basis_t(tables: &BasisTables, f: &SymPoly<RatFunc>, basis: Basis) -> Result<SymFunc<RatFunc>> {
    let dt = tables.degree(f.degree())?;
    let v = dt.m_vector(f)?;
    let out = match dt.hl_like_pair(basis) {
        Some((_, inv)) => vec_mat(&v, inv, Clone::clone),
        None => vec_mat(&v, &dt.constant_pair(basis)?.1, RatFunc::from_rational),
    };
    from_vector(dt, basis, out)
}

/// Change of basis between `t`-free bases.
pub fn convert<C: Ring>(tables: &BasisTables, f: &SymFunc<C>, basis: Basis) -> Result<SymFunc<C>> {
    if f.basis == basis {
        return Ok(f.clone());
    }
    expand_in_basis(tables, &to_monomial(tables, f)?, basis)
}

/// Change of basis for rational-function coefficients.
pub fn convert_t(tables: &BasisTables, f: &SymFunc<RatFunc>, basis: Basis) -> Result<SymFunc<RatFunc>> {
    if f.basis == basis {
        return Ok(f.clone());
    }
    expand_in_basis_t(tables, &to_monomial_t(tables, f)?, basis)
}

fn coeff_vector<C: Ring>(dt: &DegreeTables, f: &SymFunc<C>) -> Result<alloc::vec::Vec<C>> {
    let mut v = alloc::vec![C::zero(); dt.partitions().len()];
    for (lam, c) in &f.coeffs {
        v[dt.index_of(lam)?] = c.clone();
    }
    Ok(v)
}

fn from_vector<C: Ring>(dt: &DegreeTables, basis: Basis, v: alloc::vec::Vec<C>) -> Result<SymFunc<C>> {
    SymFunc::new(dt.n(), basis, dt.partitions().iter().cloned().zip(v))
}

/// The involution `ω`: `s_λ ↦ s_{λ'}`, `e ↔ h`, `p_λ ↦ (−1)^{|λ|−ℓ(λ)} p_λ`.
pub fn omega<C: Ring>(f: &SymFunc<C>) -> Result<SymFunc<C>> {
    let terms = f.coeffs.iter().map(|(l, c)| (l.clone(), c.clone()));
    match f.basis {
        Basis::P => Ok(f.map_with_partition(|l, c| {
            if (l.size() - l.len()) % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            }
        })),
        Basis::S => SymFunc::new(f.degree, Basis::S, terms.map(|(l, c)| (l.transpose(), c))),
        Basis::E => SymFunc::new(f.degree, Basis::H, terms),
        Basis::H => SymFunc::new(f.degree, Basis::E, terms),
        b => Err(Error::UnsupportedBasis(b.name())),
    }
}

impl<C: Ring> SymFunc<C> {
    fn map_with_partition(&self, f: impl Fn(&Partition, &C) -> C) -> Self {
        let coeffs = self.coeffs.iter().map(|(l, c)| (l.clone(), f(l, c))).collect();
        SymFunc { degree: self.degree, basis: self.basis, coeffs }
    }
}

/// Plethystic substitution `f ↦ f[x/(t−1)]`: `p_λ ↦ p_λ / Π_i (t^{λ_i} − 1)`.
pub fn plethysm_frac(f: &SymFunc<RatFunc>) -> Result<SymFunc<RatFunc>> {
    if f.basis != Basis::P {
        return Err(Error::UnsupportedBasis(f.basis.name()));
    }
    Ok(f.map_with_partition(|l, c| {
        let den = l
            .parts()
            .iter()
            .fold(LaurentPoly::one(), |acc, &k| &acc * &LaurentPoly::t_pow_minus_one(k as i64));
        c * &RatFunc::new(LaurentPoly::one(), den).expect("nonzero")
    }))
}

/// Value at `x = (1, 0, 0, ...)`.
pub fn ps1<C: Ring>(f: &SymPoly<C>) -> C {
    f.ps1()
}
