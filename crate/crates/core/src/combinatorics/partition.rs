use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{guard, Error, Result};

/// Largest `n` for which [`gen_partitions`] will enumerate.
pub const MAX_PARTITION_SIZE: usize = 12;

/// An integer partition: positive, non-increasing parts.
///
/// The derived order is lexicographic on the parts, which refines dominance
/// order; [`gen_partitions`] lists in the reverse of it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(alloc::format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(alloc::format!("parts not non-increasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts a composition (zeros allowed) into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(alloc::vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(alloc::vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The conjugate partition.
    pub fn transpose(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// `n(λ) = Σ_i C(λ'_i, 2)`.
    pub fn nstat(&self) -> usize {
        self.transpose().0.iter().map(|&c| c * c.saturating_sub(1) / 2).sum()
    }

    /// `z_λ = Π_k k^{m_k} m_k!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let mut m = 0;
            while i < self.0.len() && self.0[i] == k {
                m += 1;
                i += 1;
                z *= BigInt::from(k) * BigInt::from(m);
            }
        }
        z
    }

    /// Dominance: `self ≥ other` with equal sizes.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicities `(part, count)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse lexicographic order, e.g.
/// `(3), (2,1), (1,1,1)`.
pub fn gen_partitions(n: usize) -> Result<Vec<Partition>> {
    guard("partition size", n as u64, MAX_PARTITION_SIZE as u64)?;
    Ok(partitions_unguarded(n))
}

pub(crate) fn partitions_unguarded(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
