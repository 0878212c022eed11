use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::paths::{gen_dyck, DyckPath};
use crate::error::{guard, Error, Result};

/// Vertex-count ceiling for [`EdgeSet`]; all pairs of `[8]` fit in a `u64`.
pub const MAX_VERTICES: usize = 8;

/// Edge-count ceiling for [`mobius_subgraph`].
pub const MAX_MOBIUS_EDGES: usize = 12;

#[inline]
fn bit(i: usize, j: usize) -> u64 {
    debug_assert!(1 <= i && i < j && j <= MAX_VERTICES);
    1u64 << ((i - 1) * MAX_VERTICES + (j - 1))
}

/// A set of unordered pairs `{i, j}` with `1 ≤ i < j ≤ n`, stored as a
/// bitmask. No structure is assumed; see [`IndiffGraph`] for the
/// interval-closed case.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeSet {
    n: u8,
    mask: u64,
}

impl EdgeSet {
    pub fn empty(n: usize) -> Result<Self> {
        guard("vertex count", n as u64, MAX_VERTICES as u64)?;
        Ok(EdgeSet { n: n as u8, mask: 0 })
    }

    /// The complete graph on `[n]`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut e = Self::empty(n)?;
        for j in 2..=n {
            for i in 1..j {
                e.mask |= bit(i, j);
            }
        }
        Ok(e)
    }

    /// Builds from pairs in either orientation.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut e = Self::empty(n)?;
        for &(a, b) in pairs {
            e.insert(a, b)?;
        }
        Ok(e)
    }

    /// Inverse of [`EdgeSet::mask`]; rejects bits outside `[n]`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        let full = Self::complete(n)?;
        if mask & !full.mask != 0 {
            return Err(Error::Invalid(format!("mask {mask:#x} has bits outside [{n}]")));
        }
        Ok(EdgeSet { n: n as u8, mask })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn insert(&mut self, a: usize, b: usize) -> Result<()> {
        let (i, j) = (a.min(b), a.max(b));
        if i == 0 || i == j || j > self.n() {
            return Err(Error::Invalid(format!("edge {{{a},{b}}} on [{}]", self.n)));
        }
        self.mask |= bit(i, j);
        Ok(())
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let (i, j) = (a.min(b), a.max(b));
        i >= 1 && i < j && j <= self.n() && self.mask & bit(i, j) != 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Edges as sorted pairs `(i, j)`, `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::with_capacity(self.len());
        for i in 1..=n {
            for j in i + 1..=n {
                if self.mask & bit(i, j) != 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.n == other.n && self.mask & !other.mask == 0
    }

    pub fn union(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.same_n(other)?;
        Ok(EdgeSet { n: self.n, mask: self.mask | other.mask })
    }

    pub fn intersection(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.same_n(other)?;
        Ok(EdgeSet { n: self.n, mask: self.mask & other.mask })
    }

    pub fn difference(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.same_n(other)?;
        Ok(EdgeSet { n: self.n, mask: self.mask & !other.mask })
    }

    fn same_n(&self, other: &EdgeSet) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Mismatch(format!(
                "edge sets on [{}] and [{}]",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Interval closure: `{i,l}` present forces every `{j,k}` with
    /// `i ≤ j < k ≤ l`. It suffices to check `{i+1,l}` and `{i,l-1}`.
    pub fn is_interval_closed(&self) -> bool {
        self.closure_violation().is_none()
    }

    fn closure_violation(&self) -> Option<((usize, usize), (usize, usize))> {
        for (i, l) in self.edges() {
            if l - i >= 2 {
                if !self.contains(i + 1, l) {
                    return Some(((i, l), (i + 1, l)));
                }
                if !self.contains(i, l - 1) {
                    return Some(((i, l), (i, l - 1)));
                }
            }
        }
        None
    }

    /// All subsets of this edge set, as edge sets.
    pub fn subsets(&self) -> impl Iterator<Item = EdgeSet> + '_ {
        let full = self.mask;
        let n = self.n;
        // Standard submask walk, ending with the empty set.
        let mut cur = Some(full);
        core::iter::from_fn(move || {
            let m = cur?;
            cur = if m == 0 { None } else { Some((m - 1) & full) };
            Some(EdgeSet { n, mask: m })
        })
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{{i},{j}}}")?;
        }
        write!(f, "}}")
    }
}

/// An indifference graph on `[n]`: an interval-closed edge set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndiffGraph(EdgeSet);

impl IndiffGraph {
    pub fn new(edges: EdgeSet) -> Result<Self> {
        match edges.closure_violation() {
            None => Ok(IndiffGraph(edges)),
            Some(((i, l), (j, k))) => Err(Error::NotIndifference(format!(
                "{{{i},{l}}} present but {{{j},{k}}} missing"
            ))),
        }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(EdgeSet::from_pairs(n, pairs)?)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Ok(IndiffGraph(EdgeSet::empty(n)?))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(IndiffGraph(EdgeSet::complete(n)?))
    }

    pub fn edge_set(&self) -> &EdgeSet {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.0.contains(a, b)
    }

    pub fn is_subgraph_of(&self, other: &IndiffGraph) -> bool {
        self.0.is_subset(&other.0)
    }

    /// For each vertex `j`, the least `i ≤ j` with `{i, j}` an edge (or `j`).
    pub fn min_neighbors(&self) -> Vec<usize> {
        (1..=self.n())
            .map(|j| (1..j).find(|&i| self.contains(i, j)).unwrap_or(j))
            .collect()
    }
}

impl From<IndiffGraph> for EdgeSet {
    fn from(g: IndiffGraph) -> EdgeSet {
        g.0
    }
}

impl fmt::Display for IndiffGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Interval-closure test for an arbitrary edge list on `[n]`.
pub fn is_indifference(n: usize, pairs: &[(usize, usize)]) -> Result<bool> {
    Ok(EdgeSet::from_pairs(n, pairs)?.is_interval_closed())
}

/// Edge-set union of two indifference graphs on the same vertex set.
///
/// Interval-closed sets are closed under union; the result is re-checked
/// and a violation is reported as an error rather than silently accepted.
pub fn union_graphs(a: &IndiffGraph, b: &IndiffGraph) -> Result<IndiffGraph> {
    IndiffGraph::new(a.0.union(&b.0)?)
}

/// All indifference graphs on `[n]`, in the order of [`gen_dyck`].
pub fn gen_indifference(n: usize) -> Result<Vec<IndiffGraph>> {
    gen_dyck(n)?.iter().map(DyckPath::graph).collect()
}

/// Möbius function `μ(σ, γ)` of the poset of indifference graphs on `[n]`
/// with edges inside `E(γ)`, ordered by inclusion.
pub fn mobius_subgraph(gamma: &IndiffGraph) -> Result<BTreeMap<IndiffGraph, i64>> {
    guard("edge count", gamma.len() as u64, MAX_MOBIUS_EDGES as u64)?;
    let mut elems: Vec<IndiffGraph> = gamma
        .0
        .subsets()
        .filter(EdgeSet::is_interval_closed)
        .map(IndiffGraph)
        .collect();
    // Sorting by edge count gives a linear extension, so the zeta matrix is
    // upper unitriangular.
    elems.sort_by_key(|g| (g.len(), g.0.mask));
    let m = elems.len();
    let zeta = |a: usize, b: usize| elems[a].is_subgraph_of(&elems[b]);
    let inv = invert_unitriangular(m, zeta);
    let top = m - 1;
    debug_assert_eq!(elems[top], *gamma);
    Ok(elems
        .iter()
        .enumerate()
        .filter(|&(s, _)| inv[s][top] != 0)
        .map(|(s, g)| (*g, inv[s][top]))
        .collect())
}

/// Inverse of an upper unitriangular 0/1 matrix given by `entry(a, b)`.
fn invert_unitriangular(m: usize, entry: impl Fn(usize, usize) -> bool) -> Vec<Vec<i64>> {
    let mut inv = vec![vec![0i64; m]; m];
    for b in 0..m {
        inv[b][b] = 1;
        // Z · inv[.][b] = e_b, solved upward.
        for a in (0..b).rev() {
            let mut s = 0i64;
            for c in a + 1..=b {
                if entry(a, c) {
                    s += inv[c][b];
                }
            }
            inv[a][b] = -s;
        }
    }
    inv
}

/// Parses an edge list written as `1-2 2-3` or `1-2,2-3`.
pub fn parse_edge_list(n: usize, s: &str) -> Result<EdgeSet> {
    let mut e = EdgeSet::empty(n)?;
    for tok in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let (a, b) = tok
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("bad edge `{tok}`")))?;
        let a: usize = a.parse().map_err(|_| Error::Parse(format!("bad vertex `{a}`")))?;
        let b: usize = b.parse().map_err(|_| Error::Parse(format!("bad vertex `{b}`")))?;
        e.insert(a, b)?;
    }
    Ok(e)
}
