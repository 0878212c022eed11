use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::{EdgeSet, IndiffGraph};
use super::partition::Partition;
use crate::error::{guard, Error, Result};

/// Edge-count ceiling for materialized orientation lists.
pub const MAX_ORIENTATION_EDGES: usize = 20;

/// An orientation of an indifference graph. Stored as the subset of edges
/// `{i, j}`, `i < j`, that point upward (`i → j`); the rest point down.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Orientation {
    base: IndiffGraph,
    up: EdgeSet,
}

impl Orientation {
    /// Orients every edge of `base` upward exactly when it lies in `up`.
    pub fn new(base: IndiffGraph, up: EdgeSet) -> Result<Self> {
        if !up.is_subset(base.edge_set()) {
            return Err(Error::Invalid(format!("{up} is not inside {base}")));
        }
        Ok(Orientation { base, up })
    }

    /// Builds from ordered pairs `(from, to)` covering each edge exactly once.
    pub fn from_arcs(base: IndiffGraph, arcs: &[(usize, usize)]) -> Result<Self> {
        let n = base.n();
        let mut seen = EdgeSet::empty(n)?;
        let mut up = EdgeSet::empty(n)?;
        for &(a, b) in arcs {
            if !base.contains(a, b) {
                return Err(Error::Invalid(format!("arc ({a},{b}) is not an edge of {base}")));
            }
            if seen.contains(a, b) {
                return Err(Error::Invalid(format!("edge {{{a},{b}}} oriented twice")));
            }
            seen.insert(a, b)?;
            if a < b {
                up.insert(a, b)?;
            }
        }
        if seen != *base.edge_set() {
            return Err(Error::Invalid(String::from("not every edge is oriented")));
        }
        Ok(Orientation { base, up })
    }

    pub fn base(&self) -> &IndiffGraph {
        &self.base
    }

    pub fn up_edges(&self) -> &EdgeSet {
        &self.up
    }

    /// Arcs `(from, to)` in sorted edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .into_iter()
            .map(|(i, j)| if self.up.contains(i, j) { (i, j) } else { (j, i) })
            .collect()
    }

    /// Number of edges of `within` oriented upward.
    pub fn ascents_in(&self, within: &EdgeSet) -> usize {
        (self.up.mask() & within.mask()).count_ones() as usize
    }

    /// Highest vertex reachable from each vertex along increasing paths.
    pub fn hrv_all(&self) -> Vec<usize> {
        hrv_from_up(self.base.n(), &self.up)
    }

    /// Highest vertex reachable from `i` along an increasing path.
    pub fn hrv(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.base.n() {
            return Err(Error::Invalid(format!("vertex {i} outside [{}]", self.base.n())));
        }
        Ok(self.hrv_all()[i - 1])
    }

    /// Fiber sizes of `hrv`, sorted into a partition of `n`.
    pub fn type_of(&self) -> Partition {
        type_from_up(self.base.n(), &self.up)
    }
}

pub(crate) fn hrv_from_up(n: usize, up: &EdgeSet) -> Vec<usize> {
    let mut h = vec![0usize; n + 1];
    for i in (1..=n).rev() {
        let mut best = i;
        for j in i + 1..=n {
            if up.contains(i, j) && h[j] > best {
                best = h[j];
            }
        }
        h[i] = best;
    }
    h.remove(0);
    h
}

pub(crate) fn type_from_up(n: usize, up: &EdgeSet) -> Partition {
    let mut counts = vec![0usize; n + 1];
    for v in hrv_from_up(n, up) {
        counts[v] += 1;
    }
    Partition::from_unsorted(counts)
}

/// All `2^{|E|}` orientations of `gamma`.
pub fn orientations(gamma: &IndiffGraph) -> Result<Vec<Orientation>> {
    guard("edge count", gamma.len() as u64, MAX_ORIENTATION_EDGES as u64)?;
    Ok(gamma
        .edge_set()
        .subsets()
        .map(|up| Orientation { base: *gamma, up })
        .collect())
}
