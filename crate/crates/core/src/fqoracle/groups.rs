use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::field::{label_unchecked, Fq, Mat};
use crate::combinatorics::{gen_indifference, IndiffGraph};
use crate::error::{guard, Error, Result};

/// Default ceiling on `|GL_n(F_q)|` for full enumeration.
pub const GL_DEFAULT_LIMIT: u64 = 2_000_000;

/// Ceiling on `|GL_n(F_q)|` when large enumerations are explicitly allowed.
pub const GL_EXTENDED_LIMIT: u64 = 30_000_000;

/// Ceiling on `|UT_n(F_q)|` for full enumeration.
pub const UT_LIMIT: u64 = 2_000_000;

/// Ceiling on the number of flags `[n]_q!`.
pub const FLAG_LIMIT: u64 = 2_000_000;

fn checked_pow(q: u64, k: usize) -> Option<u64> {
    (0..k).try_fold(1u64, |acc, _| acc.checked_mul(q))
}

/// `|GL_n(F_q)| = Π_{i<n} (q^n − q^i)`, or `None` on overflow.
pub fn gl_order(n: usize, q: u64) -> Option<u64> {
    let qn = checked_pow(q, n)?;
    (0..n).try_fold(1u64, |acc, i| acc.checked_mul(qn - checked_pow(q, i)?))
}

/// `|UT_n(F_q)| = q^{n(n−1)/2}`, or `None` on overflow.
pub fn ut_order(n: usize, q: u64) -> Option<u64> {
    checked_pow(q, n * n.saturating_sub(1) / 2)
}

/// `[n]_q! = Π_{i=1}^{n} (1 + q + ... + q^{i−1})`.
pub fn q_factorial(n: usize, q: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |acc, i| {
        let qi = (0..i).try_fold(0u64, |s, k| s.checked_add(checked_pow(q, k)?))?;
        acc.checked_mul(qi)
    })
}

pub(crate) fn check_gl(n: usize, q: u64, allow_large: bool) -> Result<u64> {
    let limit = if allow_large { GL_EXTENDED_LIMIT } else { GL_DEFAULT_LIMIT };
    let order = gl_order(n, q).unwrap_or(u64::MAX);
    guard("|GL_n(F_q)|", order, limit)?;
    Ok(order)
}

fn check_ut(n: usize, q: u64) -> Result<u64> {
    let order = ut_order(n, q).unwrap_or(u64::MAX);
    guard("|UT_n(F_q)|", order, UT_LIMIT)?;
    Ok(order)
}

/// Calls `visit` on every element of `UT_n(F_q)`.
pub fn for_each_ut(f: &Fq, n: usize, mut visit: impl FnMut(&Mat)) -> Result<()> {
    check_ut(n, f.q())?;
    let positions: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut m = Mat::identity(n)?;
    let q = f.q() as u8;
    loop {
        visit(&m);
        // Odometer step over the strictly upper entries.
        let mut k = 0;
        loop {
            if k == positions.len() {
                return Ok(());
            }
            let (i, j) = positions[k];
            let v = m.at(i, j) + 1;
            if v < q {
                m.put(i, j, v);
                break;
            }
            m.put(i, j, 0);
            k += 1;
        }
    }
}

/// Row vectors of `F_q^n`, indexed by their base-`q` code.
struct VectorSpace {
    n: usize,
    q: u8,
    digits: Vec<[u8; 6]>,
}

impl VectorSpace {
    fn new(f: &Fq, n: usize) -> Self {
        let q = f.q() as u8;
        let size = checked_pow(f.q(), n).expect("bounded by the GL guard") as usize;
        let digits = (0..size)
            .map(|mut c| {
                let mut d = [0u8; 6];
                for slot in d.iter_mut().take(n) {
                    *slot = (c % q as usize) as u8;
                    c /= q as usize;
                }
                d
            })
            .collect();
        VectorSpace { n, q, digits }
    }

    fn size(&self) -> usize {
        self.digits.len()
    }

    fn encode(&self, d: &[u8; 6]) -> usize {
        d[..self.n].iter().rev().fold(0, |acc, &x| acc * self.q as usize + x as usize)
    }

    /// Span of `span ∪ {v}` as a membership table.
    fn extend(&self, f: &Fq, span: &[usize], v: usize) -> (Vec<usize>, Vec<bool>) {
        let mut members = Vec::with_capacity(span.len() * self.q as usize);
        let mut table = vec![false; self.size()];
        let dv = self.digits[v];
        for &s in span {
            let ds = self.digits[s];
            for c in 0..self.q {
                let mut d = [0u8; 6];
                for k in 0..self.n {
                    d[k] = f.add(ds[k], f.mul(c, dv[k]));
                }
                let code = self.encode(&d);
                if !table[code] {
                    table[code] = true;
                    members.push(code);
                }
            }
        }
        (members, table)
    }
}

/// Calls `visit` on every element of `GL_n(F_q)` whose first row has code
/// `first_row` (the base-`q` number with digit `k` equal to entry `k + 1`).
/// Codes run over `1..q^n`; together they partition the group.
pub fn for_each_gl_with_first_row(
    f: &Fq,
    n: usize,
    first_row: usize,
    allow_large: bool,
    mut visit: impl FnMut(&Mat),
) -> Result<()> {
    check_gl(n, f.q(), allow_large)?;
    if n == 0 {
        visit(&Mat::identity(0)?);
        return Ok(());
    }
    let space = VectorSpace::new(f, n);
    if first_row == 0 || first_row >= space.size() {
        return Err(Error::Invalid(alloc::format!(
            "first-row code {first_row} outside 1..{}",
            space.size()
        )));
    }
    let mut m = Mat::zero(n)?;

    fn rec(
        f: &Fq,
        space: &VectorSpace,
        depth: usize,
        span: &[usize],
        in_span: &[bool],
        m: &mut Mat,
        visit: &mut dyn FnMut(&Mat),
    ) {
        let n = space.n;
        for v in 0..space.size() {
            if in_span[v] {
                continue;
            }
            let d = space.digits[v];
            for (k, &x) in d.iter().take(n).enumerate() {
                m.put(depth, k, x);
            }
            if depth + 1 == n {
                visit(m);
            } else {
                let (s, t) = space.extend(f, span, v);
                rec(f, space, depth + 1, &s, &t, m, visit);
            }
        }
    }

    let d = space.digits[first_row];
    for (k, &x) in d.iter().take(n).enumerate() {
        m.put(0, k, x);
    }
    if n == 1 {
        visit(&m);
        return Ok(());
    }
    let (s, t) = space.extend(f, &[0], first_row);
    rec(f, &space, 1, &s, &t, &mut m, &mut visit);
    Ok(())
}

/// Calls `visit` on every element of `GL_n(F_q)`.
pub fn for_each_gl(f: &Fq, n: usize, allow_large: bool, mut visit: impl FnMut(&Mat)) -> Result<()> {
    check_gl(n, f.q(), allow_large)?;
    if n == 0 {
        visit(&Mat::identity(0)?);
        return Ok(());
    }
    let rows = checked_pow(f.q(), n).expect("bounded") as usize;
    for r in 1..rows {
        for_each_gl_with_first_row(f, n, r, allow_large, &mut visit)?;
    }
    Ok(())
}

/// Superclass sizes `|UT_γ°|` by enumeration of `UT_n(F_q)`.
pub fn superclass_sizes(f: &Fq, n: usize) -> Result<BTreeMap<IndiffGraph, u64>> {
    let mut by_mask: BTreeMap<u64, u64> = BTreeMap::new();
    for_each_ut(f, n, |u| *by_mask.entry(label_unchecked(u).edge_set().mask()).or_insert(0) += 1)?;
    Ok(gen_indifference(n)?
        .into_iter()
        .map(|g| {
            let c = by_mask.get(&g.edge_set().mask()).copied().unwrap_or(0);
            (g, c)
        })
        .collect())
}

/// An element whose superclass label is exactly `σ`: ones at every
/// non-edge above the diagonal.
pub fn superclass_representative(sigma: &IndiffGraph) -> Mat {
    let n = sigma.n();
    let mut u = Mat::identity(n).expect("n within bounds");
    for i in 1..=n {
        for j in i + 1..=n {
            if !sigma.contains(i, j) {
                u.set(i, j, 1);
            }
        }
    }
    u
}

/// Canonical representatives of the flags `gB_n`, `B_n` the upper
/// triangular matrices.
///
/// Column `j` has a 1 in its pivot row `r_j`, zeros below `r_j` and in the
/// pivot rows of earlier columns, and arbitrary entries elsewhere above `r_j`.
/// Right multiplication by `B_n` acts by scaling columns and adding earlier
/// columns to later ones, which brings every matrix to exactly one such form.
pub fn flags(f: &Fq, n: usize) -> Result<Vec<Mat>> {
    let count = q_factorial(n, f.q()).unwrap_or(u64::MAX);
    guard("number of flags", count, FLAG_LIMIT)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut m = Mat::zero(n)?;
    let mut used = vec![false; n];

    fn columns(
        f: &Fq,
        n: usize,
        col: usize,
        used: &mut [bool],
        m: &mut Mat,
        out: &mut Vec<Mat>,
    ) {
        if col == n {
            out.push(*m);
            return;
        }
        for r in 0..n {
            if used[r] {
                continue;
            }
            let free: Vec<usize> = (0..r).filter(|&i| !used[i]).collect();
            used[r] = true;
            for i in 0..n {
                m.put(i, col, 0);
            }
            m.put(r, col, 1);
            fill(f, n, col, &free, 0, used, m, out);
            used[r] = false;
        }
        for i in 0..n {
            m.put(i, col, 0);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        f: &Fq,
        n: usize,
        col: usize,
        free: &[usize],
        k: usize,
        used: &mut [bool],
        m: &mut Mat,
        out: &mut Vec<Mat>,
    ) {
        if k == free.len() {
            columns(f, n, col + 1, used, m, out);
            return;
        }
        for v in 0..f.q() as u8 {
            m.put(free[k], col, v);
            fill(f, n, col, free, k + 1, used, m, out);
        }
        m.put(free[k], col, 0);
    }

    columns(f, n, 0, &mut used, &mut m, &mut out);
    Ok(out)
}

/// Number of flags `gB` with `g^{-1} A g` strictly upper triangular and
/// zero at every edge position of `γ`.
pub fn hessenberg_count(f: &Fq, gamma: &IndiffGraph, a: &Mat) -> Result<u64> {
    if a.n() != gamma.n() {
        return Err(Error::Mismatch(alloc::format!(
            "{}×{} matrix against a graph on {} vertices",
            a.n(),
            a.n(),
            gamma.n()
        )));
    }
    let mut count = 0;
    for g in flags(f, gamma.n())? {
        let ginv = g.inverse(f).expect("flag representatives are invertible");
        let y = ginv.mul(f, &a.mul(f, &g));
        if y.is_strictly_upper() && y.vanishes_on(gamma.edge_set()) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use crate::fqoracle::field::{jordan, superclass_label};

    #[test]
    fn orders() {
        assert_eq!(gl_order(2, 2), Some(6));
        assert_eq!(gl_order(4, 2), Some(20160));
        assert_eq!(gl_order(3, 3), Some(11232));
        assert_eq!(ut_order(3, 2), Some(8));
        assert_eq!(q_factorial(3, 2), Some(21));
        assert_eq!(q_factorial(0, 5), Some(1));
    }

    #[test]
    fn enumerations_have_the_right_size() {
        for (n, q) in [(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 5)] {
            let f = Fq::new(q).unwrap();
            let mut count = 0u64;
            let mut distinct = alloc::collections::BTreeSet::new();
            for_each_gl(&f, n, false, |m| {
                assert!(m.inverse(&f).is_some());
                count += 1;
                if n <= 3 {
                    distinct.insert(*m);
                }
            })
            .unwrap();
            assert_eq!(count, gl_order(n, q).unwrap(), "GL_{n}(F_{q})");
            if n <= 3 {
                assert_eq!(distinct.len() as u64, count);
            }
            let mut ut = 0u64;
            for_each_ut(&f, n, |u| {
                assert!(u.is_upper_unitriangular());
                ut += 1;
            })
            .unwrap();
            assert_eq!(ut, ut_order(n, q).unwrap());
        }
    }

    #[test]
    fn gl_guard() {
        let f = Fq::new(2).unwrap();
        let r = for_each_gl(&f, 5, false, |_| {});
        assert!(matches!(r, Err(Error::SizeGuard { .. })));
        let f3 = Fq::new(3).unwrap();
        assert!(check_gl(4, 3, false).is_err());
        assert!(check_gl(4, 3, true).is_ok());
        assert!(for_each_gl_with_first_row(&f3, 2, 0, false, |_| {}).is_err());
    }

    #[test]
    fn superclass_size_identities() {
        for (n, q) in [(2, 2), (3, 2), (4, 2), (3, 3), (4, 3)] {
            let f = Fq::new(q).unwrap();
            let sizes = superclass_sizes(&f, n).unwrap();
            assert_eq!(sizes.values().sum::<u64>(), ut_order(n, q).unwrap());
            for g in sizes.keys() {
                // |UT_γ| = Σ_{σ ⊇ γ} |UT_σ°| = q^{C(n,2) − |E(γ)|}
                let sub: u64 = sizes.iter().filter(|(s, _)| g.is_subgraph_of(s)).map(|(_, c)| c).sum();
                let pattern = ut_order(n, q).unwrap() / q.pow(g.len() as u32);
                assert_eq!(sub, pattern, "{g}");
                assert_eq!(superclass_label(&superclass_representative(g)).unwrap(), *g);
            }
            let edgeless = IndiffGraph::edgeless(n).unwrap();
            let want = (q - 1).pow(n as u32 - 1) * ut_order(n, q).unwrap() / q.pow(n as u32 - 1);
            assert_eq!(sizes[&edgeless], want);
        }
        let f = Fq::new(2).unwrap();
        assert_eq!(superclass_sizes(&f, 3).unwrap()[&IndiffGraph::edgeless(3).unwrap()], 2);
    }

    #[test]
    fn flag_representatives() {
        for (n, q) in [(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (4, 3)] {
            let f = Fq::new(q).unwrap();
            let fl = flags(&f, n).unwrap();
            assert_eq!(fl.len() as u64, q_factorial(n, q).unwrap());
        }
        // Distinct cosets: g1^{-1} g2 is never upper triangular.
        for q in [2, 3] {
            let f = Fq::new(q).unwrap();
            let fl = flags(&f, 3).unwrap();
            for (a, g1) in fl.iter().enumerate() {
                let inv = g1.inverse(&f).unwrap();
                for g2 in &fl[a + 1..] {
                    let h = inv.mul(&f, g2);
                    let upper = (1..=3).all(|i| (1..i).all(|j| h.get(i, j) == 0));
                    assert!(!upper);
                }
            }
        }
    }

    #[test]
    fn hessenberg_trivial_cases() {
        let f = Fq::new(2).unwrap();
        let zero = Mat::zero(2).unwrap();
        assert_eq!(hessenberg_count(&f, &IndiffGraph::edgeless(2).unwrap(), &zero).unwrap(), 3);
        let f3 = Fq::new(3).unwrap();
        let zero = Mat::zero(3).unwrap();
        assert_eq!(hessenberg_count(&f3, &IndiffGraph::edgeless(3).unwrap(), &zero).unwrap(), 52);
        // A regular nilpotent fixes a single full flag.
        let n4 = jordan(&Partition::row(4)).unwrap().sub(&f, &Mat::identity(4).unwrap());
        assert_eq!(hessenberg_count(&f, &IndiffGraph::edgeless(4).unwrap(), &n4).unwrap(), 1);
        assert!(hessenberg_count(&f, &IndiffGraph::edgeless(3).unwrap(), &n4).is_err());
    }
}
