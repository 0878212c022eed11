use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::classfn::{ClassFnUT, UnipClassFn};
use super::field::{jordan, label_unchecked, Fq, Mat};
use super::groups::{check_gl, for_each_gl, for_each_gl_with_first_row, ut_order};
use crate::combinatorics::{gen_partitions, IndiffGraph, Partition};
use crate::error::{Error, Result};
use crate::exactnum::BigRational;

/// For each `λ ⊢ n` and superclass label `γ`, the number of `x ∈ GL_n(F_q)`
/// with `x^{-1} J_λ x ∈ UT_γ°`.
///
/// Induction of any superclass function is a weighted sum of these counts,
/// so one enumeration of `GL_n` serves every `φ`. The enumeration splits by
/// first row; partial counts merge by addition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InductionCounts {
    n: usize,
    q: u64,
    jordans: Vec<(Partition, Mat)>,
    counts: BTreeMap<Partition, BTreeMap<u64, u64>>,
}

impl InductionCounts {
    /// Empty counts; checks the `GL_n` guard up front.
    pub fn empty(n: usize, q: u64, allow_large: bool) -> Result<Self> {
        check_gl(n, q, allow_large)?;
        let jordans = gen_partitions(n)?
            .into_iter()
            .map(|l| {
                let j = jordan(&l)?;
                Ok((l, j))
            })
            .collect::<Result<Vec<_>>>()?;
        let counts = jordans.iter().map(|(l, _)| (l.clone(), BTreeMap::new())).collect();
        Ok(InductionCounts { n, q, jordans, counts })
    }

    /// Number of independent chunks. Chunk `k` holds the elements whose
    /// first row has code `k + 1`; for `n = 0` the single chunk is the
    /// trivial group.
    pub fn chunk_count(&self) -> usize {
        if self.n == 0 {
            1
        } else {
            (self.q as usize).pow(self.n as u32) - 1
        }
    }

    fn record(&mut self, f: &Fq, x: &Mat) {
        let xinv = x.inverse(f).expect("enumerated matrices are invertible");
        for (lam, j) in &self.jordans {
            let y = xinv.mul(f, &j.mul(f, x));
            if y.is_upper_unitriangular() {
                let mask = label_unchecked(&y).edge_set().mask();
                *self.counts.get_mut(lam).expect("all partitions present").entry(mask).or_insert(0) += 1;
            }
        }
    }

    /// Adds the contribution of chunk `k`, see [`Self::chunk_count`].
    pub fn accumulate_chunk(&mut self, k: usize, allow_large: bool) -> Result<()> {
        if k >= self.chunk_count() {
            return Err(Error::Invalid(alloc::format!("chunk {k} of {}", self.chunk_count())));
        }
        if self.n == 0 {
            return self.accumulate_all(allow_large);
        }
        let f = Fq::new(self.q)?;
        let n = self.n;
        for_each_gl_with_first_row(&f, n, k + 1, allow_large, |x| self.record(&f, x))
    }

    fn accumulate_all(&mut self, allow_large: bool) -> Result<()> {
        let f = Fq::new(self.q)?;
        let n = self.n;
        for_each_gl(&f, n, allow_large, |x| self.record(&f, x))
    }

    /// Full enumeration on the current thread.
    pub fn compute(n: usize, q: u64, allow_large: bool) -> Result<Self> {
        let mut out = Self::empty(n, q, allow_large)?;
        for k in 0..out.chunk_count() {
            out.accumulate_chunk(k, allow_large)?;
        }
        Ok(out)
    }

    pub fn merge(&mut self, other: &Self) -> Result<()> {
        if self.n != other.n || self.q != other.q {
            return Err(Error::Mismatch(alloc::format!(
                "counts for GL_{}(F_{}) and GL_{}(F_{})",
                self.n, self.q, other.n, other.q
            )));
        }
        for (lam, m) in &other.counts {
            let mine = self.counts.get_mut(lam).expect("same partitions");
            for (k, c) in m {
                *mine.entry(*k).or_insert(0) += c;
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The counts for `J_λ`, keyed by superclass label.
    pub fn counts(&self, lam: &Partition) -> Result<BTreeMap<IndiffGraph, u64>> {
        let m = self
            .counts
            .get(lam)
            .ok_or_else(|| Error::Mismatch(alloc::format!("{lam} is not a partition of {}", self.n)))?;
        m.iter()
            .map(|(&mask, &c)| {
                let e = crate::combinatorics::EdgeSet::from_mask(self.n, mask)?;
                Ok((IndiffGraph::new(e)?, c))
            })
            .collect()
    }

    /// `Ind_{UT_n}^{GL_n} φ` on unipotent classes:
    /// `(1/|UT_n|) Σ_{x^{-1} J_λ x ∈ UT_n} φ(x^{-1} J_λ x)`.
    pub fn induce(&self, phi: &ClassFnUT) -> Result<UnipClassFn> {
        if phi.n() != self.n || phi.q() != self.q {
            return Err(Error::Mismatch(alloc::format!(
                "class function on UT_{}(F_{}) against counts for GL_{}(F_{})",
                phi.n(),
                phi.q(),
                self.n,
                self.q
            )));
        }
        let ut = BigRational::from_integer(ut_order(self.n, self.q).expect("guarded").into());
        let mut out = UnipClassFn::zero(self.n, self.q)?;
        for (lam, v) in out.values_mut() {
            let mut s = BigRational::zero();
            for (g, c) in self.counts(lam)? {
                s += BigRational::from_integer(c.into()) * phi.value(&g)?;
            }
            *v = s / &ut;
        }
        Ok(out)
    }
}

/// One-shot induction; for repeated use build [`InductionCounts`] once.
pub fn induce_to_gl(phi: &ClassFnUT, allow_large: bool) -> Result<UnipClassFn> {
    InductionCounts::compute(phi.n(), phi.q(), allow_large)?.induce(phi)
}

/// `Ind_{UT_γ}^{GL_n} 1` on unipotent classes, counted directly as
/// `#{h ∈ GL_n : h^{-1} J_λ h ∈ UT_γ} / |UT_γ|`.
pub fn induce_trivial_from_pattern(q: u64, gamma: &IndiffGraph, allow_large: bool) -> Result<UnipClassFn> {
    let f = Fq::new(q)?;
    let n = gamma.n();
    let jordans = gen_partitions(n)?
        .into_iter()
        .map(|l| {
            let j = jordan(&l)?;
            Ok((l, j))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut hits = alloc::vec![0u64; jordans.len()];
    for_each_gl(&f, n, allow_large, |h| {
        let hinv = h.inverse(&f).expect("invertible");
        for (k, (_, j)) in jordans.iter().enumerate() {
            let y = hinv.mul(&f, &j.mul(&f, h));
            if y.is_upper_unitriangular() && y.vanishes_on(gamma.edge_set()) {
                hits[k] += 1;
            }
        }
    })?;
    let sub = ut_order(n, q).expect("guarded") / q.pow(gamma.len() as u32);
    let values = jordans
        .into_iter()
        .zip(hits)
        .map(|((l, _), c)| (l, BigRational::new(c.into(), sub.into())))
        .collect();
    UnipClassFn::new(n, q, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::gen_indifference;
    use crate::exactnum::rat;
    use crate::fqoracle::groups::{gl_order, hessenberg_count};

    #[test]
    fn trivial_character_degree_and_small_case() {
        for (n, q) in [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)] {
            let e = IndiffGraph::edgeless(n).unwrap();
            let ind = induce_to_gl(&ClassFnUT::delta_bar(q, &e).unwrap(), false).unwrap();
            let deg = gl_order(n, q).unwrap() / ut_order(n, q).unwrap();
            assert_eq!(*ind.value(&Partition::column(n)).unwrap(), rat(deg as i64));
        }
        // In GL_2(F_2) only I and J_(2) conjugate J_(2) into UT_2, and |UT_2| = 2.
        let ind = induce_to_gl(&ClassFnUT::delta_bar(2, &IndiffGraph::edgeless(2).unwrap()).unwrap(), false).unwrap();
        let counts = InductionCounts::compute(2, 2, false).unwrap();
        assert_eq!(counts.counts(&Partition::row(2)).unwrap().values().sum::<u64>(), 2);
        assert_eq!(*ind.value(&Partition::row(2)).unwrap(), rat(1));
    }

    #[test]
    fn chunked_counts_merge() {
        let whole = InductionCounts::compute(3, 2, false).unwrap();
        let mut parts = InductionCounts::empty(3, 2, false).unwrap();
        assert_eq!(parts.chunk_count(), 7);
        for k in 0..parts.chunk_count() {
            let mut one = InductionCounts::empty(3, 2, false).unwrap();
            one.accumulate_chunk(k, false).unwrap();
            parts.merge(&one).unwrap();
        }
        assert_eq!(parts, whole);
        assert!(parts.clone().accumulate_chunk(7, false).is_err());
        let other = InductionCounts::empty(2, 2, false).unwrap();
        assert!(parts.merge(&other).is_err());
    }

    #[test]
    fn induction_is_linear_and_integral_on_characters() {
        let counts = InductionCounts::compute(3, 3, false).unwrap();
        let ig = gen_indifference(3).unwrap();
        let a = ClassFnUT::chi_super(3, &ig[1]).unwrap();
        let b = ClassFnUT::chi_bar(3, &ig[3]).unwrap();
        let lhs = counts.induce(&a.try_add(&b.scale(&rat(5))).unwrap()).unwrap();
        let rhs = counts.induce(&a).unwrap().try_add(&counts.induce(&b).unwrap().scale(&rat(5))).unwrap();
        assert_eq!(lhs, rhs);
        for g in &ig {
            assert!(counts.induce(&ClassFnUT::chi_super(3, g).unwrap()).unwrap().is_integral());
        }
    }

    #[test]
    fn transitivity_of_induction() {
        for (n, q) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let counts = InductionCounts::compute(n, q, false).unwrap();
            for g in gen_indifference(n).unwrap() {
                let via_ut = counts.induce(&ClassFnUT::chi_bar(q, &g).unwrap()).unwrap();
                let direct = induce_trivial_from_pattern(q, &g, false).unwrap();
                assert_eq!(via_ut, direct, "{g}, q={q}");
                let deg = gl_order(n, q).unwrap() / (ut_order(n, q).unwrap() / q.pow(g.len() as u32));
                assert_eq!(*via_ut.value(&Partition::column(n)).unwrap(), rat(deg as i64));
            }
        }
    }

    #[test]
    fn hessenberg_points_match_induction() {
        for (n, q) in [(3, 2), (3, 3), (4, 2)] {
            let f = Fq::new(q).unwrap();
            let counts = InductionCounts::compute(n, q, false).unwrap();
            for g in gen_indifference(n).unwrap() {
                let ind = counts.induce(&ClassFnUT::chi_bar(q, &g).unwrap()).unwrap();
                for lam in gen_partitions(n).unwrap() {
                    let a = jordan(&lam).unwrap().sub(&f, &Mat::identity(n).unwrap());
                    let h = hessenberg_count(&f, &g, &a).unwrap();
                    let want = (q - 1).pow(n as u32) * q.pow(g.len() as u32) * h;
                    assert_eq!(*ind.value(&lam).unwrap(), rat(want as i64), "{g} {lam} q={q}");
                }
            }
        }
    }

    #[test]
    fn regular_unipotent_class_size() {
        for (n, q) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let f = Fq::new(q).unwrap();
            let j = jordan(&Partition::row(n)).unwrap();
            let mut centralizer = 0u64;
            for_each_gl(&f, n, false, |x| {
                if x.mul(&f, &j) == j.mul(&f, x) {
                    centralizer += 1;
                }
            })
            .unwrap();
            let class = gl_order(n, q).unwrap() / centralizer;
            assert_eq!(class, gl_order(n, q).unwrap() / (q.pow(n as u32 - 1) * (q - 1)));
        }
    }

    #[test]
    fn guards_and_mismatch() {
        assert!(matches!(InductionCounts::empty(5, 2, false), Err(Error::SizeGuard { .. })));
        assert!(InductionCounts::empty(5, 2, true).is_ok());
        let counts = InductionCounts::compute(2, 2, false).unwrap();
        let phi = ClassFnUT::zero(2, 3).unwrap();
        assert!(counts.induce(&phi).is_err());
    }
}
