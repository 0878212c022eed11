use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use core::fmt;

use num_traits::{One, Zero};

use super::field::{superclass_label, Fq, Mat};
use super::groups::{for_each_ut, superclass_sizes, ut_order};
use crate::combinatorics::{
    gen_indifference, gen_partitions, mobius_subgraph, DyckPath, IndiffGraph, Partition, SchroderPath,
};
use crate::error::{guard, Error, Result};
use crate::exactnum::{rat, rat_pow, BigRational};

/// Vertex ceiling for superclass functions.
pub const MAX_SCF_SIZE: usize = 5;

/// A superclass function of `UT_n(F_q)`, stored by its value on each
/// superclass `UT_γ°`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFnUT {
    n: usize,
    q: u64,
    values: BTreeMap<IndiffGraph, BigRational>,
}

impl ClassFnUT {
    pub fn from_fn(n: usize, q: u64, f: impl Fn(&IndiffGraph) -> BigRational) -> Result<Self> {
        guard("superclass function size", n as u64, MAX_SCF_SIZE as u64)?;
        Fq::new(q)?;
        let values = gen_indifference(n)?.into_iter().map(|g| {
            let v = f(&g);
            (g, v)
        });
        Ok(ClassFnUT { n, q, values: values.collect() })
    }

    pub fn zero(n: usize, q: u64) -> Result<Self> {
        Self::from_fn(n, q, |_| BigRational::zero())
    }

    /// Builds from explicit values; the keys must be exactly `IG_n`.
    pub fn new(n: usize, q: u64, values: BTreeMap<IndiffGraph, BigRational>) -> Result<Self> {
        let mut out = Self::zero(n, q)?;
        if values.len() != out.values.len() || !values.keys().all(|g| out.values.contains_key(g)) {
            return Err(Error::Invalid(format!("values must be indexed by all of IG_{n}")));
        }
        out.values = values;
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Value on the superclass `UT_γ°`.
    pub fn value(&self, gamma: &IndiffGraph) -> Result<&BigRational> {
        self.values
            .get(gamma)
            .ok_or_else(|| Error::Mismatch(format!("{gamma} is not a graph on {} vertices", self.n)))
    }

    /// Value at a group element, through its superclass label.
    pub fn value_at(&self, u: &Mat) -> Result<&BigRational> {
        self.value(&superclass_label(u)?)
    }

    pub fn values(&self) -> impl Iterator<Item = (&IndiffGraph, &BigRational)> {
        self.values.iter()
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.q != other.q {
            return Err(Error::Mismatch(format!(
                "class functions on UT_{}(F_{}) and UT_{}(F_{})",
                self.n, self.q, other.n, other.q
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut out = self.clone();
        for (g, v) in out.values.iter_mut() {
            *v += &other.values[g];
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = self.clone();
        for v in out.values.values_mut() {
            *v *= c;
        }
        out
    }

    /// Indicator `δ_γ` of the superclass `UT_γ°`.
    pub fn delta(q: u64, gamma: &IndiffGraph) -> Result<Self> {
        Self::from_fn(gamma.n(), q, |s| indicator(s == gamma))
    }

    /// `δ̄_γ = Σ_{σ ⊇ γ} δ_σ`, the indicator of `UT_γ`.
    pub fn delta_bar(q: u64, gamma: &IndiffGraph) -> Result<Self> {
        Self::from_fn(gamma.n(), q, |s| indicator(gamma.is_subgraph_of(s)))
    }

    /// `χ̄^γ = q^{|E(γ)|} δ̄_γ`, the permutation character of `UT_n` on
    /// the cosets of `UT_γ`.
    pub fn chi_bar(q: u64, gamma: &IndiffGraph) -> Result<Self> {
        let w = rat_pow(&rat(q as i64), gamma.len() as i64)?;
        Ok(Self::delta_bar(q, gamma)?.scale(&w))
    }

    /// Supercharacter `χ^γ = Σ_{σ ⊆ γ} μ(σ, γ) χ̄^σ`.
    pub fn chi_super(q: u64, gamma: &IndiffGraph) -> Result<Self> {
        let mut out = Self::zero(gamma.n(), q)?;
        for (sigma, mu) in mobius_subgraph(gamma)? {
            out = out.try_add(&Self::chi_bar(q, &sigma)?.scale(&rat(mu)))?;
        }
        Ok(out)
    }

    /// `ψ^σ = Σ_{S ⊆ Diag(σ)} (−1)^{|Diag(σ) ∖ S|} χ̄^{Area(σ) ∪ S}`.
    pub fn psi_pseudo(q: u64, sigma: &SchroderPath) -> Result<Self> {
        let area = sigma.area();
        let diag = sigma.diag();
        let mut out = Self::zero(sigma.size(), q)?;
        for s in diag.subsets() {
            let g = IndiffGraph::new(area.union(&s)?)?;
            let sign = if (diag.len() - s.len()) % 2 == 0 { 1 } else { -1 };
            out = out.try_add(&Self::chi_bar(q, &g)?.scale(&rat(sign)))?;
        }
        Ok(out)
    }

    /// Whether every value is an integer.
    pub fn is_integral(&self) -> bool {
        self.values.values().all(|v| v.is_integer())
    }
}

fn indicator(b: bool) -> BigRational {
    if b {
        BigRational::one()
    } else {
        BigRational::zero()
    }
}

impl fmt::Display for ClassFnUT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: alloc::vec::Vec<String> =
            self.values.iter().map(|(g, v)| format!("{g}: {v}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Whether `ψ^{Mesa(π)} = χ^{Graph(π)}`.
pub fn psi_mesa_check(q: u64, pi: &DyckPath) -> Result<bool> {
    let lhs = ClassFnUT::psi_pseudo(q, &pi.mesa())?;
    let rhs = ClassFnUT::chi_super(q, &pi.graph()?)?;
    Ok(lhs == rhs)
}

/// `⟨φ, ψ⟩ = (1/|UT_n|) Σ_γ |UT_γ°| φ(γ) ψ(γ)`; all values here are
/// rational, so no conjugation is needed.
pub fn inner_product_ut(phi: &ClassFnUT, psi: &ClassFnUT) -> Result<BigRational> {
    phi.same_group(psi)?;
    let f = Fq::new(phi.q)?;
    let sizes = superclass_sizes(&f, phi.n)?;
    let mut s = BigRational::zero();
    for (g, c) in &sizes {
        s += rat(*c as i64) * &phi.values[g] * &psi.values[g];
    }
    Ok(s / rat(ut_order(phi.n, phi.q).expect("guarded") as i64))
}

/// The permutation character of `UT_n` on `UT_n / UT_γ`, counted directly:
/// `g ↦ #{h ∈ UT_n : h^{-1} g h ∈ UT_γ} / |UT_γ|`, evaluated at one
/// representative per superclass.
pub fn coset_permutation_character(q: u64, gamma: &IndiffGraph) -> Result<ClassFnUT> {
    let f = Fq::new(q)?;
    let n = gamma.n();
    let mut group = alloc::vec::Vec::new();
    for_each_ut(&f, n, |h| group.push((*h, h.inverse(&f).expect("unitriangular"))))?;
    let sub_order = ut_order(n, q).expect("guarded") / q.pow(gamma.len() as u32);
    let mut out = ClassFnUT::zero(n, q)?;
    for (sigma, v) in out.values.iter_mut() {
        let g = super::groups::superclass_representative(sigma);
        let hits = group
            .iter()
            .filter(|(h, hinv)| hinv.mul(&f, &g.mul(&f, h)).vanishes_on(gamma.edge_set()))
            .count();
        *v = BigRational::new((hits as i64).into(), (sub_order as i64).into());
    }
    Ok(out)
}

/// A class function of `GL_n(F_q)` restricted to the unipotent classes,
/// stored by Jordan type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnipClassFn {
    n: usize,
    q: u64,
    values: BTreeMap<Partition, BigRational>,
}

impl UnipClassFn {
    pub fn zero(n: usize, q: u64) -> Result<Self> {
        Fq::new(q)?;
        let values = gen_partitions(n)?.into_iter().map(|l| (l, BigRational::zero())).collect();
        Ok(UnipClassFn { n, q, values })
    }

    /// Builds from explicit values; the keys must be exactly the partitions of `n`.
    pub fn new(n: usize, q: u64, values: BTreeMap<Partition, BigRational>) -> Result<Self> {
        let mut out = Self::zero(n, q)?;
        if values.len() != out.values.len() || !values.keys().all(|l| out.values.contains_key(l)) {
            return Err(Error::Invalid(format!("values must be indexed by all partitions of {n}")));
        }
        out.values = values;
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Value at the class of `J_λ`.
    pub fn value(&self, lam: &Partition) -> Result<&BigRational> {
        self.values
            .get(lam)
            .ok_or_else(|| Error::Mismatch(format!("{lam} is not a partition of {}", self.n)))
    }

    pub fn values(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.values.iter()
    }

    pub(crate) fn values_mut(&mut self) -> impl Iterator<Item = (&Partition, &mut BigRational)> {
        self.values.iter_mut()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.q != other.q {
            return Err(Error::Mismatch(format!(
                "unipotent class functions for GL_{}(F_{}) and GL_{}(F_{})",
                self.n, self.q, other.n, other.q
            )));
        }
        let mut out = self.clone();
        for (l, v) in out.values.iter_mut() {
            *v += &other.values[l];
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = self.clone();
        for v in out.values.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.values.values().all(|v| v.is_integer())
    }
}

impl fmt::Display for UnipClassFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: alloc::vec::Vec<String> =
            self.values.iter().map(|(l, v)| format!("{l}: {v}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::gen_dyck;

    fn g(n: usize, e: &[(usize, usize)]) -> IndiffGraph {
        IndiffGraph::from_pairs(n, e).unwrap()
    }

    #[test]
    fn bar_functions() {
        for q in [2, 3] {
            for n in 1..=4 {
                let e = IndiffGraph::edgeless(n).unwrap();
                let d = ClassFnUT::delta_bar(q, &e).unwrap();
                assert!(d.values().all(|(_, v)| v.is_one()));
                for gamma in gen_indifference(n).unwrap() {
                    let c = ClassFnUT::chi_bar(q, &gamma).unwrap();
                    let at_one = c.value(&IndiffGraph::complete(n).unwrap()).unwrap();
                    assert_eq!(*at_one, rat(q.pow(gamma.len() as u32) as i64));
                    let id = Mat::identity(n).unwrap();
                    assert_eq!(c.value_at(&id).unwrap(), at_one);
                }
            }
        }
    }

    #[test]
    fn permutation_character_by_coset_counting() {
        for q in [2, 3] {
            for n in 1..=3 {
                for gamma in gen_indifference(n).unwrap() {
                    let direct = coset_permutation_character(q, &gamma).unwrap();
                    assert_eq!(direct, ClassFnUT::chi_bar(q, &gamma).unwrap(), "{gamma}, q={q}");
                }
            }
        }
        for gamma in gen_indifference(4).unwrap() {
            let direct = coset_permutation_character(2, &gamma).unwrap();
            assert_eq!(direct, ClassFnUT::chi_bar(2, &gamma).unwrap());
        }
    }

    #[test]
    fn supercharacter_mobius_round_trip() {
        for q in [2, 3] {
            for gamma in gen_indifference(4).unwrap() {
                let mut sum = ClassFnUT::zero(4, q).unwrap();
                for sigma in gen_indifference(4).unwrap() {
                    if sigma.is_subgraph_of(&gamma) {
                        sum = sum.try_add(&ClassFnUT::chi_super(q, &sigma).unwrap()).unwrap();
                    }
                }
                assert_eq!(sum, ClassFnUT::chi_bar(q, &gamma).unwrap());
            }
        }
    }

    #[test]
    fn supercharacters_are_orthogonal_characters() {
        for q in [2, 3] {
            let ig = gen_indifference(3).unwrap();
            for a in &ig {
                let ca = ClassFnUT::chi_super(q, a).unwrap();
                assert!(ca.is_integral());
                for b in &ig {
                    let ip = inner_product_ut(&ca, &ClassFnUT::chi_super(q, b).unwrap()).unwrap();
                    if a != b {
                        assert!(ip.is_zero(), "{a} {b}");
                    } else {
                        // Norms are positive integers.
                        assert!(ip.is_integer() && ip > rat(0));
                    }
                }
            }
        }
    }

    #[test]
    fn delta_inner_products() {
        let q = 2;
        let f = Fq::new(q).unwrap();
        let sizes = superclass_sizes(&f, 3).unwrap();
        let ig = gen_indifference(3).unwrap();
        for a in &ig {
            for b in &ig {
                let ip = inner_product_ut(
                    &ClassFnUT::delta(q, a).unwrap(),
                    &ClassFnUT::delta(q, b).unwrap(),
                )
                .unwrap();
                if a != b {
                    assert!(ip.is_zero());
                }
            }
        }
        let e = IndiffGraph::edgeless(3).unwrap();
        let ip = inner_product_ut(&ClassFnUT::delta_bar(q, &e).unwrap(), &ClassFnUT::delta(q, &e).unwrap()).unwrap();
        assert_eq!(ip * rat(8), rat(sizes[&e] as i64));
        let other = ClassFnUT::zero(3, 3).unwrap();
        assert!(inner_product_ut(&ClassFnUT::delta(2, &e).unwrap(), &other).is_err());
    }

    #[test]
    fn pseudosupercharacter_example() {
        // σ = EDESS: Area = {{2,3}}, Diag = {{1,2}}.
        let sigma: SchroderPath = "EDESS".parse().unwrap();
        for q in [2, 3] {
            let psi = ClassFnUT::psi_pseudo(q, &sigma).unwrap();
            let edge23 = g(3, &[(2, 3)]);
            let path = g(3, &[(1, 2), (2, 3)]);
            let edge12 = g(3, &[(1, 2)]);
            let want = ClassFnUT::chi_bar(q, &path)
                .unwrap()
                .try_sub(&ClassFnUT::chi_bar(q, &edge23).unwrap())
                .unwrap();
            assert_eq!(psi, want);
            let want = ClassFnUT::chi_super(q, &edge12)
                .unwrap()
                .try_add(&ClassFnUT::chi_super(q, &path).unwrap())
                .unwrap();
            assert_eq!(psi, want);
        }
    }

    #[test]
    fn pseudosupercharacters_of_dyck_paths() {
        for n in 0..=4 {
            for pi in gen_dyck(n).unwrap() {
                let psi = ClassFnUT::psi_pseudo(2, &pi.to_schroder()).unwrap();
                assert_eq!(psi, ClassFnUT::chi_bar(2, &pi.graph().unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn mesa_identity() {
        for q in [2, 3] {
            for n in 0..=4 {
                for pi in gen_dyck(n).unwrap() {
                    assert!(psi_mesa_check(q, &pi).unwrap(), "{pi}");
                }
            }
        }
    }

    #[test]
    fn constructors_validate() {
        assert!(ClassFnUT::zero(6, 2).is_err());
        assert!(ClassFnUT::zero(2, 4).is_err());
        let mut vals = BTreeMap::new();
        vals.insert(IndiffGraph::edgeless(2).unwrap(), rat(1));
        assert!(ClassFnUT::new(2, 2, vals.clone()).is_err());
        vals.insert(IndiffGraph::complete(2).unwrap(), rat(2));
        assert!(ClassFnUT::new(2, 2, vals).is_ok());
        let mut u = BTreeMap::new();
        u.insert(Partition::row(2), rat(1));
        assert!(UnipClassFn::new(2, 2, u).is_err());
    }
}
