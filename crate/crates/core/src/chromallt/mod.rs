//! Chromatic quasisymmetric functions `X_γ(x; t)` of indifference graphs,
//! vertical-strip LLT polynomials `G_σ(x; t)` of tall Schröder paths, and
//! their expansions.
//!
//! Both are built from colorings `κ: [n] → [n]`. With `n` variables this
//! truncation is faithful in degree `n`. The full exponent table is checked
//! for symmetry before it is folded into monomial coordinates.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::combinatorics::{type_from_up, EdgeSet, IndiffGraph, Partition, SchroderPath};
use crate::error::{guard, Error, Result};
use crate::exactnum::{BigRational, LaurentPoly, RatFunc};
use crate::symfunc::{expand_in_basis, expand_in_basis_t, Basis, BasisTables, SymFunc, SymPoly};

/// Vertex ceiling for coloring enumeration (`n^n` colorings).
pub const MAX_COLORING_SIZE: usize = 8;

/// Vertex ceiling for the expansion and palindromicity helpers.
pub const MAX_EXPANSION_SIZE: usize = 6;

/// Edge ceiling for the orientation expansion.
pub const MAX_AS_EDGES: usize = 16;

/// Number of edges `{i, j}`, `i < j`, with `κ(i) < κ(j)`. Colors are any
/// positive integers; `kappa[i - 1]` is the color of vertex `i`.
pub fn asc(edges: &EdgeSet, kappa: &[usize]) -> Result<usize> {
    if kappa.len() != edges.n() {
        return Err(Error::Invalid(alloc::format!(
            "coloring of length {} for {} vertices",
            kappa.len(),
            edges.n()
        )));
    }
    Ok(edges
        .edges()
        .into_iter()
        .filter(|&(i, j)| kappa[i - 1] < kappa[j - 1])
        .count())
}

/// Constraints for one coloring enumeration.
struct ColoringRule {
    n: usize,
    /// Edges whose ascents are counted.
    ascent: EdgeSet,
    /// Edges whose endpoints must get different colors.
    proper: EdgeSet,
    /// Edges `{i, j}`, `i < j`, requiring `κ(i) < κ(j)`.
    strict: EdgeSet,
}

/// Exponent vector ↦ counts by ascent number, over all admissible
/// colorings `[n] → [n]`.
fn coloring_table(rule: &ColoringRule) -> Result<BTreeMap<Vec<usize>, Vec<u64>>> {
    let n = rule.n;
    guard("coloring vertex count", n as u64, MAX_COLORING_SIZE as u64)?;
    let max_asc = rule.ascent.len();
    let mut table: BTreeMap<Vec<usize>, Vec<u64>> = BTreeMap::new();
    let mut kappa = vec![0usize; n];
    let mut exps = vec![0usize; n];
    // Per vertex j, the earlier neighbours under each rule.
    let before = |e: &EdgeSet, j: usize| (1..j).filter(|&i| e.contains(i, j)).collect::<Vec<_>>();
    let asc_nb: Vec<Vec<usize>> = (1..=n).map(|j| before(&rule.ascent, j)).collect();
    let proper_nb: Vec<Vec<usize>> = (1..=n).map(|j| before(&rule.proper, j)).collect();
    let strict_nb: Vec<Vec<usize>> = (1..=n).map(|j| before(&rule.strict, j)).collect();

    struct Ctx<'a> {
        n: usize,
        max_asc: usize,
        asc_nb: &'a [Vec<usize>],
        proper_nb: &'a [Vec<usize>],
        strict_nb: &'a [Vec<usize>],
        kappa: &'a mut [usize],
        exps: &'a mut [usize],
        table: &'a mut BTreeMap<Vec<usize>, Vec<u64>>,
    }

    fn rec(cx: &mut Ctx<'_>, j: usize, asc: usize) {
        if j > cx.n {
            let e = cx.table.entry(cx.exps.to_vec()).or_insert_with(|| vec![0; cx.max_asc + 1]);
            e[asc] += 1;
            return;
        }
        'color: for c in 1..=cx.n {
            for &i in &cx.proper_nb[j - 1] {
                if cx.kappa[i - 1] == c {
                    continue 'color;
                }
            }
            for &i in &cx.strict_nb[j - 1] {
                if cx.kappa[i - 1] >= c {
                    continue 'color;
                }
            }
            let gained = cx.asc_nb[j - 1].iter().filter(|&&i| cx.kappa[i - 1] < c).count();
            cx.kappa[j - 1] = c;
            cx.exps[c - 1] += 1;
            rec(cx, j + 1, asc + gained);
            cx.exps[c - 1] -= 1;
        }
        cx.kappa[j - 1] = 0;
    }

    let mut cx = Ctx {
        n,
        max_asc,
        asc_nb: &asc_nb,
        proper_nb: &proper_nb,
        strict_nb: &strict_nb,
        kappa: &mut kappa,
        exps: &mut exps,
        table: &mut table,
    };
    rec(&mut cx, 1, 0);
    Ok(table)
}

fn counts_to_poly(counts: &[u64]) -> LaurentPoly {
    LaurentPoly::new(
        0,
        counts.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
    )
}

/// Full multidegree table of a coloring generating function, coefficients
/// in `t`.
fn exponent_table(rule: &ColoringRule) -> Result<BTreeMap<Vec<usize>, LaurentPoly>> {
    Ok(coloring_table(rule)?
        .into_iter()
        .map(|(e, c)| (e, counts_to_poly(&c)))
        .collect())
}

fn csf_rule(gamma: &IndiffGraph) -> Result<ColoringRule> {
    Ok(ColoringRule {
        n: gamma.n(),
        ascent: *gamma.edge_set(),
        proper: *gamma.edge_set(),
        strict: EdgeSet::empty(gamma.n())?,
    })
}

fn llt_rule(sigma: &SchroderPath) -> Result<ColoringRule> {
    let n = sigma.size();
    Ok(ColoringRule {
        n,
        ascent: sigma.area(),
        proper: EdgeSet::empty(n)?,
        strict: sigma.diag(),
    })
}

/// The exponent table of `X_γ` over colorings `[n] → [n]`.
pub fn csf_exponent_table(gamma: &IndiffGraph) -> Result<BTreeMap<Vec<usize>, LaurentPoly>> {
    exponent_table(&csf_rule(gamma)?)
}

/// The exponent table of `G_σ` over colorings `[n] → [n]`.
pub fn llt_exponent_table(sigma: &SchroderPath) -> Result<BTreeMap<Vec<usize>, LaurentPoly>> {
    exponent_table(&llt_rule(sigma)?)
}

/// `X_γ(x; t) = Σ_{κ proper} t^{asc_γ(κ)} x_κ`.
pub fn csf(gamma: &IndiffGraph) -> Result<SymPoly<LaurentPoly>> {
    let n = gamma.n();
    if n == 0 {
        return Ok(SymPoly::constant(LaurentPoly::one()));
    }
    SymPoly::from_exponent_table(n, &csf_exponent_table(gamma)?)
}

/// `G_σ(x; t) = Σ t^{asc over Area(σ)} x_κ` over colorings strictly
/// increasing along each edge of `Diag(σ)`.
pub fn llt_vertical(sigma: &SchroderPath) -> Result<SymPoly<LaurentPoly>> {
    let n = sigma.size();
    if n == 0 {
        return Ok(SymPoly::constant(LaurentPoly::one()));
    }
    SymPoly::from_exponent_table(n, &llt_exponent_table(sigma)?)
}

/// `Σ_θ (t − 1)^{asc_{Area}(θ)} e_{type(θ)}` over orientations of
/// `Area(σ) ∪ Diag(σ)` in which every `Diag` edge points upward.
pub fn as_expansion(sigma: &SchroderPath) -> Result<SymFunc<LaurentPoly>> {
    let n = sigma.size();
    let area = sigma.area();
    let diag = sigma.diag();
    guard("edge count", (area.len() + diag.len()) as u64, MAX_AS_EDGES as u64)?;
    let tm1 = LaurentPoly::from_ints(0, &[-1, 1]);
    let powers: Vec<LaurentPoly> = (0..=area.len()).map(|k| tm1.pow(k as u32)).collect();
    let mut out: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
    for up_area in area.subsets() {
        let up = up_area.union(&diag)?;
        let ty = type_from_up(n, &up);
        let w = &powers[up_area.len()];
        let e = out.entry(ty).or_insert_with(LaurentPoly::zero);
        *e += w;
    }
    SymFunc::new(n, Basis::E, out)
}

/// Whether `t^{|E(γ)|} X_γ(x; t^{-1}) = X_γ(x; t)` coefficientwise.
pub fn palindromicity_check(gamma: &IndiffGraph) -> Result<bool> {
    guard("vertex count", gamma.n() as u64, MAX_EXPANSION_SIZE as u64)?;
    let x = csf(gamma)?;
    let k = gamma.len() as i64;
    let ok = x.terms().all(|(_, c)| c.invert_variable().shift(k) == *c);
    Ok(ok)
}

/// Coefficients `d_λ(t)` with `X_γ = Σ d_λ(t) P̃_λ(x; t)`. Each coefficient
/// must come out a Laurent polynomial; anything else is reported as an error.
pub fn d_coeffs(tables: &BasisTables, gamma: &IndiffGraph) -> Result<BTreeMap<Partition, LaurentPoly>> {
    guard("vertex count", gamma.n() as u64, MAX_EXPANSION_SIZE as u64)?;
    let x = csf(gamma)?.map(|c| RatFunc::from(c.clone()));
    let d = expand_in_basis_t(tables, &x, Basis::PT)?;
    d.terms().map(|(l, c)| Ok((l.clone(), c.to_laurent()?))).collect()
}

/// `X_γ` in the elementary basis.
pub fn e_expansion_x(tables: &BasisTables, gamma: &IndiffGraph) -> Result<SymFunc<LaurentPoly>> {
    guard("vertex count", gamma.n() as u64, MAX_EXPANSION_SIZE as u64)?;
    expand_in_basis(tables, &csf(gamma)?, Basis::E)
}

/// Partitions whose coefficient is not in `Z≥0[t]`.
pub fn positivity_violations(f: &SymFunc<LaurentPoly>) -> Vec<Partition> {
    f.terms()
        .filter(|(_, c)| !c.is_nonneg_integer_poly())
        .map(|(l, _)| l.clone())
        .collect()
}

#[cfg(test)]
mod tests;
