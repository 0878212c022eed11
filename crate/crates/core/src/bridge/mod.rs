//! Realization maps from unipotent class functions of `GL_n(F_q)` to
//! symmetric functions, and the checkers that compare both sides of each
//! identity.
//!
//! `p_brace1` sends the indicator of the class of `J_λ` to `P̃_λ(x; q)`.
//! `p_one` records unipotent constituents: it applies `f ↦ ω f[x/(t−1)]`
//! at `t = q` to the `p_brace1` image and expands in Schur functions.

mod checks;

pub use checks::{default_plan, Check, CheckReport, Job, Verifier, Witness};

use crate::error::Result;
use crate::exactnum::{rat, BigRational, RatFunc};
use crate::fqoracle::UnipClassFn;
use crate::symfunc::{
    convert, convert_t, expand_in_basis, omega, plethysm_frac, to_monomial_t, Basis, BasisTables, SymFunc,
    SymPoly,
};

/// `Σ_λ φ(J_λ) P̃_λ(x; t)` with `t` left symbolic.
pub fn p_brace1_symbolic(phi: &UnipClassFn) -> Result<SymFunc<RatFunc>> {
    SymFunc::new(
        phi.n(),
        Basis::PT,
        phi.values().map(|(l, v)| (l.clone(), RatFunc::from(v.clone()))),
    )
}

/// `Σ_λ φ(J_λ) P̃_λ(x; q)` in monomial coordinates.
pub fn p_brace1(tables: &BasisTables, phi: &UnipClassFn) -> Result<SymPoly<BigRational>> {
    let q = rat(phi.q() as i64);
    to_monomial_t(tables, &p_brace1_symbolic(phi)?)?.try_map(|c| c.eval(&q))
}

/// `ω (p_brace1 φ)[x/(t−1)]` at `t = q`, in the Schur basis. The plethysm
/// is taken with `t` symbolic and specialized last.
pub fn p_one(tables: &BasisTables, phi: &UnipClassFn) -> Result<SymFunc<BigRational>> {
    let q = rat(phi.q() as i64);
    let in_p = convert_t(tables, &p_brace1_symbolic(phi)?, Basis::P)?;
    let twisted = omega(&plethysm_frac(&in_p)?)?;
    convert(tables, &twisted.eval_t(&q)?, Basis::S)
}

/// The same map as [`p_one`], computed from the numeric `p_brace1` image:
/// each `p_λ` coefficient is divided by `Π_i (q^{λ_i} − 1)`.
pub fn p_one_numeric(tables: &BasisTables, phi: &UnipClassFn) -> Result<SymFunc<BigRational>> {
    let q = rat(phi.q() as i64);
    let in_p = expand_in_basis(tables, &p_brace1(tables, phi)?, Basis::P)?;
    let mut terms = alloc::vec::Vec::new();
    for (l, c) in in_p.terms() {
        let den = l
            .parts()
            .iter()
            .fold(rat(1), |acc, &k| acc * (crate::exactnum::rat_pow(&q, k as i64).expect("q ≥ 2") - rat(1)));
        terms.push((l.clone(), c / den));
    }
    let twisted = omega(&SymFunc::new(phi.n(), Basis::P, terms)?)?;
    convert(tables, &twisted, Basis::S)
}
