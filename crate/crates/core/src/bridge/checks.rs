use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;
use core::str::FromStr;

use super::{p_brace1, p_one, p_one_numeric};
use crate::chromallt::{as_expansion, csf, d_coeffs, llt_vertical, palindromicity_check};
use crate::combinatorics::{
    area_inverse, gen_dyck, gen_indifference, gen_partitions, gen_tall_schroder, Partition,
    SchroderPath,
};
use crate::error::{Error, Result};
use crate::exactnum::{is_nonneg_integer, rat, rat_pow, BigRational, LaurentPoly, RatFunc};
use crate::fqoracle::{
    coset_permutation_character, gl_order, hessenberg_count, induce_trivial_from_pattern, jordan,
    psi_mesa_check, ClassFnUT, Fq, InductionCounts, Mat, GL_DEFAULT_LIMIT,
};
use crate::symfunc::{
    basis_element, convert, expand_in_basis, expand_in_basis_t, omega, plethysm_frac, to_monomial,
    to_monomial_t, Basis, BasisTables, SymFunc, SymPoly,
};

/// The identity checks. Each compares two independently computed sides
/// over every index in range, exactly.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Check {
    /// `Ind(χ̄^γ)` maps to `(q−1)^n X_γ(x; q)` under `p_brace1`.
    Cqs,
    /// `Ind(χ̄^γ)(J_λ) = (q−1)^n q^{|E(γ)|}` times the Hessenberg point count.
    Hess,
    /// Hessenberg point count equals `q^{−|E(γ)|} d_λ^γ(q)`, a polynomial
    /// in `q` with nonnegative integer coefficients.
    Poincare,
    /// `p_one(Ind ψ^σ) = (q−1)^{|Diag(σ)|} ω G_σ(x; q)`.
    Llt,
    /// `ψ^{Mesa(π)} = χ^{Graph(π)}`.
    Mesa,
    /// `ψ^σ` is the sum of `χ^γ` over `Diag(σ) ⊆ E(γ) ⊆ Area(σ) ∪ Diag(σ)`.
    PsiDecomp,
    /// `q^{|E(γ)|} δ̄_γ` is the permutation character on `UT_n / UT_γ`.
    Permtoind,
    /// Orientation `e`-expansion equals `G_σ(x; t)`.
    As,
    /// `(t−1)^n X_{Graph(π)}[x/(t−1)] = G_π(x; t)`.
    Cm,
    /// `t^{|E|} X_γ(x; t^{-1}) = X_γ(x; t)`.
    Palindromic,
    /// `t^{|Area(π)|} G_π(x; t^{-1}) = ω G_π(x; t)` and the `Diag`
    /// inclusion–exclusion for `G_σ`.
    Prop56,
    /// `ω p_one(Γ_n) = e_n` for the Gelfand–Graev character `Γ_n`.
    Gg,
    /// `t^{n(n−1)/2} P̃_{(1^n)}(x; t) = e_n`.
    StEn,
    /// `ω p_one(Ind ψ^σ)` equals `(q−1)^{|Diag(σ)|}` times the orientation
    /// expansion at `t = q`.
    Cor66,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::Cqs,
        Check::Hess,
        Check::Poincare,
        Check::Llt,
        Check::Mesa,
        Check::PsiDecomp,
        Check::Permtoind,
        Check::As,
        Check::Cm,
        Check::Palindromic,
        Check::Prop56,
        Check::Gg,
        Check::StEn,
        Check::Cor66,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Cqs => "check_cqs",
            Check::Hess => "check_hess",
            Check::Poincare => "check_poincare",
            Check::Llt => "check_llt",
            Check::Mesa => "check_mesa",
            Check::PsiDecomp => "check_psi_decomp",
            Check::Permtoind => "check_permtoind",
            Check::As => "check_as",
            Check::Cm => "check_cm",
            Check::Palindromic => "check_palindromic",
            Check::Prop56 => "check_prop56",
            Check::Gg => "check_gg",
            Check::StEn => "check_st_en",
            Check::Cor66 => "check_cor66",
        }
    }

    /// Whether the check depends on the field size.
    pub fn uses_q(self) -> bool {
        !matches!(self, Check::As | Check::Cm | Check::Palindromic | Check::Prop56 | Check::StEn)
    }

    /// Whether the check induces to `GL_n` through [`InductionCounts`].
    pub fn uses_induction(self) -> bool {
        matches!(
            self,
            Check::Cqs | Check::Hess | Check::Llt | Check::Gg | Check::Cor66 | Check::Permtoind
        )
    }

    /// Checks whose combination implies this one.
    pub fn implied_by(self) -> &'static [Check] {
        match self {
            Check::Cor66 => &[Check::Llt, Check::As],
            _ => &[],
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    /// Accepts `check_cqs`, `cqs`, `CQS`, and `-` for `_`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        let bare = norm.strip_prefix("check_").unwrap_or(&norm);
        Check::ALL
            .into_iter()
            .find(|c| &c.name()["check_".len()..] == bare)
            .ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

/// The first index at which the two sides differ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub index: String,
    pub lhs: String,
    pub rhs: String,
    pub note: Option<String>,
}

impl Witness {
    fn new(index: impl fmt::Display, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Witness { index: index.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string(), note: None }
    }
}

/// Outcome of one check at one `n` (and `q`, when it matters).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport {
    pub check: Check,
    pub n: usize,
    pub q: Option<u64>,
    /// `None` on pass.
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{status} {} n={}", self.check, self.n)?;
        if let Some(q) = self.q {
            write!(f, " q={q}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " at {}: {} != {}", w.index, w.lhs, w.rhs)?;
            if let Some(note) = &w.note {
                write!(f, " ({note})")?;
            }
        }
        Ok(())
    }
}

/// One scheduled check.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Job {
    pub check: Check,
    pub n: usize,
    pub q: Option<u64>,
}

impl Job {
    /// Drops `q` for checks that ignore it.
    pub fn new(check: Check, n: usize, q: Option<u64>) -> Self {
        Job { check, n, q: if check.uses_q() { q } else { None } }
    }
}

impl fmt::Display for Job {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.check, self.n)?;
        if let Some(q) = self.q {
            write!(f, " q={q}")?;
        }
        Ok(())
    }
}

/// The standard sweep. `deep` adds the larger sizes.
pub fn default_plan(deep: bool) -> Vec<Job> {
    let mut jobs = Vec::new();
    let mut push = |c: Check, ns: &[usize], qs: &[u64]| {
        for &n in ns {
            if qs.is_empty() {
                jobs.push(Job::new(c, n, None));
            }
            for &q in qs {
                jobs.push(Job::new(c, n, Some(q)));
            }
        }
    };
    let both = [2, 3];
    push(Check::Cqs, &[1, 2, 3], &both);
    push(Check::Cqs, &[4], &[2]);
    push(Check::Hess, &[1, 2, 3], &both);
    push(Check::Poincare, &[1, 2, 3], &both);
    push(Check::Llt, &[1, 2, 3], &both);
    push(Check::Mesa, &[1, 2, 3, 4], &both);
    push(Check::PsiDecomp, &[1, 2, 3, 4], &both);
    push(Check::Permtoind, &[1, 2, 3, 4], &both);
    push(Check::As, &[1, 2, 3, 4], &[]);
    push(Check::Cm, &[1, 2, 3, 4], &[]);
    push(Check::Palindromic, &[1, 2, 3, 4, 5], &[]);
    push(Check::Prop56, &[1, 2, 3, 4], &[]);
    push(Check::Gg, &[1, 2, 3], &both);
    push(Check::StEn, &[1, 2, 3, 4, 5, 6], &[]);
    push(Check::Cor66, &[3], &both);
    if deep {
        push(Check::Hess, &[4], &[2]);
        push(Check::Poincare, &[4], &[2]);
        push(Check::Llt, &[4], &[2]);
        push(Check::Gg, &[4], &[2]);
        push(Check::Cor66, &[4], &[2]);
        push(Check::Mesa, &[5], &[2]);
        push(Check::PsiDecomp, &[5], &[2]);
        push(Check::As, &[5], &[]);
        push(Check::Cm, &[5], &[]);
        push(Check::Prop56, &[5], &[]);
        push(Check::Palindromic, &[6], &[]);
    }
    jobs
}

/// Runs checks, caching basis tables and induction counts.
///
/// Not `Sync`; a multi-threaded runner keeps one per thread and may seed
/// each with precomputed counts.
pub struct Verifier {
    tables: BasisTables,
    counts: RefCell<BTreeMap<(usize, u64), Rc<InductionCounts>>>,
    allow_large: bool,
}

type Outcome = Result<Option<Witness>>;

fn pass() -> Outcome {
    Ok(None)
}

fn fail(index: impl fmt::Display, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Outcome {
    Ok(Some(Witness::new(index, lhs, rhs)))
}

fn q_of(job: &Job) -> Result<u64> {
    job.q
        .ok_or_else(|| Error::Invalid(format!("{} needs a field size q", job.check)))
}

fn qpow(q: u64, k: usize) -> BigRational {
    rat_pow(&rat(q as i64), k as i64).expect("positive base")
}

fn qm1pow(q: u64, k: usize) -> BigRational {
    rat_pow(&rat(q as i64 - 1), k as i64).expect("positive base")
}

fn tm1() -> LaurentPoly {
    LaurentPoly::from_ints(0, &[-1, 1])
}

fn llt_at(sigma: &SchroderPath, q: u64) -> Result<SymPoly<BigRational>> {
    let qq = rat(q as i64);
    llt_vertical(sigma)?.try_map(|c| c.eval(&qq))
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new(false)
    }
}

impl Verifier {
    /// `allow_large` lifts the `GL_n` enumeration guard to its extended limit.
    pub fn new(allow_large: bool) -> Self {
        Verifier { tables: BasisTables::new(), counts: RefCell::new(BTreeMap::new()), allow_large }
    }

    pub fn tables(&self) -> &BasisTables {
        &self.tables
    }

    /// Seeds the cache with counts computed elsewhere.
    pub fn insert_counts(&self, counts: InductionCounts) {
        self.counts.borrow_mut().insert((counts.n(), counts.q()), Rc::new(counts));
    }

    pub fn counts(&self, n: usize, q: u64) -> Result<Rc<InductionCounts>> {
        if let Some(c) = self.counts.borrow().get(&(n, q)) {
            return Ok(c.clone());
        }
        let c = Rc::new(InductionCounts::compute(n, q, self.allow_large)?);
        self.counts.borrow_mut().insert((n, q), c.clone());
        Ok(c)
    }

    pub fn run(&self, job: &Job) -> Result<CheckReport> {
        let n = job.n;
        let outcome = match job.check {
            Check::Cqs => self.cqs(n, q_of(job)?),
            Check::Hess => self.hess(n, q_of(job)?),
            Check::Poincare => self.poincare(n, q_of(job)?),
            Check::Llt => self.llt(n, q_of(job)?),
            Check::Mesa => self.mesa(n, q_of(job)?),
            Check::PsiDecomp => self.psi_decomp(n, q_of(job)?),
            Check::Permtoind => self.permtoind(n, q_of(job)?),
            Check::As => self.as_check(n),
            Check::Cm => self.cm(n),
            Check::Palindromic => self.palindromic(n),
            Check::Prop56 => self.prop56(n),
            Check::Gg => self.gg(n, q_of(job)?),
            Check::StEn => self.st_en(n),
            Check::Cor66 => self.cor66(n, q_of(job)?),
        };
        let mut witness = outcome?;
        if let Some(w) = witness.as_mut() {
            let deps = job.check.implied_by();
            if !deps.is_empty() {
                let names: Vec<&str> = deps.iter().map(|c| c.name()).collect();
                w.note = Some(format!("implied by {}; one of them must fail as well", names.join(" and ")));
            }
        }
        Ok(CheckReport { check: job.check, n, q: job.q, witness })
    }

    fn cqs(&self, n: usize, q: u64) -> Outcome {
        let counts = self.counts(n, q)?;
        let qq = rat(q as i64);
        for g in gen_indifference(n)? {
            let ind = counts.induce(&ClassFnUT::chi_bar(q, &g)?)?;
            if !ind.is_integral() {
                return fail(g, &ind, "integer values");
            }
            let lhs = p_brace1(&self.tables, &ind)?;
            let rhs = csf(&g)?.try_map(|c| c.eval(&qq))?.scale(&qm1pow(q, n));
            if lhs != rhs {
                return fail(g, lhs, rhs);
            }
        }
        pass()
    }

    fn nilpotent(f: &Fq, lam: &Partition) -> Result<Mat> {
        let n = lam.size();
        Ok(jordan(lam)?.sub(f, &Mat::identity(n)?))
    }

    fn hess(&self, n: usize, q: u64) -> Outcome {
        let f = Fq::new(q)?;
        let counts = self.counts(n, q)?;
        for g in gen_indifference(n)? {
            let ind = counts.induce(&ClassFnUT::chi_bar(q, &g)?)?;
            for lam in gen_partitions(n)? {
                let h = hessenberg_count(&f, &g, &Self::nilpotent(&f, &lam)?)?;
                let rhs = qm1pow(q, n) * qpow(q, g.len()) * rat(h as i64);
                let lhs = ind.value(&lam)?;
                if *lhs != rhs {
                    return fail(format!("{g} at {lam}"), lhs, rhs);
                }
            }
        }
        pass()
    }

    fn poincare(&self, n: usize, q: u64) -> Outcome {
        let f = Fq::new(q)?;
        let qq = rat(q as i64);
        for g in gen_indifference(n)? {
            let d = d_coeffs(&self.tables, &g)?;
            for lam in gen_partitions(n)? {
                let betti = d.get(&lam).cloned().unwrap_or_default().shift(-(g.len() as i64));
                if !betti.is_nonneg_integer_poly() {
                    return fail(format!("{g} at {lam}"), &betti, "a polynomial in Z≥0[t]");
                }
                let h = hessenberg_count(&f, &g, &Self::nilpotent(&f, &lam)?)?;
                let lhs = rat(h as i64);
                let rhs = betti.eval(&qq)?;
                if lhs != rhs {
                    return fail(format!("{g} at {lam}"), lhs, rhs);
                }
            }
        }
        pass()
    }

    fn induced_psi(&self, sigma: &SchroderPath, q: u64) -> Result<crate::fqoracle::UnipClassFn> {
        self.counts(sigma.size(), q)?.induce(&ClassFnUT::psi_pseudo(q, sigma)?)
    }

    fn llt(&self, n: usize, q: u64) -> Outcome {
        for sigma in gen_tall_schroder(n)? {
            let ind = self.induced_psi(&sigma, q)?;
            let lhs = p_one(&self.tables, &ind)?;
            let other = p_one_numeric(&self.tables, &ind)?;
            if lhs != other {
                return fail(format!("{sigma} (two routes)"), &lhs, other);
            }
            if !lhs.terms().all(|(_, c)| is_nonneg_integer(c)) {
                return fail(&sigma, &lhs, "nonnegative integer multiplicities");
            }
            let g = expand_in_basis(&self.tables, &llt_at(&sigma, q)?, Basis::S)?;
            let rhs = omega(&g)?.scale(&qm1pow(q, sigma.diag().len()));
            if lhs != rhs {
                return fail(&sigma, lhs, rhs);
            }
        }
        pass()
    }

    fn mesa(&self, n: usize, q: u64) -> Outcome {
        for pi in gen_dyck(n)? {
            if !psi_mesa_check(q, &pi)? {
                let lhs = ClassFnUT::psi_pseudo(q, &pi.mesa())?;
                let rhs = ClassFnUT::chi_super(q, &pi.graph()?)?;
                return fail(&pi, lhs, rhs);
            }
        }
        pass()
    }

    fn psi_decomp(&self, n: usize, q: u64) -> Outcome {
        let graphs = gen_indifference(n)?;
        for sigma in gen_tall_schroder(n)? {
            let diag = sigma.diag();
            let full = sigma.full_graph();
            let lhs = ClassFnUT::psi_pseudo(q, &sigma)?;
            let mut rhs = ClassFnUT::zero(n, q)?;
            for g in &graphs {
                if diag.is_subset(g.edge_set()) && g.is_subgraph_of(&full) {
                    rhs = rhs.try_add(&ClassFnUT::chi_super(q, g)?)?;
                }
            }
            if lhs != rhs {
                return fail(&sigma, lhs, rhs);
            }
        }
        pass()
    }

    fn permtoind(&self, n: usize, q: u64) -> Outcome {
        let transitivity = gl_order(n, q).is_some_and(|o| o <= GL_DEFAULT_LIMIT) && n <= 3;
        for g in gen_indifference(n)? {
            let lhs = coset_permutation_character(q, &g)?;
            let rhs = ClassFnUT::chi_bar(q, &g)?;
            if lhs != rhs {
                return fail(g, lhs, rhs);
            }
            if transitivity {
                let direct = induce_trivial_from_pattern(q, &g, false)?;
                let via_ut = self.counts(n, q)?.induce(&rhs)?;
                if direct != via_ut {
                    return fail(format!("{g} (induction in stages)"), direct, via_ut);
                }
            }
        }
        pass()
    }

    fn as_check(&self, n: usize) -> Outcome {
        for sigma in gen_tall_schroder(n)? {
            let lhs = to_monomial(&self.tables, &as_expansion(&sigma)?)?;
            let rhs = llt_vertical(&sigma)?;
            if lhs != rhs {
                return fail(&sigma, lhs, rhs);
            }
        }
        pass()
    }

    fn cm(&self, n: usize) -> Outcome {
        let factor = RatFunc::from(tm1().pow(n as u32));
        for pi in gen_dyck(n)? {
            let x = csf(&pi.graph()?)?.map(|c| RatFunc::from(c.clone()));
            let in_p = expand_in_basis_t(&self.tables, &x, Basis::P)?;
            let lhs = to_monomial_t(&self.tables, &plethysm_frac(&in_p)?.scale(&factor))?;
            let rhs = llt_vertical(&pi.to_schroder())?.map(|c| RatFunc::from(c.clone()));
            if lhs != rhs {
                return fail(&pi, lhs, rhs);
            }
        }
        pass()
    }

    fn palindromic(&self, n: usize) -> Outcome {
        for g in gen_indifference(n)? {
            if !palindromicity_check(&g)? {
                let x = csf(&g)?;
                let k = g.len() as i64;
                let flipped = x.map(|c| c.invert_variable().shift(k));
                return fail(g, flipped, x);
            }
        }
        pass()
    }

    fn prop56(&self, n: usize) -> Outcome {
        for pi in gen_dyck(n)? {
            let sigma = pi.to_schroder();
            let g = llt_vertical(&sigma)?;
            let k = pi.area().len() as i64;
            let lhs = g.map(|c| c.invert_variable().shift(k));
            let in_s = expand_in_basis(&self.tables, &g, Basis::S)?;
            let rhs = to_monomial(&self.tables, &omega(&in_s)?)?;
            if lhs != rhs {
                return fail(format!("{pi} (reversal)"), lhs, rhs);
            }
        }
        for sigma in gen_tall_schroder(n)? {
            let area = sigma.area();
            let diag = sigma.diag();
            let lhs = llt_vertical(&sigma)?.scale(&tm1().pow(diag.len() as u32));
            let mut rhs = SymPoly::zero(n);
            for s in diag.subsets() {
                let pi = area_inverse(&area.union(&s)?)?;
                let term = llt_vertical(&pi.to_schroder())?;
                rhs = if (diag.len() - s.len()) % 2 == 0 { &rhs + &term } else { &rhs - &term };
            }
            if lhs != rhs {
                return fail(format!("{sigma} (inclusion-exclusion)"), lhs, rhs);
            }
        }
        pass()
    }

    fn gg(&self, n: usize, q: u64) -> Outcome {
        let sigma = SchroderPath::e_d_s(n)?;
        let ind = self.induced_psi(&sigma, q)?;
        let gamma = ind.scale(&(rat(1) / qm1pow(q, n.saturating_sub(1))));
        if !gamma.is_integral() {
            return fail(&sigma, &gamma, "integer values");
        }
        let lhs = omega(&p_one(&self.tables, &gamma)?)?;
        let rhs = SymFunc::unit(Basis::S, Partition::column(n));
        if lhs != rhs {
            return fail(&sigma, lhs, rhs);
        }
        pass()
    }

    fn st_en(&self, n: usize) -> Outcome {
        let col = Partition::column(n);
        let k = (n * n.saturating_sub(1) / 2) as i64;
        let lhs = basis_element(&self.tables, Basis::PT, &col)?.map(|c| c.shift(k));
        let rhs = basis_element(&self.tables, Basis::E, &Partition::row(n))?;
        if lhs != rhs {
            return fail(&col, lhs, rhs);
        }
        pass()
    }

    fn cor66(&self, n: usize, q: u64) -> Outcome {
        let qq = rat(q as i64);
        for sigma in gen_tall_schroder(n)? {
            let ind = self.induced_psi(&sigma, q)?;
            let lhs = convert(&self.tables, &omega(&p_one(&self.tables, &ind)?)?, Basis::E)?;
            let rhs = as_expansion(&sigma)?.eval_t(&qq)?.scale(&qm1pow(q, sigma.diag().len()));
            if lhs != rhs {
                return fail(&sigma, lhs, rhs);
            }
        }
        pass()
    }
}
