//! Acceptance suite: one line per criterion, exact comparisons only.
//!
//! Run with `cargo test -p unichrom-core --test acceptance`. Exits nonzero
//! if any criterion fails.

use std::process::ExitCode;
use std::thread;
use std::time::Instant;

use unichrom_core::bridge::{default_plan, Check, Job, Verifier};
use unichrom_core::chromallt::{
    as_expansion, asc, csf, csf_exponent_table, e_expansion_x, llt_exponent_table, llt_vertical,
    positivity_violations,
};
use unichrom_core::combinatorics::{
    area_inverse, gen_dyck, gen_indifference, gen_partitions, gen_tall_schroder, DyckPath, EdgeSet,
    IndiffGraph, Orientation, Partition, SchroderPath,
};
use unichrom_core::exactnum::{rat, LaurentPoly};
use unichrom_core::fqoracle::{inner_product_ut, superclass_sizes, ut_order, ClassFnUT, Fq};
use unichrom_core::symfunc::{check_symmetric, expand_in_basis, to_monomial, Basis, BasisTables, SymPoly};

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn worked_examples() -> Outcome {
    let path = IndiffGraph::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
    let x = csf(&path).map_err(|e| e.to_string())?;
    let want = SymPoly::new(3, [(p(&[2, 1]), lp("t")), (p(&[1, 1, 1]), lp("t^2 + 4*t + 1"))]).unwrap();
    ensure(x == want, || format!("X_path = {x}"))?;

    let eedss: SchroderPath = "EEDSS".parse().unwrap();
    let g = llt_vertical(&eedss).map_err(|e| e.to_string())?;
    let want = SymPoly::new(3, [(p(&[2, 1]), lp("t")), (p(&[1, 1, 1]), lp("t^2 + 2*t"))]).unwrap();
    ensure(g == want, || format!("G_EEDSS = {g}"))?;

    let eesess: SchroderPath = "EESESS".parse().unwrap();
    let area = EdgeSet::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
    ensure(eesess.area() == area && eesess.diag().is_empty(), || "Area/Diag of EESESS".into())?;
    let diag = EdgeSet::from_pairs(3, &[(1, 3)]).unwrap();
    ensure(eedss.area() == area && eedss.diag() == diag, || "Area/Diag of EEDSS".into())?;
    let dyck: DyckPath = "EESESS".parse().unwrap();
    ensure(dyck.graph().unwrap() == path, || "graph of EESESS".into())?;

    let e4 = EdgeSet::from_pairs(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
    ensure(asc(&e4, &[2, 5, 1, 5]) == Ok(2), || "asc example".into())?;

    let g4 = IndiffGraph::new(e4).unwrap();
    let th = Orientation::from_arcs(g4, &[(2, 1), (1, 3), (3, 2), (3, 4)]).unwrap();
    ensure(th.hrv_all() == vec![4, 2, 4, 4] && th.type_of() == p(&[3, 1]), || {
        format!("hrv {:?}, type {}", th.hrv_all(), th.type_of())
    })?;

    let m: DyckPath = "EESESSES".parse().unwrap();
    ensure(m.mesa().to_string() == "EDDSES", || format!("mesa = {}", m.mesa()))?;

    let sigma: SchroderPath = "EDESS".parse().unwrap();
    let e23 = IndiffGraph::from_pairs(3, &[(2, 3)]).unwrap();
    let e12 = IndiffGraph::from_pairs(3, &[(1, 2)]).unwrap();
    for q in [2, 3] {
        let psi = ClassFnUT::psi_pseudo(q, &sigma).unwrap();
        let bars = ClassFnUT::chi_bar(q, &path).unwrap().try_sub(&ClassFnUT::chi_bar(q, &e23).unwrap()).unwrap();
        ensure(psi == bars, || format!("psi vs chi-bar sum at q={q}"))?;
        let supers =
            ClassFnUT::chi_super(q, &e12).unwrap().try_add(&ClassFnUT::chi_super(q, &path).unwrap()).unwrap();
        ensure(psi == supers, || format!("psi vs supercharacter sum at q={q}"))?;
    }
    Ok("9 examples".into())
}

fn run_jobs(jobs: &[Job]) -> Outcome {
    let v = Verifier::default();
    for job in jobs {
        let r = v.run(job).map_err(|e| format!("{job}: {e}"))?;
        if !r.passed() {
            return Err(r.to_string());
        }
    }
    Ok(format!("{} cases", jobs.len()))
}

fn plan_for(checks: &[Check]) -> Vec<Job> {
    default_plan(false).into_iter().filter(|j| checks.contains(&j.check)).collect()
}

fn catalan_and_schroder() -> Result<(), String> {
    let dyck: Vec<usize> = (0..=5).map(|n| gen_dyck(n).unwrap().len()).collect();
    ensure(dyck == [1, 1, 2, 5, 14, 42], || format!("Dyck counts {dyck:?}"))?;
    let ts: Vec<usize> = (0..=4).map(|n| gen_tall_schroder(n).unwrap().len()).collect();
    ensure(ts == [1, 1, 3, 11, 45], || format!("tall Schröder counts {ts:?}"))?;
    let ig: Vec<usize> = (0..=5).map(|n| gen_indifference(n).unwrap().len()).collect();
    ensure(ig == dyck, || format!("indifference graph counts {ig:?}"))
}

fn round_trips() -> Result<(), String> {
    for n in 0..=6 {
        for pi in gen_dyck(n).unwrap() {
            let back = area_inverse(&pi.area()).unwrap();
            ensure(back == pi, || format!("area inverse of {pi}"))?;
            let text: DyckPath = pi.to_string().parse().unwrap();
            ensure(text == pi, || format!("text round trip of {pi}"))?;
            let s = pi.to_schroder();
            ensure(s.as_dyck() == Some(pi.clone()), || format!("Schröder round trip of {pi}"))?;
            let m = pi.mesa();
            ensure(m.full_graph() == pi.graph().unwrap(), || format!("mesa of {pi} changes the graph"))?;
        }
    }
    Ok(())
}

fn orthogonality_and_sizes() -> Result<(), String> {
    for (n, q) in [(3, 2), (3, 3), (4, 2)] {
        let ig = gen_indifference(n).unwrap();
        let chars: Vec<_> = ig.iter().map(|g| ClassFnUT::chi_super(q, g).unwrap()).collect();
        for (a, ca) in chars.iter().enumerate() {
            for (b, cb) in chars.iter().enumerate() {
                let ip = inner_product_ut(ca, cb).unwrap();
                ensure((a == b) != (ip == rat(0)), || format!("<χ^{}, χ^{}> = {ip} at q={q}", ig[a], ig[b]))?;
            }
        }
    }
    for (n, q) in [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3)] {
        let sizes = superclass_sizes(&Fq::new(q).unwrap(), n).unwrap();
        let total: u64 = sizes.values().sum();
        ensure(total == ut_order(n, q).unwrap(), || format!("superclass sizes at n={n}, q={q}"))?;
    }
    Ok(())
}

fn symmetric_tables() -> Result<(), String> {
    for n in 1..=4 {
        for g in gen_indifference(n).unwrap() {
            let t = csf_exponent_table(&g).unwrap();
            ensure(check_symmetric(n, &t), || format!("X table for {g}"))?;
        }
        for s in gen_tall_schroder(n).unwrap() {
            let t = llt_exponent_table(&s).unwrap();
            ensure(check_symmetric(n, &t), || format!("G table for {s}"))?;
        }
    }
    Ok(())
}

/// Hard failures for proved statements; the e-positivity of `X_γ` is
/// reported only.
fn positivity(report: &mut Vec<String>) -> Result<(), String> {
    let tables = BasisTables::new();
    let mut e_violations = 0;
    let mut checked = 0;
    for n in 1..=5 {
        for g in gen_indifference(n).unwrap() {
            let x = csf(&g).unwrap();
            let s = expand_in_basis(&tables, &x, Basis::S).unwrap();
            ensure(positivity_violations(&s).is_empty(), || format!("Schur positivity of X for {g}"))?;
            let e = e_expansion_x(&tables, &g).unwrap();
            e_violations += positivity_violations(&e).len();
            checked += 1;
        }
        for sigma in gen_tall_schroder(n).unwrap() {
            let gs = llt_vertical(&sigma).unwrap();
            let s = expand_in_basis(&tables, &gs, Basis::S).unwrap();
            ensure(positivity_violations(&s).is_empty(), || format!("Schur positivity of G for {sigma}"))?;
            // Orientation coefficients are polynomials in t − 1 with
            // nonnegative integer coefficients.
            let a = as_expansion(&sigma).unwrap();
            let shifted = a.map(shift_by_one);
            ensure(positivity_violations(&shifted).is_empty(), || format!("(t−1)-positivity for {sigma}"))?;
            ensure(to_monomial(&tables, &a).unwrap() == gs, || format!("orientation expansion of {sigma}"))?;
        }
    }
    report.push(format!(
        "observed: {checked} graphs with n ≤ 5, {e_violations} e-coefficients outside Z≥0[t]"
    ));
    Ok(())
}

/// `c(t) ↦ c(t + 1)`.
fn shift_by_one(c: &LaurentPoly) -> LaurentPoly {
    let tp1 = LaurentPoly::from_ints(0, &[1, 1]);
    c.terms().fold(LaurentPoly::from_ints(0, &[]), |acc, (k, a)| {
        let term = tp1.pow(k as u32).scale(a);
        &acc + &term
    })
}

fn property_suites() -> Outcome {
    let mut notes = Vec::new();
    catalan_and_schroder()?;
    round_trips()?;
    orthogonality_and_sizes()?;
    symmetric_tables()?;
    run_jobs(&plan_for(&[Check::Palindromic]))?;
    positivity(&mut notes)?;
    let sample = gen_partitions(4).unwrap().len();
    ensure(sample == 5, || "partition count".into())?;
    Ok(notes.join("; "))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Box<dyn FnOnce() -> Outcome + Send>);
    let criteria: Vec<Criterion> = vec![
        ("1 worked examples", Box::new(worked_examples)),
        ("2 induced permutation characters and X_γ", Box::new(|| run_jobs(&plan_for(&[Check::Cqs])))),
        (
            "3 Hessenberg point counts",
            Box::new(|| run_jobs(&plan_for(&[Check::Hess, Check::Poincare]))),
        ),
        ("4 pseudosupercharacters and G_σ", Box::new(|| run_jobs(&plan_for(&[Check::Llt])))),
        (
            "5 superclass function identities",
            Box::new(|| run_jobs(&plan_for(&[Check::PsiDecomp, Check::Mesa, Check::Permtoind]))),
        ),
        ("6 LLT transforms and plethysm", Box::new(|| run_jobs(&plan_for(&[Check::Prop56, Check::Cm])))),
        ("7 orientation e-expansion", Box::new(|| run_jobs(&plan_for(&[Check::As])))),
        (
            "8 Gelfand–Graev and e_n facts",
            Box::new(|| run_jobs(&plan_for(&[Check::StEn, Check::Gg, Check::Cor66]))),
        ),
        ("9 property suites", Box::new(property_suites)),
    ];
    let start = Instant::now();
    let handles: Vec<_> = criteria
        .into_iter()
        .map(|(name, f)| {
            let h = thread::spawn(move || {
                let t = Instant::now();
                let r = f();
                (r, t.elapsed())
            });
            (name, h)
        })
        .collect();
    let mut failed = 0;
    for (name, h) in handles {
        let (r, took) = h.join().unwrap_or_else(|_| (Err("panicked".into()), Default::default()));
        match r {
            Ok(detail) => println!("criterion {name}: pass ({detail}; {:.2}s)", took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why})");
            }
        }
    }
    println!("acceptance: {} failed, total {:.2}s", failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
