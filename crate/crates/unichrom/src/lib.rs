//! Std-side companion to `unichrom-core`: JSON formats, input parsing and a
//! threaded runner for the theorem checks.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use unichrom_core::bridge::{CheckReport, Job, Verifier};
use unichrom_core::combinatorics::{parse_edge_list, DyckPath, IndiffGraph, Partition};
use unichrom_core::exactnum::{format_rational, LaurentPoly};
use unichrom_core::fqoracle::{InductionCounts, UnipClassFn};
use unichrom_core::symfunc::{Basis, SymFunc, SymPoly};

/// Environment variable naming the worker count for `verify`.
pub const THREADS_VAR: &str = "UNICHROM_THREADS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub partition: Vec<usize>,
    pub value: String,
}

/// A symmetric function as `{"degree", "basis", "coeffs"}`, coefficients
/// printed in the crate's exact text format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub degree: usize,
    pub basis: String,
    pub coeffs: Vec<CoeffJson>,
}

impl SymFuncJson {
    pub fn from_basis<C: unichrom_core::exactnum::Ring>(f: &SymFunc<C>) -> Self {
        Self::from_terms(f.degree(), f.basis().name(), f.terms())
    }

    pub fn from_monomial<C: unichrom_core::exactnum::Ring>(f: &SymPoly<C>) -> Self {
        Self::from_terms(f.degree(), Basis::M.name(), f.terms())
    }

    fn from_terms<'a, C: Display + 'a>(
        degree: usize,
        basis: &str,
        terms: impl Iterator<Item = (&'a Partition, &'a C)>,
    ) -> Self {
        let coeffs = terms
            .map(|(l, c)| CoeffJson { partition: l.parts().to_vec(), value: c.to_string() })
            .collect();
        SymFuncJson { degree, basis: basis.to_string(), coeffs }
    }

    /// Reads the coefficients back as Laurent polynomials.
    pub fn to_symfunc(&self) -> Result<SymFunc<LaurentPoly>> {
        let basis = parse_basis(&self.basis)?;
        let terms = self
            .coeffs
            .iter()
            .map(|c| {
                let l = Partition::new(c.partition.clone()).map_err(|e| anyhow!("{e}"))?;
                let v: LaurentPoly = c.value.parse().map_err(|e| anyhow!("coefficient `{}`: {e}", c.value))?;
                Ok((l, v))
            })
            .collect::<Result<Vec<_>>>()?;
        SymFunc::new(self.degree, basis, terms).map_err(|e| anyhow!("{e}"))
    }
}

pub fn parse_basis(name: &str) -> Result<Basis> {
    Basis::ALL
        .into_iter()
        .find(|b| b.name().eq_ignore_ascii_case(name))
        .ok_or_else(|| anyhow!("unknown basis `{name}`"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&IndiffGraph> for GraphJson {
    fn from(g: &IndiffGraph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect() }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<IndiffGraph> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        IndiffGraph::from_pairs(self.n, &pairs).map_err(|e| anyhow!("{e}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueJson {
    pub partition: Vec<usize>,
    pub value: String,
}

/// A unipotently supported class function of `GL_n(F_q)`, listed by the
/// Jordan type of each unipotent class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFnJson {
    pub n: usize,
    pub q: u64,
    pub values: Vec<ValueJson>,
}

impl From<&UnipClassFn> for ClassFnJson {
    fn from(f: &UnipClassFn) -> Self {
        let values = f
            .values()
            .map(|(l, v)| ValueJson { partition: l.parts().to_vec(), value: format_rational(v) })
            .collect();
        ClassFnJson { n: f.n(), q: f.q(), values }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub index: String,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub check: String,
    pub n: usize,
    pub q: Option<u64>,
    pub status: String,
    pub witness: Option<WitnessJson>,
}

impl From<&CheckReport> for ReportJson {
    fn from(r: &CheckReport) -> Self {
        ReportJson {
            check: r.check.name().to_string(),
            n: r.n,
            q: r.q,
            status: if r.passed() { "pass" } else { "fail" }.to_string(),
            witness: r.witness.as_ref().map(|w| WitnessJson {
                index: w.index.clone(),
                lhs: w.lhs.clone(),
                rhs: w.rhs.clone(),
                note: w.note.clone(),
            }),
        }
    }
}

/// Reads a graph given either as a Dyck word (`EESESS`) or as an edge list
/// (`1-2 2-3`), the latter needing the vertex count.
pub fn parse_graph(text: &str, n: Option<usize>) -> Result<IndiffGraph> {
    let text = text.trim();
    if !text.is_empty() && text.chars().all(|c| matches!(c, 'E' | 'S')) {
        let pi: DyckPath = text.parse().map_err(|e| anyhow!("{e}"))?;
        return pi.graph().map_err(|e| anyhow!("{e}"));
    }
    let n = n.context("an edge-list graph needs --n")?;
    let edges = parse_edge_list(n, text).map_err(|e| anyhow!("{e}"))?;
    IndiffGraph::new(edges).map_err(|e| anyhow!("{e}"))
}

/// Worker count from [`THREADS_VAR`], defaulting to the available cores.
pub fn thread_count() -> Result<usize> {
    match std::env::var(THREADS_VAR) {
        Ok(s) => {
            let k: usize = s.trim().parse().with_context(|| format!("{THREADS_VAR}={s}"))?;
            if k == 0 {
                bail!("{THREADS_VAR} must be positive");
            }
            Ok(k)
        }
        Err(_) => Ok(thread::available_parallelism().map(|k| k.get()).unwrap_or(1)),
    }
}

/// Induction counts for `(n, q)`, enumerated chunk by chunk on `threads`
/// workers and merged.
pub fn parallel_counts(n: usize, q: u64, allow_large: bool, threads: usize) -> Result<InductionCounts> {
    let base = InductionCounts::empty(n, q, allow_large).map_err(|e| anyhow!("{e}"))?;
    let chunks = base.chunk_count();
    let next = AtomicUsize::new(0);
    let parts: Vec<Result<InductionCounts>> = thread::scope(|s| {
        let handles: Vec<_> = (0..threads.min(chunks).max(1))
            .map(|_| {
                let mut acc = base.clone();
                let next = &next;
                s.spawn(move || -> Result<InductionCounts> {
                    loop {
                        let k = next.fetch_add(1, Ordering::Relaxed);
                        if k >= chunks {
                            return Ok(acc);
                        }
                        acc.accumulate_chunk(k, allow_large).map_err(|e| anyhow!("{e}"))?;
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut total = base;
    for p in parts {
        total.merge(&p?).map_err(|e| anyhow!("{e}"))?;
    }
    Ok(total)
}

/// Runs `jobs` on `threads` workers, one [`Verifier`] each. Induction
/// counts are computed once per `(n, q)` and shared. The result follows the
/// order of `jobs`; a job that raises an error yields `Err` in its slot.
pub fn run_jobs(jobs: &[Job], allow_large: bool, threads: usize) -> Result<Vec<Result<CheckReport>>> {
    let needed: BTreeSet<(usize, u64)> = jobs
        .iter()
        .filter(|j| j.check.uses_induction())
        .filter_map(|j| j.q.map(|q| (j.n, q)))
        .collect();
    let mut shared = Vec::new();
    for (n, q) in needed {
        // Out-of-guard sizes are left to the job itself to report.
        if InductionCounts::empty(n, q, allow_large).is_ok() {
            shared.push(parallel_counts(n, q, allow_large, threads)?);
        }
    }

    let slots: Mutex<Vec<Option<Result<CheckReport>>>> = Mutex::new((0..jobs.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    thread::scope(|s| {
        for _ in 0..threads.min(jobs.len()).max(1) {
            let (shared, slots, next) = (&shared, &slots, &next);
            s.spawn(move || {
                let v = Verifier::new(allow_large);
                for c in shared {
                    v.insert_counts(c.clone());
                }
                loop {
                    let k = next.fetch_add(1, Ordering::Relaxed);
                    let Some(job) = jobs.get(k) else { break };
                    let r = v.run(job).map_err(|e| anyhow!("{job}: {e}"));
                    slots.lock().expect("poisoned")[k] = Some(r);
                }
            });
        }
    });
    Ok(slots.into_inner().expect("poisoned").into_iter().map(|r| r.expect("every job ran")).collect())
}
