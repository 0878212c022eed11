use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::graph::{EdgeSet, IndiffGraph, MAX_VERTICES};
use crate::error::{guard, Error, Result};

/// Size ceiling for the exhaustive path generators.
pub const MAX_PATH_SIZE: usize = 8;

/// A lattice step: east `(1,0)`, south `(0,-1)`, or diagonal `(1,-1)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    D,
    E,
    S,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::D => 'D',
            Step::E => 'E',
            Step::S => 'S',
        }
    }

    fn from_letter(c: char) -> Result<Step> {
        match c {
            'D' => Ok(Step::D),
            'E' => Ok(Step::E),
            'S' => Ok(Step::S),
            _ => Err(Error::Parse(format!("unknown step `{c}`"))),
        }
    }
}

fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.trim().chars().map(Step::from_letter).collect()
}

fn write_steps(f: &mut fmt::Formatter<'_>, steps: &[Step]) -> fmt::Result {
    for s in steps {
        write!(f, "{}", s.letter())?;
    }
    Ok(())
}

/// Walks `steps` tracking `x = #E + #D` and `s = #S + #D`; checks the path
/// stays weakly above the diagonal, ends at `(n, n)`, and (if `tall`) has no
/// D step starting on the diagonal. Returns `n`.
fn validate(steps: &[Step], tall: bool) -> Result<usize> {
    let (mut x, mut s) = (0usize, 0usize);
    for (k, &st) in steps.iter().enumerate() {
        match st {
            Step::E => x += 1,
            Step::S => s += 1,
            Step::D => {
                if tall && x == s {
                    return Err(Error::InvalidPath(format!("D step {k} starts on the diagonal")));
                }
                x += 1;
                s += 1;
            }
        }
        if s > x {
            return Err(Error::InvalidPath(format!("step {k} goes below the diagonal")));
        }
    }
    if x != s {
        return Err(Error::InvalidPath(format!("ends at ({x},{s}), not on the diagonal")));
    }
    guard("path size", x as u64, MAX_VERTICES as u64)?;
    Ok(x)
}

/// A Dyck path: E and S steps only, never below the diagonal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.contains(&Step::D) {
            return Err(Error::InvalidPath(String::from("D step in a Dyck path")));
        }
        validate(&steps, true)?;
        Ok(DyckPath(steps))
    }

    /// The staircase `(ES)^n`.
    pub fn staircase(n: usize) -> Self {
        DyckPath((0..n).flat_map(|_| [Step::E, Step::S]).collect())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len() / 2
    }

    pub fn to_schroder(&self) -> SchroderPath {
        SchroderPath(self.0.clone())
    }

    /// The edge set below the path.
    pub fn area(&self) -> EdgeSet {
        self.to_schroder().area()
    }

    /// The indifference graph whose edges are the area squares.
    pub fn graph(&self) -> Result<IndiffGraph> {
        IndiffGraph::new(self.area())
    }

    /// Replaces each peak `ES` whose E step starts off the diagonal by `D`.
    pub fn mesa(&self) -> SchroderPath {
        let mut out = Vec::with_capacity(self.0.len());
        let (mut x, mut s) = (0usize, 0usize);
        let mut k = 0;
        while k < self.0.len() {
            let st = self.0[k];
            if st == Step::E && x > s && self.0.get(k + 1) == Some(&Step::S) {
                out.push(Step::D);
                x += 1;
                s += 1;
                k += 2;
                continue;
            }
            match st {
                Step::E => x += 1,
                _ => s += 1,
            }
            out.push(st);
            k += 1;
        }
        SchroderPath(out)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_steps(f, &self.0)
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DyckPath::new(parse_steps(s)?)
    }
}

/// A tall Schröder path: E, S, D steps, weakly above the diagonal, with no
/// D step starting on the diagonal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SchroderPath(Vec<Step>);

impl SchroderPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        validate(&steps, true)?;
        Ok(SchroderPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().filter(|&&s| s != Step::S).count()
    }

    /// `ED^{n-1}S`, the path whose diagonal set is the whole superdiagonal.
    pub fn e_d_s(n: usize) -> Result<Self> {
        if n == 0 {
            return Ok(SchroderPath(Vec::new()));
        }
        let mut v = alloc::vec![Step::E];
        v.extend(core::iter::repeat(Step::D).take(n - 1));
        v.push(Step::S);
        SchroderPath::new(v)
    }

    /// The Dyck path when the path has no D steps.
    pub fn as_dyck(&self) -> Option<DyckPath> {
        (!self.0.contains(&Step::D)).then(|| DyckPath(self.0.clone()))
    }

    /// Column-by-column walk: for each column `j` (1-based), the step type
    /// that enters it (E or D) and the number of S/D steps taken before it.
    fn columns(&self) -> impl Iterator<Item = (usize, Step, usize)> + '_ {
        let mut s = 0usize;
        let mut j = 0usize;
        self.0.iter().filter_map(move |&st| match st {
            Step::S => {
                s += 1;
                None
            }
            Step::E => {
                j += 1;
                Some((j, Step::E, s))
            }
            Step::D => {
                j += 1;
                let r = Some((j, Step::D, s));
                s += 1;
                r
            }
        })
    }

    /// Squares `{i, j}` lying completely below the path.
    pub fn area(&self) -> EdgeSet {
        let n = self.size();
        let mut e = EdgeSet::empty(n).expect("validated size");
        for (j, st, s) in self.columns() {
            let first = if st == Step::D { s + 2 } else { s + 1 };
            for i in first..j {
                e.insert(i, j).expect("in range");
            }
        }
        e
    }

    /// Squares `{i, j}` crossed by a D step.
    pub fn diag(&self) -> EdgeSet {
        let n = self.size();
        let mut e = EdgeSet::empty(n).expect("validated size");
        for (j, st, s) in self.columns() {
            if st == Step::D {
                e.insert(s + 1, j).expect("tall path");
            }
        }
        e
    }

    /// `Area ∪ Diag`, which is always interval-closed.
    pub fn full_graph(&self) -> IndiffGraph {
        let u = self.area().union(&self.diag()).expect("same n");
        IndiffGraph::new(u).expect("area plus diag is interval-closed")
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_steps(f, &self.0)
    }
}

impl FromStr for SchroderPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SchroderPath::new(parse_steps(s)?)
    }
}

impl From<DyckPath> for SchroderPath {
    fn from(p: DyckPath) -> Self {
        SchroderPath(p.0)
    }
}

/// The Dyck path whose area is the given interval-closed edge set.
pub fn area_inverse(e: &EdgeSet) -> Result<DyckPath> {
    let g = IndiffGraph::new(*e)?;
    let mins = g.min_neighbors();
    let mut steps = Vec::with_capacity(2 * g.n());
    let mut s = 0usize;
    for &m in &mins {
        // Column j needs exactly m-1 south steps before its E step.
        while s < m - 1 {
            steps.push(Step::S);
            s += 1;
        }
        steps.push(Step::E);
    }
    while s < g.n() {
        steps.push(Step::S);
        s += 1;
    }
    DyckPath::new(steps)
}

/// All Dyck paths of size `n`, lexicographic in their step strings.
pub fn gen_dyck(n: usize) -> Result<Vec<DyckPath>> {
    guard("path size", n as u64, MAX_PATH_SIZE as u64)?;
    let mut out = Vec::new();
    walk(n, false, &mut Vec::new(), 0, 0, &mut |v| out.push(DyckPath(v.to_vec())));
    Ok(out)
}

/// All tall Schröder paths of size `n`, lexicographic in their step strings.
pub fn gen_tall_schroder(n: usize) -> Result<Vec<SchroderPath>> {
    guard("path size", n as u64, MAX_PATH_SIZE as u64)?;
    let mut out = Vec::new();
    walk(n, true, &mut Vec::new(), 0, 0, &mut |v| out.push(SchroderPath(v.to_vec())));
    Ok(out)
}

fn walk(
    n: usize,
    allow_d: bool,
    cur: &mut Vec<Step>,
    x: usize,
    s: usize,
    emit: &mut dyn FnMut(&[Step]),
) {
    if x == n && s == n {
        emit(cur);
        return;
    }
    // Alphabetical D < E < S gives lexicographic output.
    if allow_d && x < n && s < x {
        cur.push(Step::D);
        walk(n, allow_d, cur, x + 1, s + 1, emit);
        cur.pop();
    }
    if x < n {
        cur.push(Step::E);
        walk(n, allow_d, cur, x + 1, s, emit);
        cur.pop();
    }
    if s < x {
        cur.push(Step::S);
        walk(n, allow_d, cur, x, s + 1, emit);
        cur.pop();
    }
}
