//! k-boundance of cycle lists.
//!
//! A list `L` of (n−1)-cycles is k-boundant when k pairwise simplex-disjoint
//! n-chains each bound some element of `L`. Three independent procedures
//! decide it:
//!
//! * **primal** searches for the disjoint chains directly;
//! * **dual** checks that deleting any k − 1 top simplices leaves some
//!   element of `L` bounding;
//! * **recursive** repeatedly cuts a bounding chain out of the complex
//!   (single-cycle lists only).
//!
//! All three must agree; [`Method::All`] turns a disagreement into a loud
//! [`Error::MethodDisagreement`] carrying a reproducer.
//!
//! Only the set of distinct cycles in `L` matters: a sublist may repeat
//! elements freely, so lists of any length are accepted for any k.

mod dual;
mod primal;
mod surgery;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use dual::{for_each_subset, robust_under_deletion};
pub use primal::{disjoint_chains, is_boundary};
pub use surgery::{closure_set, recursive_boundant, surgery, MAX_RECURSIVE_NULLITY};

use crate::complex::{Chain, Complex};
use crate::error::{Error, Result};
use crate::io::{ChainFile, CycleListFile};

pub(crate) fn check_cycle(complex: &Complex, c: &Chain) -> Result<()> {
    let n = complex.n();
    if n == 0 {
        return Err(Error::Invalid(
            "boundance needs a complex of dimension at least 1".into(),
        ));
    }
    if c.dim() != n - 1 {
        return Err(Error::WrongDimension {
            expected: n - 1,
            actual: c.dim(),
        });
    }
    if !complex.is_cycle(c)? {
        return Err(Error::NotACycle(format!(
            "({}) has nonzero boundary",
            complex.chain_ids(c).join(" + ")
        )));
    }
    Ok(())
}

/// Ordered list of (n−1)-cycles; repetitions and the trivial cycle are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleList {
    cycles: Vec<Chain>,
}

impl CycleList {
    pub fn new(complex: &Complex, cycles: Vec<Chain>) -> Result<Self> {
        for c in &cycles {
            check_cycle(complex, c)?;
        }
        Ok(Self { cycles })
    }

    /// `copies` copies of one cycle.
    pub fn repeated(complex: &Complex, c: Chain, copies: usize) -> Result<Self> {
        check_cycle(complex, &c)?;
        Ok(Self {
            cycles: vec![c; copies],
        })
    }

    pub fn cycles(&self) -> &[Chain] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Position of the first trivial cycle, if any.
    pub fn trivial_index(&self) -> Option<usize> {
        self.cycles.iter().position(Chain::is_zero)
    }

    /// Positions of the first occurrence of each distinct cycle.
    pub fn distinct(&self) -> Vec<usize> {
        (0..self.cycles.len())
            .filter(|&i| !self.cycles[..i].contains(&self.cycles[i]))
            .collect()
    }
}

/// k pairwise disjoint n-chains and, for each, the list position of the
/// cycle it bounds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundanceWitness {
    pub chains: Vec<Chain>,
    pub assignment: Vec<usize>,
}

impl BoundanceWitness {
    /// Re-checks disjointness and every boundary against the list.
    pub fn verify(&self, complex: &Complex, list: &CycleList) -> Result<()> {
        if self.chains.len() != self.assignment.len() {
            return Err(Error::Invalid("witness has unassigned chains".into()));
        }
        for (i, (p, &t)) in self.chains.iter().zip(&self.assignment).enumerate() {
            let target = list
                .cycles()
                .get(t)
                .ok_or_else(|| Error::Invalid(format!("chain {i} names list position {t}")))?;
            if complex.boundary(p)? != *target {
                return Err(Error::BoundaryMismatch);
            }
            if let Some(j) = (0..i).find(|&j| !self.chains[j].is_disjoint(p)) {
                return Err(Error::Invalid(format!("chains {j} and {i} share a simplex")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Primal,
    Dual,
    Recursive,
    All,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Primal => "primal",
            Method::Dual => "dual",
            Method::Recursive => "recursive",
            Method::All => "all",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "primal" => Ok(Method::Primal),
            "dual" => Ok(Method::Dual),
            "recursive" => Ok(Method::Recursive),
            "all" => Ok(Method::All),
            other => Err(Error::Invalid(format!("unknown method {other}"))),
        }
    }
}

/// Per-method outcomes of one k-boundance question.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdicts {
    pub primal: Option<bool>,
    pub witness: Option<BoundanceWitness>,
    pub dual: Option<bool>,
    pub recursive: Option<bool>,
}

impl Verdicts {
    /// The common verdict; `None` if nothing ran or the methods disagree.
    pub fn verdict(&self) -> Option<bool> {
        let ran: Vec<bool> = [self.primal, self.dual, self.recursive]
            .into_iter()
            .flatten()
            .collect();
        match ran.split_first() {
            Some((&first, rest)) if rest.iter().all(|&v| v == first) => Some(first),
            _ => None,
        }
    }
}

fn single_cycle(list: &CycleList) -> Option<&Chain> {
    match list.distinct().as_slice() {
        [only] => Some(&list.cycles()[*only]),
        _ => None,
    }
}

/// Runs the requested methods. With [`Method::All`] the recursive method is
/// included when the list has a single distinct cycle, and any disagreement
/// is returned as [`Error::MethodDisagreement`].
pub fn evaluate(complex: &Complex, list: &CycleList, k: usize, method: Method) -> Result<Verdicts> {
    let mut v = Verdicts::default();
    if matches!(method, Method::Primal | Method::All) {
        v.witness = disjoint_chains(complex, list, k);
        v.primal = Some(v.witness.is_some());
    }
    if matches!(method, Method::Dual | Method::All) {
        v.dual = Some(robust_under_deletion(complex, list, k));
    }
    match (method, single_cycle(list)) {
        (Method::Recursive | Method::All, Some(c)) => {
            v.recursive = Some(recursive_boundant(complex, c, k)?);
        }
        (Method::Recursive, None) => {
            if list.is_empty() && k == 0 {
                v.recursive = Some(true);
            } else {
                return Err(Error::MethodNotApplicable {
                    method: "recursive",
                    reason: format!("list has {} distinct cycles", list.distinct().len()),
                });
            }
        }
        _ => {}
    }
    if method == Method::All && v.verdict().is_none() {
        return Err(disagreement(complex, list, k, &v));
    }
    Ok(v)
}

fn disagreement(complex: &Complex, list: &CycleList, k: usize, v: &Verdicts) -> Error {
    let reproducer = serde_json::json!({
        "complex": complex.to_file(),
        "cycles": CycleListFile::of(complex, list.cycles()),
        "k": k,
        "verdicts": {
            "primal": v.primal,
            "dual": v.dual,
            "recursive": v.recursive,
        },
    });
    Error::MethodDisagreement {
        summary: format!(
            "k = {k}: primal {:?}, dual {:?}, recursive {:?}",
            v.primal, v.dual, v.recursive
        ),
        reproducer: serde_json::to_string_pretty(&reproducer).expect("reproducer serializes"),
    }
}

pub fn is_k_boundant(complex: &Complex, list: &CycleList, k: usize, method: Method) -> Result<bool> {
    let v = evaluate(complex, list, k, method)?;
    Ok(v.verdict().expect("at least one method ran"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MaxBoundance {
    Finite(usize),
    Unbounded,
}

impl fmt::Display for MaxBoundance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxBoundance::Finite(k) => write!(f, "{k}"),
            MaxBoundance::Unbounded => f.write_str("UNBOUNDED"),
        }
    }
}

/// Largest k for which the list is k-boundant, decided by disjoint packing.
pub fn max_boundance(complex: &Complex, list: &CycleList) -> Result<MaxBoundance> {
    max_boundance_by(complex, list, Method::Primal)
}

pub fn max_boundance_by(complex: &Complex, list: &CycleList, method: Method) -> Result<MaxBoundance> {
    if list.is_empty() {
        return Err(Error::EmptyList);
    }
    if list.trivial_index().is_some() {
        return Ok(MaxBoundance::Unbounded);
    }
    // Nonempty disjoint chains use distinct top simplices.
    let cap = complex.count(complex.n());
    let mut best = 0;
    for k in 1..=cap {
        if !is_k_boundant(complex, list, k, method)? {
            break;
        }
        best = k;
    }
    Ok(MaxBoundance::Finite(best))
}

/// k-cobordance: the list of k copies of `c1 + c2` is k-boundant.
pub fn cobordant(complex: &Complex, c1: &Chain, c2: &Chain, k: usize) -> Result<bool> {
    check_cycle(complex, c1)?;
    check_cycle(complex, c2)?;
    let list = CycleList::repeated(complex, c1.add(c2), k)?;
    is_k_boundant(complex, &list, k, Method::Primal)
}

/// Partition of `cycles` into k-cobordance classes, listed by first member.
/// Reflexivity, symmetry and transitivity are checked on every pair and
/// triple; a failure is returned as an error.
pub fn cobordance_classes(complex: &Complex, cycles: &[Chain], k: usize) -> Result<Vec<Vec<usize>>> {
    let m = cycles.len();
    let mut rel = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            rel[i][j] = cobordant(complex, &cycles[i], &cycles[j], k)?;
        }
    }
    for i in 0..m {
        if !rel[i][i] {
            return Err(Error::TransitivityViolation { a: i, b: i, c: i, k });
        }
        for j in 0..m {
            if rel[i][j] != rel[j][i] {
                return Err(Error::TransitivityViolation { a: i, b: j, c: i, k });
            }
            if !rel[i][j] {
                continue;
            }
            if let Some(l) = (0..m).find(|&l| rel[j][l] && !rel[i][l]) {
                return Err(Error::TransitivityViolation { a: i, b: j, c: l, k });
            }
        }
    }
    let mut class_of: Vec<Option<usize>> = vec![None; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        if class_of[i].is_some() {
            continue;
        }
        let members: Vec<usize> = (i..m).filter(|&j| rel[i][j]).collect();
        for &j in &members {
            class_of[j] = Some(classes.len());
        }
        classes.push(members);
    }
    Ok(classes)
}

/// JSON view of a witness, chains written as simplex ids.
pub fn witness_json(complex: &Complex, w: &BoundanceWitness) -> serde_json::Value {
    serde_json::json!({
        "chains": w.chains.iter().map(|c| ChainFile::of(complex, c)).collect::<Vec<_>>(),
        "assignment": w.assignment,
    })
}
