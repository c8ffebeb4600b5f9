//! k-boundance by packing: search for k pairwise simplex-disjoint n-chains,
//! each bounding some cycle of the list.

use crate::complex::{Chain, Complex};
use crate::gf2::{Gf2Matrix, Gf2Vector};

use super::{BoundanceWitness, CycleList};

/// Some n-chain `P` with `δP = c`, or `None`. The trivial cycle gets the empty chain.
pub fn is_boundary(complex: &Complex, c: &Chain) -> crate::Result<Option<Chain>> {
    super::check_cycle(complex, c)?;
    let n = complex.n();
    if c.is_zero() {
        return Ok(Some(complex.zero_chain(n)));
    }
    let delta = complex.boundary_matrix(n)?;
    Ok(delta.solve(c.support())?.map(|x| Chain::new(n, x)))
}

/// All solutions of `δP = c` whose columns are linearly independent, sorted by
/// their ascending index sequences.
///
/// A packing never needs any other solution: if the support of `P` contains a
/// nonzero n-cycle `Z`, then `P + Z` has the same boundary on a strictly
/// smaller support.
pub(crate) fn independent_solutions(delta: &Gf2Matrix, c: &Gf2Vector) -> Vec<Gf2Vector> {
    let cols = delta.cols();
    let columns: Vec<Gf2Vector> = (0..cols).map(|j| delta.column(j)).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    walk(delta, &columns, 0, c.clone(), &mut chosen, &mut out);
    out.sort_by_cached_key(|v| v.ones().collect::<Vec<_>>());
    out
}

fn walk(
    delta: &Gf2Matrix,
    columns: &[Gf2Vector],
    next: usize,
    residual: Gf2Vector,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Gf2Vector>,
) {
    if residual.is_zero() {
        out.push(Gf2Vector::from_indices(columns.len(), chosen.iter().copied()));
        // Adding further columns to a solution with zero residual would need
        // them to sum to zero, which breaks independence.
        return;
    }
    if next == columns.len() {
        return;
    }
    let rest: Vec<usize> = (next..columns.len()).collect();
    let reachable = delta
        .select_columns(&rest)
        .solve(&residual)
        .expect("residual has the row count")
        .is_some();
    if !reachable {
        return;
    }
    chosen.push(next);
    if delta.select_columns(chosen).rank() == chosen.len() {
        walk(delta, columns, next + 1, residual.xor(&columns[next]), chosen, out);
    }
    chosen.pop();
    walk(delta, columns, next + 1, residual, chosen, out);
}

struct Candidate {
    support: Gf2Vector,
    first: usize,
    /// Index into the cycle list of the cycle this chain bounds.
    target: usize,
}

/// Witness of k-boundance if one exists.
///
/// Candidates are tried in ascending order of their index sequences and a
/// witness lists its chains by increasing smallest simplex, so the first
/// witness found is the lexicographically smallest in that order.
pub fn disjoint_chains(complex: &Complex, list: &CycleList, k: usize) -> Option<BoundanceWitness> {
    let n = complex.n();
    if k == 0 {
        return Some(BoundanceWitness::default());
    }
    if let Some(t) = list.trivial_index() {
        return Some(BoundanceWitness {
            chains: vec![complex.zero_chain(n); k],
            assignment: vec![t; k],
        });
    }
    let delta = complex.boundary_matrix(n).ok()?;
    let mut candidates: Vec<(Vec<usize>, Candidate)> = Vec::new();
    for target in list.distinct() {
        for support in independent_solutions(&delta, list.cycles()[target].support()) {
            let key: Vec<usize> = support.ones().collect();
            let first = key[0];
            candidates.push((
                key,
                Candidate {
                    support,
                    first,
                    target,
                },
            ));
        }
    }
    candidates.sort_by(|a, b| a.0.cmp(&b.0));
    let candidates: Vec<Candidate> = candidates.into_iter().map(|(_, c)| c).collect();

    let mut picked = Vec::with_capacity(k);
    let used = Gf2Vector::zeros(delta.cols());
    if !pack(&candidates, k, 0, &used, &mut picked) {
        return None;
    }
    Some(BoundanceWitness {
        chains: picked
            .iter()
            .map(|&i| Chain::new(n, candidates[i].support.clone()))
            .collect(),
        assignment: picked.iter().map(|&i| candidates[i].target).collect(),
    })
}

fn pack(
    candidates: &[Candidate],
    k: usize,
    from: usize,
    used: &Gf2Vector,
    picked: &mut Vec<usize>,
) -> bool {
    if picked.len() == k {
        return true;
    }
    let need = k - picked.len();
    // Chains of a witness have pairwise distinct smallest simplices, which
    // bounds how many more can fit.
    if distinct_firsts(candidates, from, used) < need {
        return false;
    }
    for i in from..candidates.len() {
        let cand = &candidates[i];
        if !cand.support.is_disjoint(used) {
            continue;
        }
        // Later chains must start strictly after this one.
        let next = candidates[i..]
            .iter()
            .position(|c| c.first > cand.first)
            .map_or(candidates.len(), |p| i + p);
        let mut now_used = used.clone();
        now_used.or_assign(&cand.support);
        picked.push(i);
        if pack(candidates, k, next, &now_used, picked) {
            return true;
        }
        picked.pop();
    }
    false
}

fn distinct_firsts(candidates: &[Candidate], from: usize, used: &Gf2Vector) -> usize {
    let mut count = 0;
    let mut last = None;
    for c in &candidates[from..] {
        if c.support.is_disjoint(used) && last != Some(c.first) {
            count += 1;
            last = Some(c.first);
        }
    }
    count
}
