//! k-boundance by deletion robustness: every removal of k − 1 top simplices
//! leaves some cycle of the list bounding.

use crate::complex::Complex;
use crate::gf2::Gf2Matrix;

use super::CycleList;

/// Calls `visit` on each `r`-subset of `0..m` in lexicographic order until it
/// returns `false`. Returns whether the enumeration ran to completion.
pub fn for_each_subset(m: usize, r: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if r > m {
        return true;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        if !visit(&idx) {
            return false;
        }
        // Advance the rightmost index that still has room.
        let Some(i) = (0..r).rev().find(|&i| idx[i] < m - r + i) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Whether some cycle of the list still bounds after deleting any `k − 1`
/// top simplices. Deleting fewer simplices only enlarges the image of δ, so
/// only the largest deletions are enumerated (all of them at once when the
/// complex has fewer than `k − 1` top simplices).
pub fn robust_under_deletion(complex: &Complex, list: &CycleList, k: usize) -> bool {
    if k == 0 || list.trivial_index().is_some() {
        return true;
    }
    let n = complex.n();
    let Ok(delta) = complex.boundary_matrix(n) else {
        return false;
    };
    let m = delta.cols();
    let targets: Vec<_> = list
        .distinct()
        .into_iter()
        .map(|i| list.cycles()[i].support().clone())
        .collect();
    let r = (k - 1).min(m);
    for_each_subset(m, r, |deleted| {
        let kept: Vec<usize> = (0..m).filter(|j| !deleted.contains(j)).collect();
        let sub: Gf2Matrix = delta.select_columns(&kept);
        targets
            .iter()
            .any(|c| sub.solve(c).expect("cycle length matches").is_some())
    })
}
