//! Cutting a bounding chain out of a complex, and the recursive form of
//! k-boundance built on it.

use std::collections::{BTreeSet, HashMap};

use crate::complex::{Chain, Complex, SimplexRef};
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;

/// Largest kernel dimension whose affine solution space the recursive
/// search will enumerate.
pub const MAX_RECURSIVE_NULLITY: usize = 20;

/// The n-simplices of `p`, then every face all of whose cofaces are already
/// in the set, dimension by dimension downwards.
pub fn closure_set(complex: &Complex, p: &Chain) -> Result<BTreeSet<SimplexRef>> {
    let n = complex.n();
    if p.dim() != n {
        return Err(Error::WrongDimension {
            expected: n,
            actual: p.dim(),
        });
    }
    if p.support().len() != complex.count(n) {
        return Err(Error::ChainLength {
            dim: n,
            expected: complex.count(n),
            actual: p.support().len(),
        });
    }
    let mut out: BTreeSet<SimplexRef> = p.indices().into_iter().map(|i| SimplexRef::new(n, i)).collect();
    let mut upper: Vec<bool> = (0..complex.count(n)).map(|i| p.contains(i)).collect();
    for d in (0..n).rev() {
        let cofaces = complex.cofaces(d);
        let level: Vec<bool> = cofaces
            .iter()
            .map(|cf| !cf.is_empty() && cf.iter().all(|&s| upper[s]))
            .collect();
        out.extend(
            level
                .iter()
                .enumerate()
                .filter(|(_, &inside)| inside)
                .map(|(i, _)| SimplexRef::new(d, i)),
        );
        upper = level;
    }
    Ok(out)
}

/// `K − P + c`: removes the closure set of `p`, except simplices lying in the
/// downward closure of `c`.
pub fn surgery(complex: &Complex, p: &Chain, c: &Chain) -> Result<Complex> {
    let n = complex.n();
    if n == 0 || c.dim() != n - 1 {
        return Err(Error::WrongDimension {
            expected: n.saturating_sub(1),
            actual: c.dim(),
        });
    }
    if complex.boundary(p)? != *c {
        return Err(Error::BoundaryMismatch);
    }
    let protected = complex.closure(c.indices().into_iter().map(|i| SimplexRef::new(n - 1, i)));
    let mut keep = complex.full_mask();
    for s in closure_set(complex, p)? {
        if !protected.contains(&s) {
            keep[s.dim][s.index] = false;
        }
    }
    Ok(complex.retain(n, &keep))
}

/// `k = 0` always holds; otherwise some `P` with `δP = c` must leave `c`
/// (k − 1)-boundant in `K − P + c`. Every `P` of the affine solution space is
/// tried.
pub fn recursive_boundant(complex: &Complex, c: &Chain, k: usize) -> Result<bool> {
    super::check_cycle(complex, c)?;
    let mut memo = HashMap::new();
    recurse(complex, c, k, &mut memo)
}

type Fingerprint = (Vec<Vec<String>>, usize);

fn fingerprint(complex: &Complex, k: usize) -> Fingerprint {
    let ids = (0..=complex.n())
        .map(|d| {
            let mut v: Vec<String> = complex.simplices(d).iter().map(|r| r.id().to_owned()).collect();
            v.sort();
            v
        })
        .collect();
    (ids, k)
}

fn recurse(
    complex: &Complex,
    c: &Chain,
    k: usize,
    memo: &mut HashMap<Fingerprint, bool>,
) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    let key = fingerprint(complex, k);
    if let Some(&known) = memo.get(&key) {
        return Ok(known);
    }
    let n = complex.n();
    let delta = complex.boundary_matrix(n)?;
    let Some(base) = delta.solve(c.support())? else {
        memo.insert(key, false);
        return Ok(false);
    };
    let kernel = delta.nullspace_basis();
    if kernel.len() > MAX_RECURSIVE_NULLITY {
        return Err(Error::SearchTooLarge {
            what: "kernel dimension of the top boundary map",
            size: kernel.len(),
            limit: MAX_RECURSIVE_NULLITY,
        });
    }
    let mut found = false;
    for mask in 0u64..(1u64 << kernel.len()) {
        let mut support: Gf2Vector = base.clone();
        for (i, z) in kernel.iter().enumerate() {
            if mask >> i & 1 == 1 {
                support.xor_assign(z);
            }
        }
        let p = Chain::new(n, support);
        let rest = surgery(complex, &p, c)?;
        let c_rest = rest.transfer(complex, c)?;
        if recurse(&rest, &c_rest, k - 1, memo)? {
            found = true;
            break;
        }
    }
    memo.insert(key, found);
    Ok(found)
}
