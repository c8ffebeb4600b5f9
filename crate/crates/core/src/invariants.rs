//! Degree strata, the irregularity skeleton, homology dimensions, and the
//! invariants Γ ⊇ Γ_k.
//!
//! Everything is computed on simplices. The inner points of an (n−1)-simplex
//! of degree d have local degree d and the inner points of an n-simplex have
//! local degree 2, so the closure of the degree-d locus is the subcomplex
//! generated by the matching simplices. Points of lower-dimensional simplices
//! are never classified.

use std::collections::{BTreeMap, HashSet};

use serde_json::json;

use crate::boundance::{self, CycleList, Method};
use crate::complex::{Chain, Complex, SimplexRef};
use crate::error::{Error, Result};
use crate::gf2::{self, Gf2Vector};
use crate::io::ChainFile;

/// Largest dim Γ whose elements `gamma_k` will enumerate.
pub const MAX_GAMMA_DIM: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratification {
    n: usize,
    /// degree → (n−1)-simplex indices with that degree, ascending.
    buckets: BTreeMap<usize, Vec<usize>>,
}

pub fn stratify(complex: &Complex) -> Result<Stratification> {
    let n = complex.n();
    if n == 0 {
        return Err(Error::Invalid("stratification needs n ≥ 1".into()));
    }
    let mut buckets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, d) in complex.degrees().into_iter().enumerate() {
        buckets.entry(d).or_default().push(i);
    }
    Ok(Stratification { n, buckets })
}

impl Stratification {
    pub fn buckets(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.buckets
    }

    pub fn bucket(&self, degree: usize) -> &[usize] {
        self.buckets.get(&degree).map_or(&[], Vec::as_slice)
    }

    /// Number of (n−1)-simplices per degree.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        self.buckets.iter().map(|(&d, v)| (d, v.len())).collect()
    }

    fn generated(&self, complex: &Complex, faces: Vec<usize>, with_top: bool) -> Complex {
        let n = self.n;
        let mut gens: Vec<SimplexRef> = faces.into_iter().map(|i| SimplexRef::new(n - 1, i)).collect();
        if with_top {
            gens.extend((0..complex.count(n)).map(|i| SimplexRef::new(n, i)));
        }
        complex.subcomplex(if with_top { n } else { n - 1 }, gens)
    }

    /// Closure of the degree-`d` locus; for `d = 2` this includes every n-simplex.
    pub fn x_subcomplex(&self, complex: &Complex, d: usize) -> Complex {
        self.generated(complex, self.bucket(d).to_vec(), d == 2)
    }

    /// Closure of the locus of degree ≥ `d`, i.e. the union of `X_i` for i ≥ d.
    pub fn y_subcomplex(&self, complex: &Complex, d: usize) -> Complex {
        let faces = self.buckets.range(d..).flat_map(|(_, v)| v.iter().copied()).collect();
        self.generated(complex, faces, d <= 2)
    }
}

/// K with all n-simplices and all degree-2 (n−1)-simplices removed.
pub fn irregularity_skeleton(complex: &Complex) -> Result<Complex> {
    let n = complex.n();
    if n == 0 {
        return Err(Error::Invalid("irregularity skeleton needs n ≥ 1".into()));
    }
    let mut keep = complex.full_mask();
    for (i, d) in complex.degrees().into_iter().enumerate() {
        if d == 2 {
            keep[n - 1][i] = false;
        }
    }
    Ok(complex.retain(n - 1, &keep))
}

/// dim Cycle_d / Bound_d over F₂. In dimension 0, `reduced` selects the
/// augmentation (every vertex to 1) rather than the zero map.
pub fn homology_dim(complex: &Complex, d: usize, reduced: bool) -> Result<usize> {
    let n = complex.n();
    if d > n {
        return Err(Error::DimensionOutOfRange { dim: d, n });
    }
    let size = complex.count(d);
    let down = if d == 0 && !reduced {
        0
    } else {
        complex.boundary_matrix(d)?.rank()
    };
    let up = if d < n {
        complex.boundary_matrix(d + 1)?.rank()
    } else {
        0
    };
    Ok(size - down - up)
}

/// (n−1)-cycles of `sub` written in the (n−1)-simplex basis of `complex`.
fn top_cycles_in(sub: &Complex, complex: &Complex) -> Result<Vec<Gf2Vector>> {
    let d = complex.n() - 1;
    let cycles = sub.boundary_matrix(d)?.nullspace_basis();
    cycles
        .into_iter()
        .map(|z| {
            let local = Chain::new(d, z);
            Ok(complex.transfer(sub, &local)?.support().clone())
        })
        .collect()
}

/// Basis of Γ: cycles of the Y₃ subcomplex that bound in K, as (n−1)-chains
/// of K in canonical echelon form.
///
/// Y₃ is (n−1)-dimensional, so its (n−1)-homology equals its cycle space and
/// Γ is the intersection of that cycle space with the boundaries of K.
pub fn gamma(complex: &Complex) -> Result<Vec<Chain>> {
    let n = complex.n();
    let strata = stratify(complex)?;
    let y3 = strata.y_subcomplex(complex, 3);
    debug_assert!({
        let skel = irregularity_skeleton(complex)?;
        (0..=y3.n()).all(|d| y3.simplices(d).iter().all(|r| skel.find(r.id()).is_some()))
    });
    let cycles = top_cycles_in(&y3, complex)?;
    let delta = complex.boundary_matrix(n)?;
    let boundaries: Vec<Gf2Vector> = (0..delta.cols()).map(|j| delta.column(j)).collect();
    let basis = if cycles.is_empty() || boundaries.is_empty() {
        Vec::new()
    } else {
        gf2::intersect_subspaces(&cycles, &boundaries)?
    };
    Ok(basis.into_iter().map(|v| Chain::new(n - 1, v)).collect())
}

/// Γ_k: the elements of Γ that are k-boundant in K.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaReport {
    pub gamma_basis: Vec<Chain>,
    pub k: usize,
    pub elements: Vec<Chain>,
    pub closed_under_addition: bool,
    /// Canonical basis of the elements when they form a subspace.
    pub basis: Option<Vec<Chain>>,
}

impl GammaReport {
    pub fn gamma_dim(&self) -> usize {
        self.gamma_basis.len()
    }

    pub fn gamma_k_dim(&self) -> Option<usize> {
        self.basis.as_ref().map(Vec::len)
    }

    pub fn to_json(&self, complex: &Complex) -> serde_json::Value {
        let chains = |v: &[Chain]| v.iter().map(|c| ChainFile::of(complex, c)).collect::<Vec<_>>();
        json!({
            "gamma_dim": self.gamma_dim(),
            "gamma_basis": chains(&self.gamma_basis),
            "k": self.k,
            "gamma_k_elements": chains(&self.elements),
            "closed_under_addition": self.closed_under_addition,
            "gamma_k_dim": self.gamma_k_dim(),
        })
    }
}

pub fn gamma_k(complex: &Complex, k: usize) -> Result<GammaReport> {
    if k == 0 {
        return Err(Error::Invalid("Γ_k needs k ≥ 1".into()));
    }
    let basis = gamma(complex)?;
    gamma_k_from(complex, basis, k)
}

/// Like [`gamma_k`] with a precomputed Γ basis.
pub fn gamma_k_from(complex: &Complex, gamma_basis: Vec<Chain>, k: usize) -> Result<GammaReport> {
    let dim = gamma_basis.len();
    if dim > MAX_GAMMA_DIM {
        return Err(Error::DimensionTooLarge {
            dim,
            limit: MAX_GAMMA_DIM,
        });
    }
    let d = complex.n() - 1;
    let len = complex.count(d);
    let mut elements = Vec::new();
    for mask in 0u64..(1u64 << dim) {
        let mut v = Gf2Vector::zeros(len);
        for (i, b) in gamma_basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                v.xor_assign(b.support());
            }
        }
        let h = Chain::new(d, v);
        let list = CycleList::new(complex, vec![h.clone()])?;
        if boundance::is_k_boundant(complex, &list, k, Method::Primal)? {
            elements.push(h);
        }
    }
    // A finite set S is a subspace iff it is nonempty and |S| = 2^dim span(S).
    let supports: Vec<Gf2Vector> = elements.iter().map(|c| c.support().clone()).collect();
    let span = gf2::span_dim(len, &supports)?;
    let distinct: HashSet<&Gf2Vector> = supports.iter().collect();
    let closed = !elements.is_empty() && distinct.len() == 1usize << span;
    let basis = if closed {
        Some(
            gf2::canonical_basis(len, &supports)?
                .into_iter()
                .map(|v| Chain::new(d, v))
                .collect(),
        )
    } else {
        None
    };
    Ok(GammaReport {
        gamma_basis,
        k,
        elements,
        closed_under_addition: closed,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ids(k: &Complex, dim: usize, idx: &[usize]) -> Vec<String> {
        let mut v: Vec<String> = idx.iter().map(|&i| k.simplices(dim)[i].id().to_owned()).collect();
        v.sort();
        v
    }

    #[test]
    fn stratify_examples() {
        let t = fixtures::tetra2();
        let s = stratify(&t).unwrap();
        assert_eq!(ids(&t, 1, s.bucket(3)), vec!["e12", "e13", "e23"]);
        assert_eq!(s.bucket(2).len(), 6);
        let y3 = s.y_subcomplex(&t, 3);
        assert_eq!((y3.n(), y3.count(0), y3.count(1)), (1, 3, 3));

        for k in 1..=5 {
            let sh = fixtures::sheets(k);
            assert_eq!(stratify(&sh).unwrap().bucket(k).len(), 3);
        }

        let sphere = fixtures::hollow_simplex(2);
        let s = stratify(&sphere).unwrap();
        assert_eq!(s.bucket(2).len(), 6);
        let y3 = s.y_subcomplex(&sphere, 3);
        assert_eq!(y3.count(0) + y3.count(1), 0);
    }

    #[test]
    fn y_is_union_of_x() {
        let t = fixtures::tetra2_subdiv();
        let s = stratify(&t).unwrap();
        let y2 = s.y_subcomplex(&t, 2);
        let mut union = std::collections::BTreeSet::new();
        for d in s.buckets().keys().filter(|&&d| d >= 2) {
            let x = s.x_subcomplex(&t, *d);
            for dim in 0..=x.n() {
                union.extend(x.simplices(dim).iter().map(|r| r.id().to_owned()));
            }
        }
        let mut ys = std::collections::BTreeSet::new();
        for dim in 0..=y2.n() {
            ys.extend(y2.simplices(dim).iter().map(|r| r.id().to_owned()));
        }
        assert_eq!(union, ys);
    }

    #[test]
    fn skeleton_examples() {
        let sphere = irregularity_skeleton(&fixtures::hollow_simplex(2)).unwrap();
        assert_eq!((sphere.n(), sphere.count(0), sphere.count(1)), (1, 4, 0));

        let t = fixtures::tetra2();
        let sk = irregularity_skeleton(&t).unwrap();
        assert_eq!((sk.count(0), sk.count(1)), (5, 3));
        assert_eq!(ids(&sk, 1, &[0, 1, 2]), vec!["e12", "e13", "e23"]);

        let sh = irregularity_skeleton(&fixtures::sheets(3)).unwrap();
        assert_eq!(
            sh.boundary_matrix(1).unwrap(),
            fixtures::triangle_graph().boundary_matrix(1).unwrap()
        );
    }

    #[test]
    fn homology_examples() {
        let sphere = fixtures::hollow_simplex(2);
        assert_eq!(homology_dim(&sphere, 2, true).unwrap(), 1);
        assert_eq!(homology_dim(&sphere, 1, true).unwrap(), 0);
        assert_eq!(homology_dim(&sphere, 0, true).unwrap(), 0);
        assert_eq!(homology_dim(&sphere, 0, false).unwrap(), 1);

        assert_eq!(homology_dim(&fixtures::tetra2(), 2, true).unwrap(), 2);

        let g = fixtures::triangle_graph();
        assert_eq!(homology_dim(&g, 1, true).unwrap(), 1);
        assert_eq!(homology_dim(&g, 0, true).unwrap(), 0);
        assert!(homology_dim(&g, 2, true).is_err());
    }

    #[test]
    fn gamma_examples() {
        for k in [fixtures::tetra2(), fixtures::sheets(3)] {
            let g = gamma(&k).unwrap();
            assert_eq!(g.len(), 1);
            let mut got = k.chain_ids(&g[0]);
            got.sort();
            assert_eq!(got, vec!["e12", "e13", "e23"]);
        }
        assert!(gamma(&fixtures::hollow_simplex(2)).unwrap().is_empty());
    }

    #[test]
    fn gamma_k_examples() {
        let t = fixtures::tetra2();
        let r3 = gamma_k(&t, 3).unwrap();
        assert!(r3.closed_under_addition);
        assert_eq!(r3.gamma_k_dim(), Some(1));
        assert_eq!(r3.elements.len(), 2);
        let r4 = gamma_k(&t, 4).unwrap();
        assert!(r4.closed_under_addition);
        assert_eq!(r4.gamma_k_dim(), Some(0));

        let s5 = fixtures::sheets(5);
        assert_eq!(gamma_k(&s5, 5).unwrap().gamma_k_dim(), Some(1));
        assert_eq!(gamma_k(&s5, 6).unwrap().gamma_k_dim(), Some(0));

        assert!(gamma_k(&t, 0).is_err());
    }

    #[test]
    fn gamma_report_json_shape() {
        let t = fixtures::tetra2();
        let v = gamma_k(&t, 4).unwrap().to_json(&t);
        assert_eq!(v["gamma_dim"], 1);
        assert_eq!(v["k"], 4);
        assert_eq!(v["gamma_k_dim"], 0);
        assert_eq!(v["closed_under_addition"], true);
        assert_eq!(v["gamma_k_elements"].as_array().unwrap().len(), 1);
    }
}
