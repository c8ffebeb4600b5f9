//! Workloads shared by the criterion benches.

use menger_core::fixtures::{self, RandomSpec};
use menger_core::{Chain, Complex, CycleList};

/// The triangle cycle of a `sheets`-style complex as a one-element list.
pub fn triangle_list(k: &Complex) -> CycleList {
    let c = k
        .chain_from_ids(1, ["e12", "e13", "e23"])
        .expect("complex has the triangle edges");
    CycleList::new(k, vec![c]).expect("triangle is a cycle")
}

/// A random 2-complex and the boundary of its first top simplices, which
/// bounds by construction.
pub fn random_instance(seed: u64) -> (Complex, CycleList) {
    let spec = RandomSpec {
        max_top: Some(8),
        ..RandomSpec::new(2, 6, 0.5, seed)
    };
    let k = fixtures::random(&spec).expect("valid parameters");
    let take = k.count(2).min(2);
    let p: Chain = k.chain(2, 0..take).expect("indices in range");
    let c = k.boundary(&p).expect("dimension 2 has a boundary");
    let list = CycleList::new(&k, vec![c]).expect("boundaries are cycles");
    (k, list)
}
