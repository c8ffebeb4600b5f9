//! F₂ simplicial chain algebra and k-boundance of cycle lists.
//!
//! A list of (n−1)-cycles in an n-dimensional complex is *k-boundant* when
//! k pairwise simplex-disjoint n-chains each bound one of its elements. This
//! crate decides k-boundance by disjoint-chain packing, by robustness under
//! deletion of k − 1 top simplices, and by repeated surgery, and checks that
//! the three agree. It also computes the degree-stratified invariants Γ and
//! Γ_k of a complex.
//!
//! ```
//! use menger_core::{boundance, fixtures};
//!
//! let k = fixtures::tetra2();
//! let c = k.chain_from_ids(1, ["e12", "e13", "e23"]).unwrap();
//! let list = boundance::CycleList::new(&k, vec![c]).unwrap();
//! assert!(boundance::is_k_boundant(&k, &list, 3, boundance::Method::All).unwrap());
//! assert!(!boundance::is_k_boundant(&k, &list, 4, boundance::Method::All).unwrap());
//! ```

pub mod boundance;
pub mod complex;
pub mod error;
pub mod fixtures;
pub mod gf2;
pub mod graph;
pub mod invariants;
pub mod io;

pub use boundance::{BoundanceWitness, CycleList, MaxBoundance, Method};
pub use complex::{BuildOptions, Chain, Complex, SimplexRecord, SimplexRef};
pub use error::{Error, Result};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use invariants::GammaReport;
