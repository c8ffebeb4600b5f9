//! Acceptance criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test -p menger-core --test acceptance -- --nocapture --test-threads=1`.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use menger_core::boundance::{self, CycleList, MaxBoundance, Method};
use menger_core::fixtures::{self, CorpusInstance};
use menger_core::graph;
use menger_core::invariants;
use menger_core::{Chain, Complex};

const CORPUS_SIZE: usize = 240;
const CORPUS_SEED: u64 = 0x5eed_2026;
const MAX_TOP: usize = 8;

fn corpus() -> Vec<CorpusInstance> {
    fixtures::corpus(CORPUS_SIZE, CORPUS_SEED, MAX_TOP)
}

fn report(id: u32, name: &str, pass: bool, detail: &str) {
    println!("[{}] AC{id} {name}: {detail}", if pass { "PASS" } else { "FAIL" });
}

fn triangle(k: &Complex) -> Chain {
    k.chain_from_ids(1, ["e12", "e13", "e23"]).unwrap()
}

fn fixture_complexes() -> Vec<(String, Complex)> {
    let mut out = vec![
        ("tetra2".to_owned(), fixtures::tetra2()),
        ("tetra2-subdiv".to_owned(), fixtures::tetra2_subdiv()),
        ("triangle".to_owned(), fixtures::triangle_graph()),
    ];
    for k in 1..=5 {
        out.push((format!("sheets-{k}"), fixtures::sheets(k)));
        out.push((format!("par-edges-{k}"), fixtures::par_edges(k)));
    }
    for n in 1..=3 {
        out.push((format!("hollow-simplex-{n}"), fixtures::hollow_simplex(n)));
    }
    out
}

#[test]
fn ac01_menger_equivalence() {
    let start = Instant::now();
    let corpus = corpus();
    let (mut total, mut agree) = (0, 0);
    let mut first_bad = None;
    for inst in &corpus {
        let list = CycleList::new(&inst.complex, inst.cycles.clone()).unwrap();
        for k in 1..=4 {
            let primal = boundance::disjoint_chains(&inst.complex, &list, k).is_some();
            let dual = boundance::robust_under_deletion(&inst.complex, &list, k);
            total += 1;
            if primal == dual {
                agree += 1;
            } else if first_bad.is_none() {
                first_bad = Some((inst.seed, k));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = agree == total && corpus.len() >= 200 && elapsed < Duration::from_secs(300);
    report(
        1,
        "primal ⇔ dual",
        pass,
        &format!(
            "{agree}/{total} agree over {} complexes in {:.2?}; first disagreement {first_bad:?}",
            corpus.len(),
            elapsed
        ),
    );
    assert!(pass);
}

#[test]
fn ac02_classical_menger_cross_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf10_0d);
    let (mut total, mut agree, mut positives) = (0, 0, 0);
    for _ in 0..220 {
        let v = rng.gen_range(2..=8);
        let e = rng.gen_range(0..=14);
        let g = fixtures::random_multigraph(v, e, rng.gen()).unwrap();
        let u = rng.gen_range(1..=v).to_string();
        let w = loop {
            let w = rng.gen_range(1..=v).to_string();
            if w != u {
                break w;
            }
        };
        for k in 1..=4 {
            let pairs = vec![(u.clone(), w.clone()); k];
            let homological = graph::pairs_boundant(&g, &pairs, k, Method::All).unwrap();
            let flow = graph::k_edge_connected_flow(&g, &u, &w, k).unwrap();
            total += 1;
            positives += usize::from(flow);
            if homological == flow {
                agree += 1;
            }
        }
    }
    let pass = agree == total;
    report(
        2,
        "pairs_boundant ⇔ max-flow",
        pass,
        &format!("{agree}/{total} agree ({positives} k-edge-connected instances)"),
    );
    assert!(pass);
}

#[test]
fn ac03_recursive_equals_flat() {
    let corpus = corpus();
    let (mut total, mut agree) = (0, 0);
    for inst in corpus.iter().filter(|i| i.cycles.len() == 1) {
        let c = &inst.cycles[0];
        let list = CycleList::new(&inst.complex, vec![c.clone()]).unwrap();
        for k in 1..=4 {
            let flat = boundance::is_k_boundant(&inst.complex, &list, k, Method::Primal).unwrap();
            let rec = boundance::recursive_boundant(&inst.complex, c, k).unwrap();
            total += 1;
            if flat == rec {
                agree += 1;
            }
        }
    }
    let pass = agree == total && total > 0;
    report(3, "recursive ⇔ flat", pass, &format!("{agree}/{total} single-cycle checks agree"));
    assert!(pass);
}

#[test]
fn ac04_tetra2_fixture() {
    let k = fixtures::tetra2();
    let c = triangle(&k);
    let list = CycleList::new(&k, vec![c.clone()]).unwrap();

    let gamma = invariants::gamma(&k).unwrap();
    let g3 = invariants::gamma_k(&k, 3).unwrap();
    let g4 = invariants::gamma_k(&k, 4).unwrap();
    let max = boundance::max_boundance(&k, &list).unwrap();
    let witness = boundance::disjoint_chains(&k, &list, 3).unwrap();
    let witness_ids: Vec<Vec<&str>> = witness.chains.iter().map(|p| k.chain_ids(p)).collect();
    let h2 = invariants::homology_dim(&k, 2, true).unwrap();

    let checks = [
        ("dim Γ = 1", gamma.len() == 1 && gamma[0] == c),
        ("Γ₃ = Γ", g3.closed_under_addition && g3.gamma_k_dim() == Some(1) && g3.elements.contains(&c)),
        ("Γ₄ = {0}", g4.closed_under_addition && g4.gamma_k_dim() == Some(0)),
        ("max_boundance = 3", max == MaxBoundance::Finite(3)),
        (
            "witness {A},{B,C,D},{E,F,G}",
            witness_ids == vec![vec!["A"], vec!["B", "C", "D"], vec!["E", "F", "G"]],
        ),
        ("dim H₂ = 2", h2 == 2),
    ];
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    let pass = failed.is_empty();
    report(4, "tetra2 fixture", pass, &format!("failed checks: {failed:?}"));
    assert!(pass);
}

#[test]
fn ac05_sheets_family() {
    let mut failures = Vec::new();
    for s in 1..=5 {
        let k = fixtures::sheets(s);
        let list = CycleList::new(&k, vec![triangle(&k)]).unwrap();
        let primal = boundance::max_boundance_by(&k, &list, Method::Primal).unwrap();
        let dual = boundance::max_boundance_by(&k, &list, Method::Dual).unwrap();
        let degrees_ok = k.degrees().iter().all(|&d| d == s);
        if primal != MaxBoundance::Finite(s) || dual != MaxBoundance::Finite(s) || !degrees_ok {
            failures.push((s, primal, dual, degrees_ok));
        }
    }
    let pass = failures.is_empty();
    report(5, "sheets-k max_boundance = k", pass, &format!("failures: {failures:?}"));
    assert!(pass);
}

#[test]
fn ac06_cobordance_laws() {
    let corpus = corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0b0);
    let (mut triples, mut violations, mut related) = (0, 0, 0);
    for inst in corpus.iter().filter(|i| i.complex.count(i.complex.n()) > 0).take(120) {
        let k = &inst.complex;
        let n = k.n();
        let base = fixtures::random_cycle(k, 0.3, &mut rng);
        // Perturb a common base by boundaries so that some triples are related.
        let mut perturbed = || {
            let p = k
                .chain(n, (0..k.count(n)).filter(|_| rng.gen_bool(0.3)))
                .unwrap();
            base.add(&k.boundary(&p).unwrap())
        };
        let cs = [perturbed(), perturbed(), perturbed()];
        let kk = rng.gen_range(1..=3);
        let rel = |a: &Chain, b: &Chain| boundance::cobordant(k, a, b, kk).unwrap();
        triples += 1;
        let reflexive = cs.iter().all(|c| rel(c, c));
        let symmetric = (0..3).all(|i| (0..3).all(|j| rel(&cs[i], &cs[j]) == rel(&cs[j], &cs[i])));
        let transitive = (0..3).all(|i| {
            (0..3).all(|j| (0..3).all(|l| !(rel(&cs[i], &cs[j]) && rel(&cs[j], &cs[l])) || rel(&cs[i], &cs[l])))
        });
        related += usize::from(rel(&cs[0], &cs[1]) && rel(&cs[1], &cs[2]));
        if !(reflexive && symmetric && transitive) {
            violations += 1;
        }
        // The partition builder re-verifies the same laws.
        if boundance::cobordance_classes(k, &cs, kk).is_err() {
            violations += 1;
        }
    }
    let pass = violations == 0 && triples >= 100;
    report(
        6,
        "cobordance is an equivalence",
        pass,
        &format!("{triples} triples, {related} with a related chain, {violations} violations"),
    );
    assert!(pass);
}

#[test]
fn ac07_trivial_cycle_rule() {
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut complexes: Vec<(String, Complex, Vec<Chain>)> = corpus()
        .into_iter()
        .take(60)
        .map(|i| (format!("seed {}", i.seed), i.complex, i.cycles))
        .collect();
    for (name, k) in fixture_complexes().into_iter().filter(|(_, k)| k.n() >= 1) {
        complexes.push((name, k, Vec::new()));
    }
    for (name, k, mut cycles) in complexes {
        cycles.push(k.zero_chain(k.n() - 1));
        let list = CycleList::new(&k, cycles).unwrap();
        let top = k.count(k.n());
        for kk in 0..=top + 3 {
            checked += 1;
            let method = if kk <= 6 { Method::All } else { Method::Primal };
            if !boundance::is_k_boundant(&k, &list, kk, method).unwrap() {
                failures.push((name.clone(), kk));
            }
        }
        if boundance::max_boundance(&k, &list).unwrap() != MaxBoundance::Unbounded {
            failures.push((name, usize::MAX));
        }
    }
    let pass = failures.is_empty();
    report(7, "trivial cycle ⇒ k-boundant for all k", pass, &format!("{checked} checks, failures {failures:?}"));
    assert!(pass);
}

#[test]
fn ac08_chain_complex_sanity() {
    let mut bad = Vec::new();
    let mut all: Vec<(String, Complex)> = corpus()
        .into_iter()
        .map(|i| (format!("seed {}", i.seed), i.complex))
        .collect();
    all.extend(fixture_complexes());
    for (name, k) in &all {
        if k.n() >= 1 {
            let aug = k.boundary_matrix(0).unwrap();
            if !aug.mul(&k.boundary_matrix(1).unwrap()).unwrap().is_zero() {
                bad.push(format!("{name}: d=1"));
            }
        }
        for d in 2..=k.n() {
            let dd = k.boundary_matrix(d - 1).unwrap().mul(&k.boundary_matrix(d).unwrap()).unwrap();
            if !dd.is_zero() {
                bad.push(format!("{name}: d={d}"));
            }
        }
    }
    for n in 1..=3 {
        let k = fixtures::hollow_simplex(n);
        for d in 0..=n {
            let expected = usize::from(d == n);
            let got = invariants::homology_dim(&k, d, true).unwrap();
            if got != expected {
                bad.push(format!("hollow-simplex({n}) H_{d} = {got}"));
            }
        }
    }
    let pass = bad.is_empty();
    report(8, "δ∘δ = 0 and sphere homology", pass, &format!("{} complexes; problems {bad:?}", all.len()));
    assert!(pass);
}

#[test]
fn ac09_degree_bound() {
    let (mut positives, mut violations) = (0, 0);
    let mut all: Vec<(Complex, Vec<Chain>)> = corpus().into_iter().map(|i| (i.complex, i.cycles)).collect();
    for (_, k) in fixture_complexes().into_iter().filter(|(_, k)| k.n() == 2) {
        let c = triangle(&k);
        all.push((k, vec![c]));
    }
    for (k, cycles) in &all {
        let degrees = k.degrees();
        for c in cycles {
            let list = CycleList::new(k, vec![c.clone()]).unwrap();
            for kk in 1..=4 {
                if boundance::is_k_boundant(k, &list, kk, Method::Primal).unwrap() {
                    positives += 1;
                    if c.indices().iter().any(|&f| degrees[f] < kk) {
                        violations += 1;
                    }
                }
            }
        }
    }
    let pass = violations == 0;
    report(9, "degree bound", pass, &format!("{positives} k-boundant cycles, {violations} violations"));
    assert!(pass);
}

#[test]
fn ac10_invariance_desk_check() {
    let a = fixtures::tetra2();
    let b = fixtures::tetra2_subdiv();
    let dims = |k: &Complex| {
        let g = invariants::gamma(k).unwrap().len();
        let g3 = invariants::gamma_k(k, 3).unwrap().gamma_k_dim();
        let g4 = invariants::gamma_k(k, 4).unwrap().gamma_k_dim();
        (g, g3, g4)
    };
    let (da, db) = (dims(&a), dims(&b));
    let pass = da == db;
    report(10, "Γ, Γ₃, Γ₄ agree on tetra2 and its subdivision", pass, &format!("tetra2 {da:?}, subdiv {db:?}"));
    assert!(pass);
}
