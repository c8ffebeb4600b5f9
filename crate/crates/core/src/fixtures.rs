//! Named complex families and seeded random generators.
//!
//! Every generator is deterministic: the same parameters and seed give the
//! same complex, and therefore byte-identical files.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{BuildOptions, Chain, Complex};
use crate::gf2::Gf2Vector;
use crate::error::{Error, Result};
use crate::io::{ComplexFile, SimplexEntry};

fn entry(dim: usize, id: &str, vertices: &[&str]) -> SimplexEntry {
    SimplexEntry {
        dim,
        id: id.to_owned(),
        vertices: vertices.iter().map(|v| (*v).to_owned()).collect(),
        faces: None,
    }
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| (*s).to_owned()).collect()
}

fn build(file: ComplexFile) -> Complex {
    file.build().expect("fixture is well formed")
}

/// Vertices 1, 2, 3 and edges e12, e13, e23.
pub fn triangle_graph() -> Complex {
    build(ComplexFile {
        n: 1,
        vertices: strings(&["1", "2", "3"]),
        simplices: vec![
            entry(1, "e12", &["1", "2"]),
            entry(1, "e13", &["1", "3"]),
            entry(1, "e23", &["2", "3"]),
        ],
    })
}

fn tetra2_file() -> ComplexFile {
    let mut simplices = vec![
        entry(1, "e12", &["1", "2"]),
        entry(1, "e13", &["1", "3"]),
        entry(1, "e23", &["2", "3"]),
        entry(1, "e14", &["1", "4"]),
        entry(1, "e24", &["2", "4"]),
        entry(1, "e34", &["3", "4"]),
        entry(1, "e15", &["1", "5"]),
        entry(1, "e25", &["2", "5"]),
        entry(1, "e35", &["3", "5"]),
    ];
    for (id, v) in [
        ("A", ["1", "2", "3"]),
        ("B", ["1", "2", "4"]),
        ("C", ["1", "3", "4"]),
        ("D", ["2", "3", "4"]),
        ("E", ["1", "2", "5"]),
        ("F", ["1", "3", "5"]),
        ("G", ["2", "3", "5"]),
    ] {
        simplices.push(entry(2, id, &v));
    }
    ComplexFile {
        n: 2,
        vertices: strings(&["1", "2", "3", "4", "5"]),
        simplices,
    }
}

/// Two hollow tetrahedra (apexes 4 and 5) sharing the triangle A = 123.
///
/// Triangles: A=123, B=124, C=134, D=234, E=125, F=135, G=235. The edges of A
/// have degree 3, all other edges degree 2.
pub fn tetra2() -> Complex {
    build(tetra2_file())
}

/// `tetra2` with triangle D = 234 stellarly subdivided by a new vertex `x`.
pub fn tetra2_subdiv() -> Complex {
    let mut file = tetra2_file();
    file.vertices.push("x".into());
    file.simplices.retain(|s| s.id != "D");
    file.simplices.extend([
        entry(1, "e2x", &["2", "x"]),
        entry(1, "e3x", &["3", "x"]),
        entry(1, "e4x", &["4", "x"]),
        entry(2, "D1", &["2", "3", "x"]),
        entry(2, "D2", &["2", "4", "x"]),
        entry(2, "D3", &["3", "4", "x"]),
    ]);
    build(file)
}

/// `k` parallel triangles T1..Tk over one triangle of edges on vertices 1, 2, 3.
pub fn sheets(k: usize) -> Complex {
    let mut simplices = vec![
        entry(1, "e12", &["1", "2"]),
        entry(1, "e13", &["1", "3"]),
        entry(1, "e23", &["2", "3"]),
    ];
    for i in 1..=k {
        let mut t = entry(2, &format!("T{i}"), &["1", "2", "3"]);
        t.faces = Some(strings(&["e23", "e13", "e12"]));
        simplices.push(t);
    }
    build(ComplexFile {
        n: 2,
        vertices: strings(&["1", "2", "3"]),
        simplices,
    })
}

/// Two vertices u, v joined by `k` parallel edges p1..pk.
pub fn par_edges(k: usize) -> Complex {
    build(ComplexFile {
        n: 1,
        vertices: strings(&["u", "v"]),
        simplices: (1..=k)
            .map(|i| entry(1, &format!("p{i}"), &["u", "v"]))
            .collect(),
    })
}

/// Eight triangles on vertices 1..5 where the cycle through edges 1-2, 2-3,
/// 3-4, 2-4, 1-5, 2-5 bounds four chains that pairwise share a triangle, yet
/// no single triangle lies in all four. So the cycle survives any one
/// deletion but does not bound two disjoint chains.
pub fn packing_gap() -> Complex {
    let tops = ["123", "124", "134", "135", "145", "234", "235", "245"];
    let file = ComplexFile {
        n: 2,
        vertices: strings(&["1", "2", "3", "4", "5"]),
        simplices: tops
            .iter()
            .enumerate()
            .map(|(i, t)| SimplexEntry {
                dim: 2,
                id: format!("s{}", i + 1),
                vertices: t.chars().map(String::from).collect(),
                faces: None,
            })
            .collect(),
    };
    Complex::build(&file, BuildOptions { auto_create_faces: true }).expect("fixture is well formed")
}

/// The cycle of [`packing_gap`].
pub fn packing_gap_cycle(k: &Complex) -> Chain {
    k.chain_from_ids(1, ["1-2", "2-3", "3-4", "2-4", "1-5", "2-5"]).expect("edges exist")
}

fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, size, 0, &mut Vec::new(), &mut out);
    out
}

fn tuple_id(dim: usize, tuple: &[usize]) -> String {
    let prefix = match dim {
        1 => "e".to_owned(),
        2 => "t".to_owned(),
        d => format!("s{d}_"),
    };
    let sep = if tuple.iter().any(|&v| v > 9) { "-" } else { "" };
    let body: Vec<String> = tuple.iter().map(usize::to_string).collect();
    format!("{prefix}{}", body.join(sep))
}

/// The boundary of the (n+1)-simplex: all faces of dimension ≤ n on n+2 vertices.
pub fn hollow_simplex(n: usize) -> Complex {
    let verts: Vec<usize> = (1..=n + 2).collect();
    let mut simplices = Vec::new();
    for d in 1..=n {
        for t in subsets(&verts, d + 1) {
            simplices.push(SimplexEntry {
                dim: d,
                id: tuple_id(d, &t),
                vertices: t.iter().map(usize::to_string).collect(),
                faces: None,
            });
        }
    }
    build(ComplexFile {
        n,
        vertices: verts.iter().map(usize::to_string).collect(),
        simplices,
    })
}

/// Parameters of the random family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub vertices: usize,
    /// Probability that each (n+1)-subset of vertices becomes a top simplex.
    pub density: f64,
    /// Probability that a chosen top simplex receives one parallel copy.
    pub parallel: f64,
    /// Keep at most this many top simplices (in generation order).
    pub max_top: Option<usize>,
    pub seed: u64,
}

impl RandomSpec {
    pub fn new(n: usize, vertices: usize, density: f64, seed: u64) -> Self {
        Self {
            n,
            vertices,
            density,
            parallel: 0.1,
            max_top: None,
            seed,
        }
    }
}

/// Random complex generated top-down: sample top simplices over vertex
/// tuples, then create every face, so closure holds by construction.
pub fn random(spec: &RandomSpec) -> Result<Complex> {
    if spec.n == 0 || spec.vertices < spec.n + 1 {
        return Err(Error::Invalid(format!(
            "random complex needs n ≥ 1 and at least n+1 vertices (n = {}, v = {})",
            spec.n, spec.vertices
        )));
    }
    if !(0.0..=1.0).contains(&spec.density) || !(0.0..=1.0).contains(&spec.parallel) {
        return Err(Error::Invalid("probabilities must lie in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let verts: Vec<usize> = (1..=spec.vertices).collect();
    let mut tops = Vec::new();
    for t in subsets(&verts, spec.n + 1) {
        if rng.gen_bool(spec.density) {
            tops.push(t.clone());
            if rng.gen_bool(spec.parallel) {
                tops.push(t);
            }
        }
    }
    if let Some(cap) = spec.max_top.filter(|&cap| cap < tops.len()) {
        tops.shuffle(&mut rng);
        tops.truncate(cap);
        tops.sort();
    }
    let file = ComplexFile {
        n: spec.n,
        vertices: verts.iter().map(usize::to_string).collect(),
        simplices: tops
            .iter()
            .enumerate()
            .map(|(i, t)| SimplexEntry {
                dim: spec.n,
                id: format!("s{}", i + 1),
                vertices: t.iter().map(usize::to_string).collect(),
                faces: None,
            })
            .collect(),
    };
    // Parallel top simplices share faces, which stay unique, so implicit binding works.
    Complex::build(
        &file,
        BuildOptions {
            auto_create_faces: true,
        },
    )
}

/// Random multigraph: `edges` edges between uniformly drawn distinct vertex
/// pairs, drawn with replacement so parallel edges occur.
pub fn random_multigraph(vertices: usize, edges: usize, seed: u64) -> Result<Complex> {
    if vertices < 2 && edges > 0 {
        return Err(Error::Invalid("a multigraph with edges needs two vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let verts: Vec<usize> = (1..=vertices).collect();
    let simplices = (1..=edges)
        .map(|i| {
            let mut pair: Vec<usize> = verts.choose_multiple(&mut rng, 2).copied().collect();
            pair.sort_unstable();
            SimplexEntry {
                dim: 1,
                id: format!("g{i}"),
                vertices: pair.iter().map(usize::to_string).collect(),
                faces: None,
            }
        })
        .collect();
    ComplexFile {
        n: 1,
        vertices: verts.iter().map(usize::to_string).collect(),
        simplices,
    }
    .build()
}

/// Builds a named family. `k` feeds `sheets` and `par-edges`, `n` feeds
/// `hollow-simplex` and `random`.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Sheets(usize),
    ParEdges(usize),
    HollowSimplex(usize),
    Tetra2,
    Tetra2Subdiv,
    PackingGap,
    Random(RandomSpec),
}

impl Family {
    pub fn generate(&self) -> Result<Complex> {
        Ok(match self {
            Family::Sheets(k) => sheets(*k),
            Family::ParEdges(k) => par_edges(*k),
            Family::HollowSimplex(n) => hollow_simplex(*n),
            Family::Tetra2 => tetra2(),
            Family::Tetra2Subdiv => tetra2_subdiv(),
            Family::PackingGap => packing_gap(),
            Family::Random(spec) => random(spec)?,
        })
    }
}

/// One random complex with a random list of (n−1)-cycles.
#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub seed: u64,
    pub complex: Complex,
    pub cycles: Vec<Chain>,
}

/// Random (n−1)-cycle: with probability `bounding` the boundary of a random
/// set of top simplices, otherwise a random element of the cycle space
/// (which need not bound).
pub fn random_cycle(complex: &Complex, bounding: f64, rng: &mut impl Rng) -> Chain {
    let n = complex.n();
    let top = complex.count(n);
    if top > 0 && rng.gen_bool(bounding) {
        let p = complex
            .chain(n, (0..top).filter(|_| rng.gen_bool(0.5)))
            .expect("indices in range");
        return complex.boundary(&p).expect("n ≥ 1");
    }
    let basis = complex
        .boundary_matrix(n - 1)
        .expect("n − 1 ≤ n")
        .nullspace_basis();
    let mut v = Gf2Vector::zeros(complex.count(n - 1));
    for z in &basis {
        if rng.gen_bool(0.5) {
            v.xor_assign(z);
        }
    }
    Chain::new(n - 1, v)
}

/// Seeded corpus of small complexes (n ∈ {1, 2, 3}, at most `max_top` top
/// simplices) with cycle lists of length 1 to 3; about half the lists hold a
/// single cycle.
pub fn corpus(size: usize, seed: u64, max_top: usize) -> Vec<CorpusInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|i| {
            let inst_seed = rng.gen::<u64>();
            let n = 1 + i % 3;
            let vertices = rng.gen_range(n + 2..=n + 4);
            let spec = RandomSpec {
                n,
                vertices,
                density: rng.gen_range(0.3..0.8),
                parallel: 0.15,
                max_top: Some(max_top),
                seed: inst_seed,
            };
            let complex = random(&spec).expect("valid random parameters");
            let len = if rng.gen_bool(0.5) { 1 } else { rng.gen_range(2..=3) };
            let cycles = (0..len).map(|_| random_cycle(&complex, 0.7, &mut rng)).collect();
            CorpusInstance {
                seed: inst_seed,
                complex,
                cycles,
            }
        })
        .collect()
}
