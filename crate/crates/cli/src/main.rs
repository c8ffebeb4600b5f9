//! `menger`: command-line front end for k-boundance and the degree invariants.
//!
//! Exit codes: 0 affirmative, 1 negative decision, 2 input error, 3 when two
//! characterizations disagree or cobordance fails to be transitive.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use menger_core::boundance::{self, CycleList, Method};
use menger_core::fixtures::{Family, RandomSpec};
use menger_core::io::{self, ChainFile};
use menger_core::{graph, invariants, Chain, Complex, Error};

#[derive(Debug, Parser)]
#[command(name = "menger", version, about = "k-boundance of F₂ cycle lists in simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a complex file and print simplex counts and the degree histogram.
    Validate {
        complex: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a cycle list is k-boundant.
    Boundant {
        complex: PathBuf,
        cycles: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "all")]
        method: Method,
        #[arg(long)]
        json: bool,
        /// Write the reproducer here if the methods disagree.
        #[arg(long)]
        o: Option<PathBuf>,
    },
    /// Degree histogram, irregularity skeleton, homology, Γ and Γ_k.
    Invariants {
        complex: PathBuf,
        /// Comma-separated values of k for Γ_k.
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Generate a complex from a named family.
    Gen {
        family: FamilyName,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        v: Option<usize>,
        #[arg(long)]
        density: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        o: Option<PathBuf>,
    },
    /// F₂ homology dimensions.
    Homology {
        complex: PathBuf,
        /// Only this dimension.
        #[arg(long)]
        d: Option<usize>,
        /// Reduced homology in dimension 0 (the default).
        #[arg(long, conflicts_with = "unreduced")]
        reduced: bool,
        #[arg(long)]
        unreduced: bool,
        #[arg(long)]
        json: bool,
    },
    /// Boundary of a chain; in dimension 0 the augmentation.
    Boundary {
        complex: PathBuf,
        chain: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Largest k for which a cycle list is k-boundant.
    MaxBoundance {
        complex: PathBuf,
        cycles: PathBuf,
        #[arg(long, default_value = "primal")]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// k-cobordance of two cycles, or cobordance classes of a longer list.
    Cobordant {
        complex: PathBuf,
        cycles: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Irregularity skeleton: drop the top simplices and the degree-2 faces.
    Skeleton {
        complex: PathBuf,
        #[arg(long)]
        o: Option<PathBuf>,
    },
    /// A u–v path inside the support of a 1-chain whose boundary is u + v.
    ExtractPath {
        graph: PathBuf,
        chain: PathBuf,
        u: String,
        v: String,
        #[arg(long)]
        json: bool,
    },
    /// Edge-disjoint u–v paths by max-flow.
    EdgeConnectivity {
        graph: PathBuf,
        u: String,
        v: String,
        /// Decide whether at least k edge-disjoint paths exist.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyName {
    Sheets,
    ParEdges,
    HollowSimplex,
    Tetra2,
    Tetra2Subdiv,
    PackingGap,
    Random,
}

/// Result of a command that completed without an input error.
enum Outcome {
    Yes,
    No,
}

impl Outcome {
    fn from(b: bool) -> Self {
        if b {
            Outcome::Yes
        } else {
            Outcome::No
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Falsified(e)) => {
            eprintln!("{e}");
            ExitCode::from(3)
        }
    }
}

enum Failure {
    Input(Error),
    Falsified(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MethodDisagreement { .. } | Error::TransitivityViolation { .. } => Failure::Falsified(e),
            other => Failure::Input(other),
        }
    }
}

type Run = std::result::Result<Outcome, Failure>;

fn run(command: Command) -> Run {
    match command {
        Command::Validate { complex, json } => validate(&complex, json),
        Command::Boundant {
            complex,
            cycles,
            k,
            method,
            json,
            o,
        } => boundant(&complex, &cycles, k, method, json, o.as_deref()),
        Command::Invariants { complex, k, json } => invariants_cmd(&complex, &k, json),
        Command::Gen {
            family,
            k,
            n,
            v,
            density,
            seed,
            o,
        } => gen(family, k, n, v, density, seed, o.as_deref()),
        Command::Homology {
            complex,
            d,
            reduced: _,
            unreduced,
            json,
        } => homology(&complex, d, !unreduced, json),
        Command::Boundary { complex, chain, json } => boundary(&complex, &chain, json),
        Command::MaxBoundance {
            complex,
            cycles,
            method,
            json,
        } => max_boundance(&complex, &cycles, method, json),
        Command::Cobordant {
            complex,
            cycles,
            k,
            json,
        } => cobordant(&complex, &cycles, k, json),
        Command::Skeleton { complex, o } => skeleton(&complex, o.as_deref()),
        Command::ExtractPath {
            graph,
            chain,
            u,
            v,
            json,
        } => extract_path(&graph, &chain, &u, &v, json),
        Command::EdgeConnectivity { graph, u, v, k, json } => edge_connectivity(&graph, &u, &v, k, json),
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn load_chain(path: &Path, complex: &Complex) -> Result<Chain, Error> {
    let file: ChainFile =
        serde_json::from_str(&read(path)?).map_err(|e| Error::Invalid(format!("chain file: {e}")))?;
    file.resolve(complex)
}

/// Writes `text` to `path`, or to standard output without one.
fn emit(text: &str, path: Option<&Path>) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Invalid(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

fn show_chain(k: &Complex, c: &Chain) -> String {
    if c.is_zero() {
        "0".to_owned()
    } else {
        k.chain_ids(c).join(" + ")
    }
}

fn counts(k: &Complex) -> Vec<usize> {
    (0..=k.n()).map(|d| k.count(d)).collect()
}

fn counts_line(k: &Complex) -> String {
    counts(k)
        .iter()
        .enumerate()
        .map(|(d, c)| format!("S{d}={c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Degree of each (n−1)-simplex, counted per degree; empty for n = 0.
fn histogram(k: &Complex) -> Result<Vec<(usize, usize)>, Error> {
    if k.n() == 0 {
        return Ok(Vec::new());
    }
    Ok(invariants::stratify(k)?.histogram().into_iter().collect())
}

fn histogram_line(h: &[(usize, usize)]) -> String {
    let body: Vec<String> = h.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    format!("degree histogram: {}", if body.is_empty() { "-".to_owned() } else { body.join(" ") })
}

fn histogram_json(h: &[(usize, usize)]) -> Value {
    Value::Object(h.iter().map(|(d, c)| (d.to_string(), json!(c))).collect())
}

fn validate(path: &Path, as_json: bool) -> Run {
    let k = io::load_complex(path)?;
    let h = histogram(&k)?;
    if as_json {
        print_json(&json!({ "n": k.n(), "counts": counts(&k), "degree_histogram": histogram_json(&h) }));
    } else {
        println!("{}", counts_line(&k));
        println!("{}", histogram_line(&h));
    }
    Ok(Outcome::Yes)
}

fn load_list(complex: &Path, cycles: &Path) -> Result<(Complex, CycleList), Error> {
    let k = io::load_complex(complex)?;
    let cycles = io::load_cycles(cycles, &k)?;
    let list = CycleList::new(&k, cycles)?;
    Ok((k, list))
}

fn boundant(complex: &Path, cycles: &Path, kk: usize, method: Method, as_json: bool, o: Option<&Path>) -> Run {
    let (k, list) = load_list(complex, cycles)?;
    let v = match boundance::evaluate(&k, &list, kk, method) {
        Err(Error::MethodDisagreement { summary, reproducer }) => {
            if let Some(p) = o {
                emit(&format!("{reproducer}\n"), Some(p))?;
                eprintln!("reproducer written to {}", p.display());
            } else {
                eprintln!("{reproducer}");
            }
            return Err(Failure::Falsified(Error::MethodDisagreement { summary, reproducer }));
        }
        other => other?,
    };
    let verdict = v.verdict().expect("evaluate returns agreeing verdicts");
    let witness = v.witness.as_ref().map(|w| boundance::witness_json(&k, w));
    if as_json {
        print_json(&json!({
            "k": kk,
            "method": method,
            "boundant": verdict,
            "primal": v.primal,
            "dual": v.dual,
            "recursive": v.recursive,
            "witness": witness,
        }));
    } else {
        for (name, r) in [("primal", v.primal), ("dual", v.dual), ("recursive", v.recursive)] {
            if let Some(r) = r {
                println!("{name}: {r}");
            }
        }
        println!("{}-boundant: {verdict}", kk);
        if let Some(w) = &v.witness {
            for (p, &t) in w.chains.iter().zip(&w.assignment) {
                println!("  cycle {t} bounds {}", show_chain(&k, p));
            }
        }
    }
    Ok(Outcome::from(verdict))
}

fn invariants_cmd(path: &Path, ks: &[usize], as_json: bool) -> Run {
    let k = io::load_complex(path)?;
    let h = histogram(&k)?;
    let homology: Vec<usize> = (0..=k.n())
        .map(|d| invariants::homology_dim(&k, d, true))
        .collect::<Result<_, _>>()?;
    let skeleton = if k.n() >= 1 { Some(invariants::irregularity_skeleton(&k)?) } else { None };
    let gamma = if k.n() >= 1 { Some(invariants::gamma(&k)?) } else { None };
    let mut reports = Vec::new();
    if let Some(basis) = &gamma {
        for &kk in ks {
            if kk == 0 {
                return Err(Error::Invalid("Γ_k needs k ≥ 1".into()).into());
            }
            reports.push(invariants::gamma_k_from(&k, basis.clone(), kk)?);
        }
    } else if !ks.is_empty() {
        return Err(Error::Invalid("Γ_k needs a complex of dimension ≥ 1".into()).into());
    }
    if as_json {
        print_json(&json!({
            "counts": counts(&k),
            "degree_histogram": histogram_json(&h),
            "skeleton_counts": skeleton.as_ref().map(counts),
            "homology_reduced": homology,
            "gamma_dim": gamma.as_ref().map(Vec::len),
            "gamma_basis": gamma.as_ref().map(|b| b.iter().map(|c| ChainFile::of(&k, c)).collect::<Vec<_>>()),
            "gamma_k": reports.iter().map(|r| r.to_json(&k)).collect::<Vec<_>>(),
        }));
        return Ok(Outcome::Yes);
    }
    println!("{}", counts_line(&k));
    println!("{}", histogram_line(&h));
    if let Some(s) = &skeleton {
        println!("irregularity skeleton: {}", counts_line(s));
    }
    let hs: Vec<String> = homology.iter().enumerate().map(|(d, b)| format!("H{d}={b}")).collect();
    println!("homology (reduced): {}", hs.join(" "));
    if let Some(basis) = &gamma {
        println!("gamma_dim: {}", basis.len());
        for c in basis {
            println!("  {}", show_chain(&k, c));
        }
    }
    for r in &reports {
        let dim = r.gamma_k_dim().map_or("-".to_owned(), |d| d.to_string());
        println!(
            "Γ_{}: {} elements, closed under addition: {}, dim {dim}",
            r.k,
            r.elements.len(),
            r.closed_under_addition
        );
    }
    Ok(Outcome::Yes)
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Error> {
    value.ok_or_else(|| Error::Invalid(format!("family {family} needs --{flag}")))
}

fn gen(
    family: FamilyName,
    k: Option<usize>,
    n: Option<usize>,
    v: Option<usize>,
    density: Option<f64>,
    seed: u64,
    o: Option<&Path>,
) -> Run {
    let family = match family {
        FamilyName::Sheets => Family::Sheets(need(k, "k", "sheets")?),
        FamilyName::ParEdges => Family::ParEdges(need(k, "k", "par-edges")?),
        FamilyName::HollowSimplex => {
            let n = need(n, "n", "hollow-simplex")?;
            if n == 0 {
                return Err(Error::Invalid("hollow-simplex needs --n ≥ 1".into()).into());
            }
            Family::HollowSimplex(n)
        }
        FamilyName::Tetra2 => Family::Tetra2,
        FamilyName::Tetra2Subdiv => Family::Tetra2Subdiv,
        FamilyName::PackingGap => Family::PackingGap,
        FamilyName::Random => {
            let n = need(n, "n", "random")?;
            let v = need(v, "v", "random")?;
            let density = density.ok_or_else(|| Error::Invalid("family random needs --density".into()))?;
            if !(0.0..=1.0).contains(&density) {
                return Err(Error::Invalid(format!("density {density} is outside [0, 1]")).into());
            }
            if n == 0 || v < n + 1 {
                return Err(Error::Invalid(format!("random needs n ≥ 1 and v ≥ n + 1, got n = {n}, v = {v}")).into());
            }
            Family::Random(RandomSpec::new(n, v, density, seed))
        }
    };
    let complex = family.generate()?;
    emit(&format!("{}\n", complex.to_file().to_json()), o)?;
    Ok(Outcome::Yes)
}

fn homology(path: &Path, d: Option<usize>, reduced: bool, as_json: bool) -> Run {
    let k = io::load_complex(path)?;
    let dims: Vec<usize> = match d {
        Some(d) => vec![d],
        None => (0..=k.n()).collect(),
    };
    let values: Vec<(usize, usize)> = dims
        .into_iter()
        .map(|d| invariants::homology_dim(&k, d, reduced).map(|b| (d, b)))
        .collect::<Result<_, _>>()?;
    if as_json {
        let map: serde_json::Map<String, Value> = values.iter().map(|(d, b)| (d.to_string(), json!(b))).collect();
        print_json(&json!({ "reduced": reduced, "dims": map }));
    } else {
        let hs: Vec<String> = values.iter().map(|(d, b)| format!("H{d}={b}")).collect();
        println!("{}", hs.join(" "));
    }
    Ok(Outcome::Yes)
}

fn boundary(complex: &Path, chain: &Path, as_json: bool) -> Run {
    let k = io::load_complex(complex)?;
    let c = load_chain(chain, &k)?;
    if c.dim() == 0 {
        let eps = k.augmentation(&c)?;
        if as_json {
            print_json(&json!({ "dim": 0, "augmentation": u8::from(eps) }));
        } else {
            println!("augmentation: {}", u8::from(eps));
        }
        return Ok(Outcome::Yes);
    }
    let b = k.boundary(&c)?;
    if as_json {
        print_json(&json!(ChainFile::of(&k, &b)));
    } else {
        println!("{}", show_chain(&k, &b));
    }
    Ok(Outcome::Yes)
}

fn max_boundance(complex: &Path, cycles: &Path, method: Method, as_json: bool) -> Run {
    let (k, list) = load_list(complex, cycles)?;
    let m = boundance::max_boundance_by(&k, &list, method)?;
    if as_json {
        print_json(&json!({ "method": method, "max_boundance": m.to_string() }));
    } else {
        println!("{m}");
    }
    Ok(Outcome::Yes)
}

fn cobordant(complex: &Path, cycles: &Path, kk: usize, as_json: bool) -> Run {
    let (k, list) = load_list(complex, cycles)?;
    let cs = list.cycles();
    if let [a, b] = cs {
        let r = boundance::cobordant(&k, a, b, kk)?;
        if as_json {
            print_json(&json!({ "k": kk, "cobordant": r }));
        } else {
            println!("{kk}-cobordant: {r}");
        }
        return Ok(Outcome::from(r));
    }
    let classes = boundance::cobordance_classes(&k, cs, kk)?;
    if as_json {
        print_json(&json!({ "k": kk, "classes": classes }));
    } else {
        for class in &classes {
            let items: Vec<String> = class.iter().map(usize::to_string).collect();
            println!("{{{}}}", items.join(", "));
        }
    }
    Ok(Outcome::Yes)
}

fn skeleton(path: &Path, o: Option<&Path>) -> Run {
    let k = io::load_complex(path)?;
    let s = invariants::irregularity_skeleton(&k)?;
    emit(&format!("{}\n", s.to_file().to_json()), o)?;
    Ok(Outcome::Yes)
}

fn vertex_index(g: &Complex, id: &str) -> Result<usize, Error> {
    match g.find(id) {
        Some(s) if s.dim == 0 => Ok(s.index),
        _ => Err(Error::Invalid(format!("unknown vertex {id}"))),
    }
}

fn extract_path(path: &Path, chain: &Path, u: &str, v: &str, as_json: bool) -> Run {
    let g = io::load_complex(path)?;
    let h = load_chain(chain, &g)?;
    let p = graph::extract_path(&g, &h, vertex_index(&g, u)?, vertex_index(&g, v)?)?;
    if as_json {
        let vertices: Vec<&str> = p.vertices().iter().map(|&x| g.vertex_id(x)).collect();
        let edges: Vec<&str> = p.edges().iter().map(|&e| g.simplices(1)[e].id()).collect();
        print_json(&json!({ "vertices": vertices, "edges": edges }));
    } else {
        println!("{}", p.describe(&g));
    }
    Ok(Outcome::Yes)
}

fn edge_connectivity(path: &Path, u: &str, v: &str, k: Option<usize>, as_json: bool) -> Run {
    let g = io::load_complex(path)?;
    let flow = graph::edge_connectivity(&g, u, v)?;
    let decision = k.map(|k| flow.map_or(true, |f| f >= k));
    let shown = flow.map_or("UNBOUNDED".to_owned(), |f| f.to_string());
    if as_json {
        print_json(&json!({ "max_flow": shown, "k": k, "k_edge_connected": decision }));
    } else {
        println!("max_flow: {shown}");
        if let (Some(k), Some(d)) = (k, decision) {
            println!("{k}-edge-connected: {d}");
        }
    }
    Ok(decision.map_or(Outcome::Yes, Outcome::from))
}
