//! Graphs as 1-dimensional complexes: paths, homological paths, and
//! k-edge-connectivity.
//!
//! [`k_edge_connected_flow`] is a unit-capacity max-flow computed on its own
//! adjacency structure. It shares nothing with the boundance machinery except
//! the complex it reads, so agreement between the two is a real check.

use std::collections::VecDeque;

use crate::boundance::{self, CycleList, Method};
use crate::complex::{Chain, Complex};
use crate::error::{Error, Result};

fn require_graph(g: &Complex) -> Result<()> {
    if g.n() != 1 {
        return Err(Error::NotAGraph(g.n()));
    }
    Ok(())
}

fn vertex(g: &Complex, id: &str) -> Result<usize> {
    match g.find(id) {
        Some(s) if s.dim == 0 => Ok(s.index),
        _ => Err(Error::Invalid(format!("unknown vertex {id}"))),
    }
}

fn ends(g: &Complex, e: usize) -> (usize, usize) {
    let v = g.simplices(1)[e].vertices();
    (v[0], v[1])
}

/// Alternating walk `w0, e1, w1, ..., et, wt` with pairwise distinct edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Path {
    /// The path of length 0 at `v`.
    pub fn trivial(v: usize) -> Self {
        Self {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn new(g: &Complex, vertices: Vec<usize>, edges: Vec<usize>) -> Result<Self> {
        require_graph(g)?;
        if vertices.len() != edges.len() + 1 {
            return Err(Error::Invalid("a path alternates vertices and edges".into()));
        }
        for (i, &e) in edges.iter().enumerate() {
            if e >= g.count(1) {
                return Err(Error::IndexOutOfRange { dim: 1, index: e });
            }
            if edges[..i].contains(&e) {
                return Err(Error::Invalid(format!("edge {} repeats", g.simplices(1)[e].id())));
            }
            let (a, b) = ends(g, e);
            let (x, y) = (vertices[i], vertices[i + 1]);
            if !((a, b) == (x, y) || (a, b) == (y, x)) {
                return Err(Error::Invalid(format!(
                    "edge {} does not join {} and {}",
                    g.simplices(1)[e].id(),
                    g.vertex_id(x),
                    g.vertex_id(y)
                )));
            }
        }
        if vertices.iter().any(|&v| v >= g.count(0)) {
            return Err(Error::Invalid("path vertex out of range".into()));
        }
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("paths have a vertex")
    }

    pub fn describe(&self, g: &Complex) -> String {
        let mut s = g.vertex_id(self.vertices[0]).to_owned();
        for (e, v) in self.edges.iter().zip(&self.vertices[1..]) {
            s.push_str(&format!(" -{}- {}", g.simplices(1)[*e].id(), g.vertex_id(*v)));
        }
        s
    }
}

/// The F₂ sum of the path's edges.
pub fn path_to_chain(g: &Complex, p: &Path) -> Result<Chain> {
    require_graph(g)?;
    g.chain(1, p.edges.iter().copied())
}

/// An actual path from `u` to `v` using only edges of `h`, where `δh = u + v`.
///
/// Breadth-first search inside the support gives a shortest path; among
/// shortest paths the one with the lexicographically smallest edge sequence
/// is returned.
pub fn extract_path(g: &Complex, h: &Chain, u: usize, v: usize) -> Result<Path> {
    require_graph(g)?;
    if u >= g.count(0) || v >= g.count(0) {
        return Err(Error::Invalid("endpoint out of range".into()));
    }
    let expected = g.chain(0, [u, v])?;
    if g.boundary(h)? != expected {
        return Err(Error::BoundaryMismatch);
    }
    if u == v {
        return Ok(Path::trivial(u));
    }
    let support = h.indices();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.count(0)];
    for &e in &support {
        let (a, b) = ends(g, e);
        adj[a].push((e, b));
        adj[b].push((e, a));
    }
    // Distances to v, then a greedy walk from u along smallest edges that
    // strictly decrease the distance.
    let mut dist = vec![usize::MAX; g.count(0)];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for &(_, y) in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    if dist[u] == usize::MAX {
        return Err(Error::NoPath(format!(
            "{} and {} are not joined inside the chain",
            g.vertex_id(u),
            g.vertex_id(v)
        )));
    }
    let mut vertices = vec![u];
    let mut edges = Vec::new();
    let mut at = u;
    while at != v {
        let &(e, y) = adj[at]
            .iter()
            .filter(|&&(_, y)| dist[y] + 1 == dist[at])
            .min_by_key(|&&(e, _)| e)
            .expect("a neighbour one step closer exists");
        edges.push(e);
        vertices.push(y);
        at = y;
    }
    Path::new(g, vertices, edges)
}

/// Whether `u` and `v` are joined by `k` pairwise edge-disjoint paths,
/// decided by augmenting paths in the unit-capacity network where each edge
/// becomes two opposite arcs.
pub fn k_edge_connected_flow(g: &Complex, u: &str, v: &str, k: usize) -> Result<bool> {
    require_graph(g)?;
    let s = vertex(g, u)?;
    let t = vertex(g, v)?;
    if s == t {
        return Ok(true);
    }
    Ok(max_flow(g, s, t, k) >= k)
}

/// Maximum number of pairwise edge-disjoint `u`–`v` paths, or `None` when
/// `u = v` (any number of trivial paths).
pub fn edge_connectivity(g: &Complex, u: &str, v: &str) -> Result<Option<usize>> {
    require_graph(g)?;
    let s = vertex(g, u)?;
    let t = vertex(g, v)?;
    if s == t {
        return Ok(None);
    }
    Ok(Some(max_flow(g, s, t, g.count(1))))
}

/// Number of pairwise edge-disjoint `s`–`t` paths, stopping once `limit` is reached.
pub fn max_flow(g: &Complex, s: usize, t: usize, limit: usize) -> usize {
    let nv = g.count(0);
    // Arc 2e runs a→b, arc 2e+1 runs b→a; each has capacity 1.
    let mut head = Vec::with_capacity(2 * g.count(1));
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for e in 0..g.count(1) {
        let (a, b) = ends(g, e);
        out[a].push(2 * e);
        head.push(b);
        out[b].push(2 * e + 1);
        head.push(a);
    }
    let mut flow = vec![0i8; head.len()];
    let residual = |arc: usize, flow: &[i8]| {
        // Reverse arc of an undirected edge shares the edge: net flow in [-1, 1].
        let twin = arc ^ 1;
        1 - flow[arc] + flow[twin] > 0
    };
    let mut value = 0;
    while value < limit {
        let mut via = vec![usize::MAX; nv];
        let mut seen = vec![false; nv];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &arc in &out[x] {
                let y = head[arc];
                if !seen[y] && residual(arc, &flow) {
                    seen[y] = true;
                    via[y] = arc;
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            break;
        }
        let mut x = t;
        while x != s {
            let arc = via[x];
            let twin = arc ^ 1;
            if flow[twin] > 0 {
                flow[twin] -= 1;
            } else {
                flow[arc] += 1;
            }
            x = head[twin];
        }
        value += 1;
    }
    value
}

/// Whether a list of vertex pairs is k-boundant: each pair `a − b` becomes
/// the 0-cycle `a + b` (trivial when `a = b`).
pub fn pairs_boundant(g: &Complex, pairs: &[(String, String)], k: usize, method: Method) -> Result<bool> {
    require_graph(g)?;
    let mut cycles = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        let (x, y) = (vertex(g, a)?, vertex(g, b)?);
        cycles.push(g.chain(0, [x, y])?);
    }
    let list = CycleList::new(g, cycles)?;
    boundance::is_k_boundant(g, &list, k, method)
}
