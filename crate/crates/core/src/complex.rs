//! Simplicial complexes with multiplicity and F₂ chains on them.
//!
//! Several simplices may share one vertex tuple, so the boundary operator
//! cannot be recovered from vertex tuples alone. Every record therefore
//! carries explicit references to its faces: face `i` of a simplex is the
//! face opposite its `i`-th vertex (vertices sorted by declaration order).

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::io::{ComplexFile, SimplexEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub dim: usize,
    pub index: usize,
}

impl SimplexRef {
    pub fn new(dim: usize, index: usize) -> Self {
        Self { dim, index }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexRecord {
    id: String,
    /// Indices into the vertex table, strictly increasing.
    vertices: Vec<usize>,
    /// Indices into the table one dimension down; empty for vertices.
    faces: Vec<usize>,
}

impl SimplexRecord {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BuildOptions {
    /// Create one simplex per missing face tuple instead of failing with `MissingFace`.
    pub auto_create_faces: bool,
}

/// A d-dimensional chain over F₂: a subset of the dimension-d table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    dim: usize,
    support: Gf2Vector,
}

impl Chain {
    pub fn new(dim: usize, support: Gf2Vector) -> Self {
        Self { dim, support }
    }

    pub fn zero(dim: usize, len: usize) -> Self {
        Self::new(dim, Gf2Vector::zeros(len))
    }

    pub fn from_indices(dim: usize, len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::new(dim, Gf2Vector::from_indices(len, indices))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn support(&self) -> &Gf2Vector {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.support.ones().collect()
    }

    pub fn len(&self) -> usize {
        self.support.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.support.get(index)
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(self.dim, other.dim, "adding chains of different dimensions");
        Chain::new(self.dim, self.support.xor(&other.support))
    }

    pub fn is_disjoint(&self, other: &Chain) -> bool {
        self.support.is_disjoint(&other.support)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    n: usize,
    tables: Vec<Vec<SimplexRecord>>,
    ids: HashMap<String, SimplexRef>,
}

impl Complex {
    /// Validates a file description and binds faces.
    pub fn build(file: &ComplexFile, options: BuildOptions) -> Result<Complex> {
        Builder::new(file.n, options).run(file)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, dim: usize) -> usize {
        self.tables.get(dim).map_or(0, Vec::len)
    }

    pub fn simplices(&self, dim: usize) -> &[SimplexRecord] {
        self.tables.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn record(&self, s: SimplexRef) -> Result<&SimplexRecord> {
        self.tables
            .get(s.dim)
            .and_then(|t| t.get(s.index))
            .ok_or(Error::IndexOutOfRange {
                dim: s.dim,
                index: s.index,
            })
    }

    pub fn id(&self, s: SimplexRef) -> &str {
        &self.tables[s.dim][s.index].id
    }

    pub fn find(&self, id: &str) -> Option<SimplexRef> {
        self.ids.get(id).copied()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.tables[0][v].id
    }

    /// Vertex ids of a simplex, in stored (sorted) order.
    pub fn vertex_tuple(&self, s: SimplexRef) -> Vec<&str> {
        self.tables[s.dim][s.index]
            .vertices
            .iter()
            .map(|&v| self.vertex_id(v))
            .collect()
    }

    pub fn zero_chain(&self, dim: usize) -> Chain {
        Chain::zero(dim, self.count(dim))
    }

    pub fn chain(&self, dim: usize, indices: impl IntoIterator<Item = usize>) -> Result<Chain> {
        if dim > self.n {
            return Err(Error::DimensionOutOfRange { dim, n: self.n });
        }
        let len = self.count(dim);
        let mut support = Gf2Vector::zeros(len);
        for i in indices {
            if i >= len {
                return Err(Error::IndexOutOfRange { dim, index: i });
            }
            support.flip(i);
        }
        Ok(Chain::new(dim, support))
    }

    /// Chain from simplex ids; repeated ids cancel.
    pub fn chain_from_ids<'a>(
        &self,
        dim: usize,
        ids: impl IntoIterator<Item = &'a str>,
    ) -> Result<Chain> {
        let mut indices = Vec::new();
        for id in ids {
            let s = self
                .find(id)
                .ok_or_else(|| Error::UnknownSimplex(id.to_owned()))?;
            if s.dim != dim {
                return Err(Error::WrongDimension {
                    expected: dim,
                    actual: s.dim,
                });
            }
            indices.push(s.index);
        }
        self.chain(dim, indices)
    }

    pub fn chain_ids(&self, c: &Chain) -> Vec<&str> {
        c.support()
            .ones()
            .map(|i| self.tables[c.dim()][i].id.as_str())
            .collect()
    }

    fn check_chain(&self, c: &Chain) -> Result<()> {
        if c.dim() > self.n {
            return Err(Error::DimensionOutOfRange {
                dim: c.dim(),
                n: self.n,
            });
        }
        let expected = self.count(c.dim());
        if c.support().len() != expected {
            return Err(Error::ChainLength {
                dim: c.dim(),
                expected,
                actual: c.support().len(),
            });
        }
        Ok(())
    }

    /// δ of a chain of dimension ≥ 1. Dimension-0 chains map to F₂ through
    /// [`Complex::augmentation`] instead.
    pub fn boundary(&self, c: &Chain) -> Result<Chain> {
        self.check_chain(c)?;
        if c.dim() == 0 {
            return Err(Error::DimensionOutOfRange { dim: 0, n: self.n });
        }
        let mut out = Gf2Vector::zeros(self.count(c.dim() - 1));
        for i in c.support().ones() {
            for &f in &self.tables[c.dim()][i].faces {
                out.flip(f);
            }
        }
        Ok(Chain::new(c.dim() - 1, out))
    }

    /// δ on 0-chains: every vertex maps to 1.
    pub fn augmentation(&self, c: &Chain) -> Result<bool> {
        self.check_chain(c)?;
        if c.dim() != 0 {
            return Err(Error::WrongDimension {
                expected: 0,
                actual: c.dim(),
            });
        }
        Ok(c.len() % 2 == 1)
    }

    pub fn is_cycle(&self, c: &Chain) -> Result<bool> {
        if c.dim() == 0 {
            Ok(!self.augmentation(c)?)
        } else {
            Ok(self.boundary(c)?.is_zero())
        }
    }

    /// Number of n-simplex records having `f` among their faces.
    pub fn degree(&self, f: SimplexRef) -> Result<usize> {
        if self.n == 0 || f.dim != self.n - 1 {
            return Err(Error::WrongDimension {
                expected: self.n.saturating_sub(1),
                actual: f.dim,
            });
        }
        self.record(f)?;
        Ok(self.tables[self.n]
            .iter()
            .map(|s| s.faces.iter().filter(|&&x| x == f.index).count())
            .sum())
    }

    /// Degrees of all (n−1)-simplices, indexed like their table.
    pub fn degrees(&self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        let mut deg = vec![0; self.count(self.n - 1)];
        for s in &self.tables[self.n] {
            for &f in &s.faces {
                deg[f] += 1;
            }
        }
        deg
    }

    /// For every simplex of dimension `dim`, the simplices of dimension
    /// `dim + 1` having it as a face (with multiplicity).
    pub fn cofaces(&self, dim: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count(dim)];
        for (j, s) in self.simplices(dim + 1).iter().enumerate() {
            for &f in &s.faces {
                out[f].push(j);
            }
        }
        out
    }

    /// Matrix of δ from dimension `d` to `d − 1`; for `d = 0` the 1 × |V|
    /// augmentation row.
    pub fn boundary_matrix(&self, d: usize) -> Result<Gf2Matrix> {
        if d > self.n {
            return Err(Error::DimensionOutOfRange { dim: d, n: self.n });
        }
        if d == 0 {
            let mut m = Gf2Matrix::zeros(1, self.count(0));
            for j in 0..self.count(0) {
                m.set(0, j, true);
            }
            return Ok(m);
        }
        let mut m = Gf2Matrix::zeros(self.count(d - 1), self.count(d));
        for (j, s) in self.tables[d].iter().enumerate() {
            for &f in &s.faces {
                let cur = m.get(f, j);
                m.set(f, j, !cur);
            }
        }
        Ok(m)
    }

    /// The complex with the given n-simplices removed; lower tables are kept.
    pub fn delete_n_simplices(&self, deleted: &[SimplexRef]) -> Result<Complex> {
        let mut keep = self.full_mask();
        for s in deleted {
            if s.dim != self.n {
                return Err(Error::WrongDimension {
                    expected: self.n,
                    actual: s.dim,
                });
            }
            self.record(*s)?;
            keep[self.n][s.index] = false;
        }
        Ok(self.retain(self.n, &keep))
    }

    pub(crate) fn full_mask(&self) -> Vec<Vec<bool>> {
        self.tables.iter().map(|t| vec![true; t.len()]).collect()
    }

    /// Downward closure of a set of simplices: the simplices together with
    /// all their faces, faces of faces, and so on.
    pub fn closure(&self, generators: impl IntoIterator<Item = SimplexRef>) -> BTreeSet<SimplexRef> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<SimplexRef> = generators.into_iter().collect();
        while let Some(s) = stack.pop() {
            if !seen.insert(s) {
                continue;
            }
            if s.dim > 0 {
                for &f in &self.tables[s.dim][s.index].faces {
                    stack.push(SimplexRef::new(s.dim - 1, f));
                }
            }
        }
        seen
    }

    /// Subcomplex of dimension `top` consisting of the downward closure of
    /// `generators`.
    pub fn subcomplex(
        &self,
        top: usize,
        generators: impl IntoIterator<Item = SimplexRef>,
    ) -> Complex {
        let mut keep: Vec<Vec<bool>> = self.tables.iter().map(|t| vec![false; t.len()]).collect();
        for s in self.closure(generators) {
            keep[s.dim][s.index] = true;
        }
        self.retain(top, &keep)
    }

    /// Keeps the marked records of dimensions `0..=top`, renumbering faces.
    /// The mask must be closed under faces.
    pub(crate) fn retain(&self, top: usize, keep: &[Vec<bool>]) -> Complex {
        let mut remap: Vec<Vec<Option<usize>>> = Vec::with_capacity(top + 1);
        let mut tables = Vec::with_capacity(top + 1);
        for d in 0..=top {
            let mut map = vec![None; self.count(d)];
            let mut table = Vec::new();
            for (i, rec) in self.simplices(d).iter().enumerate() {
                if !keep[d][i] {
                    continue;
                }
                map[i] = Some(table.len());
                let faces = rec
                    .faces
                    .iter()
                    .map(|&f| remap[d - 1][f].expect("retained simplex lost a face"))
                    .collect();
                table.push(SimplexRecord {
                    id: rec.id.clone(),
                    vertices: rec.vertices.clone(),
                    faces,
                });
            }
            remap.push(map);
            tables.push(table);
        }
        // Vertex indices inside tuples refer to table 0, which may have shrunk.
        let vmap = &remap[0];
        for table in tables.iter_mut().skip(1) {
            for rec in table.iter_mut() {
                for v in rec.vertices.iter_mut() {
                    *v = vmap[*v].expect("retained simplex lost a vertex");
                }
            }
        }
        for (i, rec) in tables[0].iter_mut().enumerate() {
            rec.vertices = vec![i];
        }
        Complex::from_tables(top, tables)
    }

    fn from_tables(n: usize, tables: Vec<Vec<SimplexRecord>>) -> Complex {
        let mut ids = HashMap::new();
        for (d, t) in tables.iter().enumerate() {
            for (i, r) in t.iter().enumerate() {
                ids.insert(r.id.clone(), SimplexRef::new(d, i));
            }
        }
        Complex { n, tables, ids }
    }

    /// Re-expresses a chain of another complex in this one, matching simplices by id.
    pub fn transfer(&self, from: &Complex, c: &Chain) -> Result<Chain> {
        self.chain_from_ids(c.dim(), from.chain_ids(c))
    }

    /// File description of the complex. Faces are written out only for
    /// records that have a face tuple shared by several simplices.
    pub fn to_file(&self) -> ComplexFile {
        let mut simplices = Vec::new();
        for d in 1..=self.n {
            let mut tuple_count: HashMap<&[usize], usize> = HashMap::new();
            for r in self.simplices(d - 1) {
                *tuple_count.entry(r.vertices.as_slice()).or_default() += 1;
            }
            for r in self.simplices(d) {
                let ambiguous = r
                    .faces
                    .iter()
                    .any(|&f| tuple_count[self.tables[d - 1][f].vertices.as_slice()] > 1);
                simplices.push(SimplexEntry {
                    dim: d,
                    id: r.id.clone(),
                    vertices: r.vertices.iter().map(|&v| self.vertex_id(v).to_owned()).collect(),
                    faces: ambiguous.then(|| {
                        r.faces
                            .iter()
                            .map(|&f| self.tables[d - 1][f].id.clone())
                            .collect()
                    }),
                });
            }
        }
        ComplexFile {
            n: self.n,
            vertices: self.simplices(0).iter().map(|r| r.id.clone()).collect(),
            simplices,
        }
    }
}

struct Builder {
    n: usize,
    options: BuildOptions,
    tables: Vec<Vec<SimplexRecord>>,
    ids: HashMap<String, SimplexRef>,
    vertex_index: HashMap<String, usize>,
    /// Per dimension: vertex tuple → records with that tuple.
    by_tuple: Vec<HashMap<Vec<usize>, Vec<usize>>>,
}

impl Builder {
    fn new(n: usize, options: BuildOptions) -> Self {
        Self {
            n,
            options,
            tables: vec![Vec::new(); n + 1],
            ids: HashMap::new(),
            vertex_index: HashMap::new(),
            by_tuple: vec![HashMap::new(); n + 1],
        }
    }

    fn run(mut self, file: &ComplexFile) -> Result<Complex> {
        for v in &file.vertices {
            self.claim_id(v, SimplexRef::new(0, self.tables[0].len()))?;
            let i = self.tables[0].len();
            self.vertex_index.insert(v.clone(), i);
            self.by_tuple[0].insert(vec![i], vec![i]);
            self.tables[0].push(SimplexRecord {
                id: v.clone(),
                vertices: vec![i],
                faces: Vec::new(),
            });
        }
        for entry in &file.simplices {
            if entry.dim == 0 {
                return Err(Error::Invalid(format!(
                    "simplex {} has dimension 0; declare vertices in the vertices list",
                    entry.id
                )));
            }
            if entry.dim > self.n {
                return Err(Error::DimensionOutOfRange {
                    dim: entry.dim,
                    n: self.n,
                });
            }
        }
        for d in 1..=self.n {
            for entry in file.simplices.iter().filter(|e| e.dim == d) {
                self.add_entry(entry)?;
            }
        }
        Ok(Complex::from_tables(self.n, self.tables))
    }

    fn claim_id(&mut self, id: &str, at: SimplexRef) -> Result<()> {
        if self.ids.insert(id.to_owned(), at).is_some() {
            return Err(Error::DuplicateId(id.to_owned()));
        }
        Ok(())
    }

    fn names(&self, tuple: &[usize]) -> Vec<String> {
        tuple.iter().map(|&v| self.tables[0][v].id.clone()).collect()
    }

    fn add_entry(&mut self, entry: &SimplexEntry) -> Result<()> {
        let d = entry.dim;
        if entry.vertices.len() != d + 1 {
            return Err(Error::ArityMismatch {
                id: entry.id.clone(),
                dim: d,
                count: entry.vertices.len(),
            });
        }
        let mut tuple = Vec::with_capacity(d + 1);
        for v in &entry.vertices {
            let i = *self
                .vertex_index
                .get(v)
                .ok_or_else(|| Error::UnknownVertex {
                    id: entry.id.clone(),
                    vertex: v.clone(),
                })?;
            if tuple.contains(&i) {
                return Err(Error::RepeatedVertex {
                    id: entry.id.clone(),
                    vertex: v.clone(),
                });
            }
            tuple.push(i);
        }
        tuple.sort_unstable();
        let faces = match &entry.faces {
            Some(ids) => self.bind_explicit(&entry.id, &tuple, ids)?,
            None => self.bind_implicit(&entry.id, &tuple)?,
        };
        let index = self.tables[d].len();
        self.claim_id(&entry.id, SimplexRef::new(d, index))?;
        self.push(d, entry.id.clone(), tuple, faces);
        Ok(())
    }

    fn push(&mut self, d: usize, id: String, tuple: Vec<usize>, faces: Vec<usize>) -> usize {
        let index = self.tables[d].len();
        self.by_tuple[d].entry(tuple.clone()).or_default().push(index);
        self.tables[d].push(SimplexRecord {
            id,
            vertices: tuple,
            faces,
        });
        index
    }

    fn face_tuples(tuple: &[usize]) -> Vec<Vec<usize>> {
        (0..tuple.len())
            .map(|skip| {
                tuple
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect()
    }

    fn bind_explicit(&self, id: &str, tuple: &[usize], face_ids: &[String]) -> Result<Vec<usize>> {
        let d = tuple.len() - 1;
        if face_ids.len() != d + 1 {
            return Err(Error::BadFaceBinding {
                id: id.to_owned(),
                reason: format!("expected {} faces, got {}", d + 1, face_ids.len()),
            });
        }
        let mut given = Vec::with_capacity(face_ids.len());
        for f in face_ids {
            let s = self.ids.get(f).ok_or_else(|| Error::BadFaceBinding {
                id: id.to_owned(),
                reason: format!("face {f} does not exist"),
            })?;
            if s.dim + 1 != d {
                return Err(Error::BadFaceBinding {
                    id: id.to_owned(),
                    reason: format!("face {f} has dimension {}, expected {}", s.dim, d - 1),
                });
            }
            given.push(Some(s.index));
        }
        let mut faces = Vec::with_capacity(d + 1);
        for required in Self::face_tuples(tuple) {
            let slot = given.iter_mut().find(|g| {
                g.is_some_and(|f| self.tables[d - 1][f].vertices == required)
            });
            match slot {
                Some(g) => faces.push(g.take().expect("slot is filled")),
                None => {
                    return Err(Error::BadFaceBinding {
                        id: id.to_owned(),
                        reason: format!(
                            "no listed face has vertices ({})",
                            self.names(&required).join(",")
                        ),
                    })
                }
            }
        }
        Ok(faces)
    }

    fn bind_implicit(&mut self, id: &str, tuple: &[usize]) -> Result<Vec<usize>> {
        let d = tuple.len() - 1;
        Self::face_tuples(tuple)
            .into_iter()
            .map(|face| self.lookup_or_create(id, d - 1, face))
            .collect()
    }

    fn lookup_or_create(&mut self, owner: &str, d: usize, tuple: Vec<usize>) -> Result<usize> {
        match self.by_tuple[d].get(&tuple).map(Vec::as_slice) {
            Some([only]) => Ok(*only),
            Some(many) if many.len() > 1 => Err(Error::AmbiguousFace {
                id: owner.to_owned(),
                face: self.names(&tuple),
                count: many.len(),
            }),
            _ if self.options.auto_create_faces => {
                let faces = Self::face_tuples(&tuple)
                    .into_iter()
                    .map(|f| self.lookup_or_create(owner, d - 1, f))
                    .collect::<Result<Vec<_>>>()?;
                let base = self.names(&tuple).join("-");
                let mut id = base.clone();
                let mut suffix = 2;
                while self.ids.contains_key(&id) {
                    id = format!("{base}#{suffix}");
                    suffix += 1;
                }
                let index = self.tables[d].len();
                self.claim_id(&id, SimplexRef::new(d, index))?;
                Ok(self.push(d, id, tuple, faces))
            }
            _ => Err(Error::MissingFace {
                id: owner.to_owned(),
                face: self.names(&tuple),
            }),
        }
    }
}
