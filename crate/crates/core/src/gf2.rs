//! Dense bit-packed linear algebra over the two-element field.
//!
//! Row reduction always pivots on the leftmost nonzero column and takes the
//! topmost unused row, so every routine here is deterministic for a fixed
//! input. `solve` fixes all free variables to zero.

use std::fmt;

use thiserror::Error;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
}

/// A vector over GF(2), packed 64 coordinates per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Vector of length `len` with ones exactly at `indices` (repeated indices cancel).
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        Self::from_indices(len, [i])
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set coordinates, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    pub fn xor_assign(&mut self, other: &Gf2Vector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Gf2Vector) -> Gf2Vector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// True when the two vectors share no set coordinate.
    pub fn is_disjoint(&self, other: &Gf2Vector) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn or_assign(&mut self, other: &Gf2Vector) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn dot(&self, other: &Gf2Vector) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector(")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, ")")
    }
}

/// Dense matrix over GF(2), stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Gf2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Gf2Vector>) -> Result<Self, Gf2Error> {
        for r in &rows {
            if r.len() != cols {
                return Err(Gf2Error::DimensionMismatch {
                    expected: cols,
                    actual: r.len(),
                });
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Gf2Vector]) -> Result<Self, Gf2Error> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Gf2Error::DimensionMismatch {
                    expected: rows,
                    actual: c.len(),
                });
            }
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    pub fn from_dense(entries: &[&[u8]]) -> Self {
        let cols = entries.first().map_or(0, |r| r.len());
        let rows = entries
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                Gf2Vector::from_bits(&r.iter().map(|&x| x != 0).collect::<Vec<_>>())
            })
            .collect();
        Self {
            rows: entries.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &Gf2Vector {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> Gf2Vector {
        let mut v = Gf2Vector::zeros(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            if row.get(c) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Gf2Vector::is_zero)
    }

    pub fn mul_vec(&self, x: &Gf2Vector) -> Result<Gf2Vector, Gf2Error> {
        if x.len() != self.cols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.cols,
                actual: x.len(),
            });
        }
        let mut out = Gf2Vector::zeros(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            if row.dot(x) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, Gf2Error> {
        if self.cols != other.rows {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.cols,
                actual: other.rows,
            });
        }
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc = Gf2Vector::zeros(other.cols);
            for k in row.ones() {
                acc.xor_assign(&other.data[k]);
            }
            out.data[i] = acc;
        }
        Ok(out)
    }

    /// The submatrix made of the listed columns, in the listed order.
    pub fn select_columns(&self, columns: &[usize]) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(self.rows, columns.len());
        for (i, row) in self.data.iter().enumerate() {
            for (j, &c) in columns.iter().enumerate() {
                if row.get(c) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        Echelon::reduce(self, None).pivots.len()
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &Gf2Vector) -> Result<Option<Gf2Vector>, Gf2Error> {
        if b.len() != self.rows {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.rows,
                actual: b.len(),
            });
        }
        let ech = Echelon::reduce(self, Some(b));
        let rhs = ech.rhs.as_ref().expect("augmented reduction");
        // Rows below the pivot block are zero on the left; they must be zero on the right.
        if (ech.pivots.len()..self.rows).any(|r| rhs.get(r)) {
            return Ok(None);
        }
        let mut x = Gf2Vector::zeros(self.cols);
        for (r, &c) in ech.pivots.iter().enumerate() {
            if rhs.get(r) {
                x.set(c, true);
            }
        }
        Ok(Some(x))
    }

    /// Basis of the kernel, one vector per free column in ascending order.
    pub fn nullspace_basis(&self) -> Vec<Gf2Vector> {
        let ech = Echelon::reduce(self, None);
        let mut is_pivot = vec![false; self.cols];
        for &c in &ech.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = Gf2Vector::unit(self.cols, f);
                for (r, &c) in ech.pivots.iter().enumerate() {
                    if ech.rows[r].get(f) {
                        v.set(c, true);
                    }
                }
                v
            })
            .collect()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            for j in 0..self.cols {
                write!(f, "{}", u8::from(row.get(j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form of a matrix, optionally carrying a right-hand side.
struct Echelon {
    rows: Vec<Gf2Vector>,
    pivots: Vec<usize>,
    rhs: Option<Gf2Vector>,
}

impl Echelon {
    fn reduce(m: &Gf2Matrix, rhs: Option<&Gf2Vector>) -> Self {
        let mut rows = m.data.clone();
        let mut rhs = rhs.cloned();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..m.cols {
            if next == m.rows {
                break;
            }
            let Some(p) = (next..m.rows).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, p);
            if let Some(b) = rhs.as_mut() {
                let (x, y) = (b.get(next), b.get(p));
                b.set(next, y);
                b.set(p, x);
            }
            let pivot_row = rows[next].clone();
            let pivot_rhs = rhs.as_ref().map(|b| b.get(next));
            for r in 0..m.rows {
                if r != next && rows[r].get(col) {
                    rows[r].xor_assign(&pivot_row);
                    if let (Some(b), Some(true)) = (rhs.as_mut(), pivot_rhs) {
                        b.flip(r);
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        Self { rows, pivots, rhs }
    }
}

/// Canonical basis of the span of `vectors`: the nonzero rows of their reduced
/// row-echelon form, ordered by pivot position.
pub fn canonical_basis(len: usize, vectors: &[Gf2Vector]) -> Result<Vec<Gf2Vector>, Gf2Error> {
    let m = Gf2Matrix::from_rows(len, vectors.to_vec())?;
    let ech = Echelon::reduce(&m, None);
    Ok(ech.rows.into_iter().take(ech.pivots.len()).collect())
}

/// Dimension of the span of `vectors`.
pub fn span_dim(len: usize, vectors: &[Gf2Vector]) -> Result<usize, Gf2Error> {
    Ok(Gf2Matrix::from_rows(len, vectors.to_vec())?.rank())
}

/// Basis of `span(a) ∩ span(b)` in canonical (reduced echelon) form.
///
/// Every kernel vector `(x, y)` of the generator system `[A | B]` gives an
/// element `A x = B y` of the intersection, and all of them arise this way.
pub fn intersect_subspaces(
    a: &[Gf2Vector],
    b: &[Gf2Vector],
) -> Result<Vec<Gf2Vector>, Gf2Error> {
    let len = match a.first().or(b.first()) {
        Some(v) => v.len(),
        None => return Ok(Vec::new()),
    };
    for v in a.iter().chain(b) {
        if v.len() != len {
            return Err(Gf2Error::DimensionMismatch {
                expected: len,
                actual: v.len(),
            });
        }
    }
    let generators: Vec<Gf2Vector> = a.iter().chain(b).cloned().collect();
    let system = Gf2Matrix::from_columns(len, &generators)?;
    let elements: Vec<Gf2Vector> = system
        .nullspace_basis()
        .into_iter()
        .map(|kernel| {
            let mut acc = Gf2Vector::zeros(len);
            for i in kernel.ones().filter(|&i| i < a.len()) {
                acc.xor_assign(&a[i]);
            }
            acc
        })
        .collect();
    canonical_basis(len, &elements)
}
