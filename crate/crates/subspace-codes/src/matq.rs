//! Dense matrices and subspaces over GF(q): reduced row echelon form, rank,
//! nullspace, subspace intersection, and the rank / subspace / injection
//! distances.

use std::fmt;
use std::ops::{Index, IndexMut};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// A dense matrix over a finite field. Empty shapes are permitted.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixGF {}x{} over GF({})", self.rows, self.cols, self.field.order())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for MatrixGF {
    type Output = Elem;
    fn index(&self, (i, j): (usize, usize)) -> &Elem {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for MatrixGF {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Elem {
        &mut self.entries[i * self.cols + j]
    }
}

impl MatrixGF {
    pub fn zeros(field: &Arc<Field>, rows: usize, cols: usize) -> Self {
        MatrixGF {
            field: Arc::clone(field),
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: &Arc<Field>, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in &rows {
            if row.len() != c {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            for &e in row {
                if e >= field.order() {
                    return Err(Error::InvalidParameter(format!(
                        "entry {} out of range for GF({})",
                        e,
                        field.order()
                    )));
                }
                entries.push(e);
            }
        }
        Ok(MatrixGF {
            field: Arc::clone(field),
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn identity(field: &Arc<Field>, n: usize) -> Self {
        let mut m = MatrixGF::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut out = MatrixGF::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn add(&self, other: &MatrixGF) -> MatrixGF {
        self.check_same_shape(other);
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        MatrixGF {
            field: Arc::clone(f),
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &MatrixGF) -> MatrixGF {
        self.check_same_shape(other);
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        MatrixGF {
            field: Arc::clone(f),
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// In-place `self += c * other`, used by exhaustive codeword scans.
    pub fn add_scaled_in_place(&mut self, other: &MatrixGF, c: Elem) {
        self.check_same_shape(other);
        if c == 0 {
            return;
        }
        let f = Arc::clone(&self.field);
        for (a, &b) in self.entries.iter_mut().zip(&other.entries) {
            *a = f.add(*a, f.mul(c, b));
        }
    }

    fn check_same_shape(&self, other: &MatrixGF) {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        assert_eq!(self.cols, other.cols, "column count mismatch");
        assert_eq!(*self.field, *other.field, "field mismatch");
    }

    /// Vertical stack of two matrices with equal column counts.
    pub fn stack(&self, other: &MatrixGF) -> MatrixGF {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        assert_eq!(*self.field, *other.field, "field mismatch");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        MatrixGF {
            field: Arc::clone(&self.field),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Reduced row echelon form: pivots normalized to 1, zeros above and
    /// below each pivot, pivot columns strictly increasing. Returns the
    /// reduced matrix (zero rows kept in place) and the pivot column list.
    pub fn rref(&self) -> (MatrixGF, Vec<usize>) {
        let mut m = self.clone();
        let f = Arc::clone(&m.field);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m[(i, col)] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.entries.swap(r * m.cols + j, pr * m.cols + j);
                }
            }
            let inv = f.inv(m[(r, col)]);
            for j in col..m.cols {
                m[(r, j)] = f.mul(inv, m[(r, j)]);
            }
            for i in 0..m.rows {
                if i != r && m[(i, col)] != 0 {
                    let c = m[(i, col)];
                    for j in col..m.cols {
                        let v = f.sub(m[(i, j)], f.mul(c, m[(r, j)]));
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`; has `cols - rank` vectors.
    pub fn nullspace(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let pivot_rows: Vec<(usize, usize)> = pivots.iter().copied().enumerate().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut x = vec![0; self.cols];
            x[free] = 1;
            for &(row, pcol) in &pivot_rows {
                x[pcol] = f.neg(r[(row, free)]);
            }
            basis.push(x);
        }
        basis
    }

    /// Matrix text block: one row per line, integer entries separated by
    /// single spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parse matrix text blocks separated by blank lines. Block shapes are
/// inferred; all rows of a block must have equal length and entries must lie
/// in the field.
pub fn parse_matrix_blocks(field: &Arc<Field>, text: &str) -> Result<Vec<MatrixGF>> {
    let mut blocks = Vec::new();
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for line in text.lines().chain(std::iter::once("")) {
        if line.trim().is_empty() {
            if !rows.is_empty() {
                blocks.push(MatrixGF::from_rows(field, std::mem::take(&mut rows))?);
            }
            continue;
        }
        let mut row = Vec::new();
        for tok in line.split_whitespace() {
            let e: Elem = tok
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad matrix entry {tok:?}")))?;
            row.push(e);
        }
        rows.push(row);
    }
    Ok(blocks)
}

/// Rank distance between two matrices of equal shape.
pub fn rank_distance(x: &MatrixGF, y: &MatrixGF) -> usize {
    y.sub(x).rank()
}

/// A subspace of GF(q)^n, canonically represented by its full-rank RREF
/// generator matrix. Two subspaces are equal iff their generators are.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    generator: MatrixGF,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace dim {} of GF({})^{}",
            self.dim(),
            self.generator.field().order(),
            self.ambient
        )
    }
}

impl Subspace {
    /// Row space of an arbitrary matrix: canonicalize through RREF and drop
    /// zero rows.
    pub fn from_span(m: &MatrixGF) -> Subspace {
        let (r, pivots) = m.rref();
        let k = pivots.len();
        let mut gen = MatrixGF::zeros(m.field(), k, m.cols());
        for i in 0..k {
            for j in 0..m.cols() {
                gen[(i, j)] = r[(i, j)];
            }
        }
        Subspace {
            ambient: m.cols(),
            generator: gen,
            pivots,
        }
    }

    /// Wrap a matrix that is already a full-rank RREF generator.
    pub fn from_rref_generator(m: MatrixGF, pivots: Vec<usize>) -> Subspace {
        debug_assert_eq!(pivots.len(), m.rows());
        debug_assert_eq!(m.rref().0, m, "generator must already be in RREF");
        Subspace {
            ambient: m.cols(),
            generator: m,
            pivots,
        }
    }

    pub fn zero(field: &Arc<Field>, n: usize) -> Subspace {
        Subspace {
            ambient: n,
            generator: MatrixGF::zeros(field, 0, n),
            pivots: vec![],
        }
    }

    pub fn full(field: &Arc<Field>, n: usize) -> Subspace {
        Subspace {
            ambient: n,
            generator: MatrixGF::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.generator.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.generator
    }

    /// Pivot columns of the canonical generator, ascending, 0-based.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn field(&self) -> &Arc<Field> {
        self.generator.field()
    }

    fn check_compatible(&self, other: &Subspace) {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        assert_eq!(*self.field().as_ref(), *other.field().as_ref(), "field mismatch");
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.check_compatible(other);
        let stacked = self.generator.stack(&other.generator);
        self.dim() + other.dim() - stacked.rank()
    }

    /// d_I(U, V) = max(dim U, dim V) - dim(U ∩ V).
    pub fn injection_distance(&self, other: &Subspace) -> usize {
        self.dim().max(other.dim()) - self.intersection_dim(other)
    }

    /// d_S(U, V) = dim U + dim V - 2 dim(U ∩ V).
    pub fn subspace_distance(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - 2 * self.intersection_dim(other)
    }
}
