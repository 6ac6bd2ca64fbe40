//! Exact dense matrices with deterministic reduced row echelon form,
//! kernel bases, and subspace comparison.
//!
//! Pivot selection always takes the first nonzero candidate, so every
//! operation here is reproducible bit for bit: the RREF of a matrix is a
//! canonical representative of its row space, and two subspaces are equal
//! exactly when their stacked-basis RREFs coincide.

use core::fmt;
use core::ops::Index;

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{FieldDescriptor, Scalar};

/// Errors from exact matrix arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    /// Operand shapes are incompatible for the requested operation.
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Operands or entries belong to different fields.
    FieldMismatch,
    /// An entry vector of the wrong length was supplied.
    EntryCount { expected: usize, got: usize },
    /// A coefficient vector of the wrong length was supplied.
    VectorLength { expected: usize, got: usize },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// The matrix has no inverse.
    Singular,
}

impl fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinAlgError::ShapeMismatch { left, right } => write!(
                f,
                "shape mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            LinAlgError::FieldMismatch => write!(f, "matrix operands from different fields"),
            LinAlgError::EntryCount { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            LinAlgError::VectorLength { expected, got } => {
                write!(f, "expected a vector of length {expected}, got {got}")
            }
            LinAlgError::NotSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            LinAlgError::Singular => write!(f, "matrix is singular"),
        }
    }
}

impl core::error::Error for LinAlgError {}

/// A dense matrix over a single exact field, stored row-major.
///
/// Row and column indices are 0-based throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: FieldDescriptor,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    /// Builds a matrix from row-major entries, validating count and field.
    pub fn new(
        rows: usize,
        cols: usize,
        field: FieldDescriptor,
        entries: Vec<Scalar>,
    ) -> Result<ExactMatrix, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::EntryCount {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        if entries.iter().any(|s| s.field() != field) {
            return Err(LinAlgError::FieldMismatch);
        }
        Ok(ExactMatrix {
            rows,
            cols,
            field,
            entries,
        })
    }

    /// The all-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize, field: FieldDescriptor) -> ExactMatrix {
        ExactMatrix {
            rows,
            cols,
            field,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize, field: FieldDescriptor) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n, n, field);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one(field);
        }
        m
    }

    /// Convenience constructor from machine integers, row-major.
    pub fn from_integers(
        rows: usize,
        cols: usize,
        field: FieldDescriptor,
        entries: &[i64],
    ) -> Result<ExactMatrix, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::EntryCount {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(ExactMatrix {
            rows,
            cols,
            field,
            entries: entries
                .iter()
                .map(|&v| Scalar::from_integer(v, field))
                .collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.entries[row * self.cols + col]
    }

    /// Replaces one entry; the scalar must come from the matrix field.
    pub fn set(&mut self, row: usize, col: usize, value: Scalar) -> Result<(), LinAlgError> {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        if value.field() != self.field {
            return Err(LinAlgError::FieldMismatch);
        }
        self.entries[row * self.cols + col] = value;
        Ok(())
    }

    /// One row as a slice.
    pub fn row(&self, row: usize) -> &[Scalar] {
        assert!(row < self.rows, "row out of bounds");
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    /// All entries in row-major order.
    pub fn flatten_row_major(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    /// All entries in column-major order (columns concatenated).
    pub fn flatten_column_major(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                out.push(self.entries[r * self.cols + c].clone());
            }
        }
        out
    }

    /// Rebuilds a matrix from column-major entries.
    pub fn from_column_major(
        rows: usize,
        cols: usize,
        field: FieldDescriptor,
        entries: &[Scalar],
    ) -> Result<ExactMatrix, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::EntryCount {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        let mut m = ExactMatrix::zeros(rows, cols, field);
        for c in 0..cols {
            for r in 0..rows {
                let s = entries[c * rows + r].clone();
                if s.field() != field {
                    return Err(LinAlgError::FieldMismatch);
                }
                m.entries[r * cols + c] = s;
            }
        }
        Ok(m)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.cols, self.rows, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.entries[c * self.rows + r] = self.entries[r * self.cols + c].clone();
            }
        }
        m
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinAlgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinAlgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch);
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinAlgError> {
        self.add(&other.scale(&Scalar::from_integer(-1, other.field))?)
    }

    /// Multiplies every entry by `factor`.
    pub fn scale(&self, factor: &Scalar) -> Result<ExactMatrix, LinAlgError> {
        if factor.field() != self.field {
            return Err(LinAlgError::FieldMismatch);
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|s| s * factor).collect(),
        })
    }

    /// Matrix product `self * other`.
    pub fn matmul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch);
        }
        let mut m = ExactMatrix::zeros(self.rows, other.cols, self.field);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let lhs = &self.entries[r * self.cols + k];
                if lhs.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let rhs = &other.entries[k * other.cols + c];
                    if rhs.is_zero() {
                        continue;
                    }
                    let cell = &mut m.entries[r * other.cols + c];
                    *cell = &*cell + &(lhs * rhs);
                }
            }
        }
        Ok(m)
    }

    /// Applies the matrix to a coordinate vector: `self * v`.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::VectorLength {
                expected: self.cols,
                got: v.len(),
            });
        }
        if v.iter().any(|s| s.field() != self.field) {
            return Err(LinAlgError::FieldMismatch);
        }
        let mut out = vec![Scalar::zero(self.field); self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            for (c, coord) in v.iter().enumerate() {
                let a = &self.entries[r * self.cols + c];
                if a.is_zero() || coord.is_zero() {
                    continue;
                }
                *slot = &*slot + &(a * coord);
            }
        }
        Ok(out)
    }

    /// Extracts column `col` as a vector.
    pub fn column(&self, col: usize) -> Vec<Scalar> {
        assert!(col < self.cols, "column out of bounds");
        (0..self.rows)
            .map(|r| self.entries[r * self.cols + col].clone())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and the pivot columns, in order.
    ///
    /// Deterministic: the pivot for each column is the first row (top to
    /// bottom) with a nonzero entry, so equal matrices always reduce to
    /// identical echelon forms.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.entries[r * m.cols + col].is_zero())
            else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m.entries[pivot_row * m.cols + col]
                .inv()
                .expect("pivot entry is nonzero");
            for c in col..m.cols {
                let cell = &mut m.entries[pivot_row * m.cols + c];
                if !cell.is_zero() {
                    *cell = &*cell * &inv;
                }
            }
            for r2 in 0..m.rows {
                if r2 == pivot_row {
                    continue;
                }
                let factor = m.entries[r2 * m.cols + col].clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let above = m.entries[pivot_row * m.cols + c].clone();
                    if above.is_zero() {
                        continue;
                    }
                    let cell = &mut m.entries[r2 * m.cols + c];
                    *cell = &*cell - &(&factor * &above);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// The dimension of the row space.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A canonical basis of the null space `{v : self * v = 0}`.
    ///
    /// One special solution per free column, in increasing column order:
    /// the vector carries 1 at its own free column, 0 at every other free
    /// column, and the negated echelon entries at the pivot columns. For a
    /// zero matrix this is the standard basis.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(self.field); self.cols];
            v[free] = Scalar::one(self.field);
            for (pi, &pcol) in pivots.iter().enumerate() {
                let entry = &r.entries[pi * r.cols + free];
                if !entry.is_zero() {
                    v[pcol] = entry.negated();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// The inverse of a square matrix, via row reduction of `[self | I]`.
    pub fn inverse(&self) -> Result<ExactMatrix, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(n, 2 * n, self.field);
        for r in 0..n {
            for c in 0..n {
                aug.entries[r * 2 * n + c] = self.entries[r * n + c].clone();
            }
            aug.entries[r * 2 * n + n + r] = Scalar::one(self.field);
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinAlgError::Singular);
        }
        let mut inv = ExactMatrix::zeros(n, n, self.field);
        for r in 0..n {
            for c in 0..n {
                inv.entries[r * n + c] = red.entries[r * 2 * n + n + c].clone();
            }
        }
        Ok(inv)
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Scalar;
    fn index(&self, (row, col): (usize, usize)) -> &Scalar {
        self.get(row, col)
    }
}

impl fmt::Display for ExactMatrix {
    /// Bracketed rows with space-aligned columns.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use alloc::string::{String, ToString};
        let cells: Vec<String> = self.entries.iter().map(|s| s.to_string()).collect();
        let mut widths = vec![0usize; self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                widths[c] = widths[c].max(cells[r * self.cols + c].len());
            }
        }
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                let cell = &cells[r * self.cols + c];
                write!(f, " {cell}")?;
                for _ in cell.len()..widths[c] {
                    write!(f, " ")?;
                }
            }
            write!(f, " ]")?;
            if r + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

fn validate_family(
    vectors: &[Vec<Scalar>],
) -> Result<Option<(usize, FieldDescriptor)>, LinAlgError> {
    let Some(first) = vectors.first() else {
        return Ok(None);
    };
    let Some(scalar) = first.first() else {
        // zero-length vectors: degenerate but consistent if all are empty
        if vectors.iter().any(|v| !v.is_empty()) {
            return Err(LinAlgError::VectorLength {
                expected: 0,
                got: 1,
            });
        }
        return Ok(None);
    };
    let len = first.len();
    let field = scalar.field();
    for v in vectors {
        if v.len() != len {
            return Err(LinAlgError::VectorLength {
                expected: len,
                got: v.len(),
            });
        }
        if v.iter().any(|s| s.field() != field) {
            return Err(LinAlgError::FieldMismatch);
        }
    }
    Ok(Some((len, field)))
}

fn stack(vectors: &[Vec<Scalar>], len: usize, field: FieldDescriptor) -> ExactMatrix {
    let mut entries = Vec::with_capacity(vectors.len() * len);
    for v in vectors {
        entries.extend(v.iter().cloned());
    }
    ExactMatrix {
        rows: vectors.len(),
        cols: len,
        field,
        entries,
    }
}

/// The canonical basis of the span of `vectors`: stack, reduce, and keep the
/// nonzero echelon rows. Two families span the same subspace exactly when
/// their canonical bases are equal vectors in equal order.
pub fn canonical_span(vectors: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, LinAlgError> {
    let Some((len, field)) = validate_family(vectors)? else {
        return Ok(Vec::new());
    };
    let (red, pivots) = stack(vectors, len, field).rref();
    Ok((0..pivots.len()).map(|r| red.row(r).to_vec()).collect())
}

/// Whether two families of vectors span the same subspace.
///
/// Empty families denote the zero subspace. The comparison is exact: both
/// spans are put in canonical form and compared entrywise.
pub fn subspace_equal(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Result<bool, LinAlgError> {
    let ca = canonical_span(a)?;
    let cb = canonical_span(b)?;
    if let (Some(va), Some(vb)) = (ca.first(), cb.first()) {
        if va.len() != vb.len() {
            return Err(LinAlgError::VectorLength {
                expected: va.len(),
                got: vb.len(),
            });
        }
        if va[0].field() != vb[0].field() {
            return Err(LinAlgError::FieldMismatch);
        }
    }
    Ok(ca == cb)
}

/// Whether `v` lies in the span of `basis` (rank does not grow when `v` is
/// appended).
pub fn span_contains(basis: &[Vec<Scalar>], v: &[Scalar]) -> Result<bool, LinAlgError> {
    if v.is_empty() {
        return Ok(true);
    }
    if let Some((len, field)) = validate_family(basis)? {
        if v.len() != len {
            return Err(LinAlgError::VectorLength {
                expected: len,
                got: v.len(),
            });
        }
        if v.iter().any(|s| s.field() != field) {
            return Err(LinAlgError::FieldMismatch);
        }
        let base_rank = stack(basis, len, field).rank();
        let mut extended = basis.to_vec();
        extended.push(v.to_vec());
        Ok(stack(&extended, len, field).rank() == base_rank)
    } else {
        // empty basis spans only the zero vector
        Ok(v.iter().all(Scalar::is_zero))
    }
}
