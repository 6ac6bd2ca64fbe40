//! Derivations of a structure-constant algebra: the Leibniz constraint
//! system, a canonical basis of the derivation space, its Lie-algebra
//! structure, and verification against the built-in reference families.
//!
//! A matrix `d` acts in the column convention: column `j` holds the
//! coordinates of `d(e_j)`, so composition of maps is matrix product.
//! The Leibniz rule `d(x y) = d(x) y + x d(y)` on all basis pairs is a
//! linear system in the `n^2` entries of `d`; its solution space is the
//! derivation algebra.

use core::fmt;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, AlgebraError, StructureTensor};
use crate::catalog;
use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::{self, ExactMatrix, LinAlgError};

/// Errors from derivation computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerError {
    LinAlg(LinAlgError),
    Algebra(AlgebraError),
    /// A candidate derivation matrix of the wrong shape.
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// Operands from different fields.
    FieldMismatch,
    /// A substitution with the wrong number of parameter values.
    ParameterCount {
        expected: usize,
        got: usize,
    },
    /// A bracket of basis derivations left the computed span; indices are
    /// 1-based positions in the basis. This indicates an internal
    /// inconsistency and should never occur for a valid algebra.
    ClosureViolation {
        left: usize,
        right: usize,
    },
    /// A name with no catalog entry.
    UnknownEntry(String),
    /// A catalog entry with no reference derivation family (abelian entries).
    NoReferenceFamily(String),
}

impl fmt::Display for DerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerError::LinAlg(e) => write!(f, "{e}"),
            DerError::Algebra(e) => write!(f, "{e}"),
            DerError::ShapeMismatch { expected, got } => write!(
                f,
                "expected a {}x{} matrix, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            DerError::FieldMismatch => write!(f, "operand from a different field"),
            DerError::ParameterCount { expected, got } => {
                write!(f, "expected {expected} parameter values, got {got}")
            }
            DerError::ClosureViolation { left, right } => write!(
                f,
                "bracket of basis derivations {left} and {right} left the computed span"
            ),
            DerError::UnknownEntry(name) => write!(f, "no catalog entry named {name}"),
            DerError::NoReferenceFamily(name) => {
                write!(f, "catalog entry {name} has no reference derivation family")
            }
        }
    }
}

impl core::error::Error for DerError {}

impl From<LinAlgError> for DerError {
    fn from(e: LinAlgError) -> Self {
        DerError::LinAlg(e)
    }
}

impl From<AlgebraError> for DerError {
    fn from(e: AlgebraError) -> Self {
        DerError::Algebra(e)
    }
}

fn check_candidate(a: &Algebra, d: &ExactMatrix) -> Result<(), DerError> {
    let n = a.dim();
    if (d.rows(), d.cols()) != (n, n) {
        return Err(DerError::ShapeMismatch {
            expected: (n, n),
            got: (d.rows(), d.cols()),
        });
    }
    if d.field() != a.field() {
        return Err(DerError::FieldMismatch);
    }
    Ok(())
}

/// The failure of the Leibniz rule on the basis pair `(e_i, e_j)`:
/// the coordinates of `d(e_i e_j) - d(e_i) e_j - e_i d(e_j)`.
///
/// Component `k` is the sum over `m` of `c[i][j][m] d[k][m]` minus
/// `d[m][i] c[m][j][k]` minus `d[m][j] c[i][m][k]`; the matrix `d` is a
/// derivation exactly when every component vanishes for every pair.
pub fn leibniz_defect(
    a: &Algebra,
    d: &ExactMatrix,
    i: usize,
    j: usize,
) -> Result<Vec<Scalar>, DerError> {
    check_candidate(a, d)?;
    let n = a.dim();
    let t = a.tensor();
    if i == 0 || i > n {
        return Err(AlgebraError::IndexOutOfRange { index: i, dim: n }.into());
    }
    if j == 0 || j > n {
        return Err(AlgebraError::IndexOutOfRange { index: j, dim: n }.into());
    }
    let field = a.field();
    let mut out = vec![Scalar::zero(field); n];
    for k in 1..=n {
        let mut acc = Scalar::zero(field);
        for m in 1..=n {
            acc = &acc + &(&t.coeff(i, j, m) * d.get(k - 1, m - 1));
            acc = &acc - &(d.get(m - 1, i - 1) * &t.coeff(m, j, k));
            acc = &acc - &(d.get(m - 1, j - 1) * &t.coeff(i, m, k));
        }
        out[k - 1] = acc;
    }
    Ok(out)
}

/// The Leibniz failure on arbitrary elements `x`, `y` (coordinates):
/// `d(x y) - d(x) y - x d(y)`. Zero for all pairs whenever it is zero on
/// basis pairs, since both sides are bilinear.
pub fn leibniz_defect_elements(
    a: &Algebra,
    d: &ExactMatrix,
    x: &[Scalar],
    y: &[Scalar],
) -> Result<Vec<Scalar>, DerError> {
    check_candidate(a, d)?;
    let product = a.multiply(x, y)?;
    let lhs = d.apply(&product)?;
    let dx_y = a.multiply(&d.apply(x)?, y)?;
    let x_dy = a.multiply(x, &d.apply(y)?)?;
    Ok((0..a.dim())
        .map(|k| &(&lhs[k] - &dx_y[k]) - &x_dy[k])
        .collect())
}

/// Whether `d` satisfies the Leibniz rule on every basis pair.
pub fn is_derivation(a: &Algebra, d: &ExactMatrix) -> Result<bool, DerError> {
    check_candidate(a, d)?;
    let n = a.dim();
    for i in 1..=n {
        for j in 1..=n {
            if leibniz_defect(a, d, i, j)?.iter().any(|s| !s.is_zero()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Column index of the unknown `d[r][s]` (1-based `r`, `s`) in the
/// constraint system: unknowns are flattened row-major.
fn unknown_column(r: usize, s: usize, n: usize) -> usize {
    (r - 1) * n + (s - 1)
}

fn constraint_rows(a: &Algebra, pairs: &[(usize, usize)]) -> ExactMatrix {
    let n = a.dim();
    let t = a.tensor();
    let mut m = ExactMatrix::zeros(pairs.len() * n, n * n, a.field());
    let mut row = 0;
    for &(i, j) in pairs {
        for k in 1..=n {
            for s in 1..=n {
                // d(e_i e_j) contributes c[i][j][s] to the unknown d[k][s]
                let c = t.coeff(i, j, s);
                if !c.is_zero() {
                    let col = unknown_column(k, s, n);
                    let cur = m.get(row, col).clone();
                    m.set(row, col, &cur + &c).expect("same field");
                }
            }
            for r in 1..=n {
                // -d(e_i) e_j contributes -c[r][j][k] to the unknown d[r][i]
                let c = t.coeff(r, j, k);
                if !c.is_zero() {
                    let col = unknown_column(r, i, n);
                    let cur = m.get(row, col).clone();
                    m.set(row, col, &cur - &c).expect("same field");
                }
                // -e_i d(e_j) contributes -c[i][r][k] to the unknown d[r][j]
                let c = t.coeff(i, r, k);
                if !c.is_zero() {
                    let col = unknown_column(r, j, n);
                    let cur = m.get(row, col).clone();
                    m.set(row, col, &cur - &c).expect("same field");
                }
            }
            row += 1;
        }
    }
    m
}

/// The Leibniz constraint system over the basis pairs `(i, j)` with
/// `i <= j`, one block of `n` rows per pair in lexicographic order.
///
/// Row `(i, j, k)` holds the coefficients of component `k` of the defect
/// on `(e_i, e_j)` as a linear form in the unknowns `d[r][s]`, columns
/// indexed row-major (`d[r][s]` at column `(r-1) n + (s-1)`). For
/// commutative algebras the pairs with `i > j` duplicate these rows;
/// [`constraint_matrix_full`] keeps them.
pub fn constraint_matrix(a: &Algebra) -> ExactMatrix {
    let n = a.dim();
    let mut pairs = Vec::with_capacity(n * (n + 1) / 2);
    for i in 1..=n {
        for j in i..=n {
            pairs.push((i, j));
        }
    }
    constraint_rows(a, &pairs)
}

/// The Leibniz constraint system over all ordered basis pairs, `n^3` rows.
pub fn constraint_matrix_full(a: &Algebra) -> ExactMatrix {
    let n = a.dim();
    let mut pairs = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            pairs.push((i, j));
        }
    }
    constraint_rows(a, &pairs)
}

/// The derivation algebra of `a` with its canonical basis.
///
/// The basis is canonical for the subspace, not just some kernel basis:
/// matrices are flattened column by column, the resulting vectors are put
/// in reduced row echelon form, and each echelon row is folded back into a
/// matrix. Equal derivation spaces therefore always carry equal bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    algebra_dim: usize,
    field: FieldDescriptor,
    basis: Vec<ExactMatrix>,
}

impl DerivationSpace {
    /// The dimension of the derivation algebra.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The canonical basis matrices, in echelon order.
    pub fn basis(&self) -> &[ExactMatrix] {
        &self.basis
    }

    /// The dimension of the underlying algebra (basis matrices are square
    /// of this size).
    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }
}

/// Computes the derivation algebra of `a` by solving the Leibniz system.
///
/// Commutative algebras use the deduplicated constraint block (`i <= j`);
/// other algebras fall back to all ordered pairs, so the result is the
/// honest derivation space either way.
pub fn derivation_basis(a: &Algebra) -> DerivationSpace {
    let n = a.dim();
    let system = if a.tensor().is_symmetric() {
        constraint_matrix(a)
    } else {
        constraint_matrix_full(a)
    };
    // kernel vectors are row-major (the unknown layout); canonicalize the
    // span in column-major coordinates
    let column_vectors: Vec<Vec<Scalar>> = system
        .kernel_basis()
        .into_iter()
        .map(|v| {
            ExactMatrix::new(n, n, a.field(), v)
                .expect("kernel vectors have n^2 entries")
                .flatten_column_major()
        })
        .collect();
    let canonical = matrix::canonical_span(&column_vectors).expect("uniform kernel vectors");
    let basis = canonical
        .into_iter()
        .map(|v| {
            ExactMatrix::from_column_major(n, n, a.field(), &v)
                .expect("canonical vectors have n^2 entries")
        })
        .collect();
    DerivationSpace {
        algebra_dim: n,
        field: a.field(),
        basis,
    }
}

/// The commutator `d1 d2 - d2 d1` of two derivation matrices (columns act
/// as images of basis vectors, so composition is matrix product).
pub fn bracket(d1: &ExactMatrix, d2: &ExactMatrix) -> Result<ExactMatrix, DerError> {
    if d1.rows() != d1.cols() || (d1.rows(), d1.cols()) != (d2.rows(), d2.cols()) {
        return Err(DerError::ShapeMismatch {
            expected: (d1.rows(), d1.rows()),
            got: (d2.rows(), d2.cols()),
        });
    }
    if d1.field() != d2.field() {
        return Err(DerError::FieldMismatch);
    }
    Ok(d1.matmul(d2)?.sub(&d2.matmul(d1)?)?)
}

fn leading_column_major_index(m: &ExactMatrix) -> usize {
    m.flatten_column_major()
        .iter()
        .position(|s| !s.is_zero())
        .expect("canonical basis matrices are nonzero")
}

/// The structure constants of the derivation algebra under the commutator,
/// expressed in the canonical basis of [`derivation_basis`].
///
/// Entry `(p, q, t)` is the coefficient of basis derivation `t` in
/// `[D_p, D_q]` (1-based). Coordinates are read off the echelon pivots and
/// then checked exactly; a bracket outside the span is reported as a
/// closure violation rather than silently projected.
pub fn der_structure_constants(a: &Algebra) -> Result<StructureTensor, DerError> {
    let space = derivation_basis(a);
    let m = space.dim();
    let field = a.field();
    let pivots: Vec<usize> = space
        .basis()
        .iter()
        .map(leading_column_major_index)
        .collect();
    let mut tensor = StructureTensor::new(m, field);
    for p in 0..m {
        for q in (p + 1)..m {
            let b = bracket(&space.basis()[p], &space.basis()[q])?;
            let flat = b.flatten_column_major();
            let coords: Vec<Scalar> = pivots.iter().map(|&c| flat[c].clone()).collect();
            // exact closure check: the bracket must be the pivot-coordinate
            // combination of the basis
            let n = space.algebra_dim();
            let mut recon = ExactMatrix::zeros(n, n, field);
            for (t, coeff) in coords.iter().enumerate() {
                if !coeff.is_zero() {
                    recon = recon.add(&space.basis()[t].scale(coeff)?)?;
                }
            }
            if recon != b {
                return Err(DerError::ClosureViolation {
                    left: p + 1,
                    right: q + 1,
                });
            }
            for (t, coeff) in coords.into_iter().enumerate() {
                if !coeff.is_zero() {
                    tensor.set(q + 1, p + 1, t + 1, coeff.negated())?;
                    tensor.set(p + 1, q + 1, t + 1, coeff)?;
                }
            }
        }
    }
    Ok(tensor)
}

/// One entry of a parametric matrix: a linear combination of parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    terms: Vec<(usize, Scalar)>,
}

impl LinearForm {
    fn zero() -> LinearForm {
        LinearForm { terms: Vec::new() }
    }

    fn add_term(&mut self, parameter: usize, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&parameter, |t| t.0) {
            Ok(pos) => {
                let sum = &self.terms[pos].1 + &coeff;
                if sum.is_zero() {
                    self.terms.remove(pos);
                } else {
                    self.terms[pos].1 = sum;
                }
            }
            Err(pos) => self.terms.insert(pos, (parameter, coeff)),
        }
    }

    /// The nonzero terms `(parameter index, coefficient)` in parameter order.
    pub fn terms(&self) -> &[(usize, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Renders the form against the parameter name table: `0`, `d21`,
    /// `2d11`, `-d31`, or `2d11 - d33`; fractional coefficients are
    /// parenthesized, as in `(1/2)d11`.
    pub fn render(&self, parameters: &[String]) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        fn push_magnitude(out: &mut String, coeff: &Scalar, name: &str) {
            if coeff.is_one() {
                out.push_str(name);
                return;
            }
            let fractional = coeff
                .as_rational()
                .is_some_and(|q| !num_traits_is_one(q.denom()));
            if fractional {
                out.push('(');
                out.push_str(&coeff.to_string());
                out.push(')');
            } else {
                out.push_str(&coeff.to_string());
            }
            out.push_str(name);
        }
        let mut out = String::new();
        for (pos, (param, coeff)) in self.terms.iter().enumerate() {
            let name = &parameters[*param];
            let negative = coeff.is_negative();
            if pos == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let magnitude = if negative {
                coeff.negated()
            } else {
                coeff.clone()
            };
            push_magnitude(&mut out, &magnitude, name);
        }
        out
    }
}

fn num_traits_is_one(v: &num_bigint::BigInt) -> bool {
    use num_traits::One;
    v.is_one()
}

/// A matrix whose entries are linear forms in named parameters: the shape
/// of a generic derivation.
///
/// Parameters are named `d{r}{s}` after the matrix position that carries
/// the parameter alone (the echelon pivot), 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricFamily {
    n: usize,
    field: FieldDescriptor,
    parameters: Vec<String>,
    entries: Vec<LinearForm>,
}

impl ParametricFamily {
    /// The matrix size.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    /// The free parameter names; the family dimension is their count.
    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    /// The number of free parameters.
    pub fn dim(&self) -> usize {
        self.parameters.len()
    }

    /// The linear form at 0-based position `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> &LinearForm {
        assert!(row < self.n && col < self.n, "entry out of range");
        &self.entries[row * self.n + col]
    }

    /// Evaluates the family at concrete parameter values, in parameter order.
    pub fn substitute(&self, values: &[Scalar]) -> Result<ExactMatrix, DerError> {
        if values.len() != self.parameters.len() {
            return Err(DerError::ParameterCount {
                expected: self.parameters.len(),
                got: values.len(),
            });
        }
        if values.iter().any(|s| s.field() != self.field) {
            return Err(DerError::FieldMismatch);
        }
        let mut m = ExactMatrix::zeros(self.n, self.n, self.field);
        for row in 0..self.n {
            for col in 0..self.n {
                let mut acc = Scalar::zero(self.field);
                for (param, coeff) in self.entry(row, col).terms() {
                    acc = &acc + &(coeff * &values[*param]);
                }
                m.set(row, col, acc)?;
            }
        }
        Ok(m)
    }

    /// One matrix per parameter: the family evaluated at that parameter set
    /// to 1 and the others to 0. These span the family.
    pub fn basis(&self) -> Vec<ExactMatrix> {
        (0..self.parameters.len())
            .map(|t| {
                let mut values = vec![Scalar::zero(self.field); self.parameters.len()];
                values[t] = Scalar::one(self.field);
                self.substitute(&values)
                    .expect("unit substitution is well formed")
            })
            .collect()
    }
}

impl fmt::Display for ParametricFamily {
    /// Bracketed rows with space-aligned columns, entries rendered as forms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .entries
            .iter()
            .map(|form| form.render(&self.parameters))
            .collect();
        let mut widths = vec![0usize; self.n];
        for row in 0..self.n {
            for col in 0..self.n {
                widths[col] = widths[col].max(cells[row * self.n + col].len());
            }
        }
        for row in 0..self.n {
            write!(f, "[")?;
            for col in 0..self.n {
                let cell = &cells[row * self.n + col];
                write!(f, " {cell}")?;
                for _ in cell.len()..widths[col] {
                    write!(f, " ")?;
                }
            }
            write!(f, " ]")?;
            if row + 1 < self.n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Presents a canonical derivation space as a parametric matrix.
///
/// Each basis matrix contributes one parameter, named `d{r}{s}` after its
/// pivot position — the first position, scanning columns left to right and
/// each column top to bottom, where that matrix has its leading 1. Entry
/// `(r, s)` of the family is the linear form combining the basis matrices'
/// `(r, s)` entries.
pub fn render_parametric(space: &DerivationSpace) -> ParametricFamily {
    let n = space.algebra_dim();
    let mut parameters = Vec::with_capacity(space.dim());
    for m in space.basis() {
        let lead = leading_column_major_index(m);
        let (row, col) = (lead % n, lead / n);
        let mut name = String::from("d");
        name.push_str(&(row + 1).to_string());
        name.push_str(&(col + 1).to_string());
        parameters.push(name);
    }
    let mut entries = vec![LinearForm::zero(); n * n];
    for row in 0..n {
        for col in 0..n {
            let form = &mut entries[row * n + col];
            for (t, m) in space.basis().iter().enumerate() {
                form.add_term(t, m.get(row, col).clone());
            }
        }
    }
    ParametricFamily {
        n,
        field: space.field(),
        parameters,
        entries,
    }
}

type RefTerms = &'static [(i64, &'static str)];
type RefEntry = (usize, usize, RefTerms);

/// The published derivation families of the eight non-abelian catalog
/// entries: nonzero grid positions (1-based, row-major order) as integer
/// combinations of named parameters.
const REFERENCE_FAMILIES: &[(&str, usize, &[RefEntry])] = &[
    (
        "A_{1,2}",
        2,
        &[
            (1, 1, &[(1, "d11")]),
            (2, 1, &[(1, "d21")]),
            (2, 2, &[(2, "d11")]),
        ],
    ),
    (
        "A_{1,2}+A_{0,1}",
        3,
        &[
            (1, 1, &[(1, "d11")]),
            (2, 1, &[(1, "d21")]),
            (2, 2, &[(2, "d11")]),
            (2, 3, &[(1, "d23")]),
            (3, 1, &[(1, "d31")]),
            (3, 3, &[(1, "d33")]),
        ],
    ),
    (
        "A_{1,3}",
        3,
        &[
            (1, 1, &[(1, "d33")]),
            (1, 3, &[(-1, "d31")]),
            (2, 1, &[(1, "d21")]),
            (2, 2, &[(2, "d33")]),
            (2, 3, &[(1, "d23")]),
            (3, 1, &[(1, "d31")]),
            (3, 3, &[(1, "d33")]),
        ],
    ),
    (
        "A_{1,2}+A_{0,1}^2",
        4,
        &[
            (1, 1, &[(1, "d11")]),
            (2, 1, &[(1, "d21")]),
            (2, 2, &[(2, "d11")]),
            (2, 3, &[(1, "d23")]),
            (2, 4, &[(1, "d24")]),
            (3, 1, &[(1, "d31")]),
            (3, 3, &[(1, "d33")]),
            (3, 4, &[(1, "d34")]),
            (4, 1, &[(1, "d41")]),
            (4, 3, &[(1, "d43")]),
            (4, 4, &[(1, "d44")]),
        ],
    ),
    (
        "A_{1,3}+A_{0,1}",
        4,
        &[
            (1, 1, &[(1, "d33")]),
            (1, 3, &[(-1, "d31")]),
            (2, 1, &[(1, "d21")]),
            (2, 2, &[(2, "d33")]),
            (2, 3, &[(1, "d23")]),
            (2, 4, &[(1, "d24")]),
            (3, 1, &[(1, "d31")]),
            (3, 3, &[(1, "d33")]),
            (4, 1, &[(1, "d41")]),
            (4, 3, &[(1, "d43")]),
            (4, 4, &[(1, "d44")]),
        ],
    ),
    (
        "A_{1,2}+A_{1,2}",
        4,
        &[
            (1, 1, &[(1, "d11")]),
            (2, 1, &[(1, "d21")]),
            (2, 2, &[(2, "d11")]),
            (2, 3, &[(1, "d23")]),
            (3, 3, &[(1, "d33")]),
            (4, 1, &[(1, "d41")]),
            (4, 3, &[(1, "d43")]),
            (4, 4, &[(2, "d33")]),
        ],
    ),
    (
        "A_{1,4}",
        4,
        &[
            (1, 1, &[(1, "d44"), (-1, "d33")]),
            (2, 1, &[(1, "d21")]),
            (2, 2, &[(2, "d44"), (-2, "d33")]),
            (2, 3, &[(1, "d23")]),
            (3, 1, &[(1, "d31")]),
            (3, 3, &[(1, "d33")]),
            (4, 1, &[(1, "d41")]),
            (4, 2, &[(2, "d31")]),
            (4, 3, &[(1, "d43")]),
            (4, 4, &[(1, "d44")]),
        ],
    ),
    (
        "A_{2,4}",
        4,
        &[
            (1, 1, &[(1, "d11")]),
            (1, 3, &[(-1, "d41")]),
            (1, 4, &[(-1, "d31")]),
            (2, 1, &[(1, "d21")]),
            (2, 2, &[(2, "d11")]),
            (2, 3, &[(1, "d23")]),
            (2, 4, &[(1, "d24")]),
            (3, 1, &[(1, "d31")]),
            (3, 3, &[(2, "d11"), (-1, "d44")]),
            (4, 1, &[(1, "d41")]),
            (4, 4, &[(1, "d44")]),
        ],
    ),
];

/// The reference derivation family of a non-abelian catalog entry, over
/// the rationals. Parameter order follows first appearance in a row-major
/// scan of the published grid.
pub fn reference_family(name: &str) -> Result<ParametricFamily, DerError> {
    let Some((_, n, table)) = REFERENCE_FAMILIES.iter().find(|(f, _, _)| *f == name) else {
        return if catalog::catalog_entry(name).is_some() {
            Err(DerError::NoReferenceFamily(String::from(name)))
        } else {
            Err(DerError::UnknownEntry(String::from(name)))
        };
    };
    let field = FieldDescriptor::Rationals;
    let mut parameters: Vec<String> = Vec::new();
    let mut entries = vec![LinearForm::zero(); n * n];
    for &(r, s, terms) in *table {
        let form = &mut entries[(r - 1) * n + (s - 1)];
        for &(coeff, param) in terms {
            let index = match parameters.iter().position(|p| p == param) {
                Some(i) => i,
                None => {
                    parameters.push(String::from(param));
                    parameters.len() - 1
                }
            };
            form.add_term(index, Scalar::from_integer(coeff, field));
        }
    }
    Ok(ParametricFamily {
        n: *n,
        field,
        parameters,
        entries,
    })
}

/// Which side of a failed verification holds the offending matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscrepancySide {
    /// A computed basis derivation missing from the reference family.
    ComputedOnly,
    /// A reference family matrix that is not a derivation.
    ReferenceOnly,
}

/// The outcome of comparing a computed derivation space against a
/// reference family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub catalog_name: String,
    /// Dimension of the computed derivation space.
    pub computed_dim: usize,
    /// Dimension claimed by the reference family (its parameter count).
    pub reference_dim: usize,
    /// Whether the two spaces are equal as subspaces.
    pub spaces_equal: bool,
    /// For a failed comparison: a matrix lying in one side only.
    pub discrepancy: Option<(DiscrepancySide, ExactMatrix)>,
}

/// Compares a computed derivation space against a parametric family,
/// exactly. On mismatch the report carries a concrete witness: a family
/// matrix that is not a derivation, or a derivation the family misses.
pub fn verify_spaces(
    name: &str,
    space: &DerivationSpace,
    family: &ParametricFamily,
) -> Result<VerificationReport, DerError> {
    if family.n() != space.algebra_dim() {
        return Err(DerError::ShapeMismatch {
            expected: (space.algebra_dim(), space.algebra_dim()),
            got: (family.n(), family.n()),
        });
    }
    if family.field() != space.field() {
        return Err(DerError::FieldMismatch);
    }
    let computed: Vec<Vec<Scalar>> = space
        .basis()
        .iter()
        .map(ExactMatrix::flatten_column_major)
        .collect();
    let family_matrices = family.basis();
    let reference: Vec<Vec<Scalar>> = family_matrices
        .iter()
        .map(ExactMatrix::flatten_column_major)
        .collect();
    let spaces_equal = matrix::subspace_equal(&computed, &reference)?;
    let mut discrepancy = None;
    if !spaces_equal {
        for (index, v) in reference.iter().enumerate() {
            if !matrix::span_contains(&computed, v)? {
                discrepancy = Some((
                    DiscrepancySide::ReferenceOnly,
                    family_matrices[index].clone(),
                ));
                break;
            }
        }
        if discrepancy.is_none() {
            for (index, v) in computed.iter().enumerate() {
                if !matrix::span_contains(&reference, v)? {
                    discrepancy =
                        Some((DiscrepancySide::ComputedOnly, space.basis()[index].clone()));
                    break;
                }
            }
        }
    }
    Ok(VerificationReport {
        catalog_name: String::from(name),
        computed_dim: space.dim(),
        reference_dim: family.dim(),
        spaces_equal,
        discrepancy,
    })
}

/// Verifies one non-abelian catalog entry: computes its derivation space
/// and compares it against the reference family.
pub fn verify_entry(name: &str) -> Result<VerificationReport, DerError> {
    let algebra =
        catalog::catalog_entry(name).ok_or_else(|| DerError::UnknownEntry(String::from(name)))?;
    let family = reference_family(name)?;
    let space = derivation_basis(&algebra);
    verify_spaces(name, &space, &family)
}

/// Verifies every non-abelian catalog entry, in catalog order.
pub fn verify_catalog() -> Vec<VerificationReport> {
    catalog::NON_ABELIAN_NAMES
        .iter()
        .map(|name| verify_entry(name).expect("catalog names have reference families"))
        .collect()
}
