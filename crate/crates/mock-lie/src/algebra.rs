//! Commutative algebras presented by structure constants, with Mock-Lie
//! axiom checking and structural invariants.
//!
//! An algebra of dimension `n` is determined by the coefficients
//! `c[i][j][k]` of the basis products `e_i * e_j = sum_k c[i][j][k] e_k`.
//! Basis indices are 1-based everywhere, matching the usual notation
//! `e_1, ..., e_n`; zero coefficients are never stored.

use core::fmt;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::{ExactMatrix, LinAlgError};

/// Errors from algebra construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// A basis index outside `1..=dim`.
    IndexOutOfRange { index: usize, dim: usize },
    /// A scalar or operand from the wrong field.
    FieldMismatch,
    /// A coordinate vector of the wrong length.
    VectorLength { expected: usize, got: usize },
    /// Algebras must carry a nonempty name.
    EmptyName,
    /// A coefficient with no image in the requested prime field.
    NonIntegerCoefficient(Scalar),
    /// A base-change matrix that is not invertible.
    SingularBaseChange,
    /// A base-change matrix of the wrong shape.
    BaseChangeShape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::IndexOutOfRange { index, dim } => {
                write!(f, "basis index e{index} out of range for dimension {dim}")
            }
            AlgebraError::FieldMismatch => write!(f, "operand from a different field"),
            AlgebraError::VectorLength { expected, got } => {
                write!(
                    f,
                    "expected a coordinate vector of length {expected}, got {got}"
                )
            }
            AlgebraError::EmptyName => write!(f, "algebra name must be nonempty"),
            AlgebraError::NonIntegerCoefficient(s) => {
                write!(f, "coefficient {s} has no prime-field image")
            }
            AlgebraError::SingularBaseChange => write!(f, "base-change matrix is singular"),
            AlgebraError::BaseChangeShape {
                expected,
                rows,
                cols,
            } => {
                write!(
                    f,
                    "base-change matrix must be {expected}x{expected}, got {rows}x{cols}"
                )
            }
        }
    }
}

impl core::error::Error for AlgebraError {}

/// The structure-constant tensor of a finite-dimensional algebra.
///
/// Sparse: only nonzero `c[i][j][k]` are stored, keyed by 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    field: FieldDescriptor,
    coeffs: BTreeMap<(usize, usize, usize), Scalar>,
}

impl StructureTensor {
    /// The zero (abelian) tensor of the given dimension.
    pub fn new(dim: usize, field: FieldDescriptor) -> StructureTensor {
        StructureTensor {
            dim,
            field,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    fn check_index(&self, index: usize) -> Result<(), AlgebraError> {
        if index == 0 || index > self.dim {
            Err(AlgebraError::IndexOutOfRange {
                index,
                dim: self.dim,
            })
        } else {
            Ok(())
        }
    }

    /// Sets `c[i][j][k]`; storing zero clears the entry.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) -> Result<(), AlgebraError> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.check_index(k)?;
        if value.field() != self.field {
            return Err(AlgebraError::FieldMismatch);
        }
        if value.is_zero() {
            self.coeffs.remove(&(i, j, k));
        } else {
            self.coeffs.insert((i, j, k), value);
        }
        Ok(())
    }

    /// Reads `c[i][j][k]`, zero when absent. Panics on out-of-range indices.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        assert!(
            i >= 1 && i <= self.dim && j >= 1 && j <= self.dim && k >= 1 && k <= self.dim,
            "tensor index out of range"
        );
        self.coeffs
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Iterates the stored (nonzero) coefficients in index order.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.coeffs.iter()
    }

    /// The coordinates of the basis product `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Result<Vec<Scalar>, AlgebraError> {
        self.check_index(i)?;
        self.check_index(j)?;
        let mut out = vec![Scalar::zero(self.field); self.dim];
        for k in 1..=self.dim {
            if let Some(c) = self.coeffs.get(&(i, j, k)) {
                out[k - 1] = c.clone();
            }
        }
        Ok(out)
    }

    /// The bilinear product of two coordinate vectors.
    pub fn bilinear(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        if x.len() != self.dim {
            return Err(AlgebraError::VectorLength {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(AlgebraError::VectorLength {
                expected: self.dim,
                got: y.len(),
            });
        }
        if x.iter().chain(y.iter()).any(|s| s.field() != self.field) {
            return Err(AlgebraError::FieldMismatch);
        }
        let mut out = vec![Scalar::zero(self.field); self.dim];
        for (&(i, j, k), c) in &self.coeffs {
            let (xi, yj) = (&x[i - 1], &y[j - 1]);
            if xi.is_zero() || yj.is_zero() {
                continue;
            }
            out[k - 1] = &out[k - 1] + &(&(xi * yj) * c);
        }
        Ok(out)
    }

    /// Whether `c[i][j][k] = c[j][i][k]` for all indices.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&(i, j, k), c)| self.coeff(j, i, k) == *c)
    }

    /// Re-expresses the tensor over another field.
    ///
    /// Supported: the identity conversion, and rationals to `GF(p)` when
    /// every coefficient is an integer.
    pub fn reinterpret(&self, field: FieldDescriptor) -> Result<StructureTensor, AlgebraError> {
        if field == self.field {
            return Ok(self.clone());
        }
        let (FieldDescriptor::Rationals, FieldDescriptor::PrimeField(p)) = (self.field, field)
        else {
            return Err(AlgebraError::FieldMismatch);
        };
        let mut out = StructureTensor::new(self.dim, field);
        for (&(i, j, k), c) in &self.coeffs {
            let image = c
                .to_prime_field(p)
                .map_err(|_| AlgebraError::NonIntegerCoefficient(c.clone()))?;
            out.set(i, j, k, image)?;
        }
        Ok(out)
    }

    /// The tensor in the basis `f_j = sum_i P[i][j] e_i`, where `P` is the
    /// (invertible) matrix whose columns are the new basis vectors.
    pub fn transport(&self, p: &ExactMatrix) -> Result<StructureTensor, AlgebraError> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(AlgebraError::BaseChangeShape {
                expected: self.dim,
                rows: p.rows(),
                cols: p.cols(),
            });
        }
        if p.field() != self.field {
            return Err(AlgebraError::FieldMismatch);
        }
        let p_inv = p.inverse().map_err(|err| match err {
            LinAlgError::Singular => AlgebraError::SingularBaseChange,
            _ => AlgebraError::FieldMismatch,
        })?;
        let mut out = StructureTensor::new(self.dim, self.field);
        for i in 1..=self.dim {
            let fi = p.column(i - 1);
            for j in 1..=self.dim {
                let fj = p.column(j - 1);
                let product = self.bilinear(&fi, &fj)?;
                let coords = p_inv
                    .apply(&product)
                    .map_err(|_| AlgebraError::FieldMismatch)?;
                for (k, c) in coords.into_iter().enumerate() {
                    out.set(i, j, k + 1, c)?;
                }
            }
        }
        Ok(out)
    }
}

/// A named algebra: a structure tensor plus a stable identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    tensor: StructureTensor,
}

/// The outcome of checking the Mock-Lie axioms, with the lexicographically
/// first witness for each failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// Whether `e_i e_j = e_j e_i` for all basis pairs.
    pub commutative: bool,
    /// First `(i, j, k)` with `c[i][j][k] != c[j][i][k]`, ordered by `(i, j, k)`.
    pub commutativity_witness: Option<(usize, usize, usize)>,
    /// Whether the Jacobi identity holds on all basis triples.
    pub jacobi: bool,
    /// First `(i, j, k, l)` where component `l` of the Jacobi cycle on
    /// `(e_i, e_j, e_k)` is nonzero, ordered by `(i, j, k, l)`.
    pub jacobi_witness: Option<(usize, usize, usize, usize)>,
}

impl AxiomReport {
    /// Whether both axioms hold.
    pub fn is_mock_lie(&self) -> bool {
        self.commutative && self.jacobi
    }
}

/// Dimension-type invariants of an algebra, preserved by isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantRecord {
    /// Dimension of the algebra itself.
    pub dim: usize,
    /// Dimension of the span of all basis products (the square of the algebra).
    pub dim_square: usize,
    /// Dimension of the annihilator `{x : x * a = 0 for all a}`.
    pub dim_annihilator: usize,
    /// Dimension of the derivation algebra.
    pub dim_der: usize,
}

impl Algebra {
    /// Wraps a tensor under a nonempty name.
    pub fn new(name: &str, tensor: StructureTensor) -> Result<Algebra, AlgebraError> {
        if name.is_empty() {
            return Err(AlgebraError::EmptyName);
        }
        Ok(Algebra {
            name: String::from(name),
            tensor,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim
    }

    pub fn field(&self) -> FieldDescriptor {
        self.tensor.field
    }

    pub fn tensor(&self) -> &StructureTensor {
        &self.tensor
    }

    /// The same algebra under a different name.
    pub fn renamed(self, name: &str) -> Result<Algebra, AlgebraError> {
        Algebra::new(name, self.tensor)
    }

    /// The same algebra with its tensor re-expressed over another field.
    pub fn reinterpret(&self, field: FieldDescriptor) -> Result<Algebra, AlgebraError> {
        Ok(Algebra {
            name: self.name.clone(),
            tensor: self.tensor.reinterpret(field)?,
        })
    }

    /// The product of two elements in coordinates.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.tensor.bilinear(x, y)
    }

    /// The Jacobi cycle `(e_i e_j) e_k + (e_k e_i) e_j + (e_j e_k) e_i`
    /// in coordinates; zero for all triples exactly when Jacobi holds.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Result<Vec<Scalar>, AlgebraError> {
        let t = &self.tensor;
        t.check_index(i)?;
        t.check_index(j)?;
        t.check_index(k)?;
        let n = t.dim;
        let mut out = vec![Scalar::zero(t.field); n];
        for l in 1..=n {
            let mut acc = Scalar::zero(t.field);
            for m in 1..=n {
                // (e_i e_j) e_k
                acc = &acc + &(&t.coeff(i, j, m) * &t.coeff(m, k, l));
                // (e_k e_i) e_j
                acc = &acc + &(&t.coeff(k, i, m) * &t.coeff(m, j, l));
                // (e_j e_k) e_i
                acc = &acc + &(&t.coeff(j, k, m) * &t.coeff(m, i, l));
            }
            out[l - 1] = acc;
        }
        Ok(out)
    }

    /// Checks commutativity and the Jacobi identity on all basis tuples,
    /// recording the lexicographically first witness of each failure.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let mut commutativity_witness = None;
        'comm: for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if self.tensor.coeff(i, j, k) != self.tensor.coeff(j, i, k) {
                        commutativity_witness = Some((i, j, k));
                        break 'comm;
                    }
                }
            }
        }
        let mut jacobi_witness = None;
        'jac: for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    let cycle = self.jacobiator(i, j, k).expect("indices are in range");
                    for (l0, value) in cycle.iter().enumerate() {
                        if !value.is_zero() {
                            jacobi_witness = Some((i, j, k, l0 + 1));
                            break 'jac;
                        }
                    }
                }
            }
        }
        AxiomReport {
            commutative: commutativity_witness.is_none(),
            commutativity_witness,
            jacobi: jacobi_witness.is_none(),
            jacobi_witness,
        }
    }

    /// The direct sum, with `other`'s basis shifted past `self`'s and the
    /// name formed as `self+other`.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra, AlgebraError> {
        if self.field() != other.field() {
            return Err(AlgebraError::FieldMismatch);
        }
        let offset = self.dim();
        let mut tensor = StructureTensor::new(offset + other.dim(), self.field());
        for (&(i, j, k), c) in self.tensor.iter() {
            tensor.set(i, j, k, c.clone())?;
        }
        for (&(i, j, k), c) in other.tensor.iter() {
            tensor.set(i + offset, j + offset, k + offset, c.clone())?;
        }
        let mut name = self.name.clone();
        name.push('+');
        name.push_str(&other.name);
        Algebra::new(&name, tensor)
    }

    /// The same product structure on a new basis `f_j = sum_i P[i][j] e_i`.
    pub fn transport(&self, p: &ExactMatrix) -> Result<Algebra, AlgebraError> {
        Ok(Algebra {
            name: self.name.clone(),
            tensor: self.tensor.transport(p)?,
        })
    }

    /// The dimension of the span of all basis products.
    pub fn square_dim(&self) -> usize {
        let n = self.dim();
        let mut products = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                products.push(self.tensor.basis_product(i, j).expect("indices in range"));
            }
        }
        crate::matrix::canonical_span(&products)
            .expect("uniform products")
            .len()
    }

    /// The dimension of the annihilator `{x : x * e_i = 0 for all i}`.
    pub fn annihilator_dim(&self) -> usize {
        let n = self.dim();
        if n == 0 {
            return 0;
        }
        // rows indexed by (i, k): coefficient of x_j in component k of x * e_i
        let mut m = ExactMatrix::zeros(n * n, n, self.field());
        for i in 1..=n {
            for k in 1..=n {
                for j in 1..=n {
                    let c = self.tensor.coeff(j, i, k);
                    if !c.is_zero() {
                        m.set((i - 1) * n + (k - 1), j - 1, c).expect("same field");
                    }
                }
            }
        }
        m.kernel_basis().len()
    }

    /// The isomorphism-invariant fingerprint of the algebra.
    pub fn invariants(&self) -> InvariantRecord {
        InvariantRecord {
            dim: self.dim(),
            dim_square: self.square_dim(),
            dim_annihilator: self.annihilator_dim(),
            dim_der: crate::der::derivation_basis(self).dim(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    fn qv(entries: &[i64]) -> Vec<Scalar> {
        entries
            .iter()
            .map(|&v| Scalar::from_integer(v, Q))
            .collect()
    }

    /// e1 * e1 = e2 in dimension 2.
    fn squaring_algebra() -> Algebra {
        let mut t = StructureTensor::new(2, Q);
        t.set(1, 1, 2, Scalar::one(Q)).unwrap();
        Algebra::new("A_{1,2}", t).unwrap()
    }

    #[test]
    fn basis_products_read_back() {
        let a = squaring_algebra();
        assert_eq!(a.multiply(&qv(&[1, 0]), &qv(&[1, 0])).unwrap(), qv(&[0, 1]));
        assert_eq!(a.multiply(&qv(&[0, 1]), &qv(&[0, 1])).unwrap(), qv(&[0, 0]));
    }

    #[test]
    fn multiplication_is_bilinear_on_a_worked_example() {
        // (e1 + e3)^2 in the 4-dimensional algebra with e1*e1 = e2,
        // e1*e3 = e3*e1 = e4: expanding the four cross terms by hand gives
        // e2 + e4 + e4 + 0 = e2 + 2 e4.
        let a = catalog::catalog_entry("A_{1,4}").unwrap();
        let x = qv(&[1, 0, 1, 0]);
        let expected = {
            let e1 = qv(&[1, 0, 0, 0]);
            let e3 = qv(&[0, 0, 1, 0]);
            let mut acc = vec![Scalar::zero(Q); 4];
            for left in [&e1, &e3] {
                for right in [&e1, &e3] {
                    let term = a.multiply(left, right).unwrap();
                    for (slot, t) in acc.iter_mut().zip(term.iter()) {
                        *slot = &*slot + t;
                    }
                }
            }
            acc
        };
        assert_eq!(expected, qv(&[0, 1, 0, 2]));
        assert_eq!(a.multiply(&x, &x).unwrap(), expected);
    }

    #[test]
    fn abelian_products_vanish() {
        let a = Algebra::new("zero", StructureTensor::new(3, Q)).unwrap();
        assert_eq!(
            a.multiply(&qv(&[1, 2, 3]), &qv(&[4, 5, 6])).unwrap(),
            qv(&[0, 0, 0])
        );
        assert_eq!(a.jacobiator(1, 2, 3).unwrap(), qv(&[0, 0, 0]));
    }

    #[test]
    fn jacobiator_vanishes_on_a_nilpotent_square() {
        // In A_{1,4}, (e1 e1) e3 + (e3 e1) e1 + (e1 e3) e1 =
        // e2 e3 + e4 e1 + e4 e1 = 0 term by term.
        let a = catalog::catalog_entry("A_{1,4}").unwrap();
        assert_eq!(a.jacobiator(1, 1, 3).unwrap(), qv(&[0, 0, 0, 0]));
    }

    #[test]
    fn idempotent_breaks_jacobi_with_first_witness() {
        // e1 * e1 = e1: the Jacobi cycle on (e1, e1, e1) is 3 e1.
        let mut t = StructureTensor::new(1, Q);
        t.set(1, 1, 1, Scalar::one(Q)).unwrap();
        let a = Algebra::new("idempotent", t).unwrap();
        assert_eq!(a.jacobiator(1, 1, 1).unwrap(), qv(&[3]));
        let report = a.check_axioms();
        assert!(report.commutative);
        assert!(!report.jacobi);
        assert_eq!(report.jacobi_witness, Some((1, 1, 1, 1)));
        assert!(!report.is_mock_lie());
    }

    #[test]
    fn noncommutative_product_yields_first_witness() {
        // e1 * e2 = e1 with e2 * e1 = 0.
        let mut t = StructureTensor::new(2, Q);
        t.set(1, 2, 1, Scalar::one(Q)).unwrap();
        let a = Algebra::new("one-sided", t).unwrap();
        let report = a.check_axioms();
        assert!(!report.commutative);
        assert_eq!(report.commutativity_witness, Some((1, 2, 1)));
    }

    #[test]
    fn axioms_hold_for_the_squaring_algebra() {
        let report = squaring_algebra().check_axioms();
        assert!(report.is_mock_lie());
        assert_eq!(report.commutativity_witness, None);
        assert_eq!(report.jacobi_witness, None);
    }

    #[test]
    fn direct_sum_shifts_the_second_summand() {
        let a = squaring_algebra();
        let sum = a.direct_sum(&a).unwrap();
        assert_eq!(sum.name(), "A_{1,2}+A_{1,2}");
        assert_eq!(sum.dim(), 4);
        assert_eq!(sum.tensor().coeff(1, 1, 2), Scalar::one(Q));
        assert_eq!(sum.tensor().coeff(3, 3, 4), Scalar::one(Q));
        assert!(sum.tensor().coeff(3, 3, 2).is_zero());
        // cross products vanish
        assert!(sum.tensor().coeff(1, 3, 2).is_zero());
    }

    #[test]
    fn direct_sum_with_zero_dimension_is_identity() {
        let a = squaring_algebra();
        let trivial = Algebra::new("0", StructureTensor::new(0, Q)).unwrap();
        let sum = a.direct_sum(&trivial).unwrap();
        assert_eq!(sum.dim(), 2);
        assert_eq!(sum.tensor(), a.tensor());
    }

    #[test]
    fn direct_sum_is_associative_on_tensors() {
        let a = squaring_algebra();
        let b = Algebra::new("B", StructureTensor::new(1, Q)).unwrap();
        let c = catalog::catalog_entry("A_{1,3}").unwrap();
        let left = a.direct_sum(&b).unwrap().direct_sum(&c).unwrap();
        let right = a.direct_sum(&b.direct_sum(&c).unwrap()).unwrap();
        assert_eq!(left.tensor(), right.tensor());
    }

    #[test]
    fn square_and_annihilator_dimensions() {
        let a = squaring_algebra();
        assert_eq!(a.square_dim(), 1);
        assert_eq!(a.annihilator_dim(), 1); // only e2 kills everything
        let zero3 = Algebra::new("zero", StructureTensor::new(3, Q)).unwrap();
        assert_eq!(zero3.square_dim(), 0);
        assert_eq!(zero3.annihilator_dim(), 3);
        let a14 = catalog::catalog_entry("A_{1,4}").unwrap();
        assert_eq!(a14.square_dim(), 2); // span of e2 and e4
        assert_eq!(a14.annihilator_dim(), 2);
    }

    #[test]
    fn reinterpretation_over_a_prime_field() {
        let gf5 = FieldDescriptor::prime_field(5).unwrap();
        let a = squaring_algebra().reinterpret(gf5).unwrap();
        assert_eq!(a.field(), gf5);
        assert_eq!(a.tensor().coeff(1, 1, 2), Scalar::one(gf5));
        // a tensor with a fractional coefficient has no image
        let mut t = StructureTensor::new(1, Q);
        t.set(1, 1, 1, Scalar::rational(1, 2).unwrap()).unwrap();
        let half = Algebra::new("half", t).unwrap();
        assert!(matches!(
            half.reinterpret(gf5),
            Err(AlgebraError::NonIntegerCoefficient(_))
        ));
    }

    #[test]
    fn transport_by_a_basis_swap() {
        // Swapping e1 and e2 moves the product e1*e1 = e2 to f2*f2 = f1.
        let a = squaring_algebra();
        let swap = ExactMatrix::from_integers(2, 2, Q, &[0, 1, 1, 0]).unwrap();
        let b = a.transport(&swap).unwrap();
        assert!(b.tensor().coeff(1, 1, 2).is_zero());
        assert_eq!(b.tensor().coeff(2, 2, 1), Scalar::one(Q));
        // transporting by the identity is the identity
        let id = ExactMatrix::identity(2, Q);
        assert_eq!(a.transport(&id).unwrap().tensor(), a.tensor());
    }

    #[test]
    fn transport_rejects_bad_matrices() {
        let a = squaring_algebra();
        let singular = ExactMatrix::from_integers(2, 2, Q, &[1, 1, 1, 1]).unwrap();
        assert_eq!(
            a.transport(&singular).unwrap_err(),
            AlgebraError::SingularBaseChange
        );
        let wrong = ExactMatrix::identity(3, Q);
        assert!(matches!(
            a.transport(&wrong),
            Err(AlgebraError::BaseChangeShape { expected: 2, .. })
        ));
    }

    #[test]
    fn invalid_indices_are_rejected() {
        let mut t = StructureTensor::new(2, Q);
        assert_eq!(
            t.set(1, 3, 1, Scalar::one(Q)),
            Err(AlgebraError::IndexOutOfRange { index: 3, dim: 2 })
        );
        assert_eq!(
            t.set(0, 1, 1, Scalar::one(Q)),
            Err(AlgebraError::IndexOutOfRange { index: 0, dim: 2 })
        );
        let a = squaring_algebra();
        assert!(matches!(
            a.jacobiator(1, 2, 5),
            Err(AlgebraError::IndexOutOfRange { index: 5, dim: 2 })
        ));
        assert!(matches!(
            a.multiply(&qv(&[1]), &qv(&[1, 0])),
            Err(AlgebraError::VectorLength {
                expected: 2,
                got: 1
            })
        ));
    }
}
