//! The built-in catalog: every Mock-Lie algebra of dimension at most four,
//! over the rationals, under its classification name.
//!
//! Names are stable public identifiers (`"A_{1,2}+A_{0,1}"` and friends);
//! entries appear in dimension order. The five indecomposable non-abelian
//! tensors are written out explicitly, composites are assembled as direct
//! sums of those.

use alloc::vec::Vec;

use crate::algebra::{Algebra, StructureTensor};
use crate::field::{FieldDescriptor, Scalar};

/// The catalog names, in catalog order.
pub const CATALOG_NAMES: [&str; 12] = [
    "A_{0,1}",
    "A_{0,1}^2",
    "A_{1,2}",
    "A_{0,1}^3",
    "A_{1,2}+A_{0,1}",
    "A_{1,3}",
    "A_{0,1}^4",
    "A_{1,2}+A_{0,1}^2",
    "A_{1,3}+A_{0,1}",
    "A_{1,2}+A_{1,2}",
    "A_{1,4}",
    "A_{2,4}",
];

/// The non-abelian catalog names, in catalog order. Exactly these entries
/// have a nonzero product and a reference derivation family.
pub const NON_ABELIAN_NAMES: [&str; 8] = [
    "A_{1,2}",
    "A_{1,2}+A_{0,1}",
    "A_{1,3}",
    "A_{1,2}+A_{0,1}^2",
    "A_{1,3}+A_{0,1}",
    "A_{1,2}+A_{1,2}",
    "A_{1,4}",
    "A_{2,4}",
];

const Q: FieldDescriptor = FieldDescriptor::Rationals;

fn tensor(dim: usize, products: &[(usize, usize, usize, i64)]) -> StructureTensor {
    let mut t = StructureTensor::new(dim, Q);
    for &(i, j, k, c) in products {
        t.set(i, j, k, Scalar::from_integer(c, Q))
            .expect("catalog indices are in range");
    }
    t
}

fn named(name: &str, t: StructureTensor) -> Algebra {
    Algebra::new(name, t).expect("catalog names are nonempty")
}

/// The one-dimensional abelian algebra.
fn a01() -> Algebra {
    named("A_{0,1}", tensor(1, &[]))
}

/// e1 e1 = e2.
fn a12() -> Algebra {
    named("A_{1,2}", tensor(2, &[(1, 1, 2, 1)]))
}

/// e1 e1 = e2, e3 e3 = e2.
fn a13() -> Algebra {
    named("A_{1,3}", tensor(3, &[(1, 1, 2, 1), (3, 3, 2, 1)]))
}

/// e1 e1 = e2, e1 e3 = e3 e1 = e4.
fn a14() -> Algebra {
    named(
        "A_{1,4}",
        tensor(4, &[(1, 1, 2, 1), (1, 3, 4, 1), (3, 1, 4, 1)]),
    )
}

/// e1 e1 = e2, e3 e4 = e4 e3 = e2.
fn a24() -> Algebra {
    named(
        "A_{2,4}",
        tensor(4, &[(1, 1, 2, 1), (3, 4, 2, 1), (4, 3, 2, 1)]),
    )
}

fn sum(a: Algebra, b: Algebra) -> Algebra {
    a.direct_sum(&b).expect("catalog summands share a field")
}

/// Looks up one catalog entry by name.
pub fn catalog_entry(name: &str) -> Option<Algebra> {
    let algebra = match name {
        "A_{0,1}" => a01(),
        "A_{0,1}^2" => sum(a01(), a01()).renamed("A_{0,1}^2").unwrap(),
        "A_{1,2}" => a12(),
        "A_{0,1}^3" => sum(sum(a01(), a01()), a01()).renamed("A_{0,1}^3").unwrap(),
        "A_{1,2}+A_{0,1}" => sum(a12(), a01()),
        "A_{1,3}" => a13(),
        "A_{0,1}^4" => sum(sum(sum(a01(), a01()), a01()), a01())
            .renamed("A_{0,1}^4")
            .unwrap(),
        "A_{1,2}+A_{0,1}^2" => sum(sum(a12(), a01()), a01())
            .renamed("A_{1,2}+A_{0,1}^2")
            .unwrap(),
        "A_{1,3}+A_{0,1}" => sum(a13(), a01()),
        "A_{1,2}+A_{1,2}" => sum(a12(), a12()),
        "A_{1,4}" => a14(),
        "A_{2,4}" => a24(),
        _ => return None,
    };
    Some(algebra)
}

/// All twelve catalog entries, in catalog order.
pub fn catalog() -> Vec<Algebra> {
    CATALOG_NAMES
        .iter()
        .map(|name| catalog_entry(name).expect("names enumerate the catalog"))
        .collect()
}
