//! Exact computation with finite-dimensional commutative algebras presented
//! by structure constants: Mock-Lie axiom checking, derivation algebras, and
//! canonical parametric presentations of derivation matrices.
//!
//! All arithmetic is exact, over the rationals or a prime field `GF(p)`.
//! The crate is `no_std` (it allocates, but never touches the OS); IO and
//! file formats live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod der;
pub mod field;
pub mod matrix;

pub use algebra::{Algebra, AxiomReport, InvariantRecord, StructureTensor};
pub use der::{DerivationSpace, ParametricFamily, VerificationReport};
pub use field::{FieldDescriptor, Scalar};
pub use matrix::ExactMatrix;
