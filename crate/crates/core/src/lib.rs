//! Exact chiral representations of spinors and Clifford algebras.
//!
//! Matrices over Q(i, √2) are the ground truth. On top of them sit the four
//! element species (scalars, column spinors, row spinors, multivectors), the
//! spinor/blade correspondence, rotors, conjugation and the sign tables.

pub mod bitcode;
pub mod blade;
pub mod brauer_weyl;
pub mod error;
pub mod expr;
pub mod matrix;
pub mod monomial;
pub mod rep;
pub mod scalar;
pub mod sga;
pub mod suites;
pub mod symmetry;
pub mod tables;

pub use num_complex::Complex64;

pub use bitcode::{Bit, Bitcode, HalfInt};
pub use blade::{BladeBasis, BladeDecomposition, BladeIndex, ChiralLabel, PlaneFactor};
pub use error::{Result, SgaError};
pub use matrix::{AnyMatrix, ExactMatrix, FloatMatrix, Matrix};
pub use rep::{GammaIndex, MetricChoice, OddMode, RepConfig, Representation, Signature};
pub use scalar::{Exact, Field, Scalar, Sign};
pub use sga::{Element, FormalSum, Sga, Species};
