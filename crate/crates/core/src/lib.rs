//! Exact computations with anticommutative antiassociative (Acaa) algebras:
//! identity checks, free algebras, small classifications, representations,
//! low-degree cohomology and the generating series of the Acaa operad.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod enumerate;
pub mod error;
pub mod free;
pub mod linalg;
pub mod operad;
pub mod repr;
pub mod sampling;
pub mod scalar;
pub mod series;

pub use algebra::{Algebra, Element, Fingerprint, Symmetry, Verdict, Witness};
pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use scalar::{FieldSpec, Prime, Scalar};
pub use series::TruncatedSeries;
