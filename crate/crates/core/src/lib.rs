//! Exact computations with Σ₃-associative algebras and their dual cogebras
//! over ℚ.
//!
//! Indices are zero-based throughout the API; the JSON file format and the
//! command line use one-based indices.

pub mod algebra;
pub mod catalog;
pub mod cogebra;
pub mod duality;
pub mod error;
pub mod expr;
pub mod format;
pub mod linalg;
pub mod products;
pub mod rational;
pub mod sym3;
pub mod trilinear;

pub use algebra::{classify, Algebra, ClassificationReport};
pub use cogebra::{classify_cogebra, BangReading, Cogebra, CogebraReport};
pub use error::{Error, Result};
pub use format::Document;
pub use linalg::{LinearMap, Subspace, Vector};
pub use rational::Rational;
pub use sym3::{GroupAlgElem, Perm3, SubgroupId};
