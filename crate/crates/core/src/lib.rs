//! Exact computations with finite-dimensional bound quiver algebras: normal forms,
//! projective modules, Cartan and Gabriel data, cellular data verification and
//! necessary conditions for cellularity.

pub mod algebra;
pub mod catalog;
pub mod cellular;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod module;
pub mod obstruction;
pub mod presentation;
pub mod quiver;
pub mod scalar;

pub use error::{Error, Result};
