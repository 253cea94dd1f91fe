//! Exact computations for Virasoro constraints on moduli of quiver representations.
//!
//! Everything is exact over the rationals. Symmetric functions live in the
//! power-sum basis; descendent algebras and lattice vertex algebras are sparse
//! polynomial maps keyed by canonical monomials.

pub mod checks;
pub mod descendent;
pub mod error;
pub mod grasscalc;
pub mod latticeva;
pub mod linalg;
pub mod partition;
pub mod quiver;
pub mod rational;
pub mod symfunc;

pub use error::{Error, Result};
pub use partition::Partition;
pub use rational::Rational;
pub use symfunc::SymFunc;
