//! Exact-arithmetic polyhedral engine: fan calculus, toric desingularization,
//! π-desingularization of polyhedral cobordisms, decomposition into elementary
//! cobordisms, and machine-checkable factorization certificates built from
//! regular star subdivisions and their inverses.

pub mod cli;
pub mod cone;
pub mod error;
pub mod lattice;

pub use error::{Error, Result};
