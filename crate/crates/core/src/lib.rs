//! Cellular models of ordered configuration spaces of `R^k` and `S^k` built
//! from the braid arrangement, with integral homology and
//! topological-complexity bookkeeping.

pub mod arrangement;
pub mod cli;
pub mod combinat;
pub mod complex;
pub mod cupcalc;
pub mod error;
pub mod homology;
pub mod oracle;
pub mod sphere;
pub mod tcformulas;

pub use error::{Error, Result};
