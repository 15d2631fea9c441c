//! Exact algebra for the torus-equivariant cohomology presentation of the
//! spaces of spanning line configurations.

pub mod checks;
pub mod combin;
pub mod error;
pub mod gkm;
pub mod groebner;
pub mod linalg;
pub mod loci;
pub mod poly;
pub mod presentations;
pub mod schubert;
pub mod symfun;
pub mod univariate;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
