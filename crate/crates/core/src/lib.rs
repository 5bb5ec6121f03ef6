//! Finite-dimensional Hom-Hopf algebras by structure constants, their
//! (co)modules, and exact verification of the associated constructions.

pub mod equivfun;
pub mod error;
pub mod exactlin;
pub mod fourangle;
pub mod heisenberg;
pub mod homcore;
pub mod repcat;
pub mod report;
pub mod ydmod;

pub use error::{Error, Result};
pub use report::{AxiomReport, Violation};
