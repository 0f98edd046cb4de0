//! Exact computations for the finite W-algebras W_p(N) built on gl(Np) with
//! N copies of the principal sl(2), and their identification with truncated
//! (Poisson) Yangians Y_p(N).

pub mod center_cohomology;
pub mod cli;
pub mod error;
pub mod exact_algebra;
pub mod glnp_basis;
pub mod hamiltonian_reduction;
pub mod poisson_yangian;
pub mod representations;
pub mod suites;
pub mod walgebra_bases;

pub use error::{Error, Result};
