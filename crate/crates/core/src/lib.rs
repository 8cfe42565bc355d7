//! Numerical laboratory for mean-field Langevin particle systems.
//!
//! The crate simulates ensembles of pairwise-interacting particles on the
//! torus, estimates connected (Ursell) correlation functions and cumulants
//! from those ensembles, solves the d=1 kinetic mean-field equation and its
//! two-particle correction, and packages the scaling / fluctuation
//! experiments behind a reproducible CLI.

pub mod bogolyubov;
pub mod error;
pub mod experiments;
pub mod hierarchy;
pub mod kernels;
pub mod kinetic_pde;
pub mod observables;
pub mod particles;
pub mod partitions;
pub mod rng;
pub mod snapshot;

pub use error::CoreError;
