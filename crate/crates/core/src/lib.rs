//! Instant-form and lightfront quantizations of the transverse-field Ising
//! chain.
//!
//! The crate computes and cross-validates, at desk scale:
//!
//! - discrete momentum grids and dispersion relations ([`lattice`]),
//! - dense spin/fermion Hamiltonians, full diagonalization, Pauli-string
//!   expectations, and exhaustive stabilizer Renyi entropy ([`exactdiag`]),
//! - the instant-form momentum-space engine: Bogoliubov blocks, BCS-type
//!   ground states, and the massless critical limit ([`bogoliubov`]),
//! - the lightfront side: DLCQ spectra, separable eigenstates, mass-shell
//!   bookkeeping, and the massless quantization in k- ([`lightfront`]),
//! - quantum-resource quantifiers: pairwise momentum-space entanglement and
//!   the stabilizer Renyi entropy M2 ([`resources`]).
//!
//! Every closed-form result has a brute-force check against the dense oracle.

pub mod bogoliubov;
pub mod error;
pub mod exactdiag;
pub mod lattice;
pub mod lightfront;
pub mod resources;

pub use error::{Error, Result};
pub use lattice::{ChainSpec, Frame, IfSector, Mass, MomentumGrid};
