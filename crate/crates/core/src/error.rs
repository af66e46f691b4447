//! Error type shared across the crate.

use std::fmt;

/// Errors produced by chain validation, grid/frame mismatches, and the
/// dense-oracle guards.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Chain parameters violate an invariant (odd or too-small N, a <= 0, ...).
    InvalidChain(String),
    /// Requested system size exceeds the dense-matrix cap.
    SizeCap { n_sites: usize, cap: usize },
    /// Qubit count exceeds the exhaustive Pauli-enumeration guard.
    QubitCap { qubits: usize, cap: usize },
    /// A Hamiltonian argument is not Hermitian (max |H - H^dag| entry).
    NonHermitian(f64),
    /// Operator/state dimensions do not match.
    DimensionMismatch { expected: usize, found: usize },
    /// An operation received a grid from the wrong frame.
    FrameMismatch { expected: &'static str, found: &'static str },
    /// A paired-momentum operation received a grid with self-conjugate modes.
    UnpairedModes(Vec<f64>),
    /// A self-conjugate momentum (k = 0 or ka = pi) where a paired block is required.
    SelfConjugateMomentum(f64),
    /// Gapless point k = 0, coupling = 1: the Bogoliubov angle is undefined.
    DegenerateBlock,
    /// The k^1 = 0 zero mode, excluded from the massless lightcone case split.
    ZeroMode,
    /// Parameter outside the domain an operation is defined on.
    OutOfDomain(String),
    /// Site or mode index out of range.
    IndexOutOfRange { index: usize, len: usize },
    /// A Pauli expectation value came out with a non-negligible imaginary part,
    /// which signals a state/operator convention bug.
    ImaginaryResidue(f64),
    /// A vector that must be normalized is not.
    NotNormalized(f64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidChain(msg) => write!(f, "invalid chain spec: {msg}"),
            Error::SizeCap { n_sites, cap } => {
                write!(f, "N = {n_sites} exceeds the dense-oracle cap N <= {cap}")
            }
            Error::QubitCap { qubits, cap } => {
                write!(f, "{qubits} qubits exceeds the 4^n enumeration guard n <= {cap}")
            }
            Error::NonHermitian(dev) => {
                write!(f, "matrix is not Hermitian (max deviation {dev:.3e})")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::FrameMismatch { expected, found } => {
                write!(f, "frame mismatch: expected {expected} grid, found {found}")
            }
            Error::UnpairedModes(ks) => {
                write!(f, "grid contains unpaired (self-conjugate) momenta {ks:?}")
            }
            Error::SelfConjugateMomentum(k) => {
                write!(f, "momentum k = {k} is self-conjugate and forms no paired block")
            }
            Error::DegenerateBlock => {
                write!(f, "gapless point (k = 0, coupling = 1): Bogoliubov angle undefined")
            }
            Error::ZeroMode => write!(f, "k^1 = 0 zero mode is excluded from the case split"),
            Error::OutOfDomain(msg) => write!(f, "out of domain: {msg}"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for length {len}")
            }
            Error::ImaginaryResidue(im) => {
                write!(f, "Pauli expectation has imaginary residue {im:.3e}")
            }
            Error::NotNormalized(norm) => {
                write!(f, "state vector norm {norm} deviates from 1")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
