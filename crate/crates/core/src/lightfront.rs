//! Lightfront quantization: DLCQ spectra, separable eigenstates, mass-shell
//! bookkeeping between frames, and the massless quantization in k-.
//!
//! The lightfront energy operator is already diagonal in k+, so no matrix is
//! ever built on this side; energies are spectral data E(k+) = m^2/(2 k+).

use crate::error::{Error, Result};
use crate::exactdiag::StateVector;
use crate::lattice::{make_lf_grid, ChainSpec, Frame, Mass, MomentumGrid};

/// One row of a massive lightfront spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LfSpectrumRow {
    pub k_plus: f64,
    pub energy: f64,
}

/// Massive DLCQ spectrum: rows sorted by k+ ascending, energies descending.
#[derive(Debug, Clone, PartialEq)]
pub struct LfSpectrum {
    rows: Vec<LfSpectrumRow>,
    mass: Mass,
}

impl LfSpectrum {
    pub fn rows(&self) -> &[LfSpectrumRow] {
        &self.rows
    }

    pub fn mass(&self) -> Mass {
        self.mass
    }
}

/// Lightfront single-particle energy E = m^2/(2 k+), for m > 0.
///
/// The massless case degenerates to zero for every k+ > 0 and is handled by
/// [`massless_lf_spectrum`] instead.
pub fn lf_energy(k_plus: f64, mass: Mass) -> Result<f64> {
    if !(k_plus > 0.0) {
        return Err(Error::OutOfDomain(format!("k+ must be positive, got {k_plus}")));
    }
    if mass.is_zero() {
        return Err(Error::OutOfDomain(
            "massless lightfront energies are quantized in k-; use the massless path".into(),
        ));
    }
    Ok(mass.value() * mass.value() / (2.0 * k_plus))
}

/// DLCQ spectrum over the lightfront grid of `spec`.
pub fn lf_spectrum(spec: &ChainSpec, mass: Mass) -> Result<LfSpectrum> {
    let grid = make_lf_grid(spec);
    let rows = grid
        .momenta()
        .iter()
        .map(|&k_plus| Ok(LfSpectrumRow { k_plus, energy: lf_energy(k_plus, mass)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(LfSpectrum { rows, mass })
}

/// A mass-shell point in both coordinate systems.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellPoint {
    pub k0: f64,
    pub k1: f64,
}

/// Converts a lightfront momentum to instant-form coordinates via the shell
/// relation k+ k- = m^2: k- = m^2/k+, k0 = (k+ + k-)/2, k1 = (k+ - k-)/2.
/// The output satisfies (k0)^2 - (k1)^2 = m^2.
pub fn mass_shell_check(k_plus: f64, mass: Mass) -> Result<ShellPoint> {
    if !(k_plus > 0.0) {
        return Err(Error::OutOfDomain(format!("k+ must be positive, got {k_plus}")));
    }
    let k_minus = mass.value() * mass.value() / k_plus;
    Ok(ShellPoint { k0: (k_plus + k_minus) / 2.0, k1: (k_plus - k_minus) / 2.0 })
}

/// Lightcone components (k+, k-) of a massless mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightconeComponents {
    pub k_plus: f64,
    pub k_minus: f64,
}

/// Massless case split: k1 > 0 gives (k+, k-) = (2 k1, 0); k1 < 0 gives
/// (0, -2 k1). The zero mode k1 = 0 belongs to neither branch and is
/// rejected with a distinct error.
pub fn massless_case_split(k1: f64) -> Result<LightconeComponents> {
    if k1 == 0.0 {
        return Err(Error::ZeroMode);
    }
    Ok(if k1 > 0.0 {
        LightconeComponents { k_plus: 2.0 * k1, k_minus: 0.0 }
    } else {
        LightconeComponents { k_plus: 0.0, k_minus: -2.0 * k1 }
    })
}

/// One row of the massless lightfront spectrum, keyed by k-.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MasslessLfRow {
    /// Lightfront energy label k- = -2 k1 of the source mode k1 < 0.
    pub k_minus: f64,
    /// Single-occupation energy 2 |k1|.
    pub energy: f64,
}

/// Massless lightfront spectrum table in k-.
#[derive(Debug, Clone, PartialEq)]
pub struct MasslessLfSpectrum {
    rows: Vec<MasslessLfRow>,
}

impl MasslessLfSpectrum {
    pub fn rows(&self) -> &[MasslessLfRow] {
        &self.rows
    }

    pub fn energies(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.energy).collect()
    }
}

/// Massless lightfront quantization consumes the negative-momentum half of an
/// instant-form grid: one row per k1 < 0 with k- = -2 k1 and energy 2 |k1|.
/// Eigenstates are single-occupation product states. A DLCQ grid is rejected:
/// at m = 0 the k+ grid carries no spectral information.
pub fn massless_lf_spectrum(grid: &MomentumGrid) -> Result<MasslessLfSpectrum> {
    if grid.frame() == Frame::LfDlcq {
        return Err(Error::FrameMismatch { expected: "instant-form", found: grid.frame().name() });
    }
    let mut rows: Vec<MasslessLfRow> = grid
        .momenta()
        .iter()
        .filter(|&&k1| k1 < 0.0)
        .map(|&k1| MasslessLfRow { k_minus: -2.0 * k1, energy: 2.0 * k1.abs() })
        .collect();
    rows.sort_by(|a, b| a.k_minus.partial_cmp(&b.k_minus).unwrap());
    Ok(MasslessLfSpectrum { rows })
}

/// A lightfront eigenstate: a computational-basis product state in lightfront
/// momentum-space occupation. Separability is structural; any bipartition
/// across momentum modes has zero entanglement entropy.
#[derive(Debug, Clone, PartialEq)]
pub struct LfEigenstate {
    occupied: Vec<f64>,
}

impl LfEigenstate {
    /// Single-particle eigenstate with one occupied mode.
    pub fn single(k_plus: f64) -> Result<Self> {
        if !(k_plus > 0.0) {
            return Err(Error::OutOfDomain(format!("k+ must be positive, got {k_plus}")));
        }
        Ok(Self { occupied: vec![k_plus] })
    }

    pub fn new(occupied: Vec<f64>) -> Result<Self> {
        let mut sorted = occupied;
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if sorted.iter().any(|&k| !(k > 0.0)) {
            return Err(Error::OutOfDomain("occupied modes must have k+ > 0".into()));
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::OutOfDomain("occupied modes must be distinct".into()));
        }
        Ok(Self { occupied: sorted })
    }

    pub fn occupied(&self) -> &[f64] {
        &self.occupied
    }

    /// Zero by construction: the state is an occupation-basis product.
    pub fn entanglement_entropy(&self) -> f64 {
        0.0
    }

    /// Dense occupation-basis vector over the modes of `grid`, for numerical
    /// spot checks against the oracle.
    pub fn to_state_vector(&self, grid: &MomentumGrid) -> Result<StateVector> {
        let momenta = grid.momenta();
        let n = momenta.len();
        let mut index = 0usize;
        for &k in &self.occupied {
            let pos = momenta
                .iter()
                .position(|&g| (g - k).abs() < 1e-12 * (1.0 + k.abs()))
                .ok_or_else(|| Error::OutOfDomain(format!("mode {k} not in grid")))?;
            index |= 1 << (n - 1 - pos);
        }
        StateVector::basis_state(n, index)
    }
}
