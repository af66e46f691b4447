//! Instant-form momentum-space engine: paired-block decomposition, Bogoliubov
//! angles and spectra (lattice and continuum flavors), the BCS-type ground
//! state, and the massless critical limit.
//!
//! Every +-k pair of a grid forms a 4-dimensional block. Block states are
//! written in the ordered basis {|00>, |01>, |10>, |11>} labelled
//! (n_k, n_{-k}), with Fock states created in the qubit order (-k first):
//! |11> = c+_{-k} c+_k |vac>. With that convention the block Hamiltonian
//! 2(lambda - cos ka)(n_k + n_{-k} - 1) - 2i sin(ka)(c+_k c+_{-k} + c_k c_{-k})
//! has ground eigenvector (cos theta, 0, 0, -i sin theta).

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::exactdiag::{DenseOperator, StateVector};
use crate::lattice::{continuum_dispersion, lattice_dispersion, Mass, MomentumGrid};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Which dispersion a block was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockFlavor {
    Lattice,
    Continuum,
}

/// Per-|k| data: momentum, Bogoliubov angle, energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BogoliubovBlock {
    pub k: f64,
    pub angle: f64,
    pub omega: f64,
    pub flavor: BlockFlavor,
}

impl BogoliubovBlock {
    pub fn lattice(k: f64, coupling: f64, spacing: f64) -> Result<Self> {
        Ok(Self {
            k,
            angle: bogoliubov_angle_lattice(k, coupling, spacing)?,
            omega: lattice_dispersion(k, coupling, spacing),
            flavor: BlockFlavor::Lattice,
        })
    }

    pub fn continuum(k: f64, mass: Mass) -> Result<Self> {
        Ok(Self {
            k,
            angle: bogoliubov_angle_continuum(k, mass)?,
            omega: continuum_dispersion(k, mass),
            flavor: BlockFlavor::Continuum,
        })
    }
}

/// Lattice Bogoliubov angle: 2 theta = atan2(sin ka, lambda - cos ka) in
/// [0, pi), which makes the diagonal coefficient of the rotated block +w_k.
///
/// The gapless point (k = 0 mod 2pi/a at lambda = 1) leaves both atan2
/// arguments zero and is rejected.
pub fn bogoliubov_angle_lattice(k: f64, coupling: f64, spacing: f64) -> Result<f64> {
    let ka = k * spacing;
    let sin = ka.sin();
    let cosdiff = coupling - ka.cos();
    if sin.abs() < 1e-14 && cosdiff.abs() < 1e-14 {
        return Err(Error::DegenerateBlock);
    }
    let two_theta = sin.atan2(cosdiff);
    // atan2 lands in (-pi, pi]; for ka in (0, pi) the sine is positive so
    // two_theta is already in [0, pi).
    Ok(two_theta / 2.0)
}

/// Continuum Bogoliubov angle: phi = atan2(k, m)/2 in (0, pi/4]; exactly
/// pi/4 at m = 0.
pub fn bogoliubov_angle_continuum(k: f64, mass: Mass) -> Result<f64> {
    if !(k > 0.0) {
        return Err(Error::OutOfDomain(format!("momentum must be positive, got {k}")));
    }
    Ok(k.atan2(mass.value()) / 2.0)
}

/// Annihilation operators (c_k, c_{-k}) for one +-k pair, as 4x4 matrices in
/// the block basis. The minus signs encode anticommutation with the -k mode
/// created first.
pub fn pair_mode_operators() -> (DenseOperator, DenseOperator) {
    let mut ck = DMatrix::from_element(4, 4, c(0.0, 0.0));
    // c+_k = |10><00| - |11><01|; c_k is the adjoint.
    ck[(0, 2)] = c(1.0, 0.0);
    ck[(1, 3)] = c(-1.0, 0.0);
    let mut cmk = DMatrix::from_element(4, 4, c(0.0, 0.0));
    // c+_{-k} = |01><00| + |11><10|.
    cmk[(0, 1)] = c(1.0, 0.0);
    cmk[(2, 3)] = c(1.0, 0.0);
    (DenseOperator::from_matrix(ck).unwrap(), DenseOperator::from_matrix(cmk).unwrap())
}

fn block_hamiltonian_from(number_coeff: f64, pairing_coeff: f64) -> DenseOperator {
    let (ck, cmk) = pair_mode_operators();
    let (ckd, cmkd) = (ck.adjoint(), cmk.adjoint());
    let id = DenseOperator::identity(4);
    let number = &(&(&ckd * &ck) + &(&cmkd * &cmk)) - &id;
    let pairing = &(&ckd * &cmkd) + &(&ck * &cmk);
    &(&number * c(2.0 * number_coeff, 0.0)) + &(&pairing * c(0.0, -2.0 * pairing_coeff))
}

/// 4x4 block Hamiltonian
/// 2(lambda - cos ka)(n_k + n_{-k} - 1) - 2i sin(ka)(c+_k c+_{-k} + c_k c_{-k})
/// for a paired momentum strictly inside (0, pi/a).
pub fn block_hamiltonian(k: f64, coupling: f64, spacing: f64) -> Result<DenseOperator> {
    let ka = k * spacing;
    if !(ka > 0.0 && ka < PI) {
        return Err(Error::SelfConjugateMomentum(k));
    }
    Ok(block_hamiltonian_from(coupling - ka.cos(), ka.sin()))
}

/// Continuum analog of [`block_hamiltonian`]:
/// 2m(n_k + n_{-k} - 1) - 2ik(c+_k c+_{-k} + c_k c_{-k}), whose ground state
/// is the pair state at phi = atan2(k, m)/2 with energy -2 sqrt(m^2 + k^2).
pub fn block_hamiltonian_continuum(k: f64, mass: Mass) -> Result<DenseOperator> {
    if !(k > 0.0) {
        return Err(Error::OutOfDomain(format!("momentum must be positive, got {k}")));
    }
    Ok(block_hamiltonian_from(mass.value(), k))
}

/// Quasiparticle annihilators of one block at the given angle, as 4x4
/// matrices: eta_k = cos(theta) c_k - i sin(theta) c+_{-k} and
/// eta_{-k} = cos(theta) c_{-k} + i sin(theta) c+_k. Both annihilate
/// [`block_ground_state`] at the same angle; the relative sign of the
/// i sin(theta) term tracks the pair-ordering convention fixed in the
/// module docs.
pub fn quasiparticle_operators(angle: f64) -> (DenseOperator, DenseOperator) {
    let (ck, cmk) = pair_mode_operators();
    let eta_k = &(&ck * c(angle.cos(), 0.0)) - &(&cmk.adjoint() * c(0.0, angle.sin()));
    let eta_mk = &(&cmk * c(angle.cos(), 0.0)) + &(&ck.adjoint() * c(0.0, angle.sin()));
    (eta_k, eta_mk)
}

/// The 4x4 Bogoliubov rotation: identity on the odd-occupancy states and a
/// unitary mixing |00> with |11>. Its columns are the block eigenvectors, so
/// U^dag H U = diag(-2w, 0, 0, +2w).
pub fn bogoliubov_rotation(angle: f64) -> DenseOperator {
    let (cos, sin) = (angle.cos(), angle.sin());
    let mut u = DMatrix::from_element(4, 4, c(0.0, 0.0));
    u[(0, 0)] = c(cos, 0.0);
    u[(3, 0)] = c(0.0, -sin);
    u[(1, 1)] = c(1.0, 0.0);
    u[(2, 2)] = c(1.0, 0.0);
    u[(0, 3)] = c(0.0, -sin);
    u[(3, 3)] = c(cos, 0.0);
    DenseOperator::from_matrix(u).unwrap()
}

/// Two-qubit state of one +-k block in the basis (n_k, n_{-k}).
#[derive(Debug, Clone, PartialEq)]
pub struct BlockStateVector {
    amps: [Complex64; 4],
}

impl BlockStateVector {
    pub fn new(amps: [Complex64; 4]) -> Result<Self> {
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { amps })
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amps
    }

    /// As a 2-qubit state in the register order (-k, k): the middle
    /// amplitudes swap.
    pub fn to_qubit_state(&self) -> StateVector {
        StateVector::from_amplitudes(vec![self.amps[0], self.amps[2], self.amps[1], self.amps[3]])
            .expect("block state is normalized")
    }
}

/// Ground state of one block: (cos angle, 0, 0, -i sin angle).
pub fn block_ground_state(angle: f64) -> Result<BlockStateVector> {
    if !(0.0..FRAC_PI_2).contains(&angle) {
        return Err(Error::OutOfDomain(format!("angle {angle} outside [0, pi/2)")));
    }
    BlockStateVector::new([c(angle.cos(), 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -angle.sin())])
}

/// Instant-form ground energy of a grid: each paired block contributes
/// -2 w_k; the self-conjugate modes of a periodic grid enter as single-mode
/// number operators and contribute -w_k each (-|lambda - 1| at k = 0,
/// -(lambda + 1) at ka = pi).
pub fn if_ground_energy(grid: &MomentumGrid, coupling: f64, spacing: f64) -> Result<f64> {
    if !grid.frame().is_instant_form() {
        return Err(Error::FrameMismatch { expected: "instant-form", found: grid.frame().name() });
    }
    let mut energy = 0.0;
    for &k in &grid.positive_momenta() {
        energy -= 2.0 * lattice_dispersion(k, coupling, spacing);
    }
    for k in grid.unpaired_momenta() {
        energy -= lattice_dispersion(k, coupling, spacing);
    }
    Ok(energy)
}

/// Excitation energy above the BCS ground state: E_k = 2 sqrt(m^2 + k^2).
pub fn if_excitation_energy(k: f64, mass: Mass) -> f64 {
    2.0 * continuum_dispersion(k, mass)
}

/// BCS-type instant-form ground state: one pair block per positive grid
/// momentum, blocks ordered by ascending k.
#[derive(Debug, Clone)]
pub struct IFGroundState {
    blocks: Vec<(f64, BlockStateVector)>,
}

impl IFGroundState {
    pub fn blocks(&self) -> &[(f64, BlockStateVector)] {
        &self.blocks
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Assembled 2^(2B) state vector in the paired momentum-qubit order
    /// (-k1, k1, -k2, k2, ...), k1 < k2 < ...
    pub fn to_state_vector(&self) -> StateVector {
        let mut state: Option<StateVector> = None;
        for (_, block) in &self.blocks {
            let q = block.to_qubit_state();
            state = Some(match state {
                None => q,
                Some(s) => s.kron(&q),
            });
        }
        state.expect("ground state has at least one block")
    }
}

/// Builds the BCS ground state of a grid with continuum angles
/// phi_k = atan2(k, m)/2.
pub fn build_if_ground_state(grid: &MomentumGrid, mass: Mass) -> Result<IFGroundState> {
    if !grid.frame().is_instant_form() {
        return Err(Error::FrameMismatch { expected: "instant-form", found: grid.frame().name() });
    }
    let mut blocks = Vec::new();
    for &k in &grid.positive_momenta() {
        let angle = bogoliubov_angle_continuum(k, mass)?;
        blocks.push((k, block_ground_state(angle)?));
    }
    Ok(IFGroundState { blocks })
}

/// Re-expresses a 4x4 block operator from the (n_k, n_{-k}) label order into
/// the (-k, k) qubit register order: the two odd-occupancy basis states swap.
pub fn block_in_qubit_order(op: &DenseOperator) -> DenseOperator {
    let perm = [0usize, 2, 1, 3];
    let m = op.matrix();
    let out = DMatrix::from_fn(4, 4, |r, s| m[(perm[r], perm[s])]);
    DenseOperator::from_matrix(out).unwrap()
}
