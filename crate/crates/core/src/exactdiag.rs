//! Brute-force oracle: dense spin and fermion Hamiltonians, full
//! diagonalization, a Pauli-string expectation engine, and exhaustive
//! stabilizer Renyi entropy. Everything here exists to validate the analytic
//! modules at small N, so clarity and exactness win over scale.
//!
//! Conventions, used everywhere in this crate:
//!
//! * Qubit `j` of an n-qubit register owns bit `n - 1 - j` of the basis
//!   index (qubit 0 is the leftmost letter of a Pauli word and the most
//!   significant bit).
//! * `|0>` is the empty fermionic mode and the -1 eigenstate of Z; `|1>` is
//!   occupied, Z = +1. Hence Z = 2 n_hat - 1 as a matrix.
//! * X = [[0,1],[1,0]], Y = [[0,i],[-i,0]], Z = [[-1,0],[0,1]], a
//!   right-handed triple (XY = iZ) compatible with the annihilator
//!   c = (X - iY)/2 acting as |0><1|.
//! * Fock basis states are built by applying creation operators in qubit
//!   order, so Jordan-Wigner strings are plain products of exp(i pi n_hat)
//!   factors over earlier qubits.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::{ChainSpec, IfSector};

/// Dense matrices are capped at 2^14; this module is an oracle, not a solver.
pub const DENSE_SITE_CAP: usize = 14;
/// Exhaustive 4^n Pauli enumeration is capped at 7 qubits.
pub const SRE_QUBIT_CAP: usize = 7;

const HERMITICITY_TOL: f64 = 1e-12;
const IMAG_RESIDUE_TOL: f64 = 1e-10;

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn label(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    /// 2x2 matrix in this crate's convention (see module docs).
    pub fn matrix(self) -> DMatrix<Complex64> {
        let o = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let rows: [[Complex64; 2]; 2] = match self {
            Pauli::I => [[one, o], [o, one]],
            Pauli::X => [[o, one], [one, o]],
            Pauli::Y => [[o, i], [-i, o]],
            Pauli::Z => [[-one, o], [o, one]],
        };
        DMatrix::from_fn(2, 2, |r, c| rows[r][c])
    }
}

/// Tag recording which qubit-ordering convention a string is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QubitOrderingTag {
    /// Real-space site order 1..N.
    #[default]
    SiteOrder,
    /// Momentum-space paired order (-k1, k1, -k2, k2, ...).
    PairedMomentum,
}

/// A Pauli word, one letter per qubit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliString {
    letters: Vec<Pauli>,
    ordering: QubitOrderingTag,
}

impl PauliString {
    pub fn new(letters: Vec<Pauli>) -> Self {
        Self { letters, ordering: QubitOrderingTag::SiteOrder }
    }

    pub fn with_ordering(letters: Vec<Pauli>, ordering: QubitOrderingTag) -> Self {
        Self { letters, ordering }
    }

    /// Parse a word like "XIZY".
    pub fn parse(word: &str) -> Result<Self> {
        let letters = word
            .chars()
            .map(|c| match c {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                other => Err(Error::OutOfDomain(format!("not a Pauli letter: {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(letters))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    pub fn ordering(&self) -> QubitOrderingTag {
        self.ordering
    }

    /// Relabel qubits: letter for new qubit q comes from old qubit perm[q].
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let letters = perm.iter().map(|&p| self.letters[p]).collect();
        Self { letters, ordering: self.ordering }
    }

    /// The w-th string of the 4^n enumeration, base-4 digits I,X,Y,Z with
    /// qubit 0 as the most significant digit.
    pub fn from_index(w: usize, n_qubits: usize) -> Self {
        let letters = (0..n_qubits)
            .map(|q| match (w >> (2 * (n_qubits - 1 - q))) & 3 {
                0 => Pauli::I,
                1 => Pauli::X,
                2 => Pauli::Y,
                _ => Pauli::Z,
            })
            .collect();
        Self::new(letters)
    }
}

impl std::fmt::Display for PauliString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.label())?;
        }
        Ok(())
    }
}

/// Apply a Pauli word to a computational basis state: P |idx> = phase |out>.
fn apply_word(letters: &[Pauli], idx: usize) -> (usize, Complex64) {
    let n = letters.len();
    let mut out = idx;
    let mut phase = Complex64::new(1.0, 0.0);
    for (q, &p) in letters.iter().enumerate() {
        let bit_pos = n - 1 - q;
        let bit = (idx >> bit_pos) & 1;
        match p {
            Pauli::I => {}
            Pauli::X => out ^= 1 << bit_pos,
            Pauli::Y => {
                out ^= 1 << bit_pos;
                // Y|0> = -i|1>, Y|1> = +i|0>
                phase *= if bit == 0 {
                    Complex64::new(0.0, -1.0)
                } else {
                    Complex64::new(0.0, 1.0)
                };
            }
            Pauli::Z => {
                if bit == 0 {
                    phase = -phase;
                }
            }
        }
    }
    (out, phase)
}

/// Dense complex operator on a 2^n-dimensional space.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    mat: DMatrix<Complex64>,
}

impl DenseOperator {
    pub fn from_matrix(mat: DMatrix<Complex64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::DimensionMismatch { expected: mat.nrows(), found: mat.ncols() });
        }
        Ok(Self { mat })
    }

    pub fn zeros(dim: usize) -> Self {
        Self { mat: DMatrix::zeros(dim, dim) }
    }

    pub fn identity(dim: usize) -> Self {
        Self { mat: DMatrix::identity(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn adjoint(&self) -> Self {
        Self { mat: self.mat.adjoint() }
    }

    /// Max entry of |M - M^dag|.
    pub fn hermiticity_deviation(&self) -> f64 {
        let adj = self.mat.adjoint();
        (&self.mat - adj).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_deviation() < HERMITICITY_TOL
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.trace()
    }

    /// All eigenvalues of a Hermitian operator, ascending.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        let dev = self.hermiticity_deviation();
        if dev >= HERMITICITY_TOL {
            return Err(Error::NonHermitian(dev));
        }
        let mut evs: Vec<f64> = self.mat.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
        evs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(evs)
    }

    /// <psi| M |psi>, complex in general.
    pub fn expectation(&self, state: &StateVector) -> Result<Complex64> {
        if state.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: state.dim() });
        }
        let v = state.vector();
        Ok(v.dotc(&(&self.mat * v)))
    }

    pub fn apply(&self, state: &StateVector) -> Result<DVector<Complex64>> {
        if state.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: state.dim() });
        }
        Ok(&self.mat * state.vector())
    }
}

impl std::ops::Add for &DenseOperator {
    type Output = DenseOperator;
    fn add(self, rhs: &DenseOperator) -> DenseOperator {
        DenseOperator { mat: &self.mat + &rhs.mat }
    }
}

impl std::ops::Sub for &DenseOperator {
    type Output = DenseOperator;
    fn sub(self, rhs: &DenseOperator) -> DenseOperator {
        DenseOperator { mat: &self.mat - &rhs.mat }
    }
}

impl std::ops::Mul for &DenseOperator {
    type Output = DenseOperator;
    fn mul(self, rhs: &DenseOperator) -> DenseOperator {
        DenseOperator { mat: &self.mat * &rhs.mat }
    }
}

impl std::ops::Mul<Complex64> for &DenseOperator {
    type Output = DenseOperator;
    fn mul(self, rhs: Complex64) -> DenseOperator {
        DenseOperator { mat: &self.mat * rhs }
    }
}

/// Normalized state on 2^n basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: DVector<Complex64>,
    n_qubits: usize,
}

impl StateVector {
    /// Wraps amplitudes; the dimension must be a power of two and the norm
    /// must already be 1 within 1e-10.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let dim = amps.len();
        if dim == 0 || dim & (dim - 1) != 0 {
            return Err(Error::OutOfDomain(format!("dimension {dim} is not a power of two")));
        }
        let v = DVector::from_vec(amps);
        let norm = v.norm();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { n_qubits: dim.trailing_zeros() as usize, amps: v })
    }

    /// Computational basis state |index> on n qubits.
    pub fn basis_state(n_qubits: usize, index: usize) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, len: dim });
        }
        let mut amps = DVector::from_element(dim, Complex64::new(0.0, 0.0));
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amps, n_qubits })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn vector(&self) -> &DVector<Complex64> {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    /// Tensor product; `self` owns the leading (most significant) qubits.
    pub fn kron(&self, other: &StateVector) -> StateVector {
        let (da, db) = (self.dim(), other.dim());
        let mut amps = DVector::from_element(da * db, Complex64::new(0.0, 0.0));
        for i in 0..da {
            for j in 0..db {
                amps[i * db + j] = self.amps[i] * other.amps[j];
            }
        }
        StateVector { amps, n_qubits: self.n_qubits + other.n_qubits }
    }

    /// Relabel qubits: new qubit q holds what old qubit perm[q] held.
    pub fn permute_qubits(&self, perm: &[usize]) -> Result<StateVector> {
        let n = self.n_qubits;
        if perm.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: perm.len() });
        }
        let mut amps = DVector::from_element(self.dim(), Complex64::new(0.0, 0.0));
        for idx in 0..self.dim() {
            let mut new_idx = 0usize;
            for q in 0..n {
                let old_bit = (idx >> (n - 1 - perm[q])) & 1;
                new_idx |= old_bit << (n - 1 - q);
            }
            amps[new_idx] = self.amps[idx];
        }
        Ok(StateVector { amps, n_qubits: n })
    }
}

/// Dense spin-chain Hamiltonian -(1/2) sum_j X_j X_{j+1} - (lambda/2) sum_j Z_j,
/// with the wrap-around X_N X_1 bond when `closed`.
pub fn build_spin_hamiltonian(spec: &ChainSpec, closed: bool) -> Result<DenseOperator> {
    let n = spec.n_sites();
    if n > DENSE_SITE_CAP {
        return Err(Error::SizeCap { n_sites: n, cap: DENSE_SITE_CAP });
    }
    let lam = spec.coupling();
    let dim = 1usize << n;

    // (coefficient, sparse word) terms; applied column by column.
    let mut terms: Vec<(f64, Vec<(usize, Pauli)>)> = Vec::new();
    for j in 0..n - 1 {
        terms.push((-0.5, vec![(j, Pauli::X), (j + 1, Pauli::X)]));
    }
    if closed {
        terms.push((-0.5, vec![(n - 1, Pauli::X), (0, Pauli::X)]));
    }
    for j in 0..n {
        terms.push((-lam / 2.0, vec![(j, Pauli::Z)]));
    }

    let mut mat = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    let mut word = vec![Pauli::I; n];
    for (coeff, ops) in &terms {
        word.iter_mut().for_each(|l| *l = Pauli::I);
        for &(q, p) in ops {
            word[q] = p;
        }
        for col in 0..dim {
            let (row, phase) = apply_word(&word, col);
            mat[(row, col)] += phase * Complex64::new(*coeff, 0.0);
        }
    }
    DenseOperator::from_matrix(mat)
}

/// Jordan-Wigner annihilation operator c_j = ((X_j - i Y_j)/2) prod_{j'<j} Z_{j'}
/// as a dense 2^N matrix. `site` is 1-based.
pub fn jw_operator(site: usize, n_sites: usize) -> Result<DenseOperator> {
    if site == 0 || site > n_sites {
        return Err(Error::IndexOutOfRange { index: site, len: n_sites });
    }
    if n_sites > DENSE_SITE_CAP {
        return Err(Error::SizeCap { n_sites, cap: DENSE_SITE_CAP });
    }
    let n = n_sites;
    let q = site - 1;
    let dim = 1usize << n;
    let mut mat = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    for col in 0..dim {
        if (col >> (n - 1 - q)) & 1 == 1 {
            let row = col & !(1 << (n - 1 - q));
            // Z string over earlier sites: |1> -> +1, |0> -> -1.
            let mut phase = 1.0;
            for q2 in 0..q {
                if (col >> (n - 1 - q2)) & 1 == 0 {
                    phase = -phase;
                }
            }
            mat[(row, col)] = Complex64::new(phase, 0.0);
        }
    }
    DenseOperator::from_matrix(mat)
}

/// Dense fermion-chain Hamiltonian
/// sum_j [ lambda (2 c^dag_j c_j - 1) - (c^dag_j - c_j)(c^dag_{j+1} + c_{j+1}) ]
/// with c_{N+1} = +-c_1 per boundary sector.
///
/// Normalized so each paired momentum block carries energies
/// {-2 w_k, 0, 0, +2 w_k}, matching the diagonalized momentum-space form;
/// this is twice the spin Hamiltonian's energy scale.
pub fn build_fermion_hamiltonian(spec: &ChainSpec, bc: IfSector) -> Result<DenseOperator> {
    let n = spec.n_sites();
    if n > DENSE_SITE_CAP {
        return Err(Error::SizeCap { n_sites: n, cap: DENSE_SITE_CAP });
    }
    let lam = Complex64::new(spec.coupling(), 0.0);
    let dim = 1usize << n;

    let cs: Vec<DenseOperator> = (1..=n).map(|j| jw_operator(j, n)).collect::<Result<_>>()?;
    let id = DenseOperator::identity(dim);

    let mut h = DenseOperator::zeros(dim);
    for j in 0..n {
        let c = &cs[j];
        let cdag = c.adjoint();
        let number = &(&cdag * c) * Complex64::new(2.0, 0.0);
        h = &h + &(&(&number - &id) * lam);

        let next = if j + 1 < n {
            cs[j + 1].clone()
        } else {
            match bc {
                IfSector::Periodic => cs[0].clone(),
                IfSector::Antiperiodic => &cs[0] * Complex64::new(-1.0, 0.0),
            }
        };
        let hop = &(&cdag - c) * &(&next.adjoint() + &next);
        h = &h - &hop;
    }
    Ok(h)
}

/// Lowest eigenpair of a Hermitian operator.
#[derive(Debug, Clone)]
pub struct GroundState {
    pub energy: f64,
    pub state: StateVector,
    /// Set when the lowest eigenvalue is (numerically) degenerate; the
    /// returned eigenvector is then an arbitrary member of the ground space.
    pub degenerate: bool,
}

/// Full diagonalization, returning the minimal eigenvalue and eigenvector.
pub fn ground_state(h: &DenseOperator) -> Result<GroundState> {
    let dev = h.hermiticity_deviation();
    if dev >= HERMITICITY_TOL {
        return Err(Error::NonHermitian(dev));
    }
    let eig = h.matrix().clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let lo = order[0];
    let energy = eig.eigenvalues[lo];
    let degenerate = order.len() > 1 && {
        let scale = eig.eigenvalues.iter().fold(0.0f64, |m, e| m.max(e.abs()));
        (eig.eigenvalues[order[1]] - energy).abs() < 1e-9 * (1.0 + scale)
    };
    let mut col: DVector<Complex64> = eig.eigenvectors.column(lo).into();
    let norm = col.norm();
    col /= Complex64::new(norm, 0.0);
    Ok(GroundState {
        energy,
        state: StateVector { n_qubits: col.len().trailing_zeros() as usize, amps: col },
        degenerate,
    })
}

/// <psi| P |psi> for a Pauli word. Real up to floating-point residue; an
/// imaginary part above 1e-10 signals a convention bug and is an error.
pub fn pauli_expectation(state: &StateVector, string: &PauliString) -> Result<f64> {
    if string.len() != state.n_qubits() {
        return Err(Error::DimensionMismatch { expected: state.n_qubits(), found: string.len() });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for idx in 0..state.dim() {
        let a = state.amplitude(idx);
        if a == Complex64::new(0.0, 0.0) {
            continue;
        }
        let (out, phase) = apply_word(string.letters(), idx);
        acc += state.amplitude(out).conj() * phase * a;
    }
    if acc.im.abs() >= IMAG_RESIDUE_TOL {
        return Err(Error::ImaginaryResidue(acc.im));
    }
    Ok(acc.re)
}

/// Stabilizer Renyi entropy M_q by exhaustive enumeration of all 4^n Pauli
/// strings: M_q = (1-q)^{-1} ln( sum_P <P>^{2q} / 2^n ), in nats.
///
/// The normalization is the Hilbert-space dimension 2^n, which makes every
/// stabilizer state score exactly zero.
pub fn brute_force_sre(state: &StateVector, q: u32) -> Result<f64> {
    let n = state.n_qubits();
    if n > SRE_QUBIT_CAP {
        return Err(Error::QubitCap { qubits: n, cap: SRE_QUBIT_CAP });
    }
    if q < 2 {
        return Err(Error::OutOfDomain(format!("Renyi index q must be >= 2, got {q}")));
    }
    let mut sum = 0.0f64;
    for w in 0..(1usize << (2 * n)) {
        let string = PauliString::from_index(w, n);
        let exp = pauli_expectation(state, &string)?;
        sum += exp.powi(2 * q as i32);
    }
    let dim = (1usize << n) as f64;
    Ok((sum / dim).ln() / (1.0 - q as f64))
}

/// Reduced density matrix over `keep` qubits (ascending), tracing out the rest.
pub fn reduced_density_matrix(state: &StateVector, keep: &[usize]) -> Result<DMatrix<Complex64>> {
    let n = state.n_qubits();
    for &q in keep {
        if q >= n {
            return Err(Error::IndexOutOfRange { index: q, len: n });
        }
    }
    let traced: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
    let dim_a = 1usize << keep.len();
    let dim_b = 1usize << traced.len();
    let mut rho = DMatrix::from_element(dim_a, dim_a, Complex64::new(0.0, 0.0));
    let index_of = |a: usize, b: usize| -> usize {
        let mut idx = 0usize;
        for (pos, &q) in keep.iter().enumerate() {
            let bit = (a >> (keep.len() - 1 - pos)) & 1;
            idx |= bit << (n - 1 - q);
        }
        for (pos, &q) in traced.iter().enumerate() {
            let bit = (b >> (traced.len() - 1 - pos)) & 1;
            idx |= bit << (n - 1 - q);
        }
        idx
    };
    for a in 0..dim_a {
        for a2 in 0..dim_a {
            let mut acc = Complex64::new(0.0, 0.0);
            for b in 0..dim_b {
                acc += state.amplitude(index_of(a, b)) * state.amplitude(index_of(a2, b)).conj();
            }
            rho[(a, a2)] = acc;
        }
    }
    Ok(rho)
}

/// Von Neumann entropy -tr(rho ln rho) in nats.
pub fn von_neumann_entropy(rho: &DMatrix<Complex64>) -> f64 {
    let eig = rho.clone().symmetric_eigen();
    eig.eigenvalues.iter().filter(|&&p| p > 1e-15).map(|&p| -p * p.ln()).sum()
}

/// Entanglement entropy of the `keep` qubits against the rest.
pub fn entanglement_entropy(state: &StateVector, keep: &[usize]) -> Result<f64> {
    Ok(von_neumann_entropy(&reduced_density_matrix(state, keep)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{make_if_grid, lattice_dispersion};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn spec(n: usize, lam: f64) -> ChainSpec {
        ChainSpec::new(n, 1.0, lam).unwrap()
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} != {b} (tol {tol})");
    }

    /// Even-fermion-parity basis indices: prod_j Z_j = +1, i.e. even number
    /// of |0> bits; for even N that is an even number of |1> bits.
    fn even_parity_indices(n: usize) -> Vec<usize> {
        (0..1usize << n).filter(|i| i.count_ones() % 2 == 0).collect()
    }

    fn restrict(op: &DenseOperator, idx: &[usize]) -> DMatrix<Complex64> {
        DMatrix::from_fn(idx.len(), idx.len(), |r, s| op.matrix()[(idx[r], idx[s])])
    }

    fn sorted_eigs(m: DMatrix<Complex64>) -> Vec<f64> {
        let mut e: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
        e.sort_by(|a, b| a.partial_cmp(b).unwrap());
        e
    }

    #[test]
    fn single_xx_bond_spectrum() {
        // -(1/2) X (x) X on two qubits: eigenvalues {-1/2, -1/2, +1/2, +1/2}.
        let xx = Pauli::X.matrix().kronecker(&Pauli::X.matrix()) * c(-0.5, 0.0);
        let evs = sorted_eigs(xx);
        for (e, want) in evs.iter().zip([-0.5, -0.5, 0.5, 0.5]) {
            assert_close(*e, want, 1e-12);
        }
    }

    #[test]
    fn spin_hamiltonian_open_chain_lambda_zero() {
        // Three commuting XX bonds at N=4: ground -3/2, spectrum sums of +-1/2.
        let h = build_spin_hamiltonian(&spec(4, 0.0), false).unwrap();
        assert!(h.is_hermitian());
        let evs = h.hermitian_eigenvalues().unwrap();
        assert_close(evs[0], -1.5, 1e-12);
        assert_close(evs[15], 1.5, 1e-12);
        for e in &evs {
            let doubled = e * 2.0;
            assert_close(doubled.round(), doubled, 1e-10);
        }
    }

    #[test]
    fn spin_hamiltonian_field_dominated() {
        // Large lambda: ground approaches -(lambda/2) N.
        let lam = 1000.0;
        let h = build_spin_hamiltonian(&spec(4, lam), true).unwrap();
        let gs = ground_state(&h).unwrap();
        assert!((gs.energy + 2.0 * lam).abs() < 1e-2, "gs {} vs {}", gs.energy, -2.0 * lam);
    }

    #[test]
    fn spin_cap_enforced() {
        let s = ChainSpec::new(16, 1.0, 1.0).unwrap();
        assert!(matches!(build_spin_hamiltonian(&s, true), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn jw_canonical_anticommutation() {
        for n in [2usize, 4, 6] {
            let cs: Vec<DenseOperator> = (1..=n).map(|j| jw_operator(j, n).unwrap()).collect();
            let id = DenseOperator::identity(1 << n);
            for j in 0..n {
                for l in 0..n {
                    let a = &cs[j];
                    let b_dag = cs[l].adjoint();
                    let anti = &(a * &b_dag) + &(&b_dag * a);
                    let expect = if j == l { id.clone() } else { DenseOperator::zeros(1 << n) };
                    let dev = (anti.matrix() - expect.matrix())
                        .iter()
                        .map(|z| z.norm())
                        .fold(0.0, f64::max);
                    assert!(dev < 1e-14, "{{c_{j}, c+_{l}}} deviates by {dev}");

                    let anti2 = &(a * &cs[l]) + &(&cs[l] * a);
                    let dev2 = anti2.matrix().iter().map(|z| z.norm()).fold(0.0, f64::max);
                    assert!(dev2 < 1e-14, "{{c_{j}, c_{l}}} deviates by {dev2}");
                }
            }
        }
    }

    #[test]
    fn jw_index_bounds() {
        assert!(jw_operator(0, 4).is_err());
        assert!(jw_operator(5, 4).is_err());
        assert!(jw_operator(4, 4).is_ok());
    }

    #[test]
    fn fermion_bulk_reproduces_spin_bulk() {
        // Substituting the JW matrices into the fermionic form and dropping
        // the boundary bond reproduces the spin Hamiltonian on the open
        // chain, up to the recorded normalization: bulk = -2 x spin(open).
        let n = 6;
        let lam = 0.8;
        let cs: Vec<DenseOperator> = (1..=n).map(|j| jw_operator(j, n).unwrap()).collect();
        let id = DenseOperator::identity(1 << n);
        let mut bulk = DenseOperator::zeros(1 << n);
        for j in 0..n {
            let cdag = cs[j].adjoint();
            let number = &(&(&cdag * &cs[j]) * c(2.0, 0.0)) - &id;
            bulk = &bulk + &(&number * c(lam, 0.0));
        }
        for j in 0..n - 1 {
            let cdag = cs[j].adjoint();
            let hop = &(&cdag - &cs[j]) * &(&cs[j + 1].adjoint() + &cs[j + 1]);
            bulk = &bulk - &hop;
        }
        let s_open = build_spin_hamiltonian(&spec(n, lam), false).unwrap();
        let expected = &s_open * c(-2.0, 0.0);
        let dev = (bulk.matrix() - expected.matrix()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(dev < 1e-12, "bulk vs -2 spin(open): deviation {dev}");
    }

    #[test]
    fn fermion_ground_energy_matches_bogoliubov_sum() {
        // Antiperiodic sector: E0 = -sum_{k>0} 2 w_k exactly at finite N.
        for (n, lam, tol) in [(4usize, 0.0, 1e-12), (8, 0.5, 1e-10)] {
            let s = spec(n, lam);
            let h = build_fermion_hamiltonian(&s, IfSector::Antiperiodic).unwrap();
            assert!(h.is_hermitian());
            let gs = ground_state(&h).unwrap();
            let grid = make_if_grid(&s, IfSector::Antiperiodic);
            let analytic: f64 =
                grid.positive_momenta().iter().map(|&k| -2.0 * lattice_dispersion(k, lam, 1.0)).sum();
            assert_close(gs.energy, analytic, tol);
        }
        // N=4, lambda=0: w_k = 1 for all k, ground energy -4.
        let h = build_fermion_hamiltonian(&spec(4, 0.0), IfSector::Antiperiodic).unwrap();
        assert_close(ground_state(&h).unwrap().energy, -4.0, 1e-12);
    }

    #[test]
    fn fermion_hamiltonian_traceless() {
        for bc in [IfSector::Periodic, IfSector::Antiperiodic] {
            let h = build_fermion_hamiltonian(&spec(4, 0.7), bc).unwrap();
            assert!(h.trace().norm() < 1e-12);
        }
    }

    #[test]
    fn spin_matches_fermion_on_even_parity_sector() {
        // Closed spin chain restricted to even fermion parity is exactly
        // -(1/2) x the antiperiodic fermion chain on the same sector.
        for (n, lam) in [(6usize, 0.5), (8, 1.0)] {
            let s = spec(n, lam);
            let hs = build_spin_hamiltonian(&s, true).unwrap();
            let hf = build_fermion_hamiltonian(&s, IfSector::Antiperiodic).unwrap();
            let even = even_parity_indices(n);
            let spin_evs = sorted_eigs(restrict(&hs, &even));
            let mut ferm_evs: Vec<f64> =
                sorted_eigs(restrict(&hf, &even)).iter().map(|e| -e / 2.0).collect();
            ferm_evs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (a, b) in spin_evs.iter().zip(&ferm_evs) {
                assert_close(*a, *b, 1e-9);
            }
            // The closed-chain ground state lives in the even sector.
            let gs = ground_state(&hs).unwrap();
            assert_close(gs.energy, spin_evs[0], 1e-10);
            let grid = make_if_grid(&s, IfSector::Antiperiodic);
            let analytic: f64 =
                grid.positive_momenta().iter().map(|&k| -lattice_dispersion(k, lam, 1.0)).sum();
            assert_close(gs.energy, analytic, 1e-10);
        }
    }

    #[test]
    fn ground_state_pinned_cases() {
        let id = DenseOperator::identity(4);
        let gs = ground_state(&id).unwrap();
        assert_close(gs.energy, 1.0, 1e-14);
        assert!(gs.degenerate);

        let diag = DenseOperator::from_matrix(DMatrix::from_diagonal(&DVector::from_vec(vec![
            c(-3.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(5.0, 0.0),
        ])))
        .unwrap();
        let gs = ground_state(&diag).unwrap();
        assert_close(gs.energy, -3.0, 1e-14);
        assert_close(gs.state.amplitude(0).norm(), 1.0, 1e-12);
        assert!(!gs.degenerate);

        let mut m = DMatrix::from_element(2, 2, c(0.0, 0.0));
        m[(0, 1)] = c(1.0, 0.0);
        let non_herm = DenseOperator::from_matrix(m).unwrap();
        assert!(matches!(ground_state(&non_herm), Err(Error::NonHermitian(_))));
    }

    #[test]
    fn pauli_expectation_conventions() {
        // |0...0> is the -1 eigenstate of every Z: <Z...Z> = (-1)^n.
        for n in 1..=4 {
            let zeros = StateVector::basis_state(n, 0).unwrap();
            let zz = PauliString::new(vec![Pauli::Z; n]);
            assert_close(pauli_expectation(&zeros, &zz).unwrap(), (-1.0f64).powi(n as i32), 1e-14);
            let ii = PauliString::new(vec![Pauli::I; n]);
            assert_close(pauli_expectation(&zeros, &ii).unwrap(), 1.0, 1e-14);
        }
        // Bell-type block state (cos, 0, 0, -i sin) at phi = pi/4: <XY> = +1.
        let bell = StateVector::from_amplitudes(vec![
            c(FRAC_1_SQRT_2, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, -FRAC_1_SQRT_2),
        ])
        .unwrap();
        let xy = PauliString::new(vec![Pauli::X, Pauli::Y]);
        let v = pauli_expectation(&bell, &xy).unwrap();
        assert_close(v.abs(), 1.0, 1e-12);
        assert_close(v, 1.0, 1e-12);

        let mismatched = PauliString::new(vec![Pauli::X]);
        assert!(pauli_expectation(&bell, &mismatched).is_err());
    }

    #[test]
    fn sre_vanishes_on_stabilizer_states() {
        // Computational basis states.
        for n in 1..=4 {
            for idx in [0usize, (1 << n) - 1] {
                let s = StateVector::basis_state(n, idx).unwrap();
                assert_close(brute_force_sre(&s, 2).unwrap(), 0.0, 1e-10);
            }
        }
        // X and Y eigenstate products.
        let plus = StateVector::from_amplitudes(vec![c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)])
            .unwrap();
        let y_minus =
            StateVector::from_amplitudes(vec![c(FRAC_1_SQRT_2, 0.0), c(0.0, -FRAC_1_SQRT_2)])
                .unwrap();
        let prod = plus.kron(&y_minus).kron(&plus);
        assert_close(brute_force_sre(&prod, 2).unwrap(), 0.0, 1e-10);

        // Bell pair.
        let bell = StateVector::from_amplitudes(vec![
            c(FRAC_1_SQRT_2, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, -FRAC_1_SQRT_2),
        ])
        .unwrap();
        assert_close(brute_force_sre(&bell, 2).unwrap(), 0.0, 1e-10);

        // GHZ states up to 5 qubits.
        for n in 2..=5 {
            let mut amps = vec![c(0.0, 0.0); 1 << n];
            amps[0] = c(FRAC_1_SQRT_2, 0.0);
            amps[(1 << n) - 1] = c(FRAC_1_SQRT_2, 0.0);
            let ghz = StateVector::from_amplitudes(amps).unwrap();
            assert_close(brute_force_sre(&ghz, 2).unwrap(), 0.0, 1e-10);
        }
    }

    #[test]
    fn sre_block_state_matches_analytic() {
        // (cos phi, 0, 0, -i sin phi) at phi = pi/8: M2 = -ln((1 + cos^4 + sin^4)/2)
        // with the angle doubled: cos^2(2 phi) = 1/2 here, so M2 = ln(4/3).
        let phi = std::f64::consts::PI / 8.0;
        let block = StateVector::from_amplitudes(vec![
            c(phi.cos(), 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, -phi.sin()),
        ])
        .unwrap();
        let m2 = brute_force_sre(&block, 2).unwrap();
        let c4 = (2.0 * phi).cos().powi(4);
        let s4 = (2.0 * phi).sin().powi(4);
        assert_close(m2, -((1.0 + c4 + s4) / 2.0).ln(), 1e-12);
        assert_close(m2, (4.0f64 / 3.0).ln(), 1e-12);
        // phi = pi/4 is a stabilizer (Bell) point.
        let bell = StateVector::from_amplitudes(vec![
            c(FRAC_1_SQRT_2, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, -FRAC_1_SQRT_2),
        ])
        .unwrap();
        assert_close(brute_force_sre(&bell, 2).unwrap(), 0.0, 1e-10);
    }

    #[test]
    fn sre_invariant_under_qubit_permutation() {
        let amps = vec![
            c(0.6, 0.1),
            c(0.2, -0.3),
            c(0.1, 0.2),
            c(0.3, 0.0),
            c(0.0, 0.4),
            c(0.25, 0.15),
            c(0.2, 0.2),
            c(0.1, -0.1),
        ];
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let amps: Vec<Complex64> = amps.iter().map(|z| z / norm).collect();
        let state = StateVector::from_amplitudes(amps).unwrap();
        let m2 = brute_force_sre(&state, 2).unwrap();
        for perm in [[1usize, 2, 0], [2, 0, 1], [0, 2, 1]] {
            let permuted = state.permute_qubits(&perm).unwrap();
            assert_close(brute_force_sre(&permuted, 2).unwrap(), m2, 1e-10);
        }
    }

    #[test]
    fn sre_guards() {
        let s = StateVector::basis_state(8, 0).unwrap();
        assert!(matches!(brute_force_sre(&s, 2), Err(Error::QubitCap { .. })));
        let s = StateVector::basis_state(2, 0).unwrap();
        assert!(brute_force_sre(&s, 1).is_err());
    }

    #[test]
    fn reduced_density_matrix_entropy() {
        let bell = StateVector::from_amplitudes(vec![
            c(FRAC_1_SQRT_2, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, -FRAC_1_SQRT_2),
        ])
        .unwrap();
        assert_close(entanglement_entropy(&bell, &[0]).unwrap(), 2.0f64.ln(), 1e-12);
        let product = StateVector::basis_state(3, 5).unwrap();
        assert_close(entanglement_entropy(&product, &[0, 2]).unwrap(), 0.0, 1e-12);
    }
}
