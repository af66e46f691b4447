//! Quantum-resource quantifiers: momentum-space qubitization, per-block Pauli
//! expectation tables, pairwise entanglement entropy, and the analytic
//! stabilizer Renyi entropy M2 for instant-form and lightfront ground states.
//! Entropies and M2 are in nats.

use crate::bogoliubov::bogoliubov_angle_continuum;
use crate::error::{Error, Result};
use crate::exactdiag::Pauli;
use crate::lattice::{make_lf_grid, mass_from_coupling, ChainSpec, Mass, MomentumGrid};

/// Momentum labels in the paired qubit order (-k1, k1, -k2, k2, ...) with
/// 0 < k1 < k2 < ...; each positive momentum immediately follows its
/// negative partner.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitOrdering {
    labels: Vec<f64>,
}

impl QubitOrdering {
    pub fn labels(&self) -> &[f64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn n_blocks(&self) -> usize {
        self.labels.len() / 2
    }
}

/// Paired qubit ordering of a fully paired instant-form grid. Grids carrying
/// self-conjugate modes (the periodic k = 0 and ka = pi) are rejected; those
/// modes do not fit the pair structure and must be excluded upstream.
pub fn qubitize_ordering(grid: &MomentumGrid) -> Result<QubitOrdering> {
    if !grid.frame().is_instant_form() {
        return Err(Error::FrameMismatch { expected: "instant-form", found: grid.frame().name() });
    }
    let unpaired = grid.unpaired_momenta();
    if !unpaired.is_empty() {
        return Err(Error::UnpairedModes(unpaired));
    }
    let mut labels = Vec::with_capacity(grid.len());
    for &k in &grid.positive_momenta() {
        labels.push(-k);
        labels.push(k);
    }
    Ok(QubitOrdering { labels })
}

/// The sixteen ground-state expectation values <P_{-k} P_k> of one pair
/// block, indexed by two Pauli letters.
///
/// Exactly six are nonzero away from phi in {0, pi/4}: II = ZZ = 1,
/// IZ = ZI = -cos(2 phi), and XY = YX = sin(2 phi) in this crate's
/// conventions.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockPauliTable {
    values: [[f64; 4]; 4],
}

impl BlockPauliTable {
    fn index(p: Pauli) -> usize {
        match p {
            Pauli::I => 0,
            Pauli::X => 1,
            Pauli::Y => 2,
            Pauli::Z => 3,
        }
    }

    /// Expectation of `left` on the -k qubit and `right` on the +k qubit.
    pub fn get(&self, left: Pauli, right: Pauli) -> f64 {
        self.values[Self::index(left)][Self::index(right)]
    }

    pub fn entries(&self) -> impl Iterator<Item = (Pauli, Pauli, f64)> + '_ {
        Pauli::ALL.iter().flat_map(move |&l| {
            Pauli::ALL.iter().map(move |&r| (l, r, self.get(l, r)))
        })
    }

    /// Number of entries with magnitude above `tol`.
    pub fn nonzero_count(&self, tol: f64) -> usize {
        self.entries().filter(|&(_, _, v)| v.abs() > tol).count()
    }
}

/// Analytic per-block expectation table at Bogoliubov angle `phi`.
pub fn block_pauli_table(phi: f64) -> BlockPauliTable {
    let cos2 = (2.0 * phi).cos();
    let sin2 = (2.0 * phi).sin();
    let mut values = [[0.0; 4]; 4];
    values[0][0] = 1.0; // II
    values[3][3] = 1.0; // ZZ
    values[0][3] = -cos2; // IZ
    values[3][0] = -cos2; // ZI
    values[1][2] = sin2; // XY
    values[2][1] = sin2; // YX
    BlockPauliTable { values }
}

/// Entanglement entropy of either mode of one pair block:
/// S = -cos^2 phi ln cos^2 phi - sin^2 phi ln sin^2 phi.
pub fn pair_entanglement_entropy(phi: f64) -> f64 {
    let c2 = phi.cos().powi(2);
    let s2 = phi.sin().powi(2);
    let term = |p: f64| if p > 0.0 { -p * p.ln() } else { 0.0 };
    term(c2) + term(s2)
}

/// Analytic M2 contribution of one block: -ln(1 - (k m / (k^2 + m^2))^2).
/// Zero iff k m = 0; maximal, ln(4/3), at k = m.
pub fn analytic_m2_contribution(k: f64, mass: Mass) -> f64 {
    debug_assert!(k > 0.0);
    let m = mass.value();
    let r = k * m / (k * k + m * m);
    // ln_1p keeps the small-r tail accurate and returns +0.0 at r = 0.
    -f64::ln_1p(-r * r)
}

/// Which frame a resource report describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFrame {
    InstantForm,
    LightFront,
}

impl ReportFrame {
    pub fn name(&self) -> &'static str {
        match self {
            ReportFrame::InstantForm => "IF",
            ReportFrame::LightFront => "LF",
        }
    }
}

/// Per-block resource data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockResources {
    pub k: f64,
    pub entanglement_entropy: f64,
    pub m2_contribution: f64,
}

/// Per-block and total entanglement entropy and M2 magic, tagged by frame.
#[derive(Debug, Clone, PartialEq)]
pub struct ResourceReport {
    pub frame: ReportFrame,
    pub per_block: Vec<BlockResources>,
    pub total_entropy: f64,
    pub total_m2: f64,
}

/// Instant-form resource report over a fully paired grid at mass m: one row
/// per positive momentum with phi_k = atan2(k, m)/2.
pub fn if_resource_report(grid: &MomentumGrid, mass: Mass) -> Result<ResourceReport> {
    let ordering = qubitize_ordering(grid)?;
    let mut per_block = Vec::with_capacity(ordering.n_blocks());
    let mut total_entropy = 0.0;
    let mut total_m2 = 0.0;
    for pair in ordering.labels().chunks(2) {
        let k = pair[1];
        let phi = bogoliubov_angle_continuum(k, mass)?;
        let entropy = pair_entanglement_entropy(phi);
        let m2 = analytic_m2_contribution(k, mass);
        total_entropy += entropy;
        total_m2 += m2;
        per_block.push(BlockResources { k, entanglement_entropy: entropy, m2_contribution: m2 });
    }
    Ok(ResourceReport { frame: ReportFrame::InstantForm, per_block, total_entropy, total_m2 })
}

/// Lightfront resource report: all entries are identically zero because the
/// eigenstates are occupation-basis product states (stabilizers).
pub fn lf_resource_report(spec: &ChainSpec, _mass: Mass) -> ResourceReport {
    let grid = make_lf_grid(spec);
    let per_block = grid
        .momenta()
        .iter()
        .map(|&k| BlockResources { k, entanglement_entropy: 0.0, m2_contribution: 0.0 })
        .collect();
    ResourceReport {
        frame: ReportFrame::LightFront,
        per_block,
        total_entropy: 0.0,
        total_m2: 0.0,
    }
}

/// One row of a coupling sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub coupling: f64,
    pub mass: f64,
    pub total_m2: f64,
    pub total_entropy: f64,
}

/// Sweeps the coupling over [0, 1], reporting instant-form totals on the
/// antiperiodic grid with m = (1 - lambda)/a.
pub fn magic_sweep(spec: &ChainSpec, couplings: &[f64]) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::with_capacity(couplings.len());
    for &lam in couplings {
        if !(0.0..=1.0).contains(&lam) {
            return Err(Error::OutOfDomain(format!(
                "sweep coupling must lie in [0, 1], got {lam}"
            )));
        }
        let mass = mass_from_coupling(lam, spec.spacing())?;
        let swept = ChainSpec::new(spec.n_sites(), spec.spacing(), lam)?;
        let grid = crate::lattice::make_if_grid(&swept, crate::lattice::IfSector::Antiperiodic);
        let report = if_resource_report(&grid, mass)?;
        rows.push(SweepRow {
            coupling: lam,
            mass: mass.value(),
            total_m2: report.total_m2,
            total_entropy: report.total_entropy,
        });
    }
    Ok(rows)
}

/// Peak value ln(4/3) of the per-block M2 contribution, attained at k = m.
pub const M2_PEAK: f64 = 0.287_682_072_451_780_9;
