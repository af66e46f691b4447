//! Chain parameters, discrete momentum grids for both quantizations, and
//! dispersion relations.
//!
//! Momenta are stored internally as exact integer multiples of pi/(N a), so
//! grid membership and +k/-k pairing are integer comparisons; floating point
//! only appears at the boundary.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Parameters of the spin chain: site count N, lattice spacing a, and
/// transverse-field strength lambda.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainSpec {
    n_sites: usize,
    spacing: f64,
    coupling: f64,
}

impl ChainSpec {
    /// Validates N even and >= 4, a > 0, lambda >= 0.
    pub fn new(n_sites: usize, spacing: f64, coupling: f64) -> Result<Self> {
        if n_sites < 4 || n_sites % 2 != 0 {
            return Err(Error::InvalidChain(format!(
                "n_sites must be even and >= 4, got {n_sites}"
            )));
        }
        if !(spacing > 0.0) || !spacing.is_finite() {
            return Err(Error::InvalidChain(format!(
                "spacing must be positive and finite, got {spacing}"
            )));
        }
        if !(coupling >= 0.0) || !coupling.is_finite() {
            return Err(Error::InvalidChain(format!(
                "coupling must be non-negative and finite, got {coupling}"
            )));
        }
        Ok(Self { n_sites, spacing, coupling })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    /// Physical length L = N a.
    pub fn length(&self) -> f64 {
        self.n_sites as f64 * self.spacing
    }

    /// Fermion mass m = (1 - lambda)/a derived from the coupling.
    pub fn mass(&self) -> Result<Mass> {
        mass_from_coupling(self.coupling, self.spacing)
    }
}

/// Non-negative fermion mass (units 1/length).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Mass(f64);

impl Mass {
    pub fn new(value: f64) -> Result<Self> {
        if !(value >= 0.0) || !value.is_finite() {
            return Err(Error::OutOfDomain(format!(
                "mass must be non-negative and finite, got {value}"
            )));
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0.0
    }
}

/// m = (1 - lambda)/a. Rejects lambda > 1, where the derived mass would be
/// negative: the continuum resource and lightfront formulas assume m >= 0.
pub fn mass_from_coupling(coupling: f64, spacing: f64) -> Result<Mass> {
    if !(spacing > 0.0) {
        return Err(Error::OutOfDomain(format!("spacing must be positive, got {spacing}")));
    }
    if coupling > 1.0 {
        return Err(Error::OutOfDomain(format!(
            "coupling {coupling} > 1 gives a negative continuum mass"
        )));
    }
    Mass::new((1.0 - coupling) / spacing)
}

/// Which quantization a grid belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    IfPeriodic,
    IfAntiperiodic,
    LfDlcq,
}

impl Frame {
    pub fn is_instant_form(&self) -> bool {
        matches!(self, Frame::IfPeriodic | Frame::IfAntiperiodic)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Frame::IfPeriodic => "IF-periodic",
            Frame::IfAntiperiodic => "IF-antiperiodic",
            Frame::LfDlcq => "LF-DLCQ",
        }
    }
}

/// Boundary-condition sector for instant-form grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IfSector {
    Periodic,
    Antiperiodic,
}

/// An ordered set of discrete momenta tagged by frame.
///
/// Each momentum is `step * pi/(N a)`; `steps` are sorted ascending with no
/// duplicates. Periodic grids use even steps in [-N, N-2], antiperiodic grids
/// odd steps in [-N+1, N-1], and LF-DLCQ grids even steps in [2, 2N].
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumGrid {
    frame: Frame,
    n_sites: usize,
    spacing: f64,
    steps: Vec<i64>,
}

impl MomentumGrid {
    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Momentum unit pi/(N a).
    pub fn unit(&self) -> f64 {
        PI / (self.n_sites as f64 * self.spacing)
    }

    /// Momenta in physical units, ascending.
    pub fn momenta(&self) -> Vec<f64> {
        let u = self.unit();
        self.steps.iter().map(|&s| s as f64 * u).collect()
    }

    /// Integer steps s with k = s * pi/(N a), ascending.
    pub fn steps(&self) -> &[i64] {
        &self.steps
    }

    /// k a for a given step, exact in the integers: s * pi / N.
    pub fn ka_of_step(&self, step: i64) -> f64 {
        step as f64 * PI / self.n_sites as f64
    }

    /// A step is self-conjugate when k = -k mod 2pi/a, i.e. s = 0 mod N.
    fn step_is_self_conjugate(&self, step: i64) -> bool {
        step.rem_euclid(self.n_sites as i64) == 0
    }

    /// Self-conjugate (unpaired) momenta present in the grid: k = 0 and
    /// ka = pi on periodic grids, none on antiperiodic grids.
    pub fn unpaired_momenta(&self) -> Vec<f64> {
        let u = self.unit();
        self.steps
            .iter()
            .filter(|&&s| self.step_is_self_conjugate(s))
            .map(|&s| s as f64 * u)
            .collect()
    }

    /// True when every momentum has a distinct -k partner in the grid.
    pub fn is_fully_paired(&self) -> bool {
        self.steps
            .iter()
            .all(|&s| !self.step_is_self_conjugate(s) && self.steps.binary_search(&-s).is_ok())
    }

    /// Strictly positive momenta, ascending. On both IF sectors every one of
    /// these has a -k partner in the grid.
    pub fn positive_momenta(&self) -> Vec<f64> {
        let u = self.unit();
        self.steps.iter().filter(|&&s| s > 0).map(|&s| s as f64 * u).collect()
    }

    /// Positive steps, ascending.
    pub fn positive_steps(&self) -> impl Iterator<Item = i64> + '_ {
        self.steps.iter().copied().filter(|&s| s > 0)
    }

    #[cfg(test)]
    pub(crate) fn from_raw(frame: Frame, n_sites: usize, spacing: f64, steps: Vec<i64>) -> Self {
        Self { frame, n_sites, spacing, steps }
    }
}

/// Instant-form momentum grid for the requested boundary sector.
///
/// Periodic: k_n = 2 pi n/(N a), n = -N/2 .. N/2 - 1. Antiperiodic:
/// k_n = pi (2n + 1)/(N a), same range, which pairs every mode. The
/// antiperiodic sector is what makes E0 = -sum_{k>0} 2 w_k exact at finite N;
/// the periodic grid carries the unpaired k = 0 and ka = pi modes.
pub fn make_if_grid(spec: &ChainSpec, sector: IfSector) -> MomentumGrid {
    let n = spec.n_sites as i64;
    let steps: Vec<i64> = match sector {
        IfSector::Periodic => (-n / 2..n / 2).map(|m| 2 * m).collect(),
        IfSector::Antiperiodic => (-n / 2..n / 2).map(|m| 2 * m + 1).collect(),
    };
    MomentumGrid {
        frame: match sector {
            IfSector::Periodic => Frame::IfPeriodic,
            IfSector::Antiperiodic => Frame::IfAntiperiodic,
        },
        n_sites: spec.n_sites,
        spacing: spec.spacing,
        steps,
    }
}

/// Lightfront DLCQ grid: k+_n = 2 pi n/(N a), n = 1 .. N, all strictly positive.
pub fn make_lf_grid(spec: &ChainSpec) -> MomentumGrid {
    let n = spec.n_sites as i64;
    MomentumGrid {
        frame: Frame::LfDlcq,
        n_sites: spec.n_sites,
        spacing: spec.spacing,
        steps: (1..=n).map(|m| 2 * m).collect(),
    }
}

/// Lattice dispersion w_k = sqrt(lambda^2 - 2 lambda cos(ka) + 1), computed as
/// hypot(lambda - cos ka, sin ka) so it is exactly non-negative.
pub fn lattice_dispersion(k: f64, coupling: f64, spacing: f64) -> f64 {
    let ka = k * spacing;
    (coupling - ka.cos()).hypot(ka.sin())
}

/// Continuum dispersion w_k = sqrt(m^2 + k^2).
pub fn continuum_dispersion(k: f64, mass: Mass) -> f64 {
    mass.value().hypot(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} != {b} (tol {tol})");
    }

    fn spec(n: usize, a: f64) -> ChainSpec {
        ChainSpec::new(n, a, 1.0).unwrap()
    }

    #[test]
    fn chain_spec_rejects_bad_parameters() {
        assert!(ChainSpec::new(5, 1.0, 1.0).is_err());
        assert!(ChainSpec::new(2, 1.0, 1.0).is_err());
        assert!(ChainSpec::new(0, 1.0, 1.0).is_err());
        assert!(ChainSpec::new(4, 0.0, 1.0).is_err());
        assert!(ChainSpec::new(4, -1.0, 1.0).is_err());
        assert!(ChainSpec::new(4, 1.0, -0.5).is_err());
        assert!(ChainSpec::new(4, 1.0, 3.0).is_ok());
    }

    #[test]
    fn periodic_grid_n4() {
        let g = make_if_grid(&spec(4, 1.0), IfSector::Periodic);
        let expect = [-PI, -PI / 2.0, 0.0, PI / 2.0];
        for (k, e) in g.momenta().iter().zip(expect) {
            assert_close(*k, e, TOL);
        }
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn antiperiodic_grid_n4() {
        let g = make_if_grid(&spec(4, 1.0), IfSector::Antiperiodic);
        let expect = [-3.0 * PI / 4.0, -PI / 4.0, PI / 4.0, 3.0 * PI / 4.0];
        for (k, e) in g.momenta().iter().zip(expect) {
            assert_close(*k, e, TOL);
        }
    }

    #[test]
    fn periodic_grid_scales_with_spacing() {
        let g = make_if_grid(&spec(4, 0.5), IfSector::Periodic);
        let expect = [-2.0 * PI, -PI, 0.0, PI];
        for (k, e) in g.momenta().iter().zip(expect) {
            assert_close(*k, e, TOL);
        }
    }

    #[test]
    fn lf_grid_n4() {
        let g = make_lf_grid(&spec(4, 1.0));
        let expect = [PI / 2.0, PI, 3.0 * PI / 2.0, 2.0 * PI];
        for (k, e) in g.momenta().iter().zip(expect) {
            assert_close(*k, e, TOL);
        }
        assert!(g.momenta().iter().all(|&k| k > 0.0));
    }

    #[test]
    fn lf_grid_scales_with_spacing() {
        // The N=2 formula case k+_n = 2 pi n/(N a) is covered by scaling:
        // ChainSpec enforces N >= 4, so scale checks stand in for tiny N.
        let g = make_lf_grid(&spec(4, 2.0));
        let expect = [PI / 4.0, PI / 2.0, 3.0 * PI / 4.0, PI];
        for (k, e) in g.momenta().iter().zip(expect) {
            assert_close(*k, e, TOL);
        }
    }

    #[test]
    fn grid_counts_and_pairing() {
        for n in [4usize, 6, 8, 10] {
            let s = spec(n, 0.7);
            let p = make_if_grid(&s, IfSector::Periodic);
            let ap = make_if_grid(&s, IfSector::Antiperiodic);
            let lf = make_lf_grid(&s);
            assert_eq!(p.len(), n);
            assert_eq!(ap.len(), n);
            assert_eq!(lf.len(), n);

            // Periodic: exactly two self-conjugate momenta, k = 0 and k = -pi/a.
            let unpaired = p.unpaired_momenta();
            assert_eq!(unpaired.len(), 2);
            assert_close(unpaired[0], -PI / s.spacing(), 1e-12);
            assert_close(unpaired[1], 0.0, TOL);
            assert!(!p.is_fully_paired());

            // Antiperiodic: fully paired, -k present for every k.
            assert!(ap.is_fully_paired());
            assert!(ap.unpaired_momenta().is_empty());
            for &s_ in ap.steps() {
                assert!(ap.steps().binary_search(&-s_).is_ok());
            }
        }
    }

    #[test]
    fn dispersion_pinned_values() {
        assert_close(lattice_dispersion(PI, 1.0, 1.0), 2.0, TOL);
        assert_close(lattice_dispersion(0.0, 0.5, 1.0), 0.5, TOL);
        assert_close(lattice_dispersion(PI / 2.0, 2.0, 1.0), 5.0f64.sqrt(), TOL);

        let m = Mass::new(1.0).unwrap();
        assert_close(continuum_dispersion(0.0, m), 1.0, TOL);
        let m = Mass::new(4.0).unwrap();
        assert_close(continuum_dispersion(3.0, m), 5.0, TOL);
        let m = Mass::new(2.5).unwrap();
        assert_close(continuum_dispersion(2.5, m), 2.5 * 2.0f64.sqrt(), TOL);
    }

    #[test]
    fn dispersion_symmetry_and_bounds() {
        for i in 0..100 {
            let k = -PI + 2.0 * PI * (i as f64 + 0.5) / 100.0;
            for lam in [0.0, 0.3, 1.0, 1.7, 3.0] {
                let w = lattice_dispersion(k, lam, 1.0);
                assert_close(w, lattice_dispersion(-k, lam, 1.0), TOL);
                assert!(w >= (lam - 1.0).abs() - TOL);
                assert!(w <= lam + 1.0 + TOL);
            }
        }
        // Extremes sit at k = 0 and ka = pi.
        for lam in [0.0, 0.5, 2.0] {
            assert_close(lattice_dispersion(0.0, lam, 1.0), (lam - 1.0).abs(), TOL);
            assert_close(lattice_dispersion(PI, lam, 1.0), lam + 1.0, TOL);
        }
    }

    #[test]
    fn critical_point_identity() {
        // lambda = 1: w_k = 2 |sin(ka/2)|.
        for i in 0..100 {
            let k = -PI + 2.0 * PI * (i as f64 + 1.0) / 100.0;
            let w = lattice_dispersion(k, 1.0, 1.0);
            assert_close(w, 2.0 * (k / 2.0).sin().abs(), 1e-12);
        }
    }

    #[test]
    fn small_k_continuum_limit() {
        // ka and (1 - lambda) both <= 1e-3: lattice/continuum ratio within 1e-3.
        for &(k, one_minus_lam) in
            &[(1e-3, 1e-3), (1e-3, 1e-6), (5e-4, 2e-4), (1e-4, 1e-4), (1e-3, 0.0)]
        {
            let lam = 1.0 - one_minus_lam;
            let m = mass_from_coupling(lam, 1.0).unwrap();
            let ratio = lattice_dispersion(k, lam, 1.0) / continuum_dispersion(k, m);
            assert!((ratio - 1.0).abs() < 1e-3, "ratio {ratio} at k={k}, 1-lam={one_minus_lam}");
        }
    }

    #[test]
    fn mass_from_coupling_values() {
        assert_close(mass_from_coupling(1.0, 0.1).unwrap().value(), 0.0, TOL);
        assert_close(mass_from_coupling(0.5, 0.5).unwrap().value(), 1.0, TOL);
        assert_close(mass_from_coupling(0.9, 0.01).unwrap().value(), 10.0, 1e-9);
        assert!(mass_from_coupling(1.5, 1.0).is_err());
        assert!(Mass::new(-0.1).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn dispersion_even_and_bounded(k in -10.0f64..10.0, lam in 0.0f64..5.0) {
                let w = lattice_dispersion(k, lam, 1.0);
                prop_assert!((w - lattice_dispersion(-k, lam, 1.0)).abs() < 1e-12);
                prop_assert!(w >= (lam - 1.0).abs() - 1e-12);
                prop_assert!(w <= lam + 1.0 + 1e-12);
            }

            #[test]
            fn grids_pair_correctly(half in 2usize..8) {
                let n = 2 * half;
                let s = ChainSpec::new(n, 1.0, 1.0).unwrap();
                let ap = make_if_grid(&s, IfSector::Antiperiodic);
                prop_assert!(ap.is_fully_paired());
                prop_assert_eq!(ap.len(), n);
                let p = make_if_grid(&s, IfSector::Periodic);
                prop_assert_eq!(p.unpaired_momenta().len(), 2);
            }
        }
    }
}
