//! The verification harness behind `isingfront verify`: runs every module
//! invariant at N in {4, 6, 8} and reports one pass/fail line per check.
//!
//! Sampled checks draw from a seeded generator, so the sampled points change
//! with `--seed` but the outcomes must not. The `omega_factor` hook scales
//! the analytic dispersion used on the expected side of cross-checks; any
//! value other than 1.0 must fail the suite (harness sanity).

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::{FRAC_PI_4, LN_2, PI};

use isingfront::bogoliubov::{
    block_ground_state, block_hamiltonian, bogoliubov_angle_continuum, bogoliubov_angle_lattice,
    bogoliubov_rotation, build_if_ground_state, quasiparticle_operators,
};
use isingfront::exactdiag::{
    brute_force_sre, build_fermion_hamiltonian, entanglement_entropy, ground_state, jw_operator,
    pauli_expectation, DenseOperator, PauliString, StateVector,
};
use isingfront::lattice::{
    lattice_dispersion, make_if_grid, make_lf_grid, mass_from_coupling, ChainSpec, IfSector, Mass,
};
use isingfront::lightfront::{mass_shell_check, massless_lf_spectrum, LfEigenstate};
use isingfront::resources::{
    analytic_m2_contribution, block_pauli_table, if_resource_report, lf_resource_report,
    pair_entanglement_entropy,
};
use num_complex::Complex64;

pub struct VerifyConfig {
    pub seed: u64,
    pub q: u32,
    /// Multiplies the analytic dispersion on the expected side; 1.0 in
    /// normal operation, any other value is an injected fault.
    pub omega_factor: f64,
}

pub struct CheckResult {
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome.is_ok())
    }
}

struct Ctx {
    rng: StdRng,
    q: u32,
    omega_factor: f64,
}

impl Ctx {
    /// Analytic dispersion on the expected side of cross-checks, with the
    /// fault-injection hook applied.
    fn omega(&self, k: f64, lam: f64, a: f64) -> f64 {
        self.omega_factor * lattice_dispersion(k, lam, a)
    }
}

const SIZES: [usize; 3] = [4, 6, 8];
const COUPLINGS: [f64; 6] = [0.0, 0.3, 0.7, 1.0, 1.5, 3.0];

fn chain(n: usize, lam: f64) -> ChainSpec {
    ChainSpec::new(n, 1.0, lam).expect("valid chain")
}

fn mass(m: f64) -> Mass {
    Mass::new(m).expect("valid mass")
}

fn fail(msg: String) -> Result<(), String> {
    Err(msg)
}

fn check_grid_counts(_: &mut Ctx) -> Result<(), String> {
    for n in SIZES {
        let s = chain(n, 1.0);
        for grid in [
            make_if_grid(&s, IfSector::Periodic),
            make_if_grid(&s, IfSector::Antiperiodic),
            make_lf_grid(&s),
        ] {
            if grid.len() != n {
                return fail(format!("{} grid at N={n} has {} entries", grid.frame().name(), grid.len()));
            }
        }
    }
    Ok(())
}

fn check_antiperiodic_pairing(_: &mut Ctx) -> Result<(), String> {
    for n in SIZES {
        let grid = make_if_grid(&chain(n, 1.0), IfSector::Antiperiodic);
        if !grid.is_fully_paired() {
            return fail(format!("antiperiodic grid at N={n} is not fully paired"));
        }
    }
    Ok(())
}

fn check_periodic_self_conjugate(_: &mut Ctx) -> Result<(), String> {
    for n in SIZES {
        let grid = make_if_grid(&chain(n, 1.0), IfSector::Periodic);
        let unpaired = grid.unpaired_momenta();
        if unpaired.len() != 2 {
            return fail(format!("periodic grid at N={n}: {} self-conjugate modes", unpaired.len()));
        }
        if unpaired[1].abs() > 1e-12 || (unpaired[0] + PI).abs() > 1e-12 {
            return fail(format!("periodic self-conjugate modes {unpaired:?}"));
        }
    }
    Ok(())
}

fn check_dispersion_symmetry(ctx: &mut Ctx) -> Result<(), String> {
    for _ in 0..200 {
        let k = ctx.rng.gen_range(-10.0..10.0);
        let lam = ctx.rng.gen_range(0.0..4.0);
        let d = (lattice_dispersion(k, lam, 1.0) - lattice_dispersion(-k, lam, 1.0)).abs();
        if d > 1e-12 {
            return fail(format!("omega asymmetry {d} at k={k}, lambda={lam}"));
        }
    }
    Ok(())
}

fn check_dispersion_bounds(ctx: &mut Ctx) -> Result<(), String> {
    for _ in 0..200 {
        let k = ctx.rng.gen_range(-PI..PI);
        let lam = ctx.rng.gen_range(0.0..4.0);
        let w = lattice_dispersion(k, lam, 1.0);
        if w < (lam - 1.0).abs() - 1e-12 || w > lam + 1.0 + 1e-12 {
            return fail(format!("omega {w} outside bounds at k={k}, lambda={lam}"));
        }
    }
    for lam in [0.0, 0.6, 2.5] {
        if (lattice_dispersion(0.0, lam, 1.0) - (lam - 1.0).abs()).abs() > 1e-12 {
            return fail(format!("minimum not at k=0 for lambda={lam}"));
        }
        if (lattice_dispersion(PI, lam, 1.0) - (lam + 1.0)).abs() > 1e-12 {
            return fail(format!("maximum not at ka=pi for lambda={lam}"));
        }
    }
    Ok(())
}

fn check_critical_identity(ctx: &mut Ctx) -> Result<(), String> {
    for _ in 0..100 {
        let k = ctx.rng.gen_range(-PI..PI);
        let w = ctx.omega(k, 1.0, 1.0);
        if (w - 2.0 * (k / 2.0).sin().abs()).abs() > 1e-12 {
            return fail(format!("critical identity violated at k={k}"));
        }
    }
    Ok(())
}

fn check_continuum_limit(_: &mut Ctx) -> Result<(), String> {
    for (k, one_minus_lam) in [(1e-3, 1e-6), (5e-4, 1e-4), (1e-4, 1e-4)] {
        let lam = 1.0 - one_minus_lam;
        let m = mass_from_coupling(lam, 1.0).map_err(|e| e.to_string())?;
        let ratio = lattice_dispersion(k, lam, 1.0) / m.value().hypot(k);
        if (ratio - 1.0).abs() > 1e-3 {
            return fail(format!("dispersion ratio {ratio} at ka={k}"));
        }
    }
    Ok(())
}

fn check_car_relations(_: &mut Ctx) -> Result<(), String> {
    for n in [4usize, 6] {
        let cs: Vec<DenseOperator> = (1..=n)
            .map(|j| jw_operator(j, n).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        let id = DenseOperator::identity(1 << n);
        let zero = DenseOperator::zeros(1 << n);
        for j in 0..n {
            for l in 0..n {
                let bdag = cs[l].adjoint();
                let anti = &(&cs[j] * &bdag) + &(&bdag * &cs[j]);
                let expect = if j == l { &id } else { &zero };
                let dev = (anti.matrix() - expect.matrix())
                    .iter()
                    .map(|z| z.norm())
                    .fold(0.0, f64::max);
                if dev > 1e-14 {
                    return fail(format!("CAR {{c_{j}, c+_{l}}} deviation {dev} at N={n}"));
                }
                let anti2 = &(&cs[j] * &cs[l]) + &(&cs[l] * &cs[j]);
                let dev2 = anti2.matrix().iter().map(|z| z.norm()).fold(0.0, f64::max);
                if dev2 > 1e-14 {
                    return fail(format!("CAR {{c_{j}, c_{l}}} deviation {dev2} at N={n}"));
                }
            }
        }
    }
    Ok(())
}

fn check_oracle_energies(ctx: &mut Ctx) -> Result<(), String> {
    for n in SIZES {
        for &lam in &COUPLINGS {
            let s = chain(n, lam);
            let dense = ground_state(&build_fermion_hamiltonian(&s, IfSector::Antiperiodic).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
                .energy;
            let grid = make_if_grid(&s, IfSector::Antiperiodic);
            let analytic: f64 =
                grid.positive_momenta().iter().map(|&k| -2.0 * ctx.omega(k, lam, 1.0)).sum();
            if (dense - analytic).abs() > 1e-10 * analytic.abs() {
                return fail(format!("N={n} lambda={lam}: dense {dense} vs analytic {analytic}"));
            }
        }
    }
    Ok(())
}

fn check_full_spectrum(ctx: &mut Ctx) -> Result<(), String> {
    for n in [4usize, 6] {
        for &lam in &COUPLINGS {
            let s = chain(n, lam);
            let dense = build_fermion_hamiltonian(&s, IfSector::Antiperiodic)
                .and_then(|h| h.hermitian_eigenvalues())
                .map_err(|e| e.to_string())?;
            let grid = make_if_grid(&s, IfSector::Antiperiodic);
            let mut recon = vec![0.0f64];
            for &k in &grid.positive_momenta() {
                let w = ctx.omega(k, lam, 1.0);
                recon = recon
                    .iter()
                    .flat_map(|&b| [b - 2.0 * w, b, b, b + 2.0 * w])
                    .collect();
            }
            recon.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (d, r) in dense.iter().zip(&recon) {
                if (d - r).abs() > 1e-9 {
                    return fail(format!("N={n} lambda={lam}: spectrum {d} vs reconstruction {r}"));
                }
            }
        }
    }
    Ok(())
}

fn check_stabilizer_sre_zero(ctx: &mut Ctx) -> Result<(), String> {
    let q = ctx.q;
    let f = std::f64::consts::FRAC_1_SQRT_2;
    let c = Complex64::new;
    let mut states: Vec<StateVector> = Vec::new();
    for n in 1..=4 {
        states.push(StateVector::basis_state(n, 0).map_err(|e| e.to_string())?);
        states.push(StateVector::basis_state(n, (1 << n) - 1).map_err(|e| e.to_string())?);
    }
    let plus = StateVector::from_amplitudes(vec![c(f, 0.0), c(f, 0.0)]).map_err(|e| e.to_string())?;
    let y_plus = StateVector::from_amplitudes(vec![c(f, 0.0), c(0.0, f)]).map_err(|e| e.to_string())?;
    states.push(plus.kron(&y_plus));
    states.push(
        StateVector::from_amplitudes(vec![c(f, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -f)])
            .map_err(|e| e.to_string())?,
    );
    for n in 2..=5 {
        let mut amps = vec![c(0.0, 0.0); 1 << n];
        amps[0] = c(f, 0.0);
        amps[(1 << n) - 1] = c(f, 0.0);
        states.push(StateVector::from_amplitudes(amps).map_err(|e| e.to_string())?);
    }
    for (i, s) in states.iter().enumerate() {
        let m = brute_force_sre(s, q).map_err(|e| e.to_string())?;
        if m.abs() > 1e-10 {
            return fail(format!("stabilizer state {i} has M_{q} = {m}"));
        }
    }
    Ok(())
}

fn check_sre_permutation_invariance(ctx: &mut Ctx) -> Result<(), String> {
    let n = 3usize;
    let amps: Vec<Complex64> = (0..1 << n)
        .map(|_| Complex64::new(ctx.rng.gen_range(-1.0..1.0), ctx.rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let amps: Vec<Complex64> = amps.iter().map(|z| z / norm).collect();
    let state = StateVector::from_amplitudes(amps).map_err(|e| e.to_string())?;
    let m = brute_force_sre(&state, 2).map_err(|e| e.to_string())?;
    for perm in [[1usize, 2, 0], [2, 1, 0], [0, 2, 1]] {
        let p = state.permute_qubits(&perm).map_err(|e| e.to_string())?;
        let mp = brute_force_sre(&p, 2).map_err(|e| e.to_string())?;
        if (m - mp).abs() > 1e-10 {
            return fail(format!("M2 changed under permutation {perm:?}: {m} vs {mp}"));
        }
    }
    Ok(())
}

fn check_block_diagonalization(ctx: &mut Ctx) -> Result<(), String> {
    for _ in 0..200 {
        let ka = ctx.rng.gen_range(1e-3..PI - 1e-3);
        let lam = ctx.rng.gen_range(0.0..4.0);
        let h = block_hamiltonian(ka, lam, 1.0).map_err(|e| e.to_string())?;
        let theta = bogoliubov_angle_lattice(ka, lam, 1.0).map_err(|e| e.to_string())?;
        let u = bogoliubov_rotation(theta);
        let d = &(&u.adjoint() * &h) * &u;
        let w = ctx.omega(ka, lam, 1.0);
        for r in 0..4 {
            for s in 0..4 {
                let want = match (r, s) {
                    (0, 0) => -2.0 * w,
                    (3, 3) => 2.0 * w,
                    _ => 0.0,
                };
                if (d.matrix()[(r, s)] - Complex64::new(want, 0.0)).norm() > 1e-10 {
                    return fail(format!("block not diagonalized at ka={ka}, lambda={lam}"));
                }
            }
        }
    }
    Ok(())
}

fn check_trig_identities(ctx: &mut Ctx) -> Result<(), String> {
    for _ in 0..200 {
        let ka = ctx.rng.gen_range(1e-3..PI - 1e-3);
        let lam = ctx.rng.gen_range(0.0..4.0);
        let theta = bogoliubov_angle_lattice(ka, lam, 1.0).map_err(|e| e.to_string())?;
        let w = ctx.omega(ka, lam, 1.0);
        if ((2.0 * theta).cos() * w - (lam - ka.cos())).abs() > 1e-12
            || ((2.0 * theta).sin() * w - ka.sin()).abs() > 1e-12
        {
            return fail(format!("trig identity violated at ka={ka}, lambda={lam}"));
        }
    }
    Ok(())
}

fn check_angle_consistency(_: &mut Ctx) -> Result<(), String> {
    for ka in [1e-3f64, 5e-4, 1e-4] {
        let one_minus_lam = ka * ka * ka;
        let m = mass(one_minus_lam);
        let theta = bogoliubov_angle_lattice(ka, 1.0 - one_minus_lam, 1.0).map_err(|e| e.to_string())?;
        let phi = bogoliubov_angle_continuum(ka, m).map_err(|e| e.to_string())?;
        if ((theta - phi) / phi).abs() > 1e-3 {
            return fail(format!("angle mismatch at ka={ka}: {theta} vs {phi}"));
        }
    }
    Ok(())
}

fn check_ground_annihilation(ctx: &mut Ctx) -> Result<(), String> {
    for _ in 0..50 {
        let ka = ctx.rng.gen_range(1e-2..PI - 1e-2);
        let lam = ctx.rng.gen_range(0.0..3.0);
        let theta = bogoliubov_angle_lattice(ka, lam, 1.0).map_err(|e| e.to_string())?;
        let g = block_ground_state(theta).map_err(|e| e.to_string())?;
        let gv = StateVector::from_amplitudes(g.amplitudes().to_vec()).map_err(|e| e.to_string())?;
        let (eta_k, eta_mk) = quasiparticle_operators(theta);
        let r1 = eta_k.apply(&gv).map_err(|e| e.to_string())?.norm();
        let r2 = eta_mk.apply(&gv).map_err(|e| e.to_string())?.norm();
        if r1 > 1e-12 || r2 > 1e-12 {
            return fail(format!("ground state not annihilated at ka={ka}: {r1}, {r2}"));
        }
    }
    Ok(())
}

fn check_excitation_ladder(ctx: &mut Ctx) -> Result<(), String> {
    for _ in 0..50 {
        let ka = ctx.rng.gen_range(1e-2..PI - 1e-2);
        let lam = ctx.rng.gen_range(0.0..3.0);
        let h = block_hamiltonian(ka, lam, 1.0).map_err(|e| e.to_string())?;
        let theta = bogoliubov_angle_lattice(ka, lam, 1.0).map_err(|e| e.to_string())?;
        let w = ctx.omega(ka, lam, 1.0);
        let (eta_k, eta_mk) = quasiparticle_operators(theta);
        let g = block_ground_state(theta).map_err(|e| e.to_string())?;
        let mut v = StateVector::from_amplitudes(g.amplitudes().to_vec()).map_err(|e| e.to_string())?;
        let mut prev = h.expectation(&v).map_err(|e| e.to_string())?.re;
        if (prev + 2.0 * w).abs() > 1e-12 {
            return fail(format!("block ground energy {prev} != -2w at ka={ka}"));
        }
        for op in [&eta_k.adjoint(), &eta_mk.adjoint()] {
            let raised = op.apply(&v).map_err(|e| e.to_string())?;
            let norm = raised.norm();
            let amps: Vec<Complex64> = raised.iter().map(|z| z / norm).collect();
            v = StateVector::from_amplitudes(amps).map_err(|e| e.to_string())?;
            let e = h.expectation(&v).map_err(|e| e.to_string())?.re;
            if (e - prev - 2.0 * w).abs() > 1e-12 {
                return fail(format!("quasiparticle step {} != 2w at ka={ka}", e - prev));
            }
            prev = e;
        }
    }
    Ok(())
}

fn check_shell_identity(ctx: &mut Ctx) -> Result<(), String> {
    for _ in 0..100 {
        let k_plus = ctx.rng.gen_range(0.05..20.0);
        let m = mass(ctx.rng.gen_range(0.0..5.0));
        let p = mass_shell_check(k_plus, m).map_err(|e| e.to_string())?;
        let m2 = m.value() * m.value();
        if (p.k0 * p.k0 - p.k1 * p.k1 - m2).abs() > 1e-12 * (1.0 + m2) {
            return fail(format!("shell identity violated at k+={k_plus}, m={}", m.value()));
        }
        if (p.k0 + p.k1 - k_plus).abs() > 1e-12 * (1.0 + k_plus) {
            return fail(format!("k+ reconstruction failed at k+={k_plus}"));
        }
    }
    Ok(())
}

fn check_frame_consistency(_: &mut Ctx) -> Result<(), String> {
    for n in SIZES {
        let s = chain(n, 0.5);
        let grid = make_lf_grid(&s);
        for m in [0.3, 1.0, 2.5] {
            let m = mass(m);
            for &k_plus in &grid.momenta() {
                let p = mass_shell_check(k_plus, m).map_err(|e| e.to_string())?;
                let lf_e = (k_plus + m.value() * m.value() / k_plus) / 2.0;
                let if_e = m.value().hypot(p.k1);
                if (lf_e - if_e).abs() > 1e-12 * (1.0 + if_e) {
                    return fail(format!("frame mismatch at k+={k_plus}, m={}", m.value()));
                }
            }
        }
    }
    Ok(())
}

fn check_lf_separability(_: &mut Ctx) -> Result<(), String> {
    for n in SIZES {
        let s = chain(n, 0.5);
        let grid = make_lf_grid(&s);
        let momenta = grid.momenta();
        let occ: Vec<f64> = momenta.iter().step_by(2).copied().collect();
        let psi = LfEigenstate::new(occ)
            .and_then(|e| e.to_state_vector(&grid))
            .map_err(|e| e.to_string())?;
        for cut in 1..n {
            let keep: Vec<usize> = (0..cut).collect();
            let ent = entanglement_entropy(&psi, &keep).map_err(|e| e.to_string())?;
            if ent > 1e-12 {
                return fail(format!("LF eigenstate entangled across cut {cut} at N={n}: {ent}"));
            }
        }
    }
    Ok(())
}

fn check_massless_equivalence(_: &mut Ctx) -> Result<(), String> {
    for n in SIZES {
        for sector in [IfSector::Periodic, IfSector::Antiperiodic] {
            let grid = make_if_grid(&chain(n, 1.0), sector);
            let table = massless_lf_spectrum(&grid).map_err(|e| e.to_string())?;
            let mut want: Vec<f64> = grid
                .momenta()
                .iter()
                .filter(|&&k| k < 0.0)
                .map(|&k| 2.0 * k.abs())
                .collect();
            want.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let got = table.energies();
            if got.len() != want.len() || got.iter().zip(&want).any(|(g, w)| g != w) {
                return fail(format!("massless spectrum mismatch at N={n}"));
            }
        }
    }
    Ok(())
}

fn check_table_completeness(ctx: &mut Ctx) -> Result<(), String> {
    for _ in 0..50 {
        let phi = ctx.rng.gen_range(0.01..FRAC_PI_4 - 0.01);
        let table = block_pauli_table(phi);
        let psi = StateVector::from_amplitudes(vec![
            Complex64::new(phi.cos(), 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -phi.sin()),
        ])
        .map_err(|e| e.to_string())?;
        let mut zeros = 0;
        for (l, r, v) in table.entries() {
            let oracle = pauli_expectation(&psi, &PauliString::new(vec![l, r]))
                .map_err(|e| e.to_string())?;
            if (v - oracle).abs() > 1e-12 {
                return fail(format!("table entry {}{} = {v} vs oracle {oracle}", l.label(), r.label()));
            }
            if oracle.abs() < 1e-12 {
                zeros += 1;
            }
        }
        if zeros != 10 {
            return fail(format!("{zeros} zero entries at phi={phi}, expected 10"));
        }
    }
    Ok(())
}

fn check_per_block_identity(ctx: &mut Ctx) -> Result<(), String> {
    for _ in 0..100 {
        let phi = ctx.rng.gen_range(0.0..FRAC_PI_4);
        let c4 = (2.0 * phi).cos().powi(4);
        let s4 = (2.0 * phi).sin().powi(4);
        let a = -((1.0 + c4 + s4) / 2.0).ln();
        let s2c2 = ((2.0 * phi).sin() * (2.0 * phi).cos()).powi(2);
        let b = -(1.0 - s2c2).ln();
        if (a - b).abs() > 1e-14 {
            return fail(format!("the two magic forms differ by {} at phi={phi}", a - b));
        }
    }
    Ok(())
}

fn check_sre_oracle_equivalence(_: &mut Ctx) -> Result<(), String> {
    for n in [4usize, 6] {
        let grid = make_if_grid(&chain(n, 1.0), IfSector::Antiperiodic);
        for m in [0.0, 0.5, 1.0, 2.0] {
            let m = mass(m);
            let analytic = if_resource_report(&grid, m).map_err(|e| e.to_string())?.total_m2;
            let psi = build_if_ground_state(&grid, m)
                .map_err(|e| e.to_string())?
                .to_state_vector();
            let brute = brute_force_sre(&psi, 2).map_err(|e| e.to_string())?;
            if (analytic - brute).abs() > 1e-10 {
                return fail(format!("N={n} m={}: analytic {analytic} vs brute {brute}", m.value()));
            }
        }
    }
    Ok(())
}

fn check_m2_positivity_peak(_: &mut Ctx) -> Result<(), String> {
    let m = mass(1.3);
    let mut best = (0.0f64, -1.0f64);
    for i in 1..=500 {
        let k = 0.01 * i as f64;
        let v = analytic_m2_contribution(k, m);
        if v < 0.0 {
            return fail(format!("negative magic contribution at k={k}"));
        }
        if v > best.1 {
            best = (k, v);
        }
    }
    if (best.0 - m.value()).abs() > 0.01 + 1e-12 {
        return fail(format!("peak at k={} rather than k=m={}", best.0, m.value()));
    }
    Ok(())
}

fn check_if_lf_ordering(_: &mut Ctx) -> Result<(), String> {
    for n in SIZES {
        let s = chain(n, 0.5);
        let grid = make_if_grid(&s, IfSector::Antiperiodic);
        for m in [0.5, 1.0, 2.0] {
            let m = mass(m);
            let if_r = if_resource_report(&grid, m).map_err(|e| e.to_string())?;
            let lf_r = lf_resource_report(&s, m);
            if !(if_r.total_m2 > lf_r.total_m2 && lf_r.total_m2 == 0.0) {
                return fail(format!("ordering violated at N={n}, m={}", m.value()));
            }
        }
        let if_r = if_resource_report(&grid, mass(0.0)).map_err(|e| e.to_string())?;
        if if_r.total_m2.abs() > 1e-14 {
            return fail(format!("critical magic {} != 0 at N={n}", if_r.total_m2));
        }
        if (if_r.total_entropy - (n as f64 / 2.0) * LN_2).abs() > 1e-12 {
            return fail(format!("critical entropy {} at N={n}", if_r.total_entropy));
        }
    }
    Ok(())
}

fn check_entropy_bounds(ctx: &mut Ctx) -> Result<(), String> {
    for _ in 0..200 {
        let phi = ctx.rng.gen_range(0.0..FRAC_PI_4);
        let s = pair_entanglement_entropy(phi);
        if !(0.0..=LN_2 + 1e-14).contains(&s) {
            return fail(format!("entropy {s} outside [0, ln 2] at phi={phi}"));
        }
    }
    if pair_entanglement_entropy(0.0).abs() > 1e-14 {
        return fail("entropy at phi=0 not zero".into());
    }
    if (pair_entanglement_entropy(FRAC_PI_4) - LN_2).abs() > 1e-14 {
        return fail("entropy at phi=pi/4 not ln 2".into());
    }
    Ok(())
}

type Check = (&'static str, fn(&mut Ctx) -> Result<(), String>);

const CHECKS: [Check; 24] = [
    ("lattice: grid counts", check_grid_counts),
    ("lattice: antiperiodic pairing", check_antiperiodic_pairing),
    ("lattice: periodic self-conjugate modes", check_periodic_self_conjugate),
    ("lattice: dispersion symmetry", check_dispersion_symmetry),
    ("lattice: dispersion bounds", check_dispersion_bounds),
    ("lattice: critical-point identity", check_critical_identity),
    ("lattice: continuum limit", check_continuum_limit),
    ("exactdiag: canonical anticommutation", check_car_relations),
    ("exactdiag: oracle ground energies", check_oracle_energies),
    ("exactdiag: full spectrum reconstruction", check_full_spectrum),
    ("exactdiag: stabilizer states have zero magic", check_stabilizer_sre_zero),
    ("exactdiag: magic permutation invariance", check_sre_permutation_invariance),
    ("bogoliubov: block diagonalization", check_block_diagonalization),
    ("bogoliubov: trig identities", check_trig_identities),
    ("bogoliubov: lattice-continuum angle limit", check_angle_consistency),
    ("bogoliubov: ground state annihilated", check_ground_annihilation),
    ("bogoliubov: excitation ladder", check_excitation_ladder),
    ("lightfront: mass-shell identity", check_shell_identity),
    ("lightfront: frame consistency", check_frame_consistency),
    ("lightfront: separability spot checks", check_lf_separability),
    ("lightfront: massless frame equivalence", check_massless_equivalence),
    ("resources: expectation table completeness", check_table_completeness),
    ("resources: per-block magic identity", check_per_block_identity),
    ("resources: magic oracle equivalence", check_sre_oracle_equivalence),
];

const EXTRA_CHECKS: [Check; 3] = [
    ("resources: magic positivity and peak", check_m2_positivity_peak),
    ("resources: IF above LF ordering", check_if_lf_ordering),
    ("resources: entropy bounds", check_entropy_bounds),
];

pub fn run(config: &VerifyConfig) -> Report {
    let mut ctx = Ctx {
        rng: StdRng::seed_from_u64(config.seed),
        q: config.q,
        omega_factor: config.omega_factor,
    };
    let mut checks = Vec::new();
    for (name, f) in CHECKS.iter().chain(EXTRA_CHECKS.iter()) {
        checks.push(CheckResult { name, outcome: f(&mut ctx) });
    }
    Report { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes_for_any_seed() {
        for seed in [0u64, 42] {
            let report = run(&VerifyConfig { seed, q: 2, omega_factor: 1.0 });
            for c in &report.checks {
                assert!(c.outcome.is_ok(), "{}: {:?}", c.name, c.outcome);
            }
        }
    }

    #[test]
    fn injected_omega_fault_fails() {
        let report = run(&VerifyConfig { seed: 42, q: 2, omega_factor: 1.0 + 1e-3 });
        assert!(!report.all_passed());
    }
}
