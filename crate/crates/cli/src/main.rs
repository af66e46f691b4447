//! Command-line frontend: spectrum tables, resource reports, coupling
//! sweeps, the massless critical-point comparison, and the verification
//! harness. Output is long-format CSV (default) or JSON.

mod output;
mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use isingfront::bogoliubov::if_excitation_energy;
use isingfront::lattice::{
    lattice_dispersion, make_if_grid, mass_from_coupling, ChainSpec, IfSector, Mass,
};
use isingfront::lightfront::{lf_spectrum, massless_lf_spectrum};
use isingfront::resources::{if_resource_report, lf_resource_report, magic_sweep};

use output::{write_csv, write_json, Cell, Table};

#[derive(Parser)]
#[command(
    name = "isingfront",
    version,
    about = "Instant-form vs lightfront quantization of the transverse-field Ising chain",
    after_help = "Physics flags take either --lambda (with --a) or --mass; the other is derived\n\
                  through m = (1 - lambda)/a. Floating-point output carries 12 significant digits."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dispersion table: IF rows (k, omega, excitation) or LF rows (k+, energy)
    Spectrum(SpectrumArgs),
    /// Per-block entanglement and magic, IF and LF side by side, with totals
    Resources(ResourcesArgs),
    /// Sweep the coupling over [0, 1] and tabulate the resource totals
    Sweep(SweepArgs),
    /// Massless critical point: LF spectrum in k- against the IF excitations
    Massless(MasslessArgs),
    /// Run the full invariant suite at N in {4, 6, 8}; exit 0 iff all pass
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FrameArg {
    If,
    Lf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SectorArg {
    Periodic,
    Antiperiodic,
}

impl From<SectorArg> for IfSector {
    fn from(s: SectorArg) -> IfSector {
        match s {
            SectorArg::Periodic => IfSector::Periodic,
            SectorArg::Antiperiodic => IfSector::Antiperiodic,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct PhysicsArgs {
    /// Number of sites N (even, >= 4)
    #[arg(long)]
    n: usize,
    /// Lattice spacing a
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    /// Transverse coupling lambda; derives m = (1 - lambda)/a
    #[arg(long, conflicts_with = "mass")]
    lambda: Option<f64>,
    /// Fermion mass m; derives lambda = 1 - m a (requires m a <= 1)
    #[arg(long)]
    mass: Option<f64>,
}

impl PhysicsArgs {
    fn coupling(&self) -> Result<f64, String> {
        match (self.lambda, self.mass) {
            (Some(lam), None) => Ok(lam),
            (None, Some(m)) => {
                let lam = 1.0 - m * self.a;
                if lam < 0.0 {
                    Err(format!(
                        "mass {m} with spacing {} implies coupling {lam} < 0; lattice \
                         operations need m a <= 1",
                        self.a
                    ))
                } else {
                    Ok(lam)
                }
            }
            (None, None) => Err("one of --lambda or --mass is required".into()),
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        }
    }

    fn chain(&self) -> Result<ChainSpec, String> {
        ChainSpec::new(self.n, self.a, self.coupling()?).map_err(|e| e.to_string())
    }

    fn mass(&self) -> Result<Mass, String> {
        match self.mass {
            Some(m) => Mass::new(m).map_err(|e| e.to_string()),
            None => mass_from_coupling(self.lambda.unwrap_or(1.0), self.a).map_err(|e| {
                format!("{e}; pass --mass explicitly for couplings above 1")
            }),
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Output path; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn emit(&self, table: &Table) -> Result<(), String> {
        let render = |w: &mut dyn Write| match self.format {
            FormatArg::Csv => write_csv(table, w),
            FormatArg::Json => write_json(table, w),
        };
        match &self.out {
            Some(path) => {
                let mut f = File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
                render(&mut f).map_err(|e| e.to_string())
            }
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                render(&mut lock).map_err(|e| e.to_string())
            }
        }
    }
}

#[derive(Args)]
struct SpectrumArgs {
    /// Which quantization to tabulate
    #[arg(long, value_enum)]
    frame: FrameArg,
    #[command(flatten)]
    physics: PhysicsArgs,
    /// Instant-form boundary sector
    #[arg(long, value_enum, default_value_t = SectorArg::Antiperiodic)]
    sector: SectorArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ResourcesArgs {
    #[command(flatten)]
    physics: PhysicsArgs,
    /// Instant-form boundary sector; periodic grids carry unpaired modes
    /// and are rejected by the pair-resource computation
    #[arg(long, value_enum, default_value_t = SectorArg::Antiperiodic)]
    sector: SectorArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// Number of sites N (even, >= 4)
    #[arg(long)]
    n: usize,
    /// Lattice spacing a
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    /// Coupling range lo:hi:steps with lo, hi in [0, 1]
    #[arg(long, value_parser = parse_range, default_value = "0:1:21")]
    lambda_range: LambdaRange,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct MasslessArgs {
    /// Number of sites N (even, >= 4)
    #[arg(long)]
    n: usize,
    /// Lattice spacing a
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    /// Instant-form grid feeding the massless lightfront quantization
    #[arg(long, value_enum, default_value_t = SectorArg::Periodic)]
    sector: SectorArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Seed for the sampled checks; changes the sample points, never the outcome
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Renyi index for the stabilizer checks
    #[arg(long, default_value_t = 2)]
    q: u32,
    /// Fault-injection hook scaling the analytic dispersion (test use only)
    #[arg(long, default_value_t = 1.0, hide = true)]
    omega_factor: f64,
}

#[derive(Clone, Debug)]
struct LambdaRange {
    lo: f64,
    hi: f64,
    steps: usize,
}

fn parse_range(s: &str) -> Result<LambdaRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err("expected lo:hi:steps".into());
    }
    let lo: f64 = parts[0].parse().map_err(|_| "bad lower bound")?;
    let hi: f64 = parts[1].parse().map_err(|_| "bad upper bound")?;
    let steps: usize = parts[2].parse().map_err(|_| "bad step count")?;
    if steps == 0 {
        return Err("steps must be positive".into());
    }
    if !(lo <= hi) {
        return Err("need lo <= hi".into());
    }
    Ok(LambdaRange { lo, hi, steps })
}

impl LambdaRange {
    fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.lo];
        }
        (0..self.steps)
            .map(|i| self.lo + (self.hi - self.lo) * i as f64 / (self.steps - 1) as f64)
            .collect()
    }
}

fn cmd_spectrum(args: &SpectrumArgs) -> Result<(), String> {
    let spec = args.physics.chain()?;
    let table = match args.frame {
        FrameArg::If => {
            let grid = make_if_grid(&spec, args.sector.into());
            let lam = spec.coupling();
            let mut t = Table::new(vec!["k", "omega", "excitation"]);
            for &k in &grid.momenta() {
                let w = lattice_dispersion(k, lam, spec.spacing());
                t.push(vec![Cell::Num(k), Cell::Num(w), Cell::Num(2.0 * w)]);
            }
            t
        }
        FrameArg::Lf => {
            let mass = args.physics.mass()?;
            let s = lf_spectrum(&spec, mass).map_err(|e| e.to_string())?;
            let mut t = Table::new(vec!["k_plus", "energy"]);
            for row in s.rows() {
                t.push(vec![Cell::Num(row.k_plus), Cell::Num(row.energy)]);
            }
            t
        }
    };
    args.output.emit(&table)
}

fn cmd_resources(args: &ResourcesArgs) -> Result<(), String> {
    let spec = args.physics.chain()?;
    let mass = args.physics.mass()?;
    let grid = make_if_grid(&spec, args.sector.into());
    let if_report = if_resource_report(&grid, mass).map_err(|e| e.to_string())?;
    let lf_report = lf_resource_report(&spec, mass);
    let mut t = Table::new(vec!["row", "k", "if_entropy", "if_m2", "lf_entropy", "lf_m2"]);
    for b in &if_report.per_block {
        t.push(vec![
            Cell::text("block"),
            Cell::Num(b.k),
            Cell::Num(b.entanglement_entropy),
            Cell::Num(b.m2_contribution),
            Cell::Num(0.0),
            Cell::Num(0.0),
        ]);
    }
    t.push(vec![
        Cell::text("total"),
        Cell::Empty,
        Cell::Num(if_report.total_entropy),
        Cell::Num(if_report.total_m2),
        Cell::Num(lf_report.total_entropy),
        Cell::Num(lf_report.total_m2),
    ]);
    args.output.emit(&t)
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), String> {
    let spec = ChainSpec::new(args.n, args.a, 0.0).map_err(|e| e.to_string())?;
    let rows = magic_sweep(&spec, &args.lambda_range.values()).map_err(|e| e.to_string())?;
    let mut t = Table::new(vec!["lambda", "mass", "total_m2", "total_entropy"]);
    for r in rows {
        t.push(vec![
            Cell::Num(r.coupling),
            Cell::Num(r.mass),
            Cell::Num(r.total_m2),
            Cell::Num(r.total_entropy),
        ]);
    }
    args.output.emit(&t)
}

fn cmd_massless(args: &MasslessArgs) -> Result<(), String> {
    let spec = ChainSpec::new(args.n, args.a, 1.0).map_err(|e| e.to_string())?;
    let m0 = Mass::new(0.0).expect("zero mass");
    let grid = make_if_grid(&spec, args.sector.into());
    let table = massless_lf_spectrum(&grid).map_err(|e| e.to_string())?;
    let positives = grid.positive_momenta();

    let mut t = Table::new(vec![
        "row",
        "k1",
        "k_minus",
        "lf_energy",
        "if_excitation",
        "pair_entropy",
        "pair_m2",
    ]);
    let ln2 = std::f64::consts::LN_2;
    for row in table.rows() {
        let k1 = -row.k_minus / 2.0;
        let paired = positives.iter().any(|&k| (k - k1.abs()).abs() < 1e-12);
        t.push(vec![
            Cell::text("mode"),
            Cell::Num(k1),
            Cell::Num(row.k_minus),
            Cell::Num(row.energy),
            Cell::Num(if_excitation_energy(k1.abs(), m0)),
            if paired { Cell::Num(ln2) } else { Cell::Empty },
            if paired { Cell::Num(0.0) } else { Cell::Empty },
        ]);
    }
    let n_pairs = positives.len() as f64;
    t.push(vec![
        Cell::text("if_total"),
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Num(n_pairs * ln2),
        Cell::Num(0.0),
    ]);
    t.push(vec![
        Cell::text("lf_total"),
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Num(0.0),
        Cell::Num(0.0),
    ]);
    args.output.emit(&t)
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, String> {
    let report = verify::run(&verify::VerifyConfig {
        seed: args.seed,
        q: args.q,
        omega_factor: args.omega_factor,
    });
    for check in &report.checks {
        match &check.outcome {
            Ok(()) => println!("PASS {}", check.name),
            Err(detail) => println!("FAIL {} - {detail}", check.name),
        }
    }
    let passed = report.checks.iter().filter(|c| c.outcome.is_ok()).count();
    println!("{passed}/{} checks passed (seed {})", report.checks.len(), args.seed);
    Ok(report.all_passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Resources(a) => cmd_resources(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Massless(a) => cmd_massless(a),
        Command::Verify(a) => {
            return match cmd_verify(a) {
                Ok(true) => ExitCode::SUCCESS,
                Ok(false) => ExitCode::FAILURE,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
            };
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
