use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use heunforge::poly::Backend;

mod commands;
mod params;
mod report;

use report::Format;

/// Polynomial solutions of Heun-type equations by the extended
/// Nikiforov-Uvarov method.
#[derive(Debug, Parser)]
#[command(name = "heunforge", version)]
struct Cli {
    /// Coefficient arithmetic.
    #[arg(long, global = true, env = "HEUNFORGE_BACKEND", default_value = "float", value_parser = parse_backend)]
    backend: Backend,
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Override a tolerance, e.g. `--tol residual=1e-10`. Names: residual,
    /// relation, termination, bethe, catalog.
    #[arg(long = "tol", global = true, value_parser = parse_tol)]
    tol: Vec<(String, f64)>,
    /// Contour points for residual checks.
    #[arg(long, global = true, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
    samples: u32,
    /// Newton starting points for the branch search.
    #[arg(long, global = true, default_value_t = 32, value_parser = clap::value_parser!(u32).range(8..))]
    grid: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the admissible branches of an equation.
    Classify(EquationArgs),
    /// Resolve the accessory parameter and build the eigenfunctions.
    Solve(SolveArgs),
    /// Closed-form results of the bundled physics problems, verified.
    #[command(subcommand)]
    App(AppCommand),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct EquationSource {
    /// Heun parameters, e.g. `gamma=1/2,delta=1/3,alpha=-1,beta=2,q=0,a=2`.
    /// A missing epsilon follows from the Fuchsian condition.
    #[arg(long)]
    pub heun: Option<String>,
    /// Confluent Heun parameters `alpha,beta,gamma,mu,nu`.
    #[arg(long)]
    pub che: Option<String>,
    /// `sigma` of a general equation; needs --tau-tilde and --sigma-tilde.
    #[arg(long, requires_all = ["tau_tilde", "sigma_tilde"])]
    pub sigma: Option<String>,
}

#[derive(Debug, Args)]
pub struct EquationArgs {
    #[command(flatten)]
    pub source: EquationSource,
    #[arg(long)]
    pub tau_tilde: Option<String>,
    #[arg(long)]
    pub sigma_tilde: Option<String>,
    /// Classic degree bounds (1, 2, 2) instead of (2, 3, 4).
    #[arg(long)]
    pub classic: bool,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Heun parameters `gamma,delta,epsilon,a`; alpha and beta follow from
    /// the class unless both are given.
    #[arg(long, conflicts_with = "che", required_unless_present = "che")]
    pub heun: Option<String>,
    /// Confluent parameters `alpha,beta,gamma`; `mu+nu` follows from the
    /// class unless nu is given.
    #[arg(long)]
    pub che: Option<String>,
    /// Heun class I..VIII, or branch pi1..pi8.
    #[arg(long)]
    pub class: String,
    /// Polynomial degree.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum AppCommand {
    /// Coulomb problem on the 3-sphere.
    Coulomb3s {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        /// Charge coupling.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        gamma: f64,
    },
    /// Two electrons on a sphere.
    ElectronsSphere {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        gamma: f64,
        #[arg(long, allow_hyphen_values = true)]
        delta: f64,
    },
    /// Hyperbolic double-well potential.
    DoubleWell {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: f64,
        #[arg(long)]
        u0: f64,
        /// symmetric or antisymmetric
        #[arg(long, default_value = "symmetric")]
        parity: String,
    },
}

fn parse_backend(s: &str) -> Result<Backend, String> {
    s.parse()
}

fn parse_tol(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or("expected name=value")?;
    let name = name.trim().to_ascii_lowercase();
    if !commands::TOL_NAMES.contains(&name.as_str()) {
        return Err(format!("unknown tolerance `{name}`"));
    }
    let value: f64 = value.trim().parse().map_err(|e| format!("{e}"))?;
    if !(value > 0.0 && value.is_finite()) {
        return Err("tolerances must be positive".into());
    }
    Ok((name, value))
}

/// Settings shared by every command.
pub struct RunConfig {
    pub backend: Backend,
    pub tolerances: BTreeMap<String, f64>,
    pub samples: usize,
    pub grid: usize,
}

impl RunConfig {
    pub fn tol(&self, name: &str) -> f64 {
        self.tolerances
            .get(name)
            .copied()
            .unwrap_or_else(|| commands::default_tol(name))
    }
}

/// Exit codes: 2 usage, 3 no solution, 4 failed verification.
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn usage(e: impl Into<anyhow::Error>) -> Self {
        Self { code: 2, error: e.into() }
    }

    pub fn none(e: impl Into<anyhow::Error>) -> Self {
        Self { code: 3, error: e.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        backend: cli.backend,
        tolerances: cli.tol.into_iter().collect(),
        samples: cli.samples as usize,
        grid: cli.grid as usize,
    };
    let result = match &cli.command {
        Command::Classify(args) => commands::classify(args, &config),
        Command::Solve(args) => commands::solve(args, &config),
        Command::App(app) => commands::app(app, &config),
    };
    match result {
        Ok(report) => {
            match report.render(cli.format) {
                Ok(text) => print!("{text}"),
                Err(e) => {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(2);
                }
            }
            let failed = report.failed();
            if failed.is_empty() {
                ExitCode::SUCCESS
            } else {
                for c in failed {
                    eprintln!("check failed: {} = {:.3e} > {:.1e}", c.name, c.value, c.tol);
                }
                ExitCode::from(4)
            }
        }
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
