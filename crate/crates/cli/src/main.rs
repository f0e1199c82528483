use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pseudobundle_cli::commands::{
    run_demo_smooth, run_fiber, run_jacobi, run_nash, run_stratify, write_json, FiberArgs,
    JacobiArgs, NashArgs, StratifyArgs,
};
use pseudobundle_cli::instance::order_from_name;
use pseudobundle_cli::CliResult;
use pseudobundle_core::DEFAULT_STEP_BUDGET;

/// Exact-arithmetic analysis of kernels of polynomial bundle morphisms:
/// rank stratification by minor ideals, kernel-plane limits along curves,
/// and Betti-number checks for symmetric products of a Riemann surface.
#[derive(Parser)]
#[command(name = "pseudobundle", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the kernel-dimension stratification of an instance file.
    Stratify {
        file: PathBuf,
        /// Monomial order: grevlex or lex.
        #[arg(long, default_value = "grevlex")]
        order: String,
        /// S-polynomial reduction budget per basis computation.
        #[arg(long = "gb-budget", default_value_t = DEFAULT_STEP_BUDGET)]
        gb_budget: u64,
        /// Check this many random rational points against the strata.
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for the sampling RNG.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Treat the base variety as irreducible when certifying the
        /// generic rank.
        #[arg(long)]
        assume_irreducible: bool,
        /// Also write the machine-readable report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Omit wall-clock timings from the report (for byte-identical
        /// outputs).
        #[arg(long)]
        no_timings: bool,
    },
    /// Kernel dimension and stratum of a point on the base variety.
    Fiber {
        file: PathBuf,
        /// Comma-separated rational coordinates, e.g. "1,1/2".
        #[arg(long)]
        point: String,
        #[arg(long, default_value = "grevlex")]
        order: String,
        #[arg(long = "gb-budget", default_value_t = DEFAULT_STEP_BUDGET)]
        gb_budget: u64,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        no_timings: bool,
    },
    /// Limit of the kernel plane along a rational curve, in Plücker
    /// coordinates and as an explicit basis.
    Nash {
        file: PathBuf,
        /// Comma-separated polynomials in t, e.g. "t,2*t".
        #[arg(long)]
        curve: String,
        #[arg(long, default_value = "grevlex")]
        order: String,
        #[arg(long = "gb-budget", default_value_t = DEFAULT_STEP_BUDGET)]
        gb_budget: u64,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        no_timings: bool,
    },
    /// Betti-number table and dimension bounds for the degree-d symmetric
    /// product of a genus-g surface.
    Jacobi {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        degree: u32,
        /// Homotopy class for the holomorphic-sphere bounds.
        #[arg(long = "map-degree")]
        map_degree: Option<u32>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        no_timings: bool,
    },
    /// Demonstrations.
    Demo {
        #[command(subcommand)]
        which: DemoCommand,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Tabulate the smooth function whose rank-zero set admits no
    /// deformation-retracting neighbourhood.
    SmoothCounterexample {
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: u32,
    },
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Stratify {
            file,
            order,
            gb_budget,
            samples,
            seed,
            assume_irreducible,
            json,
            no_timings,
        } => {
            let report = run_stratify(&StratifyArgs {
                file,
                order: order_from_name(&order)?,
                order_name: order,
                gb_budget,
                samples,
                seed,
                assume_irreducible,
                no_timings,
            })?;
            if let Some(path) = json {
                write_json(&report, &path)?;
            }
            Ok(())
        }
        Command::Fiber {
            file,
            point,
            order,
            gb_budget,
            json,
            no_timings,
        } => {
            let report = run_fiber(&FiberArgs {
                file,
                point,
                order: order_from_name(&order)?,
                order_name: order,
                gb_budget,
                no_timings,
            })?;
            if let Some(path) = json {
                write_json(&report, &path)?;
            }
            Ok(())
        }
        Command::Nash {
            file,
            curve,
            order,
            gb_budget,
            json,
            no_timings,
        } => {
            let report = run_nash(&NashArgs {
                file,
                curve,
                order: order_from_name(&order)?,
                order_name: order,
                gb_budget,
                no_timings,
            })?;
            if let Some(path) = json {
                write_json(&report, &path)?;
            }
            Ok(())
        }
        Command::Jacobi {
            genus,
            degree,
            map_degree,
            json,
            no_timings,
        } => {
            let report = run_jacobi(&JacobiArgs {
                genus,
                degree,
                map_degree,
                no_timings,
            })?;
            if let Some(path) = json {
                write_json(&report, &path)?;
            }
            Ok(())
        }
        Command::Demo { which } => match which {
            DemoCommand::SmoothCounterexample { n_max } => run_demo_smooth(n_max),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap routes --help and --version through Err as well
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
