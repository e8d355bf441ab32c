use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use divdiff_cli::builtin::Builtin;
use divdiff_cli::commands::{self, Source};
use divdiff_cli::format::parse_newton_form;
use divdiff_cli::verify::{self, VerifyOptions};

/// Divided differences and Hermite interpolation with repeated nodes.
#[derive(Parser)]
#[command(name = "divdiff", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the divided-difference table, one row per node.
    Table(DataArgs),
    /// Write the Newton form of the Hermite interpolant.
    Interp {
        #[command(flatten)]
        data: DataArgs,
        /// Write the form here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a Newton form by nested multiplication.
    Eval {
        #[arg(long)]
        form: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        at: Vec<f64>,
    },
    /// Re-express a Newton form with new centers.
    Rebase {
        #[arg(long)]
        form: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        centers: Vec<f64>,
    },
    /// Print p(A) for the bidiagonal matrix A of the nodes.
    Opitz {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        nodes: Vec<f64>,
        /// Coefficients of p, constant term first.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        power_coeffs: Vec<f64>,
    },
    /// Evaluate the unit-integral B-spline with the given knots.
    Bspline {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        knots: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        at: Vec<f64>,
        /// Also print the integral of the spline.
        #[arg(long)]
        integrate: bool,
    },
    /// Check every identity on seeded random inputs.
    Verify {
        #[arg(long, env = "DIVDIFF_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, hide = true, default_value_t = 0.0)]
        perturb: f64,
    },
}

#[derive(Args)]
struct DataArgs {
    /// File of `t y` records.
    #[arg(long, required_unless_present = "function", conflicts_with = "function")]
    data: Option<PathBuf>,
    /// Sample a built-in function instead: exp, sin, recip or power:k.
    #[arg(long = "fn", id = "function", requires = "nodes")]
    function: Option<Builtin>,
    /// Nodes for --fn; repeats ask for derivatives.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    nodes: Vec<f64>,
    /// Merge nodes closer than this.
    #[arg(long, default_value_t = 0.0)]
    tol: f64,
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(args: &DataArgs) -> Result<divdiff::HermiteDataset> {
    match (&args.data, args.function) {
        (Some(path), _) => commands::load_dataset(Source::Text(&read(path)?), args.tol),
        (None, Some(f)) => commands::load_dataset(Source::Function(f, &args.nodes), args.tol),
        (None, None) => unreachable!("clap requires one of --data and --fn"),
    }
}

fn run(cli: Cli) -> Result<String> {
    Ok(match cli.command {
        Command::Table(args) => commands::table(&load(&args)?),
        Command::Interp { data, out } => {
            let text = commands::interp(&load(&data)?);
            match out {
                Some(path) => {
                    fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
                    String::new()
                }
                None => text,
            }
        }
        Command::Eval { form, at } => commands::eval(&parse_newton_form(&read(&form)?)?, &at)?,
        Command::Rebase { form, centers } => commands::rebase(&parse_newton_form(&read(&form)?)?, &centers)?,
        Command::Opitz { nodes, power_coeffs } => commands::opitz(&nodes, &power_coeffs)?,
        Command::Bspline { knots, at, integrate } => commands::bspline(&knots, &at, integrate)?,
        Command::Verify { seed, trials, perturb } => {
            let opts = VerifyOptions { seed, trials, perturb };
            let results = verify::run(&opts);
            let report = verify::report(&opts, &results);
            if results.iter().any(|r| !r.pass()) {
                print!("{report}");
                anyhow::bail!("verification failed");
            }
            report
        }
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
