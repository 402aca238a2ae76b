use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process;

use clap::{Args, Parser, Subcommand};

use recurra_cli::config::{ExperimentConfig, Overrides, SystemTag};
use recurra_cli::sweep::{self, SweepConfig, SWEEP_BIT_BUDGET};
use recurra_cli::{commands, render, CliError, ExitCode};

/// Exact simulation and classification of the two delay systems.
#[derive(Parser)]
#[command(name = "recurra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the orbit as CSV (n,x_exact,y_exact,x_float,y_float).
    Simulate {
        #[command(flatten)]
        common: Common,
        /// Also write an SVG polyline plot.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Print the predicted behaviour as one line.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Check a closed form (s3, s4, s5) against simulation.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        closed_form: Option<String>,
    },
    /// Compare the classifier with the detectors over a grid of delays.
    Sweep {
        #[arg(long, default_value_t = 6)]
        k_max: usize,
        #[arg(long, default_value_t = 6)]
        m_max: usize,
        /// Number of seeds per pair.
        #[arg(long, default_value_t = 5)]
        seeds: u64,
        /// First seed.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Extra pairs beyond the grid, e.g. `7:11,2:2`.
        #[arg(long)]
        pairs: Option<String>,
        #[arg(long, default_value_t = SWEEP_BIT_BUDGET)]
        bit_budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// JSON experiment file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Use seeded random positive initials.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    bit_budget: Option<u64>,
    #[arg(long)]
    iterations: Option<usize>,
    /// `sys1` or `sys2`.
    #[arg(long)]
    system: Option<SystemTag>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
}

impl Common {
    fn experiment(
        self,
        closed_form: Option<String>,
    ) -> Result<recurra_cli::config::Experiment, CliError> {
        let base = self
            .config
            .as_deref()
            .map(ExperimentConfig::load)
            .transpose()?;
        let overrides = Overrides {
            system: self.system,
            k: self.k,
            m: self.m,
            seed: self.seed,
            iterations: self.iterations,
            bit_budget: self.bit_budget,
            output: self.out,
            closed_form,
        };
        overrides.apply(base)?.resolve()
    }
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Simulate { common, svg } => {
            let exp = common.experiment(None)?;
            let mut out = open_out(exp.output.as_deref())?;
            let orbit = commands::simulate(&exp, &mut out)?;
            if let Some(path) = svg {
                std::fs::write(path, render::svg_polylines(&orbit))?;
            }
        }
        Command::Classify { common } => {
            let exp = common.experiment(None)?;
            println!("{}", commands::classify(&exp)?);
        }
        Command::Verify {
            common,
            closed_form,
        } => {
            let exp = common.experiment(closed_form)?;
            let report = commands::verify(&exp)?;
            println!("{report}");
            if !report.matched() {
                return Ok(ExitCode::Mismatch);
            }
        }
        Command::Sweep {
            k_max,
            m_max,
            seeds,
            seed,
            pairs,
            bit_budget,
            out,
        } => {
            let extra_pairs = pairs
                .as_deref()
                .map(sweep::parse_pairs)
                .transpose()?
                .unwrap_or_default();
            let cfg = SweepConfig {
                k_max,
                m_max,
                seeds,
                first_seed: seed,
                extra_pairs,
                bit_budget,
            };
            let rows = sweep::sweep(&cfg)?;
            sweep::write_sweep_csv(&rows, &mut open_out(out.as_deref())?)?;
            if !rows.iter().all(|r| r.agree()) {
                return Ok(ExitCode::Mismatch);
            }
        }
    }
    Ok(ExitCode::Success)
}

fn main() {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("recurra: {err}");
            err.exit_code()
        }
    };
    process::exit(code as i32);
}
