use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lgcone_cli::commands::{self, CliError, Options};

#[derive(Parser)]
#[command(
    name = "lgcone",
    version,
    about = "Invariant cohomology and Lee-Gauduchon cones of complex solvmanifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Presentation file
    file: String,
    /// Emit one JSON object per line
    #[arg(long)]
    machine: bool,
    /// Seed for sampled metrics and classes (LGCONE_SEED overrides)
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a presentation
    Validate(Common),
    /// Cohomology tables, or one group with representatives
    Cohomology {
        #[command(flatten)]
        common: Common,
        /// dr, dolbeault, bc or ae
        #[arg(long)]
        theory: Option<String>,
        /// p,q
        #[arg(long)]
        bidegree: Option<String>,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Lee-Gauduchon space, pseudo-effective and Lee-Gauduchon cones
    Cones(Common),
    /// Consistency checks and metric classification
    Check(Common),
    /// Print a bundled model in file format
    Model {
        /// Model name; omit to list
        name: Option<String>,
    },
}

fn seed(cli_seed: u64) -> Result<u64, CliError> {
    match std::env::var("LGCONE_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("LGCONE_SEED is not an unsigned integer: '{s}'"))),
        Err(_) => Ok(cli_seed),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let (common, opts) = match &cli.command {
        Command::Model { name: None } => {
            return Ok(lgcone_core::models::BUNDLED_NAMES.join("\n") + "\n")
        }
        Command::Model { name: Some(name) } => return commands::cmd_model(name),
        Command::Validate(c) | Command::Cones(c) | Command::Check(c) => (
            c,
            Options {
                seed: seed(c.seed)?,
                ..Default::default()
            },
        ),
        Command::Cohomology {
            common,
            theory,
            bidegree,
            degree,
        } => (
            common,
            Options {
                theory: theory.as_deref().map(commands::parse_theory).transpose()?,
                bidegree: bidegree
                    .as_deref()
                    .map(commands::parse_bidegree)
                    .transpose()?,
                degree: *degree,
                seed: seed(common.seed)?,
            },
        ),
    };
    let loaded = commands::load_file(&common.file)?;
    let report = match &cli.command {
        Command::Validate(_) => commands::cmd_validate(&loaded),
        Command::Cohomology { .. } => commands::cmd_cohomology(&loaded, &opts)?,
        Command::Cones(_) => commands::cmd_cones(&loaded, &opts)?,
        Command::Check(_) => commands::cmd_check(&loaded, &opts)?,
        Command::Model { .. } => unreachable!(),
    };
    let text = report.render(common.machine);
    if report.inconsistent {
        print!("{text}");
        return Err(CliError::Inconsistent(
            "a consistency check failed; see the report".into(),
        ));
    }
    Ok(text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
