//! Command-line front end for `lyalg`.
//!
//! `lyalg <verb> --manifest PATH [flags]` reads a JSON manifest (see
//! [`manifest`]), runs the requested computation and prints a report.
//! Exit codes: 0 pass, 1 mathematical violation, 2 input or configuration
//! error.

pub mod commands;
pub mod fixtures;
pub mod json;
pub mod manifest;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{Flags, Verb};
use report::{Format, Report, Status};

#[derive(Debug, Parser)]
#[command(name = "lyalg", version, about = "Lie-Yamaguti algebra computations from JSON manifests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every checker that applies to the manifest's blocks.
    Check(Common),
    /// Cocycles, coboundaries and cohomology at a level.
    Cohomology(Common),
    /// The same for the equivariant subcomplex.
    EquivariantCohomology(Common),
    /// The subalgebra fixed by a subgroup, with its structure constants.
    FixedSubalgebra(Common),
    /// Truncated formal deformations.
    Deformation {
        #[command(subcommand)]
        action: DeformationCommand,
    },
}

#[derive(Debug, Subcommand)]
enum DeformationCommand {
    /// Verify the deformation equations order by order.
    Check(Common),
    /// Gauge the jet to zero order by order, or report the obstruction.
    Trivialize(Common),
    /// Decide whether `jet` and `jet2` agree to first order up to gauge.
    Compare(Common),
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long)]
    manifest: PathBuf,
    /// Cohomology level n, i.e. degrees (2n, 2n+1).
    #[arg(long)]
    level: Option<usize>,
    /// Truncate jets to this order.
    #[arg(long)]
    order: Option<usize>,
    /// Comma-separated element labels.
    #[arg(long, value_delimiter = ',')]
    subgroup: Option<Vec<String>>,
    /// Work with equivariant jets and gauges.
    #[arg(long)]
    equivariant: bool,
    /// Include canonical cohomology representatives.
    #[arg(long)]
    representatives: bool,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

/// Output and exit code of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Status::InputError.exit_code() } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            };
        }
    };
    let mut echo = vec!["lyalg".to_string()];
    echo.extend(args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()));
    let (verb, common) = match cli.command {
        Command::Check(c) => (Verb::Check, c),
        Command::Cohomology(c) => (Verb::Cohomology, c),
        Command::EquivariantCohomology(c) => (Verb::EquivariantCohomology, c),
        Command::FixedSubalgebra(c) => (Verb::FixedSubalgebra, c),
        Command::Deformation { action } => match action {
            DeformationCommand::Check(c) => (Verb::DeformationCheck, c),
            DeformationCommand::Trivialize(c) => (Verb::DeformationTrivialize, c),
            DeformationCommand::Compare(c) => (Verb::DeformationCompare, c),
        },
    };
    let format = match common.format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    let flags = Flags {
        level: common.level,
        order: common.order,
        subgroup: common.subgroup,
        equivariant: common.equivariant,
        representatives: common.representatives,
    };
    let mut report = Report::new(echo);
    match load(&common.manifest) {
        Ok(cfg) => commands::run(verb, &cfg, &flags, &mut report),
        Err(msg) => {
            report.section("error").set("kind", "input").set("message", msg);
            report.mark(Status::InputError);
        }
    }
    Outcome { stdout: report.render(format), stderr: String::new(), code: report.exit_code() }
}

fn load(path: &std::path::Path) -> Result<manifest::Config, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let m = manifest::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    manifest::Config::from_manifest(&m).map_err(|e| format!("{}: {e}", path.display()))
}
