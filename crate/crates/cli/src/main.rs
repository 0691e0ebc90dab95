//! `radixforge`: exact pseudo-s-adic computations from the command line.
//!
//! Exit status is 0 on success, 1 when the library rejects valid input and 2
//! on malformed input.

mod commands;
mod fixtures;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::*;
use report::{CliError, CliResult, Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "radixforge",
    version,
    about = "Exact pseudo-s-adic numeral systems"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical s-adic expansion of a rational in [0, 1].
    Expand(ExpandArgs),
    /// Exact value of a digit word.
    Eval(EvalArgs),
    /// Blockwise image of a digit word under a schedule.
    Transform(TransformArgs),
    /// Images of every expansion of a point.
    Classify(ClassifyArgs),
    /// Cylinder interval, its image and its subcylinders.
    Cylinder(CylinderArgs),
    /// Image of a closed interval under the pseudo map.
    Image(ImageArgs),
    /// Order in which rank-n cylinders are mapped.
    Adjacency(RankArgs),
    /// One-sided limits of the pseudo map at a point.
    Continuity(ContinuityArgs),
    /// Monotonicity class with a turning witness.
    Monotonicity(RankArgs),
    /// Two points whose distance the pseudo map changes.
    Distance(RankArgs),
    /// Lower partition sum of the pseudo map.
    Integral(IntegralArgs),
    /// Distribution function on a grid, as CSV.
    Dist(DistArgs),
    /// Nega-s-adic value or expansion.
    Nega(NegaArgs),
    /// Value or expansion with negative terms on chosen positions.
    Quasinega(QuasiNegaArgs),
    /// Cantor series value or expansion.
    Cantor(CantorArgs),
    /// Recompute the pinned worked examples.
    PaperFixtures,
    /// Names of the registered numeral systems.
    Systems,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Expand(_) => "expand",
            Command::Eval(_) => "eval",
            Command::Transform(_) => "transform",
            Command::Classify(_) => "classify",
            Command::Cylinder(_) => "cylinder",
            Command::Image(_) => "image",
            Command::Adjacency(_) => "adjacency",
            Command::Continuity(_) => "continuity",
            Command::Monotonicity(_) => "monotonicity",
            Command::Distance(_) => "distance",
            Command::Integral(_) => "integral",
            Command::Dist(_) => "dist",
            Command::Nega(_) => "nega",
            Command::Quasinega(_) => "quasinega",
            Command::Cantor(_) => "cantor",
            Command::PaperFixtures => "paper-fixtures",
            Command::Systems => "systems",
        }
    }

    fn run(&self) -> CliResult<Report> {
        match self {
            Command::Expand(a) => a.run(),
            Command::Eval(a) => a.run(),
            Command::Transform(a) => a.run(),
            Command::Classify(a) => a.run(),
            Command::Cylinder(a) => a.run(),
            Command::Image(a) => a.run(),
            Command::Adjacency(a) => adjacency(a),
            Command::Continuity(a) => a.run(),
            Command::Monotonicity(a) => monotonicity(a),
            Command::Distance(a) => distance(a),
            Command::Integral(a) => a.run(),
            Command::Dist(a) => a.run(),
            Command::Nega(a) => a.run(),
            Command::Quasinega(a) => a.run(),
            Command::Cantor(a) => a.run(),
            Command::PaperFixtures => Ok(fixtures::run()),
            Command::Systems => Ok(systems()),
        }
    }
}

fn emit(cli: &Cli) -> CliResult<bool> {
    let report = cli.command.run()?;
    let text = report.render(cli.format, cli.command.name())?;
    match &cli.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Domain(format!("cannot write '{}': {e}", path.display())))?,
        None => {
            let mut out = std::io::stdout().lock();
            // ignore broken pipes
            let _ = out.write_all(text.as_bytes());
        }
    }
    Ok(report.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match emit(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
