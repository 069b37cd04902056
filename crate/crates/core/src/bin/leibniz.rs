use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use leibniz::catalog::BuildParams;
use leibniz::cli::{
    cmd_analyze, cmd_automorphisms, cmd_build, cmd_derivations, cmd_verify, AutoMode, CmdOutput,
};

#[derive(Parser)]
#[command(
    name = "leibniz",
    version,
    about = "Exact structure analysis of Leibniz algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Leibniz identity on every basis triple.
    Verify { file: PathBuf },
    /// Print the full analysis report as JSON.
    Analyze { file: PathBuf },
    /// Derivation basis, its split and the dimension report.
    Derivations { file: PathBuf },
    /// Check, factor, or test extendability of automorphisms.
    Automorphisms(AutoArgs),
    /// Emit a catalog algebra as JSON.
    Build(BuildArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "mode")]
struct AutoModeArgs {
    /// Matrix file to test for being an automorphism.
    #[arg(long, value_name = "MATRIX")]
    check: Option<String>,
    /// Matrix file of an automorphism to factor.
    #[arg(long, value_name = "MATRIX")]
    factor: Option<String>,
    /// Automorphism of the Levi factor: identity, sl3-transpose, exp-ad:K or a matrix file.
    #[arg(long, value_name = "NAME")]
    extend: Option<String>,
}

#[derive(Args)]
struct AutoArgs {
    file: PathBuf,
    #[command(flatten)]
    mode: AutoModeArgs,
}

#[derive(Args)]
struct BuildArgs {
    /// sl2, sl3, example-2.11, example-3.6, sl2-semidirect, sl3-standard, sl2-module
    name: String,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Highest weights for sl2-semidirect, comma separated.
    #[arg(long, value_delimiter = ',')]
    weights: Vec<usize>,
    /// Direct sum of this many copies.
    #[arg(long)]
    copies: Option<usize>,
    /// Use the uncorrected action constants (example-3.6 only).
    #[arg(long)]
    as_printed: bool,
    /// Write to a file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn emit(out: CmdOutput, target: Option<&PathBuf>) -> ExitCode {
    match target {
        Some(path) if out.code == 0 => {
            if let Err(e) = std::fs::write(path, &out.stdout) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        _ => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
        }
    }
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { file } => emit(cmd_verify(&file), None),
        Command::Analyze { file } => emit(cmd_analyze(&file), None),
        Command::Derivations { file } => emit(cmd_derivations(&file), None),
        Command::Automorphisms(a) => {
            let mode = match (a.mode.check, a.mode.factor, a.mode.extend) {
                (Some(m), _, _) => AutoMode::Check(m),
                (_, Some(m), _) => AutoMode::Factor(m),
                (_, _, Some(n)) => AutoMode::Extend(n),
                _ => unreachable!("clap enforces one mode"),
            };
            emit(cmd_automorphisms(&a.file, &mode), None)
        }
        Command::Build(b) => {
            let name = if b.as_printed && b.name == "example-3.6" {
                "example-3.6-as-printed".to_string()
            } else {
                b.name
            };
            let params = BuildParams {
                m: b.m,
                n: b.n,
                weights: b.weights,
                copies: b.copies,
            };
            emit(cmd_build(&name, &params), b.output.as_ref())
        }
    }
}
