use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kktheory::{run, Format, JobConfig, Options};
use kktheory_core::exactalg::ExtensionBound;

#[derive(Parser)]
#[command(
    name = "kktheory",
    version,
    about = "E2 pages for real K-theory of k-graphs with involution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the E2 page and everything derived from it.
    Compute {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Largest group order tried when solving extension problems.
        #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
        ext_bound: Option<u64>,
        /// Largest rank of MO_i considered by the core solver.
        #[arg(long, value_name = "N", default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..=64))]
        core_bound: u64,
        /// Also print Smith forms and the chain complexes.
        #[arg(long)]
        emit_intermediate: bool,
        /// Also print cycle representatives for every nonzero E2 cell.
        #[arg(long)]
        emit_lifts: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { kktheory::EXIT_INPUT as u8 } else { 0 });
        }
    };
    let Command::Compute {
        input,
        format,
        ext_bound,
        core_bound,
        emit_intermediate,
        emit_lifts,
    } = cli.command;
    let mut extension = ExtensionBound::default();
    if let Some(n) = ext_bound {
        extension.max_order = n;
    }
    let config = JobConfig {
        input,
        format: match format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        },
        options: Options {
            extension,
            core_bound: core_bound as usize,
            emit_intermediate,
            emit_lifts,
        },
    };
    let code = run(&config, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code as u8)
}
