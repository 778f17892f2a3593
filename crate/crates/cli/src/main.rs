//! `tori`: decompose maximal tori of SL_n(εq), tabulate all partitions of n,
//! run the cross-path checks, and time chain against subset enumeration.

mod bench;
mod common;
mod decompose;
mod table;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use common::Status;

#[derive(Parser)]
#[command(
    name = "tori",
    version,
    about = "Cyclic decompositions of maximal tori in (P)SL_n(q) and (P)SU_n(q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose the torus of one partition.
    Decompose(decompose::Args),
    /// One row per partition of n.
    Table(table::Args),
    /// Cross-check every path against the others and the fixture corpus.
    Verify(verify::Args),
    /// CSV timings of the chain method against subset enumeration.
    Bench(bench::Args),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Decompose(args) => decompose::run(args),
        Command::Table(args) => table::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Bench(args) => bench::run(args),
    };
    match outcome {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(common::exit_code(&e))
        }
    }
}
