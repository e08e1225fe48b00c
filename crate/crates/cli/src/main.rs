mod args;
mod commands;
mod failure;
mod io;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let result = match &cli.command {
        Command::Count => commands::count(g),
        Command::Enumerate { kind } => commands::enumerate(g, *kind),
        Command::Pmap(input) => commands::pmap(g, input),
        Command::Preimages(input) => commands::preimages(g, input),
        Command::Build { input, dot } => commands::build(g, input, *dot),
        Command::Extract(input) => commands::extract(g, input),
        Command::Verify { bounds, inject_fault } => commands::verify(g, bounds, *inject_fault),
        Command::Table { bounds } => commands::table(g, bounds),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(failure) => {
            eprintln!("error: {}", failure);
            ExitCode::from(failure.code as u8)
        }
    }
}
