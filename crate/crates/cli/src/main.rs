use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod table;

use args::{Cli, Command, Format, OutputArgs};
use table::Table;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] kerr_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use kerr_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(E::InvalidParameter { .. } | E::RegimeViolation { .. } | E::UnknownCase { .. }) => 2,
            _ => 1,
        }
    }
}

fn emit(table: &Table, output: &OutputArgs) -> Result<(), CliError> {
    let sink: Box<dyn Write> = match &output.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match output.format {
        Format::Csv => table.write_csv(sink),
        Format::Json => table.write_json(sink),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let (table, output, failed) = match &cli.command {
        Command::Quadspec(a) => (commands::quadspec(a)?, &a.output, 0),
        Command::Bandwidth(a) => (commands::bandwidth(a)?, &a.output, 0),
        Command::Photon(a) => (commands::photon(a)?, &a.output, 0),
        Command::Validate(a) => {
            let (t, failed) = commands::validate(a)?;
            (t, &a.output, failed)
        }
    };
    emit(&table, output)?;
    if failed > 0 {
        eprintln!("{failed} validation case(s) failed");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
