mod commands;
mod config;
mod manifest;
mod pipeline;
mod table;

use std::fs;
use std::process::ExitCode;

use anyhow::Result;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use photoexc_core::error::Error as CoreError;

use config::{Format, Overrides, RunConfig};

/// Excitation-accompanied photoionization ratios of two-electron ions.
#[derive(Debug, Parser)]
#[command(name = "photoexc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    overrides: Overrides,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// Solve and save the correlated ground state for each charge
    Ground,
    /// High-energy limits Aₙ
    Limits,
    /// 1/ω coefficients split by mechanism and partial wave
    Coefficients,
    /// Energy-dependent ratios on the photon-energy grid
    Ratios,
    /// Charge dependence: 1/Z series fit and scaled ratios
    Zscan,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Ground => "ground",
            Command::Limits => "limits",
            Command::Coefficients => "coefficients",
            Command::Ratios => "ratios",
            Command::Zscan => "zscan",
        }
    }
}

const EXIT_CONFIG: u8 = 1;
const EXIT_NUMERICAL: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<CoreError>() {
            if e.is_numerical() {
                return EXIT_NUMERICAL;
            }
            if e.is_domain() {
                return EXIT_DOMAIN;
            }
        }
    }
    EXIT_CONFIG
}

fn write_outcome(cfg: &RunConfig, command: Command, outcome: &commands::Outcome) -> Result<()> {
    fs::create_dir_all(&cfg.out)?;
    let mut written = Vec::new();
    for table in &outcome.tables {
        let (ext, text) = match cfg.format {
            Format::Csv => ("csv", table.to_csv()),
            Format::Json => ("json", table.to_json()),
        };
        let path = cfg.out.join(format!("{}.{ext}", table.name));
        fs::write(&path, text)?;
        written.push((table.name.clone(), path));
        if cfg.paper_style {
            println!("{}", table.to_paper());
        }
    }
    let manifest = manifest::write(cfg, command.name(), &outcome.wavefunctions, &written)?;
    for line in &outcome.summary {
        println!("{line}");
    }
    for (_, path) in &written {
        println!("wrote {}", path.display());
    }
    println!("wrote {}", manifest.display());
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    let cfg = RunConfig::resolve(&cli.overrides)?;
    let outcome = match cli.command {
        Command::Ground => commands::ground(&cfg)?,
        Command::Limits => commands::limits(&cfg)?,
        Command::Coefficients => commands::coefficients(&cfg)?,
        Command::Ratios => commands::ratios(&cfg)?,
        Command::Zscan => commands::zscan(&cfg)?,
    };
    write_outcome(&cfg, cli.command, &outcome)?;
    let mut code = 0;
    for err in &outcome.failures {
        eprintln!("error: {err:#}");
        code = code.max(exit_code(err));
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_CONFIG),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
