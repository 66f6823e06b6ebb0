use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use surfel_cli::checks::{builtin_suite, verify_scenario, ScenarioReport};
use surfel_cli::figures::{self, FigureId};
use surfel_cli::scenario::Scenario;
use surfel_cli::solve::{coefficient_report, field_grid, solve};
use surfel_cli::table::{write_atomic, Table};
use surfel_cli::{CliError, CliResult};

#[derive(Parser)]
#[command(name = "surfel", version, about = "Elastic fields and effective moduli for inhomogeneities with surface elasticity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a scenario file and print its coefficients as JSON.
    Solve {
        file: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the data of a figure (fig2, fig3, fig4, fig5, table1) as CSV.
    Figure {
        id: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Number of samples along the abscissa.
        #[arg(long)]
        resolution: Option<usize>,
    },
    /// Emit the effective shear modulus table as CSV.
    Table1 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification oracles on a scenario or the built-in suite.
    Verify {
        #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
        file: Option<PathBuf>,
        #[arg(long)]
        builtin: bool,
        /// JSON coefficients to check instead of the solver output.
        #[arg(long, requires = "file")]
        coefficients: Option<PathBuf>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(bytes: &[u8], out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(p) => write_atomic(p, bytes),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(bytes).map_err(|e| CliError::io("stdout", e))
        }
    }
}

fn emit_table(t: &Table, out: Option<&Path>) -> CliResult<()> {
    emit(&t.to_csv(), out)
}

fn json_bytes(v: &impl serde::Serialize) -> Vec<u8> {
    let mut b = serde_json::to_vec_pretty(v).expect("serializable report");
    b.push(b'\n');
    b
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Solve { file, out } => {
            let s = Scenario::from_path(&file)?;
            let solved = solve(&s)?;
            if let Some(t) = field_grid(&s, &solved) {
                match s.grid.as_ref().and_then(|g| g.output.as_ref()) {
                    Some(p) => {
                        // relative grid paths resolve against the scenario file
                        let p = file.parent().map_or(p.clone(), |d| d.join(p));
                        emit_table(&t, Some(&p))?;
                    }
                    None => eprint!("{}", String::from_utf8_lossy(&t.to_csv())),
                }
            }
            emit(&json_bytes(&coefficient_report(&s, &solved)), out.as_deref())
        }
        Command::Figure { id, out, resolution } => {
            let id: FigureId = id.parse()?;
            emit_table(&figures::run(id, resolution)?, out.as_deref())
        }
        Command::Table1 { out } => emit_table(&figures::table1()?, out.as_deref()),
        Command::Verify { file, builtin, coefficients, out } => {
            let reports: Vec<ScenarioReport> = if builtin {
                builtin_suite().iter().map(|s| verify_scenario(s, None)).collect::<CliResult<_>>()?
            } else {
                let file = file.expect("clap enforces file or --builtin");
                let s = Scenario::from_path(&file)?;
                let doc = match coefficients {
                    Some(p) => {
                        let text = std::fs::read_to_string(&p).map_err(|e| CliError::io(p.display(), e))?;
                        Some(serde_json::from_str(&text).map_err(|e| {
                            CliError::Validation(format!("{}: {e}", p.display()))
                        })?)
                    }
                    None => None,
                };
                vec![verify_scenario(&s, doc.as_ref())?]
            };
            for r in &reports {
                eprint!("{}", r.summary());
            }
            emit(&json_bytes(&reports), out.as_deref())?;
            let failed: Vec<_> = reports.iter().filter(|r| !r.pass).map(|r| r.scenario.as_str()).collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Verification(failed.join(", ")))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
