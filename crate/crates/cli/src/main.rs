//! Command-line front end: reads a JSON graph and prints ideal catalogs.
//!
//! Exit codes: 0 success, 1 not applicable or oracle disagreement,
//! 2 usage, 3 input error.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use edgeshift::io::{self, InputError};
use edgeshift::report::{self, ReportOptions};
use edgeshift::{af, dot, fixtures, lattice, EdgeShift};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "edgeshift", version, about = "Ideal structure of edge-shift groupoid algebras")]
#[command(arg_required_else_help = true)]
struct Cli {
    /// Output format; `dot` is accepted by analyze, lattice and afcore.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the built-in fixture graphs as JSON files into DIR.
    #[arg(long, value_name = "DIR")]
    seed_fixtures: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the graph parses and is essential.
    Validate { file: PathBuf },
    /// Full report: verdicts, lattice, catalogs, quotients, AF core.
    Analyze {
        file: PathBuf,
        /// Bratteli levels to report.
        #[arg(long, default_value_t = 10)]
        levels: usize,
        /// Truncation depth for AF ideals (default |V| + 2).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: Option<u64>,
        /// Also cross-check against the brute-force oracle at this depth.
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        oracle_depth: Option<u64>,
    },
    /// Closed totally invariant sets, primes and minimal sets.
    Lattice { file: PathBuf },
    /// Primitive ideals.
    Prim { file: PathBuf },
    /// Maximal ideals.
    Maximal { file: PathBuf },
    /// Simple quotients with certificates.
    Quotients { file: PathBuf },
    /// Fiber ranks, Bratteli diagram and AF ideals.
    Afcore {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        levels: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: Option<u64>,
    },
    /// Certificates of pure infiniteness for a simple, non-injective system.
    Certify { file: PathBuf },
    /// Compare every efficient predicate with the oracle.
    OracleCheck {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        depth: u64,
    },
}

enum Failure {
    Usage(String),
    Input(InputError),
    NotApplicable(String),
}

fn load(path: &Path) -> Result<EdgeShift, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(InputError::Io {
                path: "<stdin>".into(),
                message: e.to_string(),
            }))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| {
            Failure::Input(InputError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })
        })?
    };
    io::parse_shift(&text).map_err(Failure::Input)
}

fn no_dot(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(Failure::Usage(format!("`{command}` has no dot output")))
    } else {
        Ok(())
    }
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce(&T, &mut String)) -> String {
    match format {
        Format::Json => report::to_json(value),
        _ => {
            let mut out = String::new();
            text(value, &mut out);
            out
        }
    }
}

fn seed(dir: &Path) -> Result<(), Failure> {
    let fail = |e: std::io::Error| {
        Failure::Input(InputError::Io {
            path: dir.display().to_string(),
            message: e.to_string(),
        })
    };
    std::fs::create_dir_all(dir).map_err(fail)?;
    for (name, graph) in fixtures::all() {
        std::fs::write(dir.join(format!("{name}.json")), io::graph_to_json(&graph)).map_err(fail)?;
    }
    eprintln!("wrote {} fixtures to {}", fixtures::all().len(), dir.display());
    Ok(())
}

fn run(cli: Cli) -> Result<String, Failure> {
    if let Some(dir) = &cli.seed_fixtures {
        seed(dir)?;
    }
    let Some(command) = cli.command else {
        return Ok(String::new());
    };
    let format = cli.format;
    let out = match command {
        Command::Validate { file } => {
            no_dot(format, "validate")?;
            let shift = load(&file)?;
            emit(format, &report::validation_summary(&shift), report::validation_text)
        }
        Command::Analyze {
            file,
            levels,
            depth,
            oracle_depth,
        } => {
            let shift = load(&file)?;
            if format == Format::Dot {
                let lat = lattice::enumerate_invariant_sets(&shift);
                let mut s = dot::lattice_dot(&shift, &lat);
                s.push_str(&dot::bratteli_dot(&shift, &af::bratteli(&shift, levels)));
                s
            } else {
                let opts = ReportOptions {
                    af_levels: levels,
                    af_depth: depth.map(|d| d as usize),
                    oracle_depth: oracle_depth.map(|d| d as usize),
                };
                let r = report::analyze(&shift, &opts);
                let failed = r.oracle.as_ref().is_some_and(|o| !o.agree);
                let s = emit(format, &r, |r, out| out.push_str(&report::to_text(r)));
                if failed {
                    print!("{s}");
                    return Err(Failure::NotApplicable("oracle disagreement".into()));
                }
                s
            }
        }
        Command::Lattice { file } => {
            let shift = load(&file)?;
            if format == Format::Dot {
                dot::lattice_dot(&shift, &lattice::enumerate_invariant_sets(&shift))
            } else {
                emit(format, &report::lattice_section(&shift), report::lattice_text)
            }
        }
        Command::Prim { file } => {
            no_dot(format, "prim")?;
            let shift = load(&file)?;
            let ideals = report::ideal_entries(&shift, &edgeshift::catalog::primitive_ideals(&shift));
            emit(format, &ideals, |i, out| report::ideals_text("primitive ideals", i, out))
        }
        Command::Maximal { file } => {
            no_dot(format, "maximal")?;
            let shift = load(&file)?;
            let ideals = report::ideal_entries(&shift, &edgeshift::catalog::maximal_ideals(&shift));
            emit(format, &ideals, |i, out| report::ideals_text("maximal ideals", i, out))
        }
        Command::Quotients { file } => {
            no_dot(format, "quotients")?;
            let shift = load(&file)?;
            emit(format, &report::quotient_entries(&shift), |q, out| report::quotients_text(q, out))
        }
        Command::Afcore { file, levels, depth } => {
            let shift = load(&file)?;
            if format == Format::Dot {
                dot::bratteli_dot(&shift, &af::bratteli(&shift, levels))
            } else {
                let depth = depth.map_or_else(|| af::default_depth(&shift), |d| d as usize);
                emit(format, &report::af_section(&shift, levels, depth), report::af_text)
            }
        }
        Command::Certify { file } => {
            no_dot(format, "certify")?;
            let shift = load(&file)?;
            let section = report::certify_section(&shift).map_err(|e| Failure::NotApplicable(e.to_string()))?;
            emit(format, &section, report::certify_text)
        }
        Command::OracleCheck { file, depth } => {
            no_dot(format, "oracle-check")?;
            let shift = load(&file)?;
            let section = report::oracle_section(&shift, depth as usize);
            let s = emit(format, &section, report::oracle_text);
            if !section.agree {
                print!("{s}");
                return Err(Failure::NotApplicable("oracle disagreement".into()));
            }
            s
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::NotApplicable(msg)) => {
            eprintln!("edgeshift: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("edgeshift: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Input(e)) => {
            eprintln!("edgeshift: {e}");
            ExitCode::from(3)
        }
    }
}
