//! `twa`: group association schemes and Terwilliger algebras.
//!
//! Exit code 0 means every internal consistency assertion of the run
//! passed; any failed assertion (or error) is reported and exits nonzero.

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use twa_cli::{build_checked, group_info, render_group_info, render_report, run_twa, scheme_eq};
use twa_core::group::conjugacy_classes;
use twa_core::scheme::{group_scheme, parse_scheme_text, scheme_to_text, wreath};

#[derive(Parser)]
#[command(
    name = "twa",
    version,
    about = "Terwilliger algebras of group association schemes"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect groups built from spec strings or files.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Full Terwilliger run: dimensions, AC criteria, decomposition.
    Twa {
        /// Group spec (cyclic:n, prod:..., dihedral:n, q8, heisenberg:p,
        /// frobenius:p:r, z3sq_q8, cayley:path, semidirect:path).
        spec: String,
        /// Report the three almost-commutativity criteria (always computed).
        #[arg(long)]
        ac: bool,
        /// Report dimensions against the family formula (always computed).
        #[arg(long)]
        dim: bool,
        /// Construct and verify the Wedderburn ideal generators.
        #[arg(long)]
        decomp: bool,
        /// With --decomp, print each generator block (row-major, exact
        /// rationals as a/b, cyclotomic entries as coefficient tuples).
        #[arg(long)]
        verbose: bool,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Build, combine and compare scheme files.
    Scheme {
        #[command(subcommand)]
        cmd: SchemeCmd,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Order, class sizes, characteristic subgroups, Camina data, family.
    Info {
        spec: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum SchemeCmd {
    /// Write the group association scheme of a spec to a scheme file.
    Build {
        spec: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Wreath-compose two scheme files (first = inner factor).
    Wreath {
        inner: PathBuf,
        outer: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a wreath factorization along a named normal chain:
    /// center | derived | kp-cyclic | both | k9-z2-z2sq.
    Eq {
        spec: String,
        #[arg(long)]
        wreath: String,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Group {
            cmd: GroupCmd::Info { spec, json },
        } => {
            let info = group_info(&spec)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&info)?);
            } else {
                print!("{}", render_group_info(&info));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Twa {
            spec,
            ac: _,
            dim: _,
            decomp,
            verbose,
            json,
        } => {
            let (report, failures) = run_twa(&spec, decomp)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", render_report(&report));
                if decomp && verbose {
                    print!("{}", twa_cli::render_generator_blocks(&spec)?);
                }
            }
            if failures.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("consistency failure: {}", failures[0]);
                for f in &failures[1..] {
                    eprintln!("consistency failure: {f}");
                }
                Ok(ExitCode::FAILURE)
            }
        }
        Cmd::Scheme { cmd } => match cmd {
            SchemeCmd::Build { spec, output } => {
                let g = build_checked(&spec)?;
                let s = group_scheme(&g, &conjugacy_classes(&g));
                std::fs::write(&output, scheme_to_text(&s))
                    .with_context(|| output.display().to_string())?;
                println!(
                    "wrote {} ({} points, {} classes)",
                    output.display(),
                    s.size(),
                    s.classes()
                );
                Ok(ExitCode::SUCCESS)
            }
            SchemeCmd::Wreath {
                inner,
                outer,
                output,
            } => {
                let a = parse_scheme_text(
                    &std::fs::read_to_string(&inner)
                        .with_context(|| inner.display().to_string())?,
                )?;
                let b = parse_scheme_text(
                    &std::fs::read_to_string(&outer)
                        .with_context(|| outer.display().to_string())?,
                )?;
                a.validate_fast()
                    .with_context(|| format!("{}", inner.display()))?;
                b.validate_fast()
                    .with_context(|| format!("{}", outer.display()))?;
                let w = wreath(&a, &b);
                std::fs::write(&output, scheme_to_text(&w))
                    .with_context(|| output.display().to_string())?;
                println!(
                    "wrote {} ({} points, {} classes)",
                    output.display(),
                    w.size(),
                    w.classes()
                );
                Ok(ExitCode::SUCCESS)
            }
            SchemeCmd::Eq { spec, wreath, json } => {
                let report = scheme_eq(&spec, &wreath)?;
                if json {
                    println!("{}", serde_json::to_string_pretty(&report)?);
                } else {
                    println!(
                        "{} along {}: factors {:?} -> {}",
                        report.group_spec, report.chain, report.factor_sizes, report.equal
                    );
                }
                Ok(if report.equal {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::FAILURE
                })
            }
        },
    }
}
