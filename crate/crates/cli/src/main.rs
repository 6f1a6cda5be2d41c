use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qpows_cli::{max_degree_from_env, run_eval, Settings};
use qpows_core::verify::selftest;

#[derive(Parser)]
#[command(
    name = "qpows",
    version,
    about = "Exact arithmetic with quasisymmetric powersum bases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as `convert(P[2,1,2], M)`.
    Eval {
        expr: String,
        /// Order for P, Pt and Z atoms (desc, evenodd, reverse:NAME) or for
        /// Pn atoms (dtilde, med, min, reverse:NAME, bar:NAME). May be given
        /// once per family.
        #[arg(long)]
        order: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check that the Zassenhaus and scaled powersum bases are dual in degree N.
    Dualcheck {
        n: u32,
        #[arg(long)]
        order: Option<String>,
    },
    /// Run every oracle suite.
    Selftest {
        #[arg(long)]
        max_degree: Option<u32>,
    },
}

fn settings(orders: &[String]) -> Result<Settings, qpows_cli::CliError> {
    let mut s = Settings {
        max_degree: max_degree_from_env(),
        ..Settings::default()
    };
    for o in orders {
        s.set_order_by_name(o)?;
    }
    Ok(s)
}

fn fail(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::FAILURE
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval { expr, order, json } => {
            let s = match settings(&order) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            match run_eval(&expr, &s, json) {
                Ok(out) => {
                    println!("{out}");
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Command::Dualcheck { n, order } => {
            let s = match settings(order.as_slice()) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            match run_eval(&format!("dualcheck({n})"), &s, false) {
                Ok(out) if out == "ok" => {
                    println!("ok");
                    ExitCode::SUCCESS
                }
                Ok(out) => fail(format!("duality fails in degree {n}: {out}")),
                Err(e) => fail(e),
            }
        }
        Command::Selftest { max_degree } => {
            let cap = max_degree_from_env();
            let d = max_degree.unwrap_or(cap).min(cap);
            let reports = selftest(d);
            let mut failed = 0;
            for r in &reports {
                match &r.outcome {
                    Ok(cases) => println!(
                        "PASS {:<18} degree {} cases {:>6} {:>8.3}s",
                        r.name,
                        r.bound,
                        cases,
                        r.elapsed.as_secs_f64()
                    ),
                    Err(e) => {
                        failed += 1;
                        println!("FAIL {:<18} degree {} {}", r.name, r.bound, e);
                    }
                }
            }
            if failed == 0 {
                println!("selftest: {} suites passed", reports.len());
                ExitCode::SUCCESS
            } else {
                fail(format!("{failed} of {} suites failed", reports.len()))
            }
        }
    }
}
