use std::process::ExitCode;

use clap::{Parser, Subcommand};
use irratio_cli::{check, classes, emit, exit, parse_group_spec, Format, PiSpec, Runner, SUITES};
use irratio_core::{GroupError, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(name = "irratio", version, about = "Decide irrationality of concrete finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Largest group the enumerator may build.
    #[arg(long, env = "IRRATIO_MAX_ORDER", default_value_t = DEFAULT_BUDGET)]
    max_order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print the irrationality report of a group; exit 0 iff it is (π-)irrational.
    Check {
        spec: String,
        /// Prime set, e.g. `2,3`, or `2'` for the odd primes dividing |G|.
        #[arg(long)]
        pi: Option<PiSpec>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named verification suite, or `all`.
    Suite {
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// List conjugacy classes.
    Classes {
        spec: String,
        #[command(flatten)]
        common: Common,
    },
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn group_error(e: GroupError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        GroupError::BudgetExceeded(_) => code(exit::BUDGET),
        _ => code(exit::USAGE),
    }
}

fn build(spec: &str, budget: usize) -> Result<irratio_core::Group, ExitCode> {
    let node = parse_group_spec(spec).map_err(|e| {
        eprintln!("error: {spec}: {e}");
        code(exit::USAGE)
    })?;
    let g = node.build_with_budget(budget).map_err(group_error)?;
    g.enumeration().map_err(|e| group_error(e.clone()))?;
    Ok(g)
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Check { spec, pi, common } => {
            let g = build(&spec, common.max_order)?;
            let report = check(&g, pi.as_ref()).map_err(group_error)?;
            match common.format {
                Format::Json => println!("{}", json(&report)),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(code(if report.verdict { exit::PASS } else { exit::FAIL }))
        }
        Command::Classes { spec, common } => {
            let g = build(&spec, common.max_order)?;
            let report = classes(&g).map_err(group_error)?;
            match common.format {
                Format::Json => println!("{}", json(&report)),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(code(exit::PASS))
        }
        Command::Suite { name, seed, common } => {
            let names: Vec<&str> = if name == "all" {
                SUITES.to_vec()
            } else {
                vec![name.as_str()]
            };
            let runner = Runner::new(common.max_order, seed);
            let mut results = Vec::new();
            for n in names {
                let r = runner.run(n).map_err(|e| {
                    eprintln!("error: {e}");
                    code(exit::USAGE)
                })?;
                if common.format == Format::Text {
                    print!("{}", emit(&r, Format::Text));
                }
                results.push(r);
            }
            if common.format == Format::Json {
                if results.len() == 1 {
                    println!("{}", emit(&results[0], Format::Json));
                } else {
                    println!("{}", json(&results));
                }
            }
            let c = if results.iter().any(|r| r.budget_exceeded) {
                exit::BUDGET
            } else if results.iter().all(|r| r.pass) {
                exit::PASS
            } else {
                exit::FAIL
            };
            Ok(code(c))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return code(if e.use_stderr() { exit::USAGE } else { exit::PASS });
        }
    };
    run(cli).unwrap_or_else(|c| c)
}
