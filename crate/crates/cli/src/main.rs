use std::process::ExitCode;

use clap::{ArgAction, Parser};

use cubic27_cli::{list_text, run, Config};

/// Runs exact verification checks and reports pass/fail per check.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// Check ids to run, or `all`.
    ids: Vec<String>,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Seed for randomized property checks.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Samples per randomized property check.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Treat ω as lying in the base field for `rep-lemma`.
    #[arg(long, default_value_t = false, action = ArgAction::Set)]
    has_omega: bool,
    /// List the registered checks.
    #[arg(long)]
    list: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list {
        print!("{}", list_text());
        return ExitCode::SUCCESS;
    }
    let config = Config { has_omega: args.has_omega, seed: args.seed, samples: args.samples };
    let report = match run(&args.ids, &config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
