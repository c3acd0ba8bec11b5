//! Thin command-line driver over the library's check registry.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qfano_verify::report::RunCtx;
use qfano_verify::runner;

#[derive(Parser)]
#[command(
    name = "qfano-verify",
    about = "Exact symbolic verification suite for Pfaffian key varieties",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List check identifiers matching the given patterns (all by default).
    List {
        /// Patterns: exact ids, dotted prefixes, or `*`-suffix globs.
        patterns: Vec<String>,
    },
    /// Run the checks matching the given patterns (all by default).
    Run {
        patterns: Vec<String>,
        /// Run everything (same as giving no patterns).
        #[arg(long)]
        all: bool,
        /// Seed for the randomized checks (env QFV_SEED, default 1).
        #[arg(long)]
        seed: Option<u64>,
        /// Samples per randomized sub-check.
        #[arg(long, default_value_t = 25)]
        trials: usize,
        /// Coefficient-degree cap for ungraded certificate searches.
        #[arg(long, default_value_t = 4)]
        degree_bound: i64,
        /// Output format.
        #[arg(long, default_value = "text", value_parser = ["text", "machine"])]
        format: String,
        /// Stop at the first failing check.
        #[arg(long)]
        fail_fast: bool,
        /// Path to a JSON file with six linear forms (and optional points)
        /// for the user-instance hook of the double-cover suite.
        #[arg(long)]
        lforms: Option<std::path::PathBuf>,
    },
}

fn default_seed() -> u64 {
    std::env::var("QFV_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List { patterns } => {
            for id in runner::list_ids(&patterns) {
                println!("{id}");
            }
            ExitCode::SUCCESS
        }
        Command::Run {
            patterns,
            all,
            seed,
            trials,
            degree_bound,
            format,
            fail_fast,
            lforms,
        } => {
            if trials == 0 {
                eprintln!("config error: --trials must be at least 1");
                return ExitCode::from(2);
            }
            let ctx = RunCtx {
                seed: seed.unwrap_or_else(default_seed),
                trials,
                degree_bound,
            };
            let patterns = if all { Vec::new() } else { patterns };
            let mut outcome = runner::run(&patterns, &ctx, fail_fast);
            if let Some(path) = lforms {
                let text = match std::fs::read_to_string(&path) {
                    Ok(t) => t,
                    Err(e) => {
                        eprintln!("config error: cannot read {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                };
                let cfg: qfano_verify::type_ir::LFormsConfig = match serde_json::from_str(&text) {
                    Ok(c) => c,
                    Err(e) => {
                        eprintln!("config error: bad lforms file: {e}");
                        return ExitCode::from(2);
                    }
                };
                let case = match cfg.case.as_str() {
                    "general" => qfano_verify::type_ir::general(),
                    "special" => qfano_verify::type_ir::special(),
                    other => {
                        eprintln!("config error: case must be general or special, got {other}");
                        return ExitCode::from(2);
                    }
                };
                let extra = qfano_verify::type_ir::check_lforms(case, &cfg);
                outcome.results.extend(extra);
                outcome.results.sort_by(|a, b| a.id.cmp(&b.id));
                for r in &outcome.results {
                    if r.status == qfano_verify::report::Status::Fail {
                        outcome.exit_code = 1;
                    }
                }
            }
            print!("{}", runner::render(&outcome.results, format == "machine"));
            ExitCode::from(outcome.exit_code as u8)
        }
    }
}
