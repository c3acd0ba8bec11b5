//! Run the complete registry and print the text report — the library-level
//! equivalent of `qfano-verify run`.
//!
//!     cargo run --release --example full_run

use qfano_verify::report::RunCtx;
use qfano_verify::runner;

fn main() {
    let ctx = RunCtx::default();
    let outcome = runner::run(&[], &ctx, false);
    print!("{}", runner::render(&outcome.results, false));
    std::process::exit(outcome.exit_code);
}
