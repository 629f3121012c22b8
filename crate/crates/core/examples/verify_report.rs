//! Run the quick verification suite and print its JSON report.
//!
//! cargo run --example verify_report

use cayley::report::{cmd_verify, to_json, Level, RunOptions};

fn main() -> cayley::Result<()> {
    let report = cmd_verify(Level::Quick, &RunOptions::default())?;
    print!("{}", to_json(&report));
    std::process::exit(report.exit_code);
}
