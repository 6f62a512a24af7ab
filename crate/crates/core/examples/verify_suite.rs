//! Runs the symbol verification suite and prints the reports as JSON.

use sectorial::verify::{run_suite, Suite};

pub fn run_example() -> sectorial::Result<()> {
    let reports = run_suite(Suite::Symbol, 42, 1e-8)?;
    println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} checks, {failed} failed", reports.len());
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
