//! Rebuilds the table of largest `{0, α}`-sets from graphs and checks every cell.

use flatsets::cli::{cmd_table1, ExitStatus};

fn main() {
    let out = cmd_table1(false);
    for cell in out.report.results["cells"].as_array().into_iter().flatten() {
        println!(
            "{:<24} expected {:<6} got {:<6}",
            cell["cell"].as_str().unwrap_or_default(),
            cell["expected"].as_str().unwrap_or_default(),
            cell["actual"].as_str().unwrap_or_default()
        );
    }
    println!("mismatches: {:?}", out.report.mismatches);
    std::process::exit(if out.status == ExitStatus::Success { 0 } else { 1 });
}
