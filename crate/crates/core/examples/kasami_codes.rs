//! Coset graphs of extended Kasami codes, checked against their published
//! intersection arrays.
//!
//! Pass parameter strings such as `q=2,variant=i,j=1,m=1` to choose instances.

use flatsets::codes::KasamiParams;
use flatsets::families::{format_ratio, run_family, Family, RunOptions};

fn main() -> flatsets::Result<()> {
    let mut specs: Vec<String> = std::env::args().skip(1).collect();
    if specs.is_empty() {
        specs = ["q=2,variant=ii", "q=2,variant=i,j=1,m=1", "q=4,variant=ii"]
            .map(String::from)
            .to_vec();
    }
    for spec in specs {
        let params: KasamiParams = spec.parse()?;
        let (n, k, c2, c3) = params.expected_parameters();
        let run = run_family(Family::Kasami(params), RunOptions::default())?;
        println!(
            "K({}, {}): 2n = {}, array {:?} (expected n={n}, k={k}, c2={c2}, c3={c3}), alpha = {}",
            params.s(),
            params.t(),
            run.acted.graph.vertex_count(),
            run.array.triple(),
            format_ratio(&run.alpha()),
        );
    }
    Ok(())
}
