//! Characters restricted to the difference set give a flat `{0, α}`-set.
//!
//! `cargo run --example godsil_roy -- vls` prints the vectors of one family.

use flatsets::families::{format_angles, format_ratio, run_family, Family, RunOptions};

fn main() -> flatsets::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "8-cycle".into());
    let run = run_family(name.parse::<Family>()?, RunOptions::default())?;
    let set = &run.set;
    println!(
        "{} vectors in dimension {}, entries ζ_{}^a / √{}, alpha = {}, real: {}",
        set.len(),
        set.dimension(),
        set.root_order(),
        set.dimension(),
        format_ratio(&run.alpha()),
        set.is_real()
    );
    println!("angle set {:?}", format_angles(&run.angles));
    for v in set.vectors().iter().take(16) {
        println!("  {v:?}");
    }
    if let Some(blocks) = &run.unbiased_partition {
        println!("unbiased bases: {blocks:?}");
    }
    Ok(())
}
