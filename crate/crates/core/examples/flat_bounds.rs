//! The four size bounds, and the tensor-rank certificate for small sets.

use flatsets::bounds::{dgs_bounds, flat_bounds, tensor_rank_check};
use flatsets::families::{run_family, Family, RunOptions};

fn main() -> flatsets::Result<()> {
    println!(
        "{:>3} {:>8} {:>8} {:>8} {:>8}",
        "m", "dgs C", "flat C", "dgs R", "flat R"
    );
    for m in [2, 3, 4, 6, 8, 16, 24] {
        let (dc, dr) = dgs_bounds(m);
        let (fc, fr) = flat_bounds(m);
        println!("{m:>3} {dc:>8} {fc:>8} {dr:>8} {fr:>8}");
    }
    for family in [
        Family::EightCycle,
        Family::FourCube,
        Family::FoldedEightCube,
        Family::Vls,
    ] {
        let run = run_family(family, RunOptions::default())?;
        let t = tensor_rank_check(&run.set)?;
        println!("{family}: |S| = {}, rank = {}, cap = {}", run.set.len(), t.rank, t.cap);
    }
    Ok(())
}
