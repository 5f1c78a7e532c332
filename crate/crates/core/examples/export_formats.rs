//! Writes a graph and its vector set in the text formats and reads them back.

use flatsets::families::{run_family, Family, RunOptions};
use flatsets::formats;

fn main() -> flatsets::Result<()> {
    let run = run_family(Family::FourCube, RunOptions::default())?;
    let adjacency = formats::write_adjacency(&run.acted.graph);
    let vectors = formats::write_vectors(&run.set);
    print!("{adjacency}\n{vectors}");
    let (adj, _) = formats::parse_adjacency(&adjacency)?;
    assert_eq!(adj, run.acted.graph.adjacency());
    assert_eq!(formats::parse_vectors(&vectors)?, run.set);
    Ok(())
}
