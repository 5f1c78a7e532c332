//! The extended binary Golay code, its weight distribution and coset graph.

use flatsets::codes::{self, weight};
use flatsets::graphs;
use std::collections::BTreeMap;

fn main() -> flatsets::Result<()> {
    let code = codes::golay_code();
    let mut distribution = BTreeMap::new();
    for word in code.codewords() {
        *distribution.entry(weight(&word)).or_insert(0u32) += 1;
    }
    println!(
        "[{}, {}] code, weight distribution {distribution:?}",
        code.length(),
        code.dimension()
    );

    let cg = codes::coset_graph(&code)?;
    println!("coset graph: {} cosets, valency {}", cg.vertex_count(), cg.valency());
    let acted = graphs::build_golay_coset_graph()?;
    let ia = graphs::verify_distance_regular(&acted.graph)?;
    println!(
        "distance-regular with (k, c2, c3) = {:?}, shells {:?}",
        ia.triple(),
        ia.shells()
    );
    Ok(())
}
