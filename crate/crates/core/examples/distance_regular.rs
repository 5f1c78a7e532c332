//! Distance-regularity, intersection arrays and the spectral identity for every
//! shipped family.

use flatsets::families::Family;
use flatsets::graphs;
use flatsets::spectra;

fn main() -> flatsets::Result<()> {
    for family in Family::all() {
        let acted = family.build()?;
        let ia = graphs::verify_distance_regular_by_orbits(&acted.graph, &acted.action)?;
        let s = spectra::spectrum_from_array(&ia)?;
        spectra::verify_spectral_identity(&acted.graph, &s)?;
        println!(
            "{family:<32} 2n={:<5} (k,c2,c3)={:?} shells={:?} θ1²={}",
            acted.graph.vertex_count(),
            ia.triple(),
            ia.shells(),
            s.theta1_squared
        );
    }
    // removing an edge destroys distance-regularity
    let cube = graphs::build_4_cube()?.graph;
    let broken = cube.without_edge(0, 1)?;
    println!(
        "4-cube minus an edge: {}",
        graphs::verify_distance_regular(&broken).unwrap_err()
    );
    Ok(())
}
