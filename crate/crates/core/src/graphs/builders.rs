//! The concrete graph families, each with an abelian group acting regularly on
//! both colour classes.

use super::{BipartiteGraph, Colour, GroupAction};
use crate::codes::{self, CosetGraph, KasamiParams};
use crate::error::{Error, Result};
use crate::groups::FiniteAbelianGroup;

/// A bipartite graph together with a regular abelian action and a default
/// base pair `y ∈ Y`, `z ∈ Z`.
#[derive(Debug, Clone)]
pub struct ActedGraph {
    pub name: String,
    pub graph: BipartiteGraph,
    pub action: GroupAction,
    pub y: u32,
    pub z: u32,
}

/// The 8-cycle on `Z₂ × Z₄`, vertex `(x, a)` at index `4x + a`.
///
/// `(0, a) ~ (1, b)` iff `b − a ∈ {0, 1}`; `Z₄` acts on the second coordinate.
pub fn build_8_cycle() -> Result<ActedGraph> {
    let idx = |x: u32, a: u32| 4 * x + a % 4;
    let mut edges = Vec::new();
    for a in 0..4 {
        edges.push((idx(0, a), idx(1, a)));
        edges.push((idx(0, a), idx(1, a + 1)));
    }
    let colour = (0..8).map(|v| if v < 4 { Colour::Y } else { Colour::Z }).collect();
    let graph = BipartiteGraph::from_edges(colour, &edges)?;
    let shift = (0..8).map(|v| idx(v / 4, v % 4 + 1)).collect();
    let action = GroupAction::new(FiniteAbelianGroup::new(&[4])?, vec![shift])?;
    Ok(ActedGraph {
        name: "8-cycle".into(),
        graph,
        action,
        y: idx(0, 0),
        z: idx(1, 0),
    })
}

/// `Z₂ⁿ` with vertex index `Σ xᵢ 2^{n−1−i}` (first coordinate most significant),
/// adjacent iff the XOR lies in `steps`; the even-weight subgroup acts by translation.
fn binary_translation_graph(name: &str, n: u32, steps: &[u32]) -> Result<ActedGraph> {
    let size = 1u32 << n;
    let adjacency = (0..size).map(|v| steps.iter().map(|&s| v ^ s).collect()).collect();
    let colour = (0..size)
        .map(|v| if v.count_ones() % 2 == 0 { Colour::Y } else { Colour::Z })
        .collect();
    let graph = BipartiteGraph::new(adjacency, colour)?;
    let bit = |i: u32| 1u32 << (n - 1 - i);
    // even-weight basis e_i + e_{n-1}, i < n-1
    let generators = (0..n - 1)
        .map(|i| {
            let mask = bit(i) | bit(n - 1);
            (0..size).map(|v| v ^ mask).collect()
        })
        .collect();
    let action = GroupAction::new(FiniteAbelianGroup::elementary(2, n as usize - 1)?, generators)?;
    Ok(ActedGraph {
        name: name.into(),
        graph,
        action,
        y: 0,
        z: bit(n - 1),
    })
}

/// The 4-cube: `Z₂⁴`, Hamming distance 1.
pub fn build_4_cube() -> Result<ActedGraph> {
    let steps: Vec<u32> = (0..4).map(|i| 1 << i).collect();
    binary_translation_graph("4-cube", 4, &steps)
}

/// The folded 8-cube: `Z₂⁷`, Hamming distance 1 or 7.
pub fn build_folded_8_cube() -> Result<ActedGraph> {
    let mut steps: Vec<u32> = (0..7).map(|i| 1 << i).collect();
    steps.push(0b111_1111);
    binary_translation_graph("folded-8-cube", 7, &steps)
}

/// Restricts a coset graph to the cosets of coordinate sum 0 (`Y`) and 1 (`Z`),
/// with the sum-zero cosets acting by translation.
fn from_coset_graph(name: &str, cg: &CosetGraph) -> Result<ActedGraph> {
    let classes = cg
        .classes()
        .ok_or_else(|| Error::Structure("coordinate sum is not constant on cosets".into()))?;
    let kept: Vec<u32> = (0..cg.vertex_count() as u32)
        .filter(|&v| classes[v as usize] <= 1)
        .collect();
    let mut new_index = vec![u32::MAX; cg.vertex_count()];
    for (i, &v) in kept.iter().enumerate() {
        new_index[v as usize] = i as u32;
    }
    let adjacency = kept
        .iter()
        .map(|&v| {
            cg.adjacency()[v as usize]
                .iter()
                .filter(|&&w| new_index[w as usize] != u32::MAX)
                .map(|&w| new_index[w as usize])
                .collect()
        })
        .collect();
    let colour = kept
        .iter()
        .map(|&v| if classes[v as usize] == 0 { Colour::Y } else { Colour::Z })
        .collect();
    let graph = BipartiteGraph::new(adjacency, colour)?;
    let subgroup = cg.zero_class_subgroup()?;
    let generators = subgroup
        .generators
        .iter()
        .map(|perm| kept.iter().map(|&v| new_index[perm[v as usize] as usize]).collect())
        .collect();
    let action = GroupAction::new(subgroup.group, generators)?;
    let y = new_index[cg.vertex_of_syndrome(0) as usize];
    let z = graph.class(Colour::Z)[0];
    Ok(ActedGraph {
        name: name.into(),
        graph,
        action,
        y,
        z,
    })
}

/// Incidence graph of the van Lint–Schrijver partial geometry: the coset graph
/// of `⟨𝟙⟩ ⊂ F₃⁶` induced on the cosets with coordinate sum 0 and 1.
pub fn build_vls_incidence() -> Result<ActedGraph> {
    let cg = codes::coset_graph(&codes::vls_code())?;
    from_coset_graph("vls", &cg)
}

/// Coset graph of the extended binary Golay code.
pub fn build_golay_coset_graph() -> Result<ActedGraph> {
    let cg = codes::coset_graph(&codes::golay_code())?;
    from_coset_graph("golay", &cg)
}

/// Coset graph of the extended Kasami code `K(s, t)`.
pub fn build_kasami_coset_graph(params: &KasamiParams) -> Result<ActedGraph> {
    let code = codes::kasami_code(params)?;
    let cg = codes::coset_graph(&code)?;
    from_coset_graph(&format!("kasami({params})"), &cg)
}
