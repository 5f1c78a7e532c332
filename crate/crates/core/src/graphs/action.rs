use super::{BipartiteGraph, Colour};
use crate::error::{Error, Result};
use crate::groups::{FiniteAbelianGroup, GroupElement};

/// An action of `Z_{d₁} × ⋯ × Z_{d_r}` on graph vertices, given by the
/// permutation induced by each unit generator.
#[derive(Debug, Clone)]
pub struct GroupAction {
    group: FiniteAbelianGroup,
    generators: Vec<Vec<u32>>,
}

impl GroupAction {
    pub fn new(group: FiniteAbelianGroup, generators: Vec<Vec<u32>>) -> Result<Self> {
        if generators.len() != group.rank() {
            return Err(Error::Action {
                vertex: 0,
                reason: format!("{} generators for a group of rank {}", generators.len(), group.rank()),
            });
        }
        let n = generators.first().map_or(0, Vec::len);
        for perm in &generators {
            let mut hit = vec![false; n];
            if perm.len() != n {
                return Err(Error::Action {
                    vertex: 0,
                    reason: "generator permutations differ in length".into(),
                });
            }
            for &v in perm {
                if v as usize >= n || std::mem::replace(&mut hit[v as usize], true) {
                    return Err(Error::Action {
                        vertex: v,
                        reason: "generator is not a permutation".into(),
                    });
                }
            }
        }
        Ok(Self { group, generators })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// `v^g`.
    pub fn apply(&self, g: &GroupElement, v: u32) -> u32 {
        let mut w = v;
        for (perm, &times) in self.generators.iter().zip(g.coords()) {
            for _ in 0..times {
                w = perm[w as usize];
            }
        }
        w
    }

    /// `v^g` for every `g`, in lexicographic element order.
    pub fn orbit_map(&self, v: u32) -> Vec<u32> {
        self.group.elements().map(|g| self.apply(&g, v)).collect()
    }

    /// Checks that the generators define a homomorphism into the colour-preserving
    /// automorphisms of `graph`, acting regularly on each colour class.
    pub fn verify(&self, graph: &BipartiteGraph) -> Result<()> {
        let n = graph.vertex_count();
        if self.generators.first().map_or(0, Vec::len) != n {
            return Err(Error::Action {
                vertex: 0,
                reason: "action and graph have different vertex counts".into(),
            });
        }
        for (i, (perm, &d)) in self.generators.iter().zip(self.group.cyclic_orders()).enumerate() {
            for v in 0..n as u32 {
                let pv = perm[v as usize];
                if graph.colour(pv) != graph.colour(v) {
                    return Err(Error::Action {
                        vertex: v,
                        reason: format!("generator {i} swaps colour classes"),
                    });
                }
                for &w in graph.neighbours(v) {
                    if !graph.is_adjacent(pv, perm[w as usize]) {
                        return Err(Error::Action {
                            vertex: v,
                            reason: format!("generator {i} is not an automorphism (edge {v}-{w})"),
                        });
                    }
                }
                let mut x = v;
                for _ in 0..d {
                    x = perm[x as usize];
                }
                if x != v {
                    return Err(Error::Action {
                        vertex: v,
                        reason: format!("generator {i} does not have order dividing {d}"),
                    });
                }
            }
            for (j, other) in self.generators.iter().enumerate().skip(i + 1) {
                if let Some(v) = (0..n).find(|&v| perm[other[v] as usize] != other[perm[v] as usize]) {
                    return Err(Error::Action {
                        vertex: v as u32,
                        reason: format!("generators {i} and {j} do not commute"),
                    });
                }
            }
        }
        for colour in [Colour::Y, Colour::Z] {
            let class = graph.class(colour);
            if class.len() as u64 != self.group.order() {
                return Err(Error::Action {
                    vertex: class.first().copied().unwrap_or(0),
                    reason: format!(
                        "class {colour:?} has {} vertices but the group has order {}",
                        class.len(),
                        self.group.order()
                    ),
                });
            }
            // G is abelian and |G| = |class|, so a bijective orbit map means regular.
            let base = class[0];
            let mut hit = vec![false; n];
            for image in self.orbit_map(base) {
                if std::mem::replace(&mut hit[image as usize], true) {
                    return Err(Error::Action {
                        vertex: image,
                        reason: format!("action is not free on class {colour:?}"),
                    });
                }
            }
        }
        Ok(())
    }
}

/// `D = {g ∈ G : z^g ~ y}`, in lexicographic element order.
///
/// Verifies the action first; `y` and `z` must lie in different colour classes.
pub fn regular_action_difference_set(
    graph: &BipartiteGraph,
    action: &GroupAction,
    y: u32,
    z: u32,
) -> Result<Vec<GroupElement>> {
    action.verify(graph)?;
    for v in [y, z] {
        if v as usize >= graph.vertex_count() {
            return Err(Error::Action {
                vertex: v,
                reason: "base vertex out of range".into(),
            });
        }
    }
    if graph.colour(y) == graph.colour(z) {
        return Err(Error::Action {
            vertex: z,
            reason: "base vertices lie in the same colour class".into(),
        });
    }
    let d: Vec<GroupElement> = action
        .group()
        .elements()
        .filter(|g| graph.is_adjacent(y, action.apply(g, z)))
        .collect();
    if Some(d.len()) != graph.valency() {
        return Err(Error::Structure(format!(
            "difference set has {} elements but the graph is not {}-regular",
            d.len(),
            d.len()
        )));
    }
    Ok(d)
}
