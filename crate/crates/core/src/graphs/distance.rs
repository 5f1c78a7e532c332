//! BFS-based verification of distance-regularity.
//!
//! From each source `u`, every vertex `v` at distance `i` must see the same
//! numbers `cᵢ, aᵢ, bᵢ` of neighbours at distances `i−1, i, i+1`.

use super::{BipartiteGraph, Colour, GroupAction, IntersectionArray};
use crate::error::{Error, Result};
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Profile {
    /// `(cᵢ, aᵢ, bᵢ)` per distance.
    layers: Vec<(u64, u64, u64)>,
    shells: Vec<u64>,
}

fn fail(u: u32, v: u32, reason: impl Into<String>) -> Error {
    Error::NotDistanceRegular {
        u,
        v,
        reason: reason.into(),
    }
}

/// Profile from `u`, checked against `reference` when one is given.
fn profile_from(graph: &BipartiteGraph, u: u32, reference: Option<&Profile>) -> Result<Profile> {
    let dist = graph.distances_from(u);
    if let Some(v) = dist.iter().position(|&d| d == u32::MAX) {
        return Err(fail(u, v as u32, "graph is disconnected"));
    }
    let diameter = *dist.iter().max().unwrap() as usize;
    if let Some(r) = reference {
        if diameter + 1 != r.layers.len() {
            let v = dist.iter().position(|&d| d as usize == diameter).unwrap() as u32;
            return Err(fail(
                u,
                v,
                format!("eccentricity {diameter} differs from {}", r.layers.len() - 1),
            ));
        }
    }
    let mut layers: Vec<Option<(u64, u64, u64)>> = vec![None; diameter + 1];
    let mut shells = vec![0u64; diameter + 1];
    for (v, &dv) in dist.iter().enumerate() {
        let mut counts = (0u64, 0u64, 0u64);
        for &w in graph.neighbours(v as u32) {
            let dw = dist[w as usize];
            if dw + 1 == dv {
                counts.0 += 1;
            } else if dw == dv {
                counts.1 += 1;
            } else {
                counts.2 += 1;
            }
        }
        let i = dv as usize;
        shells[i] += 1;
        let expected = reference.map(|r| r.layers[i]).or(layers[i]);
        match expected {
            Some(e) if e != counts => {
                return Err(fail(
                    u,
                    v as u32,
                    format!("at distance {i} saw (c,a,b)={counts:?}, expected {e:?}"),
                ))
            }
            _ => layers[i] = Some(counts),
        }
    }
    Ok(Profile {
        layers: layers.into_iter().map(Option::unwrap).collect(),
        shells,
    })
}

/// Verifies distance-regularity from the given sources and extracts the array.
pub fn verify_distance_regular_from(graph: &BipartiteGraph, sources: &[u32]) -> Result<IntersectionArray> {
    let Some((&first, rest)) = sources.split_first() else {
        return Err(Error::Structure("no BFS sources".into()));
    };
    let reference = profile_from(graph, first, None)?;
    rest.par_iter()
        .map(|&u| profile_from(graph, u, Some(&reference)).map(|_| ()))
        .collect::<Result<Vec<()>>>()?;

    let witness_at = |i: usize| {
        let dist = graph.distances_from(first);
        dist.iter().position(|&d| d as usize == i).unwrap_or(0) as u32
    };
    let layers = &reference.layers;
    if layers.len() != 5 {
        return Err(fail(
            first,
            witness_at(layers.len() - 1),
            format!("diameter {} ≠ 4", layers.len() - 1),
        ));
    }
    let k = layers[0].2;
    for (i, &(c, a, b)) in layers.iter().enumerate() {
        if a != 0 {
            return Err(fail(first, witness_at(i), format!("a{i} = {a} ≠ 0")));
        }
        if c + b != k {
            return Err(fail(first, witness_at(i), format!("c{i} + b{i} ≠ k")));
        }
    }
    if layers[1].0 != 1 || layers[4].0 != k {
        return Err(fail(first, witness_at(4), "c1 ≠ 1 or c4 ≠ k"));
    }
    let ia =
        IntersectionArray::new(k, layers[2].0, layers[3].0).map_err(|e| fail(first, witness_at(2), e.to_string()))?;
    if ia.shells().as_slice() != reference.shells.as_slice() {
        return Err(fail(first, witness_at(4), "shell sizes disagree with the array"));
    }
    Ok(ia)
}

/// Exhaustive verification from every vertex.
pub fn verify_distance_regular(graph: &BipartiteGraph) -> Result<IntersectionArray> {
    let sources: Vec<u32> = (0..graph.vertex_count() as u32).collect();
    verify_distance_regular_from(graph, &sources)
}

/// Verification from one vertex per colour class. Sound because the verified
/// action is by automorphisms and transitive on each class.
pub fn verify_distance_regular_by_orbits(graph: &BipartiteGraph, action: &GroupAction) -> Result<IntersectionArray> {
    action.verify(graph)?;
    let sources = [graph.class(Colour::Y)[0], graph.class(Colour::Z)[0]];
    verify_distance_regular_from(graph, &sources)
}
