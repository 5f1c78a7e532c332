//! Bipartite graphs, intersection arrays of bipartite distance-regular graphs
//! of diameter four, and builders for the concrete families.

mod action;
mod builders;
mod distance;

pub use action::{regular_action_difference_set, GroupAction};
pub use builders::{
    build_4_cube, build_8_cycle, build_folded_8_cube, build_golay_coset_graph, build_kasami_coset_graph,
    build_vls_incidence, ActedGraph,
};
pub use distance::{verify_distance_regular, verify_distance_regular_by_orbits, verify_distance_regular_from};

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::VecDeque;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Colour {
    Y,
    Z,
}

/// A connected bipartite graph with a fixed 2-colouring.
#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    adjacency: Vec<Vec<u32>>,
    colour: Vec<Colour>,
}

impl BipartiteGraph {
    /// Validates symmetry, absence of loops, the colouring and connectivity.
    pub fn new(mut adjacency: Vec<Vec<u32>>, colour: Vec<Colour>) -> Result<Self> {
        let n = adjacency.len();
        if colour.len() != n {
            return Err(Error::Structure(format!("{} colours for {n} vertices", colour.len())));
        }
        if n == 0 {
            return Err(Error::Structure("empty graph".into()));
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        for (u, list) in adjacency.iter().enumerate() {
            for &v in list {
                if v as usize >= n {
                    return Err(Error::Structure(format!("edge {u}-{v} leaves the vertex set")));
                }
                if v as usize == u {
                    return Err(Error::Structure(format!("loop at vertex {u}")));
                }
                if colour[u] == colour[v as usize] {
                    return Err(Error::Structure(format!("edge {u}-{v} inside a colour class")));
                }
                if adjacency[v as usize].binary_search(&(u as u32)).is_err() {
                    return Err(Error::Structure(format!("edge {u}-{v} is not symmetric")));
                }
            }
        }
        let graph = Self { adjacency, colour };
        let dist = graph.distances_from(0);
        if let Some(v) = dist.iter().position(|&d| d == u32::MAX) {
            return Err(Error::Structure(format!("vertex {v} unreachable from vertex 0")));
        }
        Ok(graph)
    }

    pub fn from_edges(colour: Vec<Colour>, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); colour.len()];
        for &(u, v) in edges {
            if u as usize >= colour.len() || v as usize >= colour.len() {
                return Err(Error::Structure(format!("edge {u}-{v} leaves the vertex set")));
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        Self::new(adjacency, colour)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbours(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    pub fn colour(&self, v: u32) -> Colour {
        self.colour[v as usize]
    }

    pub fn is_adjacent(&self, u: u32, v: u32) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Common valency, if the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        let k = self.adjacency[0].len();
        self.adjacency.iter().all(|l| l.len() == k).then_some(k)
    }

    /// Vertices of one colour class, ascending.
    pub fn class(&self, c: Colour) -> Vec<u32> {
        (0..self.vertex_count() as u32)
            .filter(|&v| self.colour(v) == c)
            .collect()
    }

    /// BFS distances from `src`; `u32::MAX` marks unreachable vertices.
    pub fn distances_from(&self, src: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        dist[src as usize] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &v in &self.adjacency[u as usize] {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// The graph with edge `u-v` removed; fails if the result is disconnected.
    pub fn without_edge(&self, u: u32, v: u32) -> Result<Self> {
        let mut adjacency = self.adjacency.clone();
        adjacency[u as usize].retain(|&w| w != v);
        adjacency[v as usize].retain(|&w| w != u);
        Self::new(adjacency, self.colour.clone())
    }
}

/// Intersection numbers `(k, c₂, c₃)` of a bipartite distance-regular graph of
/// diameter four, with the derived shell sizes `k₀..k₄`.
///
/// The remaining numbers are fixed: `c₁ = 1`, `c₄ = k`, `aᵢ = 0`, `bᵢ = k − cᵢ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntersectionArray {
    k: u64,
    c2: u64,
    c3: u64,
    shells: [u64; 5],
}

impl IntersectionArray {
    /// Checks `1 ≤ c₂ ≤ c₃ < k`, integrality of `kᵢ = k_{i−1} b_{i−1} / cᵢ`
    /// and an even vertex total.
    pub fn new(k: u64, c2: u64, c3: u64) -> Result<Self> {
        let fail = |reason: String| Error::InfeasibleArray { k, c2, c3, reason };
        if !(1 <= c2 && c2 <= c3 && c3 <= k) {
            return Err(fail("needs 1 ≤ c2 ≤ c3 ≤ k".into()));
        }
        if c3 == k {
            return Err(fail("c3 = k leaves no vertices at distance 4".into()));
        }
        let c = [1, 1, c2, c3, k];
        let mut shells = [1u64; 5];
        for i in 1..5 {
            let b_prev = if i == 1 { k } else { k - c[i - 1] };
            let num = shells[i - 1] as u128 * b_prev as u128;
            if !num.is_multiple_of(c[i] as u128) {
                return Err(fail(format!("k{i} = {num}/{} is not an integer", c[i])));
            }
            shells[i] = u64::try_from(num / c[i] as u128).map_err(|_| fail("shell overflow".into()))?;
        }
        if shells.iter().sum::<u64>() % 2 != 0 {
            return Err(fail("odd number of vertices".into()));
        }
        Ok(Self { k, c2, c3, shells })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn c2(&self) -> u64 {
        self.c2
    }

    pub fn c3(&self) -> u64 {
        self.c3
    }

    pub fn triple(&self) -> (u64, u64, u64) {
        (self.k, self.c2, self.c3)
    }

    /// `cᵢ` for `i ∈ 0..=4` (with `c₀ = 0`).
    pub fn c(&self, i: usize) -> u64 {
        [0, 1, self.c2, self.c3, self.k][i]
    }

    /// `bᵢ` for `i ∈ 0..=4` (with `b₄ = 0`).
    pub fn b(&self, i: usize) -> u64 {
        if i == 4 {
            0
        } else {
            self.k - self.c(i)
        }
    }

    pub fn shells(&self) -> [u64; 5] {
        self.shells
    }

    /// Half the vertex count.
    pub fn n(&self) -> u64 {
        self.shells.iter().sum::<u64>() / 2
    }
}
