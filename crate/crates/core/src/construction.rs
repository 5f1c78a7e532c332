//! Sets of flat unit vectors from characters restricted to a difference set.
//!
//! Given a connected bipartite graph with an abelian group `G` acting regularly
//! on both colour classes and base vertices `y ∈ Y`, `z ∈ Z`, let
//! `D = {g : z^g ~ y}`. Every character of `G`, restricted to `D` and scaled by
//! `1/√k`, is a flat unit vector in `C^k`, and the pairwise angles are `λ²/k²`
//! for the eigenvalues `λ ≠ ±k` of the graph.

use crate::cyclotomic;
use crate::error::{Error, Result};
use crate::graphs::{regular_action_difference_set, BipartiteGraph, GroupAction};
use crate::spectra::Spectrum;
use num_rational::Ratio;
use rayon::prelude::*;
use std::collections::BTreeSet;

/// `n` flat unit vectors in `C^k`. Entry `(i, j)` is `ζ_e^{vectors[i][j]} / √k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatVectorSet {
    dimension: usize,
    root_order: u32,
    vectors: Vec<Vec<u32>>,
    alpha: Option<Ratio<i64>>,
}

impl FlatVectorSet {
    pub fn new(dimension: usize, root_order: u32, vectors: Vec<Vec<u32>>, alpha: Option<Ratio<i64>>) -> Result<Self> {
        if root_order == 0 {
            return Err(Error::Domain("root order must be positive".into()));
        }
        if dimension == 0 {
            return Err(Error::Domain("dimension must be positive".into()));
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dimension {
                return Err(Error::Domain(format!(
                    "vector {i} has length {}, expected {dimension}",
                    v.len()
                )));
            }
            if let Some(&x) = v.iter().find(|&&x| x >= root_order) {
                return Err(Error::Domain(format!("vector {i} has exponent {x} ≥ {root_order}")));
            }
        }
        Ok(Self {
            dimension,
            root_order,
            vectors,
            alpha,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.vectors
    }

    /// The declared nonzero angle `θ₁²/k²`, if known.
    pub fn alpha(&self) -> Option<Ratio<i64>> {
        self.alpha
    }

    /// True iff every entry is `±1/√k`.
    pub fn is_real(&self) -> bool {
        let e = self.root_order;
        self.vectors.iter().flatten().all(|&x| (2 * x) % e == 0)
    }

    /// Histogram of `b_j − a_j mod e`; the inner product `x*y` is `Σ_r counts[r] ζ^r / k`.
    fn difference_counts(&self, a: &[u32], b: &[u32]) -> Vec<i64> {
        let e = self.root_order;
        let mut counts = vec![0i64; e as usize];
        for (&x, &y) in a.iter().zip(b) {
            counts[((y + e - x) % e) as usize] += 1;
        }
        counts
    }

    /// `k² · |x*y|²` for the two vectors.
    fn scaled_angle(&self, a: &[u32], b: &[u32]) -> Result<i64> {
        let c = self.difference_counts(a, b);
        Ok(match self.root_order {
            1 => c[0] * c[0],
            2 => (c[0] - c[1]).pow(2),
            3 => {
                let (x, y) = (c[0] - c[2], c[1] - c[2]);
                x * x - x * y + y * y
            }
            4 => (c[0] - c[2]).pow(2) + (c[1] - c[3]).pow(2),
            e => cyclotomic::squared_modulus(&c, e)
                .ok_or_else(|| Error::Domain(format!("angle is irrational for root order {e}")))?,
        })
    }

    /// The angle `|x_i* x_j|²` between vectors `i` and `j`.
    pub fn angle(&self, i: usize, j: usize) -> Result<Ratio<i64>> {
        let k2 = (self.dimension * self.dimension) as i64;
        Ok(Ratio::new(self.scaled_angle(&self.vectors[i], &self.vectors[j])?, k2))
    }

    /// The set of angles over all pairs of distinct vectors.
    pub fn angle_set(&self) -> Result<BTreeSet<Ratio<i64>>> {
        let k2 = (self.dimension * self.dimension) as i64;
        let scaled: BTreeSet<i64> = if self.root_order == 2 {
            self.binary_scaled_angles()
        } else {
            (0..self.len())
                .into_par_iter()
                .map(|i| {
                    let mut seen = BTreeSet::new();
                    for j in i + 1..self.len() {
                        seen.insert(self.scaled_angle(&self.vectors[i], &self.vectors[j])?);
                    }
                    Ok(seen)
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect()
        };
        Ok(scaled.into_iter().map(|s| Ratio::new(s, k2)).collect())
    }

    /// Real ±1 case: `x·y = k − 2·dist_H`, computed on packed bit vectors.
    fn binary_scaled_angles(&self) -> BTreeSet<i64> {
        let words = self.dimension.div_ceil(64);
        let packed: Vec<Vec<u64>> = self
            .vectors
            .iter()
            .map(|v| {
                let mut w = vec![0u64; words];
                for (j, &x) in v.iter().enumerate() {
                    w[j / 64] |= (x as u64) << (j % 64);
                }
                w
            })
            .collect();
        let k = self.dimension as i64;
        (0..packed.len())
            .into_par_iter()
            .map(|i| {
                let mut seen = BTreeSet::new();
                for j in i + 1..packed.len() {
                    let d: u32 = packed[i]
                        .iter()
                        .zip(&packed[j])
                        .map(|(a, b)| (a ^ b).count_ones())
                        .sum();
                    seen.insert((k - 2 * d as i64).pow(2));
                }
                seen
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    }

    /// Partition into orthonormal bases of `C^k` that are pairwise unbiased, if
    /// the orthogonality relation splits the set that way.
    pub fn mutually_unbiased_partition(&self) -> Result<Option<Vec<Vec<usize>>>> {
        let n = self.len();
        let k = self.dimension;
        if n == 0 || !n.is_multiple_of(k) {
            return Ok(None);
        }
        let zero = Ratio::from_integer(0);
        let unbiased = Ratio::new(1, k as i64);
        let mut block = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if block[i] != usize::MAX {
                continue;
            }
            let mut members = vec![i];
            for j in i + 1..n {
                if self.angle(i, j)? == zero {
                    members.push(j);
                }
            }
            if members.len() != k || members.iter().any(|&m| block[m] != usize::MAX) {
                return Ok(None);
            }
            for &m in &members {
                block[m] = blocks.len();
            }
            blocks.push(members);
        }
        for i in 0..n {
            for j in i + 1..n {
                let a = self.angle(i, j)?;
                let ok = if block[i] == block[j] { a == zero } else { a == unbiased };
                if !ok {
                    return Ok(None);
                }
            }
        }
        Ok(Some(blocks))
    }
}

/// Characters of the acting group restricted to the difference set of `(y, z)`.
pub fn godsil_roy(
    graph: &BipartiteGraph,
    action: &GroupAction,
    y: u32,
    z: u32,
    spectrum: &Spectrum,
) -> Result<FlatVectorSet> {
    let d = regular_action_difference_set(graph, action, y, z)?;
    if d.len() as u64 != spectrum.k {
        return Err(Error::Structure(format!(
            "valency {} does not match the spectrum's k = {}",
            d.len(),
            spectrum.k
        )));
    }
    let group = action.group();
    let vectors = group
        .characters()
        .par_iter()
        .map(|chi| d.iter().map(|g| group.character_value(chi, g)).collect())
        .collect();
    FlatVectorSet::new(d.len(), group.exponent(), vectors, Some(spectrum.alpha()))
}
