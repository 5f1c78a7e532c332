//! Size bounds for `{0, α}`-sets and the tensor-rank certificate behind the
//! flat bounds.
//!
//! For a flat unit vector `x ∈ C^m`, the tensor `v_x = x ⊗ x ⊗ x̄` has equal
//! entries at `(i, j, j)`, `(j, i, j)` and `(i, i, i)`, since each equals
//! `x_i / m`. It is also symmetric in its first two indices, and in the real
//! case symmetric in all three. The span of the `v_x` therefore lies in a
//! coordinate subspace whose dimension is the flat bound.

use crate::construction::FlatVectorSet;
use crate::cyclotomic;
use crate::error::{Error, Result};
use crate::linalg;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

/// `(m²(m+1)/2, m(m+1)(m+2)/6)`.
pub fn dgs_bounds(m: u64) -> (u64, u64) {
    (m * m * (m + 1) / 2, m * (m + 1) * (m + 2) / 6)
}

/// `(m(m²−m+2)/2, m(m²−3m+8)/6)`.
pub fn flat_bounds(m: u64) -> (u64, u64) {
    (m * (m * m - m + 2) / 2, m * (m * m + 8 - 3 * m) / 6)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    DgsComplex,
    DgsReal,
    FlatComplex,
    FlatReal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEvaluation {
    pub m: u64,
    pub dgs_complex: u64,
    pub dgs_real: u64,
    pub flat_complex: u64,
    pub flat_real: u64,
    pub n: u64,
    /// Bounds met with equality, among those that apply to the field.
    pub tight_against: Vec<Bound>,
}

/// Evaluates the four bounds in dimension `m` for a flat set of size `n`.
/// Real sets are compared against the real bounds, complex ones against the complex.
pub fn evaluate_bounds(m: u64, n: u64, real: bool) -> BoundEvaluation {
    let (dgs_complex, dgs_real) = dgs_bounds(m);
    let (flat_complex, flat_real) = flat_bounds(m);
    let candidates = if real {
        [(Bound::DgsReal, dgs_real), (Bound::FlatReal, flat_real)]
    } else {
        [(Bound::DgsComplex, dgs_complex), (Bound::FlatComplex, flat_complex)]
    };
    BoundEvaluation {
        m,
        dgs_complex,
        dgs_real,
        flat_complex,
        flat_real,
        n,
        tight_against: candidates.iter().filter(|(_, b)| *b == n).map(|(b, _)| *b).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorRank {
    pub rank: u64,
    /// Number of coordinate classes the span is confined to.
    pub cap: u64,
    /// Every `v_x` is constant on each coordinate class.
    pub collapse_holds: bool,
    /// `"bareiss"` or `"modular"`.
    pub method: &'static str,
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.0[r as usize] != r {
            r = self.0[r as usize];
        }
        let mut y = x;
        while self.0[y as usize] != r {
            let next = self.0[y as usize];
            self.0[y as usize] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Class of each tensor index `(a, b, c) ↦ a·m² + b·m + c`, numbered by first
/// occurrence, and the number of classes.
pub fn tensor_index_classes(m: usize, real: bool) -> (Vec<u32>, usize) {
    let idx = |a: usize, b: usize, c: usize| (a * m * m + b * m + c) as u32;
    let mut uf = UnionFind((0..(m * m * m) as u32).collect());
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                uf.union(idx(a, b, c), idx(b, a, c));
                if real {
                    uf.union(idx(a, b, c), idx(c, b, a));
                }
            }
            // x_a x_b x̄_b = x_a / m
            uf.union(idx(a, b, b), idx(a, a, a));
        }
    }
    let mut label = vec![u32::MAX; m * m * m];
    let mut classes = Vec::with_capacity(m * m * m);
    let mut count = 0u32;
    for i in 0..(m * m * m) as u32 {
        let r = uf.find(i) as usize;
        if label[r] == u32::MAX {
            label[r] = count;
            count += 1;
        }
        classes.push(label[r]);
    }
    (classes, count as usize)
}

/// Row-count threshold above which only modular rank is attempted.
pub const BAREISS_MAX_ROWS: usize = 512;

/// Exact rank of `{v_x : x ∈ S}` and the coordinate-class cap, after checking
/// that each `v_x` is constant on each class.
///
/// Entries of `m^{3/2} v_x` are `ζ^{e_a + e_b − e_c}`. Rank over `Q(ζ)` is the
/// rational rank of the regular representation divided by `φ(e)`.
pub fn tensor_rank_check(s: &FlatVectorSet) -> Result<TensorRank> {
    let one = Ratio::from_integer(1);
    if s.angle_set()?.iter().any(|&a| a >= one) {
        return Err(Error::Domain("angle set contains a value ≥ 1".into()));
    }
    let m = s.dimension();
    let e = s.root_order();
    let real = s.is_real();
    let (classes, cap) = tensor_index_classes(m, real);
    let mut representative = vec![usize::MAX; cap];
    for (i, &c) in classes.iter().enumerate() {
        if representative[c as usize] == usize::MAX {
            representative[c as usize] = i;
        }
    }
    let exponent = |x: &[u32], i: usize| {
        let (a, b, c) = (i / (m * m), (i / m) % m, i % m);
        (x[a] + x[b] + e - x[c]) % e
    };
    let collapse_holds = s
        .vectors()
        .par_iter()
        .all(|x| (0..m * m * m).all(|i| exponent(x, i) == exponent(x, representative[classes[i] as usize])));
    let reduced: Vec<Vec<u32>> = s
        .vectors()
        .iter()
        .map(|x| representative.iter().map(|&i| exponent(x, i)).collect())
        .collect();

    let phi = cyclotomic::totient(e) as usize;
    let powers = cyclotomic::power_table(e);
    let mut rows = Vec::with_capacity(reduced.len() * phi);
    for x in &reduced {
        for t in 0..phi as u32 {
            let mut row = Vec::with_capacity(cap * phi);
            for &r in x {
                row.extend_from_slice(&powers[((r + t) % e) as usize]);
            }
            rows.push(row);
        }
    }
    let (raw, method) = if rows.len() <= BAREISS_MAX_ROWS {
        (linalg::rank_bareiss(&rows), "bareiss")
    } else {
        let r = linalg::rank_mod_p(&rows, linalg::RANK_PRIME);
        if r != rows.len() {
            return Err(Error::Structure(format!(
                "modular rank {r} < {} rows is inconclusive",
                rows.len()
            )));
        }
        (r, "modular")
    };
    Ok(TensorRank {
        rank: (raw / phi) as u64,
        cap: cap as u64,
        collapse_holds,
        method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_examples() {
        assert_eq!(dgs_bounds(4), (40, 20));
        assert_eq!(dgs_bounds(2), (6, 4));
        assert_eq!(dgs_bounds(24), (7200, 2600));
        assert_eq!(flat_bounds(4).1, 8);
        assert_eq!(flat_bounds(2).0, 4);
        assert_eq!(flat_bounds(24).1, 2048);
        assert_eq!(flat_bounds(6).0, 96);
    }

    #[test]
    fn class_counts_match_bounds() {
        for m in 1..=9 {
            let (fc, fr) = flat_bounds(m as u64);
            assert_eq!(tensor_index_classes(m, false).1 as u64, fc, "complex m={m}");
            assert_eq!(tensor_index_classes(m, true).1 as u64, fr, "real m={m}");
        }
    }

    #[test]
    fn orthonormal_pair_has_rank_two() {
        let s = FlatVectorSet::new(2, 2, vec![vec![0, 0], vec![0, 1]], None).unwrap();
        let t = tensor_rank_check(&s).unwrap();
        assert_eq!(t.rank, 2);
        assert!(t.collapse_holds);
    }

    #[test]
    fn repeated_vector_is_rejected() {
        let s = FlatVectorSet::new(2, 4, vec![vec![0, 1], vec![1, 2]], None).unwrap();
        assert!(matches!(tensor_rank_check(&s), Err(Error::Domain(_))));
    }

    #[test]
    fn tight_against_respects_field() {
        let b = evaluate_bounds(2, 4, false);
        assert_eq!(b.tight_against, vec![Bound::FlatComplex]);
        let b = evaluate_bounds(24, 2048, true);
        assert_eq!(b.tight_against, vec![Bound::FlatReal]);
    }
}
