//! Eigenvalue data of bipartite distance-regular graphs of diameter four.
//!
//! The nontrivial eigenvalue `θ₁` is carried as the integer `θ₁²`; every check
//! is a polynomial identity over the integers.

use crate::error::{Error, Result};
use crate::graphs::{BipartiteGraph, IntersectionArray};
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

/// Spectrum `{±k, ±θ₁, 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub k: u64,
    pub theta1_squared: u64,
}

impl Spectrum {
    /// `θ₁` when it is an integer.
    pub fn theta1(&self) -> Option<u64> {
        let r = self.theta1_squared.isqrt();
        (r * r == self.theta1_squared).then_some(r)
    }

    /// `θ₁² / k²`, the nonzero angle of the constructed set.
    pub fn alpha(&self) -> Ratio<i64> {
        Ratio::new(self.theta1_squared as i64, (self.k * self.k) as i64)
    }
}

/// `θ₁² = k + c₂(k − c₃ − 1)` as a signed value.
pub fn theta1_squared(k: i128, c2: i128, c3: i128) -> i128 {
    k + c2 * (k - c3 - 1)
}

/// The 5×5 tridiagonal matrix `B` of the intersection array.
pub fn tridiagonal_matrix(ia: &IntersectionArray) -> [[i128; 5]; 5] {
    let mut b = [[0i128; 5]; 5];
    for i in 0..5 {
        if i + 1 < 5 {
            b[i][i + 1] = ia.c(i + 1) as i128;
            b[i + 1][i] = ia.b(i) as i128;
        }
    }
    b
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_assign(acc: &mut Vec<i128>, p: &[i128], sign: i128) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (a, &x) in acc.iter_mut().zip(p) {
        *a += sign * x;
    }
}

fn trim(mut p: Vec<i128>) -> Vec<i128> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// `det(λI − M)` by cofactor expansion, coefficients lowest degree first.
pub fn characteristic_polynomial<const N: usize>(m: &[[i128; N]; N]) -> Vec<i128> {
    fn det(entries: &[Vec<Vec<i128>>], rows: &[usize], cols: &[usize]) -> Vec<i128> {
        if rows.is_empty() {
            return vec![1];
        }
        let r = rows[0];
        let mut acc = vec![0i128];
        for (pos, &c) in cols.iter().enumerate() {
            let entry = &entries[r][c];
            if entry.iter().all(|&x| x == 0) {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = det(entries, &rows[1..], &rest);
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            poly_add_assign(&mut acc, &poly_mul(entry, &minor), sign);
        }
        acc
    }
    let entries: Vec<Vec<Vec<i128>>> = (0..N)
        .map(|i| {
            (0..N)
                .map(|j| if i == j { vec![-m[i][j], 1] } else { vec![-m[i][j]] })
                .collect()
        })
        .collect();
    let idx: Vec<usize> = (0..N).collect();
    trim(det(&entries, &idx, &idx))
}

/// `λ(λ² − k²)(λ² − θ₁²)`.
pub fn expected_characteristic_polynomial(k: i128, theta1_squared: i128) -> Vec<i128> {
    let a = [-(k * k), 0, 1];
    let b = [-theta1_squared, 0, 1];
    poly_mul(&[0, 1], &poly_mul(&a, &b))
}

/// Spectrum of the array, after confirming `det(λI − B)` factors as
/// `λ(λ² − k²)(λ² − θ₁²)`.
pub fn spectrum_from_array(ia: &IntersectionArray) -> Result<Spectrum> {
    let (k, c2, c3) = ia.triple();
    let t2 = theta1_squared(k as i128, c2 as i128, c3 as i128);
    if t2 <= 0 {
        return Err(Error::InfeasibleArray {
            k,
            c2,
            c3,
            reason: format!("θ1² = {t2} ≤ 0"),
        });
    }
    let charpoly = characteristic_polynomial(&tridiagonal_matrix(ia));
    if charpoly != expected_characteristic_polynomial(k as i128, t2) {
        return Err(Error::Structure(format!(
            "characteristic polynomial of B is {charpoly:?}"
        )));
    }
    Ok(Spectrum {
        k,
        theta1_squared: t2 as u64,
    })
}

/// `n = k(k² − (c₂+1)k + c₂(c₃+1)) / (c₂c₃)` as an exact rational.
pub fn vertex_count_ratio(k: u64, c2: u64, c3: u64) -> Ratio<i128> {
    let (k, c2, c3) = (k as i128, c2 as i128, c3 as i128);
    Ratio::new(k * (k * k - (c2 + 1) * k + c2 * (c3 + 1)), c2 * c3)
}

/// Half the vertex count, from the closed form.
pub fn vertex_count(ia: &IntersectionArray) -> Result<u64> {
    let (k, c2, c3) = ia.triple();
    let n = vertex_count_ratio(k, c2, c3);
    if !n.is_integer() {
        return Err(Error::InfeasibleArray {
            k,
            c2,
            c3,
            reason: format!("n = {n} is not an integer"),
        });
    }
    Ok(n.to_integer() as u64)
}

/// Column `j` of `A(A² − θ₁²I)(A² − k²I)` by five sparse products.
fn annihilator_column(graph: &BipartiteGraph, s: &Spectrum, j: u32) -> Vec<i64> {
    let n = graph.vertex_count();
    let apply = |v: &[i64]| {
        let mut out = vec![0i64; n];
        for (u, &x) in v.iter().enumerate() {
            if x != 0 {
                for &w in graph.neighbours(u as u32) {
                    out[w as usize] += x;
                }
            }
        }
        out
    };
    let mut e = vec![0i64; n];
    e[j as usize] = 1;
    let a1 = apply(&e);
    let a2 = apply(&a1);
    let a3 = apply(&a2);
    let a4 = apply(&a3);
    let a5 = apply(&a4);
    let (t2, k2) = (s.theta1_squared as i64, (s.k * s.k) as i64);
    // A⁵ − (θ² + k²)A³ + θ²k²A
    (0..n).map(|i| a5[i] - (t2 + k2) * a3[i] + t2 * k2 * a1[i]).collect()
}

/// Checks `A(A² − θ₁²I)(A² − k²I) = 0` on the given columns.
pub fn verify_spectral_identity_columns(graph: &BipartiteGraph, s: &Spectrum, columns: &[u32]) -> Result<()> {
    let bad = columns
        .par_iter()
        .filter_map(|&j| {
            let col = annihilator_column(graph, s, j);
            col.iter().position(|&x| x != 0).map(|i| Error::SpectralMismatch {
                row: i as u32,
                col: j,
                value: col[i],
            })
        })
        .min_by_key(|e| match e {
            Error::SpectralMismatch { col, .. } => *col,
            _ => u32::MAX,
        });
    match bad {
        Some(err) => Err(err),
        None => Ok(()),
    }
}

/// Checks `A(A² − θ₁²I)(A² − k²I) = 0` exactly on every column.
pub fn verify_spectral_identity(graph: &BipartiteGraph, s: &Spectrum) -> Result<()> {
    let all: Vec<u32> = (0..graph.vertex_count() as u32).collect();
    verify_spectral_identity_columns(graph, s, &all)
}
