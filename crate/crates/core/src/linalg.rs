//! Exact rank of integer matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

/// A prime below 2³¹, so products of residues fit in `u64`.
pub const RANK_PRIME: u64 = 2_147_483_647;

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_bareiss(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let height = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(pivot) = (rank..height).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (top, rest) = m.split_at_mut(rank + 1);
        let p = &top[rank];
        for row in rest.iter_mut() {
            let f = row[col].clone();
            for c in col + 1..width {
                // exact division by the previous pivot
                row[c] = (&p[col] * &row[c] - &f * &p[c]) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = top[rank][col].clone();
        rank += 1;
    }
    rank
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// Rank modulo the prime `p < 2³²`. A lower bound for the rational rank, and
/// equal to it whenever it equals the number of rows.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let height = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(pivot) = (rank..height).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for x in m[rank][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        rest.par_iter_mut().for_each(|row| {
            let f = row[col];
            if f != 0 {
                for c in col..width {
                    row[c] = (row[c] + (p - f) * prow[c]) % p;
                }
            }
        });
        rank += 1;
    }
    rank
}
