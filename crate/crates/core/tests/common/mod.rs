//! Independent oracles shared by the integration suites. Nothing here calls
//! the library routine it is used to check.

#![allow(dead_code)]

use flatsets::codes::{weight, CosetGraph};
use flatsets::construction::FlatVectorSet;
use flatsets::cyclotomic;
use flatsets::groups::{FiniteAbelianGroup, GroupElement};
use std::collections::BTreeSet;

/// Invariant-factor lists `d₁ | d₂ | ⋯` (each `dᵢ ≥ 2`) with product ≤ `max`:
/// one entry per isomorphism class of abelian group of order 2..=max.
pub fn abelian_groups_up_to(max: u64) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, product: u64, max: u64, out: &mut Vec<Vec<u32>>) {
        let last = prefix.last().copied().unwrap_or(1);
        let step = if prefix.is_empty() { 1 } else { last };
        let mut d = if prefix.is_empty() { 2 } else { last };
        while product * d as u64 <= max {
            prefix.push(d);
            out.push(prefix.clone());
            extend(prefix, product * d as u64, max, out);
            prefix.pop();
            d += step;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max, &mut out);
    out
}

/// Equal mass on every multiple of `e/d` for some `d > 1` and nothing else:
/// the sum of all `d`-th roots of unity, hence zero.
fn uniform_on_subgroup(counts: &[i64]) -> bool {
    let e = counts.len();
    let Some(step) = (1..e).find(|&i| counts[i] != 0) else {
        return false;
    };
    e.is_multiple_of(step) && (0..e).all(|i| counts[i] == if i % step == 0 { counts[0] } else { 0 })
}

/// Checks `Σ_g χ(g) ψ(g)‾ = |G| δ_{χψ}` over every pair of characters of
/// every abelian group of order at most `max`; returns the failures.
pub fn orthogonality_failures(max: u64) -> Vec<String> {
    let mut failures = Vec::new();
    for orders in abelian_groups_up_to(max) {
        let g = FiniteAbelianGroup::new(&orders).unwrap();
        let e = g.exponent();
        let elements: Vec<GroupElement> = g.elements().collect();
        let chars = g.characters();
        if chars.len() as u64 != g.order() {
            failures.push(format!("{orders:?}: {} characters", chars.len()));
            continue;
        }
        // table[c][x] = exponent of χ_c(x)
        let table: Vec<Vec<u32>> = chars
            .iter()
            .map(|c| elements.iter().map(|x| g.character_value(c, x)).collect())
            .collect();
        for (i, a) in table.iter().enumerate() {
            for (j, b) in table.iter().enumerate().skip(i) {
                let mut counts = vec![0i64; e as usize];
                for (&x, &y) in a.iter().zip(b) {
                    counts[((x + e - y) % e) as usize] += 1;
                }
                let ok = if i == j {
                    counts[0] as u64 == g.order()
                } else {
                    uniform_on_subgroup(&counts) || cyclotomic::is_zero(&counts, e)
                };
                if !ok {
                    failures.push(format!("{orders:?}: characters {i} and {j}"));
                }
            }
        }
    }
    failures
}

/// Idempotence, weight minimality and coset membership of the canonical
/// representative of `v`; describes the first violation.
pub fn canonical_violation(cg: &CosetGraph, v: &[u8]) -> Option<String> {
    let code = cg.code();
    let c = cg.canonical(v).clone();
    let again = cg.canonical(&c.representative).representative.clone();
    if again != c.representative {
        return Some(format!("{v:?}: canonical form is not fixed"));
    }
    if c.weight() > weight(v) {
        return Some(format!("{v:?}: representative is heavier than the input"));
    }
    let p = code.q();
    let diff: Vec<u8> = v
        .iter()
        .zip(&c.representative)
        .map(|(&a, &b)| (a + p - b) % p)
        .collect();
    (!code.contains(&diff)).then(|| format!("{v:?}: representative leaves the coset"))
}

/// The shell recursion restated: `1 ≤ c₂ ≤ c₃ ≤ k` and
/// `k₂, k₃, k₄` integral, returning the shell sizes.
pub fn integral_shells(k: u64, c2: u64, c3: u64) -> Option<[u64; 5]> {
    if !(1 <= c2 && c2 <= c3 && c3 <= k) {
        return None;
    }
    let div = |a: u64, b: u64| a.is_multiple_of(b).then(|| a / b);
    let k2 = div(k * (k - 1), c2)?;
    let k3 = div(k2 * (k - c2), c3)?;
    let k4 = div(k3 * (k - c3), k)?;
    Some([1, k, k2, k3, k4])
}

/// Feasibility of `(k, c₂, c₃)` restated from the shell-size recursion.
pub fn feasible_oracle(k: u64, c2: u64, c3: u64) -> bool {
    if !(1 <= c2 && c2 <= c3 && c3 < k) {
        return false;
    }
    let k2n = k * (k - 1);
    if !k2n.is_multiple_of(c2) {
        return false;
    }
    let k2 = k2n / c2;
    if !(k2 * (k - c2)).is_multiple_of(c3) {
        return false;
    }
    let k3 = k2 * (k - c2) / c3;
    if !(k3 * (k - c3)).is_multiple_of(k) {
        return false;
    }
    let k4 = k3 * (k - c3) / k;
    let total = 1 + k + k2 + k3 + k4;
    if !total.is_multiple_of(2) {
        return false;
    }
    !(c2 > 1 && 2 * c3 < 3 * c2)
}

pub type Triples = BTreeSet<(u64, u64, u64)>;

/// Tight triples found by comparing `2n` (half of the summed shell sizes)
/// with the flat bounds directly, without the tightness quadratics.
pub fn brute_force_tight(max_k: u64) -> (Triples, Triples) {
    let mut real = BTreeSet::new();
    let mut complex = BTreeSet::new();
    for k in 2..=max_k {
        for c2 in 1..k {
            for c3 in c2..k {
                if !feasible_oracle(k, c2, c3) {
                    continue;
                }
                let k2 = k * (k - 1) / c2;
                let k3 = k2 * (k - c2) / c3;
                let k4 = k3 * (k - c3) / k;
                let n = (1 + k + k2 + k3 + k4) / 2;
                if 6 * n == k * (k * k + 8 - 3 * k) {
                    real.insert((k, c2, c3));
                }
                if 2 * n == k * (k * k - k + 2) {
                    complex.insert((k, c2, c3));
                }
            }
        }
    }
    (real, complex)
}

/// Exact inner product `x*y` (scaled by `k`) as coefficients over the power basis.
pub fn inner_product(e: u32, x: &[u32], y: &[u32]) -> Vec<i64> {
    let mut counts = vec![0i64; e as usize];
    for (&a, &b) in x.iter().zip(y) {
        counts[((b + e - a) % e) as usize] += 1;
    }
    cyclotomic::reduce(&counts, e)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// A coordinate permutation `σ` and vector permutation `π` with
/// `target[π(j)] = ours[j] ∘ σ`, when one exists. With `up_to_phase`, each
/// vector may also be multiplied by a power of `ζ_e`.
pub fn find_matrix_match(
    ours: &FlatVectorSet,
    target: &[Vec<u32>],
    up_to_phase: bool,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let e = ours.root_order();
    let k = ours.dimension();
    if target.len() != ours.len() || target.iter().any(|t| t.len() != k) {
        return None;
    }
    let normal = |v: Vec<u32>| {
        if up_to_phase {
            let s = v[0];
            v.into_iter().map(|x| (x + e - s) % e).collect()
        } else {
            v
        }
    };
    let targets: Vec<Vec<u32>> = target.iter().cloned().map(normal).collect();
    for sigma in permutations(k) {
        let mut used = vec![false; targets.len()];
        let mut pi = Vec::with_capacity(ours.len());
        for v in ours.vectors() {
            let w = normal(sigma.iter().map(|&i| v[i]).collect());
            match (0..targets.len()).find(|&t| !used[t] && targets[t] == w) {
                Some(t) => {
                    used[t] = true;
                    pi.push(t);
                }
                None => break,
            }
        }
        if pi.len() == ours.len() {
            return Some((sigma, pi));
        }
    }
    None
}

/// Equality of exact Gram matrices under the vector permutation `pi`.
pub fn gram_matches(ours: &FlatVectorSet, target: &[Vec<u32>], pi: &[usize]) -> bool {
    let e = ours.root_order();
    let v = ours.vectors();
    (0..v.len()).all(|i| {
        (0..v.len()).all(|j| inner_product(e, &v[i], &v[j]) == inner_product(e, &target[pi[i]], &target[pi[j]]))
    })
}

/// Equality of the angle matrices `|x*y|²` under `pi`, which per-vector
/// phases leave unchanged. Inner products of exponent vectors over the
/// fourth roots of unity are Gaussian integers, so the squared modulus is
/// computed directly.
pub fn angles_match_e4(ours: &FlatVectorSet, target: &[Vec<u32>], pi: &[usize]) -> bool {
    assert_eq!(ours.root_order(), 4);
    let norm = |x: &[u32], y: &[u32]| {
        let c = inner_product(4, x, y);
        // basis 1, i after reduction modulo x² + 1
        c[0] * c[0] + c.get(1).copied().unwrap_or(0).pow(2)
    };
    let v = ours.vectors();
    (0..v.len()).all(|i| (0..v.len()).all(|j| norm(&v[i], &v[j]) == norm(&target[pi[i]], &target[pi[j]])))
}

/// Exponents of `i` for the printed 8-cycle matrix, one row per column vector:
/// `(1, 1)`, `(i, −i)`, `(1, i)`, `(i, 1)`.
pub fn printed_8_cycle() -> Vec<Vec<u32>> {
    vec![vec![0, 0], vec![1, 3], vec![0, 1], vec![1, 0]]
}

/// Sign exponents for the printed 4-cube matrix, one row per column vector.
pub fn printed_4_cube() -> Vec<Vec<u32>> {
    let rows: [[i8; 8]; 4] = [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, -1, -1, 1, 1, -1, -1],
        [1, -1, 1, -1, 1, -1, 1, -1],
        [1, -1, -1, 1, -1, 1, 1, -1],
    ];
    (0..8)
        .map(|c| rows.iter().map(|r| u32::from(r[c] < 0)).collect())
        .collect()
}

/// Multiplication in `GF(2^m)` modulo `modulus`, by shift-and-add.
pub fn gf_mul(mut a: u32, mut b: u32, m: u32, modulus: u32) -> u32 {
    let mut r = 0;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> m & 1 == 1 {
            a ^= modulus;
        }
    }
    r
}

/// Dimension of `{x ∈ F₂^s : Σ x_a = 0, Σ x_a a = 0, Σ x_a a^{t+1} = 0}` by
/// enumerating all `2^s` vectors (`s = 2^m ≤ 16`).
pub fn kasami_dimension_brute_force(m: u32, modulus: u32, t: u32) -> u32 {
    let s = 1u32 << m;
    let pow = |a: u32, mut e: u32| {
        let mut r = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                r = gf_mul(r, base, m, modulus);
            }
            base = gf_mul(base, base, m, modulus);
            e >>= 1;
        }
        r
    };
    let mut count = 0u64;
    for x in 0u64..(1u64 << s) {
        if x.count_ones() % 2 != 0 {
            continue;
        }
        let (mut s1, mut s2) = (0u32, 0u32);
        for a in 0..s {
            if x >> a & 1 == 1 {
                s1 ^= a;
                s2 ^= pow(a, t + 1);
            }
        }
        if s1 == 0 && s2 == 0 {
            count += 1;
        }
    }
    count.trailing_zeros()
}

/// `det(λI − B)` at an integer `λ`, by exact rational elimination.
pub fn det_shifted(b: &[[i128; 5]; 5], lambda: i128) -> i128 {
    use num_rational::Ratio;
    let mut m: Vec<Vec<Ratio<i128>>> = (0..5)
        .map(|i| {
            (0..5)
                .map(|j| Ratio::from_integer(if i == j { lambda } else { 0 } - b[i][j]))
                .collect()
        })
        .collect();
    let mut det = Ratio::from_integer(1);
    for c in 0..5 {
        let Some(p) = (c..5).find(|&r| m[r][c] != Ratio::from_integer(0)) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c];
        for r in c + 1..5 {
            let f = m[r][c] / m[c][c];
            for j in c..5 {
                let v = m[c][j];
                m[r][j] -= f * v;
            }
        }
    }
    det.to_integer()
}
