//! Which intersection arrays `(k, c₂, c₃)` give sets meeting a flat bound.
//!
//! With `n` from the vertex-count formula, `n = k(k²−3k+8)/6` is equivalent to
//! `(6−c₂c₃)k² − (6c₂+6−3c₂c₃)k + (6c₂−2c₂c₃) = 0`, and `n = k(k²−k+2)/2` to
//! `(2−c₂c₃)k² − (2c₂+2−c₂c₃)k + 2c₂ = 0`. Both quadratics vanish at `k = 1`.
//!
//! Arithmetic is in `i128`, exact for `k ≤ 10⁶`.

use crate::spectra::{theta1_squared, vertex_count_ratio};
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

/// Largest `k` for which `i128` evaluation is exact.
pub const MAX_K: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Feasibility {
    pub feasible: bool,
    pub reasons: Vec<String>,
}

/// Necessary conditions for a bipartite distance-regular graph of diameter
/// four: ordering, integral shell sizes and `n`, and `c₃ ≥ 3c₂/2` when `c₂ > 1`.
pub fn feasible(k: u64, c2: u64, c3: u64) -> Feasibility {
    let mut reasons = Vec::new();
    if !(1 <= c2 && c2 <= c3 && c3 <= k) {
        reasons.push("requires 1 ≤ c2 ≤ c3 ≤ k".to_string());
    } else if c3 == k {
        reasons.push("c3 = k leaves no vertices at distance 4".to_string());
    } else {
        let (k, c2, c3) = (k as i128, c2 as i128, c3 as i128);
        let k1 = Ratio::from_integer(k);
        let k2 = k1 * (k - 1) / c2;
        let k3 = k2 * (k - c2) / c3;
        let k4 = k3 * (k - c3) / k;
        for (i, ki) in [(2, k2), (3, k3), (4, k4)] {
            if !ki.is_integer() {
                reasons.push(format!("k{i} = {ki} is not an integer"));
            }
        }
        let n = vertex_count_ratio(k as u64, c2 as u64, c3 as u64);
        if !n.is_integer() {
            reasons.push(format!("n = {n} is not an integer"));
        }
        if c2 > 1 && 2 * c3 < 3 * c2 {
            reasons.push("violates c3 ≥ 3c2/2".to_string());
        }
    }
    Feasibility {
        feasible: reasons.is_empty(),
        reasons,
    }
}

/// Left side of the real tightness equation.
pub fn real_tightness_value(k: u64, c2: u64, c3: u64) -> i128 {
    let (k, c2, c3) = (k as i128, c2 as i128, c3 as i128);
    (6 - c2 * c3) * k * k - (6 * c2 + 6 - 3 * c2 * c3) * k + (6 * c2 - 2 * c2 * c3)
}

/// Left side of the complex tightness equation.
pub fn complex_tightness_value(k: u64, c2: u64, c3: u64) -> i128 {
    let (k, c2, c3) = (k as i128, c2 as i128, c3 as i128);
    (2 - c2 * c3) * k * k - (2 * c2 + 2 - c2 * c3) * k + 2 * c2
}

pub fn real_tight(k: u64, c2: u64, c3: u64) -> bool {
    real_tightness_value(k, c2, c3) == 0
}

pub fn complex_tight(k: u64, c2: u64, c3: u64) -> bool {
    complex_tightness_value(k, c2, c3) == 0
}

/// Whether `α` can be an angle between two `±1/√k` vectors: `α = t²/k²`
/// with `t ≥ 1` and `t ≡ k (mod 2)`.
pub fn flat_angle_compatible_real(k: u64, alpha: Ratio<i64>) -> bool {
    let scaled = alpha * Ratio::from_integer((k * k) as i64);
    if !scaled.is_integer() || scaled.to_integer() < 1 {
        return false;
    }
    let v = scaled.to_integer() as u64;
    let t = v.isqrt();
    t * t == v && t % 2 == k % 2
}

/// Outcome for a tight, feasible triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    /// Realized by a graph this crate builds.
    Realized { graph: String },
    /// The angle cannot occur between real flat vectors.
    AngleIncompatible,
    /// No graph exists by the classification of arrays with `(c₂, c₃) = (2, 3)`.
    ExcludedByClassification,
    /// Tight, with realization status not settled by any table entry.
    Open,
}

/// Graphs shipped here that realize tight arrays, keyed by `(k, c₂, c₃, real)`.
const REALIZATIONS: &[(u64, u64, u64, bool, &str)] = &[
    (2, 1, 1, false, "8-cycle"),
    (4, 2, 3, true, "4-cube"),
    (8, 2, 3, true, "folded-8-cube"),
    (24, 2, 3, true, "golay"),
];

fn verdict(k: u64, c2: u64, c3: u64, real: bool) -> Verdict {
    if let Some(&(.., name)) = REALIZATIONS
        .iter()
        .find(|&&(a, b, c, r, _)| (a, b, c, r) == (k, c2, c3, real))
    {
        return Verdict::Realized { graph: name.into() };
    }
    if real {
        // distance-regular graphs with these arrays exist only for k ∈ {4, 8, 24}
        if (c2, c3) == (2, 3) {
            return Verdict::ExcludedByClassification;
        }
        let alpha = Ratio::new(theta1_squared(k as i128, c2 as i128, c3 as i128) as i64, (k * k) as i64);
        if !flat_angle_compatible_real(k, alpha) {
            return Verdict::AngleIncompatible;
        }
    }
    Verdict::Open
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightnessReport {
    pub k: u64,
    pub c2: u64,
    pub c3: u64,
    pub n: u64,
    pub theta1_squared: u64,
    pub feasible: Feasibility,
    pub real_tight: bool,
    pub complex_tight: bool,
    pub flat_angle_compatible_real: bool,
    pub real_verdict: Option<Verdict>,
    pub complex_verdict: Option<Verdict>,
}

/// Report for a feasible triple.
pub fn tightness_report(k: u64, c2: u64, c3: u64) -> TightnessReport {
    let feasibility = feasible(k, c2, c3);
    let n = vertex_count_ratio(k, c2, c3);
    let t2 = theta1_squared(k as i128, c2 as i128, c3 as i128);
    let alpha = Ratio::new(t2 as i64, (k * k) as i64);
    let rt = real_tight(k, c2, c3);
    let ct = complex_tight(k, c2, c3);
    let ok = feasibility.feasible;
    TightnessReport {
        k,
        c2,
        c3,
        n: if n.is_integer() { n.to_integer() as u64 } else { 0 },
        theta1_squared: t2 as u64,
        feasible: feasibility,
        real_tight: rt,
        complex_tight: ct,
        flat_angle_compatible_real: flat_angle_compatible_real(k, alpha),
        real_verdict: (ok && rt).then(|| verdict(k, c2, c3, true)),
        complex_verdict: (ok && ct).then(|| verdict(k, c2, c3, false)),
    }
}

/// All feasible triples with `1 ≤ c₂ ≤ c₃ < k ≤ max_k` meeting either flat
/// bound, ordered by `(k, c₂, c₃)`.
pub fn search_tight(max_k: u64) -> Vec<TightnessReport> {
    let max_k = max_k.min(MAX_K);
    (2..=max_k)
        .into_par_iter()
        .flat_map_iter(|k| {
            (1..k).flat_map(move |c2| {
                (c2..k).filter_map(move |c3| {
                    if !(real_tight(k, c2, c3) || complex_tight(k, c2, c3)) {
                        return None;
                    }
                    let r = tightness_report(k, c2, c3);
                    r.feasible.feasible.then_some(r)
                })
            })
        })
        .collect()
}
