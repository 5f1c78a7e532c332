//! JSON reports. Every rational is a `"p/q"` string; key order is fixed.

use crate::bounds::{BoundEvaluation, TensorRank};
use crate::families::{format_angles, format_ratio, Coverage, FamilyRun};
use crate::optimality::TightnessReport;
use serde::Serialize;
use std::collections::BTreeMap;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub results: serde_json::Value,
    pub mismatches: Vec<String>,
    pub files: Vec<String>,
    /// Wall-clock milliseconds; the only nondeterministic field.
    pub timing_ms: u64,
}

impl RunReport {
    pub fn new(command: &str, parameters: BTreeMap<String, String>) -> Self {
        Self {
            schema: SCHEMA,
            command: command.into(),
            parameters,
            ok: true,
            error: None,
            results: serde_json::Value::Null,
            mismatches: Vec::new(),
            files: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub name: String,
    pub vertices: u64,
    pub k: u64,
    pub c2: u64,
    pub c3: u64,
    pub shells: [u64; 5],
    pub theta1_squared: u64,
    pub group: Vec<u32>,
    pub base_y: u32,
    pub base_z: u32,
    pub distance_regular: Coverage,
    pub spectral_identity: Coverage,
}

#[derive(Debug, Clone, Serialize)]
pub struct SetSummary {
    pub n: u64,
    pub k: u64,
    pub e: u32,
    pub alpha: String,
    pub real: bool,
    pub space: String,
    pub angle_set: Vec<String>,
    pub unbiased_partition: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilySummary {
    pub graph: GraphSummary,
    pub set: SetSummary,
    pub bounds: BoundEvaluation,
    /// `n` equals the flat bound for the set's field.
    pub flat_tight: bool,
    pub tightness: TightnessReport,
    pub tensor_rank: Option<TensorRank>,
}

/// `R^k` or `C^k`.
pub fn space_label(real: bool, k: usize) -> String {
    format!("{}^{k}", if real { "R" } else { "C" })
}

impl From<&FamilyRun> for FamilySummary {
    fn from(r: &FamilyRun) -> Self {
        let (k, c2, c3) = r.array.triple();
        let real = r.set.is_real();
        let flat = if real {
            r.bounds.flat_real
        } else {
            r.bounds.flat_complex
        };
        FamilySummary {
            graph: GraphSummary {
                name: r.family.to_string(),
                vertices: r.acted.graph.vertex_count() as u64,
                k,
                c2,
                c3,
                shells: r.array.shells(),
                theta1_squared: r.spectrum.theta1_squared,
                group: r.acted.action.group().cyclic_orders().to_vec(),
                base_y: r.acted.y,
                base_z: r.acted.z,
                distance_regular: r.distance_regular,
                spectral_identity: r.spectral_identity,
            },
            set: SetSummary {
                n: r.set.len() as u64,
                k: r.set.dimension() as u64,
                e: r.set.root_order(),
                alpha: format_ratio(&r.alpha()),
                real,
                space: space_label(real, r.set.dimension()),
                angle_set: format_angles(&r.angles),
                unbiased_partition: r.unbiased_partition.clone(),
            },
            bounds: r.bounds.clone(),
            flat_tight: r.set.len() as u64 == flat,
            tightness: r.tightness.clone(),
            tensor_rank: r.tensor.clone(),
        }
    }
}
