//! End-to-end runs over the shipped graph families: build, verify, construct,
//! and evaluate against the bounds.

use crate::bounds::{self, BoundEvaluation, TensorRank};
use crate::codes::KasamiParams;
use crate::construction::{godsil_roy, FlatVectorSet};
use crate::cyclotomic;
use crate::error::{Error, Result};
use crate::graphs::{self, ActedGraph, IntersectionArray};
use crate::optimality::{self, TightnessReport};
use crate::spectra::{self, Spectrum};
use num_rational::Ratio;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Graphs with at most this many vertices are verified from every vertex.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    EightCycle,
    FourCube,
    FoldedEightCube,
    Vls,
    Golay,
    Kasami(KasamiParams),
}

impl Family {
    /// Every named family, with `K(4, 2)` and `K(8, 2)` standing in for Kasami.
    pub fn all() -> Vec<Family> {
        vec![
            Family::EightCycle,
            Family::FourCube,
            Family::FoldedEightCube,
            Family::Vls,
            Family::Golay,
            Family::Kasami(KasamiParams::variant_ii(2).expect("valid")),
            Family::Kasami(KasamiParams::variant_i(2, 1, 1).expect("valid")),
        ]
    }

    pub fn build(&self) -> Result<ActedGraph> {
        match self {
            Family::EightCycle => graphs::build_8_cycle(),
            Family::FourCube => graphs::build_4_cube(),
            Family::FoldedEightCube => graphs::build_folded_8_cube(),
            Family::Vls => graphs::build_vls_incidence(),
            Family::Golay => graphs::build_golay_coset_graph(),
            Family::Kasami(p) => graphs::build_kasami_coset_graph(p),
        }
    }

    /// Families whose sets are checked for a partition into unbiased bases.
    fn has_unbiased_partition(&self) -> bool {
        matches!(self, Family::EightCycle | Family::FourCube)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::EightCycle => "8-cycle".to_string(),
            Family::FourCube => "4-cube".to_string(),
            Family::FoldedEightCube => "folded-8-cube".to_string(),
            Family::Vls => "vls".to_string(),
            Family::Golay => "golay".to_string(),
            Family::Kasami(p) => format!("kasami({p})"),
        };
        f.pad(&name)
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses a graph name; Kasami codes are parsed from their parameter string.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "8-cycle" => Family::EightCycle,
            "4-cube" => Family::FourCube,
            "folded-8-cube" => Family::FoldedEightCube,
            "vls" => Family::Vls,
            "golay" => Family::Golay,
            other => {
                let inner = other
                    .strip_prefix("kasami(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("unknown graph {other:?}")))?;
                Family::Kasami(inner.parse()?)
            }
        })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Attempt the tensor-rank check on large sets too.
    pub deep: bool,
}

/// How a graph-wide property was checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coverage {
    /// From every vertex (or on every column).
    Exhaustive,
    /// From one vertex per colour class, using the verified regular action.
    OrbitRepresentatives,
}

#[derive(Debug, Clone)]
pub struct FamilyRun {
    pub family: Family,
    pub acted: ActedGraph,
    pub array: IntersectionArray,
    pub distance_regular: Coverage,
    pub spectrum: Spectrum,
    pub spectral_identity: Coverage,
    pub set: FlatVectorSet,
    pub angles: BTreeSet<Ratio<i64>>,
    pub bounds: BoundEvaluation,
    pub tightness: TightnessReport,
    pub tensor: Option<TensorRank>,
    pub unbiased_partition: Option<Vec<Vec<usize>>>,
}

impl FamilyRun {
    pub fn alpha(&self) -> Ratio<i64> {
        self.spectrum.alpha()
    }
}

/// Widest coordinate matrix the tensor check handles without `deep`.
pub const DEFAULT_TENSOR_MAX_COLUMNS: usize = 2048;

/// Whether the tensor check runs by default: small enough for exact elimination.
fn tensor_by_default(set: &FlatVectorSet) -> bool {
    let phi = cyclotomic::totient(set.root_order()) as usize;
    let (complex_cap, real_cap) = bounds::flat_bounds(set.dimension() as u64);
    let cap = if set.is_real() { real_cap } else { complex_cap } as usize;
    set.len() * phi <= bounds::BAREISS_MAX_ROWS && cap * phi <= DEFAULT_TENSOR_MAX_COLUMNS
}

/// Builds the family and verifies every claim about it.
pub fn run_family(family: Family, options: RunOptions) -> Result<FamilyRun> {
    let acted = family.build()?;
    let graph = &acted.graph;
    let (array, distance_regular) = if graph.vertex_count() <= EXHAUSTIVE_MAX_VERTICES {
        (graphs::verify_distance_regular(graph)?, Coverage::Exhaustive)
    } else {
        (
            graphs::verify_distance_regular_by_orbits(graph, &acted.action)?,
            Coverage::OrbitRepresentatives,
        )
    };
    let n = spectra::vertex_count(&array)?;
    if 2 * n != graph.vertex_count() as u64 {
        return Err(Error::Structure(format!(
            "vertex-count formula gives 2n = {} but the graph has {}",
            2 * n,
            graph.vertex_count()
        )));
    }
    let spectrum = spectra::spectrum_from_array(&array)?;
    let spectral_identity = if graph.vertex_count() <= EXHAUSTIVE_MAX_VERTICES {
        spectra::verify_spectral_identity(graph, &spectrum)?;
        Coverage::Exhaustive
    } else {
        // the annihilator commutes with the verified action
        spectra::verify_spectral_identity_columns(graph, &spectrum, &[acted.y, acted.z])?;
        Coverage::OrbitRepresentatives
    };

    let set = godsil_roy(graph, &acted.action, acted.y, acted.z, &spectrum)?;
    if set.len() as u64 != n {
        return Err(Error::Structure(format!("{} vectors but n = {n}", set.len())));
    }
    let angles = set.angle_set()?;
    let expected: BTreeSet<_> = [Ratio::from_integer(0), spectrum.alpha()].into();
    if angles != expected {
        return Err(Error::Structure(format!(
            "angle set {} differs from {{0, {}}}",
            format_angles(&angles).join(", "),
            spectrum.alpha()
        )));
    }
    let (k, c2, c3) = array.triple();
    let bounds = bounds::evaluate_bounds(k, n, set.is_real());
    let tightness = optimality::tightness_report(k, c2, c3);
    let tensor = if tensor_by_default(&set) || options.deep {
        Some(bounds::tensor_rank_check(&set)?)
    } else {
        None
    };
    let unbiased_partition = if family.has_unbiased_partition() {
        Some(
            set.mutually_unbiased_partition()?
                .ok_or_else(|| Error::Structure("no partition into unbiased bases".into()))?,
        )
    } else {
        None
    };
    Ok(FamilyRun {
        family,
        acted,
        array,
        distance_regular,
        spectrum,
        spectral_identity,
        set,
        angles,
        bounds,
        tightness,
        tensor,
        unbiased_partition,
    })
}

/// `p/q` with the denominator always present.
pub fn format_ratio<T: fmt::Display + Clone + num_integer::Integer>(r: &Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn format_angles(angles: &BTreeSet<Ratio<i64>>) -> Vec<String> {
    angles.iter().map(format_ratio).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for f in Family::all() {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("petersen".parse::<Family>().is_err());
    }

    #[test]
    fn small_families_run() {
        let r = run_family(Family::FourCube, RunOptions::default()).unwrap();
        assert_eq!(r.set.len(), 8);
        assert_eq!(r.tensor.as_ref().unwrap().rank, 8);
        assert_eq!(r.unbiased_partition.as_ref().unwrap().len(), 2);
        let r = run_family(Family::EightCycle, RunOptions::default()).unwrap();
        assert_eq!(r.alpha(), Ratio::new(1, 2));
        assert!(!r.set.is_real());
    }

    #[test]
    fn ratio_format_keeps_denominator() {
        assert_eq!(format_ratio(&Ratio::from_integer(0i64)), "0/1");
        assert_eq!(format_ratio(&Ratio::new(2i64, 8)), "1/4");
    }
}
