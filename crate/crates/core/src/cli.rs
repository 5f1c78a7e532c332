//! Command implementations behind the `flatsets` binary. Each returns a report
//! and an exit status: 0 success, 1 verification failure, 2 usage error.

use crate::error::Error;
use crate::families::{format_ratio, run_family, Family, FamilyRun, RunOptions};
use crate::formats;
use crate::optimality::{self, TightnessReport};
use crate::report::{space_label, FamilySummary, RunReport};
use num_rational::Ratio;
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailure = 1,
    Usage = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    /// Bad input is a usage error; everything else means a check failed.
    pub fn for_error(err: &Error) -> Self {
        match err {
            Error::Parameters(_) | Error::Parse(_) | Error::SizeCap { .. } | Error::InvalidGroup(_) => Self::Usage,
            _ => Self::VerificationFailure,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub report: RunReport,
    pub status: ExitStatus,
}

impl CommandOutput {
    fn finish(mut report: RunReport, status: ExitStatus, start: Instant) -> Self {
        report.ok = status == ExitStatus::Success;
        report.timing_ms = start.elapsed().as_millis() as u64;
        Self { report, status }
    }

    fn failed(mut report: RunReport, err: &Error, start: Instant) -> Self {
        report.error = Some(err.to_string());
        Self::finish(report, ExitStatus::for_error(err), start)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "real" => Ok(Field::Real),
            "complex" => Ok(Field::Complex),
            other => Err(Error::Parse(format!("field must be real or complex, got {other:?}"))),
        }
    }
}

/// File stem for a family: `kasami(q=2,variant=ii)` becomes `kasami_q2_variant-ii`.
pub fn file_stem(family: &Family) -> String {
    family
        .to_string()
        .replace('(', "_")
        .replace([')', '='], "")
        .replace(',', "_")
}

fn write_exports(run: &FamilyRun, dir: &Path) -> Result<Vec<String>, Error> {
    std::fs::create_dir_all(dir)?;
    let stem = file_stem(&run.family);
    let adjacency = dir.join(format!("{stem}.adjacency.txt"));
    let vectors = dir.join(format!("{stem}.vectors.txt"));
    std::fs::write(&adjacency, formats::write_adjacency(&run.acted.graph))?;
    std::fs::write(&vectors, formats::write_vectors(&run.set))?;
    Ok(vec![adjacency.display().to_string(), vectors.display().to_string()])
}

fn family_parameters(family: &Family, deep: bool, out: Option<&Path>) -> BTreeMap<String, String> {
    let mut p = BTreeMap::new();
    p.insert("graph".into(), family.to_string());
    p.insert("deep".into(), deep.to_string());
    if let Some(dir) = out {
        p.insert("out".into(), dir.display().to_string());
    }
    p
}

/// Builds and verifies one family, optionally writing its exports under `out`.
pub fn cmd_build(family: Family, deep: bool, out: Option<&Path>) -> CommandOutput {
    run_and_export("build", family, deep, out)
}

/// Like `build`, but the output directory is required.
pub fn cmd_export(family: Family, out: &Path) -> CommandOutput {
    run_and_export("export", family, false, Some(out))
}

fn run_and_export(command: &str, family: Family, deep: bool, out: Option<&Path>) -> CommandOutput {
    let start = Instant::now();
    let mut report = RunReport::new(command, family_parameters(&family, deep, out));
    let run = match run_family(family, RunOptions { deep }) {
        Ok(r) => r,
        Err(e) => return CommandOutput::failed(report, &e, start),
    };
    report.results = serde_json::to_value(FamilySummary::from(&run)).expect("summary serializes");
    if let Some(tensor) = &run.tensor {
        if tensor.rank != run.set.len() as u64 || !tensor.collapse_holds {
            report.mismatches.push(format!(
                "{family}.tensor-rank: rank {} for {} vectors, collapse {}",
                tensor.rank,
                run.set.len(),
                tensor.collapse_holds
            ));
        }
    }
    if let Some(dir) = out {
        match write_exports(&run, dir) {
            Ok(files) => report.files = files,
            Err(e) => return CommandOutput::failed(report, &e, start),
        }
    }
    let status = if report.mismatches.is_empty() {
        ExitStatus::Success
    } else {
        ExitStatus::VerificationFailure
    };
    CommandOutput::finish(report, status, start)
}

#[derive(Debug, Clone, Serialize)]
struct SearchResults {
    max_k: u64,
    field: Option<Field>,
    real_tight: Vec<[u64; 3]>,
    complex_tight: Vec<[u64; 3]>,
    triples: Vec<TightnessReport>,
}

/// Enumerates tight feasible triples with `k ≤ max_k`.
pub fn cmd_search(max_k: u64, field: Option<Field>) -> CommandOutput {
    let start = Instant::now();
    let mut parameters = BTreeMap::new();
    parameters.insert("max_k".into(), max_k.to_string());
    parameters.insert(
        "field".into(),
        field
            .map_or("both", |f| if f == Field::Real { "real" } else { "complex" })
            .into(),
    );
    let mut report = RunReport::new("search", parameters);
    if !(2..=optimality::MAX_K).contains(&max_k) {
        let e = Error::Parameters(format!("--max-k must lie in 2..={}", optimality::MAX_K));
        return CommandOutput::failed(report, &e, start);
    }
    let triples: Vec<TightnessReport> = optimality::search_tight(max_k)
        .into_iter()
        .filter(|r| match field {
            Some(Field::Real) => r.real_tight,
            Some(Field::Complex) => r.complex_tight,
            None => true,
        })
        .collect();
    let pick =
        |pred: fn(&TightnessReport) -> bool| triples.iter().filter(|r| pred(r)).map(|r| [r.k, r.c2, r.c3]).collect();
    let results = SearchResults {
        max_k,
        field,
        real_tight: pick(|r| r.real_tight),
        complex_tight: pick(|r| r.complex_tight),
        triples: triples.clone(),
    };
    report.results = serde_json::to_value(results).expect("search results serialize");
    CommandOutput::finish(report, ExitStatus::Success, start)
}

/// One row of the table of largest sets obtained from graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table1Row {
    pub family: Family,
    pub k: u64,
    pub c2: u64,
    pub c3: u64,
    pub alpha: (i64, i64),
    pub n: u64,
    pub real: bool,
}

pub const TABLE1: [Table1Row; 4] = [
    Table1Row {
        family: Family::FourCube,
        k: 4,
        c2: 2,
        c3: 3,
        alpha: (1, 4),
        n: 8,
        real: true,
    },
    Table1Row {
        family: Family::FoldedEightCube,
        k: 8,
        c2: 2,
        c3: 3,
        alpha: (1, 4),
        n: 64,
        real: true,
    },
    Table1Row {
        family: Family::Golay,
        k: 24,
        c2: 2,
        c3: 3,
        alpha: (1, 9),
        n: 2048,
        real: true,
    },
    Table1Row {
        family: Family::EightCycle,
        k: 2,
        c2: 1,
        c3: 1,
        alpha: (1, 2),
        n: 4,
        real: false,
    },
];

#[derive(Debug, Clone, Serialize)]
pub struct Table1Cell {
    pub cell: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

/// The six cells of a row (`k, c2, c3, alpha, n, space`) as `(name, expected, actual)`.
fn row_cells(row: &Table1Row, run: &FamilyRun) -> Vec<Table1Cell> {
    let (k, c2, c3) = run.array.triple();
    let name = run.family.to_string();
    let cell = |field: &str, expected: String, actual: String| Table1Cell {
        cell: format!("{name}.{field}"),
        ok: expected == actual,
        expected,
        actual,
    };
    vec![
        cell("k", row.k.to_string(), k.to_string()),
        cell("c2", row.c2.to_string(), c2.to_string()),
        cell("c3", row.c3.to_string(), c3.to_string()),
        cell(
            "alpha",
            format_ratio(&Ratio::new(row.alpha.0, row.alpha.1)),
            format_ratio(&run.alpha()),
        ),
        cell("n", row.n.to_string(), run.set.len().to_string()),
        cell(
            "space",
            space_label(row.real, row.k as usize),
            space_label(run.set.is_real(), run.set.dimension()),
        ),
    ]
}

/// Rebuilds every row of the table and compares all 24 cells, plus equality
/// with the flat bound for each row.
pub fn cmd_table1(deep: bool) -> CommandOutput {
    cmd_table1_against(&TABLE1, deep)
}

/// `table1` against a caller-supplied expectation.
pub fn cmd_table1_against(expected: &[Table1Row], deep: bool) -> CommandOutput {
    let start = Instant::now();
    let mut parameters = BTreeMap::new();
    parameters.insert("deep".into(), deep.to_string());
    let mut report = RunReport::new("table1", parameters);
    let mut rows = Vec::new();
    let mut cells = Vec::new();
    for row in expected {
        let run = match run_family(row.family, RunOptions { deep }) {
            Ok(r) => r,
            Err(e) => return CommandOutput::failed(report, &e, start),
        };
        let summary = FamilySummary::from(&run);
        if !summary.flat_tight {
            report.mismatches.push(format!("{}.flat-bound", row.family));
        }
        if let Some(t) = &run.tensor {
            if t.rank != run.set.len() as u64 || t.rank != t.cap || !t.collapse_holds {
                report.mismatches.push(format!("{}.tensor-rank", row.family));
            }
        }
        for c in row_cells(row, &run) {
            if !c.ok {
                report
                    .mismatches
                    .push(format!("{}: expected {}, got {}", c.cell, c.expected, c.actual));
            }
            cells.push(c);
        }
        rows.push(summary);
    }
    report.results = serde_json::json!({ "cells": cells, "rows": rows });
    let status = if report.mismatches.is_empty() {
        ExitStatus::Success
    } else {
        ExitStatus::VerificationFailure
    };
    CommandOutput::finish(report, status, start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stems_are_filesystem_safe() {
        let f: Family = "kasami(q=2,variant=i,j=1,m=1)".parse().unwrap();
        assert_eq!(file_stem(&f), "kasami_q2_varianti_j1_m1");
        assert_eq!(file_stem(&Family::FoldedEightCube), "folded-8-cube");
    }

    #[test]
    fn search_range_is_validated() {
        assert_eq!(cmd_search(1, None).status, ExitStatus::Usage);
        let out = cmd_search(2, None);
        assert_eq!(out.status, ExitStatus::Success);
        assert_eq!(out.report.results["complex_tight"], serde_json::json!([[2, 1, 1]]));
    }

    #[test]
    fn search_field_filter() {
        let out = cmd_search(10, Some(Field::Real));
        let triples = out.report.results["real_tight"].as_array().unwrap().clone();
        assert!(triples.contains(&serde_json::json!([8, 1, 7])));
        assert!(out.report.results["complex_tight"].as_array().unwrap().is_empty());
    }
}
