//! Plain-text exports of graphs and vector sets.
//!
//! Adjacency: a header `2n=<count> k=<valency>`, then `<index>: <neighbours>`
//! per vertex with neighbours ascending. Vectors: a header
//! `n=<n> k=<k> e=<e> alpha=<p>/<q>` (`alpha=-` when unknown), then one line of
//! space-separated exponents mod `e` per vector.

use crate::construction::FlatVectorSet;
use crate::error::{Error, Result};
use crate::graphs::BipartiteGraph;
use num_rational::Ratio;
use std::fmt::Write as _;

pub fn write_adjacency(graph: &BipartiteGraph) -> String {
    let mut out = String::new();
    let k = graph.valency().map_or_else(|| "-".to_string(), |k| k.to_string());
    writeln!(out, "2n={} k={k}", graph.vertex_count()).unwrap();
    for (v, nbrs) in graph.adjacency().iter().enumerate() {
        write!(out, "{v}:").unwrap();
        for w in nbrs {
            write!(out, " {w}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn header_field<'a>(header: &'a str, key: &str) -> Result<&'a str> {
    header
        .split_whitespace()
        .find_map(|f| f.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .ok_or_else(|| Error::Parse(format!("header lacks {key}=")))
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Parse(format!("bad {what}: {s:?}")))
}

/// Adjacency lists and the declared valency (`None` for `k=-`).
pub fn parse_adjacency(text: &str) -> Result<(Vec<Vec<u32>>, Option<usize>)> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty adjacency file".into()))?;
    let count: usize = parse_num(header_field(header, "2n")?, "vertex count")?;
    let k = match header_field(header, "k")? {
        "-" => None,
        s => Some(parse_num(s, "valency")?),
    };
    let mut adjacency = Vec::with_capacity(count);
    for (i, line) in lines.enumerate() {
        let (idx, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("line {} lacks ':'", i + 2)))?;
        if parse_num::<usize>(idx.trim(), "vertex index")? != i {
            return Err(Error::Parse(format!("line {} is out of order", i + 2)));
        }
        adjacency.push(
            rest.split_whitespace()
                .map(|w| parse_num(w, "neighbour"))
                .collect::<Result<Vec<u32>>>()?,
        );
    }
    if adjacency.len() != count {
        return Err(Error::Parse(format!(
            "header says {count} vertices, found {}",
            adjacency.len()
        )));
    }
    Ok((adjacency, k))
}

pub fn write_vectors(set: &FlatVectorSet) -> String {
    let mut out = String::new();
    let alpha = set
        .alpha()
        .map_or_else(|| "-".to_string(), |a| format!("{}/{}", a.numer(), a.denom()));
    writeln!(
        out,
        "n={} k={} e={} alpha={alpha}",
        set.len(),
        set.dimension(),
        set.root_order()
    )
    .unwrap();
    for v in set.vectors() {
        let line: Vec<String> = v.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_vectors(text: &str) -> Result<FlatVectorSet> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty vector file".into()))?;
    let n: usize = parse_num(header_field(header, "n")?, "n")?;
    let k: usize = parse_num(header_field(header, "k")?, "k")?;
    let e: u32 = parse_num(header_field(header, "e")?, "e")?;
    let alpha = match header_field(header, "alpha")? {
        "-" => None,
        s => {
            let (p, q) = s
                .split_once('/')
                .ok_or_else(|| Error::Parse(format!("alpha {s:?} is not p/q")))?;
            let q: i64 = parse_num(q, "alpha denominator")?;
            if q == 0 {
                return Err(Error::Parse("alpha has zero denominator".into()));
            }
            Some(Ratio::new(parse_num(p, "alpha numerator")?, q))
        }
    };
    let vectors = lines
        .map(|l| l.split_whitespace().map(|x| parse_num(x, "exponent")).collect())
        .collect::<Result<Vec<Vec<u32>>>>()?;
    if vectors.len() != n {
        return Err(Error::Parse(format!(
            "header says {n} vectors, found {}",
            vectors.len()
        )));
    }
    FlatVectorSet::new(k, e, vectors, alpha).map_err(|err| Error::Parse(err.to_string()))
}
