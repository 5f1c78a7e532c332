//! Cosets of a linear code and its coset graph.
//!
//! Cosets are keyed by syndrome. Each coset carries a canonical representative:
//! a minimum-weight member, ties broken lexicographically with the *last*
//! coordinate most significant. With that convention the canonical
//! representative of a coset at weight `w` is always the canonical
//! representative of some coset at weight `w - 1` plus one symbol placed above
//! its top coordinate, so all representatives fall out of a single BFS.

use super::linear::{LinearCode, PrimeField};
use crate::error::{Error, Result};
use crate::groups::FiniteAbelianGroup;
use std::cmp::Ordering;

/// Largest number of cosets a coset graph may have.
pub const MAX_COSETS: u64 = 1 << 16;

/// A coset of `C`, identified by its syndrome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    pub representative: Vec<u8>,
    pub syndrome: u32,
}

impl Coset {
    pub fn weight(&self) -> usize {
        super::linear::weight(&self.representative)
    }
}

/// Syndrome vectors `F_p^r` packed into integers, first check most significant.
#[derive(Debug, Clone, Copy)]
struct SyndromeSpace {
    field: PrimeField,
    r: usize,
}

impl SyndromeSpace {
    fn pack(&self, s: &[u8]) -> u32 {
        let p = self.field.order() as u32;
        s.iter().fold(0u32, |acc, &x| acc * p + x as u32)
    }

    fn unpack(&self, mut idx: u32) -> Vec<u8> {
        let p = self.field.order() as u32;
        let mut out = vec![0u8; self.r];
        for slot in out.iter_mut().rev() {
            *slot = (idx % p) as u8;
            idx /= p;
        }
        out
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        if self.field.order() == 2 {
            return a ^ b;
        }
        let (x, y) = (self.unpack(a), self.unpack(b));
        let sum: Vec<u8> = x.iter().zip(&y).map(|(&u, &v)| self.field.add(u, v)).collect();
        self.pack(&sum)
    }

    fn scale(&self, c: u8, a: u32) -> u32 {
        let v: Vec<u8> = self.unpack(a).iter().map(|&x| self.field.mul(c, x)).collect();
        self.pack(&v)
    }
}

/// Sparse support `(coordinate, symbol)` sorted by coordinate.
type Support = Vec<(u32, u8)>;

/// Compares equal-weight supports with the last coordinate most significant.
fn cmp_colex(a: &Support, b: &Support) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.0.cmp(&y.0) {
            Ordering::Equal => {}
            // the vector whose top nonzero coordinate is lower is smaller
            other => return other,
        }
        match x.1.cmp(&y.1) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// The coset graph of a code: cosets adjacent iff they differ by a weight-one vector.
///
/// Vertices are numbered by the lexicographic order of canonical representatives.
#[derive(Debug, Clone)]
pub struct CosetGraph {
    code: LinearCode,
    space_r: usize,
    cosets: Vec<Coset>,
    vertex_of_syndrome: Vec<u32>,
    adjacency: Vec<Vec<u32>>,
    /// Weight-one syndromes `a·h_i`, indexed `[i][a-1]`.
    unit_syndromes: Vec<Vec<u32>>,
}

impl CosetGraph {
    pub fn new(code: &LinearCode) -> Result<Self> {
        let count = code.coset_count().unwrap_or(u64::MAX);
        if count > MAX_COSETS {
            return Err(Error::SizeCap {
                count,
                limit: MAX_COSETS,
            });
        }
        let field = code.field();
        let p = field.order();
        let space = SyndromeSpace {
            field,
            r: code.redundancy(),
        };
        let m = code.length();

        let mut unit_syndromes = Vec::with_capacity(m);
        for i in 0..m {
            let mut row = Vec::with_capacity(p as usize - 1);
            for a in 1..p {
                let mut v = vec![0u8; m];
                v[i] = a;
                let s = space.pack(&code.syndrome(&v));
                if s == 0 {
                    return Err(Error::DegenerateCode(format!("weight-one codeword at coordinate {i}")));
                }
                row.push(s);
            }
            unit_syndromes.push(row);
        }

        let count = count as usize;
        let mut best: Vec<Option<Support>> = vec![None; count];
        best[0] = Some(Vec::new());
        let mut layer = vec![0u32];
        let mut dist = vec![u32::MAX; count];
        dist[0] = 0;
        let mut w = 0u32;
        while !layer.is_empty() {
            w += 1;
            let mut next = Vec::new();
            for &x in &layer {
                let rep = best[x as usize].clone().expect("layer member without representative");
                let top = rep.last().map(|&(i, _)| i as i64).unwrap_or(-1);
                for (i, row) in unit_syndromes.iter().enumerate() {
                    for (a_idx, &s) in row.iter().enumerate() {
                        let y = space.add(x, s) as usize;
                        if dist[y] == u32::MAX {
                            dist[y] = w;
                            next.push(y as u32);
                        } else if dist[y] != w {
                            continue;
                        }
                        if (i as i64) <= top {
                            continue;
                        }
                        let mut cand = rep.clone();
                        cand.push((i as u32, a_idx as u8 + 1));
                        let replace = match &best[y] {
                            None => true,
                            Some(cur) => cmp_colex(&cand, cur) == Ordering::Less,
                        };
                        if replace {
                            best[y] = Some(cand);
                        }
                    }
                }
            }
            layer = next;
        }
        if let Some(missing) = dist.iter().position(|&d| d == u32::MAX) {
            // H has full rank, so unit syndromes span the syndrome space.
            return Err(Error::Structure(format!("syndrome {missing} unreachable")));
        }

        let mut cosets: Vec<Coset> = best
            .into_iter()
            .enumerate()
            .map(|(syn, sup)| {
                let sup = sup.expect("coset without representative");
                let mut rep = vec![0u8; m];
                for (i, a) in sup {
                    rep[i as usize] = a;
                }
                Coset {
                    representative: rep,
                    syndrome: syn as u32,
                }
            })
            .collect();
        cosets.sort_by(|a, b| a.representative.cmp(&b.representative));
        let mut vertex_of_syndrome = vec![0u32; count];
        for (v, c) in cosets.iter().enumerate() {
            vertex_of_syndrome[c.syndrome as usize] = v as u32;
        }
        let adjacency = cosets
            .iter()
            .map(|c| {
                let mut nb: Vec<u32> = unit_syndromes
                    .iter()
                    .flatten()
                    .map(|&s| vertex_of_syndrome[space.add(c.syndrome, s) as usize])
                    .collect();
                nb.sort_unstable();
                nb.dedup();
                nb
            })
            .collect();

        Ok(Self {
            code: code.clone(),
            space_r: space.r,
            cosets,
            vertex_of_syndrome,
            adjacency,
            unit_syndromes,
        })
    }

    fn space(&self) -> SyndromeSpace {
        SyndromeSpace {
            field: self.code.field(),
            r: self.space_r,
        }
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn vertex_count(&self) -> usize {
        self.cosets.len()
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn coset(&self, vertex: u32) -> &Coset {
        &self.cosets[vertex as usize]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    /// Valency of the zero coset.
    pub fn valency(&self) -> usize {
        self.adjacency[self.vertex_of_syndrome[0] as usize].len()
    }

    /// Whether the `m(q-1)` weight-one vectors lie in distinct cosets.
    pub fn unit_cosets_distinct(&self) -> bool {
        let mut all: Vec<u32> = self.unit_syndromes.iter().flatten().copied().collect();
        let n = all.len();
        all.sort_unstable();
        all.dedup();
        all.len() == n
    }

    pub fn vertex_of_syndrome(&self, syndrome: u32) -> u32 {
        self.vertex_of_syndrome[syndrome as usize]
    }

    /// Vertex of the coset containing `v`.
    pub fn vertex_of(&self, v: &[u8]) -> u32 {
        let s = self.space().pack(&self.code.syndrome(v));
        self.vertex_of_syndrome(s)
    }

    /// Canonical coset `v + C`.
    pub fn canonical(&self, v: &[u8]) -> &Coset {
        self.coset(self.vertex_of(v))
    }

    /// Coordinate sum mod `p` of each coset; `None` unless codewords have zero sum.
    pub fn classes(&self) -> Option<Vec<u8>> {
        if !self.code.has_zero_sum_codewords() {
            return None;
        }
        let f = self.code.field();
        Some(
            self.cosets
                .iter()
                .map(|c| c.representative.iter().fold(0u8, |acc, &x| f.add(acc, x)))
                .collect(),
        )
    }

    /// The vertex permutation `X ↦ X + s` for a syndrome `s`.
    pub fn translation(&self, syndrome: u32) -> Vec<u32> {
        let space = self.space();
        self.cosets
            .iter()
            .map(|c| self.vertex_of_syndrome(space.add(c.syndrome, syndrome)))
            .collect()
    }

    /// The class-zero cosets (even cosets for binary codes) as an explicit
    /// elementary abelian group.
    ///
    /// Basis elements are chosen greedily from the syndromes of `e_i - e_0`,
    /// `i = 1, 2, …`, by Gaussian elimination in the syndrome space.
    pub fn zero_class_subgroup(&self) -> Result<CosetSubgroup> {
        if !self.code.has_zero_sum_codewords() {
            return Err(Error::Structure("coordinate sum is not constant on cosets".into()));
        }
        let space = self.space();
        let f = self.code.field();
        let p = f.order();
        let h0 = self.unit_syndromes[0][0];
        let minus_h0 = space.scale(p - 1, h0);
        let mut echelon: Vec<(usize, Vec<u8>)> = Vec::new();
        let mut basis = Vec::new();
        for row in self.unit_syndromes.iter().skip(1) {
            let cand = space.add(row[0], minus_h0);
            let mut v = space.unpack(cand);
            for (pc, e) in &echelon {
                if v[*pc] != 0 {
                    let fct = f.mul(v[*pc], f.inv(e[*pc]));
                    for (x, &y) in v.iter_mut().zip(e) {
                        *x = f.sub(*x, f.mul(fct, y));
                    }
                }
            }
            if let Some(pc) = v.iter().position(|&x| x != 0) {
                echelon.push((pc, v));
                basis.push(cand);
            }
        }
        if basis.is_empty() {
            return Err(Error::Structure("class-zero subgroup is trivial".into()));
        }
        let group = FiniteAbelianGroup::elementary(p as u32, basis.len())?;
        let vertex_of_element = group
            .elements()
            .map(|g| {
                let s = g
                    .coords()
                    .iter()
                    .zip(&basis)
                    .fold(0u32, |acc, (&c, &b)| space.add(acc, space.scale(c as u8, b)));
                self.vertex_of_syndrome(s)
            })
            .collect();
        let generators = basis.iter().map(|&b| self.translation(b)).collect();
        Ok(CosetSubgroup {
            group,
            basis_syndromes: basis,
            vertex_of_element,
            generators,
        })
    }
}

/// The class-zero coset subgroup presented as `Z_p^r`.
#[derive(Debug, Clone)]
pub struct CosetSubgroup {
    pub group: FiniteAbelianGroup,
    pub basis_syndromes: Vec<u32>,
    /// Coset-graph vertex of each group element, in lexicographic element order.
    pub vertex_of_element: Vec<u32>,
    /// Translation by each basis element, as a permutation of coset-graph vertices.
    pub generators: Vec<Vec<u32>>,
}

/// Convenience wrapper: the coset graph of `code`.
pub fn coset_graph(code: &LinearCode) -> Result<CosetGraph> {
    CosetGraph::new(code)
}

/// Convenience wrapper: the class-zero subgroup of the coset graph of `code`.
pub fn even_coset_subgroup(graph: &CosetGraph) -> Result<CosetSubgroup> {
    graph.zero_class_subgroup()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn repetition3() -> LinearCode {
        LinearCode::from_generator(2, 3, vec![vec![1, 1, 1]]).unwrap()
    }

    #[test]
    fn colex_order() {
        let a: Support = vec![(0, 1), (2, 1)];
        let b: Support = vec![(1, 1), (2, 1)];
        assert_eq!(cmp_colex(&a, &b), Ordering::Less);
        let c: Support = vec![(0, 1), (3, 1)];
        assert_eq!(cmp_colex(&b, &c), Ordering::Less);
        let d: Support = vec![(0, 2)];
        let e: Support = vec![(1, 1)];
        assert_eq!(cmp_colex(&d, &e), Ordering::Less);
    }

    #[test]
    fn representatives_are_minimum_weight() {
        let code = repetition3();
        let g = CosetGraph::new(&code).unwrap();
        assert_eq!(g.vertex_count(), 4);
        let weights: Vec<usize> = g.cosets().iter().map(|c| c.weight()).collect();
        assert_eq!(weights.iter().filter(|&&w| w == 0).count(), 1);
        assert_eq!(weights.iter().filter(|&&w| w == 1).count(), 3);
    }

    #[test]
    fn weight_one_codeword_is_degenerate() {
        let code = LinearCode::from_generator(2, 3, vec![vec![0, 1, 0]]).unwrap();
        assert!(matches!(CosetGraph::new(&code), Err(Error::DegenerateCode(_))));
    }

    #[test]
    fn odd_codeword_breaks_parity_structure() {
        let code = repetition3();
        let g = CosetGraph::new(&code).unwrap();
        assert!(g.classes().is_none());
        assert!(matches!(g.zero_class_subgroup(), Err(Error::Structure(_))));
    }

    #[test]
    fn size_cap_is_enforced() {
        let code = LinearCode::from_generator(2, 17, vec![vec![1; 17]]).unwrap();
        assert!(CosetGraph::new(&code).is_ok());
        let code = LinearCode::from_generator(2, 18, vec![vec![1; 18]]).unwrap();
        assert!(matches!(CosetGraph::new(&code), Err(Error::SizeCap { .. })));
    }
}
