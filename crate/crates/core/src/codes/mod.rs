//! Linear codes over prime fields, their cosets and coset graphs, and the
//! named codes behind the coset-graph constructions.

pub mod coset;
pub mod gf2m;
pub mod kasami;
pub mod linear;

pub use coset::{coset_graph, even_coset_subgroup, Coset, CosetGraph, CosetSubgroup, MAX_COSETS};
pub use gf2m::Gf2m;
pub use kasami::{kasami_code, KasamiParams, KasamiVariant};
pub use linear::{weight, LinearCode, PrimeField};

/// The 12×12 block `A` of the extended binary Golay generator `[I | A]`.
pub const GOLAY_A: [[u8; 12]; 12] = [
    [0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0],
    [1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1],
    [1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1],
    [1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0],
    [1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1],
    [1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1],
    [1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1],
    [1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0],
    [1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0],
    [1, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0],
    [1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1],
];

/// The extended binary Golay code: length 24, dimension 12.
pub fn golay_code() -> LinearCode {
    let rows = GOLAY_A
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mut row = vec![0u8; 24];
            row[i] = 1;
            row[12..].copy_from_slice(a);
            row
        })
        .collect();
    LinearCode::from_generator(2, 24, rows).expect("Golay generator is well formed")
}

/// The ternary code of length 6 spanned by the all-one vector.
pub fn vls_code() -> LinearCode {
    LinearCode::from_generator(3, 6, vec![vec![1; 6]]).expect("all-one vector is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golay_dimension_and_cosets() {
        let c = golay_code();
        assert_eq!(c.dimension(), 12);
        assert_eq!(c.coset_count(), Some(4096));
    }

    #[test]
    fn vls_cosets() {
        let c = vls_code();
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.coset_count(), Some(243));
    }
}
