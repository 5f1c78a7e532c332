mod common;

use flatsets::bounds::{dgs_bounds, flat_bounds};
use flatsets::codes::{self, weight, KasamiParams};
use flatsets::construction::FlatVectorSet;
use flatsets::formats;
use flatsets::graphs::IntersectionArray;
use flatsets::groups::FiniteAbelianGroup;
use flatsets::optimality::{complex_tight, real_tight};
use flatsets::spectra::{self, expected_characteristic_polynomial, tridiagonal_matrix};
use num_rational::Ratio;
use proptest::prelude::*;

#[test]
fn group_enumeration_counts_isomorphism_classes() {
    let groups = common::abelian_groups_up_to(16);
    let order = |g: &Vec<u32>| g.iter().map(|&d| d as u64).product::<u64>();
    // partitions of exponents: 16 = 2^4 has five abelian groups
    assert_eq!(groups.iter().filter(|g| order(g) == 16).count(), 5);
    assert_eq!(groups.iter().filter(|g| order(g) == 12).count(), 2);
}

/// `Σ_g χ(g) ψ(g)‾ = |G| δ_{χψ}` for every group of order at most 256.
#[test]
fn character_orthogonality_exhaustive() {
    assert!(common::orthogonality_failures(256).is_empty());
}

fn group_strategy() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(2u32..9, 1..4)
}

proptest! {
    #[test]
    fn characters_are_homomorphisms(orders in group_strategy(), seed in any::<u64>()) {
        let g = FiniteAbelianGroup::new(&orders).unwrap();
        let n = g.order();
        let (a, b) = (g.element(seed % n), g.element((seed / n) % n));
        let e = g.exponent();
        let chi = &g.characters()[((seed >> 20) % n) as usize];
        let lhs = g.character_value(chi, &g.add(&a, &b));
        let rhs = (g.character_value(chi, &a) + g.character_value(chi, &b)) % e;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn character_products_multiply_values(orders in group_strategy(), seed in any::<u64>()) {
        let g = FiniteAbelianGroup::new(&orders).unwrap();
        let n = g.order();
        let chars = g.characters();
        let (c1, c2) = (&chars[(seed % n) as usize], &chars[((seed / n) % n) as usize]);
        let x = g.element((seed >> 24) % n);
        let e = g.exponent();
        let prod = g.character_product(c1, c2);
        let quot = g.character_quotient(c1, c2);
        prop_assert_eq!(g.character_value(&prod, &x), (g.character_value(c1, &x) + g.character_value(c2, &x)) % e);
        prop_assert_eq!(g.character_value(&quot, &x), (g.character_value(c1, &x) + e - g.character_value(c2, &x)) % e);
    }

    #[test]
    fn golay_canonicalization_is_idempotent(v in prop::collection::vec(0u8..2, 24)) {
        let cg = codes::coset_graph(&codes::golay_code()).unwrap();
        check_canonical(&cg, &v)?;
    }

    #[test]
    fn vls_canonicalization_is_idempotent(v in prop::collection::vec(0u8..3, 6)) {
        let cg = codes::coset_graph(&codes::vls_code()).unwrap();
        check_canonical(&cg, &v)?;
    }

    #[test]
    fn tightness_matches_closed_forms(k in 2u64..400, c2 in 1u64..40, c3 in 1u64..60) {
        let (k_, c2_, c3_) = (k as i128, c2 as i128, c3 as i128);
        let p = c2_ * c3_;
        if p != 6 {
            let closed = Ratio::new(6 * c2_ - 2 * p, 6 - p) == Ratio::from_integer(k_);
            prop_assert_eq!(real_tight(k, c2, c3), closed);
        }
        if p != 2 {
            let closed = Ratio::new(2 * c2_, 2 - p) == Ratio::from_integer(k_);
            prop_assert_eq!(complex_tight(k, c2, c3), closed);
        }
    }

    #[test]
    fn vector_format_roundtrip(
        e in 1u32..7,
        k in 1usize..6,
        raw in prop::collection::vec(prop::collection::vec(any::<u32>(), 6), 0..10),
        alpha in prop::option::of((0i64..50, 1i64..50)),
    ) {
        let vectors: Vec<Vec<u32>> = raw.iter().map(|v| v[..k].iter().map(|x| x % e).collect()).collect();
        let set = FlatVectorSet::new(k, e, vectors, alpha.map(|(p, q)| Ratio::new(p, q))).unwrap();
        prop_assert_eq!(formats::parse_vectors(&formats::write_vectors(&set)).unwrap(), set);
    }
}

fn check_canonical(cg: &codes::CosetGraph, v: &[u8]) -> Result<(), TestCaseError> {
    match common::canonical_violation(cg, v) {
        None => Ok(()),
        Some(msg) => Err(TestCaseError::fail(msg)),
    }
}

#[test]
fn canonicalization_exhaustive_on_small_codes() {
    let vls = codes::coset_graph(&codes::vls_code()).unwrap();
    for x in 0..729u32 {
        let v: Vec<u8> = (0..6).map(|i| ((x / 3u32.pow(i)) % 3) as u8).collect();
        check_canonical(&vls, &v).unwrap();
    }
    let k82 = codes::coset_graph(&codes::kasami_code(&KasamiParams::variant_i(2, 1, 1).unwrap()).unwrap()).unwrap();
    for x in 0..256u32 {
        let v: Vec<u8> = (0..8).map(|i| ((x >> i) & 1) as u8).collect();
        check_canonical(&k82, &v).unwrap();
    }
}

#[test]
fn golay_weights_exhaustive() {
    let words = codes::golay_code().codewords();
    assert_eq!(words.len(), 4096);
    for w in &words {
        let wt = weight(w);
        assert_eq!(wt % 4, 0);
        assert!(wt == 0 || wt >= 8, "codeword of weight {wt}");
    }
    assert!(words.iter().any(|w| weight(w) == 8));
}

#[test]
fn kasami_dimensions_match_brute_force() {
    // s = 4: x² + x + 1; s = 8: x³ + x + 1; s = 16: x⁴ + x + 1
    let cases = [
        (KasamiParams::variant_ii(2).unwrap(), 2, 0b111),
        (KasamiParams::variant_i(2, 1, 1).unwrap(), 3, 0b1011),
        (KasamiParams::variant_ii(4).unwrap(), 4, 0b10011),
    ];
    for (params, m, modulus) in cases {
        let code = codes::kasami_code(&params).unwrap();
        let expected = common::kasami_dimension_brute_force(m, modulus, params.t() as u32);
        assert_eq!(code.dimension() as u32, expected, "{params}");
    }
    assert_eq!(
        codes::kasami_code(&KasamiParams::variant_ii(2).unwrap())
            .unwrap()
            .dimension(),
        0
    );
    assert_eq!(
        codes::kasami_code(&KasamiParams::variant_i(2, 1, 1).unwrap())
            .unwrap()
            .dimension(),
        1
    );
}

#[test]
fn bound_domination() {
    for m in 1..=200u64 {
        let (dc, dr) = dgs_bounds(m);
        let (fc, fr) = flat_bounds(m);
        assert!(fc <= dc && fr <= dr, "m={m}");
        assert!(fc > 0 && fr > 0);
        assert_eq!(fc == dc, m == 1);
        assert_eq!(fr == dr, m == 1);
    }
}

#[test]
fn spectra_agree_with_direct_determinants() {
    for k in 2..=50u64 {
        for c2 in 1..k {
            for c3 in c2..k {
                if !common::feasible_oracle(k, c2, c3) {
                    continue;
                }
                let ia = IntersectionArray::new(k, c2, c3).unwrap();
                let s = spectra::spectrum_from_array(&ia).unwrap();
                assert!(s.theta1_squared < k * k);
                let b = tridiagonal_matrix(&ia);
                let poly = expected_characteristic_polynomial(k as i128, s.theta1_squared as i128);
                for lambda in -3i128..=3 {
                    let value: i128 = poly.iter().rev().fold(0, |acc, &c| acc * lambda + c);
                    assert_eq!(common::det_shifted(&b, lambda), value, "({k},{c2},{c3}) at {lambda}");
                }
                // ±k and ±θ₁ (when integral) are roots
                assert_eq!(common::det_shifted(&b, k as i128), 0);
                assert_eq!(common::det_shifted(&b, -(k as i128)), 0);
                if let Some(t) = s.theta1() {
                    assert_eq!(common::det_shifted(&b, t as i128), 0);
                }
            }
        }
    }
}
