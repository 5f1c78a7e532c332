//! Exact arithmetic in the cyclotomic integers `Z[ζ_e]`.
//!
//! An element `Σ c_r ζ^r` is handled as its coefficient list in the power
//! basis `1, ζ, …, ζ^{φ(e)-1}`, obtained by reducing modulo the cyclotomic
//! polynomial `Φ_e`. Character sums and Gram entries never touch floating point.

/// Coefficients (lowest degree first) of the `e`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(e: u32) -> Vec<i64> {
    assert!(e >= 1, "cyclotomic order must be positive");
    // x^e - 1 = Π_{d | e} Φ_d
    let mut poly = vec![0i64; e as usize + 1];
    poly[0] = -1;
    poly[e as usize] = 1;
    for d in 1..e {
        if e.is_multiple_of(d) {
            poly = div_exact_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

/// Euler's totient, i.e. the degree of `Φ_e`.
pub fn totient(e: u32) -> u32 {
    (1..=e).filter(|&r| num_integer::gcd(r, e) == 1).count() as u32
}

fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    if rem.len() <= dn {
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Reduces `Σ coeffs[r] x^r` modulo `Φ_e`, returning `φ(e)` coefficients.
pub fn reduce(coeffs: &[i64], e: u32) -> Vec<i64> {
    let phi = cyclotomic_polynomial(e);
    reduce_with(coeffs, &phi)
}

fn reduce_with(coeffs: &[i64], phi: &[i64]) -> Vec<i64> {
    let deg = phi.len() - 1;
    let mut rem = coeffs.to_vec();
    if rem.len() < deg {
        rem.resize(deg, 0);
        return rem;
    }
    for i in (deg..rem.len()).rev() {
        let c = rem[i];
        if c != 0 {
            for (j, &p) in phi.iter().enumerate() {
                rem[i - deg + j] -= c * p;
            }
        }
    }
    rem.truncate(deg);
    rem
}

/// Coefficient table: row `r` holds the power-basis coordinates of `ζ^r`, `0 ≤ r < e`.
pub fn power_table(e: u32) -> Vec<Vec<i64>> {
    let phi = cyclotomic_polynomial(e);
    (0..e as usize)
        .map(|r| {
            let mut mono = vec![0i64; r + 1];
            mono[r] = 1;
            reduce_with(&mono, &phi)
        })
        .collect()
}

/// Whether `Σ counts[r] ζ^r` vanishes, where `counts` has length `e`.
pub fn is_zero(counts: &[i64], e: u32) -> bool {
    reduce(counts, e).iter().all(|&c| c == 0)
}

/// `|Σ counts[r] ζ^r|²` when it is a rational integer, `None` otherwise.
pub fn squared_modulus(counts: &[i64], e: u32) -> Option<i64> {
    let n = e as usize;
    debug_assert_eq!(counts.len(), n);
    // z * conj(z) = Σ_{r,s} c_r c_s ζ^{r-s}
    let mut prod = vec![0i64; n];
    for (r, &cr) in counts.iter().enumerate() {
        if cr == 0 {
            continue;
        }
        for (s, &cs) in counts.iter().enumerate() {
            prod[(r + n - s) % n] += cr * cs;
        }
    }
    let red = reduce(&prod, e);
    if red[1..].iter().all(|&c| c == 0) {
        Some(red[0])
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degree_is_totient() {
        for e in 1..40 {
            assert_eq!(cyclotomic_polynomial(e).len() as u32 - 1, totient(e));
        }
    }

    #[test]
    fn full_orbit_sums_vanish() {
        for e in 2..20 {
            assert!(is_zero(&vec![1; e as usize], e));
            let mut single = vec![0; e as usize];
            single[1] = 1;
            assert!(!is_zero(&single, e));
        }
    }

    #[test]
    fn gaussian_and_eisenstein_moduli() {
        // 1 + i
        assert_eq!(squared_modulus(&[1, 1, 0, 0], 4), Some(2));
        // 2 - ω
        assert_eq!(squared_modulus(&[2, -1, 0], 3), Some(4 + 2 + 1));
        // 1 + ζ_5 has irrational squared modulus
        assert_eq!(squared_modulus(&[1, 1, 0, 0, 0], 5), None);
    }
}
