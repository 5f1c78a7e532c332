//! Binary extension fields `GF(2^m)` in a polynomial basis.
//!
//! Elements are bit vectors of polynomial coefficients (bit `i` is the
//! coefficient of `x^i`). The modulus for each degree is the Conway
//! polynomial, so the element encoding is fixed across implementations:
//!
//! | m | modulus |
//! |---|---------|
//! | 1 | x+1 |
//! | 2 | x²+x+1 |
//! | 3 | x³+x+1 |
//! | 4 | x⁴+x+1 |
//! | 5 | x⁵+x²+1 |
//! | 6 | x⁶+x⁴+x³+x+1 |
//! | 7 | x⁷+x+1 |
//! | 8 | x⁸+x⁴+x³+x²+1 |
//! | 9 | x⁹+x⁴+1 |
//! | 10 | x¹⁰+x⁶+x⁵+x³+x²+x+1 |
//! | 11 | x¹¹+x²+1 |
//! | 12 | x¹²+x⁷+x⁶+x⁵+x³+x+1 |
//! | 13 | x¹³+x⁴+x³+x+1 |
//! | 14 | x¹⁴+x⁷+x⁵+x³+1 |
//! | 15 | x¹⁵+x⁵+x⁴+x²+1 |
//! | 16 | x¹⁶+x⁵+x³+x²+1 |

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 16;

const CONWAY: [u32; 17] = [
    0,
    0b11,
    0b111,
    0b1011,
    0b1_0011,
    0b10_0101,
    0b101_1011,
    0b1000_0011,
    0b1_0001_1101,
    0b10_0001_0001,
    0b100_0110_1111,
    0b1000_0000_0101,
    0b1_0000_1110_1011,
    0b10_0000_0001_1011,
    0b100_0000_1010_1001,
    0b1000_0000_0011_0101,
    0b1_0000_0000_0010_1101,
];

/// `GF(2^degree)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gf2m {
    degree: u32,
    modulus: u32,
}

impl Gf2m {
    pub fn new(degree: u32) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::Parameters(format!(
                "GF(2^{degree}) unsupported (degree must be in 1..={MAX_DEGREE})"
            )));
        }
        Ok(Self {
            degree,
            modulus: CONWAY[degree as usize],
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Modulus polynomial including the leading `x^degree` bit.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn order(&self) -> u32 {
        1 << self.degree
    }

    pub fn characteristic(&self) -> u32 {
        2
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let mut acc = 0u32;
        let mut a = a;
        let mut b = b;
        let top = 1u32 << self.degree;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }

    pub fn pow(&self, a: u32, mut exp: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// The Frobenius map `a ↦ a²`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.mul(a, a)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime_factors(mut n: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                out.push(p);
                while n.is_multiple_of(p) {
                    n /= p;
                }
            }
            p += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    #[test]
    fn moduli_are_primitive() {
        // x of order 2^m - 1 makes the quotient ring a field, so the modulus is irreducible too.
        for m in 2..=MAX_DEGREE {
            let f = Gf2m::new(m).unwrap();
            let n = (1u64 << m) - 1;
            assert_eq!(f.pow(2, n), 1, "degree {m}");
            for p in prime_factors(n) {
                assert_ne!(f.pow(2, n / p), 1, "degree {m}, factor {p}");
            }
        }
    }

    #[test]
    fn conway_subfield_compatibility() {
        // x^((2^m-1)/(2^d-1)) in GF(2^m) must be a root of the degree-d modulus.
        for m in 2..=MAX_DEGREE {
            let big = Gf2m::new(m).unwrap();
            for d in 1..m {
                if m % d != 0 {
                    continue;
                }
                let small = CONWAY[d as usize];
                let root = big.pow(2, ((1u64 << m) - 1) / ((1u64 << d) - 1));
                let mut value = 0u32;
                for bit in (0..=d).rev() {
                    value = big.mul(value, root);
                    if small >> bit & 1 == 1 {
                        value ^= 1;
                    }
                }
                assert_eq!(value, 0, "degree {m} over {d}");
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for m in 1..=6 {
            let f = Gf2m::new(m).unwrap();
            for a in f.elements() {
                if a != 0 {
                    assert!(f.elements().any(|b| f.mul(a, b) == 1), "no inverse for {a}");
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let f = Gf2m::new(8).unwrap();
        for a in f.elements() {
            for b in (0..256).step_by(7) {
                assert_eq!(f.frobenius(a ^ b), f.frobenius(a) ^ f.frobenius(b));
            }
        }
    }

    #[test]
    fn rejects_unsupported_degrees() {
        assert!(Gf2m::new(0).is_err());
        assert!(Gf2m::new(17).is_err());
    }
}
