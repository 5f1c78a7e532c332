use crate::error::{Error, Result};

/// Arithmetic in the prime field `F_p`, symbols stored as `u8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u8,
}

impl PrimeField {
    pub fn new(p: u8) -> Result<Self> {
        let is_prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime {
            return Err(Error::Parameters(format!("{p} is not a prime")));
        }
        Ok(Self { p })
    }

    pub fn order(&self) -> u8 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        (1..self.p).find(|&b| self.mul(a, b) == 1).unwrap()
    }
}

/// Row-reduces `rows` in place over `F_p`; returns pivot columns of the non-zero rows,
/// which are moved to the front. Zero rows are removed.
pub(crate) fn rref(field: PrimeField, rows: &mut Vec<Vec<u8>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for c in 0..width {
                    let t = field.mul(f, rows[r][c]);
                    rows[i][c] = field.sub(rows[i][c], t);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : R x = 0}` for a matrix already in reduced row echelon form.
fn null_space(field: PrimeField, rows: &[Vec<u8>], pivots: &[usize], width: usize) -> Vec<Vec<u8>> {
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u8; width];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(pivots) {
                v[pc] = field.sub(0, row[f]);
            }
            v
        })
        .collect()
}

/// A linear code `C ⊆ F_p^m`, kept with both a generator and a parity-check basis.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: PrimeField,
    length: usize,
    generator: Vec<Vec<u8>>,
    parity_check: Vec<Vec<u8>>,
}

impl LinearCode {
    /// Code spanned by `rows`. Dependent rows are dropped.
    pub fn from_generator(p: u8, length: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let mut generator = normalize_rows(field, rows, length)?;
        let pivots = rref(field, &mut generator, length);
        let mut parity_check = null_space(field, &generator, &pivots, length);
        rref(field, &mut parity_check, length);
        Ok(Self {
            field,
            length,
            generator,
            parity_check,
        })
    }

    /// Code `{x : H x = 0}` for the check rows `rows`. Dependent checks are dropped.
    pub fn from_parity_check(p: u8, length: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let mut parity_check = normalize_rows(field, rows, length)?;
        let pivots = rref(field, &mut parity_check, length);
        let mut generator = null_space(field, &parity_check, &pivots, length);
        rref(field, &mut generator, length);
        Ok(Self {
            field,
            length,
            generator,
            parity_check,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn q(&self) -> u8 {
        self.field.order()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    /// `m - dim C`, the number of independent checks.
    pub fn redundancy(&self) -> usize {
        self.parity_check.len()
    }

    pub fn generator_rows(&self) -> &[Vec<u8>] {
        &self.generator
    }

    pub fn parity_check_rows(&self) -> &[Vec<u8>] {
        &self.parity_check
    }

    /// `q^(m - dim)`, or `None` on overflow.
    pub fn coset_count(&self) -> Option<u64> {
        (self.q() as u64).checked_pow(self.redundancy() as u32)
    }

    /// Syndrome `H v` as a vector of check values.
    pub fn syndrome(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.length, "vector length mismatch");
        self.parity_check
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0u8, |acc, (&h, &x)| self.field.add(acc, self.field.mul(h, x)))
            })
            .collect()
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.syndrome(v).iter().all(|&s| s == 0)
    }

    /// All `q^dim` codewords. Only sensible for small dimensions.
    pub fn codewords(&self) -> Vec<Vec<u8>> {
        let q = self.q() as usize;
        let total = q.pow(self.dimension() as u32);
        (0..total)
            .map(|mut idx| {
                let mut word = vec![0u8; self.length];
                for row in &self.generator {
                    let c = (idx % q) as u8;
                    idx /= q;
                    if c != 0 {
                        for (w, &g) in word.iter_mut().zip(row) {
                            *w = self.field.add(*w, self.field.mul(c, g));
                        }
                    }
                }
                word
            })
            .collect()
    }

    /// Whether every codeword has coordinate sum zero, i.e. the sum is constant on cosets.
    pub fn has_zero_sum_codewords(&self) -> bool {
        self.generator
            .iter()
            .all(|row| row.iter().fold(0u8, |acc, &x| self.field.add(acc, x)) == 0)
    }
}

fn normalize_rows(field: PrimeField, rows: Vec<Vec<u8>>, length: usize) -> Result<Vec<Vec<u8>>> {
    rows.into_iter()
        .map(|row| {
            if row.len() != length {
                return Err(Error::Parameters(format!(
                    "row of length {} in a code of length {length}",
                    row.len()
                )));
            }
            Ok(row.into_iter().map(|x| x % field.order()).collect())
        })
        .collect()
}

pub fn weight(v: &[u8]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_and_check_are_dual() {
        let code = LinearCode::from_generator(
            2,
            7,
            vec![
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
                vec![1, 1, 0, 0, 0, 1, 1],
            ],
        )
        .unwrap();
        assert_eq!(code.dimension(), 4);
        assert_eq!(code.redundancy(), 3);
        for g in code.generator_rows() {
            assert!(code.contains(g));
        }
        assert_eq!(code.codewords().len(), 16);
    }

    #[test]
    fn ternary_dual_roundtrip() {
        let code = LinearCode::from_parity_check(3, 4, vec![vec![1, 1, 1, 0], vec![0, 1, 2, 1]]).unwrap();
        assert_eq!(code.dimension(), 2);
        for w in code.codewords() {
            assert!(code.contains(&w));
        }
        assert_eq!(code.coset_count(), Some(9));
    }

    #[test]
    fn row_length_mismatch_is_an_error() {
        assert!(LinearCode::from_generator(2, 3, vec![vec![1, 0]]).is_err());
        assert!(LinearCode::from_generator(4, 3, vec![vec![1, 0, 0]]).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.inv(2), 2);
        assert_eq!(f.sub(0, 1), 2);
    }
}
