//! Extended Kasami codes `K(s, t)`.
//!
//! Coordinates are indexed by the elements of `F = GF(s)` in their integer
//! encoding (see [`super::gf2m`]). A binary vector `x` lies in `K(s, t)` when it
//! has even weight and `Σ x_α α = Σ x_α α^{t+1} = 0` in `F`.

use super::gf2m::Gf2m;
use super::linear::LinearCode;
use crate::error::{Error, Result};
use num_integer::Integer;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KasamiVariant {
    /// `s = q^{2j+1}`, `t = q^m` with `m ≤ j` and `gcd(m, 2j+1) = 1`.
    I { j: u32, m: u32 },
    /// `s = q²`, `t = q`.
    II,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KasamiParams {
    q: u64,
    log_q: u32,
    variant: KasamiVariant,
}

impl KasamiParams {
    pub fn new(q: u64, variant: KasamiVariant) -> Result<Self> {
        if q < 2 || !q.is_power_of_two() {
            return Err(Error::Parameters(format!("q={q} is not a power of 2 (q ≥ 2)")));
        }
        let log_q = q.trailing_zeros();
        if let KasamiVariant::I { j, m } = variant {
            if j == 0 || m == 0 {
                return Err(Error::Parameters("variant (i) needs j ≥ 1 and m ≥ 1".into()));
            }
            if m > j {
                return Err(Error::Parameters(format!("variant (i) needs m ≤ j (m={m}, j={j})")));
            }
            if m.gcd(&(2 * j + 1)) != 1 {
                return Err(Error::Parameters(format!(
                    "variant (i) needs gcd(m, 2j+1) = 1 (m={m}, 2j+1={})",
                    2 * j + 1
                )));
            }
        }
        let params = Self { q, log_q, variant };
        if params.field_degree() > super::gf2m::MAX_DEGREE as u64 {
            return Err(Error::Parameters(format!(
                "s = 2^{} exceeds the supported field sizes",
                params.field_degree()
            )));
        }
        Ok(params)
    }

    pub fn variant_ii(q: u64) -> Result<Self> {
        Self::new(q, KasamiVariant::II)
    }

    pub fn variant_i(q: u64, j: u32, m: u32) -> Result<Self> {
        Self::new(q, KasamiVariant::I { j, m })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn variant(&self) -> KasamiVariant {
        self.variant
    }

    /// `log₂ s`.
    pub fn field_degree(&self) -> u64 {
        match self.variant {
            KasamiVariant::I { j, .. } => self.log_q as u64 * (2 * j as u64 + 1),
            KasamiVariant::II => 2 * self.log_q as u64,
        }
    }

    pub fn s(&self) -> u64 {
        1 << self.field_degree()
    }

    pub fn t(&self) -> u64 {
        match self.variant {
            KasamiVariant::I { m, .. } => self.q.pow(m),
            KasamiVariant::II => self.q,
        }
    }

    /// Published `(n, k, c₂, c₃)` of the coset graph.
    pub fn expected_parameters(&self) -> (u64, u64, u64, u64) {
        let q = self.q;
        match self.variant {
            KasamiVariant::I { j, .. } => (q.pow(4 * j + 2), q.pow(2 * j + 1), q, q.pow(2 * j) - 1),
            KasamiVariant::II => (q.pow(3), q * q, q, q * q - 1),
        }
    }

    /// Published nontrivial eigenvalue `θ₁`.
    pub fn expected_theta1(&self) -> u64 {
        match self.variant {
            KasamiVariant::I { j, .. } => self.q.pow(j + 1),
            KasamiVariant::II => self.q,
        }
    }
}

impl fmt::Display for KasamiParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            KasamiVariant::I { j, m } => write!(f, "q={},variant=i,j={j},m={m}", self.q),
            KasamiVariant::II => write!(f, "q={},variant=ii", self.q),
        }
    }
}

/// Parses `q=<q>,variant=<i|ii>[,j=<j>,m=<m>]`.
impl FromStr for KasamiParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut q = None;
        let mut variant = None;
        let mut j = None;
        let mut m = None;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
            let num = || {
                value
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("`{key}` needs an integer, got `{value}`")))
            };
            match key {
                "q" => q = Some(num()?),
                "variant" => variant = Some(value.to_string()),
                "j" => j = Some(num()? as u32),
                "m" => m = Some(num()? as u32),
                other => return Err(Error::Parse(format!("unknown Kasami key `{other}`"))),
            }
        }
        let q = q.ok_or_else(|| Error::Parse("missing q".into()))?;
        match variant.as_deref() {
            Some("i") | Some("1") => {
                let j = j.ok_or_else(|| Error::Parse("variant i needs j".into()))?;
                let m = m.ok_or_else(|| Error::Parse("variant i needs m".into()))?;
                Self::variant_i(q, j, m)
            }
            Some("ii") | Some("2") => {
                if j.is_some() || m.is_some() {
                    return Err(Error::Parse("variant ii takes no j or m".into()));
                }
                Self::variant_ii(q)
            }
            Some(v) => Err(Error::Parse(format!("unknown variant `{v}`"))),
            None => Err(Error::Parse("missing variant".into())),
        }
    }
}

/// The binary code `K(s, t)` of length `s`, built from its defining checks.
pub fn kasami_code(params: &KasamiParams) -> Result<LinearCode> {
    let field = Gf2m::new(params.field_degree() as u32)?;
    let s = params.s() as usize;
    let e = field.degree() as usize;
    let t = params.t();
    let powers: Vec<u32> = field.elements().map(|a| field.pow(a, t + 1)).collect();

    let mut checks = Vec::with_capacity(1 + 2 * e);
    checks.push(vec![1u8; s]);
    for bit in 0..e {
        checks.push((0..s).map(|a| (a >> bit & 1) as u8).collect());
    }
    for bit in 0..e {
        checks.push(powers.iter().map(|&c| (c >> bit & 1) as u8).collect());
    }
    LinearCode::from_parity_check(2, s, checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_validation() {
        assert!(KasamiParams::variant_ii(3).is_err());
        assert!(KasamiParams::variant_i(2, 1, 2).is_err()); // m > j
        assert!(KasamiParams::variant_i(2, 4, 3).is_err()); // gcd(3, 9) = 3
        assert!(KasamiParams::variant_i(2, 0, 0).is_err());
        let p = KasamiParams::variant_i(2, 1, 1).unwrap();
        assert_eq!((p.s(), p.t()), (8, 2));
        let p = KasamiParams::variant_ii(2).unwrap();
        assert_eq!((p.s(), p.t()), (4, 2));
    }

    #[test]
    fn parse_roundtrip() {
        for text in ["q=2,variant=ii", "q=4,variant=i,j=1,m=1", "q=2,variant=i,j=2,m=1"] {
            let p: KasamiParams = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert!("q=2".parse::<KasamiParams>().is_err());
        assert!("q=2,variant=iii".parse::<KasamiParams>().is_err());
        assert!("q=2,variant=ii,j=1".parse::<KasamiParams>().is_err());
        assert!("q=x,variant=ii".parse::<KasamiParams>().is_err());
    }

    #[test]
    fn published_parameters() {
        let p = KasamiParams::variant_ii(2).unwrap();
        assert_eq!(p.expected_parameters(), (8, 4, 2, 3));
        let p = KasamiParams::variant_i(2, 1, 1).unwrap();
        assert_eq!(p.expected_parameters(), (64, 8, 2, 3));
        assert_eq!(p.expected_theta1(), 4);
    }
}
