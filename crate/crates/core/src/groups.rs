//! Finite abelian groups `Z_{d₁} × ⋯ × Z_{d_r}` and their characters.
//!
//! Character values are kept symbolic: `χ_h(g)` is an exponent of a fixed
//! primitive `e`-th root of unity `ζ`, where `e` is the group exponent.

use crate::error::{Error, Result};
use num_integer::Integer;

/// An element of a [`FiniteAbelianGroup`], as reduced coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<u32>);

impl GroupElement {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

/// A character `χ_h`, identified by its exponent vector `h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    pub exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
    exponent: u32,
    order: u64,
}

impl FiniteAbelianGroup {
    /// Builds the direct product of cyclic groups of the given orders.
    pub fn new(orders: &[u32]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidGroup("no cyclic factors".into()));
        }
        if let Some(&d) = orders.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidGroup(format!("cyclic factor of order {d}")));
        }
        let exponent = orders.iter().fold(1u32, |acc, &d| acc.lcm(&d));
        let order = orders.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d as u64));
        let order = order.ok_or_else(|| Error::InvalidGroup("order overflows u64".into()))?;
        Ok(Self {
            orders: orders.to_vec(),
            exponent,
            order,
        })
    }

    /// Elementary abelian group `Z_p^r`.
    pub fn elementary(p: u32, rank: usize) -> Result<Self> {
        Self::new(&vec![p; rank])
    }

    pub fn cyclic_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// True iff every non-identity element has order two.
    pub fn is_elementary_2(&self) -> bool {
        self.orders.iter().all(|&d| d == 2)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.orders.len()])
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.0.len() == self.orders.len() && g.0.iter().zip(&self.orders).all(|(c, d)| c < d)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((x, y), d)| (x + y) % d)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&self.orders).map(|(x, d)| (d - x) % d).collect())
    }

    /// Position of `g` in lexicographic order (first coordinate most significant).
    pub fn index_of(&self, g: &GroupElement) -> u64 {
        g.0.iter()
            .zip(&self.orders)
            .fold(0u64, |acc, (&c, &d)| acc * d as u64 + c as u64)
    }

    pub fn element(&self, mut index: u64) -> GroupElement {
        let mut coords = vec![0u32; self.orders.len()];
        for (slot, &d) in coords.iter_mut().zip(&self.orders).rev() {
            *slot = (index % d as u64) as u32;
            index /= d as u64;
        }
        GroupElement(coords)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element(i))
    }

    /// All `|G|` characters, ordered lexicographically by exponent vector.
    pub fn characters(&self) -> Vec<Character> {
        self.elements().map(|h| Character { exponents: h.0 }).collect()
    }

    pub fn trivial_character(&self) -> Character {
        Character {
            exponents: vec![0; self.orders.len()],
        }
    }

    /// `χ_h(g)` as an exponent of `ζ_e`: `Σ h_i g_i (e / d_i) mod e`.
    pub fn character_value(&self, chi: &Character, g: &GroupElement) -> u32 {
        let e = self.exponent as u64;
        let mut acc = 0u64;
        for ((&h, &x), &d) in chi.exponents.iter().zip(&g.0).zip(&self.orders) {
            acc += (h as u64 * x as u64 % d as u64) * (e / d as u64);
        }
        (acc % e) as u32
    }

    /// Pointwise product `χ_a · χ_b`.
    pub fn character_product(&self, a: &Character, b: &Character) -> Character {
        Character {
            exponents: self
                .add(&GroupElement(a.exponents.clone()), &GroupElement(b.exponents.clone()))
                .0,
        }
    }

    /// `χ_a · conj(χ_b)`.
    pub fn character_quotient(&self, a: &Character, b: &Character) -> Character {
        let nb = self.neg(&GroupElement(b.exponents.clone()));
        Character {
            exponents: self.add(&GroupElement(a.exponents.clone()), &nb).0,
        }
    }

    /// Histogram of `χ(g)` exponents over the whole group; `Σ_g χ(g) = Σ_r counts[r] ζ^r`.
    pub fn character_sum_counts(&self, chi: &Character) -> Vec<i64> {
        let mut counts = vec![0i64; self.exponent as usize];
        for g in self.elements() {
            counts[self.character_value(chi, &g) as usize] += 1;
        }
        counts
    }
}
