use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::{Error, Result};

/// `K_{s,y} = (p − 2·max(s,y))·min(s,y)` for `1 ≤ s, y ≤ d = (p−1)/2`: the
/// dimension for a genus-one surface with two points colored `p−2s−1` and
/// `p−2y−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTable {
    p: u64,
    entries: Vec<u64>,
}

impl FusionTable {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) {
            return Err(Error::InvalidLevel(p));
        }
        let d = (p - 1) / 2;
        let entries = (1..=d)
            .flat_map(|s| (1..=d).map(move |y| (p - 2 * s.max(y)) * s.min(y)))
            .collect();
        Ok(FusionTable { p, entries })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> u64 {
        (self.p - 1) / 2
    }

    /// `K_{s,y}` (1-based indices).
    pub fn get(&self, s: u64, y: u64) -> u64 {
        let d = self.d();
        self.entries[((s - 1) * d + (y - 1)) as usize]
    }
}

/// Genus-by-genus fusion recursion at a fixed level:
/// `D_1^{(p−2s−1)} = s`, `D_{g+1}^{(p−2s−1)} = Σ_y K_{s,y} D_g^{(p−2y−1)}`.
/// Rows are memoized as they are filled; lookups never recompute.
#[derive(Debug, Clone)]
pub struct FusionOracle {
    table: FusionTable,
    /// `rows[g−1][s−1] = D_g^{(p−2s−1)}`
    rows: Vec<Vec<BigUint>>,
}

impl FusionOracle {
    pub fn new(p: u64) -> Result<Self> {
        let table = FusionTable::new(p)?;
        let base = (1..=table.d()).map(BigUint::from).collect();
        Ok(FusionOracle {
            table,
            rows: alloc::vec![base],
        })
    }

    pub fn table(&self) -> &FusionTable {
        &self.table
    }

    pub fn dimension(&mut self, g: u32, s: u64) -> Result<&BigUint> {
        if g < 1 {
            return Err(Error::InvalidGenus { genus: g, min: 1 });
        }
        let d = self.table.d();
        if s < 1 || s > d {
            return Err(Error::IndexOutOfRange { s, d });
        }
        while self.rows.len() < g as usize {
            let prev = self.rows.last().expect("base row");
            let next = (1..=d)
                .map(|s| {
                    (1..=d).fold(BigUint::zero(), |acc, y| {
                        acc + &prev[(y - 1) as usize] * self.table.get(s, y)
                    })
                })
                .collect();
            self.rows.push(next);
        }
        Ok(&self.rows[g as usize - 1][s as usize - 1])
    }
}

/// `D_g^{(p−2s−1)}` by the fusion recursion.
pub fn fusion_dimension(g: u32, p: u64, s: u64) -> Result<BigUint> {
    FusionOracle::new(p)?.dimension(g, s).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_one_is_s() {
        for p in [3u64, 5, 7, 13] {
            for s in 1..=(p - 1) / 2 {
                assert_eq!(fusion_dimension(1, p, s).unwrap(), BigUint::from(s));
            }
        }
    }

    #[test]
    fn genus_two_level_five() {
        assert_eq!(fusion_dimension(2, 5, 1).unwrap(), BigUint::from(5u32));
        assert_eq!(fusion_dimension(2, 5, 2).unwrap(), BigUint::from(5u32));
    }

    #[test]
    fn table_is_symmetric_and_positive() {
        let t = FusionTable::new(11).unwrap();
        for s in 1..=5 {
            for y in 1..=5 {
                assert_eq!(t.get(s, y), t.get(y, s));
                assert!(t.get(s, y) >= 1);
            }
        }
    }

    #[test]
    fn out_of_range_index() {
        assert_eq!(fusion_dimension(2, 5, 3), Err(Error::IndexOutOfRange { s: 3, d: 2 }));
        assert_eq!(fusion_dimension(2, 5, 0), Err(Error::IndexOutOfRange { s: 0, d: 2 }));
        assert_eq!(fusion_dimension(2, 4, 1), Err(Error::InvalidLevel(4)));
    }

    #[test]
    fn large_values_exceed_u64() {
        let v = fusion_dimension(30, 41, 3).unwrap();
        assert!(v.bits() > 64);
    }
}
