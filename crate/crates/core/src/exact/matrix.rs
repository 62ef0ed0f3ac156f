use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ExactRational;

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactRational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<ExactRational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        RationalMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            ExactRational::one()
                        } else {
                            ExactRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactRational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[ExactRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Exact rank by fraction-free (Bareiss) elimination. Each row is first
    /// cleared of denominators, which does not change the rank.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|i| integer_row(self.row(i))).collect();
        let mut rank = 0;
        let mut prev_pivot = BigInt::one();
        for col in 0..self.cols {
            let Some(pivot_row) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot_row);
            let pivot = m[rank][col].clone();
            for r in (rank + 1)..self.rows {
                let factor = m[r][col].clone();
                #[allow(clippy::needless_range_loop)] // rows r and rank are both read
                for c in col..self.cols {
                    let v = &pivot * &m[r][c] - &factor * &m[rank][c];
                    // Sylvester's identity guarantees exact division.
                    let (q, rem) = v.div_rem(&prev_pivot);
                    debug_assert!(rem.is_zero());
                    m[r][c] = q;
                }
            }
            prev_pivot = pivot;
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

fn integer_row(row: &[ExactRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn proportional_rows() {
        let m = RationalMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn genus_one_phi_matrix() {
        let m = RationalMatrix::from_rows(vec![vec![rat(-1, 2), rat(-3, 2)], vec![rat(1, 2), rat(1, 2)]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn zero_and_wide_matrices() {
        let z = RationalMatrix::from_rows(vec![vec![int(0); 4]; 3]);
        assert_eq!(z.rank(), 0);
        let wide = RationalMatrix::from_rows(vec![
            vec![int(0), int(1), int(2), int(3)],
            vec![int(0), int(2), int(4), int(7)],
            vec![int(0), int(3), int(6), int(10)],
        ]);
        assert_eq!(wide.rank(), 2);
    }
}
