//! Exact rank of sparse rational matrices by incremental row reduction.
//!
//! Pivots are chosen as the first nonzero entry in column order; pivot rows
//! are normalized to a unit leading coefficient. Everything stays in Q.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::scalar::Rational;

/// Sparse row: strictly increasing column indices, no zero entries.
pub type SparseRow = Vec<(u32, Rational)>;

pub fn row_from_dense(row: &[Rational]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i as u32, v.clone()))
        .collect()
}

/// An incrementally maintained row space in echelon form.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    pivots: BTreeMap<u32, SparseRow>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the current basis; if a nonzero remainder is
    /// left it becomes a new pivot row and the rank grows by one.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            let Some((lead_col, lead_val)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead_col) {
                Some(pivot) => {
                    row = row_sub_scaled(&row, pivot, &lead_val);
                }
                None => {
                    let inv = Rational::new(lead_val.denom().clone(), lead_val.numer().clone());
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead_col, row);
                    return true;
                }
            }
        }
    }

    /// Membership test without mutating the space.
    pub fn reduces_to_zero(&self, mut row: SparseRow) -> bool {
        loop {
            let Some((lead_col, lead_val)) = row.first().cloned() else {
                return true;
            };
            match self.pivots.get(&lead_col) {
                Some(pivot) => row = row_sub_scaled(&row, pivot, &lead_val),
                None => return false,
            }
        }
    }
}

/// `row − factor·pivot`, where pivot has unit leading coefficient.
fn row_sub_scaled(row: &SparseRow, pivot: &SparseRow, factor: &Rational) -> SparseRow {
    let mut out = SparseRow::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < row.len() || j < pivot.len() {
        if j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i >= row.len() || pivot[j].0 < row[i].0 {
            let v = -(factor * &pivot[j].1);
            if !v.is_zero() {
                out.push((pivot[j].0, v));
            }
            j += 1;
        } else {
            let v = &row[i].1 - &(factor * &pivot[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Exact rank of a collection of sparse rows.
pub fn exact_rank_sparse(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut space = RowSpace::new();
    for r in rows {
        space.insert(r);
    }
    space.rank()
}

/// Exact rank of a dense rational matrix.
pub fn exact_rank(matrix: &[Vec<Rational>]) -> usize {
    exact_rank_sparse(matrix.iter().map(|r| row_from_dense(r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_rank() {
        let m: Vec<Vec<Rational>> = (0..5)
            .map(|i| (0..5).map(|j| rat((i == j) as i64)).collect())
            .collect();
        assert_eq!(exact_rank(&m), 5);
    }

    #[test]
    fn outer_product_rank_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let u: Vec<Rational> = (0..6)
            .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
            .collect();
        let v: Vec<Rational> = (0..7)
            .map(|_| ratio(rng.gen_range(1..=9), rng.gen_range(1..=5)))
            .collect();
        let m: Vec<Vec<Rational>> = u
            .iter()
            .map(|a| v.iter().map(|b| a * b).collect())
            .collect();
        assert_eq!(exact_rank(&m), 1);
    }

    #[test]
    fn rank_invariant_under_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let rows = 8;
            let cols = 6;
            let m: Vec<Vec<Rational>> = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| {
                            if rng.gen_bool(0.4) {
                                ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))
                            } else {
                                rat(0)
                            }
                        })
                        .collect()
                })
                .collect();
            let r = exact_rank(&m);

            let mut rp: Vec<usize> = (0..rows).collect();
            let mut cp: Vec<usize> = (0..cols).collect();
            for i in (1..rows).rev() {
                rp.swap(i, rng.gen_range(0..=i));
            }
            for i in (1..cols).rev() {
                cp.swap(i, rng.gen_range(0..=i));
            }
            let pm: Vec<Vec<Rational>> = rp
                .iter()
                .map(|&i| cp.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            assert_eq!(exact_rank(&pm), r);

            // scaling rows by nonzero constants preserves rank too
            let sm: Vec<Vec<Rational>> = m
                .iter()
                .map(|row| {
                    let s = ratio(rng.gen_range(1..=7), rng.gen_range(1..=4));
                    row.iter().map(|v| v * &s).collect()
                })
                .collect();
            assert_eq!(exact_rank(&sm), r);
        }
    }

    #[test]
    fn membership_test() {
        let mut space = RowSpace::new();
        space.insert(vec![(0, rat(1)), (2, rat(2))]);
        space.insert(vec![(1, rat(3))]);
        assert!(space.reduces_to_zero(vec![(0, rat(2)), (1, rat(3)), (2, rat(4))]));
        assert!(!space.reduces_to_zero(vec![(2, rat(1))]));
    }
}
