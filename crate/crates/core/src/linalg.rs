//! Exact sparse linear algebra over the rationals.
//!
//! Everything here works on sparse rows `Vec<(usize, BigRational)>` sorted by
//! column with no zero entries and no repeated columns. Matrices stay small
//! enough (a few thousand rows) that straightforward fraction-free-ish
//! Gaussian elimination with sparse rows is fast and, crucially, exact.

use num::{BigRational, Zero};
use std::collections::BTreeMap;

/// A sparse row: strictly increasing column indices, nonzero rational entries.
pub type SparseRow = Vec<(usize, BigRational)>;

/// Normalize an unsorted bag of (column, value) pairs into a `SparseRow`.
pub fn sparse_row(entries: impl IntoIterator<Item = (usize, BigRational)>) -> SparseRow {
    let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
    for (c, v) in entries {
        let slot = acc.entry(c).or_insert_with(BigRational::zero);
        *slot += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `row += coeff * other`, keeping the sparse invariants.
fn add_scaled(row: &SparseRow, other: &SparseRow, coeff: &BigRational) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        if j >= other.len() || (i < row.len() && row[i].0 < other[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i >= row.len() || other[j].0 < row[i].0 {
            let v = coeff * &other[j].1;
            if !v.is_zero() {
                out.push((other[j].0, v));
            }
            j += 1;
        } else {
            let v = &row[i].1 + coeff * &other[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental exact row-echelon accumulator.
///
/// Rows are fed one at a time; the basis keeps one pivot row per leading
/// column, so `rank()` is available at any point. Reduction is only applied
/// against pivot columns, which keeps rows sparse in practice.
#[derive(Default)]
pub struct RowEchelon {
    /// pivot column -> reduced row with that leading column (leading coeff 1)
    pivots: BTreeMap<usize, SparseRow>,
}

impl RowEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduce `row` against the current basis; if a nonzero remainder is
    /// left, absorb it as a new pivot row and return `true`.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            let Some((lead, lead_val)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    let coeff = -lead_val;
                    row = add_scaled(&row, pivot, &coeff);
                }
                None => {
                    let inv = lead_val.recip();
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Fully reduce `row` without inserting it; returns the remainder.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some((lead, lead_val)) = row.first().cloned() else {
                return row;
            };
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    let coeff = -lead_val;
                    row = add_scaled(&row, pivot, &coeff);
                }
                None => return row,
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut ech = RowEchelon::new();
    for row in rows {
        ech.insert(row);
    }
    ech.rank()
}

/// Quotient dimension `total − rank(relations)`.
///
/// Panics if the relation rank exceeds `total`, which would mean the
/// relation rows mention columns outside the ambient space.
pub fn quotient_dim(total: usize, relations: impl IntoIterator<Item = SparseRow>) -> usize {
    let r = rank(relations);
    assert!(r <= total, "relation rank {r} exceeds ambient dimension {total}");
    total - r
}

/// Solve `basis * x = target` for dense columns `basis` (each a dense
/// coordinate vector) that are known to be linearly independent, returning
/// the coordinate vector of `target` in that basis, or `None` if `target`
/// lies outside the span.
pub fn solve_in_basis(
    basis: &[Vec<BigRational>],
    target: &[Vec<BigRational>; 1],
) -> Option<Vec<BigRational>> {
    // Augment [basis | target] and eliminate; used only for small dense
    // systems (Specht straightening), so dense elimination is fine.
    let rows = basis.first().map_or(target[0].len(), Vec::len);
    let cols = basis.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(target[0][r].clone());
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut next_row = 0;
    for c in 0..cols {
        let Some(pr) = (next_row..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(next_row, pr);
        let inv = m[next_row][c].clone().recip();
        for v in m[next_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != next_row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..=cols {
                    let sub = &f * &m[next_row][j];
                    m[r][j] -= sub;
                }
            }
        }
        pivot_of_col[c] = next_row;
        next_row += 1;
    }
    // Consistency: rows below the pivots must have zero in the target column.
    if m.iter().skip(next_row).any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (c, &pr) in pivot_of_col.iter().enumerate() {
        if pr != usize::MAX {
            x[c] = m[pr][cols].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(x: i64) -> BigRational {
        BigRational::from_i64(x).unwrap()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            sparse_row([(0, q(1)), (1, q(2))]),
            sparse_row([(0, q(2)), (1, q(4))]),
            sparse_row([(1, q(1)), (2, q(1))]),
        ];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn sparse_row_merges_duplicates() {
        let row = sparse_row([(3, q(1)), (1, q(2)), (3, q(-1))]);
        assert_eq!(row, vec![(1, q(2))]);
    }

    #[test]
    fn quotient_dim_counts_cokernel() {
        let rels = vec![sparse_row([(0, q(1)), (1, q(-1))]), sparse_row([(2, q(5))])];
        assert_eq!(quotient_dim(4, rels), 2);
    }

    #[test]
    fn solve_in_basis_roundtrip() {
        let b0 = vec![q(1), q(0), q(2)];
        let b1 = vec![q(0), q(1), q(1)];
        let target = vec![q(3), q(-1), q(5)];
        let x = solve_in_basis(&[b0, b1], &[target]).unwrap();
        assert_eq!(x, vec![q(3), q(-1)]);
        let outside = vec![q(0), q(0), q(1)];
        assert!(solve_in_basis(&[vec![q(1), q(0), q(2)], vec![q(0), q(1), q(1)]], &[outside]).is_none());
    }

}
