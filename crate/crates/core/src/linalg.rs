//! Gaussian elimination over Q.

use num_traits::{One, Zero};

use crate::rational::{Rational, RationalVector};

/// Reduced row-echelon form of the given rows, each of length `cols`.
/// Returns the nonzero rows of the reduced matrix and the pivot columns,
/// pivots chosen leftmost-first.
pub fn row_reduce(rows: &[RationalVector], cols: usize) -> (Vec<RationalVector>, Vec<usize>) {
    let mut m: Vec<RationalVector> = rows.to_vec();
    for r in &m {
        assert_eq!(r.len(), cols, "row length does not match column count");
    }
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        let Some(found) = (top..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(top, found);
        let inv = Rational::one() / m[top][col];
        m[top] = m[top].scale(inv);
        for r in 0..m.len() {
            if r != top && !m[r][col].is_zero() {
                let factor = m[r][col];
                m[r] = m[r].sub(&m[top].scale(factor));
            }
        }
        pivots.push(col);
        top += 1;
        if top == m.len() {
            break;
        }
    }
    m.truncate(top);
    (m, pivots)
}

pub fn rank(rows: &[RationalVector], cols: usize) -> usize {
    row_reduce(rows, cols).1.len()
}

/// Basis of `{x : r·x = 0 for all rows r}`: one vector per free column, in
/// increasing column order, with a 1 in that column.
pub fn nullspace(rows: &[RationalVector], cols: usize) -> Vec<RationalVector> {
    let (reduced, pivots) = row_reduce(rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = RationalVector::zeros(cols);
            v[free] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[free];
            }
            v
        })
        .collect()
}

/// Whether two families of vectors span the same subspace of Q^cols.
pub fn same_span(a: &[RationalVector], b: &[RationalVector], cols: usize) -> bool {
    let ra = rank(a, cols);
    if ra != rank(b, cols) {
        return false;
    }
    let both: Vec<RationalVector> = a.iter().chain(b).cloned().collect();
    rank(&both, cols) == ra
}
