use num_traits::{Signed, Zero};

use super::matrix::Matrix;
use super::scalar::{floor_div, IntMatrix};

/// Column Hermite normal form: returns `(h, u)` with `h = m·u`, `u` unimodular.
///
/// `h` is lower echelon: each pivot is positive, everything to its right in
/// the pivot row is zero and everything to its left is reduced into
/// `[0, pivot)`. Trailing columns of `h` are zero; the matching columns of `u`
/// form a basis of the integer kernel of `m`.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = m.shape();
    let mut h = m.clone();
    let mut u = Matrix::identity(cols);
    let mut k = 0;
    for i in 0..rows {
        if k == cols {
            break;
        }
        loop {
            let pick = (k..cols)
                .filter(|&j| !h[(i, j)].is_zero())
                .min_by(|&a, &b| h[(i, a)].abs().cmp(&h[(i, b)].abs()));
            let Some(p) = pick else { break };
            h.swap_cols(k, p);
            u.swap_cols(k, p);
            let mut clean = true;
            for j in k + 1..cols {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = -floor_div(&h[(i, j)], &h[(i, k)]);
                h.add_col_multiple(j, k, &q);
                u.add_col_multiple(j, k, &q);
                if !h[(i, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(i, k)].is_zero() {
            continue;
        }
        if h[(i, k)].is_negative() {
            h.negate_col(k);
            u.negate_col(k);
        }
        for j in 0..k {
            let q = -floor_div(&h[(i, j)], &h[(i, k)]);
            if !q.is_zero() {
                h.add_col_multiple(j, k, &q);
                u.add_col_multiple(j, k, &q);
            }
        }
        k += 1;
    }
    (h, u)
}

/// Number of nonzero columns of a column HNF.
pub(crate) fn hnf_rank(h: &IntMatrix) -> usize {
    (0..h.ncols())
        .take_while(|&j| (0..h.nrows()).any(|i| !h[(i, j)].is_zero()))
        .count()
}
