//! Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::scalar::{to_int_matrix, to_qmatrix, IntMatrix, QMatrix, Rational};

/// Reduced row echelon form together with the pivot columns.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = Rational::one() / a[(r, c)].clone();
        for j in 0..cols {
            let v = a[(r, j)].clone() * inv.clone();
            a[(r, j)] = v;
        }
        for i in 0..rows {
            if i != r && !a[(i, c)].is_zero() {
                let k = -a[(i, c)].clone();
                a.add_row_multiple(i, r, &k);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &QMatrix) -> usize {
    rref(m).1.len()
}

/// Basis of the null space, one vector per free column.
pub fn kernel_basis(m: &QMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    let cols = m.ncols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect()
}

pub fn determinant(m: &QMatrix) -> Rational {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.nrows();
    let mut a = m.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap_rows(p, c);
            det = -det;
        }
        let pivot = a[(c, c)].clone();
        det *= pivot.clone();
        for i in c + 1..n {
            if !a[(i, c)].is_zero() {
                let k = -a[(i, c)].clone() / pivot.clone();
                a.add_row_multiple(i, c, &k);
            }
        }
    }
    det
}

pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.nrows();
    if n == 0 {
        return Some(m.clone());
    }
    let aug = m.hstack(&Matrix::identity(n));
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.select_cols(n..2 * n))
}

/// Inverse of an integer matrix with determinant ±1.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    inverse(&to_qmatrix(m)).and_then(|q| to_int_matrix(&q))
}

/// Some solution of `m x = b`, or `None` if the system is inconsistent.
pub fn solve(m: &QMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(m.nrows(), b.len(), "solve shape mismatch");
    let cols = m.ncols();
    let aug = m.hstack(&Matrix::column_vector(b.to_vec()));
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, cols)].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{q_matrix, rat};

    #[test]
    fn rank_and_kernel() {
        let m = q_matrix(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        assert_eq!(rank(&m), 2);
        let k = kernel_basis(&m);
        assert_eq!(k, vec![vec![rat(0, 1), rat(0, 1), rat(1, 1)]]);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = q_matrix(&[&[2, 4], &[6, 8]]);
        assert_eq!(determinant(&m), rat(-8, 1));
        let inv = inverse(&m).unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert!(inverse(&q_matrix(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(determinant(&Matrix::<Rational>::zeros(0, 0)), rat(1, 1));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = q_matrix(&[&[1, 2], &[2, 4]]);
        let x = solve(&m, &[rat(3, 1), rat(6, 1)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![rat(3, 1), rat(6, 1)]);
        assert!(solve(&m, &[rat(3, 1), rat(7, 1)]).is_none());
    }
}
