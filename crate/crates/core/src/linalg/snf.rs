use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::scalar::{floor_div, Int, IntMatrix};

/// Smith normal form: `(d, u, v)` with `d = u·m·v`, `u` and `v` unimodular,
/// and the nonzero diagonal entries positive with `d₁ | d₂ | …`.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let pick = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[(i, j)].is_zero())
                .min_by(|&x, &y| a[x].abs().cmp(&a[y].abs()));
            let Some((pi, pj)) = pick else {
                return (a, u, v);
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                if !a[(i, t)].is_zero() {
                    let q = -floor_div(&a[(i, t)], &a[(t, t)]);
                    a.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    dirty |= !a[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[(t, j)].is_zero() {
                    let q = -floor_div(&a[(t, j)], &a[(t, t)]);
                    a.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    dirty |= !a[(t, j)].is_zero();
                }
            }
            if dirty {
                continue;
            }
            // Enforce divisibility by folding an offending row into row t.
            let bad = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)])));
            match bad {
                Some(i) => {
                    a.add_row_multiple(t, i, &Int::one());
                    u.add_row_multiple(t, i, &Int::one());
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    (a, u, v)
}

/// Nonzero diagonal entries of the Smith form, in divisibility order.
pub fn invariant_factors(m: &IntMatrix) -> Vec<Int> {
    let (d, _, _) = snf(m);
    (0..d.nrows().min(d.ncols()))
        .map(|i| d[(i, i)].clone())
        .filter(|x| !x.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::determinant;
    use crate::linalg::scalar::{int_matrix, int_vec, rat, to_qmatrix};
    use proptest::prelude::*;

    #[test]
    fn worked_examples() {
        assert_eq!(
            invariant_factors(&int_matrix(&[&[2, 0], &[0, 3]])),
            int_vec(&[1, 6])
        );
        assert_eq!(
            invariant_factors(&int_matrix(&[&[2, 4], &[6, 8]])),
            int_vec(&[2, 4])
        );
        let id = int_matrix(&[&[1, 0], &[0, 1]]);
        assert_eq!(snf(&id).0, id);
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..=6, r * c).prop_map(move |v| {
                let rows: Vec<&[i64]> = v.chunks(c).collect();
                int_matrix(&rows)
            })
        })
    }

    proptest! {
        #[test]
        fn snf_contract(m in small_matrix()) {
            let (d, u, v) = snf(&m);
            prop_assert_eq!(&(&(&u * &m) * &v), &d);
            prop_assert_eq!(determinant(&to_qmatrix(&u)).abs(), rat(1, 1));
            prop_assert_eq!(determinant(&to_qmatrix(&v)).abs(), rat(1, 1));
            for i in 0..d.nrows() {
                for j in 0..d.ncols() {
                    if i != j {
                        prop_assert!(d[(i, j)].is_zero());
                    }
                }
            }
            let f = invariant_factors(&m);
            for w in f.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            prop_assert!(f.iter().all(|x| x.is_positive()));
            if m.is_square() {
                let det = determinant(&to_qmatrix(&m));
                if !det.is_zero() {
                    let prod = f.iter().fold(Int::one(), |a, x| a * x);
                    prop_assert_eq!(rat(1, 1) * crate::linalg::scalar::rat_int(&prod), det.abs());
                }
            }
        }
    }
}
