use num_traits::{One, Signed};

use super::diophantine::{solve_diophantine, Diophantine};
use super::hnf::{hnf, hnf_rank};
use super::matrix::Matrix;
use super::rational::unimodular_inverse;
use super::scalar::{Int, IntMatrix};
use crate::error::{Error, Result};

/// A sublattice of `ℤ^d`, stored as the nonzero columns of its column HNF.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    basis: IntMatrix,
}

impl IntegerLattice {
    /// Lattice spanned by the columns of `generators` (which may be dependent).
    pub fn from_generators(generators: &IntMatrix) -> Self {
        let (h, _) = hnf(generators);
        let r = hnf_rank(&h);
        IntegerLattice {
            basis: h.select_cols(0..r),
        }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<Int>>) -> Self {
        Self::from_generators(&Matrix::from_cols(ambient_dim, vectors))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        IntegerLattice {
            basis: Matrix::zeros(ambient_dim, 0),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        IntegerLattice {
            basis: Matrix::identity(ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn rank(&self) -> usize {
        self.basis.ncols()
    }

    /// Basis vectors as matrix columns, in canonical HNF.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Int>> {
        self.basis.cols_vec()
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        matches!(
            solve_diophantine(&self.basis, v),
            Diophantine::Solved { .. }
        )
    }

    pub fn is_saturated(&self) -> bool {
        saturate(self) == *self
    }

    /// Index `[saturate(L) : L]`.
    pub fn saturation_index(&self) -> Int {
        let sat = saturate(self);
        // Coordinates of L in the saturated basis form a square integer matrix.
        let coords: Vec<Vec<Int>> = self
            .basis_vectors()
            .iter()
            .map(|v| match solve_diophantine(sat.basis(), v) {
                Diophantine::Solved { particular, .. } => particular,
                Diophantine::Infeasible { .. } => unreachable!("lattice lies in its saturation"),
            })
            .collect();
        let m = Matrix::from_cols(sat.rank(), coords);
        super::rational::determinant(&super::scalar::to_qmatrix(&m))
            .abs()
            .to_integer()
    }
}

impl std::fmt::Debug for IntegerLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntegerLattice({:?})", self.basis)
    }
}

/// The lattice of integer solutions of `a·x = 0`.
pub fn integer_kernel(a: &IntMatrix) -> IntegerLattice {
    let (h, u) = hnf(a);
    let r = hnf_rank(&h);
    IntegerLattice::from_generators(&u.select_cols(r..a.ncols()))
}

/// `(ℚ·L) ∩ ℤ^d` in canonical form.
pub fn saturate(l: &IntegerLattice) -> IntegerLattice {
    let d = l.ambient_dim();
    if l.rank() == 0 {
        return IntegerLattice::zero(d);
    }
    let perp = integer_kernel(&l.basis().transpose());
    if perp.rank() == 0 {
        return IntegerLattice::full(d);
    }
    integer_kernel(&perp.basis().transpose())
}

/// Columns completing the basis of a saturated lattice to a basis of `ℤ^d`.
pub fn extend_to_zbasis(sub: &IntegerLattice) -> Result<IntMatrix> {
    let d = sub.ambient_dim();
    let r = sub.rank();
    let (h, u) = hnf(&sub.basis().transpose());
    // B^T u = [H | 0]; saturation is equivalent to H being unimodular.
    if (0..r).any(|i| !h[(i, i)].is_one()) {
        return Err(Error::NotSaturated);
    }
    let u_inv_t = unimodular_inverse(&u)
        .expect("hnf transform is unimodular")
        .transpose();
    Ok(u_inv_t.select_cols(r..d))
}
