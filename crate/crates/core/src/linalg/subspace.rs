use num_traits::Zero;

use super::matrix::Matrix;
use super::rational::{kernel_basis, rref};
use super::scalar::{QMatrix, Rational};

/// A subspace of `ℚ^n`, stored by the reduced row echelon form of its basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSubspace {
    ambient_dim: usize,
    /// Basis vectors as columns; the transpose is in reduced row echelon form.
    basis: QMatrix,
}

impl QSubspace {
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        let m = Matrix::from_rows(ambient_dim, vectors.to_vec());
        let (r, pivots) = rref(&m);
        QSubspace {
            ambient_dim,
            basis: r.select_rows(0..pivots.len()).transpose(),
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, &[])
    }

    pub fn full(ambient_dim: usize) -> Self {
        QSubspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.cols_vec()
    }

    /// Coordinates where the echelon basis has its pivots.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|j| {
                (0..self.ambient_dim)
                    .find(|&i| !self.basis[(i, j)].is_zero())
                    .expect("basis vectors are nonzero")
            })
            .collect()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut vs = self.basis_vectors();
        vs.push(v.to_vec());
        QSubspace::span(self.ambient_dim, &vs).dim() == self.dim()
    }

    pub fn sum(&self, other: &QSubspace) -> QSubspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        QSubspace::span(self.ambient_dim, &vs)
    }

    /// Vectors spanning the annihilator `{w : w·s = 0 ∀ s}`.
    pub fn annihilator(&self) -> Vec<Vec<Rational>> {
        kernel_basis(&self.basis.transpose())
    }
}

impl std::fmt::Debug for QSubspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QSubspace({:?})", self.basis)
    }
}

/// Null space of `m` as a canonical subspace.
pub fn kernel_q(m: &QMatrix) -> QSubspace {
    QSubspace::span(m.ncols(), &kernel_basis(m))
}
