//! The coordinate frame shared by every component of an ingredient list.
//!
//! With `L = ker σ^t ∩ ℤ^d` (saturated), the frame is a unimodular matrix
//! `[Y | W | R]` where `Y` is the given basis of the Hamiltonian lattice, `Y ∪ W`
//! is a basis of `L`, and `R` completes it to a basis of `ℤ^d`. Vectors of `𝔩`
//! are written in the basis `[Y | W]`; `N` is coordinatized by the basis dual
//! to `W`; the projection `𝔱 → 𝔩` is taken along `R`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{
    extend_to_zbasis, inverse, kernel_basis, primitive_integer, saturate, solve_diophantine,
    to_qmatrix, to_rational_vec, Diophantine, IntMatrix, IntegerLattice, QMatrix, Rational,
};
use crate::torus::{complement, Subtorus};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    d: usize,
    y: IntMatrix,
    w: IntMatrix,
    r: IntMatrix,
    full_inv: QMatrix,
    z: IntMatrix,
}

impl Frame {
    /// Builds the frame; fails if `σ^t` is not antisymmetric or `Y ⊄ ker σ^t`.
    pub fn new(sigma_t: &QMatrix, t_h: &Subtorus, y: &IntMatrix) -> Result<Frame> {
        let d = sigma_t.nrows();
        if sigma_t.transpose() != sigma_t.map(|x| -x) {
            return Err(Error::IrrationalKernel);
        }
        if !(sigma_t * &to_qmatrix(y)).is_zero() {
            return Err(Error::Precondition(
                "Hamiltonian lattice is not contained in ker sigma_t".into(),
            ));
        }
        let kernel: Vec<_> = kernel_basis(sigma_t)
            .iter()
            .map(|v| primitive_integer(v))
            .collect();
        let l = saturate(&IntegerLattice::from_vectors(d, kernel));
        let b = l.basis();
        // Coordinates of Y in the basis of L; the Y lattice is saturated in L.
        let coords: Vec<_> = y
            .cols_vec()
            .iter()
            .map(|col| match solve_diophantine(b, col) {
                Diophantine::Solved { particular, .. } => particular,
                Diophantine::Infeasible { .. } => unreachable!("Y lies in L"),
            })
            .collect();
        let y_in_l = IntegerLattice::from_vectors(l.rank(), coords);
        let ext = extend_to_zbasis(&y_in_l)?;
        let w = b * &ext;
        let r = extend_to_zbasis(&l)?;
        let full = y.hstack(&w).hstack(&r);
        let full_inv = inverse(&to_qmatrix(&full)).ok_or(Error::NotSaturated)?;
        let z = complement(t_h)?.basis().clone();
        Ok(Frame {
            d,
            y: y.clone(),
            w,
            r,
            full_inv,
            z,
        })
    }

    pub fn torus_dim(&self) -> usize {
        self.d
    }

    pub fn d_h(&self) -> usize {
        self.y.ncols()
    }

    pub fn d_n(&self) -> usize {
        self.w.ncols()
    }

    pub fn dim_l(&self) -> usize {
        self.d_h() + self.d_n()
    }

    /// Given basis of the Hamiltonian lattice.
    pub fn y(&self) -> &IntMatrix {
        &self.y
    }

    /// Extension vectors completing `Y` to a basis of `𝔩 ∩ ℤ^d`.
    pub fn w(&self) -> &IntMatrix {
        &self.w
    }

    /// Completion of `𝔩 ∩ ℤ^d` to a basis of `ℤ^d`.
    pub fn r(&self) -> &IntMatrix {
        &self.r
    }

    /// Basis of the default complement `T_f`.
    pub fn default_complement(&self) -> &IntMatrix {
        &self.z
    }

    /// `𝔩`-coordinates to `𝔱`-coordinates.
    pub fn l_to_t(&self, v: &[Rational]) -> Vec<Rational> {
        to_qmatrix(&self.y.hstack(&self.w)).mul_vec(v)
    }

    /// `𝔩`-coordinates of the projection of `x ∈ 𝔱` along `R`.
    pub fn project_l(&self, x: &[Rational]) -> Vec<Rational> {
        let all = self.full_inv.mul_vec(x);
        all[..self.dim_l()].to_vec()
    }

    /// `𝔩`-coordinates of `x`, or `None` if `x ∉ 𝔩`.
    pub fn t_to_l(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        let all = self.full_inv.mul_vec(x);
        all[self.dim_l()..]
            .iter()
            .all(Zero::is_zero)
            .then(|| all[..self.dim_l()].to_vec())
    }

    /// `ζ(x)` for `ζ ∈ N` in dual-`W` coordinates and `x ∈ 𝔩` in `𝔩`-coordinates.
    pub fn pair_n(&self, zeta: &[Rational], x_l: &[Rational]) -> Rational {
        zeta.iter()
            .zip(&x_l[self.d_h()..])
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Components `(a, b)` of `x ∈ 𝔱` in the basis `[Y | Z]` for a complement `Z`.
    pub fn split_h_f(
        &self,
        x: &[Rational],
        z: &IntMatrix,
    ) -> Result<(Vec<Rational>, Vec<Rational>)> {
        let m = to_qmatrix(&self.y.hstack(z));
        if !m.is_square() {
            return Err(Error::NotComplementary);
        }
        let inv = inverse(&m).ok_or(Error::NotComplementary)?;
        let all = inv.mul_vec(x);
        let dh = self.d_h();
        Ok((all[..dh].to_vec(), all[dh..].to_vec()))
    }

    /// `Y·a` as a vector of `𝔱`.
    pub fn y_combination(&self, a: &[Rational]) -> Vec<Rational> {
        to_qmatrix(&self.y).mul_vec(a)
    }

    /// `Σ b_j Z_j` as a vector of `𝔱`.
    pub fn combination(m: &IntMatrix, coeffs: &[Rational]) -> Vec<Rational> {
        if m.ncols() == 0 {
            return vec![Rational::zero(); m.nrows()];
        }
        to_qmatrix(m).mul_vec(coeffs)
    }

    /// Values of the frame as `𝔱` vectors: the `W` columns.
    pub fn w_vectors(&self) -> Vec<Vec<Rational>> {
        self.w
            .cols_vec()
            .iter()
            .map(|c| to_rational_vec(c))
            .collect()
    }
}

/// Checks that a complement basis `z` is complementary to `Y`.
pub fn check_complement(y: &IntMatrix, z: &IntMatrix) -> Result<()> {
    let m = y.hstack(z);
    if !m.is_square() {
        return Err(Error::NotComplementary);
    }
    let det = crate::linalg::determinant(&to_qmatrix(&m));
    if det == Rational::from_integer(1.into()) || det == Rational::from_integer((-1).into()) {
        Ok(())
    } else {
        Err(Error::NotComplementary)
    }
}
