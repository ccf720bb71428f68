//! Exact rational and integer linear algebra.

mod diophantine;
mod hnf;
mod lattice;
mod matrix;
mod rational;
mod scalar;
mod snf;
mod subspace;

pub use diophantine::{member_subspace_plus_lattice, solve_diophantine, Diophantine};
pub use hnf::hnf;
pub use lattice::{extend_to_zbasis, integer_kernel, saturate, IntegerLattice};
pub use matrix::Matrix;
pub use rational::{determinant, inverse, kernel_basis, rank, rref, solve, unimodular_inverse};
pub use scalar::*;
pub use snf::{invariant_factors, snf};
pub use subspace::{kernel_q, QSubspace};
