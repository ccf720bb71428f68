//! Named example lists.

use crate::ingredients::{c_from_pairs, IngredientList};
use crate::linalg::{int_matrix, rat, rat_vec, zero_vec, Matrix, QMatrix, Rational};
use crate::polytope::DelzantPolytope;
use crate::torus::TorusElement;

fn zero_sigma(d: usize) -> QMatrix {
    Matrix::zeros(d, d)
}

fn identity_p(n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|i| crate::linalg::unit_vec(n, i)).collect()
}

fn zero_tau(d: usize, n: usize) -> Vec<TorusElement> {
    vec![TorusElement::identity(d); n]
}

/// The centered standard 2-simplex.
pub fn centered_triangle() -> DelzantPolytope {
    let v = |a, b| vec![rat(a, 3), rat(b, 3)];
    DelzantPolytope::from_vertices(2, &[v(-1, -1), v(2, -1), v(-1, 2)]).expect("triangle")
}

/// Kodaira–Thurston: free `T²`-action on a 4-manifold with `c(ε¹, ε²) = e₁`.
pub fn thurston() -> IngredientList {
    let c = c_from_pairs(2, 2, &[(1, 2, rat_vec(&[1, 0]))]).expect("pairs");
    IngredientList::new(
        2,
        zero_sigma(2),
        Matrix::zeros(2, 0),
        DelzantPolytope::point(),
        identity_p(2),
        c,
        zero_tau(2, 2),
    )
    .expect("thurston list")
}

/// The product `T⁴`: Thurston's data with `c = 0`.
pub fn thurston_c0() -> IngredientList {
    IngredientList::new(
        2,
        zero_sigma(2),
        Matrix::zeros(2, 0),
        DelzantPolytope::point(),
        identity_p(2),
        vec![vec![zero_vec(2); 2]; 2],
        zero_tau(2, 2),
    )
    .expect("torus list")
}

/// Hamiltonian `T²` with the centered simplex (the projective plane).
pub fn delzant_triangle() -> IngredientList {
    IngredientList::new(
        2,
        zero_sigma(2),
        int_matrix(&[&[1, 0], &[0, 1]]),
        centered_triangle(),
        vec![],
        vec![],
        vec![],
    )
    .expect("delzant list")
}

/// `d = 4`, Hamiltonian part spanned by `e₁, e₂` over the centered simplex,
/// and `c(ε¹, ε²) = e₁` taking values in the Hamiltonian algebra.
pub fn benoist_cex() -> IngredientList {
    let c = c_from_pairs(2, 4, &[(1, 2, rat_vec(&[1, 0, 0, 0]))]).expect("pairs");
    IngredientList::new(
        4,
        zero_sigma(4),
        int_matrix(&[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]),
        centered_triangle(),
        identity_p(2),
        c,
        zero_tau(4, 2),
    )
    .expect("benoist list")
}

/// `d = 3`, `σ^t = 0`, `c(ε¹, ε²) = e₃`: violates the cyclic identity.
pub fn cyclic_failure() -> IngredientList {
    let c = c_from_pairs(3, 3, &[(1, 2, rat_vec(&[0, 0, 1]))]).expect("pairs");
    IngredientList::new(
        3,
        zero_sigma(3),
        Matrix::zeros(3, 0),
        DelzantPolytope::point(),
        identity_p(3),
        c,
        zero_tau(3, 3),
    )
    .expect("cyclic failure list")
}

/// `d = 3` with `σ^t` of rank 2, trivial Hamiltonian torus, `d_N = 1`.
pub fn rank_two_sigma() -> IngredientList {
    let sigma = Matrix::from_rows(
        3,
        vec![
            rat_vec(&[0, 1, 0]),
            rat_vec(&[-1, 0, 0]),
            rat_vec(&[0, 0, 0]),
        ],
    );
    IngredientList::new(
        3,
        sigma,
        Matrix::zeros(3, 0),
        DelzantPolytope::point(),
        identity_p(1),
        vec![vec![zero_vec(1)]],
        zero_tau(3, 1),
    )
    .expect("rank two list")
}

/// All named samples with their names.
pub fn all() -> Vec<(&'static str, IngredientList)> {
    vec![
        ("thurston", thurston()),
        ("thurston_c0", thurston_c0()),
        ("delzant", delzant_triangle()),
        ("benoist_cex", benoist_cex()),
        ("rank_two_sigma", rank_two_sigma()),
    ]
}
