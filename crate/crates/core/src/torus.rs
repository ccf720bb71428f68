//! Tori with integral lattice `ℤ^d`, subtori, and rational torus elements.

use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg::{
    determinant, extend_to_zbasis, format_rational, frac, member_subspace_plus_lattice, solve,
    to_qmatrix, to_rational_vec, Int, IntMatrix, IntegerLattice, QSubspace, Rational,
};

/// The torus `ℝ^d / ℤ^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Torus {
    pub dim: usize,
}

/// A subtorus, given by its saturated integral lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subtorus {
    lattice: IntegerLattice,
}

impl Subtorus {
    pub fn new(lattice: IntegerLattice) -> Result<Self> {
        if !lattice.is_saturated() {
            return Err(Error::NotSaturated);
        }
        Ok(Subtorus { lattice })
    }

    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<Int>>) -> Result<Self> {
        Self::new(IntegerLattice::from_vectors(ambient_dim, vectors))
    }

    pub fn trivial(ambient_dim: usize) -> Self {
        Subtorus {
            lattice: IntegerLattice::zero(ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subtorus {
            lattice: IntegerLattice::full(ambient_dim),
        }
    }

    pub fn parent(&self) -> Torus {
        Torus {
            dim: self.lattice.ambient_dim(),
        }
    }

    pub fn dim(&self) -> usize {
        self.lattice.rank()
    }

    pub fn lattice(&self) -> &IntegerLattice {
        &self.lattice
    }

    /// Canonical basis of the lattice, as columns.
    pub fn basis(&self) -> &IntMatrix {
        self.lattice.basis()
    }

    /// The Lie algebra as a rational subspace.
    pub fn span(&self) -> QSubspace {
        let vs: Vec<Vec<Rational>> = self
            .lattice
            .basis_vectors()
            .iter()
            .map(|v| to_rational_vec(v))
            .collect();
        QSubspace::span(self.lattice.ambient_dim(), &vs)
    }

    /// Whether `t` lies on this subtorus.
    pub fn contains(&self, t: &TorusElement) -> bool {
        member_subspace_plus_lattice(
            t.coords(),
            &self.span(),
            &IntegerLattice::full(self.lattice.ambient_dim()),
        )
    }
}

/// Deterministic complementary subtorus.
pub fn complement(sub: &Subtorus) -> Result<Subtorus> {
    let d = sub.parent().dim;
    let completion = extend_to_zbasis(sub.lattice())?;
    Ok(Subtorus {
        lattice: IntegerLattice::from_vectors(d, completion.cols_vec()),
    })
}

/// The complement with basis `Z'_j = Z_j + Σ_i shift[i][j] Y_i`, where `Y` is
/// the canonical basis of `sub` and `Z` that of [`complement`].
pub fn complement_shifted(sub: &Subtorus, shift: &IntMatrix) -> Result<Subtorus> {
    let d = sub.parent().dim;
    let r = sub.dim();
    if shift.shape() != (r, d - r) {
        return Err(Error::ShapeMismatch(format!(
            "shift must be {}x{}, got {}x{}",
            r,
            d - r,
            shift.nrows(),
            shift.ncols()
        )));
    }
    let z = complement(sub)?;
    let shifted = if r == 0 {
        z.basis().clone()
    } else {
        let y_shift = sub.basis() * shift;
        let mut m = z.basis().clone();
        for i in 0..d {
            for j in 0..d - r {
                m[(i, j)] = &m[(i, j)] + &y_shift[(i, j)];
            }
        }
        m
    };
    Ok(Subtorus {
        lattice: IntegerLattice::from_generators(&shifted),
    })
}

/// Whether `u` and `v` together span `ℤ^d` with determinant ±1.
pub fn are_complementary(u: &Subtorus, v: &Subtorus) -> bool {
    let d = u.parent().dim;
    if v.parent().dim != d || u.dim() + v.dim() != d {
        return false;
    }
    let m = u.basis().hstack(v.basis());
    determinant(&to_qmatrix(&m)).abs().is_one()
}

/// Splits `t` as `t_u + t_v` with `t_u ∈ u`, `t_v ∈ v`.
pub fn split_element(
    t: &TorusElement,
    u: &Subtorus,
    v: &Subtorus,
) -> Result<(TorusElement, TorusElement)> {
    if !are_complementary(u, v) {
        return Err(Error::NotComplementary);
    }
    let d = t.dim();
    let m = to_qmatrix(&u.basis().hstack(v.basis()));
    let x = solve(&m, t.coords()).expect("unimodular system is solvable");
    let part = |basis: &IntMatrix, coeffs: &[Rational]| {
        let q = to_qmatrix(basis);
        TorusElement::new(q.mul_vec(coeffs))
    };
    let r = u.dim();
    let tu = part(u.basis(), &x[..r]);
    let tv = part(v.basis(), &x[r..d]);
    Ok((tu, tv))
}

/// Element of `ℝ^d/ℤ^d` with rational coordinates in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorusElement {
    coords: Vec<Rational>,
}

impl TorusElement {
    /// `exp` of a rational Lie algebra vector: coordinates reduced mod 1.
    pub fn new(coords: Vec<Rational>) -> Self {
        TorusElement {
            coords: coords.iter().map(frac).collect(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        TorusElement {
            coords: crate::linalg::zero_vec(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Canonical lift in `[0,1)^d`.
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords
            .iter()
            .all(|x| x == &Rational::from_integer(Int::from(0)))
    }

    pub fn add(&self, other: &TorusElement) -> TorusElement {
        TorusElement::new(crate::linalg::vec_add(&self.coords, &other.coords))
    }

    pub fn sub(&self, other: &TorusElement) -> TorusElement {
        TorusElement::new(crate::linalg::vec_sub(&self.coords, &other.coords))
    }

    pub fn neg(&self) -> TorusElement {
        TorusElement::new(crate::linalg::vec_neg(&self.coords))
    }

    pub fn pow(&self, k: &Int) -> TorusElement {
        TorusElement::new(crate::linalg::vec_scale(
            &self.coords,
            &Rational::from_integer(k.clone()),
        ))
    }

    /// Adds `exp(x)` for a Lie algebra vector `x`.
    pub fn add_lie(&self, x: &[Rational]) -> TorusElement {
        TorusElement::new(crate::linalg::vec_add(&self.coords, x))
    }
}

impl fmt::Debug for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int_matrix, int_vec, rat, rat_vec};
    use proptest::prelude::*;

    fn sub(d: usize, vs: &[&[i64]]) -> Subtorus {
        Subtorus::from_vectors(d, vs.iter().map(|v| int_vec(v)).collect()).unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&sub(2, &[&[1, 0]])).unwrap(), sub(2, &[&[0, 1]]));
        assert_eq!(
            complement(&Subtorus::trivial(3)).unwrap(),
            Subtorus::full(3)
        );
        let u = sub(2, &[&[2, 1]]);
        let c = complement(&u).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(are_complementary(&u, &c));
        assert!(Subtorus::from_vectors(2, vec![int_vec(&[2, 0])]).is_err());
    }

    #[test]
    fn shifted_examples() {
        let e1 = sub(2, &[&[1, 0]]);
        let zero = int_matrix(&[&[0]]);
        assert_eq!(
            complement_shifted(&e1, &zero).unwrap(),
            complement(&e1).unwrap()
        );
        assert_eq!(
            complement_shifted(&e1, &int_matrix(&[&[3]])).unwrap(),
            sub(2, &[&[3, 1]])
        );
        assert!(complement_shifted(&e1, &int_matrix(&[&[1, 2]])).is_err());
    }

    #[test]
    fn split_examples() {
        let e1 = sub(2, &[&[1, 0]]);
        let e2 = sub(2, &[&[0, 1]]);
        let t = TorusElement::new(vec![rat(1, 2), rat(1, 3)]);
        let (a, b) = split_element(&t, &e1, &e2).unwrap();
        assert_eq!(a, TorusElement::new(vec![rat(1, 2), rat(0, 1)]));
        assert_eq!(b, TorusElement::new(vec![rat(0, 1), rat(1, 3)]));

        let (a, b) = split_element(&TorusElement::identity(2), &e1, &e2).unwrap();
        assert!(a.is_identity() && b.is_identity());

        let diag = sub(2, &[&[1, 1]]);
        let t = TorusElement::new(vec![rat(1, 2), rat(1, 2)]);
        let (a, b) = split_element(&t, &diag, &e2).unwrap();
        assert_eq!(a, t);
        assert!(b.is_identity());

        assert_eq!(split_element(&t, &e1, &e1), Err(Error::NotComplementary));
    }

    #[test]
    fn element_arithmetic() {
        let t = TorusElement::new(rat_vec(&[3, -2]));
        assert!(t.is_identity());
        let a = TorusElement::new(vec![rat(-1, 3)]);
        assert_eq!(a.coords(), &[rat(2, 3)]);
        assert_eq!(a.pow(&Int::from(3)), TorusElement::identity(1));
        assert!(sub(2, &[&[1, 1]]).contains(&TorusElement::new(vec![rat(1, 5), rat(6, 5)])));
        assert!(!sub(2, &[&[1, 1]]).contains(&TorusElement::new(vec![rat(1, 5), rat(0, 1)])));
    }

    proptest! {
        #[test]
        fn split_recomposes(
            a in -4i64..=4, b in -4i64..=4,
            num in proptest::collection::vec(-20i64..=20, 3),
            den in proptest::collection::vec(1i64..=7, 3),
            s in -5i64..=5,
        ) {
            // u = span(1, a, b) is always saturated; take its shifted complement.
            let u = sub(3, &[&[1, a, b]]);
            let v = complement_shifted(&u, &int_matrix(&[&[s, -s]])).unwrap();
            let t = TorusElement::new((0..3).map(|i| rat(num[i], den[i])).collect());
            let (tu, tv) = split_element(&t, &u, &v).unwrap();
            prop_assert_eq!(tu.add(&tv), t);
            prop_assert!(u.contains(&tu));
            prop_assert!(v.contains(&tv));
        }

        #[test]
        fn shift_parametrization_is_injective(
            s1 in proptest::collection::vec(-3i64..=3, 2),
            s2 in proptest::collection::vec(-3i64..=3, 2),
        ) {
            let u = sub(3, &[&[1, 0, 2]]);
            let m1 = int_matrix(&[&s1]);
            let m2 = int_matrix(&[&s2]);
            let c1 = complement_shifted(&u, &m1).unwrap();
            let c2 = complement_shifted(&u, &m2).unwrap();
            prop_assert!(are_complementary(&u, &c1));
            prop_assert_eq!(c1 == c2, s1 == s2);
        }
    }
}
