use num_integer::Integer;
use num_traits::Zero;

use super::hnf::{hnf, hnf_rank};
use super::lattice::IntegerLattice;
use super::matrix::Matrix;
use super::scalar::{denominator_lcm, rat_int, to_int_vec, Int, IntMatrix, Rational};
use super::subspace::QSubspace;

/// Outcome of an integer linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diophantine {
    Solved {
        particular: Vec<Int>,
        homogeneous: IntegerLattice,
    },
    /// `row` is the first equation that cannot be met over ℤ.
    Infeasible { row: usize },
}

impl Diophantine {
    pub fn particular(&self) -> Option<&[Int]> {
        match self {
            Diophantine::Solved { particular, .. } => Some(particular),
            Diophantine::Infeasible { .. } => None,
        }
    }
}

/// Solves `a·x = b` over the integers.
pub fn solve_diophantine(a: &IntMatrix, b: &[Int]) -> Diophantine {
    assert_eq!(a.nrows(), b.len(), "system shape mismatch");
    let n = a.ncols();
    let (h, u) = hnf(a);
    let r = hnf_rank(&h);
    let mut y = vec![Int::zero(); n];
    let mut col = 0;
    for i in 0..a.nrows() {
        let acc: Int = (0..col).fold(Int::zero(), |s, j| s + &h[(i, j)] * &y[j]);
        let rest = &b[i] - acc;
        if col < r && !h[(i, col)].is_zero() {
            let (q, rem) = rest.div_rem(&h[(i, col)]);
            if !rem.is_zero() {
                return Diophantine::Infeasible { row: i };
            }
            y[col] = q;
            col += 1;
        } else if !rest.is_zero() {
            return Diophantine::Infeasible { row: i };
        }
    }
    Diophantine::Solved {
        particular: u.mul_vec(&y),
        homogeneous: IntegerLattice::from_generators(&u.select_cols(r..n)),
    }
}

/// Whether `v ∈ s + lat`, decided exactly.
pub fn member_subspace_plus_lattice(v: &[Rational], s: &QSubspace, lat: &IntegerLattice) -> bool {
    let n = v.len();
    assert_eq!(s.ambient_dim(), n, "subspace dimension mismatch");
    assert_eq!(lat.ambient_dim(), n, "lattice dimension mismatch");
    // Integer rows spanning the annihilator of s; v ∈ s + L iff K·v ∈ K·L.
    let rows: Vec<Vec<Int>> = s
        .annihilator()
        .iter()
        .map(|w| {
            let l = rat_int(&denominator_lcm(w));
            w.iter().map(|x| (x * &l).to_integer()).collect()
        })
        .collect();
    let k = Matrix::from_rows(n, rows);
    let kv: Vec<Rational> = k.map(rat_int).mul_vec(v);
    let Some(target) = to_int_vec(&kv) else {
        return false;
    };
    let kl = &k * lat.basis();
    matches!(solve_diophantine(&kl, &target), Diophantine::Solved { .. })
}
