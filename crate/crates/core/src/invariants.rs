//! Invariants derived from an ingredient list.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::holonomy::{c0_dim, dim_moduli, equivalent, DimModuli};
use crate::ingredients::{canonicalize, dim_m, IngredientList};
use crate::linalg::{
    format_rational, invariant_factors, inverse, solve_diophantine, to_int_vec, to_qmatrix,
    Diophantine, Int, IntMatrix, IntegerLattice, Matrix, QSubspace, Rational,
};
use crate::polytope::vertex_count;
use crate::torus::{are_complementary, complement, complement_shifted, Subtorus};

/// `χ(M)`: the number of vertices of `Δ` when the action is Hamiltonian, else 0.
pub fn euler_characteristic(list: &IngredientList) -> i64 {
    if is_hamiltonian(list) {
        vertex_count(list.delta()) as i64
    } else {
        0
    }
}

pub fn is_hamiltonian(list: &IngredientList) -> bool {
    list.d_h() == list.torus_dim()
}

/// `𝔱_h`, the largest subalgebra acting in Hamiltonian fashion.
pub fn hamiltonian_subalgebra(list: &IngredientList) -> QSubspace {
    list.t_h().span()
}

type Pair = (Vec<Rational>, Vec<Rational>);

/// Components `(a, b)` of `x` in `[Y | Z]`, with `Y` the canonical basis of the
/// Hamiltonian lattice and `Z` the basis of `t_f`.
fn split_canonical(
    list: &IngredientList,
    t_f: &Subtorus,
) -> Result<impl Fn(&[Rational]) -> Pair> {
    if !are_complementary(list.t_h(), t_f) {
        return Err(Error::NotComplementary);
    }
    let m = to_qmatrix(&list.t_h().basis().hstack(t_f.basis()));
    let inv = inverse(&m).ok_or(Error::NotComplementary)?;
    let dh = list.d_h();
    Ok(move |x: &[Rational]| {
        let all = inv.mul_vec(x);
        (all[..dh].to_vec(), all[dh..].to_vec())
    })
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

fn integral(v: Vec<Rational>, i: usize, j: usize) -> Result<Vec<Int>> {
    to_int_vec(&v).ok_or(Error::Condition5aViolated { i: i + 1, j: j + 1 })
}

/// `Θ ⊂ (T_f)_ℤ`, generated by `c_f(ε^i, ε^j)` in `t_f`-coordinates.
pub fn theta_lattice(list: &IngredientList, t_f: &Subtorus) -> Result<IntegerLattice> {
    list.frame()?;
    let split = split_canonical(list, t_f)?;
    let gens = pairs(list.d_n())
        .into_iter()
        .map(|(i, j)| integral(split(list.c_t(i, j)).1, i, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntegerLattice::from_vectors(t_f.dim(), gens))
}

pub fn theta_rank(list: &IngredientList) -> Result<usize> {
    Ok(theta_lattice(list, &complement(list.t_h())?)?.rank())
}

/// `H₁(M, ℤ) ≅ ℤ^free_rank ⊕ ⊕ ℤ/t_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstHomology {
    pub torsion: Vec<Int>,
    pub free_rank: usize,
}

impl fmt::Display for FirstHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `H₁ ≅ ((T_f)_ℤ / Θ) × P` by Smith normal form.
pub fn h1(list: &IngredientList, t_f: &Subtorus) -> Result<FirstHomology> {
    let theta = theta_lattice(list, t_f)?;
    let factors = if theta.rank() == 0 {
        vec![]
    } else {
        invariant_factors(theta.basis())
    };
    Ok(FirstHomology {
        torsion: factors.iter().filter(|x| !x.is_one()).cloned().collect(),
        free_rank: t_f.dim() - theta.rank() + list.d_n(),
    })
}

/// `b₁ = dim M − 2 dim 𝔱_h − rank Θ`.
pub fn betti1(list: &IngredientList) -> Result<i64> {
    Ok(dim_m(list)? as i64 - 2 * list.d_h() as i64 - theta_rank(list)? as i64)
}

/// Whether every `c(ε^i, ε^j)` lies in the Hamiltonian lattice.
pub fn pi1_abelian(list: &IngredientList) -> Result<bool> {
    list.frame()?;
    for (i, j) in pairs(list.d_n()) {
        match to_int_vec(list.c_t(i, j)) {
            Some(v) if list.t_h().lattice().contains(&v) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Matrices of `c_h^j` on the `P`-basis, `c_h = Σ_j c_h^j Y_j` with `Y` the
/// canonical Hamiltonian basis and the splitting given by `t_f`.
pub fn chern_forms(list: &IngredientList, t_f: &Subtorus) -> Result<Vec<IntMatrix>> {
    list.frame()?;
    let split = split_canonical(list, t_f)?;
    let n = list.d_n();
    let mut forms = vec![Matrix::zeros(n, n); list.d_h()];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let a = integral(split(list.c_t(i, j)).0, i.min(j), i.max(j))?;
            for (k, x) in a.into_iter().enumerate() {
                forms[k][(i, j)] = x;
            }
        }
    }
    Ok(forms)
}

/// Existence of a complement `T_f` with `c(N × N) ⊂ 𝔱_f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Splitting {
    /// `t_f` has basis `Z_j + Σ_i shift[i][j] Y_i`.
    Feasible { t_f: Subtorus, shift: IntMatrix },
    /// No integral shift matches the `Y_i`-component of `c(ε^i, ε^j)`
    /// (1-based pair and component).
    Infeasible {
        pair: (usize, usize),
        component: usize,
        a: Int,
        b: Vec<Int>,
    },
}

impl Splitting {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Splitting::Feasible { .. })
    }
}

/// Solves `a_i^{ll'} = Σ_j b_j^{ll'} m_ij` for an integral shift `m`.
pub fn splitting(list: &IngredientList) -> Result<Splitting> {
    list.frame()?;
    let t_f = complement(list.t_h())?;
    let split = split_canonical(list, &t_f)?;
    log::debug!(
        "splitting system over {} curvature pairs",
        list.d_n() * list.d_n().saturating_sub(1) / 2
    );
    let dh = list.d_h();
    let df = t_f.dim();
    let ps = pairs(list.d_n());
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut data = Vec::new();
    for &(l, m) in &ps {
        let (a, b) = split(list.c_t(l, m));
        let a = integral(a, l, m)?;
        let b = integral(b, l, m)?;
        for i in 0..dh {
            let mut row = vec![Int::zero(); dh * df];
            for j in 0..df {
                row[i * df + j] = b[j].clone();
            }
            rows.push(row);
            rhs.push(a[i].clone());
            data.push(((l + 1, m + 1), i + 1, a[i].clone(), b.clone()));
        }
    }
    let shift = if rows.is_empty() {
        vec![Int::zero(); dh * df]
    } else {
        match solve_diophantine(&Matrix::from_rows(dh * df, rows), &rhs) {
            Diophantine::Solved { particular, .. } => particular,
            Diophantine::Infeasible { row } => {
                let (pair, component, a, b) = data[row].clone();
                return Ok(Splitting::Infeasible {
                    pair,
                    component,
                    a,
                    b,
                });
            }
        }
    };
    let shift = Matrix::from_rows(
        df,
        (0..dh)
            .map(|i| shift[i * df..(i + 1) * df].to_vec())
            .collect(),
    );
    let shift = if dh == 0 { Matrix::zeros(0, df) } else { shift };
    Ok(Splitting::Feasible {
        t_f: complement_shifted(list.t_h(), &shift)?,
        shift,
    })
}

/// `dim c⁰`, the dimension of the image of the automorphism algebra.
pub fn aut_image_dim(list: &IngredientList) -> Result<i64> {
    c0_dim(list)
}

/// Whether two lists describe the same manifold: equal canonical components
/// and equivalent holonomy.
pub fn lists_equal(a: &IngredientList, b: &IngredientList) -> Result<bool> {
    if a.torus_dim() != b.torus_dim() {
        return Ok(false);
    }
    let ca = canonicalize(a)?;
    let cb = canonicalize(b)?;
    let same = ca.sigma_t() == cb.sigma_t()
        && ca.t_h_basis() == cb.t_h_basis()
        && ca.delta() == cb.delta()
        && ca.p_basis() == cb.p_basis()
        && (0..ca.d_n()).all(|i| (0..ca.d_n()).all(|j| ca.c_l(i, j) == cb.c_l(i, j)));
    if !same {
        return Ok(false);
    }
    equivalent(&ca, ca.tau(), cb.tau())
}

/// All invariants of one list for a chosen complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub dim_m: usize,
    pub d_h: usize,
    pub d_n: usize,
    pub euler: i64,
    pub is_hamiltonian: bool,
    pub pi1_abelian: bool,
    pub h1: FirstHomology,
    pub betti1: i64,
    pub theta_rank: usize,
    pub chern_forms: Vec<IntMatrix>,
    pub dim_moduli: DimModuli,
    pub splitting: Splitting,
    pub aut_image_dim: i64,
    pub complement: IntMatrix,
}

/// Computes every invariant; `t_f` defaults to the canonical complement.
pub fn report(list: &IngredientList, t_f: Option<&Subtorus>) -> Result<InvariantReport> {
    let t_f = match t_f {
        Some(t) => t.clone(),
        None => complement(list.t_h())?,
    };
    log::debug!("report with t_f basis {:?}", t_f.basis().cols_vec());
    let rank = theta_lattice(list, &t_f)?.rank();
    let default_rank = theta_rank(list)?;
    if rank != default_rank {
        log::error!("rank of theta depends on the complement: {rank} vs {default_rank}");
    }
    Ok(InvariantReport {
        dim_m: dim_m(list)?,
        d_h: list.d_h(),
        d_n: list.d_n(),
        euler: euler_characteristic(list),
        is_hamiltonian: is_hamiltonian(list),
        pi1_abelian: pi1_abelian(list)?,
        h1: h1(list, &t_f)?,
        betti1: betti1(list)?,
        theta_rank: rank,
        chern_forms: chern_forms(list, &t_f)?,
        dim_moduli: dim_moduli(list)?,
        splitting: splitting(list)?,
        aut_image_dim: aut_image_dim(list)?,
        complement: t_f.basis().clone(),
    })
}

fn int_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    m.rows_vec()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn int_cols(m: &IntMatrix) -> Vec<Vec<String>> {
    m.cols_vec()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn fmt_int_vec(v: &[Int]) -> String {
    format!(
        "({})",
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )
}

impl InvariantReport {
    pub fn to_json(&self) -> serde_json::Value {
        let splitting = match &self.splitting {
            Splitting::Feasible { t_f, shift } => json!({
                "feasible": true,
                "t_f_lattice": int_cols(t_f.basis()),
                "shift": int_rows(shift),
            }),
            Splitting::Infeasible {
                pair,
                component,
                a,
                b,
            } => json!({
                "feasible": false,
                "pair": [pair.0, pair.1],
                "component": component,
                "a": a.to_string(),
                "b": b.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }),
        };
        json!({
            "dim_m": self.dim_m,
            "dim_t_h": self.d_h,
            "d_n": self.d_n,
            "euler": self.euler,
            "is_hamiltonian": self.is_hamiltonian,
            "pi1_abelian": self.pi1_abelian,
            "h1": {
                "free_rank": self.h1.free_rank,
                "torsion": self.h1.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
            },
            "betti1": self.betti1,
            "theta_rank": self.theta_rank,
            "chern_forms": self.chern_forms.iter().map(int_rows).collect::<Vec<_>>(),
            "dim_moduli": {
                "direct": self.dim_moduli.direct,
                "formula": self.dim_moduli.formula,
                "note": self.dim_moduli.note,
            },
            "splitting": splitting,
            "aut_image_dim": self.aut_image_dim,
            "t_f_lattice": int_cols(&self.complement),
        })
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim_m: {}", self.dim_m)?;
        writeln!(f, "dim t_h: {}", self.d_h)?;
        writeln!(f, "d_N: {}", self.d_n)?;
        writeln!(f, "euler: {}", self.euler)?;
        writeln!(f, "is_hamiltonian: {}", self.is_hamiltonian)?;
        writeln!(f, "pi1_abelian: {}", self.pi1_abelian)?;
        writeln!(f, "h1: {}", self.h1)?;
        writeln!(f, "betti1: {}", self.betti1)?;
        writeln!(f, "theta_rank: {}", self.theta_rank)?;
        let cols: Vec<String> = self
            .complement
            .cols_vec()
            .iter()
            .map(|c| fmt_int_vec(c))
            .collect();
        writeln!(f, "t_f basis: [{}]", cols.join(", "))?;
        for (k, m) in self.chern_forms.iter().enumerate() {
            let rows: Vec<String> = m.rows_vec().iter().map(|r| fmt_int_vec(r)).collect();
            writeln!(f, "chern_form {}: [{}]", k + 1, rows.join(", "))?;
        }
        match self.dim_moduli.formula {
            Some(v) => writeln!(f, "dim_moduli: {} (formula {})", self.dim_moduli.direct, v)?,
            None => writeln!(
                f,
                "dim_moduli: {} (formula not applied)",
                self.dim_moduli.direct
            )?,
        }
        match &self.splitting {
            Splitting::Feasible { t_f, .. } => {
                let cols: Vec<String> = t_f.basis().cols_vec().iter().map(|c| fmt_int_vec(c)).collect();
                writeln!(f, "splitting: feasible, t_f basis [{}]", cols.join(", "))?;
            }
            Splitting::Infeasible { pair, component, a, b } => writeln!(
                f,
                "splitting: infeasible at c({},{}), component {}: {} = {}·m has no integral solution",
                pair.0,
                pair.1,
                component,
                a,
                fmt_int_vec(b)
            )?,
        }
        writeln!(f, "aut_image_dim: {}", self.aut_image_dim)
    }
}

/// Formats a rational vector for reports.
pub fn fmt_rational_vec(v: &[Rational]) -> String {
    format!(
        "({})",
        v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
    )
}

#[cfg(test)]
mod tests;
