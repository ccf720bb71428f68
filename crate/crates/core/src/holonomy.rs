//! Holonomy maps `P → T` satisfying the twisted composition law, the space
//! `𝒜 = c(·,N) + Sym|_P`, and equivalence modulo `exp 𝒜`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ingredients::IngredientList;
use crate::linalg::{
    member_subspace_plus_lattice, rank, rat, to_rational_vec, vec_scale, Int, IntegerLattice,
    Matrix, QSubspace, Rational,
};
use crate::torus::TorusElement;

/// Values `τ_{ε^l}` on a basis of `P`.
///
/// Values at other words are normally implied by the expansion in
/// [`tau_of`]. A map may additionally carry explicitly recorded values at
/// chosen words (for instance, measured holonomies), which
/// [`verify_hom_c`] checks against the composition law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomyMap {
    values: Vec<TorusElement>,
    recorded: BTreeMap<Vec<Int>, TorusElement>,
}

impl HolonomyMap {
    pub fn new(values: Vec<TorusElement>) -> Self {
        HolonomyMap {
            values,
            recorded: BTreeMap::new(),
        }
    }

    pub fn values(&self) -> &[TorusElement] {
        &self.values
    }

    /// Records an explicit value at the word `zeta` (in `P`-coordinates).
    pub fn with_recorded(mut self, zeta: Vec<Int>, value: TorusElement) -> Self {
        self.recorded.insert(zeta, value);
        self
    }

    pub fn recorded(&self) -> &BTreeMap<Vec<Int>, TorusElement> {
        &self.recorded
    }

    /// Multiplies by the homomorphism `ε^l ↦ exp(α_l)`; `alpha` is stacked
    /// `l`-major, `d` entries per basis vector.
    pub fn twist(&self, alpha: &[Rational]) -> HolonomyMap {
        let d = self.values.first().map_or(0, TorusElement::dim);
        HolonomyMap::new(
            self.values
                .iter()
                .enumerate()
                .map(|(l, t)| t.add_lie(&alpha[l * d..(l + 1) * d]))
                .collect(),
        )
    }
}

/// `τ_ζ = exp(Σ_{l<l'} ζ_l ζ_{l'} c^{ll'}/2) · Π τ_{ε^l}^{ζ_l}`.
pub fn tau_of(list: &IngredientList, tau: &HolonomyMap, zeta: &[Int]) -> TorusElement {
    let z = to_rational_vec(zeta);
    let half_b = vec_scale(&list.b_eval(&z, &z), &rat(1, 2));
    let mut t = TorusElement::new(half_b);
    for (k, v) in zeta.iter().zip(tau.values()) {
        if !k.is_zero() {
            t = t.add(&v.pow(k));
        }
    }
    t
}

fn value_at(list: &IngredientList, tau: &HolonomyMap, zeta: &[Int]) -> TorusElement {
    tau.recorded
        .get(zeta)
        .cloned()
        .unwrap_or_else(|| tau_of(list, tau, zeta))
}

/// Words used to test the composition law: `0`, `±ε^a`, `ε^a ± ε^b`, and
/// every recorded word.
fn test_words(n: usize, tau: &HolonomyMap) -> Vec<Vec<Int>> {
    let unit = |a: usize, s: i64| {
        let mut v = vec![Int::zero(); n];
        v[a] = Int::from(s);
        v
    };
    let mut words = vec![vec![Int::zero(); n]];
    for a in 0..n {
        words.push(unit(a, 1));
        words.push(unit(a, -1));
        for b in a + 1..n {
            for s in [1, -1] {
                let mut w = unit(a, 1);
                w[b] = Int::from(s);
                words.push(w);
            }
        }
    }
    for w in tau.recorded.keys() {
        if !words.contains(w) {
            words.push(w.clone());
        }
    }
    words
}

/// First pair `(ζ, ζ')` with `τ_{ζ'} τ_ζ ≠ τ_{ζ+ζ'} exp(c(ζ',ζ)/2)`.
pub fn hom_c_violation(list: &IngredientList, tau: &HolonomyMap) -> Option<(Vec<Int>, Vec<Int>)> {
    let n = list.d_n();
    if list.frame().is_err() || tau.values.len() != n {
        return Some((vec![], vec![]));
    }
    let words = test_words(n, tau);
    for z in &words {
        for z2 in &words {
            let sum: Vec<Int> = z.iter().zip(z2).map(|(a, b)| a + b).collect();
            let lhs = value_at(list, tau, z2).add(&value_at(list, tau, z));
            let c = list.c_eval(&to_rational_vec(z2), &to_rational_vec(z));
            let rhs = value_at(list, tau, &sum).add_lie(&vec_scale(&c, &rat(1, 2)));
            if lhs != rhs {
                return Some((z.clone(), z2.clone()));
            }
        }
    }
    None
}

pub fn verify_hom_c(list: &IngredientList, tau: &HolonomyMap) -> bool {
    hom_c_violation(list, tau).is_none()
}

/// The element of `Hom_c(P, T)` with the given values on the `P`-basis.
///
/// Under integrality of `c` on `P`, every choice of basis values extends
/// through [`tau_of`] to a map satisfying the composition law.
pub fn make_hom_c(list: &IngredientList, free_choices: Vec<TorusElement>) -> Result<HolonomyMap> {
    list.frame()?;
    let n = list.d_n();
    if free_choices.len() != n || free_choices.iter().any(|t| t.dim() != list.torus_dim()) {
        return Err(Error::FrameMismatch);
    }
    for i in 0..n {
        for j in i + 1..n {
            if !list.c_t(i, j).iter().all(|x| x.is_integer()) {
                return Err(Error::Condition5aViolated { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(HolonomyMap::new(free_choices))
}

/// `𝒜 ⊂ Hom(P, 𝔱) ≅ 𝔱^{d_N}`, stacked `l`-major.
pub fn space_a_basis(list: &IngredientList) -> Result<QSubspace> {
    let f = list.frame()?;
    let d = list.torus_dim();
    let n = list.d_n();
    let mut gens: Vec<Vec<Rational>> = Vec::new();
    // c(·, ζ') over ζ' in a basis of N; the P-basis is one.
    for j in 0..n {
        gens.push((0..n).flat_map(|l| list.c_t(l, j).to_vec()).collect());
    }
    // Symmetric maps 𝔩* → 𝔩: α(ξ) = [Y|W]·S·ξ with S = E_ab + E_ba.
    let dl = f.dim_l();
    let dh = f.d_h();
    for a in 0..dl {
        for b in a..dl {
            let g: Vec<Rational> = (0..n)
                .flat_map(|l| {
                    // ε^l as a form on 𝔩 in the dual frame: zero on Y, p_l on W.
                    let mut xi = vec![Rational::zero(); dl];
                    xi[dh..].clone_from_slice(&list.p_basis()[l]);
                    let mut s_xi = vec![Rational::zero(); dl];
                    s_xi[a] += &xi[b];
                    if a != b {
                        s_xi[b] += &xi[a];
                    }
                    f.l_to_t(&s_xi)
                })
                .collect();
            gens.push(g);
        }
    }
    Ok(QSubspace::span(d * n, &gens))
}

/// Whether `tau2 = tau1 · exp(α)` for some `α ∈ 𝒜`, modulo the integral lattice.
pub fn equivalent(list: &IngredientList, tau1: &HolonomyMap, tau2: &HolonomyMap) -> Result<bool> {
    let n = list.d_n();
    let d = list.torus_dim();
    let fits = |t: &HolonomyMap| t.values.len() == n && t.values.iter().all(|x| x.dim() == d);
    if !fits(tau1) || !fits(tau2) {
        return Err(Error::FrameMismatch);
    }
    let diff: Vec<Rational> = tau1
        .values
        .iter()
        .zip(&tau2.values)
        .flat_map(|(a, b)| b.sub(a).coords().to_vec())
        .collect();
    let a = space_a_basis(list)?;
    Ok(member_subspace_plus_lattice(
        &diff,
        &a,
        &IntegerLattice::full(d * n),
    ))
}

/// Dimension of the holonomy moduli space, computed directly and, when the
/// Hamiltonian torus is trivial, by the closed formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimModuli {
    /// `d·d_N − dim 𝒜`.
    pub direct: i64,
    pub formula: Option<i64>,
    pub dim_ker_c: i64,
    pub dim_ker_c_f: i64,
    pub dim_c0: i64,
    pub note: Option<String>,
}

pub fn dim_moduli(list: &IngredientList) -> Result<DimModuli> {
    let f = list.frame()?;
    let d = list.torus_dim() as i64;
    let n = list.d_n();
    let dn = n as i64;
    let a = space_a_basis(list)?;
    let direct = d * dn - a.dim() as i64;

    // ζ ↦ c(ζ, ·) as a matrix with one column per basis vector.
    let kernel_dim = |value: &dyn Fn(usize, usize) -> Vec<Rational>| -> i64 {
        if n == 0 {
            return 0;
        }
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|l| (0..n).flat_map(|j| value(l, j)).collect())
            .collect();
        dn - rank(&Matrix::from_cols(n * list.torus_dim(), cols)) as i64
    };
    let dim_ker_c = kernel_dim(&|l, j| list.c_t(l, j).to_vec());
    let z = f.default_complement().clone();
    let dim_ker_c_f = kernel_dim(&|l, j| {
        let (_, b) = f.split_h_f(list.c_t(l, j), &z).expect("default complement");
        crate::ingredients::Frame::combination(&z, &b)
    });
    let dim_c0 = c0_dim(list)?;

    let (formula, note) = if f.d_h() == 0 {
        let val = dn * (d - dn) + dn * (dn - 3) / 2 + dim_ker_c_f - dim_ker_c + dim_c0;
        (Some(val), None)
    } else {
        let msg = format!(
            "closed formula not applied: dim t_h = {} > 0; it would differ from the direct value by {} (the -d_N*dim t_h term)",
            f.d_h(),
            dn * f.d_h() as i64
        );
        log::info!("{msg}");
        (None, Some(msg))
    };
    Ok(DimModuli {
        direct,
        formula,
        dim_ker_c,
        dim_ker_c_f,
        dim_c0,
        note,
    })
}

/// `dim {ζ ∈ N : ζ(c(ζ', ζ'')) = 0 for all ζ', ζ''}`.
pub fn c0_dim(list: &IngredientList) -> Result<i64> {
    let f = list.frame()?;
    let n = list.d_n();
    let dh = f.d_h();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            rows.push(list.c_l(i, j)[dh..].to_vec());
        }
    }
    if rows.is_empty() {
        return Ok(n as i64);
    }
    Ok(n as i64 - rank(&Matrix::from_rows(n, rows)) as i64)
}
