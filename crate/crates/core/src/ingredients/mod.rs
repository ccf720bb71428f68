//! Ingredient lists: the complete invariants of a symplectic torus action with
//! coisotropic principal orbits.

pub(crate) mod format;
mod frame;

use std::fmt;

use num_traits::{One, Zero};

pub use format::{parse, serialize, to_json_value};
pub use frame::{check_complement, Frame};

use crate::error::{Error, Result};
use crate::holonomy::{hom_c_violation, tau_of, HolonomyMap};
use crate::linalg::{
    denominator_lcm, format_rational, hnf, is_integral, rank, rat_int, to_qmatrix,
    unimodular_inverse, Int, IntMatrix, IntegerLattice, Matrix, QMatrix, Rational,
};
use crate::polytope::{centroid, is_delzant, DelzantPolytope};
use crate::torus::{Subtorus, TorusElement};

/// The sextuple `(σ^t, T_h, Δ, P, c, τ)` in fixed coordinates.
///
/// `Δ` is written in coordinates dual to the stored basis of the Hamiltonian
/// lattice; `P` is given by `d_N` vectors in `N`-coordinates; `c` holds
/// `c(ε^i, ε^j)` in `𝔩`-coordinates (see [`Frame`]); `τ` holds `τ_{ε^l}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IngredientList {
    torus_dim: usize,
    sigma_t: QMatrix,
    t_h: Subtorus,
    t_h_basis: IntMatrix,
    delta: DelzantPolytope,
    p_basis: Vec<Vec<Rational>>,
    c_values: Vec<Vec<Vec<Rational>>>,
    tau: HolonomyMap,
    frame: std::result::Result<Frame, Error>,
    c_t: Vec<Vec<Vec<Rational>>>,
}

impl IngredientList {
    /// Assembles a list after shape checks. Conditions of the definition are
    /// left to [`validate`]; a non-antisymmetric `σ^t` or a Hamiltonian lattice
    /// outside `ker σ^t` is recorded and surfaces there.
    pub fn new(
        torus_dim: usize,
        sigma_t: QMatrix,
        t_h_basis: IntMatrix,
        delta: DelzantPolytope,
        p_basis: Vec<Vec<Rational>>,
        c_values: Vec<Vec<Vec<Rational>>>,
        tau_values: Vec<TorusElement>,
    ) -> Result<Self> {
        let d = torus_dim;
        let shape = |msg: &str| Err(Error::ShapeMismatch(msg.to_string()));
        if sigma_t.shape() != (d, d) {
            return shape("sigma_t must be d x d");
        }
        if t_h_basis.nrows() != d {
            return shape("t_h_lattice vectors must have length d");
        }
        let lattice = IntegerLattice::from_generators(&t_h_basis);
        if lattice.rank() != t_h_basis.ncols() {
            return shape("t_h_lattice vectors are linearly dependent");
        }
        let t_h = Subtorus::new(lattice)?;
        if delta.dim() != t_h.dim() {
            return shape("delta dimension differs from dim t_h");
        }
        let n = p_basis.len();
        if c_values.len() != n || c_values.iter().any(|row| row.len() != n) {
            return shape("c must be indexed by pairs of P-basis vectors");
        }
        if tau_values.len() != n || tau_values.iter().any(|t| t.dim() != d) {
            return shape("tau must hold one torus element per P-basis vector");
        }
        for i in 0..n {
            for j in 0..n {
                let neg: Vec<Rational> = c_values[j][i].iter().map(|x| -x).collect();
                if c_values[i][j] != neg {
                    return Err(Error::Schema(format!(
                        "c is not antisymmetric at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let frame = Frame::new(&sigma_t, &t_h, &t_h_basis);
        let mut c_t = Vec::new();
        if let Ok(f) = &frame {
            if n != f.d_n() || p_basis.iter().any(|p| p.len() != n) {
                return Err(Error::ShapeMismatch(format!(
                    "P needs {} basis vectors of length {} (dim ker sigma_t - dim t_h)",
                    f.d_n(),
                    f.d_n()
                )));
            }
            if c_values.iter().flatten().any(|v| v.len() != f.dim_l()) {
                return Err(Error::ShapeMismatch(format!(
                    "c values need {} l-coordinates",
                    f.dim_l()
                )));
            }
            c_t = c_values
                .iter()
                .map(|row| row.iter().map(|v| f.l_to_t(v)).collect())
                .collect();
        }
        Ok(IngredientList {
            torus_dim,
            sigma_t,
            t_h,
            t_h_basis,
            delta,
            p_basis,
            c_values,
            tau: HolonomyMap::new(tau_values),
            frame,
            c_t,
        })
    }

    pub fn torus_dim(&self) -> usize {
        self.torus_dim
    }

    pub fn sigma_t(&self) -> &QMatrix {
        &self.sigma_t
    }

    pub fn t_h(&self) -> &Subtorus {
        &self.t_h
    }

    /// Basis of the Hamiltonian lattice in which `Δ` is written.
    pub fn t_h_basis(&self) -> &IntMatrix {
        &self.t_h_basis
    }

    pub fn delta(&self) -> &DelzantPolytope {
        &self.delta
    }

    pub fn p_basis(&self) -> &[Vec<Rational>] {
        &self.p_basis
    }

    /// `c(ε^i, ε^j)` in `𝔩`-coordinates (0-based indices).
    pub fn c_l(&self, i: usize, j: usize) -> &[Rational] {
        &self.c_values[i][j]
    }

    /// `c(ε^i, ε^j)` in `𝔱`-coordinates. Requires a valid frame.
    pub fn c_t(&self, i: usize, j: usize) -> &[Rational] {
        &self.c_t[i][j]
    }

    pub fn tau(&self) -> &HolonomyMap {
        &self.tau
    }

    pub fn frame(&self) -> Result<&Frame> {
        self.frame.as_ref().map_err(Clone::clone)
    }

    pub fn d_h(&self) -> usize {
        self.t_h.dim()
    }

    pub fn d_n(&self) -> usize {
        self.p_basis.len()
    }

    /// Same list with a different holonomy representative.
    pub fn with_tau(&self, tau: HolonomyMap) -> Result<Self> {
        if tau.values().len() != self.d_n()
            || tau.values().iter().any(|t| t.dim() != self.torus_dim)
        {
            return Err(Error::FrameMismatch);
        }
        let mut out = self.clone();
        out.tau = tau;
        Ok(out)
    }

    /// `c(ζ, ζ')` in `𝔱`-coordinates for `ζ, ζ'` in `P`-basis coordinates.
    pub fn c_eval(&self, zeta: &[Rational], zeta2: &[Rational]) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.torus_dim];
        for (l, a) in zeta.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (m, b) in zeta2.iter().enumerate() {
                if b.is_zero() || l == m {
                    continue;
                }
                let k = a * b;
                for (x, y) in acc.iter_mut().zip(&self.c_t[l][m]) {
                    *x += &k * y;
                }
            }
        }
        acc
    }

    /// `b(ζ, ζ') = Σ_{l<l'} ζ_l ζ'_{l'} c^{ll'}` in `𝔱`-coordinates.
    pub fn b_eval(&self, zeta: &[Rational], zeta2: &[Rational]) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.torus_dim];
        for (l, a) in zeta.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (m, b) in zeta2.iter().enumerate().skip(l + 1) {
                if b.is_zero() {
                    continue;
                }
                let k = a * b;
                for (x, y) in acc.iter_mut().zip(&self.c_t[l][m]) {
                    *x += &k * y;
                }
            }
        }
        acc
    }

    /// Matrix whose columns are the `P`-basis vectors in `N`-coordinates.
    pub fn p_matrix(&self) -> QMatrix {
        Matrix::from_cols(self.d_n(), self.p_basis.clone())
    }
}

/// Dimension of the manifold: `d + dim ker σ^t`.
pub fn dim_m(list: &IngredientList) -> Result<usize> {
    let f = list.frame()?;
    Ok(list.torus_dim() + f.dim_l())
}

/// Outcome of one condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    NotEvaluated(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(why) => write!(f, "FAIL ({why})"),
            Verdict::NotEvaluated(why) => write!(f, "not evaluated ({why})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub antisymmetry: Verdict,
    pub containment: Verdict,
    pub delzant: Verdict,
    pub rank: Verdict,
    pub integrality: Verdict,
    /// 1-based `(i, j)` with `c(ε^i, ε^j) ∉ ℤ^d`.
    pub integrality_witness: Option<(usize, usize)>,
    pub cyclic: Verdict,
    /// 1-based triple where the cyclic sum is nonzero.
    pub cyclic_witness: Option<(usize, usize, usize)>,
    pub hom_c: Verdict,
    /// Words `(ζ, ζ')` in `P`-coordinates violating the composition law.
    pub hom_c_witness: Option<(Vec<Int>, Vec<Int>)>,
}

impl ValidationReport {
    pub fn items(&self) -> [(&'static str, &Verdict); 7] {
        [
            ("1 antisymmetric sigma_t", &self.antisymmetry),
            ("2 t_h in ker sigma_t", &self.containment),
            ("3 delzant, centered", &self.delzant),
            ("4 P of rank d_N", &self.rank),
            ("5a c(P,P) integral", &self.integrality),
            ("5b cyclic identity", &self.cyclic),
            ("6 tau in Hom_c", &self.hom_c),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.items().iter().all(|(_, v)| v.is_pass())
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, v) in self.items() {
            writeln!(f, "{name}: {v}")?;
        }
        Ok(())
    }
}

fn fmt_vec(v: &[Rational]) -> String {
    format!(
        "({})",
        v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
    )
}

/// Evaluates every condition of the definition exactly.
pub fn validate(list: &IngredientList) -> Result<ValidationReport> {
    let frame = match list.frame() {
        Err(Error::IrrationalKernel) => return Err(Error::IrrationalKernel),
        other => other,
    };
    let skipped = || Verdict::NotEvaluated("no frame: t_h not in ker sigma_t".into());
    let mut report = ValidationReport {
        antisymmetry: Verdict::Pass,
        containment: Verdict::Pass,
        delzant: Verdict::Pass,
        rank: skipped(),
        integrality: skipped(),
        integrality_witness: None,
        cyclic: skipped(),
        cyclic_witness: None,
        hom_c: skipped(),
        hom_c_witness: None,
    };

    let cert = is_delzant(list.delta());
    let c = centroid(list.delta())?;
    report.delzant = if !cert.accepted {
        let v = cert.offending_vertex().expect("rejection has a witness");
        Verdict::Fail(format!(
            "vertex {} has normal determinant {}",
            fmt_vec(&v.vertex),
            v.normal_determinant
                .as_ref()
                .map_or("undefined (not simple)".to_string(), ToString::to_string)
        ))
    } else if !c.iter().all(Zero::is_zero) {
        Verdict::Fail(format!("center of mass is {}", fmt_vec(&c)))
    } else {
        Verdict::Pass
    };

    let f = match frame {
        Ok(f) => f,
        Err(e) => {
            report.containment = Verdict::Fail(e.to_string());
            return Ok(report);
        }
    };
    let n = list.d_n();

    report.rank = if n == 0 || rank(&list.p_matrix()) == n {
        Verdict::Pass
    } else {
        Verdict::Fail(format!(
            "P-basis has rank {} < {}",
            rank(&list.p_matrix()),
            n
        ))
    };

    report.integrality = Verdict::Pass;
    'outer: for i in 0..n {
        for j in i + 1..n {
            if !is_integral(list.c_t(i, j)) {
                report.integrality = Verdict::Fail(format!(
                    "c({},{}) = {} is not integral",
                    i + 1,
                    j + 1,
                    fmt_vec(list.c_t(i, j))
                ));
                report.integrality_witness = Some((i + 1, j + 1));
                break 'outer;
            }
        }
    }

    report.cyclic = Verdict::Pass;
    'cyc: for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let p = list.p_basis();
                let s = f.pair_n(&p[i], list.c_l(j, k))
                    + f.pair_n(&p[j], list.c_l(k, i))
                    + f.pair_n(&p[k], list.c_l(i, j));
                if !s.is_zero() {
                    report.cyclic = Verdict::Fail(format!(
                        "cyclic sum at ({},{},{}) is {}",
                        i + 1,
                        j + 1,
                        k + 1,
                        format_rational(&s)
                    ));
                    report.cyclic_witness = Some((i + 1, j + 1, k + 1));
                    break 'cyc;
                }
            }
        }
    }

    match hom_c_violation(list, list.tau()) {
        None => report.hom_c = Verdict::Pass,
        Some((a, b)) => {
            report.hom_c = Verdict::Fail(format!("composition law fails at words {a:?}, {b:?}"));
            report.hom_c_witness = Some((a, b));
        }
    }
    Ok(report)
}

/// Canonical representative: Hamiltonian basis and `P`-basis in Hermite
/// normal form, with `Δ`, `c` and `τ` transformed to match.
pub fn canonicalize(list: &IngredientList) -> Result<IngredientList> {
    list.frame()?;
    let n = list.d_n();
    let list = if n == 0 {
        list.clone()
    } else {
        let l = rat_int(&denominator_lcm(list.p_basis().iter().flatten()));
        let scaled = list.p_matrix().map(|x| (x * &l).to_integer());
        let (_, v) = hnf(&scaled);
        rebase_p(list, &v)?
    };

    // Hamiltonian basis Y' = Y·U; Δ coordinates transform by U^T and the
    // Y-part of each c value by U^{-1}.
    let dh = list.d_h();
    let (y_new, u) = hnf(list.t_h_basis());
    let u_inv = to_qmatrix(&unimodular_inverse(&u).expect("hnf transform is unimodular"));
    let delta = list.delta().map_linear(&to_qmatrix(&u.transpose()))?;
    let c_new = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = list.c_l(i, j);
                    let mut out = if dh == 0 {
                        vec![]
                    } else {
                        u_inv.mul_vec(&v[..dh])
                    };
                    out.extend_from_slice(&v[dh..]);
                    out
                })
                .collect()
        })
        .collect();
    IngredientList::new(
        list.torus_dim(),
        list.sigma_t().clone(),
        y_new,
        delta,
        list.p_basis().to_vec(),
        c_new,
        list.tau().values().to_vec(),
    )
}

/// Canonical list with `c` given by `(i, j, value)` triples, `i < j`, 1-based.
pub fn c_from_pairs(
    n: usize,
    dim_l: usize,
    pairs: &[(usize, usize, Vec<Rational>)],
) -> Result<Vec<Vec<Vec<Rational>>>> {
    let mut c = vec![vec![vec![Rational::zero(); dim_l]; n]; n];
    let mut seen = std::collections::BTreeSet::new();
    for (i, j, v) in pairs {
        if !(1 <= *i && i < j && *j <= n) {
            return Err(Error::Schema(format!(
                "c entry ({i},{j}) needs 1 <= i < j <= {n}"
            )));
        }
        if !seen.insert((*i, *j)) {
            return Err(Error::Schema(format!("duplicate c entry ({i},{j})")));
        }
        if v.len() != dim_l {
            return Err(Error::Schema(format!(
                "c({i},{j}) needs {dim_l} coordinates"
            )));
        }
        c[i - 1][j - 1] = v.clone();
        c[j - 1][i - 1] = v.iter().map(|x| -x).collect();
    }
    Ok(c)
}

/// The same list written in the `P`-basis `ε'^b = Σ_a v[a][b] ε^a`.
pub fn rebase_p(list: &IngredientList, v: &IntMatrix) -> Result<IngredientList> {
    let n = list.d_n();
    let det = crate::linalg::determinant(&to_qmatrix(v));
    if v.shape() != (n, n) || !(det.is_one() || (-det).is_one()) {
        return Err(Error::ShapeMismatch(
            "P change of basis must be unimodular".into(),
        ));
    }
    let vq = to_qmatrix(v);
    let e_new = &list.p_matrix() * &vq;
    let dim_l = list.frame()?.dim_l();
    let mut c_new = vec![vec![vec![Rational::zero(); dim_l]; n]; n];
    for b in 0..n {
        for c in 0..n {
            let mut acc = vec![Rational::zero(); dim_l];
            for a in 0..n {
                for a2 in 0..n {
                    let k = &vq[(a, b)] * &vq[(a2, c)];
                    for (x, y) in acc.iter_mut().zip(list.c_l(a, a2)) {
                        *x += &k * y;
                    }
                }
            }
            c_new[b][c] = acc;
        }
    }
    let tau_new = (0..n)
        .map(|b| tau_of(list, list.tau(), &v.col(b)))
        .collect();
    IngredientList::new(
        list.torus_dim(),
        list.sigma_t().clone(),
        list.t_h_basis().clone(),
        list.delta().clone(),
        e_new.cols_vec(),
        c_new,
        tau_new,
    )
}
