//! The two-step nilpotent groups `G = T × N` and `Γ`, and evaluation of the
//! model symplectic forms.
//!
//! Elements of `N` are written in `P`-basis coordinates (rational in general,
//! integral exactly on `P`). Lie algebra vectors of `T` are rational vectors of
//! `ℚ^d`. The `2π` factors of the local chart are normalized to 1.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::holonomy::{tau_of, HolonomyMap};
use crate::ingredients::{Frame, IngredientList};
use crate::linalg::{
    dot, rat, to_int_vec, to_qmatrix, vec_add, vec_neg, vec_scale, vec_sub, Int, QMatrix, Rational,
};
use crate::torus::{are_complementary, split_element, Subtorus, TorusElement};

fn half(v: &[Rational]) -> Vec<Rational> {
    vec_scale(v, &rat(1, 2))
}

fn bilinear(m: &QMatrix, u: &[Rational], v: &[Rational]) -> Rational {
    dot(u, &m.mul_vec(v))
}

/// `ζ` in `P`-basis coordinates as an element of `N` in dual-`W` coordinates.
fn zeta_to_n(list: &IngredientList, zeta: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); list.d_n()];
    for (k, p) in zeta.iter().zip(list.p_basis()) {
        for (x, y) in out.iter_mut().zip(p) {
            *x += k * y;
        }
    }
    out
}

/// `ζ(X_𝔩)` for `ζ` in `P`-coordinates and `X ∈ 𝔱`.
fn pair_zeta(list: &IngredientList, f: &Frame, zeta: &[Rational], x: &[Rational]) -> Rational {
    f.pair_n(&zeta_to_n(list, zeta), &f.project_l(x))
}

fn check_shape(list: &IngredientList, t: usize, zeta: usize) -> Result<()> {
    if t != list.torus_dim() || zeta != list.d_n() {
        return Err(Error::FrameMismatch);
    }
    Ok(())
}

/// Element `(t, ζ)` of `G = T × N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GElement {
    pub t: TorusElement,
    pub zeta: Vec<Rational>,
}

impl GElement {
    pub fn identity(list: &IngredientList) -> Self {
        GElement {
            t: TorusElement::identity(list.torus_dim()),
            zeta: vec![Rational::zero(); list.d_n()],
        }
    }
}

/// `(t, ζ)(t', ζ') = (t + t' − c(ζ, ζ')/2, ζ + ζ')`.
pub fn g_multiply(list: &IngredientList, a: &GElement, b: &GElement) -> Result<GElement> {
    check_shape(list, a.t.dim(), a.zeta.len())?;
    check_shape(list, b.t.dim(), b.zeta.len())?;
    let c = list.c_eval(&a.zeta, &b.zeta);
    Ok(GElement {
        t: a.t.add(&b.t).add_lie(&vec_neg(&half(&c))),
        zeta: vec_add(&a.zeta, &b.zeta),
    })
}

/// `(t, ζ)⁻¹ = (−t, −ζ)`, since `c(ζ, −ζ) = 0`.
pub fn g_inverse(list: &IngredientList, a: &GElement) -> Result<GElement> {
    check_shape(list, a.t.dim(), a.zeta.len())?;
    Ok(GElement {
        t: a.t.neg(),
        zeta: vec_neg(&a.zeta),
    })
}

/// `[(X, ζ), (X', ζ')] = (−c(ζ, ζ'), 0)`; arguments are Lie algebra pairs.
pub fn g_bracket(
    list: &IngredientList,
    x1: &(Vec<Rational>, Vec<Rational>),
    x2: &(Vec<Rational>, Vec<Rational>),
) -> (Vec<Rational>, Vec<Rational>) {
    (
        vec_neg(&list.c_eval(&x1.1, &x2.1)),
        vec![Rational::zero(); list.d_n()],
    )
}

/// Membership in `H = {(t, ζ) : ζ ∈ P, t·τ_ζ ∈ T_h}`.
pub fn h_contains(list: &IngredientList, g: &GElement, tau: &HolonomyMap) -> bool {
    let Some(zeta) = to_int_vec(&g.zeta) else {
        return false;
    };
    list.t_h().contains(&g.t.add(&tau_of(list, tau, &zeta)))
}

/// Element `(B, β)` of `Γ`: `B` in the lattice of `T_f`, `β ∈ P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaElement {
    pub b: Vec<Int>,
    pub beta: Vec<Int>,
}

/// Result of the `Γ`-action on `(Z, ζ, x)`: new `Z`, `ζ`, and the torus
/// element that acts on the Hamiltonian factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaImage {
    pub z: Vec<Rational>,
    pub zeta: Vec<Rational>,
    pub fiber: TorusElement,
}

/// `Γ` for a list and a complement `T_f` of `T_h`. Coordinates on `𝔱_f` are
/// taken in the basis of `T_f`; `c_f`, `c_h` and the lifts `X^l_f` are
/// precomputed in that frame.
#[derive(Clone, Debug)]
pub struct GammaGroup<'a> {
    list: &'a IngredientList,
    t_f: Subtorus,
    c_f: Vec<Vec<Vec<Int>>>,
    c_h: Vec<Vec<Vec<Rational>>>,
    x_f: Vec<Vec<Rational>>,
}

impl<'a> GammaGroup<'a> {
    pub fn new(list: &'a IngredientList, t_f: &Subtorus) -> Result<Self> {
        let f = list.frame()?;
        if !are_complementary(list.t_h(), t_f) {
            return Err(Error::NotComplementary);
        }
        let z = t_f.basis();
        let n = list.d_n();
        let mut c_f = vec![vec![vec![]; n]; n];
        let mut c_h = vec![vec![vec![]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let (a, b) = f.split_h_f(list.c_t(i, j), z)?;
                c_f[i][j] = to_int_vec(&b).ok_or(Error::Condition5aViolated {
                    i: i.min(j) + 1,
                    j: i.max(j) + 1,
                })?;
                c_h[i][j] = a;
            }
        }
        let x_f = list
            .tau()
            .values()
            .iter()
            .map(|t| f.split_h_f(t.coords(), z).map(|(_, b)| b))
            .collect::<Result<_>>()?;
        Ok(GammaGroup {
            list,
            t_f: t_f.clone(),
            c_f,
            c_h,
            x_f,
        })
    }

    pub fn d_f(&self) -> usize {
        self.t_f.dim()
    }

    pub fn d_n(&self) -> usize {
        self.list.d_n()
    }

    pub fn identity(&self) -> GammaElement {
        GammaElement {
            b: vec![Int::zero(); self.d_f()],
            beta: vec![Int::zero(); self.d_n()],
        }
    }

    /// `c_f(ε^i, ε^j)` in `T_f`-coordinates.
    pub fn c_f(&self, i: usize, j: usize) -> &[Int] {
        &self.c_f[i][j]
    }

    /// `c_h(ε^i, ε^j)` in coordinates of the Hamiltonian basis.
    pub fn c_h(&self, i: usize, j: usize) -> &[Rational] {
        &self.c_h[i][j]
    }

    /// `b_f(β, β') = Σ_{l<l'} β_l β'_{l'} c_f^{ll'}`.
    pub fn b_f(&self, beta: &[Int], beta2: &[Int]) -> Vec<Int> {
        let mut acc = vec![Int::zero(); self.d_f()];
        for l in 0..self.d_n() {
            for m in l + 1..self.d_n() {
                let k = &beta[l] * &beta2[m];
                if k.is_zero() {
                    continue;
                }
                for (x, y) in acc.iter_mut().zip(&self.c_f[l][m]) {
                    *x += &k * y;
                }
            }
        }
        acc
    }

    /// `c_f(β, β')` for integral `β, β'`.
    pub fn c_f_eval(&self, beta: &[Int], beta2: &[Int]) -> Vec<Int> {
        let a = self.b_f(beta, beta2);
        let b = self.b_f(beta2, beta);
        a.iter().zip(&b).map(|(x, y)| x - y).collect()
    }

    fn c_f_rational(&self, beta: &[Rational], zeta: &[Rational]) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.d_f()];
        for (l, a) in beta.iter().enumerate() {
            for (m, b) in zeta.iter().enumerate() {
                if l == m || a.is_zero() || b.is_zero() {
                    continue;
                }
                let k = a * b;
                for (x, y) in acc.iter_mut().zip(&self.c_f[l][m]) {
                    *x += &k * Rational::from_integer(y.clone());
                }
            }
        }
        acc
    }

    fn c_h_rational(&self, beta: &[Rational], zeta: &[Rational]) -> Vec<Rational> {
        let dh = self.list.d_h();
        let mut acc = vec![Rational::zero(); dh];
        for (l, a) in beta.iter().enumerate() {
            for (m, b) in zeta.iter().enumerate() {
                if l == m || a.is_zero() || b.is_zero() {
                    continue;
                }
                let k = a * b;
                for (x, y) in acc.iter_mut().zip(&self.c_h[l][m]) {
                    *x += &k * y;
                }
            }
        }
        acc
    }

    fn check(&self, g: &GammaElement) -> Result<()> {
        if g.b.len() != self.d_f() || g.beta.len() != self.d_n() {
            return Err(Error::FrameMismatch);
        }
        Ok(())
    }

    /// `(B', β')(B, β) = (B + B' − b_f(β, β'), β + β')` with `a = (B', β')`.
    pub fn multiply(&self, a: &GammaElement, b: &GammaElement) -> Result<GammaElement> {
        self.check(a)?;
        self.check(b)?;
        let bf = self.b_f(&b.beta, &a.beta);
        Ok(GammaElement {
            b: (0..self.d_f())
                .map(|i| &a.b[i] + &b.b[i] - &bf[i])
                .collect(),
            beta: a.beta.iter().zip(&b.beta).map(|(x, y)| x + y).collect(),
        })
    }

    /// `(B, β)⁻¹ = (−B − b_f(β, β), −β)`.
    pub fn inverse(&self, a: &GammaElement) -> Result<GammaElement> {
        self.check(a)?;
        let bf = self.b_f(&a.beta, &a.beta);
        Ok(GammaElement {
            b: a.b.iter().zip(&bf).map(|(x, y)| -x - y).collect(),
            beta: a.beta.iter().map(|x| -x).collect(),
        })
    }

    /// `b⁻¹a⁻¹ba = (c_f(β_b, β_a), 0)`.
    pub fn commutator(&self, a: &GammaElement, b: &GammaElement) -> Result<GammaElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(GammaElement {
            b: self.c_f_eval(&b.beta, &a.beta),
            beta: vec![Int::zero(); self.d_n()],
        })
    }

    /// The action on `(Z, ζ)`:
    /// `Z' = Z + B − Σ β_l X^l_f + b_f(β, β)/2 + c_f(β, ζ)/2`, `ζ' = ζ + β`.
    /// The returned fiber element is `exp(c_h(β, ζ)/2)·(τ_{−β})_h`.
    pub fn act(&self, g: &GammaElement, z: &[Rational], zeta: &[Rational]) -> Result<GammaImage> {
        self.check(g)?;
        if z.len() != self.d_f() || zeta.len() != self.d_n() {
            return Err(Error::FrameMismatch);
        }
        let beta: Vec<Rational> = g.beta.iter().cloned().map(Rational::from_integer).collect();
        let mut out: Vec<Rational> = z
            .iter()
            .zip(&g.b)
            .map(|(x, y)| x + Rational::from_integer(y.clone()))
            .collect();
        for (l, bl) in beta.iter().enumerate() {
            out = vec_sub(&out, &vec_scale(&self.x_f[l], bl));
        }
        let bf: Vec<Rational> = self
            .b_f(&g.beta, &g.beta)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        out = vec_add(&out, &half(&bf));
        out = vec_add(&out, &half(&self.c_f_rational(&beta, zeta)));

        let f = self.list.frame()?;
        let minus: Vec<Int> = g.beta.iter().map(|x| -x).collect();
        let tau_minus = tau_of(self.list, self.list.tau(), &minus);
        let (tau_h, _) = split_element(&tau_minus, self.list.t_h(), &self.t_f)?;
        let fiber = tau_h.add_lie(&f.y_combination(&half(&self.c_h_rational(&beta, zeta))));
        Ok(GammaImage {
            z: out,
            zeta: vec_add(zeta, &beta),
            fiber,
        })
    }
}

/// Tangent vector `((δt, δζ), δx)`; `dx` names a tangent vector of the
/// Hamiltonian factor known to the oracle (`None` for zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangent {
    pub dt: Vec<Rational>,
    pub dzeta: Vec<Rational>,
    pub dx: Option<String>,
}

/// Values of the symplectic form of the Hamiltonian factor at a fixed point `x`.
pub trait DelzantOracle {
    /// `(σ_h)_x(δx, δ'x)`.
    fn pair(&self, dx: &str, dx2: &str) -> Option<Rational>;
    /// `(σ_h)_x(δx, (Y_j)_{M_h}(x))` for the `j`-th Hamiltonian basis vector.
    fn pair_generator(&self, dx: &str, j: usize) -> Option<Rational>;
}

/// Oracle backed by explicit tables.
#[derive(Clone, Debug, Default)]
pub struct TableOracle {
    pub pairs: HashMap<(String, String), Rational>,
    pub generators: HashMap<(String, usize), Rational>,
}

impl DelzantOracle for TableOracle {
    fn pair(&self, dx: &str, dx2: &str) -> Option<Rational> {
        if let Some(v) = self.pairs.get(&(dx.to_string(), dx2.to_string())) {
            return Some(v.clone());
        }
        self.pairs
            .get(&(dx2.to_string(), dx.to_string()))
            .map(|v| -v.clone())
            .or_else(|| (dx == dx2).then(Rational::zero))
    }

    fn pair_generator(&self, dx: &str, j: usize) -> Option<Rational> {
        self.generators.get(&(dx.to_string(), j)).cloned()
    }
}

/// The pull-back form `ω_a(δa, δ'a)` at `a = ((t, ζ), x)` with `μ(x) = mu`
/// (coordinates dual to the Hamiltonian basis). `t` does not enter.
pub fn omega_eval(
    list: &IngredientList,
    zeta: &[Rational],
    da: &Tangent,
    dda: &Tangent,
    mu: &[Rational],
    oracle: &dyn DelzantOracle,
) -> Result<Rational> {
    let f = list.frame()?;
    check_shape(list, da.dt.len(), da.dzeta.len())?;
    check_shape(list, dda.dt.len(), dda.dzeta.len())?;
    if zeta.len() != list.d_n() || mu.len() != list.d_h() {
        return Err(Error::FrameMismatch);
    }
    let x = vec_add(&da.dt, &half(&list.c_eval(&da.dzeta, zeta)));
    let x2 = vec_add(&dda.dt, &half(&list.c_eval(&dda.dzeta, zeta)));
    let z = f.default_complement();
    let (ch, _) = f.split_h_f(&list.c_eval(&da.dzeta, &dda.dzeta), z)?;
    let mut value = bilinear(list.sigma_t(), &da.dt, &dda.dt) + pair_zeta(list, f, &da.dzeta, &x2)
        - pair_zeta(list, f, &dda.dzeta, &x)
        - dot(mu, &ch);

    let missing = || Error::OracleMissing("Hamiltonian factor pairing".into());
    let generator_term = |dx: &str, v: &[Rational]| -> Result<Rational> {
        let (vh, _) = f.split_h_f(v, z)?;
        let mut acc = Rational::zero();
        for (j, k) in vh.iter().enumerate() {
            if !k.is_zero() {
                acc += k * oracle.pair_generator(dx, j).ok_or_else(missing)?;
            }
        }
        Ok(acc)
    };
    if let Some(dx) = &da.dx {
        value += generator_term(dx, &x2)?;
    }
    if let Some(dx2) = &dda.dx {
        value -= generator_term(dx2, &x)?;
    }
    if let (Some(dx), Some(dx2)) = (&da.dx, &dda.dx) {
        value += oracle.pair(dx, dx2).ok_or_else(missing)?;
    }
    Ok(value)
}

/// Matrix of `ω` on the `(δt, δζ)` block at `ζ` with `δx = 0`: rows and
/// columns indexed by the standard basis of `𝔱` followed by the `P`-basis.
pub fn omega_block_matrix(
    list: &IngredientList,
    zeta: &[Rational],
    mu: &[Rational],
) -> Result<QMatrix> {
    let d = list.torus_dim();
    let n = list.d_n();
    let basis = |k: usize| -> Tangent {
        let mut dt = vec![Rational::zero(); d];
        let mut dzeta = vec![Rational::zero(); n];
        if k < d {
            dt[k] = Rational::from_integer(1.into());
        } else {
            dzeta[k - d] = Rational::from_integer(1.into());
        }
        Tangent {
            dt,
            dzeta,
            dx: None,
        }
    };
    let oracle = TableOracle::default();
    let mut m = crate::linalg::Matrix::zeros(d + n, d + n);
    for i in 0..d + n {
        for j in 0..d + n {
            m[(i, j)] = omega_eval(list, zeta, &basis(i), &basis(j), mu, &oracle)?;
        }
    }
    Ok(m)
}

fn require_in(sub: &Subtorus, v: &[Rational], what: &str) -> Result<()> {
    if sub.span().contains(v) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} is not tangent to T_f")))
    }
}

/// `σ_f(δb, δ'b) = σ^t(δt, δ't) + δζ(Z'_𝔩) − δ'ζ(Z_𝔩)` with
/// `Z = δt + c(δζ, ζ)/2`. Requires `c_h = 0` for the complement `t_f`.
pub fn sigma_f_eval(
    list: &IngredientList,
    t_f: &Subtorus,
    zeta: &[Rational],
    db: (&[Rational], &[Rational]),
    ddb: (&[Rational], &[Rational]),
) -> Result<Rational> {
    let g = GammaGroup::new(list, t_f)?;
    let n = list.d_n();
    for i in 0..n {
        for j in 0..n {
            if g.c_h(i, j).iter().any(|x| !x.is_zero()) {
                return Err(Error::SplittingAbsent);
            }
        }
    }
    check_shape(list, db.0.len(), db.1.len())?;
    check_shape(list, ddb.0.len(), ddb.1.len())?;
    require_in(t_f, db.0, "first tangent vector")?;
    require_in(t_f, ddb.0, "second tangent vector")?;
    let f = list.frame()?;
    let x = vec_add(db.0, &half(&list.c_eval(db.1, zeta)));
    let x2 = vec_add(ddb.0, &half(&list.c_eval(ddb.1, zeta)));
    Ok(
        bilinear(list.sigma_t(), db.0, ddb.0) + pair_zeta(list, f, db.1, &x2)
            - pair_zeta(list, f, ddb.1, &x),
    )
}

/// The constant form on `𝔱_f × N` in the basis `(Z_j, ν_k)`, where `Z_j` is the
/// basis of `t_f` and `ν_k` the coordinate basis of `N`.
pub fn nu_matrix(list: &IngredientList, t_f: &Subtorus) -> Result<QMatrix> {
    let f = list.frame()?;
    if !are_complementary(list.t_h(), t_f) {
        return Err(Error::NotComplementary);
    }
    let df = t_f.dim();
    let n = f.d_n();
    let z = to_qmatrix(t_f.basis());
    let zl: Vec<Vec<Rational>> = (0..df).map(|j| f.project_l(&z.col(j))).collect();
    let unit = |k: usize| crate::linalg::unit_vec(n, k);
    let mut m = crate::linalg::Matrix::zeros(df + n, df + n);
    for i in 0..df + n {
        for j in 0..df + n {
            m[(i, j)] = match (i < df, j < df) {
                (true, true) => bilinear(list.sigma_t(), &z.col(i), &z.col(j)),
                (true, false) => -f.pair_n(&unit(j - df), &zl[i]),
                (false, true) => f.pair_n(&unit(i - df), &zl[j]),
                (false, false) => Rational::zero(),
            };
        }
    }
    Ok(m)
}

/// Whether the form on `𝔱_f × N` is nondegenerate for the default complement.
pub fn nu_nondegenerate(list: &IngredientList) -> Result<bool> {
    let t_f = crate::torus::complement(list.t_h())?;
    let m = nu_matrix(list, &t_f)?;
    Ok(!crate::linalg::determinant(&m).is_zero())
}

/// Local model near an orbit with stabilizer algebra spanned by `X_j`:
/// `𝔩 = 𝔥 ⊕ span K` with `[X | K]` a basis of `𝔩 ∩ ℤ^d`.
#[derive(Clone, Debug)]
pub struct LocalChart {
    sigma_t: QMatrix,
    frame: Frame,
}

impl LocalChart {
    pub fn new(sigma_t: &QMatrix, h_basis: &crate::linalg::IntMatrix) -> Result<Self> {
        let h = Subtorus::new(crate::linalg::IntegerLattice::from_generators(h_basis))
            .map_err(|_| Error::SingularChart)?;
        if h.dim() != h_basis.ncols() {
            return Err(Error::SingularChart);
        }
        let frame = match Frame::new(sigma_t, &h, h_basis) {
            Ok(f) => f,
            Err(Error::IrrationalKernel) => return Err(Error::IrrationalKernel),
            Err(_) => return Err(Error::SingularChart),
        };
        Ok(LocalChart {
            sigma_t: sigma_t.clone(),
            frame,
        })
    }

    /// `m = dim 𝔥`.
    pub fn m(&self) -> usize {
        self.frame.d_h()
    }

    pub fn dim_l(&self) -> usize {
        self.frame.dim_l()
    }

    /// `A(δλ, δρ)` as values on the basis `[X | K]` of `𝔩`: on `X_j` it is
    /// `δρ_j`, on `K_i` it is `δλ(K_i)`.
    pub fn a_iso(&self, dlambda: &[Rational], drho: &[Rational]) -> Result<Vec<Rational>> {
        if drho.len() != self.m() || dlambda.len() != self.dim_l() - self.m() {
            return Err(Error::FrameMismatch);
        }
        let mut out = drho.to_vec();
        out.extend_from_slice(dlambda);
        Ok(out)
    }

    /// Inverse of [`LocalChart::a_iso`]: returns `(δλ, δρ)`.
    pub fn a_iso_inverse(&self, xi: &[Rational]) -> Result<(Vec<Rational>, Vec<Rational>)> {
        if xi.len() != self.dim_l() {
            return Err(Error::FrameMismatch);
        }
        Ok((xi[self.m()..].to_vec(), xi[..self.m()].to_vec()))
    }

    /// Evaluates `ξ ∈ 𝔩*`, given on `[X | K]`, at `Y ∈ 𝔩`.
    pub fn eval_dual(&self, xi: &[Rational], y: &[Rational]) -> Option<Rational> {
        self.frame.t_to_l(y).map(|c| dot(xi, &c))
    }

    /// The model form at `(X, δλ, δθ, δρ)` and `(X', δ'λ, δ'θ, δ'ρ)`:
    /// `σ^t(X, X') + δλ(X'_𝔩) − δ'λ(X_𝔩) + Σ_j (δρ_j δ'θ_j − δ'ρ_j δθ_j)`.
    pub fn local_form_eval(&self, v: &ChartTangent, w: &ChartTangent) -> Result<Rational> {
        let m = self.m();
        for t in [v, w] {
            if t.x.len() != self.frame.torus_dim()
                || t.dlambda.len() != self.dim_l() - m
                || t.dtheta.len() != m
                || t.drho.len() != m
            {
                return Err(Error::FrameMismatch);
            }
        }
        let lam = |dl: &[Rational], x: &[Rational]| dot(dl, &self.frame.project_l(x)[m..]);
        let mut value =
            bilinear(&self.sigma_t, &v.x, &w.x) + lam(&v.dlambda, &w.x) - lam(&w.dlambda, &v.x);
        for j in 0..m {
            value += &v.drho[j] * &w.dtheta[j] - &w.drho[j] * &v.dtheta[j];
        }
        Ok(value)
    }
}

/// Tangent vector of the local model `K × (𝔩/𝔥)* × ℂ^m` in `(θ, ρ)` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartTangent {
    pub x: Vec<Rational>,
    pub dlambda: Vec<Rational>,
    pub dtheta: Vec<Rational>,
    pub drho: Vec<Rational>,
}

#[cfg(test)]
mod tests;
