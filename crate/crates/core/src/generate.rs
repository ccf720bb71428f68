//! Random valid ingredient lists for property tests.
//!
//! `σ^t` is a block form `0 ⊕ Σ` moved by a random unimodular `Q`, so the
//! Hamiltonian lattice `Q·span(e_1..e_{d_h})` is saturated and lies in the
//! kernel. The curvature is a sum of terms
//! `c_N(ζ, ζ') = (ζ(w) μ(ζ') − ζ'(w) μ(ζ)) w` plus an integral `𝔱_h` part,
//! each of which satisfies the cyclic identity.

use rand::Rng;

use crate::holonomy::make_hom_c;
use crate::ingredients::{Frame, IngredientList};
use crate::linalg::{
    dot, int, inverse, rat, to_qmatrix, to_rational_vec, Int, IntMatrix, Matrix, QMatrix, Rational,
};
use crate::polytope::{translate_to_centered, DelzantPolytope};
use crate::torus::{Subtorus, TorusElement};

#[derive(Clone, Debug)]
pub struct GeneratorConfig {
    pub max_dh: usize,
    pub max_dn: usize,
    /// Maximal number of 2-dimensional nondegenerate blocks of `σ^t`.
    pub max_sigma_blocks: usize,
    /// Forces a trivial Hamiltonian torus.
    pub free: bool,
    /// Keeps the entries of `P` in `{0, ±1, ±2}`.
    pub max_entry: i64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            max_dh: 2,
            max_dn: 3,
            max_sigma_blocks: 1,
            free: false,
            max_entry: 2,
        }
    }
}

/// Random element of `GL(n, ℤ)` as a product of elementary moves.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut m = Matrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            m.negate_col(0);
        }
        return m;
    }
    for _ in 0..steps {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        match rng.gen_range(0..4) {
            0 => m.swap_cols(a, b),
            1 => m.negate_col(a),
            _ => {
                let k = Int::from(rng.gen_range(-1i64..=1));
                m.add_col_multiple(a, b, &k);
            }
        }
    }
    m
}

fn simplex(dim: usize) -> Vec<Vec<Rational>> {
    let mut pts = vec![vec![Rational::from_integer(int(0)); dim]];
    for i in 0..dim {
        pts.push(crate::linalg::unit_vec(dim, i));
    }
    pts
}

fn cube(dim: usize) -> Vec<Vec<Rational>> {
    (0..1usize << dim)
        .map(|mask| {
            (0..dim)
                .map(|i| Rational::from_integer(int(((mask >> i) & 1) as i64)))
                .collect()
        })
        .collect()
}

fn product(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            let mut v = x.clone();
            v.extend_from_slice(y);
            out.push(v);
        }
    }
    out
}

/// Random Delzant polytope: a product of dilated simplices and cubes moved by
/// a unimodular map and a rational translation (not centered).
pub fn random_delzant<R: Rng>(rng: &mut R, dim: usize) -> DelzantPolytope {
    if dim == 0 {
        return DelzantPolytope::point();
    }
    let mut pts = vec![vec![]];
    let mut left = dim;
    while left > 0 {
        let k = rng.gen_range(1..=left.min(2));
        let factor = if rng.gen_bool(0.5) {
            simplex(k)
        } else {
            cube(k)
        };
        let scale = Rational::from_integer(int(rng.gen_range(1..=2)));
        let factor: Vec<Vec<Rational>> = factor
            .iter()
            .map(|v| v.iter().map(|x| x * &scale).collect())
            .collect();
        pts = product(&pts, &factor);
        left -= k;
    }
    let u = to_qmatrix(&random_unimodular(rng, dim, 6));
    let shift: Vec<Rational> = (0..dim)
        .map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
        .collect();
    let pts: Vec<Vec<Rational>> = pts
        .iter()
        .map(|p| crate::linalg::vec_add(&u.mul_vec(p), &shift))
        .collect();
    DelzantPolytope::from_vertices(dim, &pts).expect("full-dimensional product")
}

fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-4..=4), rng.gen_range(1..=4))
}

fn random_sigma_block<R: Rng>(rng: &mut R, blocks: usize) -> QMatrix {
    let n = 2 * blocks;
    let mut s = Matrix::zeros(n, n);
    for b in 0..blocks {
        let mut a = random_rational(rng);
        while num_traits::Zero::is_zero(&a) {
            a = random_rational(rng);
        }
        s[(2 * b, 2 * b + 1)] = a.clone();
        s[(2 * b + 1, 2 * b)] = -a;
    }
    s
}

/// Random list satisfying every condition of the definition.
pub fn random_list<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> IngredientList {
    let dh = if cfg.free {
        0
    } else {
        rng.gen_range(0..=cfg.max_dh)
    };
    let dn = rng.gen_range(0..=cfg.max_dn);
    let blocks = rng.gen_range(0..=cfg.max_sigma_blocks);
    let dl = dh + dn;
    let d = dl + 2 * blocks;
    if d == 0 {
        return random_list(rng, cfg);
    }

    let q = random_unimodular(rng, d, 3 * d);
    let qinv = inverse(&to_qmatrix(&q)).expect("unimodular");
    let mut sigma_std = Matrix::zeros(d, d);
    let block = random_sigma_block(rng, blocks);
    for i in 0..2 * blocks {
        for j in 0..2 * blocks {
            sigma_std[(dl + i, dl + j)] = block[(i, j)].clone();
        }
    }
    let sigma = &(&qinv.transpose() * &sigma_std) * &qinv;
    let y = q.select_cols(0..dh);
    let t_h = Subtorus::new(crate::linalg::IntegerLattice::from_generators(&y)).expect("saturated");
    let y = crate::linalg::hnf(&y).0.select_cols(0..dh);
    let frame = Frame::new(&sigma, &t_h, &y).expect("valid frame");
    assert_eq!(frame.d_n(), dn);

    let delta = translate_to_centered(&random_delzant(rng, dh));

    // P: a random full-rank integer lattice in N-coordinates.
    let p_int = loop {
        let u = random_unimodular(rng, dn, 2 * dn + 1);
        let mut m = u.clone();
        for j in 0..dn {
            if rng.gen_bool(0.3) {
                let k = Int::from(rng.gen_range(1..=cfg.max_entry.max(1)));
                for i in 0..dn {
                    m[(i, j)] = &u[(i, j)] * &k;
                }
            }
        }
        if dn == 0 || crate::linalg::rank(&to_qmatrix(&m)) == dn {
            break m;
        }
    };
    let p_basis: Vec<Vec<Rational>> = p_int
        .cols_vec()
        .iter()
        .map(|c| to_rational_vec(c))
        .collect();

    // c in l-coordinates: integral t_h-part plus cyclic-safe N-part.
    let mut c = vec![vec![vec![Rational::from_integer(int(0)); dl]; dn]; dn];
    let terms = if dn >= 2 { rng.gen_range(0..=2) } else { 0 };
    let ranged = |rng: &mut R| Rational::from_integer(int(rng.gen_range(-2..=2)));
    let mut n_part: Vec<Vec<Vec<Rational>>> =
        vec![vec![vec![Rational::from_integer(int(0)); dn]; dn]; dn];
    for _ in 0..terms {
        let w: Vec<Rational> = (0..dn).map(|_| ranged(rng)).collect();
        let mu: Vec<Rational> = (0..dn).map(|_| ranged(rng)).collect();
        for i in 0..dn {
            for j in 0..dn {
                let k = dot(&p_basis[i], &w) * dot(&p_basis[j], &mu)
                    - dot(&p_basis[j], &w) * dot(&p_basis[i], &mu);
                for (x, wk) in n_part[i][j].iter_mut().zip(&w) {
                    *x += &k * wk;
                }
            }
        }
    }
    for i in 0..dn {
        for j in i + 1..dn {
            let mut v: Vec<Rational> = (0..dh).map(|_| ranged(rng)).collect();
            v.extend(n_part[i][j].iter().cloned());
            c[j][i] = v.iter().map(|x| -x).collect();
            c[i][j] = v;
        }
    }

    let base = IngredientList::new(
        d,
        sigma,
        y,
        delta,
        p_basis,
        c,
        vec![TorusElement::identity(d); dn],
    )
    .expect("generated list is well-formed");
    let choices = (0..dn)
        .map(|_| TorusElement::new((0..d).map(|_| rat(rng.gen_range(0..4), 4)).collect()))
        .collect();
    let tau = make_hom_c(&base, choices).expect("integral c");
    base.with_tau(tau).expect("same frame")
}

/// Random element of `𝒜` with small rational coefficients.
pub fn random_alpha<R: Rng>(rng: &mut R, list: &IngredientList) -> Vec<Rational> {
    let a = crate::holonomy::space_a_basis(list).expect("valid frame");
    let mut out = vec![Rational::from_integer(int(0)); a.ambient_dim()];
    for g in a.basis_vectors() {
        let k = random_rational(rng);
        for (x, y) in out.iter_mut().zip(&g) {
            *x += &k * y;
        }
    }
    out
}
