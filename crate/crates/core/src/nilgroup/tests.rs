use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::generate::{random_list, GeneratorConfig};
use crate::linalg::{determinant, int_matrix, int_vec, kernel_q, rat_vec, unit_vec, Matrix};
use crate::samples;
use crate::torus::complement;

fn g(t: &[(i64, i64)], zeta: &[i64]) -> GElement {
    GElement {
        t: TorusElement::new(t.iter().map(|&(a, b)| rat(a, b)).collect()),
        zeta: rat_vec(zeta),
    }
}

fn gamma(b: &[i64], beta: &[i64]) -> GammaElement {
    GammaElement {
        b: int_vec(b),
        beta: int_vec(beta),
    }
}

#[test]
fn g_examples() {
    let t = samples::thurston();
    let e1 = g(&[(0, 1), (0, 1)], &[1, 0]);
    let e2 = g(&[(0, 1), (0, 1)], &[0, 1]);
    let p = g_multiply(&t, &e1, &e2).unwrap();
    assert_eq!(p, g(&[(1, 2), (0, 1)], &[1, 1]));
    let id = GElement::identity(&t);
    assert_eq!(g_multiply(&t, &id, &p).unwrap(), p);
    let inv = g_inverse(&t, &p).unwrap();
    assert_eq!(g_multiply(&t, &p, &inv).unwrap(), id);
    let wrong = GElement {
        t: TorusElement::identity(3),
        zeta: vec![],
    };
    assert_eq!(g_multiply(&t, &wrong, &id), Err(Error::FrameMismatch));
}

#[test]
fn bracket_examples() {
    let t = samples::thurston();
    let x1 = (rat_vec(&[0, 0]), rat_vec(&[1, 0]));
    let x2 = (rat_vec(&[0, 0]), rat_vec(&[0, 1]));
    assert_eq!(g_bracket(&t, &x1, &x2).0, rat_vec(&[-1, 0]));
    assert_eq!(g_bracket(&t, &x1, &x1).0, rat_vec(&[0, 0]));
    let inner = g_bracket(&t, &x1, &x2);
    assert_eq!(g_bracket(&t, &inner, &x1).0, rat_vec(&[0, 0]));
}

#[test]
fn h_membership() {
    let t = samples::thurston();
    assert!(h_contains(&t, &GElement::identity(&t), t.tau()));
    assert!(h_contains(&t, &g(&[(0, 1), (0, 1)], &[1, 0]), t.tau()));
    assert!(!h_contains(&t, &g(&[(1, 3), (0, 1)], &[1, 0]), t.tau()));
    let half = GElement {
        t: TorusElement::identity(2),
        zeta: vec![rat(1, 2), rat(0, 1)],
    };
    assert!(!h_contains(&t, &half, t.tau()));
    // ε¹+ε² carries τ = (1/2, 0); compensate with t = (1/2, 0).
    assert!(h_contains(&t, &g(&[(1, 2), (0, 1)], &[1, 1]), t.tau()));
}

#[test]
fn gamma_examples() {
    let t = samples::thurston();
    let gg = GammaGroup::new(&t, &Subtorus::full(2)).unwrap();
    let a = gamma(&[0, 0], &[1, 0]);
    let b = gamma(&[0, 0], &[0, 1]);
    assert_eq!(gg.commutator(&a, &b).unwrap(), gamma(&[-1, 0], &[0, 0]));
    let id = gg.identity();
    assert_eq!(gg.multiply(&id, &a).unwrap(), a);
    let c = gamma(&[3, -2], &[2, 5]);
    assert_eq!(gg.multiply(&c, &gg.inverse(&c).unwrap()).unwrap(), id);

    let img = gg.act(&a, &rat_vec(&[0, 0]), &rat_vec(&[0, 1])).unwrap();
    assert_eq!(img.z, vec![rat(1, 2), rat(0, 1)]);
    assert_eq!(img.zeta, rat_vec(&[1, 1]));
    let same = gg.act(&id, &rat_vec(&[5, 1]), &rat_vec(&[2, 3])).unwrap();
    assert_eq!((same.z, same.zeta), (rat_vec(&[5, 1]), rat_vec(&[2, 3])));
    assert_eq!(
        GammaGroup::new(&t, &Subtorus::trivial(2)).err(),
        Some(Error::NotComplementary)
    );
}

#[test]
fn benoist_fiber_element() {
    let b = samples::benoist_cex();
    let t_f = complement(b.t_h()).unwrap();
    let gg = GammaGroup::new(&b, &t_f).unwrap();
    assert_eq!(gg.c_h(0, 1), &rat_vec(&[1, 0])[..]);
    assert!(gg.c_f(0, 1).iter().all(|x| x.is_zero()));
    let img = gg
        .act(
            &gamma(&[0, 0], &[1, 0]),
            &rat_vec(&[0, 0]),
            &rat_vec(&[0, 1]),
        )
        .unwrap();
    assert_eq!(
        img.fiber,
        TorusElement::new(vec![rat(1, 2), rat(0, 1), rat(0, 1), rat(0, 1)])
    );
}

#[test]
fn omega_examples() {
    let t = samples::thurston();
    let o = TableOracle::default();
    let tan = |dt: &[i64], dz: &[i64]| Tangent {
        dt: rat_vec(dt),
        dzeta: rat_vec(dz),
        dx: None,
    };
    let zero = rat_vec(&[0, 0]);
    // Standard pairing δζ(δ't) − δ'ζ(δt) at ζ = 0.
    let v = omega_eval(
        &t,
        &zero,
        &tan(&[0, 0], &[1, 0]),
        &tan(&[1, 0], &[0, 0]),
        &[],
        &o,
    )
    .unwrap();
    assert_eq!(v, rat(1, 1));
    let v = omega_eval(
        &t,
        &zero,
        &tan(&[1, 0], &[0, 0]),
        &tan(&[0, 0], &[1, 0]),
        &[],
        &o,
    )
    .unwrap();
    assert_eq!(v, rat(-1, 1));
    let r = samples::rank_two_sigma();
    let tan3 = |dt: &[i64]| Tangent {
        dt: rat_vec(dt),
        dzeta: rat_vec(&[0]),
        dx: None,
    };
    let v = omega_eval(
        &r,
        &rat_vec(&[0]),
        &tan3(&[1, 0, 0]),
        &tan3(&[0, 1, 0]),
        &[],
        &o,
    )
    .unwrap();
    assert_eq!(v, rat(1, 1));
}

#[test]
fn omega_oracle_terms() {
    let d = samples::delzant_triangle();
    let mut o = TableOracle::default();
    let with = |dx: &str| Tangent {
        dt: rat_vec(&[1, 0]),
        dzeta: vec![],
        dx: Some(dx.into()),
    };
    assert!(matches!(
        omega_eval(&d, &[], &with("u"), &with("v"), &rat_vec(&[0, 0]), &o),
        Err(Error::OracleMissing(_))
    ));
    o.pairs.insert(("u".into(), "v".into()), rat(2, 1));
    o.generators.insert(("u".into(), 0), rat(3, 1));
    o.generators.insert(("v".into(), 0), rat(5, 1));
    // 3 (from δx with X'_h = e₁) − 5 (from δ'x with X_h = e₁) + 2.
    let v = omega_eval(&d, &[], &with("u"), &with("v"), &rat_vec(&[0, 0]), &o).unwrap();
    assert_eq!(v, rat(0, 1));
}

#[test]
fn nu_examples() {
    let t = samples::thurston();
    let m = nu_matrix(&t, &complement(t.t_h()).unwrap()).unwrap();
    assert_eq!(m.shape(), (4, 4));
    assert_eq!(determinant(&m), rat(1, 1));
    assert!(nu_nondegenerate(&t).unwrap());
    let d = samples::delzant_triangle();
    assert_eq!(
        nu_matrix(&d, &Subtorus::trivial(2)).unwrap().shape(),
        (0, 0)
    );
    assert!(nu_nondegenerate(&d).unwrap());
    let r = samples::rank_two_sigma();
    let m = nu_matrix(&r, &Subtorus::full(3)).unwrap();
    assert_eq!(m.shape(), (4, 4));
    assert!(!determinant(&m).is_zero());
    assert_eq!(
        nu_matrix(&t, &Subtorus::trivial(2)),
        Err(Error::NotComplementary)
    );
}

#[test]
fn sigma_f_examples() {
    let t = samples::thurston();
    let full = Subtorus::full(2);
    let zeta = rat_vec(&[0, 1]);
    let a = (rat_vec(&[0, 0]), rat_vec(&[1, 0]));
    let b = (rat_vec(&[0, 1]), rat_vec(&[0, 0]));
    // δζ = ε¹ paired with δ't = e₂ gives 0; with ζ = ε², c(ε¹, ζ)/2 = e₁/2.
    let v = sigma_f_eval(&t, &full, &zeta, (&a.0, &a.1), (&b.0, &b.1)).unwrap();
    let w = sigma_f_eval(&t, &full, &zeta, (&b.0, &b.1), (&a.0, &a.1)).unwrap();
    assert_eq!(v, -w.clone());
    assert!(sigma_f_eval(&t, &full, &zeta, (&a.0, &a.1), (&a.0, &a.1))
        .unwrap()
        .is_zero());
    let bcx = samples::benoist_cex();
    let z = rat_vec(&[0, 0]);
    let dt = rat_vec(&[0, 0, 1, 0]);
    assert_eq!(
        sigma_f_eval(
            &bcx,
            &complement(bcx.t_h()).unwrap(),
            &z,
            (&dt, &z),
            (&dt, &z)
        ),
        Err(Error::SplittingAbsent)
    );
}

#[test]
fn local_chart() {
    let sigma = Matrix::zeros(3, 3);
    let chart = LocalChart::new(&sigma, &int_matrix(&[&[1], &[0], &[0]])).unwrap();
    let xi = chart.a_iso(&rat_vec(&[2, 3]), &rat_vec(&[7])).unwrap();
    assert_eq!(
        chart.a_iso_inverse(&xi).unwrap(),
        (rat_vec(&[2, 3]), rat_vec(&[7]))
    );
    // A(0, e_1) evaluated on X_1 is 1.
    let e = chart.a_iso(&rat_vec(&[0, 0]), &rat_vec(&[1])).unwrap();
    assert_eq!(chart.eval_dual(&e, &rat_vec(&[1, 0, 0])), Some(rat(1, 1)));
    // m = 0: the identity.
    let free = LocalChart::new(&sigma, &Matrix::zeros(3, 0)).unwrap();
    assert_eq!(
        free.a_iso(&rat_vec(&[1, 2, 3]), &[]).unwrap(),
        rat_vec(&[1, 2, 3])
    );
    assert!(matches!(
        LocalChart::new(&sigma, &int_matrix(&[&[2], &[0], &[0]])),
        Err(Error::SingularChart)
    ));
    let v = ChartTangent {
        x: rat_vec(&[0, 0, 0]),
        dlambda: rat_vec(&[0, 0]),
        dtheta: rat_vec(&[1]),
        drho: rat_vec(&[0]),
    };
    let w = ChartTangent {
        x: rat_vec(&[0, 1, 0]),
        dlambda: rat_vec(&[1, 0]),
        dtheta: rat_vec(&[0]),
        drho: rat_vec(&[2]),
    };
    assert_eq!(chart.local_form_eval(&v, &w).unwrap(), rat(-2, 1));
    assert_eq!(chart.local_form_eval(&w, &v).unwrap(), rat(2, 1));
}

fn random_gamma<R: Rng>(rng: &mut R, df: usize, n: usize) -> GammaElement {
    GammaElement {
        b: (0..df).map(|_| Int::from(rng.gen_range(-3..=3))).collect(),
        beta: (0..n).map(|_| Int::from(rng.gen_range(-3..=3))).collect(),
    }
}

fn random_g<R: Rng>(rng: &mut R, list: &IngredientList) -> GElement {
    GElement {
        t: TorusElement::new(
            (0..list.torus_dim())
                .map(|_| rat(rng.gen_range(0..6), 6))
                .collect(),
        ),
        zeta: (0..list.d_n())
            .map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
            .collect(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn group_laws(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let list = random_list(&mut rng, &GeneratorConfig::default());
        let (a, b, c) = (random_g(&mut rng, &list), random_g(&mut rng, &list), random_g(&mut rng, &list));
        let ab_c = g_multiply(&list, &g_multiply(&list, &a, &b).unwrap(), &c).unwrap();
        let a_bc = g_multiply(&list, &a, &g_multiply(&list, &b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let inv = g_inverse(&list, &a).unwrap();
        prop_assert_eq!(g_multiply(&list, &inv, &a).unwrap(), GElement::identity(&list));

        let gg = GammaGroup::new(&list, &complement(list.t_h()).unwrap()).unwrap();
        let (x, y, z) = (
            random_gamma(&mut rng, gg.d_f(), gg.d_n()),
            random_gamma(&mut rng, gg.d_f(), gg.d_n()),
            random_gamma(&mut rng, gg.d_f(), gg.d_n()),
        );
        let m = |p: &GammaElement, q: &GammaElement| gg.multiply(p, q).unwrap();
        prop_assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
        let xi = gg.inverse(&x).unwrap();
        prop_assert_eq!(m(&x, &xi), gg.identity());
        prop_assert_eq!(m(&xi, &x), gg.identity());
        // Closed-form commutator equals the group word, and is central.
        let word = m(&m(&gg.inverse(&y).unwrap(), &xi), &m(&y, &x));
        let comm = gg.commutator(&x, &y).unwrap();
        prop_assert_eq!(&word, &comm);
        prop_assert_eq!(m(&comm, &z), m(&z, &comm));
    }

    #[test]
    fn b_differences_give_c(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let list = random_list(&mut rng, &GeneratorConfig::default());
        let n = list.d_n();
        for i in 0..n {
            for j in 0..n {
                let (u, v) = (unit_vec(n, i), unit_vec(n, j));
                let diff = vec_sub(&list.b_eval(&u, &v), &list.b_eval(&v, &u));
                prop_assert_eq!(diff, list.c_eval(&u, &v));
            }
        }
    }

    #[test]
    fn gamma_action_composes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let list = random_list(&mut rng, &GeneratorConfig::default());
        let gg = GammaGroup::new(&list, &complement(list.t_h()).unwrap()).unwrap();
        let g1 = random_gamma(&mut rng, gg.d_f(), gg.d_n());
        let g2 = random_gamma(&mut rng, gg.d_f(), gg.d_n());
        let z: Vec<Rational> = (0..gg.d_f()).map(|_| rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))).collect();
        let zeta: Vec<Rational> = (0..gg.d_n()).map(|_| rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))).collect();
        let p1 = gg.act(&g1, &z, &zeta).unwrap();
        let p2 = gg.act(&g2, &p1.z, &p1.zeta).unwrap();
        let direct = gg.act(&gg.multiply(&g2, &g1).unwrap(), &z, &zeta).unwrap();
        prop_assert_eq!((p2.z, p2.zeta), (direct.z, direct.zeta));
    }

    #[test]
    fn omega_is_antisymmetric_with_kernel_t_h(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let list = random_list(&mut rng, &GeneratorConfig::default());
        let zeta: Vec<Rational> = (0..list.d_n()).map(|_| rat(rng.gen_range(-3..=3), 2)).collect();
        let mu = vec![Rational::zero(); list.d_h()];
        let m = omega_block_matrix(&list, &zeta, &mu).unwrap();
        prop_assert_eq!(m.transpose(), m.map(|x| -x));
        let zero = vec![Rational::zero(); list.d_n()];
        let m0 = omega_block_matrix(&list, &zero, &mu).unwrap();
        let ker = kernel_q(&m0);
        let mut expected: Vec<Vec<Rational>> = list.t_h().span().basis_vectors();
        for v in &mut expected {
            v.extend(zero.iter().cloned());
        }
        prop_assert_eq!(ker, crate::linalg::QSubspace::span(list.torus_dim() + list.d_n(), &expected));
    }

    #[test]
    fn omega_matches_nu_on_the_free_block(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = GeneratorConfig { free: true, ..GeneratorConfig::default() };
        let list = random_list(&mut rng, &cfg);
        let n = list.d_n();
        let c0 = vec![vec![vec![Rational::zero(); list.frame().unwrap().dim_l()]; n]; n];
        let flat = IngredientList::new(list.torus_dim(), list.sigma_t().clone(), list.t_h_basis().clone(),
            list.delta().clone(), list.p_basis().to_vec(), c0, list.tau().values().to_vec()).unwrap();
        let nu = nu_matrix(&flat, &Subtorus::full(flat.torus_dim())).unwrap();
        let om = omega_block_matrix(&flat, &vec![Rational::zero(); n], &[]).unwrap();
        // ω uses P-basis coordinates on N; ν uses N-coordinates.
        let d = flat.torus_dim();
        let mut change = Matrix::identity(d + n);
        for (l, p) in flat.p_basis().iter().enumerate() {
            for (k, x) in p.iter().enumerate() {
                change[(d + k, d + l)] = x.clone();
            }
        }
        let pulled = &(&change.transpose() * &nu) * &change;
        prop_assert_eq!(pulled, om);
    }
}
