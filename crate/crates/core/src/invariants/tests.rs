use num_traits::Signed;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::generate::{random_alpha, random_list, GeneratorConfig};
use crate::holonomy::HolonomyMap;
use crate::ingredients::c_from_pairs;
use crate::linalg::{determinant, int_matrix, rat, rat_vec};
use crate::polytope::DelzantPolytope;
use crate::samples;
use crate::torus::TorusElement;

fn default_tf(list: &IngredientList) -> Subtorus {
    complement(list.t_h()).unwrap()
}

#[test]
fn thurston_invariants() {
    let t = samples::thurston();
    let r = report(&t, None).unwrap();
    assert_eq!(r.dim_m, 4);
    assert_eq!(r.euler, 0);
    assert!(!r.is_hamiltonian);
    assert!(!r.pi1_abelian);
    assert_eq!(r.betti1, 3);
    assert_eq!(
        r.h1,
        FirstHomology {
            torsion: vec![],
            free_rank: 3
        }
    );
    assert_eq!(r.theta_rank, 1);
    assert!(r.chern_forms.is_empty());
    assert!(r.splitting.is_feasible());
    assert_eq!(r.aut_image_dim, 1);
    assert_eq!(
        theta_lattice(&t, &default_tf(&t)).unwrap().basis(),
        &int_matrix(&[&[1], &[0]])
    );
}

#[test]
fn product_torus_invariants() {
    let t = samples::thurston_c0();
    let r = report(&t, None).unwrap();
    assert_eq!((r.betti1, r.theta_rank, r.h1.free_rank), (4, 0, 4));
    assert!(r.pi1_abelian);
    assert_eq!(r.aut_image_dim, 2);
    match r.splitting {
        Splitting::Feasible { t_f, .. } => assert_eq!(t_f, Subtorus::full(2)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn delzant_invariants() {
    let d = samples::delzant_triangle();
    assert!(is_hamiltonian(&d));
    assert_eq!(euler_characteristic(&d), 3);
    assert_eq!(betti1(&d).unwrap(), 0);
    assert_eq!(aut_image_dim(&d).unwrap(), 0);
    let r = report(&d, None).unwrap();
    assert_eq!(r.h1.to_string(), "0");
    let square = DelzantPolytope::from_vertices(
        2,
        &[
            rat_vec(&[-1, -1]),
            rat_vec(&[1, -1]),
            rat_vec(&[-1, 1]),
            rat_vec(&[1, 1]),
        ],
    )
    .unwrap();
    let sq = IngredientList::new(
        2,
        d.sigma_t().clone(),
        d.t_h_basis().clone(),
        square,
        vec![],
        vec![],
        vec![],
    )
    .unwrap();
    assert_eq!(euler_characteristic(&sq), 4);
    assert!(!is_hamiltonian(&samples::rank_two_sigma()));
    assert_eq!(hamiltonian_subalgebra(&d).dim(), 2);
}

#[test]
fn benoist_invariants() {
    let b = samples::benoist_cex();
    let r = report(&b, None).unwrap();
    assert_eq!(r.dim_m, 8);
    assert_eq!(r.theta_rank, 0);
    assert_eq!(r.betti1, 4);
    assert!(r.pi1_abelian);
    assert_eq!(
        r.chern_forms,
        vec![
            int_matrix(&[&[0, 1], &[-1, 0]]),
            int_matrix(&[&[0, 0], &[0, 0]])
        ]
    );
    assert_eq!(
        r.splitting,
        Splitting::Infeasible {
            pair: (1, 2),
            component: 1,
            a: Int::from(1),
            b: vec![Int::from(0), Int::from(0)]
        }
    );
    assert!(r.to_string().contains("splitting: infeasible at c(1,2)"));
}

#[test]
fn splitting_with_a_shift() {
    // c(ε¹, ε²) = Y + Z with Y = e₁, Z = e₂: the complement spanned by e₁ + e₂ works.
    let c = c_from_pairs(2, 3, &[(1, 2, rat_vec(&[1, 1, 0]))]).unwrap();
    let list = IngredientList::new(
        3,
        crate::linalg::Matrix::zeros(3, 3),
        int_matrix(&[&[1], &[0], &[0]]),
        DelzantPolytope::from_vertices(1, &[vec![rat(-1, 2)], vec![rat(1, 2)]]).unwrap(),
        vec![rat_vec(&[1, 0]), rat_vec(&[0, 1])],
        c,
        vec![TorusElement::identity(3); 2],
    )
    .unwrap();
    match splitting(&list).unwrap() {
        Splitting::Feasible { t_f, shift } => {
            assert_eq!(shift, int_matrix(&[&[1, 0]]));
            assert!(chern_forms(&list, &t_f)
                .unwrap()
                .iter()
                .all(|m| m.is_zero()));
            assert!(!chern_forms(&list, &default_tf(&list)).unwrap()[0].is_zero());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn equality_decisions() {
    let t = samples::thurston();
    assert!(lists_equal(&t, &t).unwrap());
    assert!(!lists_equal(&t, &samples::thurston_c0()).unwrap());
    let twisted = t
        .with_tau(HolonomyMap::new(vec![
            TorusElement::new(vec![rat(1, 3), rat(1, 7)]),
            TorusElement::identity(2),
        ]))
        .unwrap();
    assert!(lists_equal(&t, &twisted).unwrap());
    assert!(!lists_equal(&t, &samples::delzant_triangle()).unwrap());
}

/// Order of `(ℤ^k / Θ)` and its exponent by coset enumeration in a box.
fn brute_quotient(theta: &IntegerLattice, k: usize, det: i64) -> (usize, i64) {
    let mut reps: Vec<Vec<Int>> = Vec::new();
    let total = (det as usize).pow(k as u32);
    for mut code in 0..total {
        let v: Vec<Int> = (0..k)
            .map(|_| {
                let x = (code % det as usize) as i64;
                code /= det as usize;
                Int::from(x)
            })
            .collect();
        let new = reps.iter().all(|r| {
            let diff: Vec<Int> = v.iter().zip(r).map(|(a, b)| a - b).collect();
            !theta.contains(&diff)
        });
        if new {
            reps.push(v);
        }
    }
    let exponent = reps
        .iter()
        .map(|r| {
            (1..=det)
                .find(|&m| theta.contains(&r.iter().map(|x| x * Int::from(m)).collect::<Vec<_>>()))
                .unwrap()
        })
        .max()
        .unwrap_or(1);
    (reps.len(), exponent)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn report_consistency(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let list = random_list(&mut rng, &GeneratorConfig::default());
        let r = report(&list, None).unwrap();
        prop_assert_eq!(r.betti1, r.h1.free_rank as i64);
        if list.d_n() > 0 {
            prop_assert_eq!(r.euler, 0);
        }
        if let Splitting::Feasible { t_f, .. } = &r.splitting {
            prop_assert!(chern_forms(&list, t_f).unwrap().iter().all(|m| m.is_zero()));
        }
    }

    #[test]
    fn theta_rank_ignores_the_complement(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let list = random_list(&mut rng, &GeneratorConfig::default());
        let dh = list.d_h();
        let df = list.torus_dim() - dh;
        let base = theta_rank(&list).unwrap();
        for _ in 0..3 {
            let shift = crate::linalg::Matrix::from_rows(
                df,
                (0..dh).map(|_| (0..df).map(|_| Int::from(rng.gen_range(-3..=3))).collect()).collect(),
            );
            let shift = if dh == 0 { crate::linalg::Matrix::zeros(0, df) } else { shift };
            let t_f = complement_shifted(list.t_h(), &shift).unwrap();
            prop_assert_eq!(theta_lattice(&list, &t_f).unwrap().rank(), base);
            prop_assert_eq!(h1(&list, &t_f).unwrap().free_rank as i64, betti1(&list).unwrap());
        }
    }

    #[test]
    fn h1_matches_coset_enumeration(entries in proptest::collection::vec(-3i64..=3, 9)) {
        // d = 3, σ^t = 0, free: the three c values generate Θ directly.
        let cvals: Vec<Vec<Rational>> = entries.chunks(3).map(rat_vec).collect();
        let c = c_from_pairs(3, 3, &[(1, 2, cvals[0].clone()), (1, 3, cvals[1].clone()), (2, 3, cvals[2].clone())]).unwrap();
        let list = IngredientList::new(
            3,
            crate::linalg::Matrix::zeros(3, 3),
            crate::linalg::Matrix::zeros(3, 0),
            DelzantPolytope::point(),
            (0..3).map(|i| crate::linalg::unit_vec(3, i)).collect(),
            c,
            vec![TorusElement::identity(3); 3],
        ).unwrap();
        let t_f = Subtorus::full(3);
        let theta = theta_lattice(&list, &t_f).unwrap();
        let h = h1(&list, &t_f).unwrap();
        if theta.rank() == 3 {
            let det = determinant(&to_qmatrix(theta.basis())).abs().to_integer();
            let det = i64::try_from(&det).unwrap();
            prop_assume!(det <= 12);
            let (order, exponent) = brute_quotient(&theta, 3, det);
            let prod: Int = h.torsion.iter().product();
            prop_assert_eq!(Int::from(order as i64), prod);
            prop_assert_eq!(Int::from(exponent), h.torsion.last().cloned().unwrap_or(Int::from(1)));
            prop_assert_eq!(h.free_rank, 3);
        } else {
            prop_assert_eq!(h.free_rank, 3 - theta.rank() + 3);
        }
    }

    #[test]
    fn equality_detects_twists_and_mutations(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let list = random_list(&mut rng, &GeneratorConfig::default());
        let alpha = random_alpha(&mut rng, &list);
        let twisted = list.with_tau(list.tau().twist(&alpha)).unwrap();
        prop_assert!(lists_equal(&list, &twisted).unwrap());
        let n = list.d_n();
        if n >= 2 {
            let mut c: Vec<Vec<Vec<Rational>>> = (0..n).map(|i| (0..n).map(|j| list.c_l(i, j).to_vec()).collect()).collect();
            c[0][1][0] += Rational::one();
            c[1][0][0] -= Rational::one();
            let mutated = IngredientList::new(list.torus_dim(), list.sigma_t().clone(), list.t_h_basis().clone(),
                list.delta().clone(), list.p_basis().to_vec(), c, list.tau().values().to_vec()).unwrap();
            prop_assert!(!lists_equal(&list, &mutated).unwrap());
        }
    }
}
