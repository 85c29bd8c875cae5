//! Property tests: each case draws a seed and builds a small random instance from it.

use std::sync::Arc;

use parcomod::coalgebra::{function_algebra, group_algebra, poly_truncation, truncation_inclusion};
use parcomod::exactlin::{kernel, pushout, tensor_map, Field, Matrix, Subspace};
use parcomod::hopfgalois::algebra::AlgebraLike;
use parcomod::hopfgalois::{adjunction_check, algebra_coinvariants, BaseModule};
use parcomod::monoidal::tensor_pcd;
use parcomod::pcd::{classify, finite_subcomodule_containing, restrict_to_subspace};
use parcomod::samples::{
    global_kc2, partial_torsor, random_invertible, random_quasi, random_quotient_of_global, random_surjection,
    random_vector,
};
use parcomod::setpartial::{
    build_bullet_sets, compose_partial_maps, globality, restrict_global, FiniteMonoid, PartialActionDatum, PartialMap,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn f3() -> Field {
    Field::fp(3).unwrap()
}

fn groups() -> Vec<FiniteMonoid> {
    vec![FiniteMonoid::cyclic(2), FiniteMonoid::cyclic(3), FiniteMonoid::klein4()]
}

fn random_partial_action(rng: &mut ChaCha8Rng) -> PartialActionDatum {
    let gs = groups();
    let g = gs[rng.gen_range(0..gs.len())].clone();
    let n = rng.gen_range(1..=3);
    let mut domains = Vec::new();
    let mut maps = Vec::new();
    for _ in 0..g.size() {
        let dom: u64 = rng.gen_range(0..1 << n);
        domains.push(dom);
        maps.push((0..n).map(|x| (dom >> x & 1 == 1).then(|| rng.gen_range(0..n))).collect());
    }
    PartialActionDatum::new(g, n, domains, maps).unwrap()
}

fn random_partial_map(rng: &mut ChaCha8Rng, s: usize, t: usize) -> PartialMap {
    let map = (0..s).map(|_| rng.gen_bool(0.7).then(|| rng.gen_range(0..t))).collect();
    PartialMap::new(s, t, map).unwrap()
}

/// Brute-force kernel size over GF(3): number of vectors `x` with `Mx = 0`.
fn kernel_count_gf3(m: &Matrix) -> usize {
    let f = m.field();
    let n = m.cols();
    (0..3usize.pow(n as u32))
        .filter(|code| {
            let x: Vec<_> = (0..n).map(|i| f.int((code / 3usize.pow(i as u32) % 3) as i64)).collect();
            m.apply(&x).iter().all(|c| c.is_zero())
        })
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_matches_brute_force_kernel(seed in any::<u64>(), rows in 1usize..4, cols in 1usize..6) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let m = Matrix::random(f3(), rows, cols, &mut r);
        prop_assert_eq!(kernel_count_gf3(&m), 3usize.pow((cols - m.rank()) as u32));
        prop_assert_eq!(kernel(&m).dim(), cols - m.rank());
    }

    #[test]
    fn pushout_commutes_with_expected_dimension(seed in any::<u64>(), u in 1usize..6, v in 1usize..6, w in 1usize..6) {
        let f5 = Field::fp(5).unwrap();
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let f = Matrix::random(f5, v, u, &mut r);
        let g = random_surjection(f5, u, w.min(u), &mut r);
        let p = pushout(&f, &g).unwrap();
        prop_assert_eq!(p.gbar().mul(&f), p.fbar.mul(&g));
        let fker = kernel(&g).image_under(&f);
        prop_assert_eq!(p.quotient.dim(), v - fker.dim());
    }

    #[test]
    fn tensor_map_is_functorial(seed in any::<u64>(), a in 1usize..3, b in 1usize..3, c in 1usize..3) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let q = Field::Q;
        let (f, f2) = (Matrix::random(q, a, b, &mut r), Matrix::random(q, b, c, &mut r));
        let (g, g2) = (Matrix::random(q, c, a, &mut r), Matrix::random(q, a, b, &mut r));
        prop_assert_eq!(tensor_map(&f.mul(&f2), &g.mul(&g2)), tensor_map(&f, &g).mul(&tensor_map(&f2, &g2)));
    }

    #[test]
    fn subspace_form_is_canonical(seed in any::<u64>(), n in 1usize..6, k in 1usize..5) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let f = f3();
        let gens: Vec<_> = (0..k).map(|_| random_vector(f, n, &mut r)).collect();
        let mix = random_invertible(f, k, &mut r);
        let mixed: Vec<_> = (0..k)
            .map(|j| {
                let mut v = vec![f.zero(); n];
                for (i, g) in gens.iter().enumerate() {
                    for (x, y) in v.iter_mut().zip(g) {
                        x.add_mul(mix.get(i, j), y);
                    }
                }
                v
            })
            .collect();
        prop_assert_eq!(Subspace::span(f, n, gens), Subspace::span(f, n, mixed));
    }

    #[test]
    fn quotients_of_globals_are_geometric(seed in any::<u64>(), which in 0usize..3) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let f = f3();
        let c = Arc::new(match which {
            0 => group_algebra(f, &FiniteMonoid::cyclic(3)).unwrap().bialgebra.coalgebra,
            1 => function_algebra(f, &FiniteMonoid::cyclic(2)).unwrap().bialgebra.coalgebra,
            _ => poly_truncation(f, 1, 2, true).unwrap(),
        });
        if let Some((_, y, _)) = random_quotient_of_global(&c, "H", 4, &mut r) {
            let rep = classify(&y);
            prop_assert!(rep.geometric && rep.lax && rep.quasi);
        }
    }

    #[test]
    fn classification_flags_are_monotone(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let g = FiniteMonoid::klein4();
        let h = Arc::new(group_algebra(f3(), &g).unwrap().bialgebra);
        if let Some(x) = random_quasi(&h, &g, "kK4", 3, &mut r) {
            let rep = classify(&x);
            prop_assert!(rep.quasi);
            prop_assert!(!rep.geometric || rep.lax);
            prop_assert!(!rep.lax || rep.quasi);
        }
    }

    #[test]
    fn finite_subcomodule_contains_vector(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let c = Arc::new(group_algebra(f3(), &FiniteMonoid::cyclic(2)).unwrap().bialgebra.coalgebra);
        if let Some((_, x, _)) = random_quotient_of_global(&c, "kC2", 4, &mut r) {
            if x.dim_x() > 0 {
                let v = random_vector(f3(), x.dim_x(), &mut r);
                let (_, y) = finite_subcomodule_containing(&x, &v).unwrap();
                prop_assert!(y.contains(&v));
                prop_assert!(restrict_to_subspace(&x, &y.inclusion()).is_ok());
            }
        }
    }

    #[test]
    fn set_action_hierarchy(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let d = random_partial_action(&mut r);
        let (pa, lpa, qpa) = (d.check_pa().unwrap().holds, d.check_lpa().unwrap().holds, d.check_qpa().unwrap().holds);
        prop_assert!(!pa || lpa);
        prop_assert!(!lpa || qpa);
        if lpa {
            prop_assert_eq!(pa, d.images_in_targets());
            prop_assert_eq!(pa, build_bullet_sets(&d).theta_bar_iso);
        }
        if pa {
            prop_assert!(d.bijections_hold());
            prop_assert!(globality(&d).unwrap().agree());
        }
    }

    #[test]
    fn restrictions_of_global_actions_are_partial(seed in any::<u64>(), subset in 1u64..8) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        // C3 rotating or fixing {0, 1, 2}
        let g = FiniteMonoid::cyclic(3);
        let action: Vec<Vec<usize>> = if r.gen_bool(0.5) {
            (0..3).map(|k| (0..3).map(|x| (x + k) % 3).collect()).collect()
        } else {
            vec![vec![0, 1, 2]; 3]
        };
        let d = restrict_global(&g, &action, subset).unwrap();
        prop_assert!(d.check_pa().unwrap().holds);
        prop_assert!(globality(&d).unwrap().agree());
    }

    #[test]
    fn partial_maps_form_a_category(seed in any::<u64>(), a in 1usize..5, b in 1usize..5, c in 1usize..5, d in 1usize..5) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let f = random_partial_map(&mut r, a, b);
        let g = random_partial_map(&mut r, b, c);
        let h = random_partial_map(&mut r, c, d);
        let left = compose_partial_maps(&compose_partial_maps(&f, &g).unwrap(), &h).unwrap();
        let right = compose_partial_maps(&f, &compose_partial_maps(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(compose_partial_maps(&PartialMap::identity(a), &f).unwrap(), f.clone());
        prop_assert_eq!(compose_partial_maps(&f, &PartialMap::identity(b)).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn truncation_inclusion_is_coalgebra_map(d in 1usize..3, vars in 1usize..3, commutative in any::<bool>()) {
        let f = f3();
        let small = poly_truncation(f, vars, d, commutative).unwrap();
        let big = poly_truncation(f, vars, d + 1, commutative).unwrap();
        let i = truncation_inclusion(f, vars, d, commutative).unwrap();
        prop_assert_eq!(big.delta().mul(&i), tensor_map(&i, &i).mul(small.delta()));
        prop_assert_eq!(big.epsilon().mul(&i), small.epsilon().clone());
    }

    #[test]
    fn group_algebras_cocommutative_function_algebras_commutative(which in 0usize..3) {
        let g = &groups()[which];
        prop_assert!(group_algebra(f3(), g).unwrap().bialgebra.coalgebra.is_cocommutative());
        prop_assert!(function_algebra(f3(), g).unwrap().bialgebra.is_commutative());
    }

    #[test]
    fn tensor_of_quasi_is_quasi_and_associative(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let g = FiniteMonoid::cyclic(2);
        let h = Arc::new(group_algebra(f3(), &g).unwrap().bialgebra);
        let xs: Vec<_> = (0..3).filter_map(|_| random_quasi(&h, &g, "kC2", 2, &mut r)).collect();
        if let [x, y, z] = &xs[..] {
            let (xy, _) = tensor_pcd(x, y, &h).unwrap();
            prop_assert!(classify(&xy).quasi);
            let (yz, _) = tensor_pcd(y, z, &h).unwrap();
            let (l, _) = tensor_pcd(&xy, z, &h).unwrap();
            let (rr, _) = tensor_pcd(x, &yz, &h).unwrap();
            prop_assert_eq!(l.dim_x(), rr.dim_x());
            prop_assert_eq!(l.dim_xbh(), rr.dim_xbh());
        }
    }

    #[test]
    fn induction_triangle_identities(torsor in any::<bool>(), coinvariant_base in any::<bool>(), copies in 1usize..3) {
        let (_, pca) = if torsor { partial_torsor(Field::Q).unwrap() } else { global_kc2(Field::Q).unwrap() };
        let base = if coinvariant_base {
            algebra_coinvariants(&pca)
        } else {
            Subspace::span(Field::Q, pca.dim(), [pca.algebra.one()])
        };
        let n = BaseModule::free(&pca, &base, copies);
        let a = adjunction_check(&n, &base, &pca).unwrap();
        prop_assert!(a.triangle_left && a.triangle_right);
        // both algebras are Galois over their coinvariants, which are k
        prop_assert!(a.unit_iso);
        prop_assert!(a.minimal && a.counit_iso);
    }
}
