use std::sync::Arc;

use super::algebra::{alg_pushout, AlgebraLike, FinAlgebra, TensorAlgebra};
use super::*;
use crate::coalgebra::group_algebra;
use crate::error::Error;
use crate::exactlin::{vector, Field, Matrix, Subspace};
use crate::pcd::{classify, PartialComoduleDatum};
use crate::samples::{affine_b_prime, cj_c2, global_kc2, partial_torsor};
use crate::setpartial::FiniteMonoid;

fn k_one(pca: &PartialComoduleAlgebra) -> Subspace {
    Subspace::span(pca.algebra.field(), pca.dim(), [pca.algebra.one()])
}

#[test]
fn trivial_comodule_algebra_is_everything_at_once() {
    let q = Field::Q;
    let h = Arc::new(group_algebra(q, &FiniteMonoid::cyclic(2)).unwrap().bialgebra);
    let a = FinAlgebra::truncated_polynomial(q, 3);
    let pca = trivial_comodule_algebra(&a, &h, "kC2").unwrap();
    assert_eq!(algebra_coinvariants(&pca).dim(), 3);
    assert!(classify_algebra_comodule(&pca).geometric);
    let all = Subspace::full(q, 3);
    let g = canonical_map(&pca, &all).unwrap();
    assert_eq!((g.tensor_dim, g.xbh_dim), (3, 3));
    assert!(g.can_bijective);
    assert!(g.can.is_identity());
}

#[test]
fn global_kc2_is_hopf_galois() {
    let (_, pca) = global_kc2(Field::Q).unwrap();
    let coinv = algebra_coinvariants(&pca);
    assert_eq!(coinv, k_one(&pca));
    let g = canonical_map(&pca, &coinv).unwrap();
    assert_eq!((g.tensor_dim, g.can_rank), (4, 4));
    assert!(g.can_bijective);
    let c = coring_structure(&pca, Some(&g)).unwrap();
    assert!(c.passed(), "{c:?}");
    assert_eq!(c.can_compatible, Some(true));
    assert_eq!(c.dim, 4);
}

#[test]
fn partial_torsor_is_galois() {
    let (_, pca) = partial_torsor(Field::Q).unwrap();
    assert_eq!((pca.dim(), pca.datum.dim_xbh()), (1, 1));
    assert_eq!(pca.datum.ker_pi().dim(), 1);
    assert!(classify(&pca.datum).geometric);
    let coinv = algebra_coinvariants(&pca);
    assert_eq!(coinv.dim(), 1);
    let g = canonical_map(&pca, &coinv).unwrap();
    assert!(g.can_bijective);
    assert_eq!(g.can_matrix, vec![vec!["1".to_string()]]);
    let c = coring_structure(&pca, Some(&g)).unwrap();
    assert!(c.passed());
    assert_eq!(c.dim, 1);
    for n in 1..=2 {
        let r = adjunction_check(&BaseModule::free(&pca, &coinv, n), &coinv, &pca).unwrap();
        assert!(r.triangle_left && r.triangle_right && r.unit_iso && r.counit_iso && r.minimal, "{r:?}");
    }
}

#[test]
fn torsor_datum_is_a_quotient_of_the_regular_one() {
    let (h, pca) = partial_torsor(Field::Q).unwrap();
    // ker π_B = span{1 ⊗ δ_g}
    let e = vector::unit(Field::Q, 2, 1);
    assert_eq!(*pca.datum.ker_pi(), Subspace::span(Field::Q, 2, [e]));
    assert!(h.is_commutative());
}

#[test]
fn cj_instance() {
    let (_, r) = cj_c2(Field::Q).unwrap();
    let q = Field::Q;
    assert_eq!(r.idempotent, vec![q.frac(1, 2), q.frac(1, 2)]);
    assert_eq!(r.datum.dim_xbh(), 1);
    assert!(r.classification.quasi);
    assert_eq!(r.k, r.l);
    let pca = r.comodule_algebra.expect("commutative, so ker π is an ideal");
    assert!(classify_algebra_comodule(&pca).geometric);
}

#[test]
fn cj_global_and_failures() {
    let q = Field::Q;
    let (h, _) = global_kc2(q).unwrap();
    let r = check_cj(&h, "kC2", &h.algebra, h.coalgebra.delta()).unwrap();
    assert_eq!(r.idempotent, vector::tensor(&h.one(), &h.one()));
    assert!(r.datum.is_global());
    // ρ(1) = 1 ⊗ (1+g)/3 is not idempotent
    let bad = Matrix::from_columns(q, 2, &[vec![q.frac(1, 3), q.frac(1, 3)]]);
    let e = check_cj(&h, "kC2", &FinAlgebra::ground(q), &bad).unwrap_err();
    assert!(matches!(e, Error::CjAxiomFails { axiom: 1, .. }));
    // ρ(1) = 1 ⊗ g fails before counitality: g² = 1 ≠ g
    let g = Matrix::from_ints(q, 2, 1, &[0, 1]);
    assert!(matches!(check_cj(&h, "kC2", &FinAlgebra::ground(q), &g), Err(Error::CjAxiomFails { axiom: 1, .. })));
    // ρ(1) = 0: idempotent and multiplicative, but not counital
    let z = Matrix::zeros(q, 2, 1);
    assert!(matches!(check_cj(&h, "kC2", &FinAlgebra::ground(q), &z), Err(Error::CjAxiomFails { axiom: 3, .. })));
}

#[test]
fn b_prime_is_a_geometric_comodule_algebra_with_a_coring() {
    let (_, pca) = affine_b_prime().unwrap();
    assert_eq!(pca.dim(), 5);
    assert_eq!(pca.datum.dim_xbh(), 25);
    // geometric only once the pushouts are taken in algebras
    let plain = classify(&pca.datum);
    assert!(plain.quasi && !plain.lax);
    assert!(classify_algebra_comodule(&pca).geometric);
    let c = coring_structure(&pca, None).unwrap();
    assert!(c.passed(), "{c:?}");
}

#[test]
fn affine_datum_is_not_a_comodule_algebra() {
    let (h, pca) = affine_b_prime().unwrap();
    let f = h.field();
    let xy = h.coalgebra.labels().iter().position(|l| l == "x*y").unwrap();
    let (b, d) = crate::samples::quotient_comodule_datum(&h, "k[x,y]_3", &[vector::unit(f, 9, xy)]).unwrap();
    assert!(matches!(check_comodule_algebra(&b, &d, &h), Err(Error::KernelNotIdeal(_))));
    assert!(pca.datum.dim_xbh() < d.dim_xbh());
}

#[test]
fn alg_pushout_on_the_affine_kernel() {
    // f = ρ_B ⊗ H restricted: the ideal generated by one vector exceeds its span
    let (h, _) = affine_b_prime().unwrap();
    let f = h.field();
    let xy = h.coalgebra.labels().iter().position(|l| l == "x*y").unwrap();
    let id = Matrix::identity(f, 9);
    let hh = &h.algebra;
    let kill_xy = super::algebra::quotient_algebra(
        hh,
        super::algebra::two_sided_ideal(hh, &Subspace::span(f, 9, [vector::unit(f, 9, xy)])),
    );
    let p = alg_pushout(&id, &kill_xy.projection, hh, hh, &kill_xy.algebra).unwrap();
    assert_eq!(p.algebra.dim(), 5);
    let delta = h.coalgebra.delta();
    let line = Subspace::span(f, 81, [delta.apply(&vector::unit(f, 9, xy))]);
    let hh2 = TensorAlgebra::new(hh, hh);
    assert!(super::algebra::two_sided_ideal(&hh2, &line).dim() > 1);
}

#[test]
fn regular_module_and_coinvariants_via_hom() {
    for pca in [global_kc2(Field::Q).unwrap().1, partial_torsor(Field::Q).unwrap().1, affine_b_prime().unwrap().1] {
        let m = regular_module(&pca).unwrap();
        assert!(is_minimal(&m));
        assert_eq!(hom_from_algebra(&m, &pca), module_coinvariants(&m, &pca));
        assert!(evaluation_surjective(&m, &pca));
    }
}

#[test]
fn prhm2_violation_is_refused() {
    let q = Field::Q;
    let (_, pca) = global_kc2(q).unwrap();
    // ρ_M(m) = m ⊗ 1 on M = A: the trivial comodule on the regular A-module
    let d = PartialComoduleDatum::new(
        pca.datum.coalgebra().clone(),
        "kC2",
        Matrix::identity(q, 4),
        Matrix::from_ints(q, 4, 2, &[1, 0, 0, 0, 0, 1, 0, 0]),
    )
    .unwrap();
    let e = check_relative_hopf_module(&d, pca.algebra.mu(), &pca).unwrap_err();
    assert!(matches!(e, Error::PrhmFails { axiom: 2, .. }));
}

#[test]
fn induced_modules_over_kc2() {
    let q = Field::Q;
    let (_, pca) = global_kc2(q).unwrap();
    let base = k_one(&pca);
    let n = BaseModule::vector_space(&pca, 2);
    let ind = induce_hopf_module(&n, &base, &pca).unwrap();
    assert_eq!(ind.module.dim(), 4);
    assert!(is_minimal(&ind.module));
    let r = adjunction_check(&n, &base, &pca).unwrap();
    assert!(r.triangle_left && r.triangle_right && r.unit_iso && r.counit_iso && r.minimal);
}

#[test]
fn enlarged_kernels_give_non_minimal_modules() {
    let q = Field::Q;
    let (_, pca) = global_kc2(q).unwrap();
    let base = k_one(&pca);
    let m = induce_hopf_module(&BaseModule::vector_space(&pca, 2), &base, &pca).unwrap().module;
    // v = m0 ⊗ (e - g) lies in ker(M ⊗ ε)
    let v = vector::tensor(&vector::unit(q, 4, 0), &[q.one(), q.int(-1)]);
    let bigger = enlarge_kernel(&m, &v, &pca).unwrap();
    assert!(bigger.datum.dim_xbh() < m.datum.dim_xbh());
    assert!(!is_minimal(&bigger));
    let z = counit(&bigger, &base, &pca).unwrap();
    assert!(!z.is_iso());
}

#[test]
fn induction_preserves_equalizers_over_a_field() {
    let q = Field::Q;
    let (_, pca) = global_kc2(q).unwrap();
    // f, g: k^3 -> k^2 with equalizer of dimension 1; induced equalizer has dimension 2 = 1 · dim A
    let f = Matrix::from_ints(q, 2, 3, &[1, 0, 1, 0, 1, 1]);
    let g = Matrix::from_ints(q, 2, 3, &[1, 0, 0, 0, 1, 0]);
    let eq = f.sub(&g).kernel();
    let ind = |m: &Matrix| m.kron(&Matrix::identity(q, pca.dim()));
    let induced_eq = ind(&f).sub(&ind(&g)).kernel();
    assert_eq!(induced_eq.dim(), eq.dim() * pca.dim());
}
