//! The `A`-coring `C = A•H` of a geometric partial comodule algebra.
//!
//! As a left `A`-module `C = (A⊗H)/ker π` is generated by `π(1⊗h)`, so for a right
//! `A`-module `M` we present `M ⊗_A C` as `(M⊗H)/span{m·k : k ∈ ker π}` where
//! `m·(Σ a_i⊗h_i) = Σ m a_i ⊗ h_i`. Iterating gives `C ⊗_A C ⊗_A C`.

use serde::Serialize;

use super::algebra::AlgebraLike;
use super::comodule_algebra::classify_algebra_comodule;
use super::comodule_algebra::PartialComoduleAlgebra;
use super::module::{can_on, GaloisReport};
use crate::error::{Error, Result};
use crate::exactlin::{apply_left, apply_right, vector, QuotientPresentation, Scalar, Subspace, Vector};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CoringReport {
    pub dim: usize,
    /// `dim C ⊗_A C`
    pub tensor2_dim: usize,
    /// `dim C ⊗_A C ⊗_A C`
    pub tensor3_dim: usize,
    /// `Δ_C` and `ε_C` vanish on `ker π`
    pub well_defined: bool,
    pub comultiplication_bilinear: bool,
    pub counit_bilinear: bool,
    pub coassociative: bool,
    pub left_counit: bool,
    pub right_counit: bool,
    /// `can: A ⊗_B A -> C` respects both coring structures (only when `A/B` is Galois)
    pub can_compatible: Option<bool>,
}

impl CoringReport {
    pub fn passed(&self) -> bool {
        self.well_defined
            && self.comultiplication_bilinear
            && self.counit_bilinear
            && self.coassociative
            && self.left_counit
            && self.right_counit
            && self.can_compatible != Some(false)
    }
}

/// `M ⊗_A C` for a right module given by `act(m, a)` on basis indices of `M`.
struct OverC<'a> {
    pca: &'a PartialComoduleAlgebra,
    dim_m: usize,
    quotient: QuotientPresentation,
}

impl<'a> OverC<'a> {
    fn new(pca: &'a PartialComoduleAlgebra, dim_m: usize, act: &dyn Fn(usize, &[Scalar]) -> Vector) -> OverC<'a> {
        let f = pca.algebra.field();
        let h = pca.dim_h();
        let mut rel = Subspace::zero(f, dim_m * h);
        for k in pca.kernel_generators() {
            for m in 0..dim_m {
                rel.insert(Self::act_leg(
                    pca,
                    dim_m,
                    &|v, a| act_vec(act, dim_m, v, a),
                    &vector::unit(f, dim_m, m),
                    &k,
                ));
            }
        }
        OverC { pca, dim_m, quotient: rel.quotient() }
    }

    /// `m · Σ a_i⊗h_i = Σ m a_i ⊗ h_i` in `M ⊗ H`.
    fn act_leg(
        pca: &PartialComoduleAlgebra,
        dim_m: usize,
        act: &dyn Fn(&[Scalar], &[Scalar]) -> Vector,
        m: &[Scalar],
        k: &[Scalar],
    ) -> Vector {
        let f = pca.algebra.field();
        let (na, h) = (pca.dim(), pca.dim_h());
        let mut out = vector::zeros(f, dim_m * h);
        for (idx, x) in k.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (a, hh) = (idx / h, idx % h);
            let ma = act(m, &vector::unit(f, na, a));
            vector::axpy(&mut out, x, &vector::tensor(&ma, &vector::unit(f, h, hh)));
        }
        out
    }

    fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// `m ⊗ w` for `w ∈ C`.
    fn tensor(&self, act: &dyn Fn(&[Scalar], &[Scalar]) -> Vector, m: &[Scalar], w: &[Scalar]) -> Vector {
        let s = self.pca.datum.section().apply(w);
        self.quotient.project(&Self::act_leg(self.pca, self.dim_m, act, m, &s))
    }

    /// The right `A`-action on `M ⊗_A C`: `(m ⊗ π(1⊗h)) a = Σ m a_i ⊗ π(1⊗h h_i)` with
    /// `sρ(a) = Σ a_i⊗h_i`.
    fn right_act(&self, act: &dyn Fn(&[Scalar], &[Scalar]) -> Vector, x: &[Scalar], a: &[Scalar]) -> Vector {
        let f = self.pca.algebra.field();
        let (na, h) = (self.pca.dim(), self.pca.dim_h());
        let v = self.quotient.lift(x);
        let r = self.pca.datum.lift_rho(a);
        let mut out = vector::zeros(f, self.dim_m * h);
        for (iv, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (m, hh) = (iv / h, iv % h);
            let em = vector::unit(f, self.dim_m, m);
            for (ir, d) in r.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let (ai, hi) = (ir / h, ir % h);
                let ma = act(&em, &vector::unit(f, na, ai));
                let prod = self.pca.bialgebra.algebra.basis_mul(hh, hi);
                vector::axpy(&mut out, &(c * d), &vector::tensor(&ma, &prod));
            }
        }
        self.quotient.project(&out)
    }
}

fn act_vec(act: &dyn Fn(usize, &[Scalar]) -> Vector, dim_m: usize, v: &[Scalar], a: &[Scalar]) -> Vector {
    let f = a[0].field();
    let mut out: Option<Vector> = None;
    for (i, x) in v.iter().enumerate().take(dim_m) {
        if x.is_zero() {
            continue;
        }
        let y = vector::scale(x, &act(i, a));
        out = Some(match out {
            None => y,
            Some(o) => vector::add(&o, &y),
        });
    }
    out.unwrap_or_else(|| {
        let n = act(0, a).len();
        vector::zeros(f, n)
    })
}

/// Builds `Δ_C = p ∘ (A•Δ)` and `ε_C = A•ε` and checks the coring axioms. With a Galois
/// report, also checks that `can` respects comultiplication and counit.
///
/// Requires `A` to be geometric as an algebra-comodule (pushouts in algebras), which
/// geometric comodule algebras are; `Δ_C` then only needs `K2` inside the left ideal
/// generated by `K1`, and that is checked as `well_defined`.
pub fn coring_structure(pca: &PartialComoduleAlgebra, galois: Option<&GaloisReport>) -> Result<CoringReport> {
    if !classify_algebra_comodule(pca).geometric {
        return Err(Error::PreconditionNotGeometric);
    }
    let f = pca.algebra.field();
    let (na, h, c) = (pca.dim(), pca.dim_h(), pca.datum.dim_xbh());
    let d = &pca.datum;
    let right = |w: &[Scalar], a: &[Scalar]| pca.right_act(w, a);
    let right_i = |i: usize, a: &[Scalar]| pca.right_act(&vector::unit(f, c, i), a);
    let c2 = OverC::new(pca, c, &right_i);
    let right2 = |x: &[Scalar], a: &[Scalar]| c2.right_act(&right, x, a);
    let right2_i = |i: usize, a: &[Scalar]| right2(&vector::unit(f, c2.dim(), i), a);
    let c3 = OverC::new(pca, c2.dim(), &right2_i);

    let delta = |w: &[Scalar]| c2.quotient.project(&d.pi_delta(&d.section().apply(w)));
    let eps = |w: &[Scalar]| apply_right(na, d.coalgebra().epsilon(), &d.section().apply(w));
    let well_defined = d.ker_pi().basis().iter().all(|k| {
        vector::is_zero(&c2.quotient.project(&d.pi_delta(k)))
            && vector::is_zero(&apply_right(na, d.coalgebra().epsilon(), k))
    });
    let units_c: Vec<Vector> = (0..c).map(|i| vector::unit(f, c, i)).collect();
    let units_a: Vec<Vector> = (0..na).map(|i| vector::unit(f, na, i)).collect();

    // bilinearity
    let left2 = |a: &[Scalar], x: &[Scalar]| {
        let v = c2.quotient.lift(x);
        c2.quotient.project(&apply_left(&pca_left_matrix(pca, a), h, &v))
    };
    let mut comultiplication_bilinear = true;
    let mut counit_bilinear = true;
    for w in &units_c {
        let dw = delta(w);
        let ew = eps(w);
        for a in &units_a {
            if delta(&pca.left_act(a, w)) != left2(a, &dw) || delta(&right(w, a)) != right2(&dw, a) {
                comultiplication_bilinear = false;
            }
            if eps(&pca.left_act(a, w)) != pca.algebra.left_mul(a).apply(&ew)
                || eps(&right(w, a)) != pca.algebra.right_mul(a).apply(&ew)
            {
                counit_bilinear = false;
            }
        }
    }

    // counit laws on the representative (π⊗H)(A⊗Δ)s(w) ∈ C ⊗ H
    let mut left_counit = true;
    let mut right_counit = true;
    let mut coassociative = true;
    let hunits: Vec<Vector> = (0..h).map(|i| vector::unit(f, h, i)).collect();
    let eps_h: Vec<Scalar> = hunits.iter().map(|e| d.coalgebra().counit(e)).collect();
    for w in &units_c {
        let rep = d.pi_delta(&d.section().apply(w));
        let mut l = vector::zeros(f, c);
        let mut r = vector::zeros(f, c);
        let mut lhs3 = vector::zeros(f, c2.dim() * h);
        let mut rhs3 = vector::zeros(f, c2.dim() * h);
        for (idx, x) in rep.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (ci, hh) = (idx / h, idx % h);
            let e = &units_c[ci];
            l = vector::add(&l, &vector::scale(x, &pca.bullet(&eps(e), &hunits[hh])));
            r = vector::add(&r, &vector::scale(&(x * &eps_h[hh]), e));
            // (Δ ⊗_A C): e ⊗ π(1⊗h) ↦ Δ(e) ⊗ π(1⊗h)
            lhs3 = vector::add(&lhs3, &vector::scale(x, &vector::tensor(&delta(e), &hunits[hh])));
            // (C ⊗_A Δ): e ⊗ π(1⊗h) ↦ Σ (e ⊗ π(1⊗h1)) ⊗ π(1⊗h2)
            let dh = d.coalgebra().delta().apply(&hunits[hh]);
            for (j, y) in dh.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (h1, h2) = (j / h, j % h);
                let inner = c2.quotient.project(&vector::tensor(e, &hunits[h1]));
                rhs3 = vector::add(&rhs3, &vector::scale(&(x * y), &vector::tensor(&inner, &hunits[h2])));
            }
        }
        if l != *w {
            left_counit = false;
        }
        if r != *w {
            right_counit = false;
        }
        if c3.quotient.project(&lhs3) != c3.quotient.project(&rhs3) {
            coassociative = false;
        }
    }

    let can_compatible = galois.filter(|g| g.can_bijective).map(|g| {
        let t = &g.tensor;
        (0..t.dim()).all(|q| {
            let v = t.lift(&vector::unit(f, t.dim(), q));
            let cv = can_on(pca, &v);
            let mut mu = vector::zeros(f, na);
            let mut dd = vector::zeros(f, c2.dim());
            for (idx, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let (i, j) = (idx / na, idx % na);
                mu = vector::add(&mu, &vector::scale(x, &pca.algebra.basis_mul(i, j)));
                // (can ⊗_A can)(a ⊗ 1 ⊗ 1 ⊗ a') = π(a⊗1) ⊗_A ρ(a')
                let x2 = c2.tensor(&right, &pca.bullet_one(&units_a[i]), &pca.rho(&units_a[j]));
                dd = vector::add(&dd, &vector::scale(x, &x2));
            }
            eps(&cv) == mu && delta(&cv) == dd
        })
    });

    Ok(CoringReport {
        dim: c,
        tensor2_dim: c2.dim(),
        tensor3_dim: c3.dim(),
        well_defined,
        comultiplication_bilinear,
        counit_bilinear,
        coassociative,
        left_counit,
        right_counit,
        can_compatible,
    })
}

/// Left multiplication by `a` on `C`, as a matrix.
fn pca_left_matrix(pca: &PartialComoduleAlgebra, a: &[Scalar]) -> crate::exactlin::Matrix {
    let f = pca.algebra.field();
    let c = pca.datum.dim_xbh();
    let cols: Vec<Vector> = (0..c).map(|i| pca.left_act(a, &vector::unit(f, c, i))).collect();
    crate::exactlin::Matrix::from_columns(f, c, &cols)
}
