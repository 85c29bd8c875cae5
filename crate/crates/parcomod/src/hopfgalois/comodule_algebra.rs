//! Partial comodule algebras, the CJ construction and algebra-comodules.

use std::sync::Arc;

use serde::Serialize;

use super::algebra::{ideal_violation, two_sided_ideal, AlgebraLike, FinAlgebra, TensorAlgebra};
use crate::coalgebra::Bialgebra;
use crate::error::{Error, Result};
use crate::exactlin::{apply_left, apply_right, vector, Matrix, Scalar, Subspace, Vector};
use crate::pcd::{classify, classify_with, vector_strings, ClassificationReport, PartialComoduleDatum};

/// An algebra `A` with a partial comodule datum on it such that `ker π` is an ideal of
/// `A ⊗ H` and `ρ` is an algebra map into `A•H`.
#[derive(Clone, Debug)]
pub struct PartialComoduleAlgebra {
    pub algebra: FinAlgebra,
    pub datum: PartialComoduleDatum,
    pub bialgebra: Arc<Bialgebra>,
    /// `A•H` with the multiplication induced through `π`
    pub xbh: FinAlgebra,
}

impl PartialComoduleAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_h(&self) -> usize {
        self.bialgebra.dim()
    }

    /// `π(a ⊗ h)`.
    pub fn bullet(&self, a: &[Scalar], h: &[Scalar]) -> Vector {
        self.datum.pi().apply(&vector::tensor(a, h))
    }

    /// `π(a ⊗ 1)`.
    pub fn bullet_one(&self, a: &[Scalar]) -> Vector {
        self.bullet(a, &self.bialgebra.one())
    }

    pub fn rho(&self, a: &[Scalar]) -> Vector {
        self.datum.rho().apply(a)
    }

    /// The left `A`-action on `A•H`, `a · w = π(a⊗1) w`.
    pub fn left_act(&self, a: &[Scalar], w: &[Scalar]) -> Vector {
        self.xbh.mul(&self.bullet_one(a), w)
    }

    /// The right `A`-action on `A•H`, `w · a = w ρ(a)`.
    pub fn right_act(&self, w: &[Scalar], a: &[Scalar]) -> Vector {
        self.xbh.mul(w, &self.rho(a))
    }

    /// `ker π` as a left `A`-module: a small generating set.
    pub fn kernel_generators(&self) -> Vec<Vector> {
        let t = TensorAlgebra::new(&self.algebra, &self.bialgebra.algebra);
        let f = self.algebra.field();
        let n = t.dim();
        let hdim = self.dim_h();
        let gens = self.algebra.generators();
        let mut span = Subspace::zero(f, n);
        let mut out = Vec::new();
        for k in self.datum.ker_pi().basis() {
            if span.contains(k) {
                continue;
            }
            out.push(k.clone());
            let mut queue = vec![k.clone()];
            span.insert(k.clone());
            while let Some(v) = queue.pop() {
                for g in &gens {
                    let w = apply_left(&self.algebra.left_mul(g), hdim, &v);
                    if span.insert(w.clone()) {
                        queue.push(w);
                    }
                }
            }
        }
        out
    }
}

/// Checks that `d` makes `a` a partial comodule algebra over the bialgebra `h`.
pub fn check_comodule_algebra(
    a: &FinAlgebra,
    d: &PartialComoduleDatum,
    h: &Arc<Bialgebra>,
) -> Result<PartialComoduleAlgebra> {
    if a.dim() != d.dim_x() {
        return Err(Error::DimensionMismatch(format!("algebra has dimension {}, datum {}", a.dim(), d.dim_x())));
    }
    if *d.coalgebra().as_ref() != h.coalgebra {
        return Err(Error::CoalgebraMismatch("datum and bialgebra have different coalgebras".into()));
    }
    let report = a.verify();
    if !report.ok() {
        return Err(Error::Validation {
            path: "algebra".into(),
            axiom: if report.associative { "unit".into() } else { "associativity".into() },
            witness: format!("{:?}", report.witness),
        });
    }
    let t = TensorAlgebra::new(a, &h.algebra);
    if let Some(v) = ideal_violation(&t, d.ker_pi()) {
        return Err(Error::KernelNotIdeal(format!("{:?}", vector_strings(&v))));
    }
    let f = a.field();
    let m = d.dim_xbh();
    let lifts = d.section().columns();
    let mut cols = Vec::with_capacity(m * m);
    for x in &lifts {
        for y in &lifts {
            cols.push(d.pi().apply(&t.mul(x, y)));
        }
    }
    let one = d.pi().apply(&t.one());
    let xbh =
        FinAlgebra::new(Matrix::from_columns(f, m, &cols), Matrix::from_columns(f, m, std::slice::from_ref(&one)))?;
    if d.rho().apply(&a.one()) != one {
        return Err(Error::UnitAxiomFails("ρ(1) differs from π(1⊗1)".into()));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = d.rho().apply(&a.basis_mul(i, j));
            let rhs = xbh.mul(&d.rho().column(i), &d.rho().column(j));
            if lhs != rhs {
                return Err(Error::MultNotColinear(format!("ρ(e{i} e{j}) differs from ρ(e{i}) ρ(e{j})")));
            }
        }
    }
    Ok(PartialComoduleAlgebra { algebra: a.clone(), datum: d.clone(), bialgebra: h.clone(), xbh })
}

/// Output of [`check_cj`].
#[derive(Clone, Debug)]
pub struct CjReport {
    /// `e = ρ(1)`
    pub idempotent: Vector,
    pub datum: PartialComoduleDatum,
    /// `K = (ρ⊗H)(ker π)`
    pub k: Subspace,
    /// `L = (π⊗H)(A⊗Δ)(ker π)`
    pub l: Subspace,
    pub classification: ClassificationReport,
    /// present when `ker π` is a two-sided ideal
    pub comodule_algebra: Option<PartialComoduleAlgebra>,
}

#[derive(Serialize)]
pub struct CjSummary {
    pub idempotent: Vec<String>,
    pub dim_a: usize,
    pub dim_abh: usize,
    pub k_basis: Vec<Vec<String>>,
    pub l_basis: Vec<Vec<String>>,
    pub k_equals_l: bool,
    pub classification: ClassificationReport,
}

impl CjReport {
    pub fn summary(&self) -> CjSummary {
        CjSummary {
            idempotent: vector_strings(&self.idempotent),
            dim_a: self.datum.dim_x(),
            dim_abh: self.datum.dim_xbh(),
            k_basis: self.k.basis().iter().map(|v| vector_strings(v)).collect(),
            l_basis: self.l.basis().iter().map(|v| vector_strings(v)).collect(),
            k_equals_l: self.k == self.l,
            classification: self.classification.clone(),
        }
    }
}

fn cj_fail(axiom: u8, detail: String) -> Error {
    Error::CjAxiomFails { axiom, detail }
}

/// A partial coaction `ρ: A -> A⊗H` in the sense of (CJ1)-(CJ3): multiplicative,
/// `(ρ⊗H)ρ(a) = (ρ(1)⊗1)(A⊗Δ)ρ(a)`, and `(A⊗ε)ρ = id`. Builds the datum
/// `A•H = (A⊗H)e`, `π(x) = x e`, with `e = ρ(1)`.
pub fn check_cj(h: &Arc<Bialgebra>, name: &str, a: &FinAlgebra, rho: &Matrix) -> Result<CjReport> {
    let (n, hd) = (a.dim(), h.dim());
    let f = a.field();
    if rho.rows() != n * hd || rho.cols() != n {
        return Err(Error::ShapeMismatch(format!("ρ is {}x{}, expected {}x{n}", rho.rows(), rho.cols(), n * hd)));
    }
    let t = TensorAlgebra::new(a, &h.algebra);
    let e = rho.apply(&a.one());
    if t.mul(&e, &e) != e {
        return Err(cj_fail(1, "ρ(1) is not idempotent".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if rho.apply(&a.basis_mul(i, j)) != t.mul(&rho.column(i), &rho.column(j)) {
                return Err(cj_fail(1, format!("ρ(e{i} e{j}) differs from ρ(e{i}) ρ(e{j})")));
            }
        }
    }
    let tt = TensorAlgebra::new(&t, &h.algebra);
    let e1 = vector::tensor(&e, &h.one());
    for i in 0..n {
        let r = rho.column(i);
        let lhs = apply_left(rho, hd, &r);
        let rhs = tt.mul(&e1, &apply_right(n, h.coalgebra.delta(), &r));
        if lhs != rhs {
            return Err(cj_fail(2, format!("coassociativity fails at e{i}")));
        }
        if apply_right(n, h.coalgebra.epsilon(), &r) != vector::unit(f, n, i) {
            return Err(cj_fail(3, format!("counit fails at e{i}")));
        }
    }
    let right_e: Vec<Vector> = (0..n * hd).map(|b| t.mul(&vector::unit(f, n * hd, b), &e)).collect();
    let image = Subspace::span(f, n * hd, right_e.iter().cloned());
    let coords = |v: &[Scalar]| image.coords(v).expect("lies in (A⊗H)e");
    let pi_cols: Vec<Vector> = right_e.iter().map(|v| coords(v)).collect();
    let pi = Matrix::from_columns(f, image.dim(), &pi_cols);
    let rho_cols: Vec<Vector> = (0..n).map(|i| coords(&rho.column(i))).collect();
    let rho_d = Matrix::from_columns(f, image.dim(), &rho_cols);
    let datum = PartialComoduleDatum::new(Arc::new(h.coalgebra.clone()), name, pi, rho_d)?;
    let classification = classify(&datum);
    Ok(CjReport {
        idempotent: e,
        k: datum.k1(),
        l: datum.k2(),
        comodule_algebra: check_comodule_algebra(a, &datum, h).ok(),
        datum,
        classification,
    })
}

/// Classification with the kernels `K1`, `K2` replaced by the two-sided ideals of
/// `(A•H)⊗H` they generate: the pushouts taken in algebras.
pub fn classify_algebra_comodule(pca: &PartialComoduleAlgebra) -> ClassificationReport {
    let t = TensorAlgebra::new(&pca.xbh, &pca.bialgebra.algebra);
    let k1 = two_sided_ideal(&t, &pca.datum.k1());
    let k2 = two_sided_ideal(&t, &pca.datum.k2());
    classify_with(&pca.datum, k1, k2)
}

/// Replaces `ker π` by the ideal of `A⊗H` it generates, keeping `A`:
/// `A'•H = (A⊗H)/(ker π)`, `π' = q`, `ρ' = qsρ`.
pub fn ideal_closure(a: &FinAlgebra, d: &PartialComoduleDatum, h: &Arc<Bialgebra>) -> Result<PartialComoduleAlgebra> {
    let t = TensorAlgebra::new(a, &h.algebra);
    let ideal = two_sided_ideal(&t, d.ker_pi());
    let q = ideal.quotient().projection();
    let rho = q.mul(d.section()).mul(d.rho());
    let closed = PartialComoduleDatum::new(d.coalgebra().clone(), d.coalgebra_name(), q, rho)?;
    check_comodule_algebra(a, &closed, h)
}

/// `A` with the trivial datum `(A, A, A⊗ε, id)`.
pub fn trivial_comodule_algebra(a: &FinAlgebra, h: &Arc<Bialgebra>, name: &str) -> Result<PartialComoduleAlgebra> {
    let d = crate::pcd::trivial(Arc::new(h.coalgebra.clone()), name, a.dim());
    check_comodule_algebra(a, &d, h)
}
