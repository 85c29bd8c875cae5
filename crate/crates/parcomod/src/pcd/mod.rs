//! Partial comodule data `(X, X•H, π, ρ)` over a finite-dimensional coalgebra,
//! their coassociativity pushouts and classification, and the constructions on them.
//!
//! Tensor coordinates follow `exactlin`: `x ⊗ h` sits at `x * dim H + h`.

mod constructions;
mod gencoass;

use std::sync::Arc;

use serde::Serialize;

use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::exactlin::{apply_left, apply_right, vector, Field, Matrix, QuotientPresentation, Scalar, Subspace, Vector};

pub use constructions::{
    check_morphism, coequalizer, direct_sum, finite_subcomodule_containing, from_global, induced_on_xbh,
    is_isomorphism, largest_subcomodule_within, quotient_global, quotient_partial, restrict_to_subspace, rho_closure,
    to_global, trivial, MorphismCheck,
};
pub use gencoass::{check_gencoass, GencoassReport};

/// A partial comodule datum. `pi` is `m × (n·dim H)` and surjective; `rho` is `m × n`.
#[derive(Clone, Debug)]
pub struct PartialComoduleDatum {
    coalgebra: Arc<Coalgebra>,
    coalgebra_name: String,
    dim_x: usize,
    pi: Matrix,
    rho: Matrix,
    section: Matrix,
    ker_pi: Subspace,
}

impl PartialComoduleDatum {
    pub fn new(coalgebra: Arc<Coalgebra>, name: &str, pi: Matrix, rho: Matrix) -> Result<Self> {
        let h = coalgebra.dim();
        let m = pi.rows();
        if pi.field() != coalgebra.field() || rho.field() != coalgebra.field() {
            return Err(Error::ShapeMismatch("pi, rho and the coalgebra live over different fields".into()));
        }
        if h == 0 {
            if pi.cols() != 0 {
                return Err(Error::ShapeMismatch("H = 0 forces X ⊗ H = 0".into()));
            }
        } else if !pi.cols().is_multiple_of(h) {
            return Err(Error::ShapeMismatch(format!("pi has {} columns, not a multiple of dim H = {h}", pi.cols())));
        }
        let n = pi.cols().checked_div(h).unwrap_or(rho.cols());
        if rho.rows() != m || rho.cols() != n {
            return Err(Error::ShapeMismatch(format!("rho is {}x{}, expected {m}x{n}", rho.rows(), rho.cols())));
        }
        let section = pi.pivot_section()?;
        let ker_pi = pi.kernel();
        Ok(PartialComoduleDatum { coalgebra, coalgebra_name: name.to_string(), dim_x: n, pi, rho, section, ker_pi })
    }

    pub fn coalgebra(&self) -> &Arc<Coalgebra> {
        &self.coalgebra
    }

    pub fn coalgebra_name(&self) -> &str {
        &self.coalgebra_name
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    pub fn dim_xbh(&self) -> usize {
        self.pi.rows()
    }

    pub fn dim_h(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn pi(&self) -> &Matrix {
        &self.pi
    }

    pub fn rho(&self) -> &Matrix {
        &self.rho
    }

    /// The pivot section `s` of `π`.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn ker_pi(&self) -> &Subspace {
        &self.ker_pi
    }

    pub fn is_global(&self) -> bool {
        self.ker_pi.is_zero() && self.pi.rows() == self.pi.cols()
    }

    pub fn same_coalgebra(&self, other: &PartialComoduleDatum) -> bool {
        Arc::ptr_eq(&self.coalgebra, &other.coalgebra) || *self.coalgebra == *other.coalgebra
    }

    /// `s(ρ(x))`, a lift of `ρ(x)` to `X ⊗ H`.
    pub fn lift_rho(&self, x: &[Scalar]) -> Vector {
        self.section.apply(&self.rho.apply(x))
    }

    /// `(ρ ⊗ H)`: `X ⊗ H -> (X•H) ⊗ H`.
    pub fn rho_h(&self, v: &[Scalar]) -> Vector {
        apply_left(&self.rho, self.dim_h(), v)
    }

    /// `(π ⊗ H)(X ⊗ Δ)`: `X ⊗ H -> (X•H) ⊗ H`.
    pub fn pi_delta(&self, v: &[Scalar]) -> Vector {
        let h = self.dim_h();
        apply_left(&self.pi, h, &apply_right(self.dim_x, self.coalgebra.delta(), v))
    }

    /// `(X ⊗ ε)`: `X ⊗ H -> X`.
    pub fn counit_leg(&self, v: &[Scalar]) -> Vector {
        apply_right(self.dim_x, self.coalgebra.epsilon(), v)
    }

    /// `K1 = (ρ ⊗ H)(ker π)`.
    pub fn k1(&self) -> Subspace {
        self.ker_pi.map(self.dim_xbh() * self.dim_h(), |k| self.rho_h(k))
    }

    /// `K2 = (π ⊗ H)(X ⊗ Δ)(ker π)`.
    pub fn k2(&self) -> Subspace {
        self.ker_pi.map(self.dim_xbh() * self.dim_h(), |k| self.pi_delta(k))
    }

    pub fn serialize(&self) -> DatumJson {
        DatumJson {
            coalgebra: self.coalgebra_name.clone(),
            dim_x: self.dim_x,
            dim_xbh: self.dim_xbh(),
            pi: matrix_rows(&self.pi),
            rho: matrix_rows(&self.rho),
        }
    }
}

/// Wire form of a datum.
#[derive(Clone, Debug, Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct DatumJson {
    pub coalgebra: String,
    pub dim_x: usize,
    pub dim_xbh: usize,
    pub pi: Vec<Vec<String>>,
    pub rho: Vec<Vec<String>>,
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

pub fn vector_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// The five pushouts attached to a datum, and `Θ`.
#[derive(Clone, Debug)]
pub struct CoassPushouts {
    /// `X•k = X / (X ⊗ ε)(ker π)`
    pub x_bullet_k: QuotientPresentation,
    /// `(X•H)•H = ((X•H) ⊗ H) / K1`
    pub xbh_bullet_h: QuotientPresentation,
    /// `X•(H⊗H) = (X ⊗ H ⊗ H) / (X ⊗ Δ)(ker π)`
    pub x_bullet_hth: QuotientPresentation,
    /// `X•(H•H) = ((X•H) ⊗ H) / K2`
    pub x_bullet_hbh: QuotientPresentation,
    /// `Θ = ((X•H) ⊗ H) / (K1 + K2)`
    pub theta_obj: QuotientPresentation,
    /// `θ₁: (X•H)•H -> Θ`
    pub theta1: Matrix,
    /// `θ₂: X•(H•H) -> Θ`
    pub theta2: Matrix,
}

fn induced_map(from: &QuotientPresentation, to: &QuotientPresentation) -> Matrix {
    let cols: Vec<Vector> =
        (0..from.dim()).map(|j| to.project(&from.lift(&vector::unit(from.field(), from.dim(), j)))).collect();
    Matrix::from_columns(from.field(), to.dim(), &cols)
}

pub fn build_pushouts(p: &PartialComoduleDatum) -> CoassPushouts {
    let (n, h) = (p.dim_x(), p.dim_h());
    let x_bullet_k = p.ker_pi.map(n, |k| p.counit_leg(k)).quotient();
    let k1 = p.k1();
    let k2 = p.k2();
    let hth = p.ker_pi.map(n * h * h, |k| apply_right(n, p.coalgebra.delta(), k)).quotient();
    let theta_obj = k1.sum(&k2).quotient();
    let xbh_bullet_h = k1.quotient();
    let x_bullet_hbh = k2.quotient();
    let theta1 = induced_map(&xbh_bullet_h, &theta_obj);
    let theta2 = induced_map(&x_bullet_hbh, &theta_obj);
    CoassPushouts { x_bullet_k, xbh_bullet_h, x_bullet_hth: hth, x_bullet_hbh, theta_obj, theta1, theta2 }
}

/// A concrete vector exhibiting the failure of one classification level.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub level: String,
    pub reason: String,
    pub vector: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassificationReport {
    pub counital: bool,
    pub quasi: bool,
    pub lax: bool,
    pub geometric: bool,
    pub dim_x: usize,
    pub dim_xbh: usize,
    pub k1_dim: usize,
    pub k2_dim: usize,
    pub theta_dim: usize,
    pub witnesses: Vec<Witness>,
}

pub fn classify(p: &PartialComoduleDatum) -> ClassificationReport {
    classify_with(p, p.k1(), p.k2())
}

/// The classification logic with `K1`, `K2` supplied by the caller (for instance
/// replaced by the ideals they generate).
pub fn classify_with(p: &PartialComoduleDatum, k1: Subspace, k2: Subspace) -> ClassificationReport {
    let (n, m, h) = (p.dim_x(), p.dim_xbh(), p.dim_h());
    let f = p.field();
    let mut witnesses = Vec::new();
    let mut wit = |level: &str, reason: &str, v: &[Scalar]| {
        witnesses.push(Witness { level: level.into(), reason: reason.into(), vector: vector_strings(v) })
    };

    let mut counital = true;
    if let Some(k) = p.ker_pi.basis().iter().find(|k| !vector::is_zero(&p.counit_leg(k))) {
        counital = false;
        wit("counital", "(X⊗ε) does not vanish on this element of ker π", k);
    }
    if counital {
        for x in 0..n {
            let e = vector::unit(f, n, x);
            if p.counit_leg(&p.lift_rho(&e)) != e {
                counital = false;
                wit("counital", "(X⊗ε)sρ differs from the identity at this basis vector", &e);
                break;
            }
        }
    }

    let sum = k1.sum(&k2);
    let mut quasi = counital;
    if counital {
        for x in 0..n {
            let e = vector::unit(f, n, x);
            let u = p.lift_rho(&e);
            let d = vector::sub(&p.rho_h(&u), &p.pi_delta(&u));
            if !sum.contains(&d) {
                quasi = false;
                wit("quasi", "coassociativity fails in Θ at this basis vector", &e);
                break;
            }
        }
    }
    let k1_in_k2 = k1.is_subspace_of(&k2);
    let k2_in_k1 = k2.is_subspace_of(&k1);
    if !k1_in_k2 {
        let v = k1.basis().iter().find(|v| !k2.contains(v)).unwrap();
        wit("lax", "element of K1 outside K2", v);
    }
    if !k2_in_k1 {
        let v = k2.basis().iter().find(|v| !k1.contains(v)).unwrap();
        wit("geometric", "element of K2 outside K1", v);
    }
    let lax = quasi && k1_in_k2;
    let geometric = lax && k2_in_k1;
    ClassificationReport {
        counital,
        quasi,
        lax,
        geometric,
        dim_x: n,
        dim_xbh: m,
        k1_dim: k1.dim(),
        k2_dim: k2.dim(),
        theta_dim: m * h - sum.dim(),
        witnesses,
    }
}

/// `(f ⊗ H)` on `X ⊗ H` for `f: X -> Y`.
pub(crate) fn map_h(f: &Matrix, h: usize, v: &[Scalar]) -> Vector {
    apply_left(f, h, v)
}

/// The unit vector list `e_0..e_{n-1}`.
pub(crate) fn units(field: Field, n: usize) -> impl Iterator<Item = Vector> {
    (0..n).map(move |i| vector::unit(field, n, i))
}

#[cfg(test)]
mod tests;
