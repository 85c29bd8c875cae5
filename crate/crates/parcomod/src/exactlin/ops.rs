//! The pushout/pullback calculus on finite-dimensional vector spaces.

use serde::Serialize;

use super::matrix::Matrix;
use super::subspace::{QuotientPresentation, Subspace};
use crate::error::{Error, Result};

pub fn kernel(m: &Matrix) -> Subspace {
    m.kernel()
}

/// Result of a pushout along a surjection `g: U -> W`.
#[derive(Clone, Debug)]
pub struct Pushout {
    /// `P = V / f(ker g)` with the canonical projection `ḡ: V -> P`.
    pub quotient: QuotientPresentation,
    /// The induced `f̄: W -> P` with `f̄ ∘ g = ḡ ∘ f`.
    pub fbar: Matrix,
}

impl Pushout {
    pub fn gbar(&self) -> Matrix {
        self.quotient.projection()
    }
}

/// Pushout of `f: U -> V` and a surjection `g: U -> W`.
pub fn pushout(f: &Matrix, g: &Matrix) -> Result<Pushout> {
    if f.cols() != g.cols() {
        return Err(Error::DimensionMismatch(format!("f has source {}, g has source {}", f.cols(), g.cols())));
    }
    let s = g.pivot_section()?;
    let w = g.kernel().image_under(f);
    let quotient = w.quotient();
    let fs = f.mul(&s);
    let cols: Vec<_> = fs.columns().iter().map(|c| quotient.project(c)).collect();
    let fbar = Matrix::from_columns(f.field(), quotient.dim(), &cols);
    Ok(Pushout { quotient, fbar })
}

/// `{(a, b) : f a = g b}` as a subspace of `A ⊕ B`.
pub fn pullback(f: &Matrix, g: &Matrix) -> Result<Subspace> {
    if f.rows() != g.rows() {
        return Err(Error::DimensionMismatch(format!("codomains {} and {}", f.rows(), g.rows())));
    }
    Ok(f.hstack(&g.scale(&-f.field().one())).kernel())
}

/// Kronecker product `f ⊗ g`; index of `e_i ⊗ e_j` is `i * dim₂ + j`.
pub fn tensor_map(f: &Matrix, g: &Matrix) -> Matrix {
    f.kron(g)
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub a_in_b: bool,
    pub equal: bool,
    #[serde(skip)]
    pub sum: Subspace,
    #[serde(skip)]
    pub intersection: Subspace,
}

pub fn sum_and_compare(a: &Subspace, b: &Subspace) -> Result<Comparison> {
    if a.ambient() != b.ambient() {
        return Err(Error::DimensionMismatch(format!("ambient {} vs {}", a.ambient(), b.ambient())));
    }
    Ok(Comparison { a_in_b: a.is_subspace_of(b), equal: a == b, sum: a.sum(b), intersection: a.intersection(b) })
}
