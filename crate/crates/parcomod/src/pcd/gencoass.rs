//! Generalized coassociativity at level three.
//!
//! Every triple pushout is a quotient of `T = (X•H) ⊗ H ⊗ H`; writing
//! `R = (ρ⊗H⊗H)(s⊗H)`, `Δ' = (X•H) ⊗ Δ` and `D = ((π⊗H)(X⊗Δ)s) ⊗ H`, the kernels are
//!
//! | object              | kernel in `T`           |
//! |---------------------|-------------------------|
//! | `((X•H)•H)•H`       | `K1⊗H + R(K1)`          |
//! | `(X•H)•(H•H)`       | `K1⊗H + R(K2)`          |
//! | same, via `Δ'`      | `K1⊗H + Δ'(K1)`         |
//! | `X•(H•(H•H))`       | `K2⊗H + Δ'(K2)`         |
//! | `(X•(H•H))•H`       | `K2⊗H + D(K1)`          |
//! | `X•((H•H)•H)`       | `K2⊗H + D(K2)`          |

use serde::Serialize;

use super::{units, vector_strings, PartialComoduleDatum};
use crate::error::{Error, Result};
use crate::exactlin::{apply_left, apply_right, Matrix, Scalar, Subspace, Vector};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GencoassReport {
    /// dimensions of the six presentations (the second and third present one object)
    pub dims: [usize; 6],
    pub dims_agree: bool,
    /// the two presentations of `(X•H)•(H•H)` have the same kernel
    pub middle_presentations_agree: bool,
    /// every comparison map of the pentagon is induced by the identity of `T`
    pub pentagon_commutes: bool,
    /// all six composites `X -> T` agree modulo the sum of the kernels
    pub composites_agree: bool,
    pub common_quotient_dim: usize,
    /// basis vector of `X` on which two composites first disagree
    pub witness: Option<Vec<String>>,
}

impl GencoassReport {
    pub fn passed(&self) -> bool {
        self.dims_agree && self.middle_presentations_agree && self.pentagon_commutes && self.composites_agree
    }
}

fn matrix_of<F: Fn(&[Scalar]) -> Vector>(x: &PartialComoduleDatum, rows: usize, f: F) -> Matrix {
    let cols: Vec<Vector> = x.section().columns().iter().map(|c| f(c)).collect();
    Matrix::from_columns(x.field(), rows, &cols)
}

pub fn check_gencoass(x: &PartialComoduleDatum) -> Result<GencoassReport> {
    if !super::classify(x).geometric {
        return Err(Error::PreconditionNotGeometric);
    }
    let (m, h) = (x.dim_xbh(), x.dim_h());
    let t = m * h * h;
    let delta = x.coalgebra().delta();
    // (ρ⊗H)s and (π⊗H)(X⊗Δ)s as maps X•H -> (X•H)⊗H
    let rs = matrix_of(x, m * h, |c| x.rho_h(c));
    let ds = matrix_of(x, m * h, |c| x.pi_delta(c));
    let r = |v: &[Scalar]| apply_left(&rs, h, v);
    let dd = |v: &[Scalar]| apply_left(&ds, h, v);
    let dp = |v: &[Scalar]| apply_right(m, delta, v);

    let k1 = x.k1();
    let k2 = x.k2();
    let k1h = k1.tensor_right(h);
    let k2h = k2.tensor_right(h);
    let with = |base: &Subspace, k: &Subspace, f: &dyn Fn(&[Scalar]) -> Vector| {
        let mut s = base.clone();
        for b in k.basis() {
            s.insert(f(b));
        }
        s
    };
    let n1 = with(&k1h, &k1, &r);
    let n2 = with(&k1h, &k2, &r);
    let n3 = with(&k1h, &k1, &dp);
    let n4 = with(&k2h, &k2, &dp);
    let n5 = with(&k2h, &k1, &dd);
    let n6 = with(&k2h, &k2, &dd);
    let ns = [&n1, &n2, &n3, &n4, &n5, &n6];
    let dims = ns.map(|n| t - n.dim());
    let dims_agree = dims.iter().all(|&d| d == dims[0]);
    let middle_presentations_agree = n2 == n3;
    // X•(H•(H•H)) -> (X•H)•(H•H) -> ((X•H)•H)•H and
    // X•(H•(H•H)) -> X•((H•H)•H) -> (X•(H•H))•H -> ((X•H)•H)•H, read in the direction of θ
    let pentagon_commutes = n1.is_subspace_of(&n2)
        && n2.is_subspace_of(&n4)
        && n1.is_subspace_of(&n5)
        && n5.is_subspace_of(&n6)
        && n6.is_subspace_of(&n4);

    let mut all = Subspace::zero(x.field(), t);
    for n in ns {
        all = all.sum(n);
    }
    let mut witness = None;
    for e in units(x.field(), x.dim_x()) {
        let u = x.lift_rho(&e);
        let a = x.rho_h(&u);
        let b = x.pi_delta(&u);
        let comps = [r(&a), r(&b), dp(&a), dp(&b), dd(&a), dd(&b)];
        let base = all.reduce(&comps[0]);
        if comps[1..].iter().any(|c| all.reduce(c) != base) {
            witness = Some(vector_strings(&e));
            break;
        }
    }
    Ok(GencoassReport {
        dims,
        dims_agree,
        middle_presentations_agree,
        pentagon_commutes,
        composites_agree: witness.is_none(),
        common_quotient_dim: t - all.dim(),
        witness,
    })
}
