//! Tensor products of partial comodule data over a bialgebra, equivariance, the oplax
//! unit, and the geometric reflection by exhaustive search over kernels.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::coalgebra::Bialgebra;
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Subspace, Vector};
use crate::hopfgalois::algebra::AlgebraLike;
use crate::pcd::{check_morphism, classify, quotient_partial, PartialComoduleDatum};

/// `μ_{X,Y} = (X⊗Y⊗μ_H)(X⊗σ⊗H)` and the induced `μ̄: (X•H)⊗(Y•H) -> (X⊗Y)•H`.
#[derive(Clone, Debug)]
pub struct TensorWitness {
    pub mu_xy: Matrix,
    pub mu_bar: Matrix,
}

fn require_bialgebra(x: &PartialComoduleDatum, h: &Bialgebra) -> Result<()> {
    if **x.coalgebra() != h.coalgebra {
        return Err(Error::CoalgebraMismatch("datum and bialgebra have different coalgebras".into()));
    }
    Ok(())
}

fn mu_xy(x: &PartialComoduleDatum, y: &PartialComoduleDatum, h: &Bialgebra) -> Matrix {
    let (nx, ny, d) = (x.dim_x(), y.dim_x(), h.dim());
    let f = h.field();
    let mut m = Matrix::zeros(f, nx * ny * d, nx * d * ny * d);
    for i in 0..nx {
        for a in 0..d {
            for j in 0..ny {
                for b in 0..d {
                    let col = ((i * d + a) * ny + j) * d + b;
                    let prod = h.algebra.basis_mul(a, b);
                    for (c, v) in prod.iter().enumerate() {
                        if !v.is_zero() {
                            m.set((i * ny + j) * d + c, col, v.clone());
                        }
                    }
                }
            }
        }
    }
    m
}

/// `X ⊗ Y` with `(X⊗Y)•H = (X⊗Y⊗H) / μ_{X,Y}(ker(π_X ⊗ π_Y))` and `ρ = μ̄(ρ_X ⊗ ρ_Y)`.
pub fn tensor_pcd(
    x: &PartialComoduleDatum,
    y: &PartialComoduleDatum,
    h: &Bialgebra,
) -> Result<(PartialComoduleDatum, TensorWitness)> {
    require_bialgebra(x, h)?;
    require_bialgebra(y, h)?;
    let f = h.field();
    let d = h.dim();
    let (nx, ny) = (x.dim_x(), y.dim_x());
    let mu = mu_xy(x, y, h);
    let (ax, ay) = (nx * d, ny * d);
    let mut gens: Vec<Vector> = Vec::new();
    for k in x.ker_pi().basis() {
        for j in 0..ay {
            gens.push(mu.apply(&vector::tensor(k, &vector::unit(f, ay, j))));
        }
    }
    for k in y.ker_pi().basis() {
        for i in 0..ax {
            gens.push(mu.apply(&vector::tensor(&vector::unit(f, ax, i), k)));
        }
    }
    let q = Subspace::span(f, nx * ny * d, gens).quotient();
    let sx = x.section();
    let sy = y.section();
    let mut bar_cols = Vec::with_capacity(x.dim_xbh() * y.dim_xbh());
    for u in sx.columns() {
        for v in sy.columns() {
            bar_cols.push(q.project(&mu.apply(&vector::tensor(&u, &v))));
        }
    }
    let mu_bar = Matrix::from_columns(f, q.dim(), &bar_cols);
    let rho = mu_bar.mul(&x.rho().kron(y.rho()));
    let datum = PartialComoduleDatum::new(x.coalgebra().clone(), x.coalgebra_name(), q.projection(), rho)?;
    Ok((datum, TensorWitness { mu_xy: mu, mu_bar }))
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct Equivariance {
    pub left: bool,
    pub right: bool,
}

/// Stability of `ker π` under multiplication on the `H` leg from the left or right.
pub fn check_equivariance(x: &PartialComoduleDatum, h: &Bialgebra) -> Result<Equivariance> {
    require_bialgebra(x, h)?;
    let f = h.field();
    let n = x.dim_x();
    let d = h.dim();
    let stable = |mulmat: &dyn Fn(&[crate::exactlin::Scalar]) -> Matrix| {
        (0..d).all(|b| {
            let m = mulmat(&vector::unit(f, d, b));
            x.ker_pi().basis().iter().all(|k| x.ker_pi().contains(&crate::exactlin::apply_right(n, &m, k)))
        })
    };
    Ok(Equivariance { left: stable(&|a| h.algebra.left_mul(a)), right: stable(&|a| h.algebra.right_mul(a)) })
}

/// The oplax unit `(k, H, id_H, η)`.
pub fn oplax_unit(coalgebra_name: &str, h: &Bialgebra) -> PartialComoduleDatum {
    let f = h.field();
    PartialComoduleDatum::new(
        Arc::new(h.coalgebra.clone()),
        coalgebra_name,
        Matrix::identity(f, h.dim()),
        h.algebra.eta().clone(),
    )
    .expect("identity is onto")
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct UnitConstraints {
    /// `r_X: X -> X ⊗ k` is a morphism
    pub right_morphism: bool,
    /// ... and an isomorphism of data
    pub right_iso: bool,
    pub left_morphism: bool,
    pub left_iso: bool,
}

/// Whether `f` underlies an isomorphism of partial comodule data.
pub fn is_iso_morphism(f: &Matrix, src: &PartialComoduleDatum, dst: &PartialComoduleDatum) -> Result<bool> {
    let c = check_morphism(f, src, dst)?;
    Ok(match c.f_bullet_h {
        Some(fbh) => f.inverse().is_some() && fbh.inverse().is_some(),
        None => false,
    })
}

/// `r_X: X -> X ⊗ k` and `l_X: X -> k ⊗ X`, both the identity on `X`.
pub fn unit_constraints(x: &PartialComoduleDatum, h: &Bialgebra) -> Result<UnitConstraints> {
    let unit = oplax_unit(x.coalgebra_name(), h);
    let id = Matrix::identity(h.field(), x.dim_x());
    let (xr, _) = tensor_pcd(x, &unit, h)?;
    let (xl, _) = tensor_pcd(&unit, x, h)?;
    Ok(UnitConstraints {
        right_morphism: check_morphism(&id, x, &xr)?.accepted(),
        right_iso: is_iso_morphism(&id, x, &xr)?,
        left_morphism: check_morphism(&id, x, &xl)?.accepted(),
        left_iso: is_iso_morphism(&id, x, &xl)?,
    })
}

/// All subspaces of `k^n` over a finite field.
///
/// | field | n = 1 | n = 2 | n = 3 | n = 4 |
/// |-------|-------|-------|-------|-------|
/// | GF(2) | 2     | 5     | 16    | 67    |
/// | GF(3) | 2     | 6     | 28    | 212   |
pub fn all_subspaces(field: Field, n: usize) -> Result<Vec<Subspace>> {
    let els = field.elements().ok_or_else(|| Error::FieldTooLarge(field.to_string()))?;
    let q = els.len();
    let vectors: Vec<Vector> = (0..q.pow(n as u32))
        .map(|mut c| {
            (0..n)
                .map(|_| {
                    let x = els[c % q].clone();
                    c /= q;
                    x
                })
                .collect()
        })
        .filter(|v: &Vector| !vector::is_zero(v))
        .collect();
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut frontier = vec![Subspace::zero(field, n)];
    seen.insert(frontier[0].clone());
    while let Some(s) = frontier.pop() {
        for v in &vectors {
            if s.contains(v) {
                continue;
            }
            let mut t = s.clone();
            t.insert(v.clone());
            if seen.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut out: Vec<Subspace> = seen.into_iter().collect();
    out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.basis().cmp(b.basis())));
    Ok(out)
}

/// A quotient of a datum: `X -> X/K` together with `X•H -> (X•H)/M`, where
/// `π(K⊗H) + ρ(K) ⊆ M`.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub datum: PartialComoduleDatum,
    /// `X -> Y`
    pub projection: Matrix,
    /// `X•H -> Y•H`
    pub xbh_projection: Matrix,
    pub kernel: Subspace,
    pub xbh_kernel: Subspace,
    /// number of candidate quotients examined
    pub candidates: usize,
    /// number of candidates that are geometric
    pub geometric_quotients: usize,
    /// every geometric quotient factors through the chosen one
    pub universal: bool,
}

#[derive(Serialize)]
pub struct ReflectionSummary {
    pub dim_x: usize,
    pub dim_xbh: usize,
    pub dim_reflection: usize,
    pub dim_reflection_xbh: usize,
    pub kernel_dim: usize,
    pub xbh_kernel_dim: usize,
    pub candidates: usize,
    pub geometric_quotients: usize,
    pub universal: bool,
}

impl Reflection {
    pub fn summary(&self) -> ReflectionSummary {
        ReflectionSummary {
            dim_x: self.projection.cols(),
            dim_xbh: self.xbh_projection.cols(),
            dim_reflection: self.datum.dim_x(),
            dim_reflection_xbh: self.datum.dim_xbh(),
            kernel_dim: self.kernel.dim(),
            xbh_kernel_dim: self.xbh_kernel.dim(),
            candidates: self.candidates,
            geometric_quotients: self.geometric_quotients,
            universal: self.universal,
        }
    }
}

/// Largest `dim Y•H` for which the subspaces of `Y•H` are enumerated.
fn xbh_cap(f: Field) -> usize {
    if f.order() == Some(2) {
        6
    } else {
        4
    }
}

/// Biggest geometric quotient of `x`, found by trying every quotient datum: every
/// kernel `K ⊆ X` and, on top of the induced `Y•H`, every further kernel. The chosen
/// quotient has the smallest kernels; universality is then checked against all other
/// geometric quotients. Limited to GF(2) and GF(3), to `dim X ≤ max_dim`, and to
/// `dim X•H` at most 6 (GF(2)) or 4 (GF(3)).
pub fn geometric_reflection(x: &PartialComoduleDatum, max_dim: usize) -> Result<Reflection> {
    let f = x.field();
    match f.order() {
        Some(2) | Some(3) => {}
        _ => return Err(Error::FieldTooLarge(f.to_string())),
    }
    let n = x.dim_x();
    if n > max_dim {
        return Err(Error::DimTooLarge { dim: n, max: max_dim });
    }
    if x.dim_xbh() > xbh_cap(f) {
        return Err(Error::DimTooLarge { dim: x.dim_xbh(), max: xbh_cap(f) });
    }
    let h = x.dim_h();
    let mut candidates = 0;
    let mut geometric = Vec::new();
    for k in all_subspaces(f, n)? {
        let p = k.quotient().projection();
        let y0 = quotient_partial(x, &p)?;
        let phi_cols: Vec<Vector> =
            x.section().columns().iter().map(|c| y0.pi().apply(&crate::exactlin::apply_left(&p, h, c))).collect();
        let phi = Matrix::from_columns(f, y0.dim_xbh(), &phi_cols);
        for l in all_subspaces(f, y0.dim_xbh())? {
            candidates += 1;
            let q = l.quotient().projection();
            let y = PartialComoduleDatum::new(
                y0.coalgebra().clone(),
                y0.coalgebra_name(),
                q.mul(y0.pi()),
                q.mul(y0.rho()),
            )?;
            if classify(&y).geometric {
                let big = q.mul(&phi);
                let m = big.kernel();
                geometric.push((k.clone(), m, p.clone(), big, y));
            }
        }
    }
    geometric.sort_by_key(|(k, m, ..)| k.dim() + m.dim());
    let (k, m, p, big, y) = geometric.first().cloned().expect("the zero quotient is geometric");
    let sp = p.pivot_section()?;
    let mut universal = true;
    for (k2, m2, p2, _, y2) in &geometric {
        if !k.is_subspace_of(k2) || !m.is_subspace_of(m2) || !check_morphism(&p2.mul(&sp), &y, y2)?.accepted() {
            universal = false;
            break;
        }
    }
    Ok(Reflection {
        datum: y,
        projection: p,
        xbh_projection: big,
        kernel: k,
        xbh_kernel: m,
        candidates,
        geometric_quotients: geometric.len(),
        universal,
    })
}

/// `M • N`: the geometric reflection of `M ⊗ N`.
pub fn bullet_tensor(
    m: &PartialComoduleDatum,
    n: &PartialComoduleDatum,
    h: &Bialgebra,
    max_dim: usize,
) -> Result<Reflection> {
    let (t, _) = tensor_pcd(m, n, h)?;
    geometric_reflection(&t, max_dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{function_algebra, group_algebra};
    use crate::pcd::{from_global, quotient_global, trivial};
    use crate::setpartial::FiniteMonoid;

    fn kc2(f: Field) -> Bialgebra {
        group_algebra(f, &FiniteMonoid::cyclic(2)).unwrap().bialgebra
    }

    fn regular(h: &Bialgebra) -> PartialComoduleDatum {
        from_global(Arc::new(h.coalgebra.clone()), "H", h.coalgebra.delta().clone()).unwrap()
    }

    #[test]
    fn subspace_counts() {
        let f2 = Field::fp(2).unwrap();
        let f3 = Field::fp(3).unwrap();
        let counts: Vec<usize> = (0..=4).map(|n| all_subspaces(f2, n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 67]);
        let counts: Vec<usize> = (0..=3).map(|n| all_subspaces(f3, n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 28]);
        assert!(all_subspaces(Field::Q, 1).is_err());
    }

    #[test]
    fn globals_tensor_to_globals() {
        let h = kc2(Field::Q);
        let x = regular(&h);
        let (t, w) = tensor_pcd(&x, &x, &h).unwrap();
        assert!(t.ker_pi().is_zero());
        assert_eq!(t.dim_x(), 4);
        assert_eq!(w.mu_xy.rows(), 8);
        assert!(classify(&t).geometric);
        // codiagonal coaction: e⊗g -> (e⊗g)⊗g
        let eg = vector::unit(Field::Q, 4, 1);
        let r = t.pi().inverse().unwrap().mul(t.rho()).apply(&eg);
        assert_eq!(r, vector::unit(Field::Q, 8, 3));
    }

    #[test]
    fn unit_is_global_and_constraints_hold_for_globals() {
        let h = kc2(Field::Q);
        let u = oplax_unit("kC2", &h);
        assert!(u.is_global());
        let x = regular(&h);
        let c = unit_constraints(&x, &h).unwrap();
        assert!(c.right_iso && c.left_iso);
        let e = check_equivariance(&x, &h).unwrap();
        assert!(e.left && e.right);
    }

    #[test]
    fn trivial_datum_over_group_algebra() {
        let h = kc2(Field::Q);
        let t = trivial(Arc::new(h.coalgebra.clone()), "kC2", 1);
        // ker ε is an ideal, so the trivial datum is equivariant on both sides
        let e = check_equivariance(&t, &h).unwrap();
        assert!(e.left && e.right);
        let c = unit_constraints(&t, &h).unwrap();
        assert!(c.right_iso && c.left_iso);
    }

    #[test]
    fn reflection_of_geometric_is_identity() {
        let f2 = Field::fp(2).unwrap();
        let h = kc2(f2);
        let x = regular(&h);
        let r = geometric_reflection(&x, 3).unwrap();
        assert_eq!((r.kernel.dim(), r.xbh_kernel.dim()), (0, 0));
        assert!(r.universal);
        let p = Matrix::from_ints(f2, 1, 2, &[1, 1]);
        let q = quotient_global(&x, &p).unwrap();
        let r = geometric_reflection(&q, 3).unwrap();
        assert_eq!((r.kernel.dim(), r.xbh_kernel.dim()), (0, 0));
        let t = trivial(Arc::new(h.coalgebra.clone()), "kC2", 1);
        let b = bullet_tensor(&t, &t, &h, 3).unwrap();
        assert_eq!(b.datum.dim_x(), 1);
        assert_eq!(b.datum.dim_xbh(), 1);
        assert!(geometric_reflection(&regular(&kc2(Field::Q)), 3).is_err());
    }

    #[test]
    fn function_algebra_tensor_is_quasi() {
        let f3 = Field::fp(3).unwrap();
        let h = function_algebra(f3, &FiniteMonoid::cyclic(2)).unwrap().bialgebra;
        let x = regular(&h);
        let b = quotient_global(&x, &Matrix::from_ints(f3, 1, 2, &[1, 0])).unwrap();
        let (t, _) = tensor_pcd(&b, &b, &h).unwrap();
        assert!(classify(&t).quasi);
        let (t3, _) = tensor_pcd(&t, &b, &h).unwrap();
        let (t3b, _) = tensor_pcd(&b, &t, &h).unwrap();
        assert_eq!(t3.dim_xbh(), t3b.dim_xbh());
        assert!(is_iso_morphism(&Matrix::identity(f3, 1), &t3, &t3b).unwrap());
    }
}
