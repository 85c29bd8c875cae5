//! Finite-dimensional associative unital algebras by structure constants, tensor
//! products of them, and two-sided ideal generation by closure.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Scalar, Subspace, Vector};

/// Anything we can multiply vectors in: a materialized algebra or a tensor of two.
pub trait AlgebraLike {
    fn field(&self) -> Field;
    fn dim(&self) -> usize;
    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector;
    fn one(&self) -> Vector;
    /// Elements generating the algebra (1 is implicit).
    fn generators(&self) -> Vec<Vector>;

    /// Product of two basis elements.
    fn basis_mul(&self, i: usize, j: usize) -> Vector {
        let f = self.field();
        self.mul(&vector::unit(f, self.dim(), i), &vector::unit(f, self.dim(), j))
    }
}

#[derive(Debug)]
pub struct FinAlgebra {
    field: Field,
    dim: usize,
    mu: Matrix,
    eta: Matrix,
    /// sparse column of μ for each pair (i, j), indexed `i * dim + j`
    cols: Vec<Vec<(usize, Scalar)>>,
    gens: OnceLock<Vec<Vector>>,
}

impl Clone for FinAlgebra {
    fn clone(&self) -> Self {
        FinAlgebra {
            field: self.field,
            dim: self.dim,
            mu: self.mu.clone(),
            eta: self.eta.clone(),
            cols: self.cols.clone(),
            gens: OnceLock::new(),
        }
    }
}

impl PartialEq for FinAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.mu == other.mu && self.eta == other.eta
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AlgebraReport {
    pub associative: bool,
    pub unital: bool,
    /// first failing basis triple (associativity) or basis index (unit)
    pub witness: Option<Vec<usize>>,
}

impl AlgebraReport {
    pub fn ok(&self) -> bool {
        self.associative && self.unital
    }
}

impl FinAlgebra {
    /// Wraps structure constants after a shape check; use [`FinAlgebra::verify`] for the axioms.
    pub fn new(mu: Matrix, eta: Matrix) -> Result<FinAlgebra> {
        let n = mu.rows();
        if mu.cols() != n * n || eta.rows() != n || eta.cols() != 1 {
            return Err(Error::ShapeMismatch(format!(
                "mu is {}x{}, eta is {}x{} for dimension {n}",
                mu.rows(),
                mu.cols(),
                eta.rows(),
                eta.cols()
            )));
        }
        let field = mu.field();
        let mut cols = vec![Vec::new(); n * n];
        for r in 0..n {
            for (c, col) in cols.iter_mut().enumerate() {
                let x = mu.get(r, c);
                if !x.is_zero() {
                    col.push((r, x.clone()));
                }
            }
        }
        Ok(FinAlgebra { field, dim: n, mu, eta, cols, gens: OnceLock::new() })
    }

    /// Builds and verifies.
    pub fn checked(mu: Matrix, eta: Matrix) -> Result<FinAlgebra> {
        let a = FinAlgebra::new(mu, eta)?;
        let r = a.verify();
        if !r.ok() {
            return Err(Error::Validation {
                path: "algebra".into(),
                axiom: if r.associative { "unit".into() } else { "associativity".into() },
                witness: format!("{:?}", r.witness),
            });
        }
        Ok(a)
    }

    /// The ground field `k` as an algebra.
    pub fn ground(field: Field) -> FinAlgebra {
        FinAlgebra::new(Matrix::identity(field, 1), Matrix::identity(field, 1)).unwrap()
    }

    /// `k^n` with pointwise multiplication.
    pub fn diagonal(field: Field, n: usize) -> FinAlgebra {
        let mut mu = Matrix::zeros(field, n, n * n);
        for i in 0..n {
            mu.set(i, i * n + i, field.one());
        }
        let eta = Matrix::from_columns(field, n, &[vec![field.one(); n]]);
        FinAlgebra::new(mu, eta).unwrap()
    }

    /// `k[t]/(t^n)`.
    pub fn truncated_polynomial(field: Field, n: usize) -> FinAlgebra {
        let mut mu = Matrix::zeros(field, n, n * n);
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    mu.set(i + j, i * n + j, field.one());
                }
            }
        }
        FinAlgebra::new(mu, Matrix::from_columns(field, n, &[vector::unit(field, n, 0)])).unwrap()
    }

    /// The algebra of `n × n` matrices with basis `E_ij` at index `i * n + j`.
    pub fn matrix_algebra(field: Field, n: usize) -> FinAlgebra {
        let d = n * n;
        let mut mu = Matrix::zeros(field, d, d * d);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    mu.set(i * n + l, (i * n + j) * d + j * n + l, field.one());
                }
            }
        }
        let mut one = vector::zeros(field, d);
        for i in 0..n {
            one[i * n + i] = field.one();
        }
        FinAlgebra::new(mu, Matrix::from_columns(field, d, &[one])).unwrap()
    }

    pub fn mu(&self) -> &Matrix {
        &self.mu
    }

    pub fn eta(&self) -> &Matrix {
        &self.eta
    }

    pub fn verify(&self) -> AlgebraReport {
        let n = self.dim;
        let f = self.field;
        let mut report = AlgebraReport { associative: true, unital: true, witness: None };
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = self.basis_mul(i, j);
                for k in 0..n {
                    let left = self.mul(&ij, &vector::unit(f, n, k));
                    let right = self.mul(&vector::unit(f, n, i), &self.basis_mul(j, k));
                    if left != right {
                        report.associative = false;
                        report.witness = Some(vec![i, j, k]);
                        break 'outer;
                    }
                }
            }
        }
        let one = self.one();
        for i in 0..n {
            let e = vector::unit(f, n, i);
            if self.mul(&one, &e) != e || self.mul(&e, &one) != e {
                report.unital = false;
                if report.witness.is_none() {
                    report.witness = Some(vec![i]);
                }
                break;
            }
        }
        report
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_mul(i, j) == self.basis_mul(j, i)))
    }

    /// Materializes any algebra-like object (only sensible at small dimension).
    pub fn materialize(a: &dyn AlgebraLike) -> FinAlgebra {
        let n = a.dim();
        let f = a.field();
        let mut cols = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                cols.push(a.basis_mul(i, j));
            }
        }
        FinAlgebra::new(Matrix::from_columns(f, n, &cols), Matrix::from_columns(f, n, &[a.one()])).unwrap()
    }

    /// Multiplication as a map `A ⊗ A -> A` (the matrix μ).
    pub fn mul_matrix(&self) -> &Matrix {
        &self.mu
    }

    /// Left multiplication by `a` as a matrix.
    pub fn left_mul(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &vector::unit(self.field, self.dim, j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Right multiplication by `a` as a matrix.
    pub fn right_mul(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&vector::unit(self.field, self.dim, j), a)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    fn compute_generators(&self) -> Vec<Vector> {
        let n = self.dim;
        let f = self.field;
        let mut gens: Vec<Vector> = Vec::new();
        let mut sub = Subspace::span(f, n, vec![self.one()]);
        for i in 0..n {
            let e = vector::unit(f, n, i);
            if sub.contains(&e) {
                continue;
            }
            gens.push(e);
            sub = subalgebra_closure(self, sub, &gens);
        }
        gens
    }
}

/// Smallest subspace containing `start` and closed under right multiplication by `gens`.
fn subalgebra_closure(a: &dyn AlgebraLike, start: Subspace, gens: &[Vector]) -> Subspace {
    let mut sub = start;
    let mut queue: Vec<Vector> = sub.basis().to_vec();
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = a.mul(&v, g);
            if sub.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    sub
}

impl AlgebraLike for FinAlgebra {
    fn field(&self) -> Field {
        self.field
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let n = self.dim;
        assert!(a.len() == n && b.len() == n, "operands are not in the algebra");
        let mut out = vector::zeros(self.field, n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (r, c) in &self.cols[i * n + j] {
                    out[*r].add_mul(&xy, c);
                }
            }
        }
        out
    }

    fn one(&self) -> Vector {
        self.eta.column(0)
    }

    fn generators(&self) -> Vec<Vector> {
        self.gens.get_or_init(|| self.compute_generators()).clone()
    }

    fn basis_mul(&self, i: usize, j: usize) -> Vector {
        let mut out = vector::zeros(self.field, self.dim);
        for (r, c) in &self.cols[i * self.dim + j] {
            out[*r] = c.clone();
        }
        out
    }
}

/// `A ⊗ B` with componentwise multiplication, never materialized.
pub struct TensorAlgebra<'a> {
    pub left: &'a dyn AlgebraLike,
    pub right: &'a dyn AlgebraLike,
}

impl<'a> TensorAlgebra<'a> {
    pub fn new(left: &'a dyn AlgebraLike, right: &'a dyn AlgebraLike) -> TensorAlgebra<'a> {
        TensorAlgebra { left, right }
    }
}

impl AlgebraLike for TensorAlgebra<'_> {
    fn field(&self) -> Field {
        self.left.field()
    }

    fn dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let (n, m) = (self.left.dim(), self.right.dim());
        let f = self.field();
        let mut out = vector::zeros(f, n * m);
        let mut lcache: std::collections::HashMap<(usize, usize), Vector> = Default::default();
        let mut rcache: std::collections::HashMap<(usize, usize), Vector> = Default::default();
        for (ia, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (i, j) = (ia / m, ia % m);
            for (kb, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (k, l) = (kb / m, kb % m);
                let lp = lcache.entry((i, k)).or_insert_with(|| self.left.basis_mul(i, k));
                let rp = rcache.entry((j, l)).or_insert_with(|| self.right.basis_mul(j, l));
                let xy = x * y;
                for (p, u) in lp.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    let c = &xy * u;
                    for (q, w) in rp.iter().enumerate() {
                        if !w.is_zero() {
                            out[p * m + q].add_mul(&c, w);
                        }
                    }
                }
            }
        }
        out
    }

    fn one(&self) -> Vector {
        vector::tensor(&self.left.one(), &self.right.one())
    }

    fn generators(&self) -> Vec<Vector> {
        let mut g: Vec<Vector> = self.left.generators().iter().map(|a| vector::tensor(a, &self.right.one())).collect();
        g.extend(self.right.generators().iter().map(|b| vector::tensor(&self.left.one(), b)));
        g
    }
}

/// Two-sided ideal generated by `gens`: closure under left and right multiplication
/// by algebra generators until the dimension stabilizes.
pub fn two_sided_ideal(a: &dyn AlgebraLike, gens: &Subspace) -> Subspace {
    let algebra_gens = a.generators();
    let mut ideal = gens.clone();
    let mut queue: Vec<Vector> = ideal.basis().to_vec();
    while let Some(v) = queue.pop() {
        for g in &algebra_gens {
            for w in [a.mul(g, &v), a.mul(&v, g)] {
                if ideal.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
    }
    ideal
}

/// First generator product escaping `s`, if `s` is not a two-sided ideal.
pub fn ideal_violation(a: &dyn AlgebraLike, s: &Subspace) -> Option<Vector> {
    let gens = a.generators();
    for v in s.basis() {
        for g in &gens {
            for w in [a.mul(g, v), a.mul(v, g)] {
                if !s.contains(&w) {
                    return Some(v.clone());
                }
            }
        }
    }
    None
}

/// Is `f: A -> B` unital and multiplicative? Returns the first failing basis pair.
pub fn algebra_map_violation(f: &Matrix, a: &dyn AlgebraLike, b: &dyn AlgebraLike) -> Option<String> {
    if f.apply(&a.one()) != b.one() {
        return Some("unit is not preserved".into());
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = f.apply(&a.basis_mul(i, j));
            let fi = f.column(i);
            let fj = f.column(j);
            if lhs != b.mul(&fi, &fj) {
                return Some(format!("f(e{i} e{j}) != f(e{i}) f(e{j})"));
            }
        }
    }
    None
}

/// A quotient `A / I` as an algebra, with the projection and its section.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: FinAlgebra,
    pub ideal: Subspace,
    pub projection: Matrix,
    pub section: Matrix,
}

/// `A / I` for a two-sided ideal `I` (not checked here).
pub fn quotient_algebra(a: &dyn AlgebraLike, ideal: Subspace) -> QuotientAlgebra {
    let q = ideal.quotient();
    let f = a.field();
    let d = q.dim();
    let mut cols = Vec::with_capacity(d * d);
    let lifts: Vec<Vector> = (0..d).map(|i| q.lift(&vector::unit(f, d, i))).collect();
    for x in &lifts {
        for y in &lifts {
            cols.push(q.project(&a.mul(x, y)));
        }
    }
    let mu = Matrix::from_columns(f, d, &cols);
    let eta = Matrix::from_columns(f, d, &[q.project(&a.one())]);
    QuotientAlgebra {
        algebra: FinAlgebra::new(mu, eta).expect("quotient structure constants"),
        projection: q.projection(),
        section: q.section(),
        ideal,
    }
}

/// Pushout in algebras of `f: R -> A` and a surjective algebra map `g: R -> W`:
/// `A / I` with `I` the ideal generated by `f(ker g)`.
pub fn alg_pushout(f: &Matrix, g: &Matrix, r: &FinAlgebra, a: &FinAlgebra, w: &FinAlgebra) -> Result<QuotientAlgebra> {
    if let Some(why) = algebra_map_violation(f, r, a) {
        return Err(Error::NotAlgebraMap(format!("f: {why}")));
    }
    if let Some(why) = algebra_map_violation(g, r, w) {
        return Err(Error::NotAlgebraMap(format!("g: {why}")));
    }
    if !g.is_surjective() {
        return Err(Error::NonSurjective { rank: g.rank(), target: g.rows() });
    }
    let gens = g.kernel().image_under(f);
    Ok(quotient_algebra(a, two_sided_ideal(a, &gens)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_algebras_verify() {
        let q = Field::Q;
        assert!(FinAlgebra::diagonal(q, 3).verify().ok());
        assert!(FinAlgebra::truncated_polynomial(q, 4).verify().ok());
        let m2 = FinAlgebra::matrix_algebra(q, 2);
        assert!(m2.verify().ok());
        assert!(!m2.is_commutative());
    }

    #[test]
    fn ideal_in_matrix_algebra_is_everything() {
        let q = Field::Q;
        let m2 = FinAlgebra::matrix_algebra(q, 2);
        let e11 = Subspace::span(q, 4, vec![vector::unit(q, 4, 0)]);
        assert_eq!(two_sided_ideal(&m2, &e11).dim(), 4);
    }

    #[test]
    fn ideal_in_truncated_polynomials() {
        let q = Field::Q;
        let a = FinAlgebra::truncated_polynomial(q, 4);
        let t2 = Subspace::span(q, 4, vec![vector::unit(q, 4, 2)]);
        let i = two_sided_ideal(&a, &t2);
        assert_eq!(i.dim(), 2);
        let qa = quotient_algebra(&a, i);
        assert!(qa.algebra.verify().ok());
        assert_eq!(qa.algebra.dim(), 2);
    }

    #[test]
    fn tensor_algebra_generators_and_product() {
        let q = Field::Q;
        let a = FinAlgebra::truncated_polynomial(q, 3);
        let b = FinAlgebra::diagonal(q, 2);
        let t = TensorAlgebra::new(&a, &b);
        let m = FinAlgebra::materialize(&t);
        assert!(m.verify().ok());
        let sub = subalgebra_closure(&t, Subspace::span(q, 6, vec![t.one()]), &t.generators());
        assert_eq!(sub.dim(), 6);
    }

    #[test]
    fn alg_pushout_with_trivial_kernel_image() {
        let q = Field::Q;
        let a = FinAlgebra::truncated_polynomial(q, 3);
        let id = Matrix::identity(q, 3);
        let p = alg_pushout(&id, &id, &a, &a, &a).unwrap();
        assert_eq!(p.algebra.dim(), 3);
    }
}
