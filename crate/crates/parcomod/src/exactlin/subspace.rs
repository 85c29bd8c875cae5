//! Subspaces in canonical reduced echelon form, and quotients by them.

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use super::vector::{self, Vector};

/// A subspace of `k^n`, stored as the rows of its reduced row echelon basis.
///
/// Rows are sorted by pivot, every pivot entry is 1 and every other row vanishes
/// in that column, so equal subspaces compare equal field by field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| vector::unit(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary generators.
    pub fn span<I: IntoIterator<Item = Vector>>(field: Field, ambient: usize, gens: I) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for v in gens {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Normal form of `v` modulo the subspace: zero in every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient, "vector is not in the ambient space");
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = -&w[p];
                vector::axpy(&mut w, &c, b);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Adds a generator, keeping the canonical form. Returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut w = self.reduce(&v);
        let Some(p) = vector::leading(&w) else {
            return false;
        };
        let inv = w[p].inv();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for b in self.basis.iter_mut() {
            if !b[p].is_zero() {
                let c = -&b[p];
                vector::axpy(b, &c, &w);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.basis.insert(pos, w);
        true
    }

    /// Coordinates with respect to the stored basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut s = self.clone();
        for b in &other.basis {
            s.insert(b.clone());
        }
        s
    }

    /// Intersection computed from the pullback of the two inclusions.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let a = self.inclusion();
        let b = other.inclusion();
        let pb = super::ops::pullback(&a, &b).expect("inclusions share a codomain");
        let gens = pb.basis().iter().map(|v| a.apply(&v[..self.dim()])).collect::<Vec<_>>();
        Subspace::span(self.field, self.ambient, gens)
    }

    /// Inclusion map `k^dim -> k^ambient` whose columns are the basis vectors.
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.basis)
    }

    /// Image under a linear map.
    pub fn image_under(&self, f: &Matrix) -> Subspace {
        assert_eq!(f.cols(), self.ambient);
        Subspace::span(self.field, f.rows(), self.basis.iter().map(|b| f.apply(b)))
    }

    /// Image under a map given as a closure on vectors.
    pub fn map<F: Fn(&[Scalar]) -> Vector>(&self, target: usize, f: F) -> Subspace {
        Subspace::span(self.field, target, self.basis.iter().map(|b| f(b)))
    }

    /// `self ⊗ k^n` inside `k^ambient ⊗ k^n`.
    pub fn tensor_right(&self, n: usize) -> Subspace {
        let mut gens = Vec::with_capacity(self.dim() * n);
        for b in &self.basis {
            for j in 0..n {
                gens.push(vector::tensor(b, &vector::unit(self.field, n, j)));
            }
        }
        Subspace::span(self.field, self.ambient * n, gens)
    }

    /// `k^n ⊗ self` inside `k^n ⊗ k^ambient`.
    pub fn tensor_left(&self, n: usize) -> Subspace {
        let mut gens = Vec::with_capacity(self.dim() * n);
        for i in 0..n {
            for b in &self.basis {
                gens.push(vector::tensor(&vector::unit(self.field, n, i), b));
            }
        }
        Subspace::span(self.field, self.ambient * n, gens)
    }

    pub fn quotient(&self) -> QuotientPresentation {
        QuotientPresentation::new(self.clone())
    }
}

/// `V / W` presented by the coordinates of `V` that are not pivots of `W`.
///
/// The projection sends `v` to the free coordinates of its normal form modulo `W`;
/// the section places quotient coordinates back on those free positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    kernel: Subspace,
    free: Vec<usize>,
}

impl QuotientPresentation {
    pub fn new(kernel: Subspace) -> QuotientPresentation {
        let mut is_pivot = vec![false; kernel.ambient];
        for &p in &kernel.pivots {
            is_pivot[p] = true;
        }
        let free = (0..kernel.ambient).filter(|&i| !is_pivot[i]).collect();
        QuotientPresentation { kernel, free }
    }

    pub fn field(&self) -> Field {
        self.kernel.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.kernel.ambient
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn project(&self, v: &[Scalar]) -> Vector {
        let r = self.kernel.reduce(v);
        self.free.iter().map(|&i| r[i].clone()).collect()
    }

    pub fn lift(&self, q: &[Scalar]) -> Vector {
        assert_eq!(q.len(), self.dim());
        let mut v = vector::zeros(self.field(), self.ambient_dim());
        for (x, &i) in q.iter().zip(&self.free) {
            v[i] = x.clone();
        }
        v
    }

    /// The projection as a `dim × ambient_dim` matrix.
    pub fn projection(&self) -> Matrix {
        let n = self.ambient_dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.project(&vector::unit(self.field(), n, j))).collect();
        Matrix::from_columns(self.field(), self.dim(), &cols)
    }

    /// The section as an `ambient_dim × dim` matrix.
    pub fn section(&self) -> Matrix {
        let cols: Vec<Vector> =
            (0..self.dim()).map(|j| self.lift(&vector::unit(self.field(), self.dim(), j))).collect();
        Matrix::from_columns(self.field(), self.ambient_dim(), &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_independent_of_generators() {
        let q = Field::Q;
        let a = Subspace::span(q, 3, vec![vec![q.int(1), q.int(2), q.int(0)], vec![q.int(0), q.int(1), q.int(1)]]);
        let b = Subspace::span(q, 3, vec![vec![q.int(1), q.int(3), q.int(1)], vec![q.int(2), q.int(5), q.int(1)]]);
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_round_trip() {
        let f = Field::fp(3).unwrap();
        let w = Subspace::span(f, 3, vec![vec![f.int(1), f.int(1), f.int(0)]]);
        let qp = w.quotient();
        assert_eq!(qp.dim(), 2);
        assert!(qp.projection().mul(&qp.section()).is_identity());
        assert!(vector::is_zero(&qp.project(&[f.int(2), f.int(2), f.int(0)])));
    }

    #[test]
    fn intersection_of_planes() {
        let q = Field::Q;
        let a = Subspace::span(q, 3, vec![vector::unit(q, 3, 0), vector::unit(q, 3, 1)]);
        let b = Subspace::span(q, 3, vec![vector::unit(q, 3, 1), vector::unit(q, 3, 2)]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(q, 3, vec![vector::unit(q, 3, 1)]));
        assert_eq!(a.sum(&b).dim(), 3);
    }
}
