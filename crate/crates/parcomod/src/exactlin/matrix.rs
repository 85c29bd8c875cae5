//! Dense row-major matrices over an exact field.
//!
//! A linear map `k^n -> k^m` is an `m × n` matrix acting on column coordinates.

use rand::Rng;

use super::scalar::{Field, Scalar};
use super::subspace::Subspace;
use super::vector::{self, Vector};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(bad) = data.iter().find(|x| x.field() != field) {
            return Err(Error::Parse(format!("entry {bad} is not in {field}")));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_ints(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "wrong number of entries");
        Matrix { field, rows, cols, data: entries.iter().map(|&x| field.int(x)).collect() }
    }

    /// Builds a matrix from its rows; `cols` is needed when there are no rows.
    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    /// Builds a matrix from its columns; `rows` is needed when there are no columns.
    pub fn from_columns(field: Field, rows: usize, cols: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn random<R: Rng + ?Sized>(field: Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
        Matrix { field, rows, cols, data: (0..rows * cols).map(|_| field.random(rng)).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        assert_eq!(x.field(), self.field);
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Matrix-vector product, skipping zero coordinates of `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        let mut out = vector::zeros(self.field, self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    o.add_mul(a, x);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "cannot compose {}x{} after {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: vector::add(&self.data, &other.data) }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: vector::sub(&self.data, &other.data) }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: vector::scale(c, &self.data) }
    }

    /// Kronecker product `self ⊗ other`, left factor major.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix { field: self.field, rows: self.rows, cols, data }
    }

    /// `self` stacked above `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.data[(r0 + i) * cols + c0 + j] = b.get(i, j).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].inv();
            for j in c..cols {
                let x = &self.data[r * cols + j] * &inv;
                self.data[r * cols + j] = x;
            }
            let pivot_row: Vec<Scalar> = self.data[r * cols..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                let nf = -&f;
                for j in c..cols {
                    if !pivot_row[j].is_zero() {
                        self.data[i * cols + j].add_mul(&nf, &pivot_row[j]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space in canonical form.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vector::zeros(self.field, self.cols);
            v[free] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            basis.push(v);
        }
        Subspace::span(self.field, self.cols, basis)
    }

    /// Column space as a subspace of the codomain.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.rows, self.columns())
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::from_columns(self.field, self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vector::zeros(self.field, self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = r.get(i, n + j).clone();
            }
        }
        Some(out)
    }

    /// Right inverse of a surjection chosen by the pivot columns of its reduced form:
    /// the pivot block is inverted and the remaining coordinates are set to zero.
    pub fn pivot_section(&self) -> Result<Matrix> {
        let (_, pivots) = self.rref();
        if pivots.len() < self.rows {
            return Err(Error::NonSurjective { rank: pivots.len(), target: self.rows });
        }
        let block =
            Matrix::from_columns(self.field, self.rows, &pivots.iter().map(|&p| self.column(p)).collect::<Vec<_>>());
        let inv = block.inverse().expect("pivot block is invertible");
        let mut s = Matrix::zeros(self.field, self.cols, self.rows);
        for (k, &p) in pivots.iter().enumerate() {
            for j in 0..self.rows {
                s.data[p * self.rows + j] = inv.get(k, j).clone();
            }
        }
        Ok(s)
    }

    /// Left inverse of an injection, chosen by pivots of the transpose.
    pub fn pivot_retraction(&self) -> Result<Matrix> {
        self.transpose().pivot_section().map(|s| s.transpose()).map_err(|e| match e {
            Error::NonSurjective { rank, .. } => Error::NonInjective { rank, source_dim: self.cols },
            other => other,
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    /// Restriction to a subset of rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let rows: Vec<Vector> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Matrix::from_rows(self.field, self.cols, &rows)
    }
}

/// `(f ⊗ I_n) v` without forming the Kronecker product.
pub fn apply_left(f: &Matrix, n: usize, v: &[Scalar]) -> Vector {
    assert_eq!(v.len(), f.cols() * n);
    let field = f.field();
    let mut out = vector::zeros(field, f.rows() * n);
    for j in 0..f.cols() {
        let block = &v[j * n..(j + 1) * n];
        if vector::is_zero(block) {
            continue;
        }
        for i in 0..f.rows() {
            let a = f.get(i, j);
            if a.is_zero() {
                continue;
            }
            for (k, x) in block.iter().enumerate() {
                if !x.is_zero() {
                    out[i * n + k].add_mul(a, x);
                }
            }
        }
    }
    out
}

/// `(I_n ⊗ g) v` without forming the Kronecker product.
pub fn apply_right(n: usize, g: &Matrix, v: &[Scalar]) -> Vector {
    assert_eq!(v.len(), n * g.cols());
    let mut out = Vec::with_capacity(n * g.rows());
    for i in 0..n {
        out.extend(g.apply(&v[i * g.cols()..(i + 1) * g.cols()]));
    }
    out
}

/// `(f ⊗ g) v` without forming the Kronecker product.
pub fn apply_kron(f: &Matrix, g: &Matrix, v: &[Scalar]) -> Vector {
    apply_left(f, g.rows(), &apply_right(f.cols(), g, v))
}

/// The flip `U ⊗ V -> V ⊗ U` as a permutation matrix.
pub fn swap_matrix(field: Field, u: usize, v: usize) -> Matrix {
    let mut m = Matrix::zeros(field, u * v, u * v);
    for i in 0..u {
        for j in 0..v {
            m.set(j * u + i, i * v + j, field.one());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = Matrix::identity(Field::Q, 3).kernel();
        assert_eq!(k.dim(), 0);
        assert_eq!(k.ambient(), 3);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = Matrix::zeros(Field::Q, 2, 3).kernel();
        assert_eq!(k.dim(), 3);
    }

    #[test]
    fn kernel_over_gf5() {
        let f = Field::fp(5).unwrap();
        let m = Matrix::from_ints(f, 2, 2, &[1, 0, 0, 0]);
        let k = m.kernel();
        assert_eq!(k.basis(), &[vec![f.int(0), f.int(1)]]);
    }

    #[test]
    fn kron_entries_follow_declared_order() {
        let q = Field::Q;
        let f = Matrix::from_ints(q, 2, 2, &[1, 2, 3, 4]);
        let g = Matrix::from_ints(q, 2, 2, &[0, 5, 6, 7]);
        let k = f.kron(&g);
        for i in 0..2 {
            for j in 0..2 {
                for a in 0..2 {
                    for b in 0..2 {
                        assert_eq!(*k.get(2 * i + a, 2 * j + b), f.get(i, j) * g.get(a, b));
                    }
                }
            }
        }
        assert!(Matrix::identity(q, 2).kron(&Matrix::identity(q, 3)).is_identity());
    }

    #[test]
    fn structured_application_matches_kron() {
        let f3 = Field::fp(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = Matrix::random(f3, 2, 3, &mut rng);
        let g = Matrix::random(f3, 4, 2, &mut rng);
        let v: Vector = (0..6).map(|_| f3.random(&mut rng)).collect();
        assert_eq!(apply_kron(&f, &g, &v), f.kron(&g).apply(&v));
        let w: Vector = (0..3 * 4).map(|_| f3.random(&mut rng)).collect();
        assert_eq!(apply_left(&f, 4, &w), f.kron(&Matrix::identity(f3, 4)).apply(&w));
    }

    #[test]
    fn section_is_right_inverse() {
        let q = Field::Q;
        let m = Matrix::from_ints(q, 2, 3, &[1, 2, 3, 0, 1, 4]);
        let s = m.pivot_section().unwrap();
        assert!(m.mul(&s).is_identity());
        assert!(Matrix::from_ints(q, 2, 2, &[1, 1, 1, 1]).pivot_section().is_err());
    }

    #[test]
    fn solve_and_inverse() {
        let q = Field::Q;
        let m = Matrix::from_ints(q, 2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let x = m.solve(&[q.int(3), q.int(2)]).unwrap();
        assert_eq!(x, vec![q.int(1), q.int(1)]);
        let sing = Matrix::from_ints(q, 2, 2, &[1, 1, 1, 1]);
        assert!(sing.solve(&[q.int(1), q.int(0)]).is_none());
    }

    #[test]
    fn swap_is_involution() {
        let q = Field::Q;
        let s = swap_matrix(q, 2, 3);
        let t = swap_matrix(q, 3, 2);
        assert!(t.mul(&s).is_identity());
    }
}
