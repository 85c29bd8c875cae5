//! Coordinate vectors as plain `Vec<Scalar>` plus the few helpers every module needs.

use super::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zeros(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// `y += c * x`.
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    assert_eq!(x.len(), y.len());
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            yi.add_mul(c, xi);
        }
    }
}

/// Kronecker product of coordinate vectors: index of `e_i ⊗ e_j` is `i * b.len() + j`.
pub fn tensor(a: &[Scalar], b: &[Scalar]) -> Vector {
    let field = a.first().or(b.first()).map(Scalar::field);
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        if x.is_zero() {
            out.extend(std::iter::repeat_n(field.unwrap().zero(), b.len()));
        } else {
            out.extend(b.iter().map(|y| x * y));
        }
    }
    out
}

/// Linear combination `Σ c_i v_i` of equally long vectors.
pub fn combine(field: Field, n: usize, coeffs: &[Scalar], vs: &[Vector]) -> Vector {
    let mut out = zeros(field, n);
    for (c, v) in coeffs.iter().zip(vs) {
        axpy(&mut out, c, v);
    }
    out
}

/// Index of the first non-zero entry.
pub fn leading(v: &[Scalar]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}
