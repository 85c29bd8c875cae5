//! Finite-dimensional coalgebras, bialgebras and Hopf algebras given by structure
//! constants, their axiom verifiers, and the standard constructors.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{apply_left, apply_right, vector, Field, Matrix, Scalar, Vector};
use crate::hopfgalois::algebra::{AlgebraLike, FinAlgebra};
use crate::setpartial::FiniteMonoid;

/// `Δ(h_k) = Σ d^k_{ij} h_i ⊗ h_j` stored as an `n² × n` matrix, `ε` as `1 × n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coalgebra {
    field: Field,
    dim: usize,
    delta: Matrix,
    epsilon: Matrix,
    labels: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Bialgebra {
    pub coalgebra: Coalgebra,
    pub algebra: FinAlgebra,
}

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub bialgebra: Bialgebra,
    pub antipode: Matrix,
}

/// One axiom and, when it fails, the basis indices exhibiting the failure.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: String,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn holds(&self, axiom: &str) -> bool {
        self.checks.iter().filter(|c| c.axiom == axiom).all(|c| c.holds)
    }

    fn push(&mut self, axiom: &str, witness: Option<Vec<usize>>) {
        self.checks.push(AxiomCheck { axiom: axiom.into(), holds: witness.is_none(), witness });
    }

    fn into_result(self, what: &str) -> Result<()> {
        match self.failures().next() {
            None => Ok(()),
            Some(c) => Err(Error::Validation {
                path: what.into(),
                axiom: c.axiom.clone(),
                witness: format!("basis {:?}", c.witness.clone().unwrap_or_default()),
            }),
        }
    }
}

fn first_failure<F: FnMut(usize) -> bool>(n: usize, mut ok: F) -> Option<Vec<usize>> {
    (0..n).find(|&k| !ok(k)).map(|k| vec![k])
}

impl Coalgebra {
    /// Wraps structure constants after a shape check.
    pub fn new(delta: Matrix, epsilon: Matrix, labels: Option<Vec<String>>) -> Result<Coalgebra> {
        let n = delta.cols();
        if delta.rows() != n * n || epsilon.rows() != 1 || epsilon.cols() != n {
            return Err(Error::ShapeMismatch(format!(
                "delta is {}x{}, epsilon is {}x{}",
                delta.rows(),
                delta.cols(),
                epsilon.rows(),
                epsilon.cols()
            )));
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("h{i}")).collect());
        if labels.len() != n {
            return Err(Error::ShapeMismatch(format!("{} labels for dimension {n}", labels.len())));
        }
        Ok(Coalgebra { field: delta.field(), dim: n, delta, epsilon, labels })
    }

    /// Builds and requires every axiom to hold.
    pub fn checked(delta: Matrix, epsilon: Matrix, labels: Option<Vec<String>>) -> Result<Coalgebra> {
        let c = Coalgebra::new(delta, epsilon, labels)?;
        c.verify().into_result("coalgebra")?;
        Ok(c)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    pub fn epsilon(&self) -> &Matrix {
        &self.epsilon
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn verify(&self) -> AxiomReport {
        let n = self.dim;
        let mut r = AxiomReport::default();
        let images: Vec<Vector> = (0..n).map(|k| self.delta.column(k)).collect();
        r.push(
            "coassociativity",
            first_failure(n, |k| apply_left(&self.delta, n, &images[k]) == apply_right(n, &self.delta, &images[k])),
        );
        let unit = |k: usize| vector::unit(self.field, n, k);
        r.push("left counit", first_failure(n, |k| apply_left(&self.epsilon, n, &images[k]) == unit(k)));
        r.push("right counit", first_failure(n, |k| apply_right(n, &self.epsilon, &images[k]) == unit(k)));
        r
    }

    pub fn is_cocommutative(&self) -> bool {
        let sw = crate::exactlin::swap_matrix(self.field, self.dim, self.dim);
        sw.mul(&self.delta) == self.delta
    }

    /// `ε(1_H)`-free counit of a vector.
    pub fn counit(&self, v: &[Scalar]) -> Scalar {
        self.epsilon.apply(v)[0].clone()
    }
}

impl Bialgebra {
    pub fn new(coalgebra: Coalgebra, mu: Matrix, eta: Matrix) -> Result<Bialgebra> {
        if mu.rows() != coalgebra.dim() {
            return Err(Error::ShapeMismatch("mu does not match the coalgebra dimension".into()));
        }
        Ok(Bialgebra { coalgebra, algebra: FinAlgebra::new(mu, eta)? })
    }

    pub fn checked(coalgebra: Coalgebra, mu: Matrix, eta: Matrix) -> Result<Bialgebra> {
        let b = Bialgebra::new(coalgebra, mu, eta)?;
        b.verify().into_result("bialgebra")?;
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    pub fn one(&self) -> Vector {
        self.algebra.one()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.algebra.mul(a, b)
    }

    pub fn verify(&self) -> AxiomReport {
        let mut r = self.coalgebra.verify();
        let alg = self.algebra.verify();
        r.push("associativity", if alg.associative { None } else { alg.witness.clone() });
        r.push("unit", if alg.unital { None } else { alg.witness.clone().or(Some(vec![])) });
        let n = self.dim();
        let f = self.field();
        let h = &self.coalgebra;
        let hh = crate::hopfgalois::algebra::TensorAlgebra::new(&self.algebra, &self.algebra);
        let mut delta_mult = None;
        let mut eps_mult = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let prod = self.algebra.basis_mul(i, j);
                let lhs = h.delta().apply(&prod);
                let rhs = hh.mul(&h.delta().column(i), &h.delta().column(j));
                if lhs != rhs && delta_mult.is_none() {
                    delta_mult = Some(vec![i, j]);
                }
                let e = h.counit(&prod);
                if e != h.counit(&vector::unit(f, n, i)) * h.counit(&vector::unit(f, n, j)) && eps_mult.is_none() {
                    eps_mult = Some(vec![i, j]);
                }
                if delta_mult.is_some() && eps_mult.is_some() {
                    break 'outer;
                }
            }
        }
        r.push("delta multiplicative", delta_mult);
        r.push("epsilon multiplicative", eps_mult);
        let one = self.one();
        r.push("delta unital", if h.delta().apply(&one) == vector::tensor(&one, &one) { None } else { Some(vec![]) });
        r.push("epsilon unital", if h.counit(&one).is_one() { None } else { Some(vec![]) });
        r
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }
}

impl HopfAlgebra {
    pub fn new(bialgebra: Bialgebra, antipode: Matrix) -> Result<HopfAlgebra> {
        let n = bialgebra.dim();
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::ShapeMismatch("antipode must be square of the algebra dimension".into()));
        }
        Ok(HopfAlgebra { bialgebra, antipode })
    }

    pub fn checked(bialgebra: Bialgebra, antipode: Matrix) -> Result<HopfAlgebra> {
        let h = HopfAlgebra::new(bialgebra, antipode)?;
        h.verify().into_result("hopf algebra")?;
        Ok(h)
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.bialgebra.coalgebra
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.bialgebra.algebra
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn field(&self) -> Field {
        self.bialgebra.field()
    }

    pub fn verify(&self) -> AxiomReport {
        let mut r = self.bialgebra.verify();
        let n = self.dim();
        let h = self.coalgebra();
        let a = self.algebra();
        let one = a.one();
        let bad = first_failure(n, |k| {
            let d = h.delta().column(k);
            let target = vector::scale(&h.counit(&vector::unit(self.field(), n, k)), &one);
            let left = a.mul_matrix().apply(&apply_left(&self.antipode, n, &d));
            let right = a.mul_matrix().apply(&apply_right(n, &self.antipode, &d));
            left == target && right == target
        });
        r.push("antipode", bad);
        r
    }
}

/// The group algebra `kG`: `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(field: Field, g: &FiniteMonoid) -> Result<HopfAlgebra> {
    if !g.is_group() {
        return Err(Error::NotAGroup("some element has no inverse".into()));
    }
    let n = g.size();
    let mut delta = Matrix::zeros(field, n * n, n);
    let mut mu = Matrix::zeros(field, n, n * n);
    let mut anti = Matrix::zeros(field, n, n);
    for a in 0..n {
        delta.set(a * n + a, a, field.one());
        anti.set(g.inverse(a).unwrap(), a, field.one());
        for b in 0..n {
            mu.set(g.mul(a, b), a * n + b, field.one());
        }
    }
    let epsilon = Matrix::from_rows(field, n, &[vec![field.one(); n]]);
    let eta = Matrix::from_columns(field, n, &[vector::unit(field, n, g.unit())]);
    let labels = (0..n).map(|a| if a == g.unit() { "e".to_string() } else { format!("g{a}") }).collect();
    let coalg = Coalgebra::new(delta, epsilon, Some(labels))?;
    HopfAlgebra::new(Bialgebra::new(coalg, mu, eta)?, anti)
}

/// The function algebra `k^G` on indicator functions `δ_g`:
/// pointwise product, `Δ(δ_h) = Σ_{ab=h} δ_a ⊗ δ_b`, `ε(δ_h) = [h = e]`, `S(δ_h) = δ_{h⁻¹}`.
pub fn function_algebra(field: Field, g: &FiniteMonoid) -> Result<HopfAlgebra> {
    if !g.is_group() {
        return Err(Error::NotAGroup("some element has no inverse".into()));
    }
    let n = g.size();
    let mut delta = Matrix::zeros(field, n * n, n);
    let mut mu = Matrix::zeros(field, n, n * n);
    let mut anti = Matrix::zeros(field, n, n);
    for a in 0..n {
        mu.set(a, a * n + a, field.one());
        anti.set(g.inverse(a).unwrap(), a, field.one());
        for b in 0..n {
            delta.set(a * n + b, g.mul(a, b), field.one());
        }
    }
    let epsilon = Matrix::from_rows(field, n, &[vector::unit(field, n, g.unit())]);
    let eta = Matrix::from_columns(field, n, &[vec![field.one(); n]]);
    let labels = (0..n).map(|a| if a == g.unit() { "d_e".to_string() } else { format!("d_g{a}") }).collect();
    let coalg = Coalgebra::new(delta, epsilon, Some(labels))?;
    HopfAlgebra::new(Bialgebra::new(coalg, mu, eta)?, anti)
}

fn var_name(vars: usize, i: usize) -> String {
    if vars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{i}")
    }
}

/// Exponent vectors of total degree `deg`, lexicographically descending.
fn exponents_of_degree(vars: usize, deg: usize) -> Vec<Vec<usize>> {
    if vars == 1 {
        return vec![vec![deg]];
    }
    let mut out = Vec::new();
    for a in (0..=deg).rev() {
        for mut rest in exponents_of_degree(vars - 1, deg - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

fn monomial_label(vars: usize, e: &[usize]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { var_name(vars, i) } else { format!("{}^{k}", var_name(vars, i)) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Monomial basis of a commutative polynomial truncation, graded then lex descending.
pub fn commutative_monomials(vars: usize, d: usize) -> Vec<Vec<usize>> {
    (0..=d).flat_map(|deg| exponents_of_degree(vars, deg)).collect()
}

/// Word basis of a free algebra truncation, graded then lexicographic.
pub fn words(vars: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &layer {
            for v in 0..vars {
                let mut w2 = w.clone();
                w2.push(v);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Polynomials (commutative) or words (noncommutative) of degree at most `d` in
/// primitive variables. The span is closed under `Δ`, so it is a subcoalgebra; it is
/// not a bialgebra because truncating the product breaks multiplicativity of `Δ`.
pub fn poly_truncation(field: Field, vars: usize, d: usize, commutative: bool) -> Result<Coalgebra> {
    if vars == 0 {
        return Err(Error::ShapeMismatch("need at least one variable".into()));
    }
    if commutative {
        let basis = commutative_monomials(vars, d);
        let index: BTreeMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let n = basis.len();
        let mut delta = Matrix::zeros(field, n * n, n);
        for (k, e) in basis.iter().enumerate() {
            for b in box_below(e) {
                let rest: Vec<usize> = e.iter().zip(&b).map(|(x, y)| x - y).collect();
                let c: i64 = e.iter().zip(&b).map(|(&n, &k)| binomial(n, k)).product();
                delta.set(index[&b] * n + index[&rest], k, field.int(c));
            }
        }
        let epsilon = Matrix::from_rows(field, n, &[vector::unit(field, n, 0)]);
        let labels = basis.iter().map(|e| monomial_label(vars, e)).collect();
        Coalgebra::new(delta, epsilon, Some(labels))
    } else {
        let basis = words(vars, d);
        let index: BTreeMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let n = basis.len();
        let mut delta = Matrix::zeros(field, n * n, n);
        for (k, w) in basis.iter().enumerate() {
            let len = w.len();
            for mask in 0..(1usize << len) {
                let left: Vec<usize> = (0..len).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).collect();
                let right: Vec<usize> = (0..len).filter(|i| mask >> i & 1 == 0).map(|i| w[i]).collect();
                let row = index[&left] * n + index[&right];
                let cur = delta.get(row, k).clone();
                delta.set(row, k, &cur + &field.one());
            }
        }
        let epsilon = Matrix::from_rows(field, n, &[vector::unit(field, n, 0)]);
        let labels = basis
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "1".into()
                } else {
                    w.iter().map(|&v| var_name(vars, v)).collect::<Vec<_>>().join("")
                }
            })
            .collect();
        Coalgebra::new(delta, epsilon, Some(labels))
    }
}

fn box_below(e: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &k in e {
        let mut next = Vec::new();
        for prefix in &out {
            for j in 0..=k {
                let mut p = prefix.clone();
                p.push(j);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Inclusion of the degree-`d` truncation into the degree-`d+1` one (basis is graded,
/// so this is the first `dim_d` coordinates).
pub fn truncation_inclusion(field: Field, vars: usize, d: usize, commutative: bool) -> Result<Matrix> {
    let small = poly_truncation(field, vars, d, commutative)?.dim();
    let big = poly_truncation(field, vars, d + 1, commutative)?.dim();
    let cols: Vec<Vector> = (0..small).map(|i| vector::unit(field, big, i)).collect();
    Ok(Matrix::from_columns(field, big, &cols))
}

/// The restricted enveloping algebra `k[x_1..x_v]/(x_i^p)` over GF(p) with primitive
/// variables: a genuine finite-dimensional Hopf algebra in characteristic `p`, used as
/// the finite stand-in for the polynomial bialgebra of the affine plane.
pub fn restricted_polynomial(field: Field, vars: usize) -> Result<HopfAlgebra> {
    let p = match field {
        Field::Fp { p } => p as usize,
        Field::Q => return Err(Error::Unsupported("restricted polynomial Hopf algebra needs characteristic p".into())),
    };
    let max_deg = vars * (p - 1);
    let basis: Vec<Vec<usize>> =
        (0..=max_deg).flat_map(|deg| exponents_of_degree(vars, deg)).filter(|e| e.iter().all(|&k| k < p)).collect();
    let index: BTreeMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let n = basis.len();
    let mut delta = Matrix::zeros(field, n * n, n);
    let mut mu = Matrix::zeros(field, n, n * n);
    let mut anti = Matrix::zeros(field, n, n);
    for (k, e) in basis.iter().enumerate() {
        for b in box_below(e) {
            let rest: Vec<usize> = e.iter().zip(&b).map(|(x, y)| x - y).collect();
            let c: i64 = e.iter().zip(&b).map(|(&n, &k)| binomial(n, k)).product();
            delta.set(index[&b] * n + index[&rest], k, field.int(c));
        }
        let deg: usize = e.iter().sum();
        anti.set(k, k, field.int(if deg.is_multiple_of(2) { 1 } else { -1 }));
        for (j, f) in basis.iter().enumerate() {
            let s: Vec<usize> = e.iter().zip(f).map(|(a, b)| a + b).collect();
            if let Some(&t) = index.get(&s) {
                mu.set(t, k * n + j, field.one());
            }
        }
    }
    let epsilon = Matrix::from_rows(field, n, &[vector::unit(field, n, 0)]);
    let eta = Matrix::from_columns(field, n, &[vector::unit(field, n, 0)]);
    let labels = basis.iter().map(|e| monomial_label(vars, e)).collect();
    let coalg = Coalgebra::new(delta, epsilon, Some(labels))?;
    HopfAlgebra::new(Bialgebra::new(coalg, mu, eta)?, anti)
}

/// Index of a commutative monomial (given by exponents) in a basis produced here.
pub fn monomial_index(basis_labels: &[String], vars: usize, e: &[usize]) -> Option<usize> {
    let l = monomial_label(vars, e);
    basis_labels.iter().position(|x| *x == l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_algebra_c2_is_hopf() {
        let h = group_algebra(Field::Q, &FiniteMonoid::cyclic(2)).unwrap();
        assert!(h.verify().all_hold());
        assert_eq!(h.dim(), 2);
        assert!(h.coalgebra().is_cocommutative());
        let g = vector::unit(Field::Q, 2, 1);
        assert_eq!(h.coalgebra().delta().apply(&g), vector::tensor(&g, &g));
    }

    #[test]
    fn group_algebra_c3_over_gf7() {
        let f7 = Field::fp(7).unwrap();
        assert!(group_algebra(f7, &FiniteMonoid::cyclic(3)).unwrap().verify().all_hold());
    }

    #[test]
    fn s3_antipode_is_inverse_permutation() {
        let g = FiniteMonoid::symmetric3();
        let h = group_algebra(Field::Q, &g).unwrap();
        assert!(h.verify().all_hold());
        assert_eq!(h.dim(), 6);
        for a in 0..6 {
            let col = h.antipode.column(a);
            assert_eq!(col, vector::unit(Field::Q, 6, g.inverse(a).unwrap()));
        }
    }

    #[test]
    fn perturbed_delta_breaks_coassociativity() {
        let h = group_algebra(Field::Q, &FiniteMonoid::cyclic(2)).unwrap();
        let mut d = h.coalgebra().delta().clone();
        d.set(1, 0, Field::Q.int(1));
        let c = Coalgebra::new(d, h.coalgebra().epsilon().clone(), None).unwrap();
        let r = c.verify();
        assert!(!r.all_hold());
        assert!(!r.holds("coassociativity") || !r.holds("left counit"));
    }

    #[test]
    fn zero_counit_fails() {
        let h = group_algebra(Field::Q, &FiniteMonoid::cyclic(2)).unwrap();
        let c = Coalgebra::new(h.coalgebra().delta().clone(), Matrix::zeros(Field::Q, 1, 2), None).unwrap();
        let r = c.verify();
        assert!(r.holds("coassociativity"));
        assert!(!r.holds("left counit"));
    }

    #[test]
    fn function_algebra_c2() {
        let q = Field::Q;
        let h = function_algebra(q, &FiniteMonoid::cyclic(2)).unwrap();
        assert!(h.verify().all_hold());
        // Δ(δ_e) = δ_e ⊗ δ_e + δ_g ⊗ δ_g
        let de = h.coalgebra().delta().column(0);
        let expect = vector::add(
            &vector::tensor(&vector::unit(q, 2, 0), &vector::unit(q, 2, 0)),
            &vector::tensor(&vector::unit(q, 2, 1), &vector::unit(q, 2, 1)),
        );
        assert_eq!(de, expect);
        assert!(h.bialgebra.is_commutative());
    }

    #[test]
    fn function_algebra_of_trivial_group_is_ground_field() {
        let h = function_algebra(Field::Q, &FiniteMonoid::cyclic(1)).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.verify().all_hold());
    }

    #[test]
    fn fourier_pairing_c2() {
        // k^{C2} ≅ kC2 via δ_e ↦ (e+g)/2, δ_g ↦ (e-g)/2
        let q = Field::Q;
        let fun = function_algebra(q, &FiniteMonoid::cyclic(2)).unwrap();
        let grp = group_algebra(q, &FiniteMonoid::cyclic(2)).unwrap();
        let half = q.frac(1, 2);
        let t = Matrix::new(q, 2, 2, vec![half.clone(), half.clone(), half.clone(), -&half]).unwrap();
        let tt = t.kron(&t);
        assert_eq!(tt.mul(fun.coalgebra().delta()), grp.coalgebra().delta().mul(&t));
        assert_eq!(t.mul(fun.algebra().mu()), grp.algebra().mu().mul(&tt));
    }

    #[test]
    fn affine_truncation_d1_and_d2() {
        let q = Field::Q;
        let h = poly_truncation(q, 2, 1, true).unwrap();
        assert_eq!(h.dim(), 3);
        assert_eq!(h.labels(), &["1", "x", "y"]);
        let dx = h.delta().column(1);
        let mut expect = vector::tensor(&vector::unit(q, 3, 1), &vector::unit(q, 3, 0));
        vector::axpy(&mut expect, &q.one(), &vector::tensor(&vector::unit(q, 3, 0), &vector::unit(q, 3, 1)));
        assert_eq!(dx, expect);

        let h2 = poly_truncation(q, 2, 2, true).unwrap();
        assert_eq!(h2.labels(), &["1", "x", "y", "x^2", "x*y", "y^2"]);
        assert!(h2.verify().all_hold());
        // Δ(xy) = xy⊗1 + x⊗y + y⊗x + 1⊗xy
        let dxy = h2.delta().column(4);
        let e = |i| vector::unit(q, 6, i);
        let mut expect = vector::zeros(q, 36);
        for (a, b) in [(4, 0), (1, 2), (2, 1), (0, 4)] {
            vector::axpy(&mut expect, &q.one(), &vector::tensor(&e(a), &e(b)));
        }
        assert_eq!(dxy, expect);
    }

    #[test]
    fn noncommutative_truncation_dimension() {
        let h = poly_truncation(Field::Q, 2, 2, false).unwrap();
        assert_eq!(h.dim(), 7);
        assert!(h.verify().all_hold());
    }

    #[test]
    fn restricted_polynomial_is_hopf() {
        let f3 = Field::fp(3).unwrap();
        let h = restricted_polynomial(f3, 2).unwrap();
        assert_eq!(h.dim(), 9);
        let r = h.verify();
        assert!(r.all_hold(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
