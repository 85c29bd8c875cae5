//! Seeded generators of random matrices and partial comodule data, shared by the
//! property tests, the acceptance suite, the corpus and the benchmarks.

use std::sync::Arc;

use rand::Rng;

use crate::coalgebra::{function_algebra, group_algebra, restricted_polynomial, Bialgebra, Coalgebra};
use crate::error::Result;
use crate::exactlin::{apply_left, vector, Field, Matrix, Subspace, Vector};
use crate::hopfgalois::algebra::{quotient_algebra, two_sided_ideal, FinAlgebra};
use crate::hopfgalois::{check_cj, check_comodule_algebra, ideal_closure, CjReport, PartialComoduleAlgebra};
use crate::pcd::{
    direct_sum, from_global, quotient_global, restrict_to_subspace, rho_closure, to_global, PartialComoduleDatum,
};
use crate::setpartial::FiniteMonoid;

pub fn random_vector<R: Rng + ?Sized>(field: Field, n: usize, rng: &mut R) -> Vector {
    (0..n).map(|_| field.random(rng)).collect()
}

pub fn random_invertible<R: Rng + ?Sized>(field: Field, n: usize, rng: &mut R) -> Matrix {
    loop {
        let m = Matrix::random(field, n, n, rng);
        if m.rank() == n {
            return m;
        }
    }
}

/// A random surjection `k^n -> k^r`, `r ≤ n`.
pub fn random_surjection<R: Rng + ?Sized>(field: Field, n: usize, r: usize, rng: &mut R) -> Matrix {
    assert!(r <= n);
    loop {
        let m = Matrix::random(field, r, n, rng);
        if m.rank() == r {
            return m;
        }
    }
}

/// The regular comodule `(H, Δ)`.
pub fn regular(coalgebra: &Arc<Coalgebra>, name: &str) -> PartialComoduleDatum {
    from_global(coalgebra.clone(), name, coalgebra.delta().clone()).expect("Δ is a coaction")
}

/// Transports a global datum along a change of basis `g` of `X`.
pub fn conjugate(x: &PartialComoduleDatum, g: &Matrix) -> PartialComoduleDatum {
    let gx = to_global(x).expect("global datum");
    let ginv = g.inverse().expect("invertible");
    let h = x.dim_h();
    let cols: Vec<Vector> = gx.rho().mul(&ginv).columns().iter().map(|c| apply_left(g, h, c)).collect();
    let rho = Matrix::from_columns(x.field(), x.dim_x() * h, &cols);
    from_global(x.coalgebra().clone(), x.coalgebra_name(), rho).expect("conjugate of a coaction")
}

/// A random global comodule of dimension between 1 and `max_dim`: a direct sum of
/// cyclic subcomodules of `H`, in a random basis. Falls back to smaller dimensions when
/// `H` has no small enough subcomodules.
pub fn random_global<R: Rng + ?Sized>(
    coalgebra: &Arc<Coalgebra>,
    name: &str,
    max_dim: usize,
    rng: &mut R,
) -> Option<PartialComoduleDatum> {
    let f = coalgebra.field();
    let h = coalgebra.dim();
    let reg = regular(coalgebra, name);
    let budget = rng.gen_range(1..=max_dim.max(1));
    let mut pieces = Vec::new();
    let mut total = 0;
    let mut attempts = 0;
    while total < budget && attempts < 40 {
        attempts += 1;
        let v = if rng.gen_bool(0.3) {
            let mut e = vec![f.zero(); h];
            e[rng.gen_range(0..h)] = f.one();
            e
        } else {
            random_vector(f, h, rng)
        };
        let y = rho_closure(&reg, &v);
        if y.dim() == 0 || total + y.dim() > budget {
            continue;
        }
        let piece = restrict_to_subspace(&reg, &y.inclusion()).ok()?;
        pieces.push(to_global(&piece)?);
        total += y.dim();
    }
    if pieces.is_empty() {
        return None;
    }
    let refs: Vec<&PartialComoduleDatum> = pieces.iter().collect();
    let sum = direct_sum(&refs).ok()?;
    let g = random_invertible(f, total, rng);
    Some(conjugate(&sum, &g))
}

/// A random proper-or-not quotient of a random global comodule.
pub fn random_quotient_of_global<R: Rng + ?Sized>(
    coalgebra: &Arc<Coalgebra>,
    name: &str,
    max_dim: usize,
    rng: &mut R,
) -> Option<(PartialComoduleDatum, PartialComoduleDatum, Matrix)> {
    let x = random_global(coalgebra, name, max_dim, rng)?;
    let n = x.dim_x();
    let r = rng.gen_range(0..=n);
    let p = random_surjection(x.field(), n, r, rng);
    let y = quotient_global(&x, &p).ok()?;
    Some((x, y, p))
}

/// `H` as a comodule algebra over itself, `ρ = Δ`.
pub fn global_comodule_algebra(h: &Arc<Bialgebra>, name: &str) -> Result<PartialComoduleAlgebra> {
    let c = Arc::new(h.coalgebra.clone());
    let d = from_global(c, name, h.coalgebra.delta().clone())?;
    check_comodule_algebra(&h.algebra, &d, h)
}

/// The quotient `H -> H/I` of the regular comodule algebra by an ideal `I` of `H`
/// generated by `gens`: the algebra `H/I` with the quotient datum.
pub fn quotient_comodule_datum(
    h: &Arc<Bialgebra>,
    name: &str,
    gens: &[Vector],
) -> Result<(FinAlgebra, PartialComoduleDatum)> {
    let f = h.field();
    let ideal = two_sided_ideal(&h.algebra, &Subspace::span(f, h.dim(), gens.iter().cloned()));
    let qa = quotient_algebra(&h.algebra, ideal);
    let reg = from_global(Arc::new(h.coalgebra.clone()), name, h.coalgebra.delta().clone())?;
    let d = quotient_global(&reg, &qa.projection)?;
    Ok((qa.algebra, d))
}

/// The partial torsor `k^{C2} ↠ k^{{e}}`: the quotient of `k^{C2}` killing `δ_g`.
pub fn partial_torsor(field: Field) -> Result<(Arc<Bialgebra>, PartialComoduleAlgebra)> {
    let h = Arc::new(function_algebra(field, &FiniteMonoid::cyclic(2))?.bialgebra);
    let (b, d) = quotient_comodule_datum(&h, "k^C2", &[vector::unit(field, 2, 1)])?;
    let pca = check_comodule_algebra(&b, &d, &h)?;
    Ok((h, pca))
}

/// `kC2` over itself.
pub fn global_kc2(field: Field) -> Result<(Arc<Bialgebra>, PartialComoduleAlgebra)> {
    let h = Arc::new(group_algebra(field, &FiniteMonoid::cyclic(2))?.bialgebra);
    let pca = global_comodule_algebra(&h, "kC2")?;
    Ok((h, pca))
}

/// `A = k` over `H = kC2` with `ρ(1) = 1 ⊗ (1+g)/2`; needs characteristic other than 2.
pub fn cj_c2(field: Field) -> Result<(Arc<Bialgebra>, CjReport)> {
    let h = Arc::new(group_algebra(field, &FiniteMonoid::cyclic(2))?.bialgebra);
    let half = field.frac(1, 2);
    let rho = Matrix::from_columns(field, 2, &[vec![half.clone(), half]]);
    let r = check_cj(&h, "kC2", &FinAlgebra::ground(field), &rho)?;
    Ok((h, r))
}

/// The affine comodule algebra over GF(3): `B = H/(xy)` for the restricted polynomial
/// Hopf algebra `H` in `x, y`, with `ker π` replaced by the ideal it generates.
pub fn affine_b_prime() -> Result<(Arc<Bialgebra>, PartialComoduleAlgebra)> {
    let f3 = Field::fp(3)?;
    let h = Arc::new(restricted_polynomial(f3, 2)?.bialgebra);
    let xy = h.coalgebra.labels().iter().position(|l| l == "x*y").expect("xy is a basis monomial");
    let (b, d) = quotient_comodule_datum(&h, "k[x,y]_3", &[vector::unit(f3, h.dim(), xy)])?;
    let pca = ideal_closure(&b, &d, &h)?;
    Ok((h, pca))
}

/// CJ-type data over `H = kG`, `G` abelian: `e = (1/|N|) Σ_{n∈N} n` for a subgroup `N`
/// of order invertible in the field, and either `A = k` with `ρ(1) = 1⊗e` or `A = kG`
/// with `ρ(g) = g ⊗ ge`.
pub fn cj_type(
    h: &Arc<Bialgebra>,
    g: &FiniteMonoid,
    subgroup: &[usize],
    over_group_algebra: bool,
    name: &str,
) -> Result<CjReport> {
    let f = h.field();
    let n = g.size();
    let inv = f.int(subgroup.len() as i64).inv();
    let mut e = vector::zeros(f, n);
    for &s in subgroup {
        e[s] = inv.clone();
    }
    if over_group_algebra {
        let cols: Vec<Vector> = (0..n)
            .map(|a| {
                let ga = vector::unit(f, n, a);
                vector::tensor(&ga, &h.mul(&ga, &e))
            })
            .collect();
        check_cj(h, name, &h.algebra, &Matrix::from_columns(f, n * n, &cols))
    } else {
        check_cj(h, name, &FinAlgebra::ground(f), &Matrix::from_columns(f, n, &[e]))
    }
}

/// Subgroups `{1, s}` of order two.
pub fn involution_subgroups(g: &FiniteMonoid) -> Vec<Vec<usize>> {
    (0..g.size()).filter(|&s| s != g.unit() && g.mul(s, s) == g.unit()).map(|s| vec![g.unit(), s]).collect()
}

/// A random quasi datum over `kG`: a quotient of a random global comodule or a CJ-type
/// datum, each half of the time.
pub fn random_quasi<R: Rng + ?Sized>(
    h: &Arc<Bialgebra>,
    g: &FiniteMonoid,
    name: &str,
    max_dim: usize,
    rng: &mut R,
) -> Option<PartialComoduleDatum> {
    let subs = involution_subgroups(g);
    let f = h.field();
    let cj_ok = f.characteristic() != 2 && !subs.is_empty();
    if cj_ok && rng.gen_bool(0.5) {
        let sub = &subs[rng.gen_range(0..subs.len())];
        let big = g.size() <= max_dim && rng.gen_bool(0.5);
        return cj_type(h, g, sub, big, name).ok().map(|r| r.datum);
    }
    let c = Arc::new(h.coalgebra.clone());
    random_quotient_of_global(&c, name, max_dim, rng).map(|(_, y, _)| y)
}

/// A pair of geometric data over the GF(2) Klein four-group algebra whose tensor is
/// not geometric, found by a seeded search over quotients of globals with
/// `dim X⊗Y ≤ 3`. Returns the bialgebra, both factors and the tensor.
pub fn tensor_witness(
    seed: u64,
) -> Option<(Arc<Bialgebra>, PartialComoduleDatum, PartialComoduleDatum, PartialComoduleDatum)> {
    use rand::SeedableRng;
    let f2 = Field::fp(2).ok()?;
    let h = Arc::new(group_algebra(f2, &FiniteMonoid::klein4()).ok()?.bialgebra);
    let c = Arc::new(h.coalgebra.clone());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..5000 {
        let (_, a, _) = random_quotient_of_global(&c, "kK4", 3, &mut rng)?;
        let (_, b, _) = random_quotient_of_global(&c, "kK4", 3, &mut rng)?;
        let dim = a.dim_x() * b.dim_x();
        if dim == 0 || dim > 3 || a.is_global() || b.is_global() {
            continue;
        }
        let (t, _) = crate::monoidal::tensor_pcd(&a, &b, &h).ok()?;
        if !crate::pcd::classify(&t).geometric && t.dim_xbh() <= 6 {
            return Some((h, a, b, t));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::group_algebra;
    use crate::pcd::classify;
    use crate::setpartial::FiniteMonoid;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_globals_are_globals() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f3 = Field::fp(3).unwrap();
        let c = Arc::new(group_algebra(f3, &FiniteMonoid::cyclic(3)).unwrap().coalgebra().clone());
        for _ in 0..20 {
            let x = random_global(&c, "kC3", 4, &mut rng).unwrap();
            assert!(x.dim_x() >= 1 && x.dim_x() <= 4);
            assert!(x.is_global());
            assert!(classify(&x).geometric);
        }
    }

    #[test]
    fn cj_type_data_are_quasi() {
        let f3 = Field::fp(3).unwrap();
        let g = FiniteMonoid::klein4();
        let h = Arc::new(group_algebra(f3, &g).unwrap().bialgebra);
        for sub in involution_subgroups(&g) {
            for big in [false, true] {
                let r = cj_type(&h, &g, &sub, big, "kK4").unwrap();
                assert!(r.classification.quasi);
                assert_eq!(r.datum.dim_xbh(), r.datum.dim_x() * 2);
            }
        }
    }

    #[test]
    fn tensor_witness_is_found() {
        let (_, a, b, t) = tensor_witness(1).unwrap();
        assert!(classify(&a).geometric && classify(&b).geometric);
        let r = classify(&t);
        assert!(r.quasi && !r.geometric);
    }
}
