use std::sync::Arc;

use serde::Serialize;

use super::{map_h, units, vector_strings, PartialComoduleDatum, Witness};
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::exactlin::{apply_left, apply_right, pushout, vector, Matrix, Scalar, Subspace, Vector};

/// Outcome of [`check_morphism`]: the induced `f•H` when `f` is a morphism, and
/// otherwise the violated condition.
#[derive(Clone, Debug)]
pub struct MorphismCheck {
    pub f_bullet_h: Option<Matrix>,
    pub violation: Option<Witness>,
}

impl MorphismCheck {
    pub fn accepted(&self) -> bool {
        self.f_bullet_h.is_some()
    }
}

#[derive(Serialize)]
struct MorphismJson<'a> {
    accepted: bool,
    violation: &'a Option<Witness>,
}

impl Serialize for MorphismCheck {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MorphismJson { accepted: self.accepted(), violation: &self.violation }.serialize(s)
    }
}

fn refuse(reason: &str, v: &[Scalar]) -> MorphismCheck {
    MorphismCheck {
        f_bullet_h: None,
        violation: Some(Witness { level: "morphism".into(), reason: reason.into(), vector: vector_strings(v) }),
    }
}

/// Decides whether `f: X -> Y` underlies a morphism of partial comodule data.
pub fn check_morphism(f: &Matrix, src: &PartialComoduleDatum, dst: &PartialComoduleDatum) -> Result<MorphismCheck> {
    if f.rows() != dst.dim_x() || f.cols() != src.dim_x() {
        return Err(Error::ShapeMismatch(format!(
            "f is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            dst.dim_x(),
            src.dim_x()
        )));
    }
    if !src.same_coalgebra(dst) {
        return Err(Error::CoalgebraMismatch("source and target use different coalgebras".into()));
    }
    let h = src.dim_h();
    for k in src.ker_pi().basis() {
        if !vector::is_zero(&dst.pi().apply(&map_h(f, h, k))) {
            return Ok(refuse("(f⊗H)(ker π_X) is not contained in ker π_Y", k));
        }
    }
    let cols: Vec<Vector> = src.section().columns().iter().map(|c| dst.pi().apply(&map_h(f, h, c))).collect();
    let fbh = Matrix::from_columns(f.field(), dst.dim_xbh(), &cols);
    for e in units(f.field(), src.dim_x()) {
        if dst.rho().apply(&f.apply(&e)) != fbh.apply(&src.rho().apply(&e)) {
            return Ok(refuse("ρ_Y∘f differs from (f•H)∘ρ_X", &e));
        }
    }
    Ok(MorphismCheck { f_bullet_h: Some(fbh), violation: None })
}

/// The `π = id` datum of a coassociative, counital coaction `ρ: X -> X ⊗ H`.
pub fn from_global(coalgebra: Arc<Coalgebra>, name: &str, rho: Matrix) -> Result<PartialComoduleDatum> {
    let h = coalgebra.dim();
    let n = rho.cols();
    if rho.rows() != n * h {
        return Err(Error::ShapeMismatch(format!("coaction is {}x{n}, expected {}x{n}", rho.rows(), n * h)));
    }
    for e in units(rho.field(), n) {
        let r = rho.apply(&e);
        if apply_right(n, coalgebra.epsilon(), &r) != e {
            return Err(Error::NotACoaction(format!("counit fails at {:?}", vector_strings(&e))));
        }
        if apply_left(&rho, h, &r) != apply_right(n, coalgebra.delta(), &r) {
            return Err(Error::NotACoaction(format!("coassociativity fails at {:?}", vector_strings(&e))));
        }
    }
    PartialComoduleDatum::new(coalgebra, name, Matrix::identity(rho.field(), n * h), rho)
}

/// Rewrites a datum with `ker π = 0` in the normal form `π = id`.
pub fn to_global(x: &PartialComoduleDatum) -> Option<PartialComoduleDatum> {
    if !x.ker_pi().is_zero() {
        return None;
    }
    let inv = x.pi().inverse()?;
    PartialComoduleDatum::new(
        x.coalgebra().clone(),
        x.coalgebra_name(),
        Matrix::identity(x.field(), inv.rows()),
        inv.mul(x.rho()),
    )
    .ok()
}

/// `(V, V, V ⊗ ε, id)`.
pub fn trivial(coalgebra: Arc<Coalgebra>, name: &str, n: usize) -> PartialComoduleDatum {
    let f = coalgebra.field();
    let pi = Matrix::identity(f, n).kron(coalgebra.epsilon());
    PartialComoduleDatum::new(coalgebra, name, pi, Matrix::identity(f, n)).expect("V ⊗ ε is onto")
}

/// `(p ⊗ H) s ρ` as a matrix `X -> Y ⊗ H`.
fn pushed_coaction(x: &PartialComoduleDatum, p: &Matrix) -> Matrix {
    let h = x.dim_h();
    let cols: Vec<Vector> = units(x.field(), x.dim_x()).map(|e| map_h(p, h, &x.lift_rho(&e))).collect();
    Matrix::from_columns(x.field(), p.rows() * h, &cols)
}

fn check_quotient_map(x: &PartialComoduleDatum, p: &Matrix) -> Result<()> {
    if p.cols() != x.dim_x() {
        return Err(Error::ShapeMismatch(format!("p has {} columns, X has dimension {}", p.cols(), x.dim_x())));
    }
    if !p.is_surjective() {
        return Err(Error::NonSurjective { rank: p.rank(), target: p.rows() });
    }
    Ok(())
}

/// Quotient of a global comodule along a surjection `p`: the pushout of `((p⊗H)ρ, p)`.
pub fn quotient_global(x: &PartialComoduleDatum, p: &Matrix) -> Result<PartialComoduleDatum> {
    check_quotient_map(x, p)?;
    if !x.ker_pi().is_zero() {
        return Err(Error::MalformedDatum("quotient_global needs a global datum".into()));
    }
    let po = pushout(&pushed_coaction(x, p), p)?;
    PartialComoduleDatum::new(x.coalgebra().clone(), x.coalgebra_name(), po.gbar(), po.fbar)
}

/// Quotient of a partial comodule along a surjection `p`, by the two-stage pushout:
/// `Y•H = (Y⊗H) / ((p⊗H)(ker π) + (p⊗H)sρ(ker p))`.
pub fn quotient_partial(x: &PartialComoduleDatum, p: &Matrix) -> Result<PartialComoduleDatum> {
    check_quotient_map(x, p)?;
    if p.rows() == p.cols() && p.is_identity() {
        return Ok(x.clone());
    }
    let h = x.dim_h();
    let r = p.rows();
    let mut w = x.ker_pi().map(r * h, |k| map_h(p, h, k));
    for k in p.kernel().basis() {
        w.insert(map_h(p, h, &x.lift_rho(k)));
    }
    let q = w.quotient();
    let sp = p.pivot_section()?;
    let cols: Vec<Vector> = units(x.field(), r).map(|e| q.project(&map_h(p, h, &x.lift_rho(&sp.apply(&e))))).collect();
    let rho = Matrix::from_columns(x.field(), q.dim(), &cols);
    PartialComoduleDatum::new(x.coalgebra().clone(), x.coalgebra_name(), q.projection(), rho)
}

/// `(X•H, X•(H•H), π'_{X,Δ}, [(π⊗H)(X⊗Δ)s])`.
pub fn induced_on_xbh(x: &PartialComoduleDatum) -> PartialComoduleDatum {
    let q = x.k2().quotient();
    let cols: Vec<Vector> = x.section().columns().iter().map(|c| q.project(&x.pi_delta(c))).collect();
    let rho = Matrix::from_columns(x.field(), q.dim(), &cols);
    PartialComoduleDatum::new(x.coalgebra().clone(), x.coalgebra_name(), q.projection(), rho)
        .expect("quotient projections are onto")
}

/// `π(Y ⊗ H)` for a subspace given by the columns of `j`.
fn image_of_y_h(x: &PartialComoduleDatum, j: &Matrix) -> Subspace {
    let (h, f) = (x.dim_h(), x.field());
    let mut w = Subspace::zero(f, x.dim_xbh());
    for col in j.columns() {
        for b in 0..h {
            w.insert(x.pi().apply(&vector::tensor(&col, &vector::unit(f, h, b))));
        }
    }
    w
}

/// The partial subcomodule on `Y = im j`, when `ρ(Y) ⊆ π(Y ⊗ H)`.
pub fn restrict_to_subspace(x: &PartialComoduleDatum, j: &Matrix) -> Result<PartialComoduleDatum> {
    if j.rows() != x.dim_x() {
        return Err(Error::ShapeMismatch(format!("j lands in dimension {}, X has {}", j.rows(), x.dim_x())));
    }
    let r = j.cols();
    let rank = j.rank();
    if rank != r {
        return Err(Error::NonInjective { rank, source_dim: r });
    }
    let (h, f) = (x.dim_h(), x.field());
    let w = image_of_y_h(x, j);
    let cols = j.columns();
    let mut rho_cols = Vec::with_capacity(r);
    for c in &cols {
        match w.coords(&x.rho().apply(c)) {
            Some(v) => rho_cols.push(v),
            None => return Err(Error::NotInvariant { witness: format!("{:?}", vector_strings(c)) }),
        }
    }
    let mut pi_cols = Vec::with_capacity(r * h);
    for c in &cols {
        for b in 0..h {
            pi_cols.push(w.coords(&x.pi().apply(&vector::tensor(c, &vector::unit(f, h, b)))).unwrap());
        }
    }
    PartialComoduleDatum::new(
        x.coalgebra().clone(),
        x.coalgebra_name(),
        Matrix::from_columns(f, w.dim(), &pi_cols),
        Matrix::from_columns(f, w.dim(), &rho_cols),
    )
}

/// Greatest `Y ⊆ w` with `ρ(Y) ⊆ π(Y ⊗ H)`, with the subcomodule it carries.
pub fn largest_subcomodule_within(x: &PartialComoduleDatum, w: &Subspace) -> Result<(PartialComoduleDatum, Subspace)> {
    if w.ambient() != x.dim_x() {
        return Err(Error::ShapeMismatch(format!("subspace of dimension {} space, X has {}", w.ambient(), x.dim_x())));
    }
    let mut y = w.clone();
    loop {
        let img = image_of_y_h(x, &y.inclusion());
        let pre = img.quotient().projection().mul(x.rho()).kernel();
        let next = y.intersection(&pre);
        if next == y {
            break;
        }
        y = next;
    }
    Ok((restrict_to_subspace(x, &y.inclusion())?, y))
}

/// The tensor components `y_b` of `w = Σ y_b ⊗ h_b`.
fn components(w: &[Scalar], n: usize, h: usize) -> Vec<Vector> {
    (0..h).map(|b| (0..n).map(|i| w[i * h + b].clone()).collect()).collect()
}

/// A finite-dimensional partial subcomodule containing `v`, following the proof of the
/// fundamental theorem: correct the lift of `ρ(v)` by an element of `ker π` so that
/// `(ρ⊗H)w = (π⊗H)(X⊗Δ)w`, then span `v` and the components of `w`.
pub fn finite_subcomodule_containing(
    x: &PartialComoduleDatum,
    v: &[Scalar],
) -> Result<(PartialComoduleDatum, Subspace)> {
    let (n, h, f) = (x.dim_x(), x.dim_h(), x.field());
    if v.len() != n {
        return Err(Error::ShapeMismatch(format!("vector of length {}, X has dimension {n}", v.len())));
    }
    let d = |w: &[Scalar]| vector::sub(&x.rho_h(w), &x.pi_delta(w));
    let mut y = Subspace::span(f, n, [v.to_vec()]);
    if !y.is_zero() {
        let u = x.lift_rho(v);
        let kb = x.ker_pi().basis();
        let cols: Vec<Vector> = kb.iter().map(|k| d(k)).collect();
        let m = Matrix::from_columns(f, x.dim_xbh() * h, &cols);
        let rhs = vector::scale(&-f.one(), &d(&u));
        let c = m.solve(&rhs).ok_or_else(|| {
            Error::SystemInconsistent(
                "no correction in ker π makes the lift coassociative; the datum is not quasi".into(),
            )
        })?;
        let w = vector::add(&u, &vector::combine(f, n * h, &c, kb));
        for comp in components(&w, n, h) {
            y.insert(comp);
        }
    }
    Ok((restrict_to_subspace(x, &y.inclusion())?, y))
}

/// Smallest subspace containing `v` and closed under taking tensor components of the
/// coaction. For a global datum this is the subcomodule generated by `v`.
pub fn rho_closure(x: &PartialComoduleDatum, v: &[Scalar]) -> Subspace {
    let (n, h, f) = (x.dim_x(), x.dim_h(), x.field());
    let mut y = Subspace::span(f, n, [v.to_vec()]);
    loop {
        let before = y.dim();
        for b in y.basis().to_vec() {
            for comp in components(&x.lift_rho(&b), n, h) {
                y.insert(comp);
            }
        }
        if y.dim() == before {
            return y;
        }
    }
}

/// Block-diagonal direct sum.
pub fn direct_sum(parts: &[&PartialComoduleDatum]) -> Result<PartialComoduleDatum> {
    let first = parts.first().ok_or_else(|| Error::ShapeMismatch("direct sum of nothing".into()))?;
    if parts.iter().any(|p| !p.same_coalgebra(first)) {
        return Err(Error::CoalgebraMismatch("summands use different coalgebras".into()));
    }
    let f = first.field();
    let pis: Vec<&Matrix> = parts.iter().map(|p| p.pi()).collect();
    let rhos: Vec<&Matrix> = parts.iter().map(|p| p.rho()).collect();
    PartialComoduleDatum::new(
        first.coalgebra().clone(),
        first.coalgebra_name(),
        Matrix::block_diag(f, &pis),
        Matrix::block_diag(f, &rhos),
    )
}

/// Coequalizer of two morphisms `f, g: X -> Y`: the quotient of `Y` by `im(f − g)`.
/// Returns the datum and the quotient map.
pub fn coequalizer(
    f: &Matrix,
    g: &Matrix,
    src: &PartialComoduleDatum,
    dst: &PartialComoduleDatum,
) -> Result<(PartialComoduleDatum, Matrix)> {
    for (name, m) in [("f", f), ("g", g)] {
        let c = check_morphism(m, src, dst)?;
        if !c.accepted() {
            return Err(Error::MalformedDatum(format!("{name} is not a morphism: {:?}", c.violation)));
        }
    }
    let p = f.sub(g).image().quotient().projection();
    Ok((quotient_partial(dst, &p)?, p))
}

/// Whether `(id_X, π_b s_a)` is an isomorphism `a -> b` of data on the same `X`.
pub fn is_isomorphism(a: &PartialComoduleDatum, b: &PartialComoduleDatum) -> bool {
    a.dim_x() == b.dim_x()
        && a.dim_xbh() == b.dim_xbh()
        && a.same_coalgebra(b)
        && a.ker_pi() == b.ker_pi()
        && b.pi().mul(a.section()).mul(a.rho()) == *b.rho()
}
