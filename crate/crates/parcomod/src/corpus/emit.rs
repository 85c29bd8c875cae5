//! Deterministic generation of the bundled corpus.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use super::{
    action_json, algebra_json, coalgebra_json, parse, pcd_json, BaseChoice, CorpusFile, Expectation, HopfModuleJson,
};
use crate::coalgebra::{function_algebra, group_algebra, poly_truncation, Bialgebra, Coalgebra};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Subspace};
use crate::hopfgalois::algebra::{AlgebraLike, FinAlgebra};
use crate::hopfgalois::{
    check_comodule_algebra, enlarge_kernel, induce_hopf_module, regular_module, trivial_comodule_algebra, BaseModule,
    PartialComoduleAlgebra, RelativeHopfModule,
};
use crate::pcd::{from_global, quotient_global, trivial, PartialComoduleDatum};
use crate::samples::{
    affine_b_prime, cj_c2, cj_type, global_kc2, involution_subgroups, partial_torsor, quotient_comodule_datum,
    tensor_witness,
};
use crate::setpartial::{restrict_global, FiniteMonoid, PartialActionDatum};

/// File names written by [`emit_corpus`], one per field.
pub const CORPUS_FILES: [&str; 3] = ["q.json", "gf2.json", "gf3.json"];

/// Seed of the search for the tensor witness.
const TENSOR_WITNESS_SEED: u64 = 1;

struct Builder {
    file: CorpusFile,
    probes: Vec<(String, Expectation)>,
}

impl Builder {
    fn new(field: Field) -> Builder {
        Builder { file: CorpusFile { field: Some(field), ..Default::default() }, probes: Vec::new() }
    }

    fn coalgebra(&mut self, name: &str, c: &Coalgebra, note: &str) {
        self.file.coalgebras.insert(name.into(), coalgebra_json(c, None, Some(note)));
    }

    fn bialgebra(&mut self, name: &str, h: &Bialgebra, note: &str) {
        self.file.coalgebras.insert(name.into(), coalgebra_json(&h.coalgebra, Some(h), Some(note)));
    }

    fn algebra(&mut self, name: &str, a: &FinAlgebra, note: &str) {
        self.file.algebras.insert(name.into(), algebra_json(a, Some(note)));
    }

    /// Adds a datum together with its classification probe.
    fn pcd(&mut self, name: &str, d: &PartialComoduleDatum, note: &str) {
        self.file.pcds.insert(name.into(), pcd_json(d, d.coalgebra_name(), Some(note)));
        self.probes.push((format!("{name}.classify"), Expectation::classify_of(name)));
    }

    fn comodule_algebra(&mut self, name: &str, algebra: &str, pca: &PartialComoduleAlgebra, note: &str) {
        self.algebra(algebra, &pca.algebra, "underlying algebra");
        self.pcd(name, &pca.datum, note);
        self.file.comodule_algebras.insert(
            name.into(),
            super::ComoduleAlgebraJson { note: Some(note.into()), algebra: algebra.into(), pcd: name.into() },
        );
        self.probes.push((format!("{name}.galois"), Expectation::galois_of(name, BaseChoice::K)));
    }

    fn hopf_module(&mut self, name: &str, pca_name: &str, m: &RelativeHopfModule, note: &str) {
        self.pcd(name, &m.datum, note);
        self.file.hopf_modules.insert(
            name.into(),
            HopfModuleJson {
                field: None,
                note: Some(note.into()),
                comodule_algebra: pca_name.into(),
                pcd: name.into(),
                action: crate::pcd::matrix_rows(&m.action),
            },
        );
        self.probes.push((format!("{name}.module"), Expectation::hopf_module_of(name)));
    }

    fn action(&mut self, name: &str, a: &PartialActionDatum, note: &str) {
        self.file.actions.insert(name.into(), action_json(a, Some(note)));
        self.probes.push((format!("{name}.action"), Expectation::action_of(name)));
    }

    fn probe(&mut self, name: &str, e: Expectation) {
        self.probes.push((name.into(), e));
    }

    /// Loads the structures back and freezes every probe with the computed values.
    fn finish(mut self) -> Result<CorpusFile> {
        let ws = parse(&self.file.to_json())?;
        for (name, probe) in self.probes {
            let e = probe.recompute(&ws)?;
            self.file.expect.insert(name, e);
        }
        Ok(self.file)
    }
}

fn label_index(c: &Coalgebra, label: &str) -> usize {
    c.labels().iter().position(|l| l == label).unwrap_or_else(|| panic!("no basis element {label}"))
}

/// The regular comodule of `c` modulo the span of `dead`.
fn regular_quotient(
    c: &Arc<Coalgebra>,
    name: &str,
    dead: &[Vec<crate::exactlin::Scalar>],
) -> Result<PartialComoduleDatum> {
    let x = from_global(c.clone(), name, c.delta().clone())?;
    let p = Subspace::span(c.field(), c.dim(), dead.iter().cloned()).quotient().projection();
    quotient_global(&x, &p)
}

fn affine(d: usize) -> Result<(Arc<Coalgebra>, PartialComoduleDatum)> {
    let q = Field::Q;
    let c = Arc::new(poly_truncation(q, 2, d, true)?);
    let dead: Vec<_> = c
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.contains('x') && l.contains('y'))
        .map(|(i, _)| vector::unit(q, c.dim(), i))
        .collect();
    let name = format!("k[x,y]_{d}");
    let b = regular_quotient(&c, &name, &dead)?;
    Ok((c, b))
}

fn q_file() -> Result<CorpusFile> {
    let q = Field::Q;
    let mut b = Builder::new(q);

    let (c2, b2) = affine(2)?;
    b.coalgebra("k[x,y]_2", &c2, "polynomials in primitive x, y of degree at most 2");
    b.pcd("affine_d2", &b2, "k[x,y]/(xy) as a quotient of the regular comodule, degree 2");
    let (c3, b3) = affine(3)?;
    b.coalgebra("k[x,y]_3", &c3, "polynomials in primitive x, y of degree at most 3");
    b.pcd("affine_d3", &b3, "k[x,y]/(xy) as a quotient of the regular comodule, degree 3");

    let w = Arc::new(poly_truncation(q, 2, 2, false)?);
    let mut rel = vector::zeros(q, w.dim());
    rel[label_index(&w, "xy")] = q.one();
    rel[label_index(&w, "yx")] = q.int(-2);
    b.coalgebra("k<x,y>_2", &w, "words in primitive x, y of length at most 2");
    b.pcd(
        "quantum_plane_q2",
        &regular_quotient(&w, "k<x,y>_2", &[rel])?,
        "k<x,y>/(xy - 2yx), words of length at most 2",
    );

    let (h, kc2) = global_kc2(q)?;
    b.bialgebra("kC2", &h, "group algebra of C2, basis e, g");
    b.comodule_algebra("kc2_global", "kC2", &kc2, "kC2 over itself");
    let hopf_kc2 = Arc::new(h.coalgebra.clone());
    b.pcd("trivial_kc2", &trivial(hopf_kc2.clone(), "kC2", 3), "trivial datum on k^3");
    let reg = from_global(hopf_kc2.clone(), "kC2", h.coalgebra.delta().clone())?;
    b.pcd("kc2_sign_quotient", &quotient_global(&reg, &Matrix::from_ints(q, 1, 2, &[1, -1]))?, "kC2 / span{e + g}");
    let bad = PartialComoduleDatum::new(
        hopf_kc2,
        "kC2",
        Matrix::from_ints(q, 3, 4, &[1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1]),
        Matrix::from_ints(q, 3, 2, &[1, 0, 0, 0, 0, 1]),
    )?;
    b.pcd("kc2_non_geometric", &bad, "kC2 with e⊗g and g⊗e identified");
    let triv = trivial_comodule_algebra(&h.algebra, &h, "kC2")?;
    b.comodule_algebra("kc2_trivial", "kC2", &triv, "kC2 with the trivial datum");

    let k = Subspace::span(q, 2, [kc2.algebra.one()]);
    b.hopf_module("kc2_regular_module", "kc2_global", &regular_module(&kc2)?, "kC2 as a module over itself");
    let induced = induce_hopf_module(&BaseModule::vector_space(&kc2, 2), &k, &kc2)?.module;
    b.hopf_module("kc2_induced_2", "kc2_global", &induced, "k^2 ⊗ kC2");
    let v = vector::tensor(&vector::unit(q, 4, 0), &[q.one(), q.int(-1)]);
    b.hopf_module(
        "kc2_enlarged",
        "kc2_global",
        &enlarge_kernel(&induced, &v, &kc2)?,
        "k^2 ⊗ kC2 with a larger kernel of pi",
    );

    let (ht, torsor) = partial_torsor(q)?;
    b.bialgebra("k^C2", &ht, "functions on C2, basis delta_e, delta_g");
    b.comodule_algebra("torsor_b", "k^{e}", &torsor, "k^C2 -> k^{e}");
    b.probe("torsor_b.galois_coinvariants", Expectation::galois_of("torsor_b", BaseChoice::Coinvariants));
    b.hopf_module("torsor_regular_module", "torsor_b", &regular_module(&torsor)?, "k^{e} as a module over itself");

    let (_, cj) = cj_c2(q)?;
    let cj_pca = cj.comodule_algebra.ok_or_else(|| Error::Unsupported("CJ datum is not a comodule algebra".into()))?;
    b.comodule_algebra("cj_kc2", "k", &cj_pca, "A = k, rho(1) = 1 ⊗ (e + g)/2");

    let c2 = FiniteMonoid::cyclic(2);
    let lpa =
        PartialActionDatum::new(c2.clone(), 2, vec![0b11, 0b01], vec![vec![Some(0), Some(1)], vec![Some(1), None]])?;
    b.action("lpa_witness", &lpa, "C2 on {0, 1}: g sends 0 to 1 and is undefined at 1");
    let swap = vec![vec![0, 1, 2], vec![1, 0, 2]];
    b.action("c2_swap_restricted", &restrict_global(&c2, &swap, 0b101)?, "swap of 0, 1 fixing 2, restricted to {0, 2}");
    b.action("c2_swap_global", &restrict_global(&c2, &swap, 0b111)?, "swap of 0, 1 fixing 2");
    let c3 = FiniteMonoid::cyclic(3);
    let rot: Vec<Vec<usize>> = (0..3).map(|g| (0..3).map(|x| (x + g) % 3).collect()).collect();
    b.action(
        "c3_rotation_restricted",
        &restrict_global(&c3, &rot, 0b011)?,
        "rotation of three points restricted to {0, 1}",
    );
    let k4 = FiniteMonoid::klein4();
    let regular_k4: Vec<Vec<usize>> = (0..4).map(|g| (0..4).map(|x| k4.mul(g, x)).collect()).collect();
    b.action(
        "k4_regular_restricted",
        &restrict_global(&k4, &regular_k4, 0b0011)?,
        "regular action of the Klein group restricted to {0, 1}",
    );

    b.finish()
}

fn gf2_file() -> Result<CorpusFile> {
    let f2 = Field::fp(2)?;
    let mut b = Builder::new(f2);
    let (h, x, y, t) = tensor_witness(TENSOR_WITNESS_SEED)
        .ok_or_else(|| Error::Unsupported("no tensor witness for the seed".into()))?;
    b.bialgebra("kK4", &h, "group algebra of the Klein four-group");
    b.pcd("tensor_witness_left", &x, "quotient of a global comodule");
    b.pcd("tensor_witness_right", &y, "quotient of a global comodule");
    b.pcd("tensor_witness", &t, "tensor product of the two factors");
    b.probe("tensor_witness.tensor", Expectation::tensor_of("tensor_witness_left", "tensor_witness_right"));
    b.finish()
}

fn gf3_file() -> Result<CorpusFile> {
    let f3 = Field::fp(3)?;
    let mut b = Builder::new(f3);
    let (h, bp) = affine_b_prime()?;
    b.bialgebra("k[x,y]_3", &h, "k[x,y]/(x^3, y^3) with x, y primitive");
    b.comodule_algebra("b_prime", "B'", &bp, "B = k[x,y]/(xy) with ker pi closed to an ideal");

    let g = FiniteMonoid::klein4();
    let hk4 = Arc::new(group_algebra(f3, &g)?.bialgebra);
    b.bialgebra("kK4", &hk4, "group algebra of the Klein four-group");
    let sub = &involution_subgroups(&g)[0];
    let ground = cj_type(&hk4, &g, sub, false, "kK4")?;
    match ground.comodule_algebra {
        Some(pca) => {
            b.comodule_algebra("cj_k4_ground", "k", &pca, "A = k, rho(1) = 1 ⊗ e for e the average over {1, a}")
        }
        None => b.pcd("cj_k4_ground", &ground.datum, "A = k, rho(1) = 1 ⊗ e for e the average over {1, a}"),
    }
    let group = cj_type(&hk4, &g, sub, true, "kK4")?;
    match group.comodule_algebra {
        Some(pca) => b.comodule_algebra("cj_k4_group", "kK4", &pca, "A = kK4, rho(x) = x ⊗ x e"),
        None => b.pcd("cj_k4_group", &group.datum, "A = kK4, rho(x) = x ⊗ x e"),
    }

    let hf = Arc::new(function_algebra(f3, &FiniteMonoid::cyclic(3))?.bialgebra);
    b.bialgebra("k^C3", &hf, "functions on C3");
    let (ab, d) = quotient_comodule_datum(&hf, "k^C3", &[vector::unit(f3, 3, 1), vector::unit(f3, 3, 2)])?;
    let torsor = check_comodule_algebra(&ab, &d, &hf)?;
    b.comodule_algebra("torsor_c3", "k^{e}", &torsor, "k^C3 -> k^{e}");
    b.finish()
}

/// The corpus as `(file name, contents)` pairs.
pub fn corpus_files() -> Result<Vec<(&'static str, String)>> {
    let files = [q_file()?, gf2_file()?, gf3_file()?];
    Ok(CORPUS_FILES.iter().copied().zip(files.iter().map(CorpusFile::to_json)).collect())
}

/// Writes the corpus into `dir`, creating it if needed.
pub fn emit_corpus(dir: &Path) -> Result<Vec<PathBuf>> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut out = Vec::new();
    for (name, text) in corpus_files()? {
        let path = dir.join(name);
        std::fs::write(&path, text).map_err(io)?;
        out.push(path);
    }
    Ok(out)
}
