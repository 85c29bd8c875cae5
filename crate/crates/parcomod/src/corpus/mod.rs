//! The JSON workspace format: named coalgebras, algebras, partial comodule data,
//! comodule algebras, relative Hopf modules and set actions over one declared field,
//! plus frozen expectations re-verified by `examples run`.
//!
//! Matrices are row-major arrays of scalar strings. Every structure is verified on
//! load; the first invalid entry aborts the load with its path.

mod emit;
mod expect;

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coalgebra::{Bialgebra, Coalgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::hopfgalois::algebra::{AlgebraLike, FinAlgebra};
use crate::hopfgalois::{
    check_comodule_algebra, check_relative_hopf_module, PartialComoduleAlgebra, RelativeHopfModule,
};
use crate::pcd::{matrix_rows, PartialComoduleDatum};
use crate::setpartial::{FiniteMonoid, PartialActionDatum};

pub use emit::{corpus_files, emit_corpus, CORPUS_FILES};
pub use expect::{BaseChoice, CheckOutcome, Expectation};

type Rows = Vec<Vec<String>>;

fn is_none<T>(x: &Option<T>) -> bool {
    x.is_none()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraJson {
    #[serde(default, skip_serializing_if = "is_none")]
    pub field: Option<Field>,
    #[serde(default, skip_serializing_if = "is_none")]
    pub note: Option<String>,
    pub dim: usize,
    pub labels: Vec<String>,
    pub delta: Rows,
    pub epsilon: Rows,
    /// present for bialgebras
    #[serde(default, skip_serializing_if = "is_none")]
    pub mu: Option<Rows>,
    #[serde(default, skip_serializing_if = "is_none")]
    pub eta: Option<Rows>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    #[serde(default, skip_serializing_if = "is_none")]
    pub field: Option<Field>,
    #[serde(default, skip_serializing_if = "is_none")]
    pub note: Option<String>,
    pub dim: usize,
    pub mu: Rows,
    pub eta: Rows,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PcdJson {
    #[serde(default, skip_serializing_if = "is_none")]
    pub field: Option<Field>,
    #[serde(default, skip_serializing_if = "is_none")]
    pub note: Option<String>,
    pub coalgebra: String,
    pub dim_x: usize,
    pub dim_xbh: usize,
    pub pi: Rows,
    pub rho: Rows,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ComoduleAlgebraJson {
    #[serde(default, skip_serializing_if = "is_none")]
    pub note: Option<String>,
    pub algebra: String,
    pub pcd: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct HopfModuleJson {
    #[serde(default, skip_serializing_if = "is_none")]
    pub field: Option<Field>,
    #[serde(default, skip_serializing_if = "is_none")]
    pub note: Option<String>,
    pub comodule_algebra: String,
    pub pcd: String,
    /// `M × (M⊗A)`
    pub action: Rows,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ActionJson {
    #[serde(default, skip_serializing_if = "is_none")]
    pub note: Option<String>,
    /// multiplication table of the group
    pub group: Vec<Vec<usize>>,
    pub unit: usize,
    pub set_size: usize,
    /// `domains[g]` lists the elements of `X_{g⁻¹}`
    pub domains: Vec<Vec<usize>>,
    pub maps: Vec<Vec<Option<usize>>>,
}

/// The file as written on disk.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CorpusFile {
    pub field: Option<Field>,
    #[serde(default)]
    pub coalgebras: BTreeMap<String, CoalgebraJson>,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraJson>,
    #[serde(default)]
    pub pcds: BTreeMap<String, PcdJson>,
    #[serde(default)]
    pub comodule_algebras: BTreeMap<String, ComoduleAlgebraJson>,
    #[serde(default)]
    pub hopf_modules: BTreeMap<String, HopfModuleJson>,
    #[serde(default)]
    pub actions: BTreeMap<String, ActionJson>,
    #[serde(default)]
    pub expect: BTreeMap<String, Expectation>,
}

impl CorpusFile {
    /// Pretty JSON with a trailing newline; key order is fixed by the maps.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("corpus files serialize");
        s.push('\n');
        s
    }
}

/// A loaded and verified corpus file.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub field: Field,
    pub file: CorpusFile,
    pub coalgebras: BTreeMap<String, Arc<Coalgebra>>,
    pub bialgebras: BTreeMap<String, Arc<Bialgebra>>,
    pub algebras: BTreeMap<String, FinAlgebra>,
    pub pcds: BTreeMap<String, PartialComoduleDatum>,
    pub comodule_algebras: BTreeMap<String, PartialComoduleAlgebra>,
    pub hopf_modules: BTreeMap<String, RelativeHopfModule>,
    pub actions: BTreeMap<String, PartialActionDatum>,
}

fn invalid(path: &str, axiom: &str, witness: impl Into<String>) -> Error {
    Error::Validation { path: path.into(), axiom: axiom.into(), witness: witness.into() }
}

fn wrap(path: &str, e: Error) -> Error {
    match e {
        Error::Validation { path: inner, axiom, witness } => {
            Error::Validation { path: format!("{path}.{inner}"), axiom, witness }
        }
        other => invalid(path, "invalid structure", other.to_string()),
    }
}

fn parse_matrix(field: Field, rows: &Rows, shape: (usize, usize), path: &str) -> Result<Matrix> {
    let (r, c) = shape;
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(invalid(path, "shape", format!("expected {r}x{c}")));
    }
    let mut data = Vec::with_capacity(r * c);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            data.push(field.parse(s).map_err(|_| invalid(path, "scalar", format!("entry ({i}, {j}) = {s:?}")))?);
        }
    }
    Matrix::new(field, r, c, data)
}

fn resolve<'a, T>(map: &'a BTreeMap<String, T>, name: &str, path: &str) -> Result<&'a T> {
    map.get(name).ok_or_else(|| invalid(path, "unresolved reference", name))
}

fn check_field(declared: Field, entry: Option<Field>, path: &str) -> Result<()> {
    match entry {
        Some(f) if f != declared => {
            Err(Error::Parse(format!("mixed field declarations: {path} declares {f}, file declares {declared}")))
        }
        _ => Ok(()),
    }
}

/// Parses and verifies a corpus document.
pub fn parse(text: &str) -> Result<Workspace> {
    let file: CorpusFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let field = file.field.ok_or_else(|| Error::Parse("missing field declaration".into()))?;
    for (n, c) in &file.coalgebras {
        check_field(field, c.field, &format!("coalgebras.{n}"))?;
    }
    for (n, a) in &file.algebras {
        check_field(field, a.field, &format!("algebras.{n}"))?;
    }
    for (n, p) in &file.pcds {
        check_field(field, p.field, &format!("pcds.{n}"))?;
    }
    for (n, m) in &file.hopf_modules {
        check_field(field, m.field, &format!("hopf_modules.{n}"))?;
    }
    let mut ws = Workspace {
        field,
        file: file.clone(),
        coalgebras: BTreeMap::new(),
        bialgebras: BTreeMap::new(),
        algebras: BTreeMap::new(),
        pcds: BTreeMap::new(),
        comodule_algebras: BTreeMap::new(),
        hopf_modules: BTreeMap::new(),
        actions: BTreeMap::new(),
    };
    for (name, c) in &file.coalgebras {
        let path = format!("coalgebras.{name}");
        let n = c.dim;
        let delta = parse_matrix(field, &c.delta, (n * n, n), &format!("{path}.delta"))?;
        let epsilon = parse_matrix(field, &c.epsilon, (1, n), &format!("{path}.epsilon"))?;
        if c.labels.len() != n {
            return Err(invalid(&format!("{path}.labels"), "shape", format!("expected {n} labels")));
        }
        let coalg = Coalgebra::new(delta, epsilon, Some(c.labels.clone())).map_err(|e| wrap(&path, e))?;
        if let Some(bad) = coalg.verify().failures().next() {
            return Err(invalid(
                &format!("{path}.delta"),
                &bad.axiom,
                format!("basis index {:?}", bad.witness.clone().unwrap_or_default()),
            ));
        }
        match (&c.mu, &c.eta) {
            (Some(mu), Some(eta)) => {
                let mu = parse_matrix(field, mu, (n, n * n), &format!("{path}.mu"))?;
                let eta = parse_matrix(field, eta, (n, 1), &format!("{path}.eta"))?;
                let b = Bialgebra::new(coalg.clone(), mu, eta).map_err(|e| wrap(&path, e))?;
                if let Some(bad) = b.verify().failures().next() {
                    return Err(invalid(
                        &format!("{path}.mu"),
                        &bad.axiom,
                        format!("basis index {:?}", bad.witness.clone().unwrap_or_default()),
                    ));
                }
                ws.bialgebras.insert(name.clone(), Arc::new(b));
            }
            (None, None) => {}
            _ => return Err(invalid(&path, "shape", "mu and eta come together")),
        }
        ws.coalgebras.insert(name.clone(), Arc::new(coalg));
    }
    for (name, a) in &file.algebras {
        let path = format!("algebras.{name}");
        let n = a.dim;
        let mu = parse_matrix(field, &a.mu, (n, n * n), &format!("{path}.mu"))?;
        let eta = parse_matrix(field, &a.eta, (n, 1), &format!("{path}.eta"))?;
        let alg = FinAlgebra::checked(mu, eta).map_err(|e| wrap(&path, e))?;
        ws.algebras.insert(name.clone(), alg);
    }
    for (name, p) in &file.pcds {
        let path = format!("pcds.{name}");
        let c = resolve(&ws.coalgebras, &p.coalgebra, &format!("{path}.coalgebra"))?.clone();
        let pi = parse_matrix(field, &p.pi, (p.dim_xbh, p.dim_x * c.dim()), &format!("{path}.pi"))?;
        let rho = parse_matrix(field, &p.rho, (p.dim_xbh, p.dim_x), &format!("{path}.rho"))?;
        if !pi.is_surjective() {
            return Err(invalid(&format!("{path}.pi"), "surjectivity", format!("rank {} < {}", pi.rank(), p.dim_xbh)));
        }
        let d = PartialComoduleDatum::new(c, &p.coalgebra, pi, rho).map_err(|e| wrap(&path, e))?;
        ws.pcds.insert(name.clone(), d);
    }
    for (name, ca) in &file.comodule_algebras {
        let path = format!("comodule_algebras.{name}");
        let a = resolve(&ws.algebras, &ca.algebra, &format!("{path}.algebra"))?;
        let d = resolve(&ws.pcds, &ca.pcd, &format!("{path}.pcd"))?;
        let h = resolve(&ws.bialgebras, d.coalgebra_name(), &format!("{path}.pcd.coalgebra"))?;
        let pca = check_comodule_algebra(a, d, h).map_err(|e| wrap(&path, e))?;
        ws.comodule_algebras.insert(name.clone(), pca);
    }
    for (name, hm) in &file.hopf_modules {
        let path = format!("hopf_modules.{name}");
        let pca = resolve(&ws.comodule_algebras, &hm.comodule_algebra, &format!("{path}.comodule_algebra"))?;
        let d = resolve(&ws.pcds, &hm.pcd, &format!("{path}.pcd"))?;
        let action = parse_matrix(field, &hm.action, (d.dim_x(), d.dim_x() * pca.dim()), &format!("{path}.action"))?;
        let m = check_relative_hopf_module(d, &action, pca).map_err(|e| wrap(&path, e))?;
        ws.hopf_modules.insert(name.clone(), m);
    }
    for (name, a) in &file.actions {
        let path = format!("actions.{name}");
        let group = FiniteMonoid::group(a.group.clone(), a.unit).map_err(|e| wrap(&format!("{path}.group"), e))?;
        let mut masks = Vec::with_capacity(a.domains.len());
        for (g, dom) in a.domains.iter().enumerate() {
            let mut m = 0u64;
            for &x in dom {
                if x >= a.set_size || x >= 64 {
                    return Err(invalid(&format!("{path}.domains[{g}]"), "element outside the set", x.to_string()));
                }
                m |= 1 << x;
            }
            masks.push(m);
        }
        let d = PartialActionDatum::new(group, a.set_size, masks, a.maps.clone()).map_err(|e| wrap(&path, e))?;
        ws.actions.insert(name.clone(), d);
    }
    for (name, e) in &file.expect {
        e.resolve(&ws).map_err(|err| wrap(&format!("expect.{name}"), err))?;
    }
    Ok(ws)
}

/// Reads and verifies a corpus file.
pub fn load(path: &Path) -> Result<Workspace> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}

/// Wire form of a coalgebra, with the multiplication when `bialgebra` is given.
pub fn coalgebra_json(c: &Coalgebra, bialgebra: Option<&Bialgebra>, note: Option<&str>) -> CoalgebraJson {
    CoalgebraJson {
        field: None,
        note: note.map(String::from),
        dim: c.dim(),
        labels: c.labels().to_vec(),
        delta: matrix_rows(c.delta()),
        epsilon: matrix_rows(c.epsilon()),
        mu: bialgebra.map(|b| matrix_rows(b.algebra.mu())),
        eta: bialgebra.map(|b| matrix_rows(b.algebra.eta())),
    }
}

pub fn algebra_json(a: &FinAlgebra, note: Option<&str>) -> AlgebraJson {
    AlgebraJson {
        field: None,
        note: note.map(String::from),
        dim: a.dim(),
        mu: matrix_rows(a.mu()),
        eta: matrix_rows(a.eta()),
    }
}

/// Wire form of a datum; `coalgebra` names its coalgebra in the file.
pub fn pcd_json(d: &PartialComoduleDatum, coalgebra: &str, note: Option<&str>) -> PcdJson {
    PcdJson {
        field: None,
        note: note.map(String::from),
        coalgebra: coalgebra.into(),
        dim_x: d.dim_x(),
        dim_xbh: d.dim_xbh(),
        pi: matrix_rows(d.pi()),
        rho: matrix_rows(d.rho()),
    }
}

pub fn action_json(a: &PartialActionDatum, note: Option<&str>) -> ActionJson {
    let n = a.set_size();
    ActionJson {
        note: note.map(String::from),
        group: a.group().table().to_vec(),
        unit: a.group().unit(),
        set_size: n,
        domains: a.domains().iter().map(|&m| (0..n).filter(|&x| m >> x & 1 == 1).collect()).collect(),
        maps: a.maps().to_vec(),
    }
}

#[cfg(test)]
mod tests;
