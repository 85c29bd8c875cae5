//! Frozen expectations: the flags the library computed when the corpus was generated.

use serde::{Deserialize, Serialize};

use super::{resolve, Workspace};
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::hopfgalois::algebra::AlgebraLike;
use crate::hopfgalois::{
    algebra_coinvariants, canonical_map, classify_algebra_comodule, coring_structure, evaluation_surjective,
    is_minimal, module_coinvariants, PartialComoduleAlgebra,
};
use crate::monoidal::{geometric_reflection, tensor_pcd};
use crate::pcd::{check_gencoass, classify};
use crate::setpartial::{globality, Violation};

/// Which subalgebra of the coinvariants serves as the base `B`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum BaseChoice {
    /// `k·1`
    K,
    /// all of `A^{coH}`
    Coinvariants,
}

impl BaseChoice {
    pub fn subspace(self, pca: &PartialComoduleAlgebra) -> Subspace {
        match self {
            BaseChoice::K => Subspace::span(pca.algebra.field(), pca.dim(), [pca.algebra.one()]),
            BaseChoice::Coinvariants => algebra_coinvariants(pca),
        }
    }
}

impl std::str::FromStr for BaseChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<BaseChoice> {
        match s {
            "k" => Ok(BaseChoice::K),
            "coinvariants" => Ok(BaseChoice::Coinvariants),
            _ => Err(Error::Parse(format!("unknown base {s:?}, expected k or coinvariants"))),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Expectation {
    Classify {
        pcd: String,
        counital: bool,
        quasi: bool,
        lax: bool,
        geometric: bool,
        dim_x: usize,
        dim_xbh: usize,
        k1_dim: usize,
        k2_dim: usize,
        /// checked for geometric data only
        #[serde(default, skip_serializing_if = "Option::is_none")]
        gencoass: Option<bool>,
    },
    Tensor {
        left: String,
        right: String,
        quasi: bool,
        geometric: bool,
        dim_x: usize,
        dim_xbh: usize,
        /// computed over GF(2) for non-geometric tensors of dimension at most 3
        #[serde(default, skip_serializing_if = "Option::is_none")]
        reflection_universal: Option<bool>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        reflection_dim: Option<usize>,
    },
    Action {
        action: String,
        pa: bool,
        lax: bool,
        quasi: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pa_violation: Option<Violation>,
        /// computed when PA holds
        #[serde(default, skip_serializing_if = "Option::is_none")]
        global: Option<bool>,
    },
    Galois {
        comodule_algebra: String,
        base: BaseChoice,
        coinvariants_dim: usize,
        base_dim: usize,
        tensor_dim: usize,
        can_rank: usize,
        can_bijective: bool,
        algebra_comodule_geometric: bool,
        /// computed when the algebra-comodule is geometric
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coring: Option<bool>,
    },
    HopfModule {
        hopf_module: String,
        minimal: bool,
        coinvariants_dim: usize,
        evaluation_surjective: bool,
    },
}

/// Result of re-verifying one expectation.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub expected: Expectation,
    pub actual: Option<Expectation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Expectation {
    pub fn classify_of(pcd: &str) -> Expectation {
        Expectation::Classify {
            pcd: pcd.into(),
            counital: false,
            quasi: false,
            lax: false,
            geometric: false,
            dim_x: 0,
            dim_xbh: 0,
            k1_dim: 0,
            k2_dim: 0,
            gencoass: None,
        }
    }

    pub fn tensor_of(left: &str, right: &str) -> Expectation {
        Expectation::Tensor {
            left: left.into(),
            right: right.into(),
            quasi: false,
            geometric: false,
            dim_x: 0,
            dim_xbh: 0,
            reflection_universal: None,
            reflection_dim: None,
        }
    }

    pub fn action_of(action: &str) -> Expectation {
        Expectation::Action {
            action: action.into(),
            pa: false,
            lax: false,
            quasi: false,
            pa_violation: None,
            global: None,
        }
    }

    pub fn galois_of(comodule_algebra: &str, base: BaseChoice) -> Expectation {
        Expectation::Galois {
            comodule_algebra: comodule_algebra.into(),
            base,
            coinvariants_dim: 0,
            base_dim: 0,
            tensor_dim: 0,
            can_rank: 0,
            can_bijective: false,
            algebra_comodule_geometric: false,
            coring: None,
        }
    }

    pub fn hopf_module_of(hopf_module: &str) -> Expectation {
        Expectation::HopfModule {
            hopf_module: hopf_module.into(),
            minimal: false,
            coinvariants_dim: 0,
            evaluation_surjective: false,
        }
    }

    /// Checks that every name the expectation refers to exists.
    pub fn resolve(&self, ws: &Workspace) -> Result<()> {
        match self {
            Expectation::Classify { pcd, .. } => resolve(&ws.pcds, pcd, "pcd").map(|_| ()),
            Expectation::Tensor { left, right, .. } => {
                let l = resolve(&ws.pcds, left, "left")?;
                resolve(&ws.pcds, right, "right")?;
                resolve(&ws.bialgebras, l.coalgebra_name(), "left.coalgebra").map(|_| ())
            }
            Expectation::Action { action, .. } => resolve(&ws.actions, action, "action").map(|_| ()),
            Expectation::Galois { comodule_algebra, .. } => {
                resolve(&ws.comodule_algebras, comodule_algebra, "comodule_algebra").map(|_| ())
            }
            Expectation::HopfModule { hopf_module, .. } => {
                resolve(&ws.hopf_modules, hopf_module, "hopf_module").map(|_| ())
            }
        }
    }

    /// The same expectation with every flag recomputed from the workspace.
    pub fn recompute(&self, ws: &Workspace) -> Result<Expectation> {
        self.resolve(ws)?;
        Ok(match self {
            Expectation::Classify { pcd, .. } => {
                let d = &ws.pcds[pcd];
                let r = classify(d);
                let gencoass = if r.geometric { Some(check_gencoass(d)?.passed()) } else { None };
                Expectation::Classify {
                    pcd: pcd.clone(),
                    counital: r.counital,
                    quasi: r.quasi,
                    lax: r.lax,
                    geometric: r.geometric,
                    dim_x: r.dim_x,
                    dim_xbh: r.dim_xbh,
                    k1_dim: r.k1_dim,
                    k2_dim: r.k2_dim,
                    gencoass,
                }
            }
            Expectation::Tensor { left, right, .. } => {
                let (a, b) = (&ws.pcds[left], &ws.pcds[right]);
                let h = &ws.bialgebras[a.coalgebra_name()];
                let (t, _) = tensor_pcd(a, b, h)?;
                let r = classify(&t);
                let (mut reflection_universal, mut reflection_dim) = (None, None);
                if ws.field.order() == Some(2) && !r.geometric && t.dim_x() <= 3 {
                    let refl = geometric_reflection(&t, 3)?;
                    reflection_universal = Some(refl.universal);
                    reflection_dim = Some(refl.datum.dim_x());
                }
                Expectation::Tensor {
                    left: left.clone(),
                    right: right.clone(),
                    quasi: r.quasi,
                    geometric: r.geometric,
                    dim_x: t.dim_x(),
                    dim_xbh: t.dim_xbh(),
                    reflection_universal,
                    reflection_dim,
                }
            }
            Expectation::Action { action, .. } => {
                let d = &ws.actions[action];
                let pa = d.check_pa()?;
                let global = if pa.holds { Some(globality(d)?.elementwise) } else { None };
                Expectation::Action {
                    action: action.clone(),
                    pa: pa.holds,
                    lax: d.check_lpa()?.holds,
                    quasi: d.check_qpa()?.holds,
                    pa_violation: pa.violation,
                    global,
                }
            }
            Expectation::Galois { comodule_algebra, base, .. } => {
                let pca = &ws.comodule_algebras[comodule_algebra];
                let b = base.subspace(pca);
                let g = canonical_map(pca, &b)?;
                let geometric = classify_algebra_comodule(pca).geometric;
                let coring = if geometric { Some(coring_structure(pca, Some(&g))?.passed()) } else { None };
                Expectation::Galois {
                    comodule_algebra: comodule_algebra.clone(),
                    base: *base,
                    coinvariants_dim: g.coinvariants_basis.len(),
                    base_dim: g.base_dim,
                    tensor_dim: g.tensor_dim,
                    can_rank: g.can_rank,
                    can_bijective: g.can_bijective,
                    algebra_comodule_geometric: geometric,
                    coring,
                }
            }
            Expectation::HopfModule { hopf_module, .. } => {
                let m = &ws.hopf_modules[hopf_module];
                let pca = &ws.comodule_algebras[&ws.file.hopf_modules[hopf_module].comodule_algebra];
                Expectation::HopfModule {
                    hopf_module: hopf_module.clone(),
                    minimal: is_minimal(m),
                    coinvariants_dim: module_coinvariants(m, pca).dim(),
                    evaluation_surjective: evaluation_surjective(m, pca),
                }
            }
        })
    }

    /// Recomputes and compares.
    pub fn verify(&self, name: &str, ws: &Workspace) -> CheckOutcome {
        match self.recompute(ws) {
            Ok(actual) => CheckOutcome {
                name: name.into(),
                passed: actual == *self,
                expected: self.clone(),
                actual: Some(actual),
                error: None,
            },
            Err(e) => CheckOutcome {
                name: name.into(),
                passed: false,
                expected: self.clone(),
                actual: None,
                error: Some(e.to_string()),
            },
        }
    }
}

impl Workspace {
    /// Re-verifies every stored expectation, in name order.
    pub fn verify_expectations(&self) -> Vec<CheckOutcome> {
        self.file.expect.iter().map(|(n, e)| e.verify(n, self)).collect()
    }
}
