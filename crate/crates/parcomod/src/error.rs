use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("map is not surjective (rank {rank}, target dimension {target})")]
    NonSurjective { rank: usize, target: usize },
    #[error("map is not injective (rank {rank}, source dimension {source_dim})")]
    NonInjective { rank: usize, source_dim: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not an action: {0}")]
    NotAnAction(String),
    #[error("not a coaction: {0}")]
    NotACoaction(String),
    #[error("not a bialgebra: {0}")]
    NotABialgebra(String),
    #[error("coalgebra mismatch: {0}")]
    CoalgebraMismatch(String),
    #[error("malformed datum: {0}")]
    MalformedDatum(String),
    #[error("not a partial action: {0}")]
    NotPartialAction(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("subspace is not invariant: rho({witness}) escapes pi(Y ⊗ H)")]
    NotInvariant { witness: String },
    #[error("precondition failed: datum is not geometric")]
    PreconditionNotGeometric,
    #[error("linear system inconsistent: {0}")]
    SystemInconsistent(String),
    #[error("dimension {dim} exceeds the brute-force bound {max}")]
    DimTooLarge { dim: usize, max: usize },
    #[error("exhaustive search needs a small finite field, got {0}")]
    FieldTooLarge(String),
    #[error("not an algebra map: {0}")]
    NotAlgebraMap(String),
    #[error("kernel of pi is not an ideal: {0}")]
    KernelNotIdeal(String),
    #[error("unit axiom fails: {0}")]
    UnitAxiomFails(String),
    #[error("multiplication is not colinear: {0}")]
    MultNotColinear(String),
    #[error("axiom (CJ{axiom}) fails: {detail}")]
    CjAxiomFails { axiom: u8, detail: String },
    #[error("[PRHM{axiom}] fails: {detail}")]
    PrhmFails { axiom: u8, detail: String },
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("base is not contained in the coinvariants: {0}")]
    BaseNotInCoinvariants(String),
    #[error("validation error at {path}: {axiom} ({witness})")]
    Validation { path: String, axiom: String, witness: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
