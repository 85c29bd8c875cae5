//! Partial comodule algebras, relative Hopf modules and Hopf-Galois theory.

pub mod algebra;
mod comodule_algebra;
mod coring;
mod module;

pub use comodule_algebra::{
    check_cj, check_comodule_algebra, classify_algebra_comodule, ideal_closure, trivial_comodule_algebra, CjReport,
    CjSummary, PartialComoduleAlgebra,
};
pub use coring::{coring_structure, CoringReport};
pub use module::{
    adjunction_check, algebra_coinvariants, can_on, canonical_map, check_module, check_relative_hopf_module,
    coinvariants, counit, counit_is_hopf_iso, enlarge_kernel, evaluation_surjective, hom_from_algebra,
    induce_hopf_module, is_minimal, module_coinvariants, regular_module, tensor_over_base, AdjunctionReport,
    BaseModule, Counit, GaloisReport, InducedModule, RelativeHopfModule,
};

#[cfg(test)]
mod tests;
