//! Partial comodules over finite-dimensional coalgebras, computed exactly.

pub mod acceptance;
pub mod coalgebra;
pub mod corpus;
pub mod error;
pub mod exactlin;
pub mod hopfgalois;
pub mod monoidal;
pub mod pcd;
pub mod samples;
pub mod setpartial;

pub use error::{Error, Result};
