//! Sparse linear algebra over F2 and homology of finite chain complexes.

mod complex;
mod exact;
mod matrix;

pub use complex::{cone, BettiTable, ChainComplex, ChainMap, ConeSequence, DegreeRange};
pub use exact::{exactness_check, ExactnessReport, NodeResult, NodeStatus};
pub use matrix::{Reduction, SparseF2Matrix};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum F2Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("boundary does not square to zero out of degrees {0:?}")]
    NotAComplex(Vec<i64>),
}
