//! A∞-algebras, modules, coalgebras, comodules and bimodules over F2.
//!
//! Structures are finite term lists over named bases. Tuples of letters are
//! always stored in written order, so a left module term `μ^{2|1}(a, b, n)`
//! has letters `[a, b]`.

mod basis;
mod bimodule;
mod builders;
mod dual;
mod structures;
mod verify;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use basis::Basis;
pub use bimodule::{AInfBimodule, BiOutput, BimoduleKind, SideType};
pub use builders::{
    cyclic_group, exterior_algebra_rank1, group_algebra, massey_algebra, nonassociative_magma, symmetric_group_s3, trivial_group,
};
pub use dual::{comodule_to_module, dual_module_as_comodule, dualize_algebra, dualize_coalgebra, module_to_comodule};
pub use structures::{AInfAlgebra, AInfCoalgebra, AInfComodule, AInfModule};
pub use verify::{
    algebra_relation_bound, algebra_residual, module_relation_bound, verify_algebra_relations, verify_augmentation,
    verify_bimodule_relations, verify_coalgebra_relations, verify_comodule_relations, verify_module_relations, SideRef,
};

/// Index into a [`Basis`].
pub type Label = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("grading violation: {0}")]
    Grading(String),
    #[error("the algebra has no augmentation")]
    MissingAugmentation,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("{0} relations fail: {1}")]
    Relations(String, Witness),
    #[error("side mismatch: {0}")]
    SideMismatch(String),
}

/// A basis tuple on which a relation does not vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: String,
    pub residual: String,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "inputs {} leave residual {}", self.inputs, self.residual)
    }
}

/// Outcome of a relation check over all basis tuples up to some arity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub structure: String,
    pub k_check: usize,
    pub tuples_checked: usize,
    pub witness: Option<Witness>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// Turns a failing report into an error.
    pub fn into_result(self) -> Result<(), StructureError> {
        match self.witness {
            None => Ok(()),
            Some(w) => Err(StructureError::Relations(self.structure, w)),
        }
    }
}
