//! Named built-in examples: an augmented algebra together with a left module.

use crate::ainfty::{
    cyclic_group, exterior_algebra_rank1, massey_algebra, symmetric_group_s3, trivial_group, AInfAlgebra, AInfModule,
    Basis, Side, StructureError,
};

pub const NAMES: &[&str] = &["z2", "z3", "trivial", "exterior1", "s3", "massey"];

#[derive(Clone, Debug)]
pub struct Example {
    pub name: &'static str,
    pub description: &'static str,
    pub algebra: AInfAlgebra,
    pub module: AInfModule,
}

/// Which left module to pair with the algebra of an example.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleChoice {
    /// The example's default module.
    Default,
    /// The one-dimensional module given by the augmentation.
    Trivial,
    /// The algebra acting on itself.
    Regular,
}

/// A module over the trivial group with a nonzero differential: basis `u, v, w`
/// in degrees `1, 0, 0`, `μ^{0|1}(u) = v`, and `e` acting as the identity.
pub fn trivial_group_dg_module(a: &AInfAlgebra) -> Result<AInfModule, StructureError> {
    let basis = Basis::with_degrees(vec!["u".into(), "v".into(), "w".into()], vec![1, 0, 0])?;
    let mut terms: Vec<(Vec<u32>, u32, u32)> = (0..3).map(|n| (vec![0], n, n)).collect();
    terms.push((vec![], 0, 1));
    AInfModule::new(Side::Left, basis, a, terms)
}

pub fn example(name: &str) -> Result<Example, StructureError> {
    example_with(name, ModuleChoice::Default)
}

pub fn example_with(name: &str, choice: ModuleChoice) -> Result<Example, StructureError> {
    let (name, description, algebra): (&'static str, &'static str, AInfAlgebra) = match name {
        "z2" => ("z2", "group algebra of Z/2", cyclic_group(2)?),
        "z3" => ("z3", "group algebra of Z/3", cyclic_group(3)?),
        "trivial" => ("trivial", "trivial group; default module has a differential", trivial_group()),
        "exterior1" => ("exterior1", "exterior algebra on one generator of degree 1", exterior_algebra_rank1(1)?),
        "s3" => ("s3", "group algebra of the symmetric group S3", symmetric_group_s3()),
        "massey" => ("massey", "algebra with a nonzero triple product", massey_algebra()),
        other => {
            return Err(StructureError::Invalid(format!(
                "unknown example `{other}` (known: {})",
                NAMES.join(", ")
            )))
        }
    };
    let module = match (choice, name) {
        (ModuleChoice::Default, "trivial") => trivial_group_dg_module(&algebra)?,
        (ModuleChoice::Default | ModuleChoice::Trivial, _) => AInfModule::trivial(&algebra, Side::Left)?,
        (ModuleChoice::Regular, _) => AInfModule::regular(&algebra, Side::Left),
    };
    Ok(Example {
        name,
        description,
        algebra,
        module,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfty::{verify_algebra_relations, verify_module_relations};

    #[test]
    fn every_example_is_valid() {
        for &n in NAMES {
            for choice in [ModuleChoice::Default, ModuleChoice::Trivial, ModuleChoice::Regular] {
                let ex = example_with(n, choice).unwrap();
                assert!(verify_algebra_relations(&ex.algebra, 5).passed(), "{n}");
                let r = verify_module_relations(&ex.algebra, &ex.module, 5);
                assert!(r.passed(), "{n} {choice:?}: {r:?}");
                ex.module.check_grading(&ex.algebra).unwrap();
            }
        }
        assert!(example("z5").is_err());
    }
}
