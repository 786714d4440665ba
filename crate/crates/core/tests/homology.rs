mod common;

use std::collections::BTreeMap;

use ainf_core::ainfty::*;
use ainf_core::bar::*;
use ainf_core::f2::BettiTable;
use ainf_core::library::{example, example_with, ModuleChoice, NAMES};
use common::*;

fn policy(k: usize, l: usize) -> TruncationPolicy {
    TruncationPolicy::new(k, l).unwrap()
}

fn nonzero(b: &BettiTable) -> BTreeMap<i64, usize> {
    b.iter().filter(|(_, &n)| n > 0).map(|(&d, &n)| (d, n)).collect()
}

/// Compares a computed table against an oracle on the computed table's degrees.
fn assert_matches(name: &str, got: &BettiTable, oracle: &BTreeMap<i64, usize>) {
    assert!(!got.is_empty(), "{name}: nothing trusted");
    for (d, n) in got {
        let want = oracle.get(d).copied().unwrap_or_else(|| panic!("{name}: oracle has no degree {d}"));
        assert_eq!(*n, want, "{name} degree {d}");
    }
}

#[test]
fn borel_of_cyclic_groups() {
    let z2 = example("z2").unwrap();
    let b = borel(&z2.algebra, &z2.module, &policy(8, 1)).unwrap();
    let h = b.complex().homology_dims().unwrap();
    assert_eq!(b.complex().trusted_range().hi, 7);
    assert_matches("z2", &h, &cyclic_group_homology(2, 9));
    assert_eq!(h.len(), 8);

    let z3 = example("z3").unwrap();
    let b = borel(&z3.algebra, &z3.module, &policy(5, 1)).unwrap();
    let h = b.complex().homology_dims().unwrap();
    assert_matches("z3", &h, &cyclic_group_homology(3, 6));
    assert_eq!(nonzero(&h), BTreeMap::from([(0, 1)]));
}

#[test]
fn borel_of_symmetric_group_matches_its_sylow_subgroup() {
    let s3 = example("s3").unwrap();
    let b = borel(&s3.algebra, &s3.module, &policy(4, 1)).unwrap();
    let h = b.complex().homology_dims().unwrap();
    assert_matches("s3", &h, &cyclic_group_homology(2, 5));
}

#[test]
fn borel_of_exterior_algebra_is_koszul() {
    for deg in [1, 2] {
        let a = exterior_algebra_rank1(deg).unwrap();
        let m = AInfModule::trivial(&a, Side::Left).unwrap();
        let b = borel(&a, &m, &policy(6, 1)).unwrap();
        let h = b.complex().homology_dims().unwrap();
        assert_matches(&format!("exterior deg {deg}"), &h, &exterior_tor(deg, 40));
    }
}

#[test]
fn borel_of_trivial_group_is_homology_of_the_module() {
    let ex = example("trivial").unwrap();
    let b = borel(&ex.algebra, &ex.module, &policy(4, 1)).unwrap();
    let h = b.complex().homology_dims().unwrap();
    // M = (u → v) ⊕ w.
    let mut dims: BTreeMap<i64, usize> = (-10..=10).map(|d| (d, 0)).collect();
    dims.extend([(0, 2), (1, 1)]);
    let d = BTreeMap::from([(1, vec![vec![1u8], vec![0u8]])]);
    let oracle = dense_homology(&dims, &d);
    assert_matches("trivial", &h, &oracle);
}

#[test]
fn borel_of_free_modules_is_a_point() {
    for &name in NAMES {
        if name == "massey" {
            continue;
        }
        let ex = example_with(name, ModuleChoice::Regular).unwrap();
        let k = if name == "s3" { 3 } else { 4 };
        let b = borel(&ex.algebra, &ex.module, &policy(k, 1)).unwrap();
        let h = b.complex().homology_dims().unwrap();
        assert_eq!(nonzero(&h), BTreeMap::from([(0, 1)]), "{name}");
    }
}

#[test]
fn coborel_of_cyclic_groups() {
    let z2 = example("z2").unwrap();
    let c = coborel(&z2.algebra, &z2.module, &policy(1, 8)).unwrap();
    let h = c.complex().homology_dims().unwrap();
    assert_eq!(c.complex().trusted_range().lo, -7);
    assert_matches("z2", &h, &cyclic_group_cohomology(2, 9));
    assert_eq!(h.len(), 8);

    let z3 = example("z3").unwrap();
    let c = coborel(&z3.algebra, &z3.module, &policy(1, 5)).unwrap();
    let h = c.complex().homology_dims().unwrap();
    assert_matches("z3", &h, &cyclic_group_cohomology(3, 6));
}

#[test]
fn coborel_of_exterior_algebra() {
    let ex = example("exterior1").unwrap();
    let c = coborel(&ex.algebra, &ex.module, &policy(1, 6)).unwrap();
    let h = c.complex().homology_dims().unwrap();
    let oracle: BTreeMap<i64, usize> = exterior_tor(1, 40).into_iter().map(|(d, n)| (-d, n)).collect();
    assert_matches("exterior1", &h, &oracle);
}

#[test]
fn d_squared_vanishes_on_every_example() {
    for &name in NAMES {
        for choice in [ModuleChoice::Default, ModuleChoice::Regular] {
            let ex = example_with(name, choice).unwrap();
            let k = if name == "s3" { 3 } else { 4 };
            let b = borel(&ex.algebra, &ex.module, &policy(k, k)).unwrap();
            b.complex().check_d2().unwrap();
            let c = coborel(&ex.algebra, &ex.module, &policy(k, k)).unwrap();
            c.complex().check_d2().unwrap();
        }
    }
}

#[test]
fn coborel_differential_splits_into_two_parts() {
    for name in ["z2", "z3", "exterior1", "massey"] {
        let ex = example_with(name, ModuleChoice::Regular).unwrap();
        let input = CoborelInput::new(&ex.algebra, &ex.module).unwrap();
        let data = input.data().unwrap();
        for w in data.words(3) {
            let (first, second) = data.differential_parts(&w);
            let mut sum = first.clone();
            sum.add_sum(second.clone());
            assert_eq!(sum, data.differential(&w), "{name}");
            // The first part alone is the differential for the module with
            // zero coaction, so it squares to zero.
            let mut twice = ainf_core::F2Sum::new();
            for t in first.iter() {
                twice.add_sum(data.differential_parts(t).0);
            }
            assert!(twice.is_zero(), "{name}: {w:?}");
        }
    }
}

#[test]
fn cobar_algebra_acts_by_derivations() {
    for name in ["z2", "z3", "exterior1", "massey"] {
        let ex = example_with(name, ModuleChoice::Regular).unwrap();
        let input = CoborelInput::new(&ex.algebra, &ex.module).unwrap();
        let target = input.data().unwrap();
        let omega = CobarAlgebra::new(&input.coalgebra).unwrap();
        let od = omega.data().unwrap();
        let n = input.coalgebra.basis().len() as Label;
        let xs: Vec<Vec<Label>> = (0..n).map(|x| vec![x]).chain((0..n).flat_map(|x| (0..n).map(move |y| vec![x, y]))).collect();
        for w in target.words(2) {
            for x in &xs {
                assert!(leibniz_defect(&od, &target, x, &w).is_zero(), "{name}: {x:?} on {w:?}");
            }
        }
    }
}

#[test]
fn bar_coproduct_is_a_coassociative_chain_map() {
    for name in ["z2", "z3", "exterior1", "massey", "trivial"] {
        let ex = example(name).unwrap();
        let a = &ex.algebra;
        let kr = AInfModule::trivial(a, Side::Right).unwrap();
        let kl = AInfModule::trivial(a, Side::Left).unwrap();
        let full = BarData::new(&kr, a, &ex.module).unwrap();
        let left = BarData::new(&kr, a, &kl).unwrap();
        let right = BarData::new(&kr, a, &ex.module).unwrap();
        for w in full.words(3) {
            assert!(coproduct_chain_defect(&full, &left, &right, &w).is_zero(), "{name}: {w:?}");
            // (Δ ⊗ 1)Δ = (1 ⊗ Δ)Δ as sets of triples of letter runs.
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for (x, y) in bar_coproduct(&w) {
                for (x1, x2) in bar_coproduct(&x) {
                    lhs.push((x1.letters, x2.letters, y.letters.clone()));
                }
                for (y1, y2) in bar_coproduct(&y) {
                    rhs.push((x.letters.clone(), y1.letters, y2.letters));
                }
            }
            lhs.sort();
            rhs.sort();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn cobar_is_transpose_of_bar() {
    for name in ["z2", "z3", "exterior1"] {
        let a = example(name).unwrap().algebra;
        let c = dualize_algebra(&a);
        let m = AInfModule::trivial(&a, Side::Right).unwrap();
        for n in [AInfModule::regular(&a, Side::Left), AInfModule::trivial(&a, Side::Left).unwrap()] {
            let bar = bar_complex(&m, &a, &n, &policy(3, 3)).unwrap();
            let cobar = cobar_complex(&dual_module_as_comodule(&a, &n), &c, &dual_module_as_comodule(&a, &m), &policy(3, 3)).unwrap();
            let r = check_bar_cobar_duality(&bar, &cobar);
            assert!(r.passed(), "{name}: {:?}", &r.mismatches[..r.mismatches.len().min(3)]);
        }
    }
}

#[test]
fn inhomogeneous_or_unsupported_inputs_are_rejected() {
    assert!(TruncationPolicy::new(0, 3).is_err());
    // An algebra in negative degree is outside the supported range.
    let basis = Basis::with_degrees(vec!["1".into(), "y".into()], vec![0, -2]).unwrap();
    let a = AInfAlgebra::new(basis, [(vec![0, 0], 0), (vec![0, 1], 1), (vec![1, 0], 1)])
        .unwrap()
        .with_augmentation([0])
        .unwrap();
    let m = AInfModule::trivial(&a, Side::Left).unwrap();
    assert!(matches!(borel(&a, &m, &policy(2, 2)), Err(ConstructionError::Unsupported(_))));
    // The magma is not an algebra.
    let g = nonassociative_magma().with_augmentation([0, 1]).unwrap();
    let m = AInfModule::trivial(&g, Side::Left).unwrap();
    assert!(matches!(borel(&g, &m, &policy(2, 2)), Err(ConstructionError::Structure(_))));
}
