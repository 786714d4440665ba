mod common;

use ainf_core::ainfty::*;
use ainf_core::bar::{CobarAlgebra, CobarWord, TruncationPolicy};
use ainf_core::f2::NodeStatus;
use ainf_core::library::{example, example_with, ModuleChoice};
use ainf_core::tate::*;
use ainf_core::F2Sum;
use common::cyclic_tate;

fn policy(k: usize, l: usize) -> TruncationPolicy {
    TruncationPolicy::new(k, l).unwrap()
}

#[test]
fn z2_tate_is_one_in_every_trusted_degree() {
    let ex = example("z2").unwrap();
    let t = tate_complex(&ex.algebra, &ex.module, &policy(4, 8)).unwrap();
    assert!(t.norm_report.passed());
    let tate = t.tate();
    let range = tate.trusted_range();
    assert!(range.hi - range.lo >= 4, "trusted range {range}");
    let h = tate.homology_dims().unwrap();
    assert_eq!(h, cyclic_tate(2, range.lo, range.hi));
    assert!(h.values().all(|&n| n == 1));
    assert!(t.exactness.all_exact());
}

#[test]
fn odd_order_and_trivial_groups_have_vanishing_tate() {
    for name in ["z3", "trivial"] {
        let ex = example(name).unwrap();
        let t = tate_complex(&ex.algebra, &ex.module, &policy(4, 4)).unwrap();
        let h = t.tate().homology_dims().unwrap();
        assert!(!h.is_empty(), "{name}: nothing trusted");
        assert!(h.values().all(|&n| n == 0), "{name}: {h:?}");
        assert!(t.exactness.all_exact(), "{name}");
    }
    let ex = example("z3").unwrap();
    let t = tate_complex(&ex.algebra, &ex.module, &policy(4, 4)).unwrap();
    let r = t.tate().trusted_range();
    assert_eq!(t.tate().homology_dims().unwrap(), cyclic_tate(3, r.lo, r.hi));
}

#[test]
fn free_modules_have_vanishing_tate() {
    let ex = example_with("z2", ModuleChoice::Regular).unwrap();
    let t = tate_complex(&ex.algebra, &ex.module, &policy(3, 6)).unwrap();
    let h = t.tate().homology_dims().unwrap();
    assert!(!h.is_empty());
    assert!(h.values().all(|&n| n == 0), "{h:?}");
}

#[test]
fn twisted_borel_squares_to_zero() {
    for name in ["z2", "z3", "trivial", "exterior1", "massey"] {
        let ex = example(name).unwrap();
        let input = TateInput::new(&ex.algebra, &ex.module).unwrap();
        input.twisted_borel(&policy(3, 3)).unwrap().complex().check_d2().unwrap();
    }
}

#[test]
fn norm_passes_on_every_word() {
    for name in ["z2", "z3", "trivial"] {
        for choice in [ModuleChoice::Default, ModuleChoice::Regular] {
            let ex = example_with(name, choice).unwrap();
            let input = TateInput::new(&ex.algebra, &ex.module).unwrap();
            let twisted = input.twisted_borel(&policy(3, 3)).unwrap();
            let norm = input.norm(&twisted, 3);
            let r = verify_norm(&input, &twisted, &norm).unwrap();
            assert!(r.passed(), "{name} {choice:?}: {r:?}");
            assert_eq!(r.words_checked, twisted.len());
            assert!(r.equivariance_checked > 0);
        }
    }
}

#[test]
fn perturbed_norm_is_caught() {
    let ex = example("z2").unwrap();
    let t = policy(4, 8);
    let input = TateInput::new(&ex.algebra, &ex.module).unwrap();
    let twisted = input.twisted_borel(&t).unwrap();
    let coborel = input.coborel(&t).unwrap();
    let mut norm = input.norm(&twisted, t.l_max);

    // Toggle one term on a word in the middle of the trusted range.
    let trusted = twisted.complex().trusted_range();
    let d = (trusted.lo + trusted.hi) / 2;
    let w = twisted.words(d).iter().find(|w| w.prefix.is_empty()).unwrap().clone();
    let target = coborel.words(d)[0].clone();
    norm.toggle(&w, target);

    let r = verify_norm(&input, &twisted, &norm).unwrap();
    assert!(!r.passed());
    let comp = tate_from_parts(twisted, coborel, norm, r).unwrap();
    assert!(comp.exactness.nodes.iter().any(|n| n.status == NodeStatus::NotChainMap));
    assert!(!comp.exactness.all_exact());
}

#[test]
fn norm_failure_is_an_error() {
    let ex = example("z2").unwrap();
    let input = TateInput::new(&ex.algebra, &ex.module).unwrap();
    let twisted = input.twisted_borel(&policy(2, 2)).unwrap();
    let mut norm = input.norm(&twisted, 2);
    let (_, w) = twisted.all_words().find(|(_, w)| w.prefix.is_empty() && w.letters.is_empty()).unwrap();
    norm.toggle(w, CobarWord { left: 0, letters: vec![1, 1], right: 0 });
    assert!(!verify_norm(&input, &twisted, &norm).unwrap().passed());
}

#[test]
fn twisted_complex_is_a_cobar_algebra_module() {
    for name in ["z2", "z3", "exterior1"] {
        let ex = example(name).unwrap();
        let input = TateInput::new(&ex.algebra, &ex.module).unwrap();
        let omega = CobarAlgebra::new(&input.coalgebra).unwrap();
        let od = omega.data().unwrap();
        let n = input.coalgebra.basis().len() as Label;
        for w in input.words(&policy(2, 1)) {
            for x in 0..n {
                let mut lhs = input.differential(&twisted_omega_action(&[x], &w));
                let xw = CobarWord { left: 0, letters: vec![x], right: 0 };
                for dx in od.differential(&xw) {
                    lhs.add(twisted_omega_action(&dx.letters, &w));
                }
                for dw in input.differential(&w) {
                    lhs.add(twisted_omega_action(&[x], &dw));
                }
                assert!(lhs.is_zero(), "{name}: {x} on {}", input.label(&w));
            }
        }
    }
}

#[test]
fn differential_families_sum_to_the_differential() {
    let ex = example("z2").unwrap();
    let input = TateInput::new(&ex.algebra, &ex.module).unwrap();
    for w in input.words(&policy(2, 2)) {
        let mut s = F2Sum::new();
        for p in input.differential_parts(&w) {
            s.add_sum(p);
        }
        assert_eq!(s, input.differential(&w));
    }
}

#[test]
fn dualizing_coaction_of_a_group_algebra() {
    // For a group, the coaction on the slot with no bar letters is
    // g ↦ Σ_h h* ⊗ hg.
    let a = cyclic_group(3).unwrap();
    let d = dualizing_bimodule(&a);
    for g in 0..3u32 {
        let outs = d.op(&[], g, &[]).unwrap();
        assert_eq!(outs.len(), 3);
        for (left, x, right) in outs.iter() {
            assert!(right.is_empty());
            assert_eq!(left.len(), 1);
            assert_eq!((*x + 3 - left[0]) % 3, g);
        }
    }
}
