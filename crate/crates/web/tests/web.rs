use ainf_web::{homology_report, relation_checks, tree_census, MAX_LETTERS};

#[test]
fn tate_of_z2_is_one_everywhere_trusted() {
    let h = homology_report("tate", "z2", "default", 4, 6).unwrap();
    let [lo, hi] = h.trusted.unwrap();
    assert!(lo.unwrap() <= hi.unwrap());
    assert!(!h.betti.is_empty() && h.betti.values().all(|&n| n == 1));
    assert_eq!(h.exact, Some(true));
}

#[test]
fn borel_range_is_unbounded_below() {
    let h = homology_report("borel", "z3", "default", 4, 1).unwrap();
    assert_eq!(h.trusted, Some([None, Some(3)]));
    assert_eq!(h.betti.get(&0), Some(&1));
    assert!(h.betti.iter().all(|(&d, &n)| d == 0 || n == 0));
    assert_eq!(h.exact, None);
}

#[test]
fn empty_windows_give_empty_tables() {
    let h = homology_report("twisted-borel", "exterior1", "default", 3, 3).unwrap();
    assert!(h.trusted.is_none());
    assert!(h.betti.is_empty());
}

#[test]
fn bad_arguments_are_errors() {
    assert!(homology_report("tate", "z2", "default", MAX_LETTERS + 1, 2).is_err());
    assert!(homology_report("hochschild", "z2", "default", 2, 2).is_err());
    assert!(homology_report("borel", "z7", "default", 2, 2).is_err());
    assert!(homology_report("borel", "z2", "free", 2, 2).is_err());
    assert!(tree_census(20).is_err());
    assert!(tree_census(1).is_err());
}

#[test]
fn census_of_four_leaves() {
    let c = tree_census(4).unwrap();
    assert_eq!(c.by_codim.values().copied().collect::<Vec<_>>(), vec![5, 5, 1]);
    assert_eq!(c.chambers.len(), 5);
    assert!(c.walls.iter().all(|w| w.chambers.len() == 2));
}

#[test]
fn builtins_pass_their_checks() {
    for ex in ["z2", "z3", "trivial", "exterior1", "massey"] {
        for r in relation_checks(ex, "regular", 4).unwrap() {
            assert!(r.passed, "{ex}: {} {:?}", r.structure, r.witness);
        }
    }
}
