use std::path::PathBuf;

use ainf_core::ainfty::*;
use ainf_core::library::{example_with, ModuleChoice, NAMES};
use ainf_core::presentation::*;

fn shipped(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/examples").join(name)
}

#[test]
fn shipped_files_load() {
    assert_eq!(load(shipped("z2.json")).unwrap(), Presentation::Algebra(cyclic_group(2).unwrap()));
    assert_eq!(load(shipped("z3.json")).unwrap(), Presentation::Algebra(cyclic_group(3).unwrap()));
    assert_eq!(
        load(shipped("exterior1.json")).unwrap(),
        Presentation::Algebra(exterior_algebra_rank1(1).unwrap())
    );
    let a = cyclic_group(2).unwrap();
    let m = AInfModule::trivial(&a, Side::Left).unwrap();
    assert_eq!(
        load(shipped("z2-trivial-module.json")).unwrap(),
        Presentation::Module { algebra: a, module: m }
    );
}

fn without_term(i: usize) -> String {
    let mut doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(shipped("z2.json")).unwrap()).unwrap();
    doc["terms"].as_array_mut().unwrap().remove(i);
    doc.to_string()
}

#[test]
fn deleting_a_product_term_is_rejected_with_a_witness() {
    // Without e·g = g the triple (e, g, g) breaks associativity.
    let d = parse_str(&without_term(1), "z2-broken.json", None).unwrap_err();
    let w = d.witness.clone().expect("relation failure carries a witness");
    assert_eq!(w.inputs.matches(',').count(), 2, "a triple: {w}");
    assert!(d.to_string().starts_with("z2-broken.json: algebra relations fail"), "{d}");
    // Without g·g = e the product is associative, but ε is no longer multiplicative.
    let d = parse_str(&without_term(3), "z2-broken.json", None).unwrap_err();
    assert_eq!(d.witness.unwrap().inputs, "(g,g)");
    for i in 0..4 {
        assert!(parse_str(&without_term(i), "z2-broken.json", None).is_err());
    }
}

#[test]
fn every_builtin_round_trips() {
    for &name in NAMES {
        for choice in [ModuleChoice::Default, ModuleChoice::Regular] {
            let ex = example_with(name, choice).unwrap();
            let c = dualize_algebra(&ex.algebra);
            let cases = [
                Presentation::Algebra(ex.algebra.clone()),
                Presentation::Module { algebra: ex.algebra.clone(), module: ex.module.clone() },
                Presentation::Coalgebra(c.clone()),
                Presentation::Comodule { comodule: module_to_comodule(&ex.algebra, &ex.module), coalgebra: c.clone() },
                Presentation::Comodule { comodule: dual_module_as_comodule(&ex.algebra, &ex.module), coalgebra: c },
            ];
            for p in cases {
                let text = dump(&p);
                assert_eq!(parse_str(&text, name, None).unwrap(), p, "{name} {:?}", p.kind());
                assert_eq!(dump(&parse_str(&text, name, None).unwrap()), text);
            }
        }
    }
}

#[test]
fn located_diagnostics() {
    let cases = [
        (r#"{"kind": "algebra", "basis": ["e", "e"]}"#, Location::Field("basis".into())),
        (r#"{"kind": "algebra", "basis": ["e"], "extra": 1}"#, Location::Position { line: 1, column: 43 }),
        (r#"{"kind": "module", "basis": ["m"]}"#, Location::Field("side".into())),
        (
            r#"{"kind": "coalgebra", "basis": ["c"], "terms": [{"arity": 1, "inputs": ["c"], "output": "c"}]}"#,
            Location::Field("terms[0].inputs".into()),
        ),
        (
            r#"{"kind": "module", "side": "left", "algebra": {"kind": "coalgebra", "basis": []}, "basis": ["m"]}"#,
            Location::Field("algebra".into()),
        ),
        (
            r#"{"kind": "algebra", "basis": [{"name": "x", "degree": 1}], "terms": [{"arity": 2, "inputs": ["x", "x"], "output": "x"}]}"#,
            Location::Field("terms".into()),
        ),
    ];
    for (text, loc) in cases {
        let d = parse_str(text, "t.json", None).unwrap_err();
        assert_eq!(d.location, loc, "{text}: {d}");
    }
}

#[test]
fn missing_reference_is_reported() {
    let text = r#"{"kind": "module", "side": "left", "algebra": "nope.json", "basis": ["m"]}"#;
    let d = parse_str(text, "m.json", Some(&shipped(""))).unwrap_err();
    assert!(d.message.contains("cannot read"), "{d}");
}
