//! Browser bindings: each exported function takes plain arguments and
//! returns a JSON string for the page in `www/`.

use std::collections::BTreeMap;

use ainf_core::ainfty::{dualize_algebra, verify_algebra_relations, verify_augmentation, verify_coalgebra_relations, verify_module_relations};
use ainf_core::bar::{borel, coborel, TruncationPolicy};
use ainf_core::f2::ChainComplex;
use ainf_core::library::{example_with, ModuleChoice};
use ainf_core::tate::{tate_complex, verify_dualizing_bimodule, TateInput};
use ainf_core::trees::{count_by_codim, wall_adjacency, Wall};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Larger truncations take seconds to minutes in the browser.
pub const MAX_LETTERS: usize = 8;
pub const MAX_LEAVES: usize = 7;

#[derive(Serialize)]
pub struct Homology {
    pub complex: String,
    pub chains: usize,
    /// `None` when no degree is trusted; `[lo, hi]` with `null` for an unbounded end.
    pub trusted: Option<[Option<i64>; 2]>,
    pub betti: BTreeMap<i64, usize>,
    pub exact: Option<bool>,
}

#[derive(Serialize)]
pub struct Census {
    pub n: usize,
    pub by_codim: BTreeMap<usize, usize>,
    pub chambers: Vec<String>,
    pub walls: Vec<Wall>,
}

#[derive(Serialize)]
pub struct CheckRow {
    pub structure: String,
    pub passed: bool,
    pub witness: Option<String>,
}

fn module_choice(kind: &str) -> Result<ModuleChoice, String> {
    match kind {
        "default" => Ok(ModuleChoice::Default),
        "trivial" => Ok(ModuleChoice::Trivial),
        "regular" => Ok(ModuleChoice::Regular),
        other => Err(format!("unknown module `{other}`")),
    }
}

fn summarize(name: &str, c: &ChainComplex, exact: Option<bool>) -> Result<Homology, String> {
    let t = c.trusted_range();
    let betti = if t.is_empty() { BTreeMap::new() } else { c.homology_dims().map_err(|e| e.to_string())? };
    let end = |x: i64| (x != i64::MIN && x != i64::MAX).then_some(x);
    Ok(Homology {
        complex: name.to_string(),
        chains: c.total_dim(),
        trusted: (!t.is_empty()).then(|| [end(t.lo), end(t.hi)]),
        betti,
        exact,
    })
}

/// Betti table of `borel`, `coborel`, `twisted-borel` or `tate` for a built-in example.
pub fn homology_report(complex: &str, example: &str, module: &str, kmax: usize, lmax: usize) -> Result<Homology, String> {
    if kmax > MAX_LETTERS || lmax > MAX_LETTERS {
        return Err(format!("truncations above {MAX_LETTERS} are too slow for the browser"));
    }
    let ex = example_with(example, module_choice(module)?).map_err(|e| e.to_string())?;
    let t = TruncationPolicy::new(kmax, lmax).map_err(|e| e.to_string())?;
    let (a, m) = (&ex.algebra, &ex.module);
    let s = |e: &dyn std::fmt::Display| e.to_string();
    match complex {
        "borel" => summarize(complex, borel(a, m, &t).map_err(|e| s(&e))?.complex(), None),
        "coborel" => summarize(complex, coborel(a, m, &t).map_err(|e| s(&e))?.complex(), None),
        "twisted-borel" => {
            let input = TateInput::new(a, m).map_err(|e| s(&e))?;
            summarize(complex, input.twisted_borel(&t).map_err(|e| s(&e))?.complex(), None)
        }
        "tate" => {
            let comp = tate_complex(a, m, &t).map_err(|e| s(&e))?;
            let checked = comp.exactness.nodes.len() > comp.exactness.skipped();
            summarize(complex, comp.tate(), checked.then(|| comp.exactness.all_exact()))
        }
        other => Err(format!("unknown complex `{other}`")),
    }
}

pub fn tree_census(n: usize) -> Result<Census, String> {
    if n > MAX_LEAVES {
        return Err(format!("at most {MAX_LEAVES} leaves"));
    }
    let by_codim = count_by_codim(n).map_err(|e| e.to_string())?;
    let g = wall_adjacency(n).map_err(|e| e.to_string())?;
    Ok(Census {
        n,
        by_codim,
        chambers: g.chambers,
        walls: g.walls,
    })
}

/// Relation checks for a built-in example at arity `kcheck`.
pub fn relation_checks(example: &str, module: &str, kcheck: usize) -> Result<Vec<CheckRow>, String> {
    if kcheck > 6 {
        return Err("kcheck is at most 6".into());
    }
    let ex = example_with(example, module_choice(module)?).map_err(|e| e.to_string())?;
    let a = &ex.algebra;
    let c = dualize_algebra(a);
    Ok([
        verify_algebra_relations(a, kcheck),
        verify_augmentation(a),
        verify_module_relations(a, &ex.module, kcheck),
        verify_coalgebra_relations(&c),
        verify_dualizing_bimodule(a, kcheck.min(4)),
    ]
    .into_iter()
    .map(|r| CheckRow {
        passed: r.passed(),
        witness: r.witness.map(|w| w.to_string()),
        structure: r.structure,
    })
    .collect())
}

fn to_js<T: Serialize>(r: Result<T, String>) -> Result<String, JsValue> {
    r.and_then(|v| serde_json::to_string(&v).map_err(|e| e.to_string()))
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn homology(complex: &str, example: &str, module: &str, kmax: usize, lmax: usize) -> Result<String, JsValue> {
    to_js(homology_report(complex, example, module, kmax, lmax))
}

#[wasm_bindgen]
pub fn trees(n: usize) -> Result<String, JsValue> {
    to_js(tree_census(n))
}

#[wasm_bindgen]
pub fn verify(example: &str, module: &str, kcheck: usize) -> Result<String, JsValue> {
    to_js(relation_checks(example, module, kcheck))
}
