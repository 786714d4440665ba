//! JSON presentations of algebras, modules, coalgebras and comodules.
//!
//! See `docs/presentation.md` for the format. Every loaded structure has
//! passed its relation check; failures carry a location (line and column for
//! syntax errors, a field path otherwise) and, for relation failures, a
//! witness tuple.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::ainfty::{
    algebra_relation_bound, module_relation_bound, verify_algebra_relations, verify_augmentation, verify_coalgebra_relations,
    verify_comodule_relations, verify_module_relations, AInfAlgebra, AInfCoalgebra, AInfComodule, AInfModule, Basis,
    Label, RelationReport, Side, StructureError, Witness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Algebra,
    Module,
    Coalgebra,
    Comodule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisEntry {
    Name(String),
    Graded { name: String, degree: i64 },
}

impl BasisEntry {
    fn name(&self) -> &str {
        match self {
            BasisEntry::Name(n) | BasisEntry::Graded { name: n, .. } => n,
        }
    }

    fn degree(&self) -> i64 {
        match self {
            BasisEntry::Name(_) => 0,
            BasisEntry::Graded { degree, .. } => *degree,
        }
    }
}

/// One structure-map term. Products use `inputs`/`output`, coproducts use
/// `input`/`outputs`. Module elements sit in their written position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub arity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inputs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outputs: Option<Vec<String>>,
}

/// Either a path (relative to the referring file) or an inline document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Reference {
    Path(String),
    Inline(Box<PresentationFile>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<Reference>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<Reference>,
    pub basis: Vec<BasisEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaugmentation: Option<Vec<String>>,
    #[serde(default)]
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Algebra(AInfAlgebra),
    Module { algebra: AInfAlgebra, module: AInfModule },
    Coalgebra(AInfCoalgebra),
    Comodule { coalgebra: AInfCoalgebra, comodule: AInfComodule },
}

impl Presentation {
    pub fn kind(&self) -> Kind {
        match self {
            Presentation::Algebra(_) => Kind::Algebra,
            Presentation::Module { .. } => Kind::Module,
            Presentation::Coalgebra(_) => Kind::Coalgebra,
            Presentation::Comodule { .. } => Kind::Comodule,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    Position { line: usize, column: usize },
    Field(String),
    Document,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub source: String,
    pub location: Location,
    pub message: String,
    pub witness: Option<Witness>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.location {
            Location::Position { line, column } => write!(f, "{}:{line}:{column}: {}", self.source, self.message)?,
            Location::Field(p) => write!(f, "{}: field `{p}`: {}", self.source, self.message)?,
            Location::Document => write!(f, "{}: {}", self.source, self.message)?,
        }
        if let Some(w) = &self.witness {
            write!(f, " ({w})")?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostic {}

struct Ctx<'a> {
    source: &'a str,
    base: Option<&'a Path>,
    depth: usize,
    checked: bool,
}

impl Ctx<'_> {
    fn at(&self, field: impl Into<String>, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            source: self.source.to_string(),
            location: Location::Field(field.into()),
            message: message.into(),
            witness: None,
        }
    }

    fn failed(&self, report: RelationReport) -> Result<(), Diagnostic> {
        if !self.checked {
            return Ok(());
        }
        match report.witness {
            None => Ok(()),
            Some(w) => Err(Diagnostic {
                source: self.source.to_string(),
                location: Location::Document,
                message: format!("{} relations fail", report.structure),
                witness: Some(w),
            }),
        }
    }

    fn structure(&self, field: &str, e: StructureError) -> Diagnostic {
        self.at(field, e.to_string())
    }
}

fn basis_of(ctx: &Ctx, entries: &[BasisEntry]) -> Result<Basis, Diagnostic> {
    let names = entries.iter().map(|e| e.name().to_string()).collect();
    let degrees = entries.iter().map(BasisEntry::degree).collect();
    Basis::with_degrees(names, degrees).map_err(|e| ctx.structure("basis", e))
}

fn label(ctx: &Ctx, basis: &Basis, name: &str, field: String) -> Result<Label, Diagnostic> {
    basis
        .index_of(name)
        .ok_or_else(|| ctx.at(field, format!("`{name}` is not a basis element")))
}

fn labels(ctx: &Ctx, basis: &Basis, names: &[String], field: &str) -> Result<Vec<Label>, Diagnostic> {
    names
        .iter()
        .enumerate()
        .map(|(i, n)| label(ctx, basis, n, format!("{field}[{i}]")))
        .collect()
}

/// Looks up `name` among algebra letters or the module basis, depending on position.
fn split_element(
    ctx: &Ctx,
    letters_basis: &Basis,
    elem_basis: &Basis,
    side: Side,
    names: &[String],
    field: &str,
) -> Result<(Vec<Label>, Label), Diagnostic> {
    if names.is_empty() {
        return Err(ctx.at(field, "needs at least the module element"));
    }
    let (elem_pos, letter_range) = match side {
        Side::Left => (names.len() - 1, 0..names.len() - 1),
        Side::Right => (0, 1..names.len()),
    };
    let elem = label(ctx, elem_basis, &names[elem_pos], format!("{field}[{elem_pos}]"))?;
    let letters = letter_range
        .map(|i| label(ctx, letters_basis, &names[i], format!("{field}[{i}]")))
        .collect::<Result<_, _>>()?;
    Ok((letters, elem))
}

fn term_field<'t, T>(ctx: &Ctx, v: &'t Option<T>, path: &str, name: &str) -> Result<&'t T, Diagnostic> {
    v.as_ref().ok_or_else(|| ctx.at(path, format!("missing `{name}`")))
}

fn check_arity(ctx: &Ctx, path: &str, declared: usize, actual: usize) -> Result<(), Diagnostic> {
    if declared != actual {
        return Err(ctx.at(format!("{path}.arity"), format!("declared {declared} but the term has {actual}")));
    }
    Ok(())
}

fn resolve(ctx: &Ctx, r: &Reference, field: &str, want: Kind) -> Result<Presentation, Diagnostic> {
    if ctx.depth > 8 {
        return Err(ctx.at(field, "references nest too deeply"));
    }
    let p = match r {
        Reference::Inline(doc) => build(
            &Ctx {
                source: ctx.source,
                base: ctx.base,
                depth: ctx.depth + 1,
                checked: ctx.checked,
            },
            doc,
        )?,
        Reference::Path(p) => {
            let path = match ctx.base {
                Some(b) => b.join(p),
                None => PathBuf::from(p),
            };
            load_nested(&path, ctx.depth + 1, ctx.checked)?
        }
    };
    if p.kind() != want {
        return Err(ctx.at(field, format!("refers to a {:?}, expected a {:?}", p.kind(), want).to_lowercase()));
    }
    Ok(p)
}

fn build(ctx: &Ctx, doc: &PresentationFile) -> Result<Presentation, Diagnostic> {
    let basis = basis_of(ctx, &doc.basis)?;
    let unexpected = |present: bool, field: &str| -> Result<(), Diagnostic> {
        if present {
            Err(ctx.at(field, format!("not allowed for a {:?}", doc.kind).to_lowercase()))
        } else {
            Ok(())
        }
    };
    match doc.kind {
        Kind::Algebra => {
            unexpected(doc.side.is_some(), "side")?;
            unexpected(doc.algebra.is_some(), "algebra")?;
            unexpected(doc.coalgebra.is_some(), "coalgebra")?;
            unexpected(doc.coaugmentation.is_some(), "coaugmentation")?;
            let mut terms = Vec::new();
            for (i, t) in doc.terms.iter().enumerate() {
                let path = format!("terms[{i}]");
                unexpected(t.input.is_some(), &format!("{path}.input"))?;
                unexpected(t.outputs.is_some(), &format!("{path}.outputs"))?;
                let ins = term_field(ctx, &t.inputs, &path, "inputs")?;
                check_arity(ctx, &path, t.arity, ins.len())?;
                let out = term_field(ctx, &t.output, &path, "output")?;
                terms.push((
                    labels(ctx, &basis, ins, &format!("{path}.inputs"))?,
                    label(ctx, &basis, out, format!("{path}.output"))?,
                ));
            }
            let mut a = AInfAlgebra::new(basis.clone(), terms).map_err(|e| ctx.structure("terms", e))?;
            if let Some(aug) = &doc.augmentation {
                let s = labels(ctx, &basis, aug, "augmentation")?;
                a = a.with_augmentation(s).map_err(|e| ctx.structure("augmentation", e))?;
            }
            a.check_grading().map_err(|e| ctx.structure("terms", e))?;
            ctx.failed(verify_algebra_relations(&a, algebra_relation_bound(&a)))?;
            ctx.failed(verify_augmentation(&a))?;
            Ok(Presentation::Algebra(a))
        }
        Kind::Coalgebra => {
            unexpected(doc.side.is_some(), "side")?;
            unexpected(doc.algebra.is_some(), "algebra")?;
            unexpected(doc.coalgebra.is_some(), "coalgebra")?;
            unexpected(doc.augmentation.is_some(), "augmentation")?;
            let mut terms = Vec::new();
            for (i, t) in doc.terms.iter().enumerate() {
                let path = format!("terms[{i}]");
                unexpected(t.inputs.is_some(), &format!("{path}.inputs"))?;
                unexpected(t.output.is_some(), &format!("{path}.output"))?;
                let input = term_field(ctx, &t.input, &path, "input")?;
                let outs = term_field(ctx, &t.outputs, &path, "outputs")?;
                check_arity(ctx, &path, t.arity, outs.len())?;
                terms.push((
                    label(ctx, &basis, input, format!("{path}.input"))?,
                    labels(ctx, &basis, outs, &format!("{path}.outputs"))?,
                ));
            }
            let mut c = AInfCoalgebra::new(basis.clone(), terms).map_err(|e| ctx.structure("terms", e))?;
            if let Some(co) = &doc.coaugmentation {
                let s = labels(ctx, &basis, co, "coaugmentation")?;
                c = c.with_epsilon_star(s).map_err(|e| ctx.structure("coaugmentation", e))?;
            }
            c.check_grading().map_err(|e| ctx.structure("terms", e))?;
            ctx.failed(verify_coalgebra_relations(&c))?;
            Ok(Presentation::Coalgebra(c))
        }
        Kind::Module => {
            unexpected(doc.coalgebra.is_some(), "coalgebra")?;
            unexpected(doc.augmentation.is_some(), "augmentation")?;
            unexpected(doc.coaugmentation.is_some(), "coaugmentation")?;
            let side = *term_field(ctx, &doc.side, "side", "side")?;
            let r = term_field(ctx, &doc.algebra, "algebra", "algebra")?;
            let Presentation::Algebra(algebra) = resolve(ctx, r, "algebra", Kind::Algebra)? else {
                unreachable!()
            };
            let mut terms = Vec::new();
            for (i, t) in doc.terms.iter().enumerate() {
                let path = format!("terms[{i}]");
                unexpected(t.input.is_some(), &format!("{path}.input"))?;
                unexpected(t.outputs.is_some(), &format!("{path}.outputs"))?;
                let ins = term_field(ctx, &t.inputs, &path, "inputs")?;
                check_arity(ctx, &path, t.arity, ins.len())?;
                let (letters, elem) =
                    split_element(ctx, algebra.basis(), &basis, side, ins, &format!("{path}.inputs"))?;
                let out = term_field(ctx, &t.output, &path, "output")?;
                terms.push((letters, elem, label(ctx, &basis, out, format!("{path}.output"))?));
            }
            let m = AInfModule::new(side, basis, &algebra, terms).map_err(|e| ctx.structure("terms", e))?;
            m.check_grading(&algebra).map_err(|e| ctx.structure("terms", e))?;
            ctx.failed(verify_module_relations(
                &algebra,
                &m,
                module_relation_bound(&algebra, m.max_arity()),
            ))?;
            Ok(Presentation::Module { algebra, module: m })
        }
        Kind::Comodule => {
            unexpected(doc.algebra.is_some(), "algebra")?;
            unexpected(doc.augmentation.is_some(), "augmentation")?;
            unexpected(doc.coaugmentation.is_some(), "coaugmentation")?;
            let side = *term_field(ctx, &doc.side, "side", "side")?;
            let r = term_field(ctx, &doc.coalgebra, "coalgebra", "coalgebra")?;
            let Presentation::Coalgebra(coalgebra) = resolve(ctx, r, "coalgebra", Kind::Coalgebra)? else {
                unreachable!()
            };
            let mut terms = Vec::new();
            for (i, t) in doc.terms.iter().enumerate() {
                let path = format!("terms[{i}]");
                unexpected(t.inputs.is_some(), &format!("{path}.inputs"))?;
                unexpected(t.output.is_some(), &format!("{path}.output"))?;
                let input = term_field(ctx, &t.input, &path, "input")?;
                let outs = term_field(ctx, &t.outputs, &path, "outputs")?;
                check_arity(ctx, &path, t.arity, outs.len())?;
                let (letters, out) =
                    split_element(ctx, coalgebra.basis(), &basis, side, outs, &format!("{path}.outputs"))?;
                terms.push((label(ctx, &basis, input, format!("{path}.input"))?, letters, out));
            }
            let n = AInfComodule::new(side, basis, &coalgebra, terms).map_err(|e| ctx.structure("terms", e))?;
            n.check_grading(&coalgebra).map_err(|e| ctx.structure("terms", e))?;
            ctx.failed(verify_comodule_relations(&coalgebra, &n))?;
            Ok(Presentation::Comodule { coalgebra, comodule: n })
        }
    }
}

fn syntax(source: &str, e: serde_json::Error) -> Diagnostic {
    Diagnostic {
        source: source.to_string(),
        location: Location::Position {
            line: e.line(),
            column: e.column(),
        },
        message: e.to_string(),
        witness: None,
    }
}

/// Parses and verifies a document. Relative references resolve against `base`.
pub fn parse_str(text: &str, source: &str, base: Option<&Path>) -> Result<Presentation, Diagnostic> {
    parse_nested(text, source, base, 0, true)
}

fn parse_nested(
    text: &str,
    source: &str,
    base: Option<&Path>,
    depth: usize,
    checked: bool,
) -> Result<Presentation, Diagnostic> {
    let doc: PresentationFile = serde_json::from_str(text).map_err(|e| syntax(source, e))?;
    build(&Ctx { source, base, depth, checked }, &doc)
}

fn load_nested(path: &Path, depth: usize, checked: bool) -> Result<Presentation, Diagnostic> {
    let source = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Diagnostic {
        source: source.clone(),
        location: Location::Document,
        message: format!("cannot read: {e}"),
        witness: None,
    })?;
    parse_nested(&text, &source, path.parent(), depth, checked)
}

/// Reads, parses and verifies a presentation file.
pub fn load(path: impl AsRef<Path>) -> Result<Presentation, Diagnostic> {
    load_nested(path.as_ref(), 0, true)
}

/// Like [`load`] but skips the relation checks, so that a structure failing
/// them can still be inspected. Syntax, names, arities and gradings are checked.
pub fn load_unchecked(path: impl AsRef<Path>) -> Result<Presentation, Diagnostic> {
    load_nested(path.as_ref(), 0, false)
}

fn entries(b: &Basis) -> Vec<BasisEntry> {
    b.labels()
        .map(|l| match b.degree(l) {
            0 => BasisEntry::Name(b.name(l).to_string()),
            d => BasisEntry::Graded {
                name: b.name(l).to_string(),
                degree: d,
            },
        })
        .collect()
}

fn names(b: &Basis, ls: &[Label]) -> Vec<String> {
    ls.iter().map(|&l| b.name(l).to_string()).collect()
}

fn placed(letters: Vec<String>, elem: String, side: Side) -> Vec<String> {
    match side {
        Side::Left => letters.into_iter().chain([elem]).collect(),
        Side::Right => [elem].into_iter().chain(letters).collect(),
    }
}

fn blank(kind: Kind, basis: &Basis) -> PresentationFile {
    PresentationFile {
        kind,
        name: None,
        side: None,
        algebra: None,
        coalgebra: None,
        basis: entries(basis),
        augmentation: None,
        coaugmentation: None,
        terms: Vec::new(),
    }
}

/// The document describing `p`, with any base structure inlined.
pub fn to_file(p: &Presentation) -> PresentationFile {
    match p {
        Presentation::Algebra(a) => {
            let b = a.basis();
            let mut f = blank(Kind::Algebra, b);
            f.augmentation = a.augmentation().map(|s| s.iter().map(|&l| b.name(l).to_string()).collect());
            f.terms = a
                .terms()
                .into_iter()
                .map(|(ins, out)| Term {
                    arity: ins.len(),
                    inputs: Some(names(b, &ins)),
                    output: Some(b.name(out).to_string()),
                    input: None,
                    outputs: None,
                })
                .collect();
            f
        }
        Presentation::Coalgebra(c) => {
            let b = c.basis();
            let mut f = blank(Kind::Coalgebra, b);
            f.coaugmentation = c.epsilon_star().map(|s| s.iter().map(|&l| b.name(l).to_string()).collect());
            f.terms = c
                .terms()
                .into_iter()
                .map(|(input, outs)| Term {
                    arity: outs.len(),
                    inputs: None,
                    output: None,
                    input: Some(b.name(input).to_string()),
                    outputs: Some(names(b, &outs)),
                })
                .collect();
            f
        }
        Presentation::Module { algebra, module } => {
            let (ab, mb) = (algebra.basis(), module.basis());
            let mut f = blank(Kind::Module, mb);
            f.side = Some(module.side());
            f.algebra = Some(Reference::Inline(Box::new(to_file(&Presentation::Algebra(algebra.clone())))));
            f.terms = module
                .terms()
                .into_iter()
                .map(|(letters, elem, out)| Term {
                    arity: letters.len() + 1,
                    inputs: Some(placed(names(ab, &letters), mb.name(elem).to_string(), module.side())),
                    output: Some(mb.name(out).to_string()),
                    input: None,
                    outputs: None,
                })
                .collect();
            f
        }
        Presentation::Comodule { coalgebra, comodule } => {
            let (cb, nb) = (coalgebra.basis(), comodule.basis());
            let mut f = blank(Kind::Comodule, nb);
            f.side = Some(comodule.side());
            f.coalgebra = Some(Reference::Inline(Box::new(to_file(&Presentation::Coalgebra(coalgebra.clone())))));
            f.terms = comodule
                .terms()
                .into_iter()
                .map(|(input, letters, out)| Term {
                    arity: letters.len() + 1,
                    inputs: None,
                    output: None,
                    input: Some(nb.name(input).to_string()),
                    outputs: Some(placed(names(cb, &letters), nb.name(out).to_string(), comodule.side())),
                })
                .collect();
            f
        }
    }
}

/// Pretty JSON for `p`; parsing it gives back `p`.
pub fn dump(p: &Presentation) -> String {
    let mut s = serde_json::to_string_pretty(&to_file(p)).expect("presentation serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2: &str = r#"{
  "kind": "algebra",
  "basis": ["e", "g"],
  "augmentation": ["e", "g"],
  "terms": [
    {"arity": 2, "inputs": ["e", "e"], "output": "e"},
    {"arity": 2, "inputs": ["e", "g"], "output": "g"},
    {"arity": 2, "inputs": ["g", "e"], "output": "g"},
    {"arity": 2, "inputs": ["g", "g"], "output": "e"}
  ]
}"#;

    #[test]
    fn parses_z2() {
        let p = parse_str(Z2, "z2", None).unwrap();
        assert_eq!(p, Presentation::Algebra(crate::ainfty::cyclic_group(2).unwrap()));
    }

    #[test]
    fn syntax_error_has_position() {
        let d = parse_str("{\n  \"kind\": \"algebra\",\n  oops\n}", "x", None).unwrap_err();
        assert_eq!(d.location, Location::Position { line: 3, column: 3 });
    }

    #[test]
    fn unknown_label_has_field() {
        let bad = Z2.replace(r#"["g", "g"], "output": "e""#, r#"["g", "h"], "output": "e""#);
        let d = parse_str(&bad, "x", None).unwrap_err();
        assert_eq!(d.location, Location::Field("terms[3].inputs[1]".into()));
    }

    #[test]
    fn arity_mismatch() {
        let bad = Z2.replacen(r#"{"arity": 2, "inputs": ["e", "e"]"#, r#"{"arity": 3, "inputs": ["e", "e"]"#, 1);
        let d = parse_str(&bad, "x", None).unwrap_err();
        assert_eq!(d.location, Location::Field("terms[0].arity".into()));
    }
}
