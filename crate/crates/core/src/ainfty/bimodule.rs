use std::collections::BTreeMap;

use serde::Serialize;

use super::{AInfAlgebra, AInfComodule, AInfModule, Basis, Label, Side, StructureError};
use crate::F2Sum;

/// What acts on one side of a bimodule. Algebra sides consume letters,
/// coalgebra sides emit them, ground sides do neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SideType {
    Ground,
    Algebra,
    Coalgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BimoduleKind {
    /// `μ^{k1|1|k2}`
    AA,
    /// `δ^{l1|1|l2}`
    CC,
    /// `ν^{k1|1|l2}`: algebra on the left, coalgebra on the right
    AC,
    /// `χ^{l1|1|k2}`: coalgebra on the left, algebra on the right
    CA,
}

/// Emitted left letters, output element, emitted right letters.
pub type BiOutput = (Vec<Label>, Label, Vec<Label>);

type OpTable = BTreeMap<Label, BTreeMap<(Vec<Label>, Vec<Label>), F2Sum<BiOutput>>>;

/// Uniform model for all module-like structures: an operation consumes
/// algebra letters on algebra sides and emits coalgebra letters on coalgebra
/// sides, always written in order around the element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfBimodule {
    left: SideType,
    right: SideType,
    basis: Basis,
    ops: OpTable,
}

fn reversed(w: &[Label]) -> Vec<Label> {
    w.iter().rev().copied().collect()
}

impl AInfBimodule {
    /// Terms are `(consumed_left, element, consumed_right, output)`.
    pub fn new(
        left: SideType,
        right: SideType,
        basis: Basis,
        terms: impl IntoIterator<Item = (Vec<Label>, Label, Vec<Label>, BiOutput)>,
    ) -> Result<Self, StructureError> {
        let mut ops: OpTable = BTreeMap::new();
        for (l, m, r, out) in terms {
            let bad = |what: &str| StructureError::Invalid(format!("{what} on a {:?} side", left));
            if left != SideType::Algebra && !l.is_empty() {
                return Err(bad("consumed left letters"));
            }
            if left != SideType::Coalgebra && !out.0.is_empty() {
                return Err(bad("emitted left letters"));
            }
            if right != SideType::Algebra && !r.is_empty() {
                return Err(StructureError::Invalid(format!("consumed right letters on a {right:?} side")));
            }
            if right != SideType::Coalgebra && !out.2.is_empty() {
                return Err(StructureError::Invalid(format!("emitted right letters on a {right:?} side")));
            }
            if !basis.contains(m) || !basis.contains(out.1) {
                return Err(StructureError::UnknownLabel(format!("bimodule element outside a basis of size {}", basis.len())));
            }
            ops.entry(m).or_default().entry((l, r)).or_default().add(out);
        }
        for t in ops.values_mut() {
            t.retain(|_, v| !v.is_zero());
        }
        ops.retain(|_, t| !t.is_empty());
        Ok(AInfBimodule { left, right, basis, ops })
    }

    /// The algebra as a bimodule over itself, with either side optionally
    /// dualized into a coaction of the dual coalgebra.
    pub fn from_algebra(a: &AInfAlgebra, dualize_left: bool, dualize_right: bool) -> Self {
        let side = |d: bool| if d { SideType::Coalgebra } else { SideType::Algebra };
        let mut terms = Vec::new();
        for (inputs, out) in a.terms() {
            for p in 0..inputs.len() {
                let (l, r) = (&inputs[..p], &inputs[p + 1..]);
                let (cl, el) = if dualize_left { (vec![], reversed(l)) } else { (l.to_vec(), vec![]) };
                let (cr, er) = if dualize_right { (vec![], reversed(r)) } else { (r.to_vec(), vec![]) };
                terms.push((cl, inputs[p], cr, (el, out, er)));
            }
        }
        Self::new(side(dualize_left), side(dualize_right), a.basis().clone(), terms).expect("terms respect the sides")
    }

    pub fn from_module(m: &AInfModule) -> Self {
        let terms = m.terms().into_iter().map(|(letters, n, out)| match m.side() {
            Side::Left => (letters, n, vec![], (vec![], out, vec![])),
            Side::Right => (vec![], n, letters, (vec![], out, vec![])),
        });
        let (l, r) = match m.side() {
            Side::Left => (SideType::Algebra, SideType::Ground),
            Side::Right => (SideType::Ground, SideType::Algebra),
        };
        Self::new(l, r, m.basis().clone(), terms).expect("terms respect the sides")
    }

    pub fn from_comodule(c: &AInfComodule) -> Self {
        let terms = c.terms().into_iter().map(|(n, letters, out)| match c.side() {
            Side::Left => (vec![], n, vec![], (letters, out, vec![])),
            Side::Right => (vec![], n, vec![], (vec![], out, letters)),
        });
        let (l, r) = match c.side() {
            Side::Left => (SideType::Coalgebra, SideType::Ground),
            Side::Right => (SideType::Ground, SideType::Coalgebra),
        };
        Self::new(l, r, c.basis().clone(), terms).expect("terms respect the sides")
    }

    pub fn left(&self) -> SideType {
        self.left
    }

    pub fn right(&self) -> SideType {
        self.right
    }

    pub fn kind(&self) -> Option<BimoduleKind> {
        use SideType::*;
        match (self.left, self.right) {
            (Algebra, Algebra) => Some(BimoduleKind::AA),
            (Coalgebra, Coalgebra) => Some(BimoduleKind::CC),
            (Algebra, Coalgebra) => Some(BimoduleKind::AC),
            (Coalgebra, Algebra) => Some(BimoduleKind::CA),
            _ => None,
        }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn op(&self, left: &[Label], m: Label, right: &[Label]) -> Option<&F2Sum<BiOutput>> {
        self.ops.get(&m)?.get(&(left.to_vec(), right.to_vec()))
    }

    /// All operations on `m`, keyed by consumed `(left, right)` letters.
    pub fn ops_on(&self, m: Label) -> impl Iterator<Item = (&(Vec<Label>, Vec<Label>), &F2Sum<BiOutput>)> {
        self.ops.get(&m).into_iter().flat_map(|t| t.iter())
    }

    pub fn terms(&self) -> Vec<(Vec<Label>, Label, Vec<Label>, BiOutput)> {
        let mut v = Vec::new();
        for (&m, t) in &self.ops {
            for ((l, r), outs) in t {
                for o in outs {
                    v.push((l.clone(), m, r.clone(), o.clone()));
                }
            }
        }
        v
    }

    /// Returns a copy with one term toggled (added if absent, removed if present).
    pub fn toggled(&self, term: (Vec<Label>, Label, Vec<Label>, BiOutput)) -> Self {
        let mut out = self.clone();
        let (l, m, r, o) = term;
        out.ops.entry(m).or_default().entry((l, r)).or_default().add(o);
        for t in out.ops.values_mut() {
            t.retain(|_, v| !v.is_zero());
        }
        out.ops.retain(|_, t| !t.is_empty());
        out
    }
}
