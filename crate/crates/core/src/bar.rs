//! Bar and cobar constructions, the Borel complex `B(k, A, M)` and the
//! co-Borel complex `Ω(k, A*, M)`, truncated to finitely many letters.
//!
//! The bar complex keeps words with at most `k_max` letters, which is a
//! subcomplex since no term of the differential adds letters. The cobar
//! complex keeps words with at most `l_max` letters and drops longer terms,
//! which makes it a quotient. Each construction stamps the range of degrees
//! whose homology is unaffected by the cut.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::ainfty::{
    algebra_relation_bound, module_relation_bound, verify_algebra_relations, verify_augmentation, verify_coalgebra_relations,
    verify_comodule_relations, verify_module_relations, AInfAlgebra, AInfCoalgebra, AInfComodule, AInfModule, Basis,
    Label, Side, StructureError,
};
use crate::f2::{ChainComplex, DegreeRange, F2Error, SparseF2Matrix};
use crate::F2Sum;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Complex(#[from] F2Error),
    #[error("invalid truncation: {0}")]
    Truncation(String),
    #[error("differential is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("truncation is not closed under the differential: {0}")]
    NotClosed(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

/// Maximal numbers of bar letters and cobar letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TruncationPolicy {
    pub k_max: usize,
    pub l_max: usize,
}

impl TruncationPolicy {
    pub fn new(k_max: usize, l_max: usize) -> Result<Self, ConstructionError> {
        if k_max == 0 || l_max == 0 {
            return Err(ConstructionError::Truncation(format!(
                "k_max and l_max must be at least 1 (got {k_max}, {l_max})"
            )));
        }
        Ok(TruncationPolicy { k_max, l_max })
    }
}

/// `m ⊗ (a_1,…,a_k) ⊗ n` in `B(M, A, N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarWord {
    pub left: Label,
    pub letters: Vec<Label>,
    pub right: Label,
}

/// `m ⊗ (c_1,…,c_l) ⊗ n` in `Ω(M, C, N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CobarWord {
    pub left: Label,
    pub letters: Vec<Label>,
    pub right: Label,
}

fn word_cmp(a: (&[Label], Label, Label), b: (&[Label], Label, Label)) -> Ordering {
    a.0.len()
        .cmp(&b.0.len())
        .then_with(|| a.0.cmp(b.0))
        .then_with(|| (a.1, a.2).cmp(&(b.1, b.2)))
}

impl Ord for BarWord {
    fn cmp(&self, o: &Self) -> Ordering {
        word_cmp((&self.letters, self.left, self.right), (&o.letters, o.left, o.right))
    }
}

impl PartialOrd for BarWord {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for CobarWord {
    fn cmp(&self, o: &Self) -> Ordering {
        word_cmp((&self.letters, self.left, self.right), (&o.letters, o.left, o.right))
    }
}

impl PartialOrd for CobarWord {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// A truncated complex whose basis consists of words.
#[derive(Clone, Debug)]
pub struct WordComplex<W> {
    complex: Arc<ChainComplex>,
    words: BTreeMap<i64, Vec<W>>,
    index: HashMap<W, (i64, usize)>,
}

impl<W: Clone + Ord + Hash + Debug> WordComplex<W> {
    /// Builds the complex spanned by `words`. Differential terms failing
    /// `kept` are dropped (the quotient direction); every other term must be
    /// one of the words, one degree lower.
    pub(crate) fn assemble(
        words: Vec<W>,
        degree: impl Fn(&W) -> i64,
        label: impl Fn(&W) -> String,
        differential: impl Fn(&W) -> F2Sum<W>,
        kept: impl Fn(&W) -> bool,
        trusted: DegreeRange,
    ) -> Result<Self, ConstructionError> {
        let mut by_degree: BTreeMap<i64, Vec<W>> = BTreeMap::new();
        for w in words {
            by_degree.entry(degree(&w)).or_default().push(w);
        }
        for ws in by_degree.values_mut() {
            ws.sort();
            ws.dedup();
        }
        let mut index = HashMap::new();
        for (&d, ws) in &by_degree {
            for (i, w) in ws.iter().enumerate() {
                index.insert(w.clone(), (d, i));
            }
        }
        let (lo, hi) = match (by_degree.keys().next(), by_degree.keys().next_back()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => (0, 0),
        };
        let mut labels = Vec::new();
        let mut boundaries = Vec::new();
        let empty = Vec::new();
        for d in lo..=hi {
            let ws = by_degree.get(&d).unwrap_or(&empty);
            labels.push(ws.iter().map(&label).collect());
            let rows = if d == lo { 0 } else { by_degree.get(&(d - 1)).map_or(0, Vec::len) };
            let mut cols = Vec::with_capacity(ws.len());
            for w in ws {
                let mut col = Vec::new();
                for t in differential(w).iter() {
                    if !kept(t) {
                        continue;
                    }
                    match index.get(t) {
                        Some(&(dt, i)) if dt == d - 1 => col.push(i as u32),
                        Some(&(dt, _)) => {
                            return Err(ConstructionError::Inhomogeneous(format!(
                                "{} in degree {d} has the term {} in degree {dt}",
                                label(w),
                                label(t)
                            )))
                        }
                        None => {
                            return Err(ConstructionError::NotClosed(format!(
                                "{} has the term {} outside the truncation",
                                label(w),
                                label(t)
                            )))
                        }
                    }
                }
                cols.push(col);
            }
            boundaries.push(SparseF2Matrix::from_columns(rows, ws.len(), cols));
        }
        let complex = Arc::new(ChainComplex::new(lo, labels, boundaries, trusted)?);
        Ok(WordComplex {
            complex,
            words: by_degree,
            index,
        })
    }

    pub fn complex(&self) -> &Arc<ChainComplex> {
        &self.complex
    }

    pub fn words(&self, d: i64) -> &[W] {
        self.words.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn all_words(&self) -> impl Iterator<Item = (i64, &W)> {
        self.words.iter().flat_map(|(&d, ws)| ws.iter().map(move |w| (d, w)))
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// Degree and position of a basis word.
    pub fn locate(&self, w: &W) -> Option<(i64, usize)> {
        self.index.get(w).copied()
    }

    /// Matrix of a linear map from degree `d` of this complex to degree
    /// `d + shift` of `target`, given on basis words.
    pub fn map_matrix<V: Clone + Ord + Hash + Debug>(
        &self,
        target: &WordComplex<V>,
        d: i64,
        shift: i64,
        f: impl Fn(&W) -> F2Sum<V>,
    ) -> Result<SparseF2Matrix, ConstructionError> {
        let ws = self.words(d);
        let rows = target.words(d + shift).len();
        let mut cols = Vec::with_capacity(ws.len());
        for w in ws {
            let mut col = Vec::new();
            for t in f(w).iter() {
                match target.locate(t) {
                    Some((dt, i)) if dt == d + shift => col.push(i as u32),
                    Some((dt, _)) => {
                        return Err(ConstructionError::Inhomogeneous(format!(
                            "{w:?} in degree {d} maps to {t:?} in degree {dt}"
                        )))
                    }
                    None => {
                        return Err(ConstructionError::NotClosed(format!(
                            "{w:?} maps to {t:?}, which is not a basis word of the target"
                        )))
                    }
                }
            }
            cols.push(col);
        }
        Ok(SparseF2Matrix::from_columns(rows, ws.len(), cols))
    }
}

pub type BarComplex = WordComplex<BarWord>;
pub type CobarComplex = WordComplex<CobarWord>;

fn splice(w: &[Label], i: usize, j: usize, mid: &[Label]) -> Vec<Label> {
    let mut v = Vec::with_capacity(w.len() + mid.len() - j);
    v.extend_from_slice(&w[..i]);
    v.extend_from_slice(mid);
    v.extend_from_slice(&w[i + j..]);
    v
}

fn render(b: &Basis, w: &[Label]) -> String {
    w.iter().map(|&l| b.name(l)).collect::<Vec<_>>().join(",")
}

/// All words of length at most `max` over a basis of size `n`, shortest first.
pub(crate) fn words_up_to(n: usize, max: usize) -> Vec<Vec<Label>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max {
        let mut next = Vec::with_capacity(layer.len() * n);
        for w in &layer {
            for x in 0..n as Label {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub(crate) fn ensure_algebra(a: &AInfAlgebra) -> Result<(), ConstructionError> {
    a.check_grading()?;
    verify_algebra_relations(a, algebra_relation_bound(a)).into_result()?;
    verify_augmentation(a).into_result()?;
    if a.basis().min_degree().is_some_and(|d| d < 0) {
        return Err(ConstructionError::Unsupported(
            "truncation bounds need every algebra degree to be nonnegative".into(),
        ));
    }
    Ok(())
}

pub(crate) fn ensure_module(a: &AInfAlgebra, m: &AInfModule, side: Side) -> Result<(), ConstructionError> {
    if m.side() != side {
        return Err(StructureError::SideMismatch(format!("expected a {} module", side.as_str())).into());
    }
    m.check_grading(a)?;
    verify_module_relations(a, m, module_relation_bound(a, m.max_arity())).into_result()?;
    Ok(())
}

/// `B(M, A, N)` for a right module `M` and a left module `N`.
#[derive(Clone, Copy, Debug)]
pub struct BarData<'a> {
    pub left: &'a AInfModule,
    pub algebra: &'a AInfAlgebra,
    pub right: &'a AInfModule,
}

impl<'a> BarData<'a> {
    /// Checks sides, gradings and all relations of the inputs.
    pub fn new(left: &'a AInfModule, algebra: &'a AInfAlgebra, right: &'a AInfModule) -> Result<Self, ConstructionError> {
        ensure_algebra(algebra)?;
        ensure_module(algebra, left, Side::Right)?;
        ensure_module(algebra, right, Side::Left)?;
        Ok(BarData { left, algebra, right })
    }

    pub fn degree(&self, w: &BarWord) -> i64 {
        let a = self.algebra.basis();
        self.left.basis().degree(w.left)
            + w.letters.iter().map(|&x| a.degree(x) + 1).sum::<i64>()
            + self.right.basis().degree(w.right)
    }

    pub fn label(&self, w: &BarWord) -> String {
        format!(
            "{}|{}|{}",
            self.left.basis().name(w.left),
            render(self.algebra.basis(), &w.letters),
            self.right.basis().name(w.right)
        )
    }

    /// Sum over every way of applying one structure map to a consecutive run:
    /// the left module with a leading run, the algebra inside, or the right
    /// module with a trailing run.
    pub fn differential(&self, w: &BarWord) -> F2Sum<BarWord> {
        let a = &w.letters;
        let k = a.len();
        let mut acc = F2Sum::new();
        for j in 0..=k {
            if let Some(outs) = self.left.act(&a[..j], w.left) {
                for &m in outs {
                    acc.add(BarWord {
                        left: m,
                        letters: a[j..].to_vec(),
                        right: w.right,
                    });
                }
            }
            if let Some(outs) = self.right.act(&a[k - j..], w.right) {
                for &n in outs {
                    acc.add(BarWord {
                        left: w.left,
                        letters: a[..k - j].to_vec(),
                        right: n,
                    });
                }
            }
        }
        for j in 1..=k {
            for i in 0..=k - j {
                if let Some(outs) = self.algebra.mu(&a[i..i + j]) {
                    for &o in outs {
                        acc.add(BarWord {
                            left: w.left,
                            letters: splice(a, i, j, &[o]),
                            right: w.right,
                        });
                    }
                }
            }
        }
        acc
    }

    /// Degrees whose homology is unaffected by dropping words with more than
    /// `k_max` letters: those words sit in degree at least
    /// `(k_max + 1)(min|a| + 1) + min|m| + min|n|`.
    pub fn trusted_range(&self, k_max: usize) -> DegreeRange {
        let (Some(bmin), Some(l), Some(r)) = (
            self.algebra.basis().min_degree(),
            self.left.basis().min_degree(),
            self.right.basis().min_degree(),
        ) else {
            return DegreeRange::ALL;
        };
        let excluded = (k_max as i64 + 1) * (bmin + 1) + l + r;
        DegreeRange::new(i64::MIN, excluded - 2)
    }

    pub fn words(&self, k_max: usize) -> Vec<BarWord> {
        let mut out = Vec::new();
        for letters in words_up_to(self.algebra.basis().len(), k_max) {
            for left in self.left.basis().labels() {
                for right in self.right.basis().labels() {
                    out.push(BarWord {
                        left,
                        letters: letters.clone(),
                        right,
                    });
                }
            }
        }
        out
    }

    pub fn complex(&self, k_max: usize) -> Result<BarComplex, ConstructionError> {
        WordComplex::assemble(
            self.words(k_max),
            |w| self.degree(w),
            |w| self.label(w),
            |w| self.differential(w),
            |_| true,
            self.trusted_range(k_max),
        )
    }
}

pub fn bar_complex(
    m: &AInfModule,
    a: &AInfAlgebra,
    n: &AInfModule,
    t: &TruncationPolicy,
) -> Result<BarComplex, ConstructionError> {
    BarData::new(m, a, n)?.complex(t.k_max)
}

/// The Borel complex `B(k, A, M)` with `k` the augmentation module.
pub fn borel(a: &AInfAlgebra, m: &AInfModule, t: &TruncationPolicy) -> Result<BarComplex, ConstructionError> {
    let k = AInfModule::trivial(a, Side::Right)?;
    BarData::new(&k, a, m)?.complex(t.k_max)
}

/// All splittings `(m, a_1..a_i, 1) ⊗ (1, a_{i+1}..a_k, n)`, the ground
/// field's basis element having label 0.
pub fn bar_coproduct(w: &BarWord) -> Vec<(BarWord, BarWord)> {
    (0..=w.letters.len())
        .map(|i| {
            (
                BarWord {
                    left: w.left,
                    letters: w.letters[..i].to_vec(),
                    right: 0,
                },
                BarWord {
                    left: 0,
                    letters: w.letters[i..].to_vec(),
                    right: w.right,
                },
            )
        })
        .collect()
}

/// `Δ∂w + (∂ ⊗ 1 + 1 ⊗ ∂)Δw`, which vanishes when the coproduct is a chain
/// map. `left` must be `B(M, A, k)` and `right` must be `B(k, A, N)`.
pub fn coproduct_chain_defect(
    full: &BarData,
    left: &BarData,
    right: &BarData,
    w: &BarWord,
) -> F2Sum<(BarWord, BarWord)> {
    let mut acc = F2Sum::new();
    for t in full.differential(w).iter() {
        for p in bar_coproduct(t) {
            acc.add(p);
        }
    }
    for (x, y) in bar_coproduct(w) {
        for dx in left.differential(&x) {
            acc.add((dx, y.clone()));
        }
        for dy in right.differential(&y) {
            acc.add((x.clone(), dy));
        }
    }
    acc
}

/// `Ω(M, C, N)` for a right comodule `M` and a left comodule `N`.
#[derive(Clone, Copy, Debug)]
pub struct CobarData<'a> {
    pub left: &'a AInfComodule,
    pub coalgebra: &'a AInfCoalgebra,
    pub right: &'a AInfComodule,
}

impl<'a> CobarData<'a> {
    pub fn new(
        left: &'a AInfComodule,
        coalgebra: &'a AInfCoalgebra,
        right: &'a AInfComodule,
    ) -> Result<Self, ConstructionError> {
        if left.side() != Side::Right || right.side() != Side::Left {
            return Err(StructureError::SideMismatch("cobar needs a right comodule on the left and a left comodule on the right".into()).into());
        }
        coalgebra.check_grading()?;
        left.check_grading(coalgebra)?;
        right.check_grading(coalgebra)?;
        verify_coalgebra_relations(coalgebra).into_result()?;
        verify_comodule_relations(coalgebra, left).into_result()?;
        verify_comodule_relations(coalgebra, right).into_result()?;
        if coalgebra.basis().max_degree().is_some_and(|d| d > 0) {
            return Err(ConstructionError::Unsupported(
                "truncation bounds need every coalgebra degree to be nonpositive".into(),
            ));
        }
        Ok(CobarData {
            left,
            coalgebra,
            right,
        })
    }

    pub fn degree(&self, w: &CobarWord) -> i64 {
        let c = self.coalgebra.basis();
        self.left.basis().degree(w.left)
            + w.letters.iter().map(|&x| c.degree(x) - 1).sum::<i64>()
            + self.right.basis().degree(w.right)
    }

    pub fn label(&self, w: &CobarWord) -> String {
        format!(
            "{}|{}|{}",
            self.left.basis().name(w.left),
            render(self.coalgebra.basis(), &w.letters),
            self.right.basis().name(w.right)
        )
    }

    /// The differential split as (coalgebra terms and left coaction, right coaction).
    pub fn differential_parts(&self, w: &CobarWord) -> (F2Sum<CobarWord>, F2Sum<CobarWord>) {
        let mut first = F2Sum::new();
        let mut second = F2Sum::new();
        if let Some(outs) = self.left.coact(w.left) {
            for (u, m) in outs {
                let mut letters = u.clone();
                letters.extend_from_slice(&w.letters);
                first.add(CobarWord {
                    left: *m,
                    letters,
                    right: w.right,
                });
            }
        }
        for q in 0..w.letters.len() {
            if let Some(outs) = self.coalgebra.delta(w.letters[q]) {
                for u in outs {
                    first.add(CobarWord {
                        left: w.left,
                        letters: splice(&w.letters, q, 1, u),
                        right: w.right,
                    });
                }
            }
        }
        if let Some(outs) = self.right.coact(w.right) {
            for (u, n) in outs {
                let mut letters = w.letters.clone();
                letters.extend_from_slice(u);
                second.add(CobarWord {
                    left: w.left,
                    letters,
                    right: *n,
                });
            }
        }
        (first, second)
    }

    pub fn differential(&self, w: &CobarWord) -> F2Sum<CobarWord> {
        let (mut a, b) = self.differential_parts(w);
        a.add_sum(b);
        a
    }

    /// Degrees whose homology is unaffected by dropping words with more than
    /// `l_max` letters: those words sit in degree at most
    /// `(l_max + 1)(max|c| - 1) + max|m| + max|n|`.
    pub fn trusted_range(&self, l_max: usize) -> DegreeRange {
        let (Some(cmax), Some(l), Some(r)) = (
            self.coalgebra.basis().max_degree(),
            self.left.basis().max_degree(),
            self.right.basis().max_degree(),
        ) else {
            return DegreeRange::ALL;
        };
        let excluded = (l_max as i64 + 1) * (cmax - 1) + l + r;
        DegreeRange::new(excluded + 2, i64::MAX)
    }

    pub fn words(&self, l_max: usize) -> Vec<CobarWord> {
        let mut out = Vec::new();
        for letters in words_up_to(self.coalgebra.basis().len(), l_max) {
            for left in self.left.basis().labels() {
                for right in self.right.basis().labels() {
                    out.push(CobarWord {
                        left,
                        letters: letters.clone(),
                        right,
                    });
                }
            }
        }
        out
    }

    pub fn complex(&self, l_max: usize) -> Result<CobarComplex, ConstructionError> {
        WordComplex::assemble(
            self.words(l_max),
            |w| self.degree(w),
            |w| self.label(w),
            |w| self.differential(w),
            |w| w.letters.len() <= l_max,
            self.trusted_range(l_max),
        )
    }
}

pub fn cobar_complex(
    m: &AInfComodule,
    c: &AInfCoalgebra,
    n: &AInfComodule,
    t: &TruncationPolicy,
) -> Result<CobarComplex, ConstructionError> {
    CobarData::new(m, c, n)?.complex(t.l_max)
}

/// Owned inputs of the co-Borel complex `Ω(k, A*, M)`: the dual coalgebra,
/// the trivial right comodule (coaction `1 ↦ 1 ⊗ ε*`) and `M` as a comodule.
#[derive(Clone, Debug)]
pub struct CoborelInput {
    pub coalgebra: AInfCoalgebra,
    pub ground: AInfComodule,
    pub module: AInfComodule,
}

impl CoborelInput {
    pub fn new(a: &AInfAlgebra, m: &AInfModule) -> Result<Self, ConstructionError> {
        ensure_algebra(a)?;
        ensure_module(a, m, Side::Left)?;
        let coalgebra = crate::ainfty::dualize_algebra(a);
        let ground = AInfComodule::trivial(&coalgebra, Side::Right)?;
        let module = crate::ainfty::module_to_comodule(a, m);
        Ok(CoborelInput {
            coalgebra,
            ground,
            module,
        })
    }

    pub fn data(&self) -> Result<CobarData<'_>, ConstructionError> {
        CobarData::new(&self.ground, &self.coalgebra, &self.module)
    }
}

pub fn coborel(a: &AInfAlgebra, m: &AInfModule, t: &TruncationPolicy) -> Result<CobarComplex, ConstructionError> {
    CoborelInput::new(a, m)?.data()?.complex(t.l_max)
}

/// The dga `ΩC = Ω(k, C, k)`: both ends are trivial comodules, so the
/// differential prepends and appends `ε*` besides expanding letters.
#[derive(Clone, Debug)]
pub struct CobarAlgebra {
    pub coalgebra: AInfCoalgebra,
    pub right_ground: AInfComodule,
    pub left_ground: AInfComodule,
}

impl CobarAlgebra {
    pub fn new(c: &AInfCoalgebra) -> Result<Self, ConstructionError> {
        Ok(CobarAlgebra {
            coalgebra: c.clone(),
            right_ground: AInfComodule::trivial(c, Side::Right)?,
            left_ground: AInfComodule::trivial(c, Side::Left)?,
        })
    }

    pub fn data(&self) -> Result<CobarData<'_>, ConstructionError> {
        CobarData::new(&self.right_ground, &self.coalgebra, &self.left_ground)
    }
}

/// Left action of `ΩC` on a word whose left end is the ground field:
/// prepends the letters of `x`.
pub fn omega_action(x: &[Label], w: &CobarWord) -> CobarWord {
    let mut letters = x.to_vec();
    letters.extend_from_slice(&w.letters);
    CobarWord {
        left: w.left,
        letters,
        right: w.right,
    }
}

/// `∂(x·w) + (∂x)·w + x·(∂w)` for `x` in `ΩC` and `w` in a cobar complex
/// with ground left end.
pub fn leibniz_defect(omega: &CobarData, target: &CobarData, x: &[Label], w: &CobarWord) -> F2Sum<CobarWord> {
    let mut acc = target.differential(&omega_action(x, w));
    let xw = CobarWord {
        left: 0,
        letters: x.to_vec(),
        right: 0,
    };
    for dx in omega.differential(&xw) {
        acc.add(omega_action(&dx.letters, w));
    }
    for dw in target.differential(w) {
        acc.add(omega_action(x, &dw));
    }
    acc
}

/// Result of comparing the boundary of a cobar complex with the transposed
/// boundary of a bar complex.
#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub entries_compared: usize,
    pub mismatches: Vec<String>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.entries_compared > 0
    }
}

/// Checks that the boundary of `Ω(N*, A*, M*)` is the transpose of the
/// boundary of `B(M, A, N)` under `(m, a_1..a_k, n) ↔ (n*, a_k*..a_1*, m*)`.
pub fn check_bar_cobar_duality(bar: &BarComplex, cobar: &CobarComplex) -> DualityReport {
    let to_cobar = |w: &BarWord| CobarWord {
        left: w.right,
        letters: w.letters.iter().rev().copied().collect(),
        right: w.left,
    };
    let mut report = DualityReport {
        entries_compared: 0,
        mismatches: Vec::new(),
    };
    if bar.len() != cobar.len() {
        report
            .mismatches
            .push(format!("{} bar words but {} cobar words", bar.len(), cobar.len()));
        return report;
    }
    let bc = bar.complex();
    let cc = cobar.complex();
    for (d, w) in bar.all_words() {
        let Some((cd, _)) = cobar.locate(&to_cobar(w)) else {
            report.mismatches.push(format!("{w:?} has no dual word"));
            continue;
        };
        if cd != -d {
            report.mismatches.push(format!("{w:?} in degree {d} pairs with degree {cd}"));
        }
    }
    for d in bc.min_degree()..=bc.max_degree() {
        let b = bc.boundary(d);
        // Cobar boundary out of degree 1 - d, re-indexed into bar bases.
        let c = cc.boundary(1 - d);
        let src = bar.words(d - 1);
        let tgt = bar.words(d);
        for (j, v) in src.iter().enumerate() {
            let (_, cj) = cobar.locate(&to_cobar(v)).unwrap_or((0, usize::MAX));
            for (i, u) in tgt.iter().enumerate() {
                let (_, ci) = cobar.locate(&to_cobar(u)).unwrap_or((0, usize::MAX));
                if cj == usize::MAX || ci == usize::MAX {
                    continue;
                }
                report.entries_compared += 1;
                if b.get(j, i) != c.get(ci, cj) {
                    report.mismatches.push(format!("entry ({v:?}, {u:?}) in degree {d}"));
                }
            }
        }
    }
    report
}
