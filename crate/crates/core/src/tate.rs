//! The dualizing bimodule `D(A)`, the twisted Borel complex, the norm map to
//! the co-Borel complex and the Tate complex `Cone(N)`.
//!
//! A twisted word `c_1…c_l | a_0 | a_1…a_k | m` lives in
//! `C^l ⊗ A ⊗ A^k ⊗ M` with `C = A*`. Its differential has five families:
//! prepending `ε*` (the trivial comodule at the left end), expanding a prefix
//! letter by `δ_C`, the coaction of `D(A)` on the slot consuming a leading run
//! of bar letters and appending letters after the prefix, `μ_A` inside the bar
//! letters, and `μ_M` consuming a trailing run together with the module slot.
//!
//! The norm sends `c⃗ | a_0 | a⃗ | m` to the sum over basis tuples `b⃗` of
//! `c⃗ (b_j*,…,b_1*) | μ_M(b⃗, a_0, a⃗, m)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::ainfty::{
    dualize_algebra, verify_bimodule_relations, AInfAlgebra, AInfBimodule, AInfCoalgebra,
    AInfModule, Label, RelationReport, Side, SideRef, StructureError,
};
use crate::bar::{
    coborel, ensure_algebra, ensure_module, words_up_to, CobarComplex, CobarData, CobarWord, ConstructionError,
    CoborelInput, TruncationPolicy, WordComplex,
};
use crate::f2::{cone, exactness_check, ChainMap, ConeSequence, DegreeRange, ExactnessReport};
use crate::F2Sum;

/// `D(A)`: the algebra as a bimodule with the dual coalgebra coacting on the
/// left and the algebra acting on the right,
/// `χ(a_0; a⃗) = Σ_{b⃗} (b_l*,…,b_1*) ⊗ μ(b⃗, a_0, a⃗)`.
pub fn dualizing_bimodule(a: &AInfAlgebra) -> AInfBimodule {
    AInfBimodule::from_algebra(a, true, false)
}

pub fn verify_dualizing_bimodule(a: &AInfAlgebra, k_check: usize) -> RelationReport {
    let c = dualize_algebra(a);
    verify_bimodule_relations(SideRef::Coalgebra(&c), SideRef::Algebra(a), &dualizing_bimodule(a), k_check)
        .expect("D(A) has a coalgebra on the left and an algebra on the right")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistedWord {
    pub prefix: Vec<Label>,
    pub slot: Label,
    pub letters: Vec<Label>,
    pub module: Label,
}

impl Ord for TwistedWord {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.prefix.len(), self.letters.len(), &self.prefix, self.slot, &self.letters, self.module).cmp(&(
            o.prefix.len(),
            o.letters.len(),
            &o.prefix,
            o.slot,
            &o.letters,
            o.module,
        ))
    }
}

impl PartialOrd for TwistedWord {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

pub type TwistedComplex = WordComplex<TwistedWord>;

/// Everything needed for the twisted Borel, co-Borel and Tate complexes of
/// one module.
#[derive(Clone, Debug)]
pub struct TateInput {
    pub algebra: AInfAlgebra,
    pub module: AInfModule,
    pub coalgebra: AInfCoalgebra,
    pub dualizing: AInfBimodule,
    pub coborel: CoborelInput,
}

fn splice(w: &[Label], i: usize, j: usize, mid: &[Label]) -> Vec<Label> {
    let mut v = Vec::with_capacity(w.len() + mid.len() - j);
    v.extend_from_slice(&w[..i]);
    v.extend_from_slice(mid);
    v.extend_from_slice(&w[i + j..]);
    v
}

impl TateInput {
    pub fn new(a: &AInfAlgebra, m: &AInfModule) -> Result<Self, ConstructionError> {
        ensure_algebra(a)?;
        ensure_module(a, m, Side::Left)?;
        if a.augmentation().is_none() {
            return Err(StructureError::MissingAugmentation.into());
        }
        Ok(TateInput {
            algebra: a.clone(),
            module: m.clone(),
            coalgebra: dualize_algebra(a),
            dualizing: dualizing_bimodule(a),
            coborel: CoborelInput::new(a, m)?,
        })
    }

    pub fn degree(&self, w: &TwistedWord) -> i64 {
        let a = self.algebra.basis();
        let c = self.coalgebra.basis();
        w.prefix.iter().map(|&x| c.degree(x) - 1).sum::<i64>()
            + a.degree(w.slot)
            + w.letters.iter().map(|&x| a.degree(x) + 1).sum::<i64>()
            + self.module.basis().degree(w.module)
    }

    pub fn label(&self, w: &TwistedWord) -> String {
        let a = self.algebra.basis();
        let c = self.coalgebra.basis();
        let join = |b: &crate::ainfty::Basis, v: &[Label]| v.iter().map(|&x| b.name(x)).collect::<Vec<_>>().join(",");
        format!(
            "{}|{}|{}|{}",
            join(c, &w.prefix),
            a.name(w.slot),
            join(a, &w.letters),
            self.module.basis().name(w.module)
        )
    }

    /// The five families of differential terms, in the order listed in the
    /// module documentation.
    pub fn differential_parts(&self, w: &TwistedWord) -> [F2Sum<TwistedWord>; 5] {
        let mut parts: [F2Sum<TwistedWord>; 5] = Default::default();
        let with = |prefix: Vec<Label>, slot: Label, letters: Vec<Label>, module: Label| TwistedWord {
            prefix,
            slot,
            letters,
            module,
        };
        for &e in self.coalgebra.epsilon_star().into_iter().flatten() {
            let mut p = vec![e];
            p.extend_from_slice(&w.prefix);
            parts[0].add(with(p, w.slot, w.letters.clone(), w.module));
        }
        for q in 0..w.prefix.len() {
            for u in self.coalgebra.delta(w.prefix[q]).into_iter().flatten() {
                parts[1].add(with(splice(&w.prefix, q, 1, u), w.slot, w.letters.clone(), w.module));
            }
        }
        let k = w.letters.len();
        for j in 0..=k {
            if let Some(outs) = self.dualizing.op(&[], w.slot, &w.letters[..j]) {
                for (u, out, _) in outs {
                    let mut p = w.prefix.clone();
                    p.extend_from_slice(u);
                    parts[2].add(with(p, *out, w.letters[j..].to_vec(), w.module));
                }
            }
            if let Some(outs) = self.module.act(&w.letters[k - j..], w.module) {
                for &n in outs {
                    parts[4].add(with(w.prefix.clone(), w.slot, w.letters[..k - j].to_vec(), n));
                }
            }
        }
        for j in 1..=k {
            for i in 0..=k - j {
                for &o in self.algebra.mu(&w.letters[i..i + j]).into_iter().flatten() {
                    parts[3].add(with(w.prefix.clone(), w.slot, splice(&w.letters, i, j, &[o]), w.module));
                }
            }
        }
        parts
    }

    pub fn differential(&self, w: &TwistedWord) -> F2Sum<TwistedWord> {
        let mut acc = F2Sum::new();
        for p in self.differential_parts(w) {
            acc.add_sum(p);
        }
        acc
    }

    pub fn words(&self, t: &TruncationPolicy) -> Vec<TwistedWord> {
        let na = self.algebra.basis().len();
        let prefixes = words_up_to(self.coalgebra.basis().len(), t.l_max);
        let bars = words_up_to(na, t.k_max);
        let mut out = Vec::with_capacity(prefixes.len() * na * bars.len() * self.module.basis().len());
        for p in &prefixes {
            for slot in 0..na as Label {
                for b in &bars {
                    for m in self.module.basis().labels() {
                        out.push(TwistedWord {
                            prefix: p.clone(),
                            slot,
                            letters: b.clone(),
                            module: m,
                        });
                    }
                }
            }
        }
        out
    }

    /// Lowest degree carrying homology of the column `Ω(k, A*, A)`, computed
    /// within its own trusted window. The column is assumed to have no
    /// homology below that window; when nothing is found inside it, the
    /// window's lower end is returned.
    pub fn column_floor(&self, l_max: usize) -> Result<i64, ConstructionError> {
        let regular = AInfModule::regular(&self.algebra, Side::Left);
        let col = coborel(&self.algebra, &regular, &TruncationPolicy::new(1, l_max)?)?;
        let c = col.complex();
        let window = c.trusted_stored();
        let h = c.homology_dims()?;
        Ok(h.iter().find(|(_, &n)| n > 0).map_or(window.lo, |(&d, _)| d))
    }

    /// Bar letters form a subcomplex direction and prefix letters a quotient
    /// direction. Dropped long prefixes sit in degree at most
    /// `(l_max + 1)(max|c| - 1) + max|a| + k_max·max(|a| + 1) + max|m|`;
    /// words with more than `k_max` bar letters have homology in degree at
    /// least `s_0 + (k_max + 1)·min(|a| + 1) + min|m|`, `s_0` being the floor
    /// of the column.
    pub fn trusted_range(&self, t: &TruncationPolicy) -> Result<DegreeRange, ConstructionError> {
        let a = self.algebra.basis();
        let m = self.module.basis();
        let (Some(amin), Some(amax), Some(cmax), Some(mmin), Some(mmax)) = (
            a.min_degree(),
            a.max_degree(),
            self.coalgebra.basis().max_degree(),
            m.min_degree(),
            m.max_degree(),
        ) else {
            return Ok(DegreeRange::ALL);
        };
        let (k, l) = (t.k_max as i64, t.l_max as i64);
        let lo = (l + 1) * (cmax - 1) + amax + k * (amax + 1) + mmax + 2;
        let s0 = self.column_floor(t.l_max)?;
        let hi = s0 + (k + 1) * (amin + 1) + mmin - 2;
        Ok(DegreeRange::new(lo, hi))
    }

    pub fn twisted_borel(&self, t: &TruncationPolicy) -> Result<TwistedComplex, ConstructionError> {
        let l_max = t.l_max;
        WordComplex::assemble(
            self.words(t),
            |w| self.degree(w),
            |w| self.label(w),
            |w| self.differential(w),
            |w| w.prefix.len() <= l_max,
            self.trusted_range(t)?,
        )
    }

    pub fn coborel_data(&self) -> Result<CobarData<'_>, ConstructionError> {
        self.coborel.data()
    }

    pub fn coborel(&self, t: &TruncationPolicy) -> Result<CobarComplex, ConstructionError> {
        self.coborel.data()?.complex(t.l_max)
    }

    /// Norm of one word, dropping terms with more than `l_max` letters.
    pub fn norm_of(&self, w: &TwistedWord, l_max: usize) -> F2Sum<CobarWord> {
        let mut acc = F2Sum::new();
        let k = w.letters.len();
        let Some(ops) = self.module.ops_on(w.module) else { return acc };
        for (letters, outs) in ops {
            if letters.len() < k + 1 {
                continue;
            }
            let j = letters.len() - k - 1;
            if letters[j] != w.slot || letters[j + 1..] != w.letters[..] || w.prefix.len() + j > l_max {
                continue;
            }
            let mut prefix = w.prefix.clone();
            prefix.extend(letters[..j].iter().rev());
            for &n in outs {
                acc.add(CobarWord {
                    left: 0,
                    letters: prefix.clone(),
                    right: n,
                });
            }
        }
        acc
    }

    pub fn norm(&self, twisted: &TwistedComplex, l_max: usize) -> NormMap {
        NormMap {
            l_max,
            terms: twisted.all_words().map(|(_, w)| (w.clone(), self.norm_of(w, l_max))).collect(),
        }
    }
}

/// The norm map stored word by word, so that individual terms can be edited.
#[derive(Clone, Debug)]
pub struct NormMap {
    pub l_max: usize,
    pub terms: BTreeMap<TwistedWord, F2Sum<CobarWord>>,
}

impl NormMap {
    pub fn apply(&self, w: &TwistedWord) -> F2Sum<CobarWord> {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Adds `t` to the image of `w`, removing it if already present.
    pub fn toggle(&mut self, w: &TwistedWord, t: CobarWord) {
        self.terms.entry(w.clone()).or_default().add(t);
    }

    pub fn chain_map(&self, source: &TwistedComplex, target: &CobarComplex) -> Result<ChainMap, ConstructionError> {
        let s = source.complex();
        let mut comps = BTreeMap::new();
        for d in s.min_degree()..=s.max_degree() {
            comps.insert(d, source.map_matrix(target, d, 0, |w| self.apply(w))?);
        }
        Ok(ChainMap::new(s.clone(), target.complex().clone(), 0, comps)?)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NormReport {
    pub words_checked: usize,
    pub equivariance_checked: usize,
    pub chain_map_failure: Option<String>,
    pub equivariance_failure: Option<String>,
}

impl NormReport {
    pub fn passed(&self) -> bool {
        self.chain_map_failure.is_none() && self.equivariance_failure.is_none()
    }
}

/// Checks `∂⁻ N = N ∂̃⁺` on every basis word of the truncated twisted Borel
/// complex, and `N(x·w) = x·N(w)` for every letter `x` and every word whose
/// prefix leaves room for it.
pub fn verify_norm(input: &TateInput, twisted: &TwistedComplex, norm: &NormMap) -> Result<NormReport, ConstructionError> {
    let l_max = norm.l_max;
    let cob = input.coborel_data()?;
    let keep = |s: F2Sum<CobarWord>| -> F2Sum<CobarWord> { s.into_iter().filter(|w| w.letters.len() <= l_max).collect() };
    let mut report = NormReport {
        words_checked: 0,
        equivariance_checked: 0,
        chain_map_failure: None,
        equivariance_failure: None,
    };
    for (_, w) in twisted.all_words() {
        let mut lhs = F2Sum::new();
        for t in norm.apply(w) {
            lhs.add_sum(cob.differential(&t));
        }
        let mut rhs = F2Sum::new();
        for s in input.differential(w) {
            if s.prefix.len() <= l_max {
                rhs.add_sum(norm.apply(&s));
            }
        }
        let mut diff = keep(lhs);
        diff.add_sum(keep(rhs));
        report.words_checked += 1;
        if !diff.is_zero() && report.chain_map_failure.is_none() {
            let shown: Vec<String> = diff.iter().take(4).map(|t| cob.label(t)).collect();
            report.chain_map_failure = Some(format!("{}: ∂N - N∂ = {}", input.label(w), shown.join(" + ")));
        }
        if w.prefix.len() < l_max {
            for x in input.coalgebra.basis().labels() {
                let mut xw = w.clone();
                xw.prefix.insert(0, x);
                let lhs = norm.apply(&xw);
                let rhs: F2Sum<CobarWord> = norm
                    .apply(w)
                    .into_iter()
                    .map(|mut t| {
                        t.letters.insert(0, x);
                        t
                    })
                    .collect();
                report.equivariance_checked += 1;
                if lhs != rhs && report.equivariance_failure.is_none() {
                    report.equivariance_failure = Some(format!(
                        "letter {} on {}",
                        input.coalgebra.basis().name(x),
                        input.label(w)
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// Left action of `ΩC` on twisted words: prepends letters to the prefix.
pub fn twisted_omega_action(x: &[Label], w: &TwistedWord) -> TwistedWord {
    let mut prefix = x.to_vec();
    prefix.extend_from_slice(&w.prefix);
    TwistedWord {
        prefix,
        ..w.clone()
    }
}

/// Checks exactness of the long sequence of `twisted → co-Borel → Tate` at
/// every node whose degrees are trusted.
pub fn les_check(norm: &ChainMap, seq: &ConeSequence) -> Result<ExactnessReport, ConstructionError> {
    let span = |c: &crate::f2::ChainComplex| DegreeRange::new(c.min_degree() - 1, c.max_degree() + 1);
    let all = [&norm.source, &norm.target, &seq.cone]
        .iter()
        .map(|c| span(c))
        .reduce(|a, b| DegreeRange::new(a.lo.min(b.lo), a.hi.max(b.hi)))
        .expect("three complexes");
    let mut report = exactness_check(norm, &seq.inclusion, all)?;
    report.extend(exactness_check(&seq.inclusion, &seq.projection, all)?);
    report.extend(exactness_check(&seq.projection, norm, all)?);
    Ok(report)
}

/// All pieces of the Tate computation for one module.
#[derive(Clone, Debug)]
pub struct TateComputation {
    pub twisted: TwistedComplex,
    pub coborel: CobarComplex,
    pub norm: NormMap,
    pub norm_report: NormReport,
    pub norm_map: ChainMap,
    pub sequence: ConeSequence,
    pub exactness: ExactnessReport,
}

impl TateComputation {
    pub fn tate(&self) -> &Arc<crate::f2::ChainComplex> {
        &self.sequence.cone
    }
}

#[derive(Debug, thiserror::Error)]
pub enum TateError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("the norm map fails its checks: {0}")]
    Norm(String),
}

impl From<crate::f2::F2Error> for TateError {
    fn from(e: crate::f2::F2Error) -> Self {
        TateError::Construction(e.into())
    }
}

/// Builds the three complexes and the norm, checks the norm, and forms the cone.
pub fn tate_complex(a: &AInfAlgebra, m: &AInfModule, t: &TruncationPolicy) -> Result<TateComputation, TateError> {
    let input = TateInput::new(a, m)?;
    let twisted = input.twisted_borel(t)?;
    let coborel = input.coborel(t)?;
    let norm = input.norm(&twisted, t.l_max);
    let norm_report = verify_norm(&input, &twisted, &norm)?;
    if !norm_report.passed() {
        let msg = norm_report
            .chain_map_failure
            .clone()
            .or(norm_report.equivariance_failure.clone())
            .unwrap_or_default();
        return Err(TateError::Norm(msg));
    }
    tate_from_parts(twisted, coborel, norm, norm_report)
}

/// Forms the cone of a given norm without checking it first.
pub fn tate_from_parts(
    twisted: TwistedComplex,
    coborel: CobarComplex,
    norm: NormMap,
    norm_report: NormReport,
) -> Result<TateComputation, TateError> {
    let norm_map = norm.chain_map(&twisted, &coborel)?;
    let sequence = cone(&norm_map)?;
    let exactness = les_check(&norm_map, &sequence)?;
    Ok(TateComputation {
        twisted,
        coborel,
        norm,
        norm_report,
        norm_map,
        sequence,
        exactness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfty::cyclic_group;

    #[test]
    fn z2_dualizing_coaction() {
        let a = cyclic_group(2).unwrap();
        let d = dualizing_bimodule(&a);
        let (e, g) = (0, 1);
        let outs = d.op(&[], g, &[]).unwrap();
        let expect: F2Sum<_> = [(vec![e], g, vec![]), (vec![g], e, vec![])].into_iter().collect();
        assert_eq!(outs, &expect);
        assert_eq!(d.op(&[], e, &[g]).unwrap(), &F2Sum::single((vec![], g, vec![])));
    }
}
