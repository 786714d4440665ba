use std::collections::{BTreeMap, BTreeSet};

use super::{Basis, Label, Side, StructureError};
use crate::F2Sum;

fn check_labels(basis: &Basis, labels: &[Label], what: &str) -> Result<(), StructureError> {
    match labels.iter().find(|&&l| !basis.contains(l)) {
        Some(l) => Err(StructureError::UnknownLabel(format!("{what}: label {l} outside a basis of size {}", basis.len()))),
        None => Ok(()),
    }
}

fn grading_error(what: &str, detail: String) -> StructureError {
    StructureError::Grading(format!("{what}: {detail}"))
}

/// An A∞-algebra over F2 given by finitely many terms `μ^k(a_1,…,a_k) ∋ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfAlgebra {
    basis: Basis,
    ops: BTreeMap<Vec<Label>, F2Sum<Label>>,
    augmentation: Option<BTreeSet<Label>>,
}

impl AInfAlgebra {
    /// Terms with the same inputs are summed; a term listed twice cancels.
    pub fn new(basis: Basis, terms: impl IntoIterator<Item = (Vec<Label>, Label)>) -> Result<Self, StructureError> {
        let mut ops: BTreeMap<Vec<Label>, F2Sum<Label>> = BTreeMap::new();
        for (inputs, out) in terms {
            if inputs.is_empty() {
                return Err(StructureError::Invalid("algebra operations need at least one input".into()));
            }
            check_labels(&basis, &inputs, "algebra term input")?;
            check_labels(&basis, &[out], "algebra term output")?;
            ops.entry(inputs).or_default().add(out);
        }
        ops.retain(|_, v| !v.is_zero());
        Ok(AInfAlgebra {
            basis,
            ops,
            augmentation: None,
        })
    }

    /// Sets the augmentation `ε` by its support.
    pub fn with_augmentation(mut self, support: impl IntoIterator<Item = Label>) -> Result<Self, StructureError> {
        let s: BTreeSet<Label> = support.into_iter().collect();
        check_labels(&self.basis, &s.iter().copied().collect::<Vec<_>>(), "augmentation")?;
        self.augmentation = Some(s);
        Ok(self)
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn mu(&self, inputs: &[Label]) -> Option<&F2Sum<Label>> {
        self.ops.get(inputs)
    }

    pub fn ops(&self) -> impl Iterator<Item = (&Vec<Label>, &F2Sum<Label>)> {
        self.ops.iter()
    }

    /// All terms as `(inputs, output)` pairs in canonical order.
    pub fn terms(&self) -> Vec<(Vec<Label>, Label)> {
        self.ops
            .iter()
            .flat_map(|(k, v)| v.iter().map(move |&o| (k.clone(), o)))
            .collect()
    }

    pub fn max_arity(&self) -> usize {
        self.ops.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn augmentation(&self) -> Option<&BTreeSet<Label>> {
        self.augmentation.as_ref()
    }

    pub fn epsilon(&self, a: Label) -> bool {
        self.augmentation.as_ref().is_some_and(|s| s.contains(&a))
    }

    /// Checks that `μ^k` has degree `k - 2` and that `ε` has degree 0.
    pub fn check_grading(&self) -> Result<(), StructureError> {
        let b = &self.basis;
        for (inputs, outs) in &self.ops {
            let expect: i64 = inputs.iter().map(|&a| b.degree(a)).sum::<i64>() + inputs.len() as i64 - 2;
            for &o in outs {
                if b.degree(o) != expect {
                    return Err(grading_error(
                        "algebra",
                        format!("μ{} -> {} has degree {}, expected {expect}", b.render(inputs), b.name(o), b.degree(o)),
                    ));
                }
            }
        }
        if let Some(a) = self.augmentation.as_ref().and_then(|s| s.iter().find(|&&a| b.degree(a) != 0)) {
            return Err(grading_error("augmentation", format!("supported on {} of nonzero degree", b.name(*a))));
        }
        Ok(())
    }
}

/// A left or right A∞-module: terms `μ^{k|1}(a_1,…,a_k, n) ∋ n'` (left) or
/// `μ^{1|k}(n, a_1,…,a_k) ∋ n'` (right). Letters are stored in written order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfModule {
    side: Side,
    basis: Basis,
    // element -> letters -> outputs
    ops: BTreeMap<Label, BTreeMap<Vec<Label>, F2Sum<Label>>>,
}

impl AInfModule {
    pub fn new(
        side: Side,
        basis: Basis,
        algebra: &AInfAlgebra,
        terms: impl IntoIterator<Item = (Vec<Label>, Label, Label)>,
    ) -> Result<Self, StructureError> {
        let mut ops: BTreeMap<Label, BTreeMap<Vec<Label>, F2Sum<Label>>> = BTreeMap::new();
        for (letters, elem, out) in terms {
            check_labels(algebra.basis(), &letters, "module term algebra input")?;
            check_labels(&basis, &[elem, out], "module term element")?;
            ops.entry(elem).or_default().entry(letters).or_default().add(out);
        }
        for m in ops.values_mut() {
            m.retain(|_, v| !v.is_zero());
        }
        ops.retain(|_, m| !m.is_empty());
        Ok(AInfModule { side, basis, ops })
    }

    /// The module with all structure maps zero.
    pub fn zero(side: Side, basis: Basis) -> Self {
        AInfModule {
            side,
            basis,
            ops: BTreeMap::new(),
        }
    }

    /// The one-dimensional module on which `a` acts by `ε(a)`.
    pub fn trivial(algebra: &AInfAlgebra, side: Side) -> Result<Self, StructureError> {
        let aug = algebra.augmentation().ok_or(StructureError::MissingAugmentation)?;
        let basis = Basis::new(["1"])?;
        let terms = aug.iter().map(|&a| (vec![a], 0, 0));
        Self::new(side, basis, algebra, terms)
    }

    /// The algebra acting on itself: `μ^{k|1}(a⃗, n) = μ^{k+1}(a⃗, n)` on the left,
    /// `μ^{1|k}(n, a⃗) = μ^{k+1}(n, a⃗)` on the right.
    pub fn regular(algebra: &AInfAlgebra, side: Side) -> Self {
        let terms = algebra.terms().into_iter().map(|(inputs, out)| match side {
            Side::Left => {
                let (letters, n) = inputs.split_at(inputs.len() - 1);
                (letters.to_vec(), n[0], out)
            }
            Side::Right => (inputs[1..].to_vec(), inputs[0], out),
        });
        Self::new(side, algebra.basis().clone(), algebra, terms).expect("labels come from the algebra")
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn act(&self, letters: &[Label], elem: Label) -> Option<&F2Sum<Label>> {
        self.ops.get(&elem)?.get(letters)
    }

    /// All terms as `(letters, element, output)`.
    pub fn terms(&self) -> Vec<(Vec<Label>, Label, Label)> {
        self.ops
            .iter()
            .flat_map(|(&e, m)| {
                m.iter()
                    .flat_map(move |(letters, outs)| outs.iter().map(move |&o| (letters.clone(), e, o)))
            })
            .collect()
    }

    /// Terms acting on `elem`, keyed by letters.
    pub fn ops_on(&self, elem: Label) -> Option<&BTreeMap<Vec<Label>, F2Sum<Label>>> {
        self.ops.get(&elem)
    }

    pub fn max_arity(&self) -> usize {
        self.ops.values().flat_map(|m| m.keys()).map(Vec::len).max().unwrap_or(0)
    }

    /// Checks that `μ^{k|1}` has degree `k - 1`.
    pub fn check_grading(&self, algebra: &AInfAlgebra) -> Result<(), StructureError> {
        let (a, b) = (algebra.basis(), &self.basis);
        for (letters, elem, out) in self.terms() {
            let expect = letters.iter().map(|&x| a.degree(x)).sum::<i64>() + b.degree(elem) + letters.len() as i64 - 1;
            if b.degree(out) != expect {
                return Err(grading_error(
                    "module",
                    format!(
                        "action of {} on {} lands in degree {}, expected {expect}",
                        a.render(&letters),
                        b.name(elem),
                        b.degree(out)
                    ),
                ));
            }
        }
        Ok(())
    }
}

/// An A∞-coalgebra: terms `δ^k(c) ∋ (c_1,…,c_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfCoalgebra {
    basis: Basis,
    coops: BTreeMap<Label, F2Sum<Vec<Label>>>,
    epsilon_star: Option<BTreeSet<Label>>,
}

impl AInfCoalgebra {
    pub fn new(basis: Basis, terms: impl IntoIterator<Item = (Label, Vec<Label>)>) -> Result<Self, StructureError> {
        let mut coops: BTreeMap<Label, F2Sum<Vec<Label>>> = BTreeMap::new();
        for (input, outs) in terms {
            if outs.is_empty() {
                return Err(StructureError::Invalid("coalgebra operations need at least one output".into()));
            }
            check_labels(&basis, &[input], "coalgebra term input")?;
            check_labels(&basis, &outs, "coalgebra term output")?;
            coops.entry(input).or_default().add(outs);
        }
        coops.retain(|_, v| !v.is_zero());
        Ok(AInfCoalgebra {
            basis,
            coops,
            epsilon_star: None,
        })
    }

    /// Sets the distinguished element `ε*` (the dual of an augmentation) by its support.
    pub fn with_epsilon_star(mut self, support: impl IntoIterator<Item = Label>) -> Result<Self, StructureError> {
        let s: BTreeSet<Label> = support.into_iter().collect();
        check_labels(&self.basis, &s.iter().copied().collect::<Vec<_>>(), "epsilon*")?;
        self.epsilon_star = Some(s);
        Ok(self)
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn delta(&self, c: Label) -> Option<&F2Sum<Vec<Label>>> {
        self.coops.get(&c)
    }

    pub fn epsilon_star(&self) -> Option<&BTreeSet<Label>> {
        self.epsilon_star.as_ref()
    }

    pub fn terms(&self) -> Vec<(Label, Vec<Label>)> {
        self.coops
            .iter()
            .flat_map(|(&c, outs)| outs.iter().map(move |w| (c, w.clone())))
            .collect()
    }

    /// Checks that `δ^k` has degree `k - 2`.
    pub fn check_grading(&self) -> Result<(), StructureError> {
        let b = &self.basis;
        for (c, w) in self.terms() {
            let got: i64 = w.iter().map(|&x| b.degree(x)).sum();
            let expect = b.degree(c) + w.len() as i64 - 2;
            if got != expect {
                return Err(grading_error(
                    "coalgebra",
                    format!("δ({}) ∋ {} has degree {got}, expected {expect}", b.name(c), b.render(&w)),
                ));
            }
        }
        if let Some(c) = self.epsilon_star.as_ref().and_then(|s| s.iter().find(|&&c| b.degree(c) != 0)) {
            return Err(grading_error("epsilon*", format!("supported on {} of nonzero degree", b.name(*c))));
        }
        Ok(())
    }
}

/// A left or right A∞-comodule: terms `δ^{k|1}(n) ∋ (c⃗, n')` (left, written
/// `c⃗ ⊗ n'`) or `δ^{1|k}(n) ∋ (c⃗, n')` (right, written `n' ⊗ c⃗`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfComodule {
    side: Side,
    basis: Basis,
    coops: BTreeMap<Label, F2Sum<(Vec<Label>, Label)>>,
}

impl AInfComodule {
    pub fn new(
        side: Side,
        basis: Basis,
        coalgebra: &AInfCoalgebra,
        terms: impl IntoIterator<Item = (Label, Vec<Label>, Label)>,
    ) -> Result<Self, StructureError> {
        let mut coops: BTreeMap<Label, F2Sum<(Vec<Label>, Label)>> = BTreeMap::new();
        for (input, letters, out) in terms {
            check_labels(coalgebra.basis(), &letters, "comodule term letters")?;
            check_labels(&basis, &[input, out], "comodule term element")?;
            coops.entry(input).or_default().add((letters, out));
        }
        coops.retain(|_, v| !v.is_zero());
        Ok(AInfComodule { side, basis, coops })
    }

    pub fn zero(side: Side, basis: Basis) -> Self {
        AInfComodule {
            side,
            basis,
            coops: BTreeMap::new(),
        }
    }

    /// The one-dimensional comodule whose coaction emits the letter `ε*`.
    pub fn trivial(coalgebra: &AInfCoalgebra, side: Side) -> Result<Self, StructureError> {
        let eps = coalgebra.epsilon_star().ok_or(StructureError::MissingAugmentation)?;
        let basis = Basis::new(["1"])?;
        let terms = eps.iter().map(|&c| (0, vec![c], 0));
        Self::new(side, basis, coalgebra, terms)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn coact(&self, n: Label) -> Option<&F2Sum<(Vec<Label>, Label)>> {
        self.coops.get(&n)
    }

    pub fn terms(&self) -> Vec<(Label, Vec<Label>, Label)> {
        self.coops
            .iter()
            .flat_map(|(&n, outs)| outs.iter().map(move |(w, o)| (n, w.clone(), *o)))
            .collect()
    }

    /// Checks that `δ^{k|1}` has degree `k - 1`.
    pub fn check_grading(&self, coalgebra: &AInfCoalgebra) -> Result<(), StructureError> {
        let (c, b) = (coalgebra.basis(), &self.basis);
        for (n, w, out) in self.terms() {
            let got = w.iter().map(|&x| c.degree(x)).sum::<i64>() + b.degree(out);
            let expect = b.degree(n) + w.len() as i64 - 1;
            if got != expect {
                return Err(grading_error(
                    "comodule",
                    format!("coaction on {} emits {} ⊗ {} of degree {got}, expected {expect}", b.name(n), c.render(&w), b.name(out)),
                ));
            }
        }
        Ok(())
    }
}
