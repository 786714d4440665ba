//! Dualization. Duals of tensor products reverse the order of factors, so a
//! term `μ(a_1,…,a_k) ∋ b` becomes `δ(b*) ∋ (a_k*,…,a_1*)`. Dual letters keep
//! the label of the original basis element.

use super::{AInfAlgebra, AInfCoalgebra, AInfComodule, AInfModule, Label, Side, StructureError};

fn rev(w: &[Label]) -> Vec<Label> {
    w.iter().rev().copied().collect()
}

/// The coalgebra `A*`, with `ε*` set from the augmentation when present.
pub fn dualize_algebra(a: &AInfAlgebra) -> AInfCoalgebra {
    let terms = a.terms().into_iter().map(|(inputs, out)| (out, rev(&inputs)));
    let c = AInfCoalgebra::new(a.basis().dual(), terms).expect("labels come from the algebra");
    match a.augmentation() {
        Some(s) => c.with_epsilon_star(s.iter().copied()).expect("labels come from the algebra"),
        None => c,
    }
}

/// Inverse of [`dualize_algebra`].
pub fn dualize_coalgebra(c: &AInfCoalgebra) -> AInfAlgebra {
    let terms = c.terms().into_iter().map(|(x, w)| (rev(&w), x));
    let a = AInfAlgebra::new(c.basis().dual(), terms).expect("labels come from the coalgebra");
    match c.epsilon_star() {
        Some(s) => a.with_augmentation(s.iter().copied()).expect("labels come from the coalgebra"),
        None => a,
    }
}

/// A module over `A` seen as a comodule over `A*` on the same side and the
/// same basis: `μ(a⃗, n) ∋ n'` becomes `δ(n) ∋ (rev a⃗*) ⊗ n'`.
pub fn module_to_comodule(a: &AInfAlgebra, m: &AInfModule) -> AInfComodule {
    let c = dualize_algebra(a);
    let terms = m.terms().into_iter().map(|(letters, n, out)| (n, rev(&letters), out));
    AInfComodule::new(m.side(), m.basis().clone(), &c, terms).expect("labels come from the module")
}

/// Inverse of [`module_to_comodule`].
pub fn comodule_to_module(c: &AInfCoalgebra, n: &AInfComodule) -> Result<AInfModule, StructureError> {
    let a = dualize_coalgebra(c);
    let terms = n.terms().into_iter().map(|(x, letters, out)| (rev(&letters), x, out));
    AInfModule::new(n.side(), n.basis().clone(), &a, terms)
}

/// The linear dual `M*` of a module, as a comodule over `A*` on the opposite
/// side: the transpose of `μ(a⃗, n) ∋ n'` is `δ(n'*) ∋ n* ⊗ (rev a⃗*)` for a
/// left module, and `δ(n'*) ∋ (rev a⃗*) ⊗ n*` for a right module.
pub fn dual_module_as_comodule(a: &AInfAlgebra, m: &AInfModule) -> AInfComodule {
    let c = dualize_algebra(a);
    let side = match m.side() {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    };
    let terms = m.terms().into_iter().map(|(letters, n, out)| (out, rev(&letters), n));
    AInfComodule::new(side, m.basis().dual(), &c, terms).expect("labels come from the module")
}
