use super::{
    AInfAlgebra, AInfBimodule, AInfCoalgebra, AInfComodule, AInfModule, Basis, BiOutput, Label, RelationReport,
    SideType, StructureError, Witness,
};
use crate::F2Sum;

/// All words of the given length over `0..n`, in lexicographic order.
pub(crate) fn tuples(n: usize, len: usize) -> impl Iterator<Item = Vec<Label>> {
    let total = if n == 0 && len > 0 { 0 } else { n.pow(len as u32) };
    (0..total).map(move |mut idx| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = (idx % n) as Label;
            idx /= n;
        }
        w
    })
}

/// `Σ μ(a_1,…,μ(a_{i+1},…,a_{i+j}),…,a_n)` over all inner runs.
pub fn algebra_residual(a: &AInfAlgebra, inputs: &[Label]) -> F2Sum<Label> {
    let n = inputs.len();
    let mut acc = F2Sum::new();
    let mut word = Vec::with_capacity(n);
    for j in 1..=n {
        for i in 0..=n - j {
            let Some(inner) = a.mu(&inputs[i..i + j]) else { continue };
            for &o in inner {
                word.clear();
                word.extend_from_slice(&inputs[..i]);
                word.push(o);
                word.extend_from_slice(&inputs[i + j..]);
                if let Some(outer) = a.mu(&word) {
                    acc.add_all(outer);
                }
            }
        }
    }
    acc
}

/// Number of inputs beyond which every algebra relation vanishes: a
/// composite of two operations of arity at most `p` has at most `2p - 1` inputs.
pub fn algebra_relation_bound(a: &AInfAlgebra) -> usize {
    (2 * a.max_arity()).saturating_sub(1).max(1)
}

/// Same for a module whose operations consume at most `q` letters.
pub fn module_relation_bound(a: &AInfAlgebra, q: usize) -> usize {
    (2 * q).max(q + a.max_arity().saturating_sub(1)).max(1)
}

fn render_sum(b: &Basis, s: &F2Sum<Label>) -> String {
    if s.is_zero() {
        return "0".into();
    }
    s.iter().map(|&l| b.name(l).to_string()).collect::<Vec<_>>().join(" + ")
}

pub fn verify_algebra_relations(a: &AInfAlgebra, k_check: usize) -> RelationReport {
    let b = a.basis();
    let mut checked = 0;
    for k in 1..=k_check {
        for t in tuples(b.len(), k) {
            checked += 1;
            let r = algebra_residual(a, &t);
            if !r.is_zero() {
                return RelationReport {
                    structure: "algebra".into(),
                    k_check,
                    tuples_checked: checked,
                    witness: Some(Witness {
                        inputs: b.render(&t),
                        residual: render_sum(b, &r),
                    }),
                };
            }
        }
    }
    RelationReport {
        structure: "algebra".into(),
        k_check,
        tuples_checked: checked,
        witness: None,
    }
}

/// Checks that the augmentation is a strict algebra map to `F2`:
/// `ε(μ²(a, b)) = ε(a)ε(b)` on all basis pairs and `ε ∘ μ^k = 0` for `k ≠ 2`.
/// Passes trivially when there is no augmentation.
pub fn verify_augmentation(a: &AInfAlgebra) -> RelationReport {
    let b = a.basis();
    let eps_sum = |s: Option<&F2Sum<Label>>| s.is_some_and(|s| s.iter().filter(|&&x| a.epsilon(x)).count() % 2 == 1);
    let mut checked = 0;
    let mut witness = None;
    if a.augmentation().is_some() {
        let pairs = tuples(b.len(), 2).map(|t| {
            let want = a.epsilon(t[0]) && a.epsilon(t[1]);
            (t, want)
        });
        let others = a.ops().filter(|(k, _)| k.len() != 2).map(|(k, _)| (k.clone(), false));
        for (t, want) in pairs.chain(others) {
            checked += 1;
            let got = eps_sum(a.mu(&t));
            if got != want {
                witness = Some(Witness {
                    inputs: b.render(&t),
                    residual: format!("ε of the product is {}, expected {}", got as u8, want as u8),
                });
                break;
            }
        }
    }
    RelationReport {
        structure: "augmentation".into(),
        k_check: 2,
        tuples_checked: checked,
        witness,
    }
}

/// `Σ (…, δ(c_q), …)` applied to every term of `δ(c)`.
fn coalgebra_residual(c: &AInfCoalgebra, x: Label) -> F2Sum<Vec<Label>> {
    let mut acc = F2Sum::new();
    let Some(outer) = c.delta(x) else { return acc };
    for w in outer {
        for q in 0..w.len() {
            let Some(inner) = c.delta(w[q]) else { continue };
            for u in inner {
                let mut v = Vec::with_capacity(w.len() + u.len() - 1);
                v.extend_from_slice(&w[..q]);
                v.extend_from_slice(u);
                v.extend_from_slice(&w[q + 1..]);
                acc.add(v);
            }
        }
    }
    acc
}

pub fn verify_coalgebra_relations(c: &AInfCoalgebra) -> RelationReport {
    let b = c.basis();
    for x in b.labels() {
        let r = coalgebra_residual(c, x);
        if !r.is_zero() {
            let residual = r.iter().map(|w| b.render(w)).collect::<Vec<_>>().join(" + ");
            return RelationReport {
                structure: "coalgebra".into(),
                k_check: 0,
                tuples_checked: x as usize + 1,
                witness: Some(Witness {
                    inputs: b.name(x).to_string(),
                    residual,
                }),
            };
        }
    }
    RelationReport {
        structure: "coalgebra".into(),
        k_check: 0,
        tuples_checked: b.len(),
        witness: None,
    }
}

/// The structure acting on one side of a bimodule.
#[derive(Clone, Copy, Debug)]
pub enum SideRef<'a> {
    Ground,
    Algebra(&'a AInfAlgebra),
    Coalgebra(&'a AInfCoalgebra),
}

impl SideRef<'_> {
    fn side_type(&self) -> SideType {
        match self {
            SideRef::Ground => SideType::Ground,
            SideRef::Algebra(_) => SideType::Algebra,
            SideRef::Coalgebra(_) => SideType::Coalgebra,
        }
    }

    fn basis_len(&self) -> usize {
        match self {
            SideRef::Algebra(a) => a.basis().len(),
            _ => 0,
        }
    }
}

fn splice(w: &[Label], i: usize, j: usize, mid: &[Label]) -> Vec<Label> {
    let mut v = Vec::with_capacity(w.len() + mid.len() - j);
    v.extend_from_slice(&w[..i]);
    v.extend_from_slice(mid);
    v.extend_from_slice(&w[i + j..]);
    v
}

fn add_op(acc: &mut F2Sum<BiOutput>, m: &AInfBimodule, l: &[Label], x: Label, r: &[Label]) {
    if let Some(s) = m.op(l, x, r) {
        acc.add_all(s);
    }
}

/// Residual of the bimodule relation on consumed letters `l`, element `x`,
/// consumed letters `r`. Letters emitted by a second operation are written
/// next to the element.
fn bimodule_residual(left: SideRef, right: SideRef, m: &AInfBimodule, l: &[Label], x: Label, r: &[Label]) -> F2Sum<BiOutput> {
    let mut acc = F2Sum::new();
    for (on_left, side, word) in [(true, left, l), (false, right, r)] {
        let SideRef::Algebra(a) = side else { continue };
        let n = word.len();
        for j in 1..=n {
            for i in 0..=n - j {
                let Some(inner) = a.mu(&word[i..i + j]) else { continue };
                for &o in inner {
                    let w = splice(word, i, j, &[o]);
                    if on_left {
                        add_op(&mut acc, m, &w, x, r);
                    } else {
                        add_op(&mut acc, m, l, x, &w);
                    }
                }
            }
        }
    }
    for s in 0..=l.len() {
        for t in 0..=r.len() {
            let Some(first) = m.op(&l[s..], x, &r[..t]) else { continue };
            for (el, y, er) in first {
                let Some(second) = m.op(&l[..s], *y, &r[t..]) else { continue };
                for (el2, z, er2) in second {
                    let mut ol = el.clone();
                    ol.extend_from_slice(el2);
                    let mut or = er2.clone();
                    or.extend_from_slice(er);
                    acc.add((ol, *z, or));
                }
            }
        }
    }
    if let Some(outs) = m.op(l, x, r) {
        for (el, y, er) in outs {
            if let SideRef::Coalgebra(c) = left {
                for q in 0..el.len() {
                    for u in c.delta(el[q]).into_iter().flatten() {
                        acc.add((splice(el, q, 1, u), *y, er.clone()));
                    }
                }
            }
            if let SideRef::Coalgebra(c) = right {
                for q in 0..er.len() {
                    for u in c.delta(er[q]).into_iter().flatten() {
                        acc.add((el.clone(), *y, splice(er, q, 1, u)));
                    }
                }
            }
        }
    }
    acc
}

fn side_basis<'a>(s: SideRef<'a>) -> Option<&'a Basis> {
    match s {
        SideRef::Ground => None,
        SideRef::Algebra(a) => Some(a.basis()),
        SideRef::Coalgebra(c) => Some(c.basis()),
    }
}

fn render_bi(left: SideRef, right: SideRef, m: &AInfBimodule, s: &F2Sum<BiOutput>) -> String {
    s.iter()
        .map(|(el, y, er)| {
            let mut parts: Vec<String> = Vec::new();
            if let Some(b) = side_basis(left) {
                parts.extend(el.iter().map(|&c| b.name(c).to_string()));
            }
            parts.push(m.basis().name(*y).to_string());
            if let Some(b) = side_basis(right) {
                parts.extend(er.iter().map(|&c| b.name(c).to_string()));
            }
            parts.join("⊗")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Checks the relations of `m` for every element and every pair of consumed
/// words with at most `k_check` letters in total.
pub fn verify_bimodule_relations(
    left: SideRef,
    right: SideRef,
    m: &AInfBimodule,
    k_check: usize,
) -> Result<RelationReport, StructureError> {
    if left.side_type() != m.left() || right.side_type() != m.right() {
        return Err(StructureError::SideMismatch(format!(
            "structure has sides ({:?}, {:?}) but was checked against ({:?}, {:?})",
            m.left(),
            m.right(),
            left.side_type(),
            right.side_type()
        )));
    }
    let structure = match m.kind() {
        Some(k) => format!("{k:?} bimodule"),
        None => match (m.left(), m.right()) {
            (SideType::Algebra, _) => "left module".to_string(),
            (_, SideType::Algebra) => "right module".to_string(),
            (SideType::Coalgebra, _) => "left comodule".to_string(),
            (_, SideType::Coalgebra) => "right comodule".to_string(),
            _ => "chain complex".to_string(),
        },
    };
    let (nl, nr) = (left.basis_len(), right.basis_len());
    let mut checked = 0;
    for total in 0..=k_check {
        for kl in 0..=total {
            let kr = total - kl;
            if (kl > 0 && nl == 0) || (kr > 0 && nr == 0) {
                continue;
            }
            for l in tuples(nl, kl) {
                for r in tuples(nr, kr) {
                    for x in m.basis().labels() {
                        checked += 1;
                        let res = bimodule_residual(left, right, m, &l, x, &r);
                        if !res.is_zero() {
                            let mut inputs: Vec<String> = Vec::new();
                            if let Some(b) = side_basis(left) {
                                inputs.extend(l.iter().map(|&c| b.name(c).to_string()));
                            }
                            inputs.push(m.basis().name(x).to_string());
                            if let Some(b) = side_basis(right) {
                                inputs.extend(r.iter().map(|&c| b.name(c).to_string()));
                            }
                            return Ok(RelationReport {
                                structure,
                                k_check,
                                tuples_checked: checked,
                                witness: Some(Witness {
                                    inputs: format!("({})", inputs.join(",")),
                                    residual: render_bi(left, right, m, &res),
                                }),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(RelationReport {
        structure,
        k_check,
        tuples_checked: checked,
        witness: None,
    })
}

pub fn verify_module_relations(a: &AInfAlgebra, m: &AInfModule, k_check: usize) -> RelationReport {
    let bi = AInfBimodule::from_module(m);
    let (l, r) = match m.side() {
        super::Side::Left => (SideRef::Algebra(a), SideRef::Ground),
        super::Side::Right => (SideRef::Ground, SideRef::Algebra(a)),
    };
    verify_bimodule_relations(l, r, &bi, k_check).expect("sides match by construction")
}

pub fn verify_comodule_relations(c: &AInfCoalgebra, n: &AInfComodule) -> RelationReport {
    let bi = AInfBimodule::from_comodule(n);
    let (l, r) = match n.side() {
        super::Side::Left => (SideRef::Coalgebra(c), SideRef::Ground),
        super::Side::Right => (SideRef::Ground, SideRef::Coalgebra(c)),
    };
    verify_bimodule_relations(l, r, &bi, 0).expect("sides match by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_enumerate_all_words() {
        let v: Vec<_> = tuples(2, 2).collect();
        assert_eq!(v, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(tuples(3, 0).count(), 1);
        assert_eq!(tuples(0, 2).count(), 0);
    }
}
