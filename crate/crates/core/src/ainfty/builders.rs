use super::{AInfAlgebra, Basis, StructureError};

/// The group algebra of a finite group given by its multiplication table:
/// `μ² = ` the group law, all other operations zero, `ε ≡ 1` on group elements.
pub fn group_algebra<S: AsRef<str>>(names: &[S], table: &[Vec<usize>]) -> Result<AInfAlgebra, StructureError> {
    let n = names.len();
    if n == 0 {
        return Err(StructureError::NotAGroup("empty table".into()));
    }
    if table.len() != n || table.iter().any(|r| r.len() != n) {
        return Err(StructureError::NotAGroup(format!("table is not {n}×{n}")));
    }
    if let Some((i, j)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| table[i][j] >= n) {
        return Err(StructureError::NotAGroup(format!("entry ({i},{j}) out of range")));
    }
    let nm = |i: usize| names[i].as_ref().to_string();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    return Err(StructureError::NotAGroup(format!(
                        "associativity fails on ({},{},{})",
                        nm(x),
                        nm(y),
                        nm(z)
                    )));
                }
            }
        }
    }
    let unit = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| StructureError::NotAGroup("no identity element".into()))?;
    if let Some(x) = (0..n).find(|&x| !(0..n).any(|y| table[x][y] == unit && table[y][x] == unit)) {
        return Err(StructureError::NotAGroup(format!("{} has no inverse", nm(x))));
    }
    let basis = Basis::new(names.iter().map(|s| s.as_ref().to_string()))?;
    let terms = (0..n).flat_map(|x| (0..n).map(move |y| (vec![x as u32, y as u32], table[x][y] as u32)));
    AInfAlgebra::new(basis, terms)?.with_augmentation(0..n as u32)
}

/// `F2[ℤ/n]` on the basis `e, g, g^2, …`.
pub fn cyclic_group(n: usize) -> Result<AInfAlgebra, StructureError> {
    if n == 0 {
        return Err(StructureError::NotAGroup("order 0".into()));
    }
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    group_algebra(&names, &table)
}

pub fn trivial_group() -> AInfAlgebra {
    cyclic_group(1).expect("the trivial group is a group")
}

/// `F2[S_3]` with `a = (12)`, `b = (23)`; elements `e, a, b, ab, ba, aba`.
pub fn symmetric_group_s3() -> AInfAlgebra {
    type Perm = [usize; 3];
    let compose = |x: Perm, y: Perm| -> Perm { [x[y[0]], x[y[1]], x[y[2]]] };
    let e = [0, 1, 2];
    let a = [1, 0, 2];
    let b = [0, 2, 1];
    let ab = compose(a, b);
    let ba = compose(b, a);
    let aba = compose(ab, a);
    let elems = [e, a, b, ab, ba, aba];
    let names = ["e", "a", "b", "ab", "ba", "aba"];
    let idx = |p: Perm| elems.iter().position(|&q| q == p).expect("S3 is closed");
    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|&x| elems.iter().map(|&y| idx(compose(x, y))).collect())
        .collect();
    group_algebra(&names, &table).expect("S3 is a group")
}

/// `F2[x]/(x²)` with `|x| = deg`, augmented by `ε(1) = 1`.
pub fn exterior_algebra_rank1(deg: i64) -> Result<AInfAlgebra, StructureError> {
    if deg < 1 {
        return Err(StructureError::Invalid(format!("exterior generator needs degree ≥ 1, got {deg}")));
    }
    let basis = Basis::with_degrees(vec!["1".into(), "x".into()], vec![0, deg])?;
    let terms = [(vec![0, 0], 0), (vec![0, 1], 1), (vec![1, 0], 1)];
    AInfAlgebra::new(basis, terms)?.with_augmentation([0])
}

/// A minimal algebra with a nonvanishing triple product: basis `1, x, z` in
/// degrees `0, 1, 4`, unital `μ²` with all products of `x, z` zero, and
/// `μ³(x, x, x) = z`.
pub fn massey_algebra() -> AInfAlgebra {
    let basis = Basis::with_degrees(vec!["1".into(), "x".into(), "z".into()], vec![0, 1, 4]).expect("distinct names");
    let terms = [
        (vec![0, 0], 0),
        (vec![0, 1], 1),
        (vec![1, 0], 1),
        (vec![0, 2], 2),
        (vec![2, 0], 2),
        (vec![1, 1, 1], 2),
    ];
    AInfAlgebra::new(basis, terms)
        .and_then(|a| a.with_augmentation([0]))
        .expect("labels are in range")
}

/// A two-element magma that is not associative: `μ²(x, y) = x` except
/// `μ²(g, g) = e`. Here `(g·g)·g = e` while `g·(g·g) = g`.
pub fn nonassociative_magma() -> AInfAlgebra {
    let basis = Basis::new(["e", "g"]).expect("distinct names");
    let terms = [(vec![0, 0], 0), (vec![0, 1], 0), (vec![1, 0], 1), (vec![1, 1], 0)];
    AInfAlgebra::new(basis, terms).expect("labels are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfty::verify_algebra_relations;

    #[test]
    fn builders_pass_their_relations() {
        for a in [
            cyclic_group(2).unwrap(),
            cyclic_group(3).unwrap(),
            trivial_group(),
            symmetric_group_s3(),
            exterior_algebra_rank1(1).unwrap(),
            exterior_algebra_rank1(3).unwrap(),
            massey_algebra(),
        ] {
            assert!(verify_algebra_relations(&a, 4).passed());
            a.check_grading().unwrap();
        }
    }

    #[test]
    fn s3_is_noncommutative() {
        let s3 = symmetric_group_s3();
        let (a, b) = (s3.basis().index_of("a").unwrap(), s3.basis().index_of("b").unwrap());
        assert_ne!(s3.mu(&[a, b]), s3.mu(&[b, a]));
    }

    #[test]
    fn broken_tables_are_rejected() {
        let names = ["e", "g"];
        let err = group_algebra(&names, &[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, StructureError::NotAGroup(_)), "{err}");
        let err = group_algebra(&names, &[vec![0, 1]]).unwrap_err();
        assert!(err.to_string().contains("2×2"));
        assert!(exterior_algebra_rank1(0).is_err());
    }

    #[test]
    fn massey_product_is_present() {
        let m = massey_algebra();
        assert_eq!(m.max_arity(), 3);
        assert_eq!(m.mu(&[1, 1]), None);
        assert!(m.mu(&[1, 1, 1]).unwrap().contains(&2));
    }
}
