//! Reference computations shared by the test targets. Nothing here calls into
//! the bar/cobar code: ranks are dense row reductions and the homology
//! values come from classical resolutions.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Rank over F2 of a dense 0/1 matrix given by rows.
pub fn dense_rank(rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.iter().map(|r| r.iter().map(|x| x & 1).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] == 1 {
                for k in 0..ncols {
                    m[r][k] ^= m[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Homology of a complex given by dimensions and dense boundaries
/// `d[i]: C_i → C_{i-1}` (rows index `C_{i-1}`).
pub fn dense_homology(dims: &BTreeMap<i64, usize>, d: &BTreeMap<i64, Vec<Vec<u8>>>) -> BTreeMap<i64, usize> {
    let rank = |i: i64| d.get(&i).map_or(0, |m| dense_rank(m));
    dims.iter().map(|(&i, &n)| (i, n - rank(i) - rank(i + 1))).collect()
}

/// Multiplication by `r` on `F2[Z/n]` in the basis `g^0..g^{n-1}`, as a
/// dense matrix. `r` is given by its support.
fn cyclic_mult(n: usize, r: &[usize]) -> Vec<Vec<u8>> {
    let mut m = vec![vec![0u8; n]; n];
    for j in 0..n {
        for &s in r {
            m[(j + s) % n][j] ^= 1;
        }
    }
    m
}

fn matmul(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = vec![vec![0u8; m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l] == 1 {
                for j in 0..m {
                    out[i][j] ^= b[l][j];
                }
            }
        }
    }
    out
}

/// The periodic resolution of `F2` over `F2[Z/n]`: `P_i = F2[Z/n]`, the
/// boundary out of odd degrees is `1 + g`, out of positive even degrees the
/// norm element. Returns the boundary out of degree `i` and checks exactness
/// of the augmented resolution up to `top`.
pub fn periodic_resolution(n: usize, top: i64) -> BTreeMap<i64, Vec<Vec<u8>>> {
    let norm: Vec<usize> = (0..n).collect();
    let mut d = BTreeMap::new();
    for i in 1..=top {
        let r: &[usize] = if i % 2 == 1 { &[0, 1] } else { &norm };
        d.insert(i, cyclic_mult(n, r));
    }
    // Augmented resolution: ε: P_0 → F2 is the all-ones row.
    let mut aug = d.clone();
    aug.insert(0, vec![vec![1u8; n]]);
    let mut dims: BTreeMap<i64, usize> = (0..=top).map(|i| (i, n)).collect();
    dims.insert(-1, 1);
    for i in 1..=top {
        assert!(matmul(&aug[&(i - 1)], &aug[&i]).iter().flatten().all(|&x| x == 0));
    }
    let h = dense_homology(&dims, &aug);
    assert!(h.iter().filter(|(&i, _)| i < top).all(|(_, &x)| x == 0), "resolution is not exact");
    d
}

/// `H_i(Z/n; F2)` for `0 ≤ i < top`, from `P ⊗_{Z/n} F2`.
pub fn cyclic_group_homology(n: usize, top: i64) -> BTreeMap<i64, usize> {
    let res = periodic_resolution(n, top);
    // Tensoring with the trivial module sends g to 1.
    let eps = |m: &Vec<Vec<u8>>| vec![vec![m.iter().map(|row| row[0]).fold(0, |a, b| a ^ b)]];
    let d: BTreeMap<i64, Vec<Vec<u8>>> = res.iter().map(|(&i, m)| (i, eps(m))).collect();
    let dims = (0..=top).map(|i| (i, 1)).collect();
    let mut h = dense_homology(&dims, &d);
    h.remove(&top);
    h
}

/// `H^i(Z/n; F2)` for `0 ≤ i < top`, from `Hom_{Z/n}(P, F2)`, reported in
/// degree `-i`.
pub fn cyclic_group_cohomology(n: usize, top: i64) -> BTreeMap<i64, usize> {
    let res = periodic_resolution(n, top);
    // Hom(F2[G], F2) = F2 via f ↦ f(1); the coboundary is precomposition.
    // As a chain complex in degree -i its boundary out of -i is the
    // transpose of the induced map, which is 1x1.
    let mut d = BTreeMap::new();
    for (&i, m) in &res {
        let x = m.iter().map(|row| row[0]).fold(0, |a, b| a ^ b);
        d.insert(-(i - 1), vec![vec![x]]);
    }
    let dims = (-top..=0).map(|i| (i, 1)).collect();
    let mut h = dense_homology(&dims, &d);
    h.remove(&-top);
    h
}

/// `Ĥ_i(Z/n; F2)` for `lo ≤ i ≤ hi` from the complete resolution, which is
/// periodic of period two in every integer degree, `1 + g` out of odd
/// degrees and the norm out of even degrees.
pub fn cyclic_tate(n: usize, lo: i64, hi: i64) -> BTreeMap<i64, usize> {
    let eps_norm = (n % 2) as u8;
    let dims = ((lo - 1)..=(hi + 1)).map(|i| (i, 1)).collect();
    let d = (lo..=(hi + 1))
        .map(|i| (i, vec![vec![if i.rem_euclid(2) == 1 { 0 } else { eps_norm }]]))
        .collect();
    dense_homology(&dims, &d)
        .into_iter()
        .filter(|(i, _)| (lo..=hi).contains(i))
        .collect()
}

/// `Tor^{Λ[x]}(F2, F2)` for `|x| = deg`: the Koszul resolution is
/// `Λ[x] ⊗ Γ[y]` with `y` of homological degree 1 and internal degree `deg`,
/// so total degree `j(deg + 1)` carries one class for every `j`.
pub fn exterior_tor(deg: i64, top: i64) -> BTreeMap<i64, usize> {
    (0..=top).map(|t| (t, usize::from(t % (deg + 1) == 0))).collect()
}

/// Counts bracketings of `n` leaves by codimension, as sets of pairwise
/// nested-or-disjoint intervals of length between 2 and `n - 1`.
pub fn bracketing_census(n: usize) -> BTreeMap<usize, usize> {
    let mut intervals = Vec::new();
    for len in 2..n {
        for start in 0..=n - len {
            intervals.push((start, start + len));
        }
    }
    let compatible = |a: (usize, usize), b: (usize, usize)| {
        a.1 <= b.0 || b.1 <= a.0 || (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1)
    };
    let mut by_codim = BTreeMap::new();
    for mask in 0u64..(1u64 << intervals.len()) {
        let chosen: Vec<_> = (0..intervals.len()).filter(|i| mask >> i & 1 == 1).map(|i| intervals[i]).collect();
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| compatible(a, b)));
        if ok {
            // A tree with v internal vertices has v - 1 chosen intervals and
            // codimension n - 2 - (v - 1).
            *by_codim.entry(n - 2 - chosen.len()).or_insert(0) += 1;
        }
    }
    by_codim
}
