mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use ainf_core::f2::*;
use common::{dense_homology, dense_rank};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn dense(m: &SparseF2Matrix) -> Vec<Vec<u8>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c) as u8).collect()).collect()
}

/// A complex in degrees `0..=top` with a known answer: a sum of copies of
/// `F2` and of `F2 → F2`, written in a scrambled basis. Returns the dense
/// boundaries and the number of loose copies of `F2` per degree.
fn scrambled_complex(rng: &mut ChaCha8Rng, top: i64) -> (Vec<usize>, BTreeMap<i64, Vec<Vec<u8>>>, Vec<usize>) {
    let single: Vec<usize> = (0..=top).map(|_| rng.gen_range(0..3)).collect();
    // pairs[d] joins degree d to degree d - 1.
    let pairs: Vec<usize> = (0..=top).map(|d| if d == 0 { 0 } else { rng.gen_range(0..3) }).collect();
    let dims: Vec<usize> = (0..=top as usize)
        .map(|d| single[d] + pairs[d] + pairs.get(d + 1).copied().unwrap_or(0))
        .collect();
    let mut d: BTreeMap<i64, Vec<Vec<u8>>> = BTreeMap::new();
    for i in 1..=top as usize {
        // Basis of degree i: singles, tops of pairs[i], bottoms of pairs[i+1].
        let mut m = vec![vec![0u8; dims[i]]; dims[i - 1]];
        for p in 0..pairs[i] {
            let bottom = single[i - 1] + pairs[i - 1] + p;
            m[bottom][single[i] + p] = 1;
        }
        d.insert(i as i64, m);
    }
    // Random changes of basis: x_j += x_k in degree i.
    for _ in 0..40 {
        let i = rng.gen_range(0..=top as usize);
        if dims[i] < 2 {
            continue;
        }
        let (j, k) = (rng.gen_range(0..dims[i]), rng.gen_range(0..dims[i]));
        if j == k {
            continue;
        }
        if let Some(m) = d.get_mut(&(i as i64)) {
            for row in m.iter_mut() {
                row[j] ^= row[k];
            }
        }
        if let Some(m) = d.get_mut(&(i as i64 + 1)) {
            let rj = m[j].clone();
            for (x, y) in m[k].iter_mut().zip(rj) {
                *x ^= y;
            }
        }
    }
    (dims, d, single)
}

fn build(dims: &[usize], d: &BTreeMap<i64, Vec<Vec<u8>>>) -> ChainComplex {
    let boundaries = (0..dims.len() as i64)
        .map(|i| match d.get(&i) {
            Some(m) if !m.is_empty() && !m[0].is_empty() => SparseF2Matrix::from_dense(m),
            _ => SparseF2Matrix::zeros(if i == 0 { 0 } else { dims[i as usize - 1] }, dims[i as usize]),
        })
        .collect();
    ChainComplex::from_dims(0, dims, boundaries, DegreeRange::ALL).unwrap()
}

#[test]
fn scrambled_complexes_have_the_planted_homology() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let (dims, d, single) = scrambled_complex(&mut rng, 4);
        let c = build(&dims, &d);
        c.check_d2().unwrap();
        let h = c.homology_dims().unwrap();
        let want: BTreeMap<i64, usize> = single.iter().enumerate().map(|(i, &s)| (i as i64, s)).collect();
        assert_eq!(h, want);
        let dd: BTreeMap<i64, usize> = dims.iter().enumerate().map(|(i, &n)| (i as i64, n)).collect();
        assert_eq!(dense_homology(&dd, &d), want);
    }
}

#[test]
fn d_squared_failure_is_reported() {
    let d1 = SparseF2Matrix::from_dense(&[vec![1]]);
    let d2 = SparseF2Matrix::from_dense(&[vec![1]]);
    let c = ChainComplex::from_dims(0, &[1, 1, 1], vec![SparseF2Matrix::zeros(0, 1), d1, d2], DegreeRange::ALL).unwrap();
    assert!(matches!(c.check_d2(), Err(F2Error::NotAComplex(_))));
    assert!(c.homology_dims().is_err());
}

/// `id + ∂h + h∂` for a random `h` of degree one, or the zero map.
fn random_chain_map(rng: &mut ChaCha8Rng, c: &Arc<ChainComplex>, zero: bool) -> ChainMap {
    let mut comps = BTreeMap::new();
    let top = c.max_degree();
    let h: BTreeMap<i64, SparseF2Matrix> = (0..=top)
        .map(|d| {
            let (rows, cols) = (c.dim(d + 1), c.dim(d));
            let entries: Vec<(usize, usize)> = (0..rows)
                .flat_map(|r| (0..cols).map(move |k| (r, k)))
                .filter(|_| rng.gen_bool(0.3))
                .collect();
            (d, SparseF2Matrix::from_entries(rows, cols, entries))
        })
        .collect();
    for d in 0..=top {
        let n = c.dim(d);
        let m = if zero {
            SparseF2Matrix::zeros(n, n)
        } else {
            let mut m = SparseF2Matrix::identity(n);
            m = m.add(&c.boundary(d + 1).mul(&h[&d]));
            if d > 0 {
                m = m.add(&h[&(d - 1)].mul(&c.boundary(d)));
            }
            m
        };
        comps.insert(d, m);
    }
    ChainMap::new(c.clone(), c.clone(), 0, comps).unwrap()
}

#[test]
fn cones_have_exact_long_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for trial in 0..60 {
        let (dims, d, single) = scrambled_complex(&mut rng, 3);
        let c = Arc::new(build(&dims, &d));
        let zero = trial % 2 == 0;
        let f = random_chain_map(&mut rng, &c, zero);
        assert!(f.commutation_failures(DegreeRange::ALL).is_empty());
        let seq = cone(&f).unwrap();
        seq.cone.check_d2().unwrap();
        let h = seq.cone.homology_dims().unwrap();
        for (&deg, &n) in &h {
            let expect = if zero {
                single.get(deg as usize).copied().unwrap_or(0) + single.get((deg - 1) as usize).copied().unwrap_or(0)
            } else {
                0
            };
            assert_eq!(n, expect, "trial {trial} degree {deg}");
        }
        let range = DegreeRange::new(-1, 5);
        let mut r = exactness_check(&f, &seq.inclusion, range).unwrap();
        r.extend(exactness_check(&seq.inclusion, &seq.projection, range).unwrap());
        r.extend(exactness_check(&seq.projection, &f, range).unwrap());
        assert!(r.all_exact(), "trial {trial}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn non_chain_maps_are_flagged() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let c = loop {
        let (dims, d, _) = scrambled_complex(&mut rng, 3);
        if d.values().any(|m| m.iter().flatten().any(|&x| x == 1)) {
            break Arc::new(build(&dims, &d));
        }
    };
    // The identity plus one stray entry next to a nonzero boundary.
    let d = (1..=3).find(|&d| !c.boundary(d).is_zero()).unwrap();
    let mut comps: BTreeMap<i64, SparseF2Matrix> = (0..=3).map(|k| (k, SparseF2Matrix::identity(c.dim(k)))).collect();
    let (r, _) = c.boundary(d).entries().next().unwrap();
    comps.get_mut(&(d - 1)).unwrap().toggle(r, r);
    let f = ChainMap::new(c.clone(), c.clone(), 0, comps).unwrap();
    assert!(!f.commutation_failures(DegreeRange::ALL).is_empty());
    let seq = cone(&f).unwrap();
    let report = exactness_check(&f, &seq.inclusion, DegreeRange::new(0, 3)).unwrap();
    assert!(report.nodes.iter().any(|n| n.status == NodeStatus::NotChainMap));
}

proptest! {
    #[test]
    fn rank_and_kernel_agree_with_dense_reduction(
        rows in 1usize..12,
        cols in 1usize..12,
        bits in proptest::collection::vec(any::<bool>(), 144)
    ) {
        let dense_m: Vec<Vec<u8>> = (0..rows).map(|r| (0..cols).map(|c| bits[r * 12 + c] as u8).collect()).collect();
        let m = SparseF2Matrix::from_dense(&dense_m);
        prop_assert_eq!(dense(&m), dense_m.clone());
        prop_assert_eq!(m.rank(), dense_rank(&dense_m));
        let k = m.kernel_basis();
        prop_assert_eq!(k.len(), cols - m.rank());
        for v in &k {
            prop_assert!(m.apply(v).is_empty());
        }
        prop_assert_eq!(m.transpose().rank(), m.rank());
        prop_assert_eq!(m.transpose().transpose(), m);
    }
}
