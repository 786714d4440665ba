use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::{F2Error, SparseF2Matrix};

/// An interval of degrees. `i64::MIN` / `i64::MAX` bounds mean unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRange {
    pub lo: i64,
    pub hi: i64,
}

impl DegreeRange {
    pub const ALL: DegreeRange = DegreeRange {
        lo: i64::MIN,
        hi: i64::MAX,
    };

    pub fn new(lo: i64, hi: i64) -> Self {
        DegreeRange { lo, hi }
    }

    pub fn empty() -> Self {
        DegreeRange { lo: 1, hi: 0 }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, d: i64) -> bool {
        self.lo <= d && d <= self.hi
    }

    pub fn intersect(&self, other: &DegreeRange) -> DegreeRange {
        DegreeRange {
            lo: self.lo.max(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    /// Shifts both finite bounds by `s`; unbounded ends stay unbounded.
    pub fn shift(&self, s: i64) -> DegreeRange {
        let mv = |x: i64| {
            if x == i64::MIN || x == i64::MAX {
                x
            } else {
                x + s
            }
        };
        DegreeRange {
            lo: mv(self.lo),
            hi: mv(self.hi),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        let (lo, hi) = (self.lo, self.hi);
        (lo..=hi).take_while(move |_| lo <= hi)
    }
}

impl fmt::Display for DegreeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "(empty)");
        }
        let show = |x: i64| match x {
            i64::MIN => "-inf".to_string(),
            i64::MAX => "+inf".to_string(),
            x => x.to_string(),
        };
        write!(f, "{}..{}", show(self.lo), show(self.hi))
    }
}

/// A bounded chain complex of finite-dimensional F2 spaces.
///
/// Degrees run over `[min_degree, max_degree]`; `boundary(d)` maps degree `d`
/// to degree `d - 1`. Spaces outside the stored interval are zero.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    min_degree: i64,
    labels: Vec<Vec<String>>,
    boundaries: Vec<SparseF2Matrix>,
    trusted: DegreeRange,
}

/// Homology dimensions by degree, restricted to trusted degrees.
pub type BettiTable = BTreeMap<i64, usize>;

impl ChainComplex {
    /// Builds a complex from per-degree labels (starting at `min_degree`) and
    /// boundary matrices; `boundaries[i]` is the boundary out of degree
    /// `min_degree + i`, and `boundaries[0]` must have zero rows.
    pub fn new(
        min_degree: i64,
        labels: Vec<Vec<String>>,
        boundaries: Vec<SparseF2Matrix>,
        trusted: DegreeRange,
    ) -> Result<Self, F2Error> {
        if labels.len() != boundaries.len() {
            return Err(F2Error::Shape(format!(
                "{} label lists but {} boundary matrices",
                labels.len(),
                boundaries.len()
            )));
        }
        for (i, b) in boundaries.iter().enumerate() {
            let d = min_degree + i as i64;
            let src = labels[i].len();
            let tgt = if i == 0 { 0 } else { labels[i - 1].len() };
            if b.cols() != src || b.rows() != tgt {
                return Err(F2Error::Shape(format!(
                    "boundary out of degree {d} is {}x{}, expected {tgt}x{src}",
                    b.rows(),
                    b.cols()
                )));
            }
        }
        Ok(ChainComplex {
            min_degree,
            labels,
            boundaries,
            trusted,
        })
    }

    /// Builds a complex from bare dimensions with generated labels.
    pub fn from_dims(
        min_degree: i64,
        dims: &[usize],
        boundaries: Vec<SparseF2Matrix>,
        trusted: DegreeRange,
    ) -> Result<Self, F2Error> {
        let labels = dims
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                let d = min_degree + i as i64;
                (0..n).map(|j| format!("d{d}_{j}")).collect()
            })
            .collect();
        Self::new(min_degree, labels, boundaries, trusted)
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.labels.len() as i64 - 1
    }

    pub fn degrees(&self) -> DegreeRange {
        DegreeRange::new(self.min_degree(), self.max_degree())
    }

    pub fn trusted_range(&self) -> DegreeRange {
        self.trusted
    }

    /// Trusted degrees that are actually stored.
    pub fn trusted_stored(&self) -> DegreeRange {
        self.trusted.intersect(&self.degrees())
    }

    pub fn with_trusted_range(mut self, trusted: DegreeRange) -> Self {
        self.trusted = trusted;
        self
    }

    fn slot(&self, d: i64) -> Option<usize> {
        if d < self.min_degree || d > self.max_degree() {
            None
        } else {
            Some((d - self.min_degree) as usize)
        }
    }

    pub fn dim(&self, d: i64) -> usize {
        self.slot(d).map_or(0, |i| self.labels[i].len())
    }

    pub fn labels(&self, d: i64) -> &[String] {
        self.slot(d).map_or(&[], |i| &self.labels[i])
    }

    pub fn total_dim(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    /// Boundary from degree `d` to `d - 1` (a zero matrix outside storage).
    pub fn boundary(&self, d: i64) -> SparseF2Matrix {
        match self.slot(d) {
            Some(i) => self.boundaries[i].clone(),
            None => SparseF2Matrix::zeros(self.dim(d - 1), self.dim(d)),
        }
    }

    pub fn boundary_ref(&self, d: i64) -> Option<&SparseF2Matrix> {
        self.slot(d).map(|i| &self.boundaries[i])
    }

    /// Degrees `d` in `range` where `boundary(d-1) * boundary(d) != 0`.
    pub fn d2_failures(&self, range: DegreeRange) -> Vec<i64> {
        let span = range.intersect(&DegreeRange::new(self.min_degree + 2, self.max_degree()));
        span.iter()
            .filter(|&d| {
                let a = &self.boundaries[self.slot(d).unwrap()];
                let b = &self.boundaries[self.slot(d - 1).unwrap()];
                !b.mul(a).is_zero()
            })
            .collect()
    }

    /// Checks the square-zero condition on every pair with both degrees trusted.
    pub fn check_d2(&self) -> Result<(), F2Error> {
        let t = self.trusted_stored();
        let bad = self.d2_failures(DegreeRange::new(t.lo.saturating_add(1), t.hi));
        if bad.is_empty() {
            Ok(())
        } else {
            Err(F2Error::NotAComplex(bad))
        }
    }

    fn rank_of(&self, d: i64) -> usize {
        self.boundary_ref(d).map_or(0, SparseF2Matrix::rank)
    }

    /// Homology dimensions `dim ker ∂_d - rank ∂_{d+1}` on every stored trusted degree.
    pub fn homology_dims(&self) -> Result<BettiTable, F2Error> {
        self.check_d2()?;
        Ok(self.homology_dims_unchecked(self.trusted_stored()))
    }

    /// Homology dimensions on `range` without consulting the trusted range.
    pub fn homology_dims_unchecked(&self, range: DegreeRange) -> BettiTable {
        let range = range.intersect(&self.degrees());
        let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
        let mut rank = |d: i64| *ranks.entry(d).or_insert_with(|| self.rank_of(d));
        let mut out = BTreeMap::new();
        for d in range.iter() {
            let h = self.dim(d) - rank(d) - rank(d + 1);
            out.insert(d, h);
        }
        out
    }
}

/// A degree-`shift` chain map: `component(d)` sends source degree `d` to
/// target degree `d + shift`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: Arc<ChainComplex>,
    pub target: Arc<ChainComplex>,
    pub shift: i64,
    components: BTreeMap<i64, SparseF2Matrix>,
}

impl ChainMap {
    pub fn new(
        source: Arc<ChainComplex>,
        target: Arc<ChainComplex>,
        shift: i64,
        components: BTreeMap<i64, SparseF2Matrix>,
    ) -> Result<Self, F2Error> {
        for (&d, m) in &components {
            if m.cols() != source.dim(d) || m.rows() != target.dim(d + shift) {
                return Err(F2Error::Shape(format!(
                    "component at degree {d} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    target.dim(d + shift),
                    source.dim(d)
                )));
            }
        }
        Ok(ChainMap {
            source,
            target,
            shift,
            components,
        })
    }

    pub fn component(&self, d: i64) -> SparseF2Matrix {
        self.components
            .get(&d)
            .cloned()
            .unwrap_or_else(|| SparseF2Matrix::zeros(self.target.dim(d + self.shift), self.source.dim(d)))
    }

    pub fn components_mut(&mut self) -> &mut BTreeMap<i64, SparseF2Matrix> {
        &mut self.components
    }

    /// Whether `∂ f = f ∂` out of source degree `d`.
    pub fn commutes_at(&self, d: i64) -> bool {
        let lhs = self.target.boundary(d + self.shift).mul(&self.component(d));
        let rhs = self.component(d - 1).mul(&self.source.boundary(d));
        lhs == rhs
    }

    /// Source degrees in `range` where the map fails to commute with boundaries.
    pub fn commutation_failures(&self, range: DegreeRange) -> Vec<i64> {
        range
            .intersect(&self.source.degrees())
            .iter()
            .filter(|&d| !self.commutes_at(d))
            .collect()
    }
}

/// The mapping cone of `f: X → Y` together with the maps of its long exact sequence.
#[derive(Clone, Debug)]
pub struct ConeSequence {
    pub cone: Arc<ChainComplex>,
    /// `Y → Cone(f)`.
    pub inclusion: ChainMap,
    /// `Cone(f) → X`, lowering degree by one.
    pub projection: ChainMap,
}

/// Mapping cone with `Cone(f)_d = X_{d-1} ⊕ Y_d` and `∂(x, y) = (∂x, f(x) + ∂y)`.
///
/// A degree is trusted when both it and the degree below are trusted in both
/// source and target.
pub fn cone(f: &ChainMap) -> Result<ConeSequence, F2Error> {
    if f.shift != 0 {
        return Err(F2Error::Shape(format!("cone needs a degree-0 map, got shift {}", f.shift)));
    }
    let (x, y) = (&f.source, &f.target);
    let lo = (x.min_degree() + 1).min(y.min_degree());
    let hi = (x.max_degree() + 1).max(y.max_degree());
    let mut labels = Vec::new();
    let mut boundaries = Vec::new();
    for d in lo..=hi {
        let (nx, ny) = (x.dim(d - 1), y.dim(d));
        let mut l: Vec<String> = x.labels(d - 1).iter().map(|s| format!("x:{s}")).collect();
        l.extend(y.labels(d).iter().map(|s| format!("y:{s}")));
        labels.push(l);

        let (px, py) = (x.dim(d - 2), y.dim(d - 1));
        let rows = if d == lo { 0 } else { px + py };
        let mut cols: Vec<Vec<u32>> = Vec::with_capacity(nx + ny);
        if d == lo {
            cols.resize(nx + ny, Vec::new());
        } else {
            let dx = x.boundary(d - 1);
            let fx = f.component(d - 1);
            let dy = y.boundary(d);
            for j in 0..nx {
                let mut c: Vec<u32> = dx.column(j).to_vec();
                c.extend(fx.column(j).iter().map(|&r| r + px as u32));
                cols.push(c);
            }
            for j in 0..ny {
                cols.push(dy.column(j).iter().map(|&r| r + px as u32).collect());
            }
        }
        boundaries.push(SparseF2Matrix::from_columns(rows, nx + ny, cols));
    }
    let both = x.trusted_range().intersect(&y.trusted_range());
    let trusted = DegreeRange::new(both.lo.saturating_add(1), both.hi);
    let cone = Arc::new(ChainComplex::new(lo, labels, boundaries, trusted)?);

    let mut inc = BTreeMap::new();
    let mut proj = BTreeMap::new();
    for d in lo..=hi {
        let (nx, ny) = (x.dim(d - 1), y.dim(d));
        if ny > 0 {
            inc.insert(
                d,
                SparseF2Matrix::from_columns(nx + ny, ny, (0..ny as u32).map(|j| vec![j + nx as u32]).collect()),
            );
        }
        if nx > 0 {
            let mut cols: Vec<Vec<u32>> = (0..nx as u32).map(|j| vec![j]).collect();
            cols.resize(nx + ny, Vec::new());
            proj.insert(d, SparseF2Matrix::from_columns(nx, nx + ny, cols));
        }
    }
    let inclusion = ChainMap::new(y.clone(), cone.clone(), 0, inc)?;
    let projection = ChainMap::new(cone.clone(), x.clone(), -1, proj)?;
    Ok(ConeSequence {
        cone,
        inclusion,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(d: i64) -> ChainComplex {
        ChainComplex::from_dims(d, &[1], vec![SparseF2Matrix::zeros(0, 1)], DegreeRange::ALL).unwrap()
    }

    #[test]
    fn single_class() {
        let c = point(1);
        assert_eq!(c.homology_dims().unwrap(), BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn identity_step_is_acyclic() {
        let c = ChainComplex::from_dims(
            0,
            &[1, 1],
            vec![SparseF2Matrix::zeros(0, 1), SparseF2Matrix::identity(1)],
            DegreeRange::ALL,
        )
        .unwrap();
        assert_eq!(c.homology_dims().unwrap(), BTreeMap::from([(0, 0), (1, 0)]));
    }

    #[test]
    fn reports_nonzero_square() {
        // F2 -> F2 -> F2 with both maps the identity.
        let c = ChainComplex::from_dims(
            0,
            &[1, 1, 1],
            vec![
                SparseF2Matrix::zeros(0, 1),
                SparseF2Matrix::identity(1),
                SparseF2Matrix::identity(1),
            ],
            DegreeRange::ALL,
        )
        .unwrap();
        match c.homology_dims() {
            Err(F2Error::NotAComplex(d)) => assert_eq!(d, vec![2]),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        let r = ChainComplex::from_dims(0, &[1, 2], vec![SparseF2Matrix::zeros(0, 1), SparseF2Matrix::zeros(1, 1)], DegreeRange::ALL);
        assert!(r.is_err());
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let x = Arc::new(point(0));
        let f = ChainMap::new(x.clone(), x.clone(), 0, BTreeMap::from([(0, SparseF2Matrix::identity(1))])).unwrap();
        let seq = cone(&f).unwrap();
        let h = seq.cone.homology_dims_unchecked(seq.cone.degrees());
        assert!(h.values().all(|&v| v == 0));
    }

    #[test]
    fn cone_of_zero_map_splits() {
        let x = Arc::new(point(0));
        let y = Arc::new(point(0));
        let f = ChainMap::new(x, y, 0, BTreeMap::new()).unwrap();
        let seq = cone(&f).unwrap();
        let h = seq.cone.homology_dims_unchecked(seq.cone.degrees());
        // H(X)[1] ⊕ H(Y): one class in degree 1 and one in degree 0.
        assert_eq!(h, BTreeMap::from([(0, 1), (1, 1)]));
    }

    #[test]
    fn shift_keeps_unbounded_ends() {
        let r = DegreeRange::new(i64::MIN, 3).shift(2);
        assert_eq!(r, DegreeRange::new(i64::MIN, 5));
    }
}
