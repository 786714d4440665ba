//! Exactness of sequences induced on homology.

use serde::Serialize;

use super::{ChainComplex, ChainMap, DegreeRange, F2Error, SparseF2Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NodeStatus {
    Exact { dim: usize },
    NotExact { image_dim: usize, kernel_dim: usize, image_in_kernel: bool },
    /// One of the maps does not commute with the boundaries near this node.
    NotChainMap,
    /// Some involved degree lies outside a trusted range.
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeResult {
    /// Degree of the middle term.
    pub degree: i64,
    #[serde(flatten)]
    pub status: NodeStatus,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ExactnessReport {
    pub nodes: Vec<NodeResult>,
}

impl ExactnessReport {
    /// True when no checked node failed and at least one node was checked.
    pub fn all_exact(&self) -> bool {
        self.nodes.iter().any(|n| matches!(n.status, NodeStatus::Exact { .. }))
            && self
                .nodes
                .iter()
                .all(|n| matches!(n.status, NodeStatus::Exact { .. } | NodeStatus::Skipped))
    }

    pub fn failures(&self) -> impl Iterator<Item = &NodeResult> {
        self.nodes
            .iter()
            .filter(|n| !matches!(n.status, NodeStatus::Exact { .. } | NodeStatus::Skipped))
    }

    pub fn skipped(&self) -> usize {
        self.nodes.iter().filter(|n| n.status == NodeStatus::Skipped).count()
    }

    pub fn extend(&mut self, other: ExactnessReport) {
        self.nodes.extend(other.nodes);
    }
}

fn cycles(c: &ChainComplex, d: i64) -> Vec<Vec<u32>> {
    match c.boundary_ref(d) {
        Some(b) => b.kernel_basis(),
        None => Vec::new(),
    }
}

fn boundaries(c: &ChainComplex, d: i64) -> SparseF2Matrix {
    c.boundary(d + 1)
}

/// Checks `im f_* = ker g_*` in `H(Y)_d` for every `d` in `degrees`, where
/// `f: X → Y` and `g: Y → Z` are chain maps with arbitrary degree shifts.
pub fn exactness_check(f: &ChainMap, g: &ChainMap, degrees: DegreeRange) -> Result<ExactnessReport, F2Error> {
    let y = &f.target;
    if y.degrees() != g.source.degrees() || (y.min_degree()..=y.max_degree()).any(|d| y.dim(d) != g.source.dim(d)) {
        return Err(F2Error::Shape("maps are not composable".into()));
    }
    let (x, z) = (&f.source, &g.target);
    let mut report = ExactnessReport::default();
    for d in degrees.iter() {
        let dx = d - f.shift;
        let dz = d + g.shift;
        let trusted = y.trusted_range().contains(d)
            && x.trusted_range().contains(dx)
            && z.trusted_range().contains(dz);
        if !trusted {
            report.nodes.push(NodeResult {
                degree: d,
                status: NodeStatus::Skipped,
            });
            continue;
        }
        // f must carry cycles to cycles and boundaries to boundaries; likewise g.
        if !f.commutes_at(dx) || !f.commutes_at(dx + 1) || !g.commutes_at(d) || !g.commutes_at(d + 1) {
            report.nodes.push(NodeResult {
                degree: d,
                status: NodeStatus::NotChainMap,
            });
            continue;
        }
        let by = boundaries(y, d);
        let rb_y = by.rank();
        let zy = cycles(y, d);

        let fx = f.component(dx);
        let f_zx: Vec<Vec<u32>> = cycles(x, dx).iter().map(|v| fx.apply(v)).collect();
        let image_dim = by.hstack(&SparseF2Matrix::from_vectors(y.dim(d), f_zx.clone())).rank() - rb_y;

        let gy = g.component(d);
        let bz = boundaries(z, dz);
        let rb_z = bz.rank();
        let g_zy: Vec<Vec<u32>> = zy.iter().map(|v| gy.apply(v)).collect();
        let escaping = bz.hstack(&SparseF2Matrix::from_vectors(z.dim(dz), g_zy)).rank() - rb_z;
        let kernel_dim = zy.len().saturating_sub(escaping + rb_y);

        let gf_zx: Vec<Vec<u32>> = f_zx.iter().map(|v| gy.apply(v)).collect();
        let image_in_kernel = bz.hstack(&SparseF2Matrix::from_vectors(z.dim(dz), gf_zx)).rank() == rb_z;

        let status = if image_in_kernel && image_dim == kernel_dim {
            NodeStatus::Exact { dim: image_dim }
        } else {
            NodeStatus::NotExact {
                image_dim,
                kernel_dim,
                image_in_kernel,
            }
        };
        report.nodes.push(NodeResult { degree: d, status });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::cone;
    use super::*;
    use std::collections::BTreeMap;
    use std::sync::Arc;

    #[test]
    fn cone_sequence_is_exact() {
        // X: F2 in degree 1 mapping diagonally into F2^2 in degree 0.
        let x = Arc::new(
            ChainComplex::from_dims(
                0,
                &[2, 1],
                vec![SparseF2Matrix::zeros(0, 2), SparseF2Matrix::from_dense(&[vec![1], vec![1]])],
                DegreeRange::ALL,
            )
            .unwrap(),
        );
        let y = Arc::new(
            ChainComplex::from_dims(0, &[1, 1], vec![SparseF2Matrix::zeros(0, 1), SparseF2Matrix::zeros(1, 1)], DegreeRange::ALL)
                .unwrap(),
        );
        let f = ChainMap::new(
            x.clone(),
            y.clone(),
            0,
            BTreeMap::from([(0, SparseF2Matrix::from_dense(&[vec![1, 1]])), (1, SparseF2Matrix::zeros(1, 1))]),
        )
        .unwrap();
        let seq = cone(&f).unwrap();
        let range = DegreeRange::new(-1, 3);
        let mut r = exactness_check(&f, &seq.inclusion, range).unwrap();
        r.extend(exactness_check(&seq.inclusion, &seq.projection, range).unwrap());
        r.extend(exactness_check(&seq.projection, &f, range).unwrap());
        assert!(r.all_exact(), "{r:?}");
    }
}
