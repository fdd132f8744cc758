//! Labels, per-entity label domains, and the decomposition outputs shared by
//! the algorithms and the checkers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::VertexId;

/// A tuple label `<tag, value>`.
///
/// The canonical scalar is `tag * stride + value` where `stride` is the width
/// of the value range of a run, so for `tags` distinct tags the scalars fill
/// exactly `0..tags * stride`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label {
    pub tag: u64,
    pub value: u64,
}

impl Label {
    pub fn new(tag: u64, value: u64) -> Self {
        Label { tag, value }
    }

    pub fn encode(self, stride: u64) -> u64 {
        assert!(self.value < stride, "value {} does not fit stride {stride}", self.value);
        self.tag * stride + self.value
    }

    pub fn decode(code: u64, stride: u64) -> Self {
        Label { tag: code / stride, value: code % stride }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntityKind {
    Vertex,
    Edge,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("{kind:?} {entity}: label {label} outside palette of size {palette}")]
    OutOfPalette { kind: EntityKind, entity: usize, label: u64, palette: u64 },
    #[error("stride must be positive")]
    ZeroStride,
}

/// Per-entity sets of admissible labels: the output of a generic algorithm.
///
/// Domains are kept sorted and deduplicated. An empty domain is representable
/// so that failed runs can still be reported and checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelDomain {
    entity: EntityKind,
    /// Size of the problem domain: every label lies in `0..palette`.
    palette: u64,
    stride: u64,
    domains: Vec<Vec<u64>>,
}

impl LabelDomain {
    pub fn new(
        entity: EntityKind,
        palette: u64,
        stride: u64,
        mut domains: Vec<Vec<u64>>,
    ) -> Result<Self, LabelError> {
        if stride == 0 {
            return Err(LabelError::ZeroStride);
        }
        for (i, d) in domains.iter_mut().enumerate() {
            d.sort_unstable();
            d.dedup();
            if let Some(&last) = d.last() {
                if last >= palette {
                    return Err(LabelError::OutOfPalette { kind: entity, entity: i, label: last, palette });
                }
            }
        }
        Ok(LabelDomain { entity, palette, stride, domains })
    }

    /// Domains given as tuples with `tags` distinct tag values.
    pub fn from_labels(
        entity: EntityKind,
        tags: u64,
        stride: u64,
        labels: Vec<Vec<Label>>,
    ) -> Result<Self, LabelError> {
        if stride == 0 {
            return Err(LabelError::ZeroStride);
        }
        let domains = labels
            .into_iter()
            .map(|d| d.into_iter().map(|l| l.encode(stride)).collect())
            .collect();
        Self::new(entity, tags * stride, stride, domains)
    }

    pub fn entity(&self) -> EntityKind {
        self.entity
    }

    pub fn palette(&self) -> u64 {
        self.palette
    }

    pub fn stride(&self) -> u64 {
        self.stride
    }

    pub fn len(&self) -> usize {
        self.domains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domains.is_empty()
    }

    pub fn domain(&self, i: usize) -> &[u64] {
        &self.domains[i]
    }

    pub fn domains(&self) -> &[Vec<u64>] {
        &self.domains
    }

    pub fn contains(&self, i: usize, label: u64) -> bool {
        self.domains[i].binary_search(&label).is_ok()
    }

    pub fn labels(&self, i: usize) -> impl Iterator<Item = Label> + '_ {
        self.domains[i].iter().map(move |&c| Label::decode(c, self.stride))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.domains.iter().map(Vec::len).collect()
    }

    /// Solution-domain size: the smallest domain. `None` when there are no
    /// entities.
    pub fn min_size(&self) -> Option<usize> {
        self.domains.iter().map(Vec::len).min()
    }
}

/// Cluster membership from one clustering run: `(run, phase, center)`.
///
/// Equal labels mean the same cluster of the same run. Clusters formed in the
/// same phase of a run are never adjacent, so `(run, phase)` is a proper color
/// of the cluster graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClusterLabel {
    pub run: u32,
    pub phase: u32,
    pub center: u32,
}

impl ClusterLabel {
    /// Encoding as a [`Label`] with `tag = run` and
    /// `value = phase * n + center`. `stride` must exceed every value.
    pub fn encode(self, n: usize, stride: u64) -> u64 {
        Label::new(self.run as u64, self.phase as u64 * n as u64 + self.center as u64).encode(stride)
    }

    pub fn decode(code: u64, n: usize, stride: u64) -> Self {
        let l = Label::decode(code, stride);
        ClusterLabel {
            run: l.tag as u32,
            phase: (l.value / n as u64) as u32,
            center: (l.value % n as u64) as u32,
        }
    }

    pub fn color_class(self) -> (u32, u32) {
        (self.run, self.phase)
    }
}

/// Assignment of every edge to one of `forest_count` forests, numbered from 1,
/// together with the orientation that produced it (`sources[e]` chose the
/// label of `e`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestLabeling {
    pub forest_count: usize,
    pub edge_labels: Vec<usize>,
    pub sources: Vec<VertexId>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn expanded_tuple_domain() {
        let labels = vec![(0..3).map(|i| Label::new(i, 2)).collect::<Vec<_>>()];
        let d = LabelDomain::from_labels(EntityKind::Vertex, 3, 3, labels).unwrap();
        assert_eq!(d.palette(), 9);
        assert_eq!(d.domain(0), &[2, 5, 8]);
        let back: Vec<_> = d.labels(0).collect();
        assert_eq!(back, vec![Label::new(0, 2), Label::new(1, 2), Label::new(2, 2)]);
    }

    #[test]
    fn rejects_out_of_palette() {
        let err = LabelDomain::new(EntityKind::Edge, 4, 4, vec![vec![1], vec![4]]).unwrap_err();
        assert_eq!(
            err,
            LabelError::OutOfPalette { kind: EntityKind::Edge, entity: 1, label: 4, palette: 4 }
        );
    }

    #[test]
    fn serializes_with_fixed_field_order() {
        let d = LabelDomain::new(EntityKind::Vertex, 6, 6, vec![vec![3, 1], vec![]]).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"entity":"vertex","palette":6,"stride":6,"domains":[[1,3],[]]}"#);
        assert_eq!(d.min_size(), Some(0));
    }

    proptest! {
        #[test]
        fn label_encoding_is_injective(
            tag_a in 0u64..50, tag_b in 0u64..50, stride in 1u64..64, va in 0u64..64, vb in 0u64..64,
        ) {
            let (va, vb) = (va % stride, vb % stride);
            let a = Label::new(tag_a, va);
            let b = Label::new(tag_b, vb);
            prop_assert_eq!(a.encode(stride) == b.encode(stride), a == b);
            prop_assert_eq!(Label::decode(a.encode(stride), stride), a);
        }

        #[test]
        fn cluster_label_round_trips(run in 0u32..8, phase in 0u32..40, center in 0u32..500) {
            let n = 500;
            let stride = 40 * n as u64;
            let l = ClusterLabel { run, phase, center };
            prop_assert_eq!(ClusterLabel::decode(l.encode(n, stride), n, stride), l);
        }
    }
}
