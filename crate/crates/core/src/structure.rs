//! Decomposition of the δ-complement of a k-fold Cartesian product into the
//! product of factor δ-complements plus the extra edge set `S`.
//!
//! `S` holds the pairs of product vertices that differ in at least two
//! coordinates and have equal product degree.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::graph::{cartesian_product, Graph, ProductIndex};

pub type Edge = (usize, usize);

#[derive(Clone, Debug)]
pub struct DeltaProductDecomposition {
    pub index: ProductIndex,
    pub product: Graph,
    pub delta_of_product: Graph,
    pub product_of_deltas: Graph,
    /// Sorted, each pair `(a, b)` with `a < b`.
    pub extra_edges: Vec<Edge>,
}

impl DeltaProductDecomposition {
    /// `E(delta_of_product) = E(product_of_deltas) ∪ S`, compared as sets.
    pub fn union_identity_holds(&self) -> bool {
        let mut rhs: Vec<Edge> = self.product_of_deltas.edges().collect();
        rhs.extend_from_slice(&self.extra_edges);
        rhs.sort_unstable();
        rhs.dedup();
        rhs.into_iter().eq(self.delta_of_product.edges())
    }

    /// No pair of `S` is an edge of the product of δ-complements.
    pub fn is_disjoint(&self) -> bool {
        self.extra_edges
            .iter()
            .all(|&(a, b)| !self.product_of_deltas.has_edge(a, b))
    }
}

fn product_of(gs: &[Graph]) -> Result<(Graph, ProductIndex)> {
    let refs: Vec<&Graph> = gs.iter().collect();
    cartesian_product(&refs)
}

/// `S` for the product of `gs`, computed by bucketing product vertices by
/// degree and keeping same-bucket pairs at Hamming distance ≥ 2.
pub fn extra_edge_set(gs: &[Graph]) -> Result<Vec<Edge>> {
    let (product, index) = product_of(gs)?;
    Ok(extra_edges_of(&product, &index))
}

pub(crate) fn extra_edges_of(product: &Graph, index: &ProductIndex) -> Vec<Edge> {
    let mut buckets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, d) in product.degrees().into_iter().enumerate() {
        buckets.entry(d).or_default().push(v);
    }
    let mut out = Vec::new();
    for bucket in buckets.values() {
        for (i, &u) in bucket.iter().enumerate() {
            for &v in &bucket[i + 1..] {
                if index.hamming(u, v) >= 2 {
                    out.push((u, v));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn delta_of_product(gs: &[Graph]) -> Result<DeltaProductDecomposition> {
    let (product, index) = product_of(gs)?;
    let deltas: Vec<Graph> = gs.iter().map(Graph::delta_complement).collect();
    let (product_of_deltas, _) = product_of(&deltas)?;
    let extra_edges = extra_edges_of(&product, &index);
    Ok(DeltaProductDecomposition {
        delta_of_product: product.delta_complement(),
        index,
        product,
        product_of_deltas,
        extra_edges,
    })
}

/// Whether `(G_1 □ … □ G_k)_δ = (G_1)_δ □ … □ (G_k)_δ`: true exactly when at
/// most one factor has two or more vertices.
pub fn equality_holds(gs: &[Graph]) -> bool {
    gs.iter().filter(|g| g.n() >= 2).count() <= 1
}
