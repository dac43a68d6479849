//! Simple undirected graphs on dense vertex ids, with the degree machinery,
//! complements, δ-complements, induced subgraphs and Cartesian products.

use std::collections::BTreeMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Default cap on the number of vertices a Cartesian product may have.
pub const DEFAULT_PRODUCT_LIMIT: usize = 10_000;

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: (0..n).map(|_| BitSet::new(n)).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut adj: Vec<BitSet> = (0..n).map(|_| BitSet::full(n)).collect();
        for (v, row) in adj.iter_mut().enumerate() {
            row.remove(v);
        }
        Self { adj }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.adj[v].count())
    }

    /// All degrees, indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BitSet::count).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Neighbor set of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// True when every pair of distinct vertices in `vs` is adjacent.
    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| {
            u < self.n() && vs[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v))
        })
    }

    pub fn degree_partition(&self) -> DegreePartition {
        DegreePartition::of(self)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = BitSet::full(n);
                c.difference_with(row);
                c.remove(v);
                c
            })
            .collect();
        Graph { adj }
    }

    /// The δ-complement: same-degree pairs flip adjacency, pairs of different
    /// degree keep it. Degrees are taken in `self`.
    pub fn delta_complement(&self) -> Graph {
        let n = self.n();
        let part = self.degree_partition();
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let same = &part.class_sets[part.class_of[v]];
            // keep edges to other classes, flip inside the class
            let mut row = self.adj[v].clone();
            row.difference_with(same);
            let mut flipped = same.clone();
            flipped.difference_with(&self.adj[v]);
            flipped.remove(v);
            for u in flipped.iter() {
                row.insert(u);
            }
            adj.push(row);
        }
        Graph { adj }
    }

    /// Subgraph induced by `vs`. Vertex `i` of the result is `vs[i]` after
    /// sorting and deduplication; the returned vector holds that map.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut keep: Vec<usize> = vs.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check(v)?;
        }
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut b = GraphBuilder::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for u in self.adj[v].iter() {
                let j = pos[u];
                if j != usize::MAX && j > i {
                    b.add_edge(i, j)?;
                }
            }
        }
        Ok((b.build(), keep))
    }

    /// Disjoint union; vertices of later graphs are shifted past earlier ones.
    pub fn disjoint_union(gs: &[&Graph]) -> Graph {
        let n = gs.iter().map(|g| g.n()).sum();
        let mut b = GraphBuilder::new(n);
        let mut off = 0;
        for g in gs {
            for (u, v) in g.edges() {
                b.add_edge_unchecked(off + u, off + v);
            }
            off += g.n();
        }
        b.build()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Mutable edge accumulator producing an immutable [`Graph`].
pub struct GraphBuilder {
    adj: Vec<BitSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            adj: (0..n).map(|_| BitSet::new(n)).collect(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge_unchecked(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn build(self) -> Graph {
        Graph { adj: self.adj }
    }
}

/// One class of a degree partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeClass {
    pub degree: usize,
    pub vertices: Vec<usize>,
}

/// Vertices grouped by degree, classes in increasing degree order.
#[derive(Clone, Debug)]
pub struct DegreePartition {
    classes: Vec<DegreeClass>,
    class_of: Vec<usize>,
    class_sets: Vec<BitSet>,
}

impl DegreePartition {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, d) in g.degrees().into_iter().enumerate() {
            by_degree.entry(d).or_default().push(v);
        }
        let mut class_of = vec![0; n];
        let mut classes = Vec::with_capacity(by_degree.len());
        let mut class_sets = Vec::with_capacity(by_degree.len());
        for (i, (degree, vertices)) in by_degree.into_iter().enumerate() {
            let mut set = BitSet::new(n);
            for &v in &vertices {
                class_of[v] = i;
                set.insert(v);
            }
            class_sets.push(set);
            classes.push(DegreeClass { degree, vertices });
        }
        Self {
            classes,
            class_of,
            class_sets,
        }
    }

    pub fn classes(&self) -> &[DegreeClass] {
        &self.classes
    }

    /// Number of distinct degrees.
    pub fn m(&self) -> usize {
        self.classes.len()
    }

    /// Size of the largest class.
    pub fn n_max(&self) -> usize {
        self.classes
            .iter()
            .map(|c| c.vertices.len())
            .max()
            .unwrap_or(0)
    }

    /// Index of the class holding `v`.
    pub fn class_index(&self, v: usize) -> usize {
        self.class_of[v]
    }

    /// Position of `v` inside its class (vertices sorted increasingly).
    pub fn rank_in_class(&self, v: usize) -> usize {
        let class = &self.classes[self.class_of[v]];
        class
            .vertices
            .binary_search(&v)
            .expect("vertex belongs to its class")
    }
}

/// Row-major mixed-radix map between coordinate tuples and flat vertex ids;
/// the last coordinate varies fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIndex {
    sizes: Vec<usize>,
    strides: Vec<usize>,
    total: usize,
}

impl ProductIndex {
    pub fn new(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::EmptyFactorList);
        }
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::EmptyFactor(i));
        }
        let mut strides = vec![1; sizes.len()];
        for i in (0..sizes.len() - 1).rev() {
            strides[i] = strides[i + 1] * sizes[i + 1];
        }
        let total = sizes
            .iter()
            .try_fold(1usize, |acc, &s| acc.checked_mul(s))
            .unwrap_or(usize::MAX);
        Ok(Self {
            sizes: sizes.to_vec(),
            strides,
            total,
        })
    }

    pub fn factor_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn stride(&self, i: usize) -> usize {
        self.strides[i]
    }

    pub fn flat(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.sizes.len());
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub fn unflat(&self, mut v: usize) -> Vec<usize> {
        debug_assert!(v < self.total);
        self.strides
            .iter()
            .map(|&s| {
                let c = v / s;
                v %= s;
                c
            })
            .collect()
    }

    /// Coordinate `i` of flat vertex `v`.
    #[inline]
    pub fn coord(&self, v: usize, i: usize) -> usize {
        (v / self.strides[i]) % self.sizes[i]
    }

    /// Number of coordinates in which `u` and `v` differ.
    pub fn hamming(&self, u: usize, v: usize) -> usize {
        (0..self.k())
            .filter(|&i| self.coord(u, i) != self.coord(v, i))
            .count()
    }
}

/// Cartesian product of `gs` under the default size limit.
pub fn cartesian_product(gs: &[&Graph]) -> Result<(Graph, ProductIndex)> {
    cartesian_product_with_limit(gs, DEFAULT_PRODUCT_LIMIT)
}

pub fn cartesian_product_with_limit(gs: &[&Graph], limit: usize) -> Result<(Graph, ProductIndex)> {
    let sizes: Vec<usize> = gs.iter().map(|g| g.n()).collect();
    let index = ProductIndex::new(&sizes)?;
    if index.total() > limit {
        return Err(Error::ProductTooLarge {
            size: index.total(),
            limit,
        });
    }
    let mut b = GraphBuilder::new(index.total());
    for v in 0..index.total() {
        for (i, g) in gs.iter().enumerate() {
            let c = index.coord(v, i);
            let base = v - c * index.stride(i);
            for w in g.neighbors(c).iter().filter(|&w| w > c) {
                b.add_edge_unchecked(v, base + w * index.stride(i));
            }
        }
    }
    Ok((b.build(), index))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(p: usize) -> Graph {
        Graph::from_edges(p + 1, (1..=p).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(path(4).degree(0).unwrap(), 1);
        assert!((0..5).all(|v| cycle(5).degree(v).unwrap() == 2));
        assert_eq!(star(4).degree(0).unwrap(), 4);
        assert!(matches!(
            path(4).degree(4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn degree_partition_examples() {
        let p = star(3).degree_partition();
        assert_eq!(
            p.classes(),
            &[
                DegreeClass {
                    degree: 1,
                    vertices: vec![1, 2, 3]
                },
                DegreeClass {
                    degree: 3,
                    vertices: vec![0]
                },
            ]
        );
        assert_eq!((p.m(), p.n_max()), (2, 3));

        let p = path(5).degree_partition();
        assert_eq!(p.classes()[0].vertices, vec![0, 4]);
        assert_eq!(p.classes()[1].vertices, vec![1, 2, 3]);
        assert_eq!((p.m(), p.n_max()), (2, 3));

        let p = Graph::complete(4).degree_partition();
        assert_eq!((p.m(), p.n_max()), (1, 4));

        let p = Graph::empty(0).degree_partition();
        assert_eq!((p.m(), p.n_max()), (0, 0));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let c = Graph::complete(6).complement();
        assert_eq!(c, Graph::empty(6));
    }

    #[test]
    fn delta_complement_of_p4_is_a_path() {
        let d = path(4).delta_complement();
        assert_eq!(d.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (2, 3)]);
    }

    #[test]
    fn delta_complement_of_star3_is_k4() {
        assert_eq!(star(3).delta_complement(), Graph::complete(4));
    }

    #[test]
    fn delta_complement_of_regular_graph_is_complement() {
        for n in 3..9 {
            assert_eq!(cycle(n).delta_complement(), cycle(n).complement());
        }
    }

    #[test]
    fn product_examples() {
        let p2 = path(2);
        let (sq, _) = cartesian_product(&[&p2, &p2]).unwrap();
        assert_eq!(
            sq.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 3), (2, 3)]
        );

        let (g, _) = cartesian_product(&[&path(6), &path(7)]).unwrap();
        assert_eq!(g.edge_count(), 71);

        let k1 = Graph::empty(1);
        let h = star(4);
        let (g, _) = cartesian_product(&[&k1, &h]).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn product_errors() {
        assert!(matches!(
            cartesian_product(&[]),
            Err(Error::EmptyFactorList)
        ));
        let e = Graph::empty(0);
        assert!(matches!(
            cartesian_product(&[&path(2), &e]),
            Err(Error::EmptyFactor(1))
        ));
        let big = path(200);
        assert!(matches!(
            cartesian_product(&[&big, &big]),
            Err(Error::ProductTooLarge {
                size: 40_000,
                limit: DEFAULT_PRODUCT_LIMIT
            })
        ));
    }

    #[test]
    fn product_index_round_trip() {
        let idx = ProductIndex::new(&[2, 3, 4]).unwrap();
        assert_eq!(idx.total(), 24);
        assert_eq!(idx.flat(&[0, 0, 1]), 1);
        assert_eq!(idx.flat(&[1, 0, 0]), 12);
        for v in 0..24 {
            assert_eq!(idx.flat(&idx.unflat(v)), v);
        }
        assert_eq!(idx.hamming(idx.flat(&[1, 2, 3]), idx.flat(&[1, 0, 0])), 2);
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = cycle(6);
        let (all, map) = g.induced_subgraph(&(0..6).collect::<Vec<_>>()).unwrap();
        assert_eq!(all, g);
        assert_eq!(map, (0..6).collect::<Vec<_>>());

        let (none, _) = g.induced_subgraph(&[]).unwrap();
        assert_eq!(none.n(), 0);

        let (g67, _) = cartesian_product(&[&path(6), &path(7)]).unwrap();
        let v4: Vec<usize> = (0..g67.n())
            .filter(|&v| g67.degree(v).unwrap() == 4)
            .collect();
        let (sub, _) = g67.induced_subgraph(&v4).unwrap();
        assert_eq!(sub.n(), (6 - 2) * (7 - 2));

        assert!(g.induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn is_clique_checks_pairs() {
        let g = Graph::complete(4);
        assert!(g.is_clique(&[0, 1, 3]));
        assert!(!g.is_clique(&[0, 0]));
        assert!(!path(3).is_clique(&[0, 1, 2]));
    }
}
