//! Maximum clique by branch-and-bound over bitsets, pruning with greedy
//! coloring bounds (Tomita-style MCQ on bit-parallel candidate sets).

use crate::bitset::BitSet;
use crate::graph::Graph;

pub const DEFAULT_CLIQUE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    /// Sorted vertex ids, pairwise adjacent.
    pub clique: Vec<usize>,
    /// False when the node budget ran out before the search finished.
    pub optimal: bool,
    pub nodes: u64,
}

struct Search {
    adj: Vec<BitSet>,
    budget: u64,
    nodes: u64,
    aborted: bool,
    best: Vec<usize>,
}

impl Search {
    fn expand(&mut self, current: &mut Vec<usize>, mut cands: BitSet) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        // greedy color classes; vertices come out in nondecreasing color
        let mut order = Vec::with_capacity(cands.count());
        let mut uncolored = cands.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                uncolored.remove(v);
                q.difference_with(&self.adj[v]);
                order.push((v, color));
            }
        }
        for &(v, bound) in order.iter().rev() {
            if current.len() + bound <= self.best.len() || self.aborted {
                return;
            }
            current.push(v);
            let next = cands.intersection(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            cands.remove(v);
        }
    }
}

/// Largest clique found within `budget` search nodes.
pub fn max_clique(g: &Graph, budget: u64) -> CliqueResult {
    let n = g.n();
    let degrees = g.degrees();
    // high degree first, ties by id
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
    let mut pos = vec![0; n];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    let adj = perm
        .iter()
        .map(|&v| {
            let mut row = BitSet::new(n);
            for u in g.neighbors(v).iter() {
                row.insert(pos[u]);
            }
            row
        })
        .collect();
    let mut s = Search {
        adj,
        budget,
        nodes: 0,
        aborted: false,
        best: Vec::new(),
    };
    if n > 0 {
        s.expand(&mut Vec::new(), BitSet::full(n));
    }
    let mut clique: Vec<usize> = s.best.iter().map(|&i| perm[i]).collect();
    clique.sort_unstable();
    debug_assert!(g.is_clique(&clique));
    CliqueResult {
        clique,
        optimal: !s.aborted,
        nodes: s.nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, star};
    use crate::graph::cartesian_product;

    #[test]
    fn complete_graph() {
        let r = max_clique(&Graph::complete(7), DEFAULT_CLIQUE_BUDGET);
        assert_eq!(r.clique, (0..7).collect::<Vec<_>>());
        assert!(r.optimal);
    }

    #[test]
    fn trivial_graphs() {
        assert!(max_clique(&Graph::empty(0), 10).clique.is_empty());
        assert_eq!(max_clique(&Graph::empty(3), 10).clique.len(), 1);
        assert_eq!(max_clique(&cycle(5), 100).clique.len(), 2);
    }

    #[test]
    fn star_star_delta_has_nine_clique() {
        let (g, _) = cartesian_product(&[&star(3), &star(3)]).unwrap();
        let d = g.delta_complement();
        let r = max_clique(&d, DEFAULT_CLIQUE_BUDGET);
        assert!(r.clique.len() >= 9);
        assert!(d.is_clique(&r.clique));
    }

    #[test]
    fn path_grid_delta_has_ten_clique() {
        let (g, _) = cartesian_product(&[&path(6), &path(7)]).unwrap();
        let d = g.delta_complement();
        let r = max_clique(&d, DEFAULT_CLIQUE_BUDGET);
        assert!(r.clique.len() >= 10);
        assert!(d.is_clique(&r.clique));
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let d = cycle(30).complement();
        let r = max_clique(&d, 3);
        assert!(!r.optimal);
        assert!(d.is_clique(&r.clique));
    }
}
