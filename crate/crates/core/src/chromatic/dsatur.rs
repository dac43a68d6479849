use crate::bitset::BitSet;
use crate::graph::Graph;

use super::Coloring;

/// DSATUR trace: the order vertices were colored in and their colors.
pub(crate) struct Trace {
    pub order: Vec<usize>,
    pub colors: Vec<usize>,
}

/// Runs DSATUR with `seed` precolored `0, 1, …` in the given order. The next
/// vertex maximizes saturation, then degree, then prefers the lowest id.
pub(crate) fn trace(g: &Graph, seed: &[usize]) -> Trace {
    let n = g.n();
    let degrees = g.degrees();
    let mut colors = vec![usize::MAX; n];
    let mut seen: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
    let mut sat = vec![0usize; n];
    let mut order = Vec::with_capacity(n);

    fn assign(
        g: &Graph,
        v: usize,
        c: usize,
        colors: &mut [usize],
        order: &mut Vec<usize>,
        seen: &mut [BitSet],
        sat: &mut [usize],
    ) {
        colors[v] = c;
        order.push(v);
        for u in g.neighbors(v).iter() {
            if !seen[u].contains(c) {
                seen[u].insert(c);
                sat[u] += 1;
            }
        }
    }

    for (c, &v) in seed.iter().enumerate() {
        assign(g, v, c, &mut colors, &mut order, &mut seen, &mut sat);
    }
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (sat[v], degrees[v], std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (0..n).find(|&c| !seen[v].contains(c)).unwrap_or(n - 1);
        assign(g, v, c, &mut colors, &mut order, &mut seen, &mut sat);
    }
    Trace { order, colors }
}

/// Deterministic DSATUR coloring.
pub fn dsatur(g: &Graph) -> Coloring {
    Coloring::from_colors(trace(g, &[]).colors)
}
