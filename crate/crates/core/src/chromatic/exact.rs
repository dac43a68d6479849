//! k-colorability by backtracking with forward checking.
//!
//! A maximum clique is fixed to colors `0..ω` up front, which breaks the color
//! symmetry; beyond that a vertex may only open the next unused color.

use std::time::Instant;

use crate::graph::Graph;

use super::dsatur;
use super::Coloring;

const CLOCK_INTERVAL: u64 = 1024;

pub(crate) enum Outcome {
    Colored(Coloring),
    Infeasible,
    TimedOut,
}

pub(crate) struct Search<'a> {
    g: &'a Graph,
    clique: Vec<usize>,
    order: Vec<usize>,
    degrees: Vec<usize>,
    dynamic: bool,
}

struct State {
    k: usize,
    colors: Vec<usize>,
    /// `forbid[v * k + c]`: colored neighbors of `v` holding `c`.
    forbid: Vec<u32>,
    avail: Vec<usize>,
    nodes: u64,
    deadline: Instant,
    timed_out: bool,
}

const NONE: usize = usize::MAX;

impl<'a> Search<'a> {
    pub fn new(g: &'a Graph, clique: &[usize], dynamic: bool) -> Self {
        let order = dsatur::trace(g, clique).order;
        Self {
            g,
            clique: clique.to_vec(),
            order,
            degrees: g.degrees(),
            dynamic,
        }
    }

    /// Returns false if some uncolored neighbor lost its last color.
    fn assign(&self, st: &mut State, v: usize, c: usize) -> bool {
        st.colors[v] = c;
        let mut ok = true;
        for u in self.g.neighbors(v).iter() {
            let slot = &mut st.forbid[u * st.k + c];
            *slot += 1;
            if *slot == 1 {
                st.avail[u] -= 1;
                if st.avail[u] == 0 && st.colors[u] == NONE {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&self, st: &mut State, v: usize) {
        let c = st.colors[v];
        st.colors[v] = NONE;
        for u in self.g.neighbors(v).iter() {
            let slot = &mut st.forbid[u * st.k + c];
            *slot -= 1;
            if *slot == 0 {
                st.avail[u] += 1;
            }
        }
    }

    fn next_vertex(&self, st: &State, idx: usize) -> usize {
        if self.dynamic {
            (0..self.g.n())
                .filter(|&v| st.colors[v] == NONE)
                .min_by_key(|&v| (st.avail[v], std::cmp::Reverse(self.degrees[v]), v))
                .expect("an uncolored vertex remains")
        } else {
            self.order[idx]
        }
    }

    fn dfs(&self, st: &mut State, idx: usize, used: usize) -> bool {
        if idx == self.g.n() {
            return true;
        }
        if st.nodes.is_multiple_of(CLOCK_INTERVAL) && Instant::now() >= st.deadline {
            st.timed_out = true;
        }
        st.nodes += 1;
        if st.timed_out {
            return false;
        }
        let v = self.next_vertex(st, idx);
        for c in 0..st.k.min(used + 1) {
            if st.forbid[v * st.k + c] != 0 {
                continue;
            }
            let ok = self.assign(st, v, c);
            if ok && self.dfs(st, idx + 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(st, v);
            if st.timed_out {
                return false;
            }
        }
        false
    }

    pub fn color_with(&self, k: usize, deadline: Instant) -> Outcome {
        let n = self.g.n();
        if n == 0 {
            return Outcome::Colored(Coloring::from_colors(Vec::new()));
        }
        if k < self.clique.len() || k == 0 {
            return Outcome::Infeasible;
        }
        let mut st = State {
            k,
            colors: vec![NONE; n],
            forbid: vec![0; n * k],
            avail: vec![k; n],
            nodes: 0,
            deadline,
            timed_out: false,
        };
        for (c, &v) in self.clique.iter().enumerate() {
            if !self.assign(&mut st, v, c) {
                return Outcome::Infeasible;
            }
        }
        if self.dfs(&mut st, self.clique.len(), self.clique.len()) {
            Outcome::Colored(Coloring::from_colors(st.colors))
        } else if st.timed_out {
            Outcome::TimedOut
        } else {
            Outcome::Infeasible
        }
    }
}
