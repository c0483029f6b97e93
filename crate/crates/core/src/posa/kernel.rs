//! Forced-edge reduction before the Hamilton cycle search.
//!
//! Matching edges and both edges at a vertex of degree 2 must lie on every
//! Hamilton cycle of `H + M` that uses `M`. A vertex with two forced edges
//! loses its other edges, a forced path loses the chord joining its ends, and
//! the loop repeats until nothing changes. Forced paths are then contracted to
//! single matching edges between their endpoints.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphBuilder, Matching, Vertex};

pub(crate) enum Reduced {
    /// The forced edges already form a Hamilton cycle (original ids).
    Solved(Vec<Vertex>),
    Infeasible(&'static str),
    Instance(Kernel),
}

pub(crate) struct Kernel {
    pub h: Graph,
    pub m: Matching,
    /// Original id of each kernel vertex.
    orig: Vec<Vertex>,
    /// For a kernel vertex with a kernel mate: the forced path from it to the mate.
    chain: Vec<Vec<Vertex>>,
}

impl Kernel {
    pub fn expand(&self, order: &[Vertex]) -> Vec<Vertex> {
        let len = order.len();
        let mut out = Vec::new();
        for i in 0..len {
            let (v, w) = (order[i], order[(i + 1) % len]);
            if self.m.contains(v, w) {
                let c = &self.chain[v];
                out.extend_from_slice(&c[..c.len() - 1]);
            } else {
                out.push(self.orig[v]);
            }
        }
        out
    }
}

struct State {
    adj: Vec<Vec<Vertex>>,
    forced: Vec<Vec<Vertex>>,
}

impl State {
    fn force(&mut self, u: Vertex, v: Vertex) -> bool {
        if self.forced[u].contains(&v) {
            return false;
        }
        self.forced[u].push(v);
        self.forced[v].push(u);
        true
    }

    fn remove(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].retain(|&x| x != v);
        self.adj[v].retain(|&x| x != u);
    }

    /// Walks the forced path starting at `a`, which has forced degree ≤ 1.
    fn walk(&self, a: Vertex) -> Vec<Vertex> {
        let mut path = vec![a];
        let mut prev = usize::MAX;
        let mut cur = a;
        loop {
            let next = self.forced[cur].iter().copied().find(|&x| x != prev);
            match next {
                Some(x) if x != a => {
                    path.push(x);
                    prev = cur;
                    cur = x;
                }
                _ => return path,
            }
        }
    }
}

pub(crate) fn reduce(h: &Graph, m: &Matching) -> Reduced {
    let n = h.n();
    if n < 3 {
        return Reduced::Infeasible("fewer than 3 vertices");
    }
    let mut adj: Vec<Vec<Vertex>> = (0..n).map(|v| h.neighbours(v).to_vec()).collect();
    for e in m.edges() {
        for (a, b) in [(e.u(), e.v()), (e.v(), e.u())] {
            if let Err(i) = adj[a].binary_search(&b) {
                adj[a].insert(i, b);
            }
        }
    }
    let mut st = State { adj, forced: vec![Vec::new(); n] };
    for e in m.edges() {
        st.force(e.u(), e.v());
    }
    loop {
        let mut changed = false;
        for v in 0..n {
            match st.adj[v].len() {
                0 | 1 => return Reduced::Infeasible("a vertex has fewer than two usable edges"),
                2 => {
                    let (a, b) = (st.adj[v][0], st.adj[v][1]);
                    changed |= st.force(v, a);
                    changed |= st.force(v, b);
                }
                _ => {}
            }
        }
        for v in 0..n {
            if st.forced[v].len() > 2 {
                return Reduced::Infeasible("a vertex has three forced edges");
            }
            if st.forced[v].len() == 2 && st.adj[v].len() > 2 {
                let extra: Vec<Vertex> = st.adj[v].iter().copied().filter(|x| !st.forced[v].contains(x)).collect();
                for x in extra {
                    st.remove(v, x);
                }
                changed = true;
            }
        }
        let mut on_path = vec![false; n];
        for a in 0..n {
            if st.forced[a].len() != 1 || on_path[a] {
                continue;
            }
            let path = st.walk(a);
            for &x in &path {
                on_path[x] = true;
            }
            let b = *path.last().unwrap();
            if path.len() == n {
                return if st.adj[a].contains(&b) {
                    Reduced::Solved(path)
                } else {
                    Reduced::Infeasible("forced Hamilton path cannot close")
                };
            }
            if path.len() > 2 && st.adj[a].contains(&b) {
                st.remove(a, b);
                changed = true;
            }
        }
        for (v, &seen) in on_path.iter().enumerate() {
            if st.forced[v].len() == 2 && !seen {
                // v lies on a forced cycle
                let cyc = st.walk_cycle(v);
                return if cyc.len() == n {
                    Reduced::Solved(cyc)
                } else {
                    Reduced::Infeasible("forced edges close a short cycle")
                };
            }
        }
        if !changed {
            break;
        }
    }
    contract(&st, n)
}

impl State {
    fn walk_cycle(&self, start: Vertex) -> Vec<Vertex> {
        let mut cyc = vec![start];
        let mut prev = start;
        let mut cur = self.forced[start][0];
        while cur != start {
            cyc.push(cur);
            let next = if self.forced[cur][0] != prev { self.forced[cur][0] } else { self.forced[cur][1] };
            prev = cur;
            cur = next;
        }
        cyc
    }
}

fn contract(st: &State, n: usize) -> Reduced {
    let mut index = vec![usize::MAX; n];
    let mut orig = Vec::new();
    for (v, f) in st.forced.iter().enumerate().take(n) {
        if f.len() <= 1 {
            index[v] = orig.len();
            orig.push(v);
        }
    }
    let k = orig.len();
    let mut chain = vec![Vec::new(); k];
    let mut mates = Vec::new();
    for (i, &a) in orig.iter().enumerate() {
        if st.forced[a].len() == 1 {
            let path = st.walk(a);
            let b = *path.last().unwrap();
            if a < b {
                mates.push((i, index[b]));
            }
            chain[i] = path;
        }
    }
    let mut b = GraphBuilder::new(k);
    for (i, &v) in orig.iter().enumerate() {
        for &u in &st.adj[v] {
            let j = index[u];
            if j != usize::MAX && j > i && !st.forced[v].contains(&u) {
                b.add_edge(i, j).expect("kernel edge");
            }
        }
    }
    let h = b.build();
    let m = Matching::new(k, mates).expect("forced paths are disjoint");
    let union = h.with_edges(m.edges().iter().copied());
    if !union.is_connected() {
        return Reduced::Infeasible("H + M is disconnected");
    }
    Reduced::Instance(Kernel { h, m, orig, chain })
}
