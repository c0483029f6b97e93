//! Edmonds' blossom algorithm, O(n³).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Matching, Vertex, VertexSet};

const NONE: usize = usize::MAX;

struct Search<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    even: Vec<bool>,
    in_blossom: Vec<bool>,
    seen: Vec<bool>,
    queue: VecDeque<Vertex>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, mate: Vec<usize>) -> Search<'g> {
        let n = g.n();
        Search {
            g,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            even: vec![false; n],
            in_blossom: vec![false; n],
            seen: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn reset(&mut self) {
        self.parent.fill(NONE);
        self.even.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
    }

    fn lca(&mut self, mut a: Vertex, mut b: Vertex) -> Vertex {
        self.seen.fill(false);
        loop {
            a = self.base[a];
            self.seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: Vertex, b: Vertex, mut child: Vertex) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: Vertex, to: Vertex) {
        let b = self.lca(v, to);
        self.in_blossom.fill(false);
        self.mark_path(v, b, to);
        self.mark_path(to, b, v);
        for i in 0..self.g.n() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.even[i] {
                    self.even[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// Grows alternating trees from `roots`. Returns the far end of an
    /// augmenting path if one is found.
    fn grow(&mut self, roots: &[Vertex]) -> Option<Vertex> {
        self.reset();
        for &r in roots {
            self.even[r] = true;
            self.queue.push_back(r);
        }
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbours(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_even = match self.mate[to] {
                    NONE => self.even[to],
                    m => self.parent[m] != NONE,
                };
                if to_even {
                    self.contract(v, to);
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.even[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: Vertex) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

fn greedy_mates(g: &Graph) -> Vec<usize> {
    let mut mate = vec![NONE; g.n()];
    for v in 0..g.n() {
        if mate[v] != NONE {
            continue;
        }
        if let Some(&u) = g.neighbours(v).iter().find(|&&u| mate[u] == NONE) {
            mate[v] = u;
            mate[u] = v;
        }
    }
    mate
}

fn maximum_mates(g: &Graph) -> Vec<usize> {
    let mut s = Search::new(g, greedy_mates(g));
    for root in 0..g.n() {
        if s.mate[root] == NONE {
            if let Some(end) = s.grow(&[root]) {
                s.augment(end);
            }
        }
    }
    s.mate
}

/// A maximum-cardinality matching of `g`.
pub fn max_matching(g: &Graph) -> Matching {
    let mate = maximum_mates(g);
    Matching::from_mates(mate.into_iter().map(|m| (m != NONE).then_some(m)).collect())
}

/// Gallai–Edmonds set `D`: vertices missed by at least one maximum matching.
///
/// These are the even vertices of the alternating forest grown simultaneously
/// from every vertex left exposed by a maximum matching.
pub fn gallai_edmonds_even_set(g: &Graph) -> (Matching, VertexSet) {
    let mate = maximum_mates(g);
    let mut s = Search::new(g, mate);
    let exposed: Vec<Vertex> = (0..g.n()).filter(|&v| s.mate[v] == NONE).collect();
    let found = s.grow(&exposed);
    debug_assert!(found.is_none(), "maximum matching admits no augmenting path");
    let d = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| s.even[v]));
    let m = Matching::from_mates(s.mate.iter().map(|&m| (m != NONE).then_some(m)).collect());
    (m, d)
}
