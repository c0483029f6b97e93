//! Rotation–extension search for Hamilton cycles of `H + M` through `M`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::IndexedRandom;
use rand::RngExt;

use super::kernel::{reduce, Reduced};
use crate::graph::{Graph, HamiltonCycle, Matching, Vertex};
use crate::random::{rng_from_seed, SeededRng};
use crate::Error;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of elementary rotations (restarts are charged by path length).
    pub budget: u64,
    pub seed: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureKind {
    BudgetExhausted,
    /// A certain obstruction: no Hamilton cycle of `H + M` contains `M`.
    NotHamiltonian(String),
    InvalidInput(Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchFailure {
    pub kind: FailureKind,
    /// Longest M-respecting path seen, in kernel order when a reduction was applied.
    pub best_path_len: usize,
    pub rotations: u64,
}

/// A Hamilton cycle of `H + M` containing every edge of `M`.
pub fn hamilton_with_matching(h: &Graph, m: &Matching, opts: &SearchOptions) -> Result<HamiltonCycle, SearchFailure> {
    let fail = |kind, best_path_len, rotations| SearchFailure { kind, best_path_len, rotations };
    if m.n() != h.n() {
        let e = Error::VertexCountMismatch { left: m.n(), right: h.n() };
        return Err(fail(FailureKind::InvalidInput(e), 0, 0));
    }
    let (order, rotations) = match reduce(h, m) {
        Reduced::Solved(order) => (order, 0),
        Reduced::Infeasible(why) => return Err(fail(FailureKind::NotHamiltonian(why.into()), 0, 0)),
        Reduced::Instance(k) => {
            let mut e = Engine::new(&k.h, &k.m, opts);
            match e.run() {
                Ok(cyc) => (k.expand(&cyc), e.used),
                Err(kind) => return Err(fail(kind, e.best.len(), e.used)),
            }
        }
    };
    HamiltonCycle::with_matching(h, m, order).map_err(|e| fail(FailureKind::InvalidInput(e), h.n(), rotations))
}

/// Longest M-respecting path found within the budget (no reduction applied).
pub(crate) fn longest_path_heuristic(h: &Graph, m: &Matching, opts: &SearchOptions) -> Vec<Vertex> {
    let mut e = Engine::new(h, m, opts);
    e.longest_only = true;
    match e.run() {
        Ok(mut cyc) => {
            // drop a non-matching cycle edge
            let len = cyc.len();
            let cut = (0..len).find(|&i| !m.contains(cyc[i], cyc[(i + 1) % len])).unwrap_or(0);
            cyc.rotate_left((cut + 1) % len);
            cyc
        }
        Err(_) => e.best,
    }
}

enum Step {
    Extend(Vec<Vertex>),
    Cycle(Vec<Vertex>),
}

const KICKS: usize = 12;

pub(crate) struct Engine<'a> {
    h: &'a Graph,
    m: &'a Matching,
    n: usize,
    rng: SeededRng,
    pub used: u64,
    budget: u64,
    on: Vec<bool>,
    pos: Vec<usize>,
    pub best: Vec<Vertex>,
    longest_only: bool,
}

impl<'a> Engine<'a> {
    pub fn new(h: &'a Graph, m: &'a Matching, opts: &SearchOptions) -> Engine<'a> {
        let n = h.n();
        Engine {
            h,
            m,
            n,
            rng: rng_from_seed(opts.seed),
            used: 0,
            budget: opts.budget,
            on: vec![false; n],
            pos: vec![usize::MAX; n],
            best: Vec::new(),
            longest_only: false,
        }
    }

    fn exhausted(&self) -> bool {
        self.used >= self.budget
    }

    fn set_path(&mut self, p: &[Vertex]) {
        self.on.fill(false);
        for &v in p {
            self.on[v] = true;
        }
    }

    fn has_free_neighbour(&self, v: Vertex) -> bool {
        self.h.neighbours(v).iter().any(|&u| !self.on[u])
    }

    /// Off-path neighbour of `y` whose addition leaves the fewest free
    /// neighbours at the new end, so that nearly stranded vertices go first.
    fn pick_extension(&mut self, y: Vertex) -> Option<Vertex> {
        let mut best: Vec<Vertex> = Vec::new();
        let mut best_score = usize::MAX;
        for &w in self.h.neighbours(y) {
            if self.on[w] {
                continue;
            }
            let end = self.m.mate(w).unwrap_or(w);
            let score = self.h.neighbours(end).iter().filter(|&&u| !self.on[u] && u != w && u != end).count();
            if score < best_score {
                best_score = score;
                best.clear();
            }
            if score == best_score {
                best.push(w);
            }
        }
        best.choose(&mut self.rng).copied()
    }

    fn extend(&mut self, p: &mut Vec<Vertex>) {
        let mut flipped = 0;
        while flipped < 2 {
            let y = *p.last().unwrap();
            match self.pick_extension(y) {
                Some(w) => {
                    p.push(w);
                    self.on[w] = true;
                    if let Some(z) = self.m.mate(w) {
                        p.push(z);
                        self.on[z] = true;
                    }
                    flipped = 0;
                }
                None => {
                    p.reverse();
                    flipped += 1;
                }
            }
        }
        if p.len() > self.best.len() {
            self.best = p.clone();
        }
    }

    fn event(&self, q: &[Vertex]) -> Option<bool> {
        let y = *q.last().unwrap();
        if self.has_free_neighbour(y) {
            return Some(false);
        }
        if q.len() >= 3 && self.h.has_edge(y, q[0]) {
            return Some(true);
        }
        None
    }

    /// Per-endpoint rotation closure of `p` with `p[0]` fixed. Returns the
    /// first state that can be extended or closed, or all states.
    fn closure(&mut self, p: Vec<Vertex>) -> Result<Step, Vec<Vec<Vertex>>> {
        let k = p.len();
        let mut seen: Vec<Vertex> = vec![p[k - 1]];
        let mut states = vec![p];
        let mut head = 0;
        while head < states.len() {
            if let Some(closed) = self.event(&states[head]) {
                let q = states.swap_remove(head);
                return Ok(if closed { Step::Cycle(q) } else { Step::Extend(q) });
            }
            if self.exhausted() {
                break;
            }
            let q = &states[head];
            for (j, &v) in q.iter().enumerate() {
                self.pos[v] = j;
            }
            let y = q[k - 1];
            let mut fresh = Vec::new();
            for &x in self.h.neighbours(y) {
                let i = self.pos[x];
                if i == usize::MAX || i + 2 >= k {
                    continue;
                }
                let next = q[i + 1];
                if self.m.contains(x, next) || seen.contains(&next) {
                    continue;
                }
                seen.push(next);
                fresh.push(i);
            }
            for &v in q.iter() {
                self.pos[v] = usize::MAX;
            }
            for i in fresh {
                let mut r = states[head].clone();
                r[i + 1..].reverse();
                states.push(r);
                self.used += 1;
            }
            head += 1;
        }
        Err(states)
    }

    /// Rotations at one end, then at the other end of every path found.
    fn explore(&mut self, p: &[Vertex]) -> Result<Step, Vec<Vec<Vertex>>> {
        let first = match self.closure(p.to_vec()) {
            Ok(step) => return Ok(step),
            Err(states) => states,
        };
        let mut all = Vec::new();
        for q in &first {
            if self.exhausted() {
                break;
            }
            let mut r = q.clone();
            r.reverse();
            match self.closure(r) {
                Ok(step) => return Ok(step),
                Err(second) => {
                    if all.len() < 4 * self.n {
                        all.extend(second.into_iter().take(8));
                    }
                }
            }
        }
        all.extend(first);
        Err(all)
    }

    /// Opens a non-spanning cycle at a vertex with a neighbour off the cycle.
    fn open_cycle(&mut self, c: &[Vertex]) -> Option<Vec<Vertex>> {
        let len = c.len();
        let mut cands: Vec<(usize, usize, Vertex)> = Vec::new();
        for (j, &x) in c.iter().enumerate() {
            for &w in self.h.neighbours(x) {
                if !self.on[w] {
                    let end = self.m.mate(w).unwrap_or(w);
                    let room = self.h.neighbours(end).iter().filter(|&&u| !self.on[u] && u != w && u != end).count();
                    cands.push((room, j, w));
                }
            }
        }
        let top = cands.iter().map(|c| c.0).max()?;
        let picks: Vec<_> = cands.into_iter().filter(|c| c.0 == top).collect();
        let &(_, j, w) = picks.choose(&mut self.rng)?;
        let x = c[j];
        let mut path = Vec::with_capacity(len + 2);
        if !self.m.contains(x, c[(j + 1) % len]) {
            for t in 1..=len {
                path.push(c[(j + t) % len]);
            }
        } else {
            for t in 1..=len {
                path.push(c[(j + len - t) % len]);
            }
        }
        path.push(w);
        if let Some(z) = self.m.mate(w) {
            path.push(z);
        }
        Some(path)
    }

    fn kick(&mut self, states: &[Vec<Vertex>]) -> Vec<Vertex> {
        let mut p = states.choose(&mut self.rng).unwrap().clone();
        let steps = self.rng.random_range(1..=8);
        for _ in 0..steps {
            if self.rng.random_bool(0.5) {
                p.reverse();
            }
            let k = p.len();
            let y = p[k - 1];
            for (j, &v) in p.iter().enumerate() {
                self.pos[v] = j;
            }
            let opts: Vec<usize> = self
                .h
                .neighbours(y)
                .iter()
                .map(|&x| self.pos[x])
                .filter(|&i| i != usize::MAX && i + 2 < k && !self.m.contains(p[i], p[i + 1]))
                .collect();
            for &v in p.iter() {
                self.pos[v] = usize::MAX;
            }
            if let Some(&i) = opts.choose(&mut self.rng) {
                p[i + 1..].reverse();
                self.used += 1;
            }
        }
        p
    }

    fn start_vertex(&mut self, restart: usize) -> Vertex {
        if restart == 0 {
            (0..self.n).max_by_key(|&v| (self.h.degree(v), core::cmp::Reverse(v))).unwrap()
        } else {
            self.rng.random_range(0..self.n)
        }
    }

    pub fn run(&mut self) -> Result<Vec<Vertex>, FailureKind> {
        if self.n == 0 {
            return Err(FailureKind::NotHamiltonian("empty graph".into()));
        }
        let mut restart = 0;
        while !self.exhausted() {
            let s = self.start_vertex(restart);
            restart += 1;
            let mut p = vec![s];
            if let Some(z) = self.m.mate(s) {
                p.push(z);
            }
            self.set_path(&p);
            self.used += self.n as u64;
            let mut kicks = 0;
            while !self.exhausted() {
                self.extend(&mut p);
                match self.explore(&p) {
                    Ok(Step::Extend(q)) => {
                        p = q;
                        kicks = 0;
                    }
                    Ok(Step::Cycle(q)) => {
                        if q.len() == self.n {
                            return Ok(q);
                        }
                        match self.open_cycle(&q) {
                            Some(np) => {
                                p = np;
                                self.set_path(&p);
                                kicks = 0;
                            }
                            None => {
                                if self.longest_only {
                                    self.best = q;
                                    return Err(FailureKind::BudgetExhausted);
                                }
                                return Err(FailureKind::NotHamiltonian("H + M is disconnected".into()));
                            }
                        }
                    }
                    Err(states) => {
                        kicks += 1;
                        if kicks > KICKS {
                            break;
                        }
                        p = self.kick(&states);
                    }
                }
            }
        }
        Err(FailureKind::BudgetExhausted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::sample_gnp;

    #[test]
    fn k6_through_matching_edge() {
        let h = Graph::complete(6);
        let m = Matching::new(6, [(0, 1)]).unwrap();
        let c = hamilton_with_matching(&h, &m, &SearchOptions::default()).unwrap();
        assert!(c.edges().any(|e| (e.u(), e.v()) == (0, 1)));
    }

    #[test]
    fn matching_supplies_missing_edge() {
        let n = 7;
        let h = Graph::from_edges(n, Graph::complete(n).edges().filter(|e| (e.u(), e.v()) != (0, 1))).unwrap();
        let m = Matching::new(n, [(0, 1)]).unwrap();
        let c = hamilton_with_matching(&h, &m, &SearchOptions::default()).unwrap();
        HamiltonCycle::with_matching(&h, &m, c.order().to_vec()).unwrap();
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let mut es = Vec::new();
        for i in 0..5 {
            es.push((i, (i + 1) % 5));
            es.push((i, i + 5));
            es.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = Graph::from_edges(10, es).unwrap();
        let r = hamilton_with_matching(&g, &Matching::empty(10), &SearchOptions { budget: 20_000, seed: 1 });
        assert!(r.is_err());
    }

    #[test]
    fn random_graphs() {
        for seed in 0..20 {
            let g = sample_gnp(60, 0.15, seed).unwrap();
            if g.min_degree() < 2 {
                continue;
            }
            let m = Matching::empty(60);
            let c = hamilton_with_matching(&g, &m, &SearchOptions { budget: 200_000, seed }).unwrap();
            HamiltonCycle::new(&g, c.into_order()).unwrap();
        }
    }

    #[test]
    fn bipartite_imbalance_exhausts_or_refutes() {
        // K_{3,4} has no Hamilton cycle
        let mut es = Vec::new();
        for a in 0..3 {
            for b in 3..7 {
                es.push((a, b));
            }
        }
        let g = Graph::from_edges(7, es).unwrap();
        let r = hamilton_with_matching(&g, &Matching::empty(7), &SearchOptions { budget: 5_000, seed: 0 });
        assert!(r.is_err());
    }
}
