use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{Edge, Graph, Vertex, VertexSet};
use crate::{Error, Result};

/// Set of vertex-disjoint pairs on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
    mate: Vec<Option<Vertex>>,
}

impl Matching {
    pub fn empty(n: usize) -> Matching {
        Matching { edges: Vec::new(), mate: vec![None; n] }
    }

    pub fn new<I, E>(n: usize, edges: I) -> Result<Matching>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut m = Matching::empty(n);
        for e in edges {
            m.push(e.into())?;
        }
        m.edges.sort_unstable();
        Ok(m)
    }

    fn push(&mut self, e: Edge) -> Result<()> {
        let n = self.mate.len();
        for x in [e.u(), e.v()] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
            if self.mate[x].is_some() {
                return Err(Error::NotAMatching(x));
            }
        }
        if e.u() == e.v() {
            return Err(Error::SelfLoop(e.u()));
        }
        self.mate[e.u()] = Some(e.v());
        self.mate[e.v()] = Some(e.u());
        self.edges.push(e);
        Ok(())
    }

    pub(crate) fn from_mates(mate: Vec<Option<Vertex>>) -> Matching {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&u| u > v).map(|u| Edge::new(v, u)))
            .collect();
        Matching { edges, mate }
    }

    pub fn n(&self) -> usize {
        self.mate.len()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate.get(v).copied().flatten()
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.mate(v).is_some()
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.mate(u) == Some(v)
    }

    /// V(M) in increasing order.
    pub fn covered(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.covers(v)).collect()
    }

    pub fn is_perfect(&self) -> bool {
        2 * self.len() == self.n()
    }

    pub fn check_in(&self, g: &Graph) -> Result<()> {
        if g.n() != self.n() {
            return Err(Error::VertexCountMismatch { left: self.n(), right: g.n() });
        }
        for e in &self.edges {
            if !g.has_edge(e.u(), e.v()) {
                return Err(Error::MissingEdge(e.u(), e.v()));
            }
        }
        Ok(())
    }
}

/// Vertex-disjoint paths on `0..n`. A single-vertex path is allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForest {
    n: usize,
    paths: Vec<Vec<Vertex>>,
}

impl LinearForest {
    pub fn empty(n: usize) -> LinearForest {
        LinearForest { n, paths: Vec::new() }
    }

    pub fn new(n: usize, paths: Vec<Vec<Vertex>>) -> Result<LinearForest> {
        let mut seen = VertexSet::new(n);
        for p in &paths {
            if p.is_empty() {
                return Err(Error::InvalidPath("empty path".into()));
            }
            for &v in p {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if !seen.insert(v) {
                    return Err(Error::RepeatedVertex(v));
                }
            }
        }
        Ok(LinearForest { n, paths })
    }

    /// Checks that every consecutive pair is an edge of `g`.
    pub fn check_in(&self, g: &Graph) -> Result<()> {
        if g.n() != self.n {
            return Err(Error::VertexCountMismatch { left: self.n, right: g.n() });
        }
        for e in self.edges() {
            if !g.has_edge(e.u(), e.v()) {
                return Err(Error::MissingEdge(e.u(), e.v()));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn paths(&self) -> &[Vec<Vertex>] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<Vec<Vertex>> {
        self.paths
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.paths.iter().map(|p| p.len() - 1).sum()
    }

    pub fn spanned(&self) -> VertexSet {
        VertexSet::from_vertices(self.n, self.paths.iter().flatten().copied())
    }

    pub fn vertex_count(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.paths.iter().flat_map(|p| p.windows(2).map(|w| Edge::new(w[0], w[1])))
    }
}

/// Cyclic vertex order visiting every vertex once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCycle {
    order: Vec<Vertex>,
}

impl HamiltonCycle {
    /// Validates `order` as a Hamilton cycle of `g`.
    pub fn new(g: &Graph, order: Vec<Vertex>) -> Result<HamiltonCycle> {
        let cyc = HamiltonCycle::check_order(g.n(), order)?;
        for e in cyc.edges() {
            if !g.has_edge(e.u(), e.v()) {
                return Err(Error::InvalidCycle(format!("({}, {}) is not an edge", e.u(), e.v())));
            }
        }
        Ok(cyc)
    }

    /// Validates `order` as a Hamilton cycle of `h + m` that uses every edge of `m`.
    pub fn with_matching(h: &Graph, m: &Matching, order: Vec<Vertex>) -> Result<HamiltonCycle> {
        let cyc = HamiltonCycle::check_order(h.n(), order)?;
        let mut used = 0;
        for e in cyc.edges() {
            if m.contains(e.u(), e.v()) {
                used += 1;
            } else if !h.has_edge(e.u(), e.v()) {
                return Err(Error::InvalidCycle(format!("({}, {}) is in neither H nor M", e.u(), e.v())));
            }
        }
        if used != m.len() {
            return Err(Error::InvalidCycle(format!("uses {used} of {} matching edges", m.len())));
        }
        Ok(cyc)
    }

    fn check_order(n: usize, order: Vec<Vertex>) -> Result<HamiltonCycle> {
        if n < 3 {
            return Err(Error::InvalidCycle(format!("no Hamilton cycle on {n} vertices")));
        }
        if order.len() != n {
            return Err(Error::InvalidCycle(format!("length {} on {n} vertices", order.len())));
        }
        let mut seen = VertexSet::new(n);
        for &v in &order {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if !seen.insert(v) {
                return Err(Error::RepeatedVertex(v));
            }
        }
        Ok(HamiltonCycle { order })
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn into_order(self) -> Vec<Vertex> {
        self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Edges in cycle order, starting with `(order[0], order[1])`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.order.len();
        (0..n).map(move |i| Edge::new(self.order[i], self.order[(i + 1) % n]))
    }
}
