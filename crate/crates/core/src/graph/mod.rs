//! Simple undirected graphs, colourings, matchings, linear forests and
//! Hamilton cycles.

mod colouring;
mod structures;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::{Error, Rational, Result};

pub use colouring::{colour_class, colour_count_in_cycle, Colour, EdgeColouring};
pub use structures::{HamiltonCycle, LinearForest, Matching};

pub type Vertex = usize;

/// An unordered vertex pair stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Edge {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn u(&self) -> Vertex {
        self.0
    }

    pub fn v(&self) -> Vertex {
        self.1
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint opposite `x`. `x` must be an endpoint.
    pub fn other(&self, x: Vertex) -> Vertex {
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((u, v): (Vertex, Vertex)) -> Edge {
        Edge::new(u, v)
    }
}

/// Vertex subset of `0..n` backed by a bitset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(n: usize) -> VertexSet {
        VertexSet { bits: FixedBitSet::with_capacity(n) }
    }

    pub fn full(n: usize) -> VertexSet {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_vertices(n: usize, vs: impl IntoIterator<Item = Vertex>) -> VertexSet {
        let mut s = VertexSet::new(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: Vertex) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.bits.ones().collect()
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }
}

/// Undirected simple graph on `0..n` with sorted adjacency lists.
///
/// Values are immutable; use [`GraphBuilder`] to assemble one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Graph { adj, edge_count: n * n.saturating_sub(1) / 2 }
    }

    pub fn cycle(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for i in 0..n {
            b.add_edge(i, (i + 1) % n).expect("cycle edge");
        }
        b.build()
    }

    pub fn path(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for i in 1..n {
            b.add_edge(i - 1, i).expect("path edge");
        }
        b.build()
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut b = GraphBuilder::new(n);
        for e in edges {
            let e = e.into();
            b.add_edge(e.u(), e.v())?;
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| Edge(u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of neighbours of `v` inside `set`.
    pub fn degree_into(&self, v: Vertex, set: &VertexSet) -> usize {
        self.adj[v].iter().filter(|&&u| set.contains(u)).count()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Connected-component label per vertex, labels numbered from 0 in order
    /// of their smallest vertex.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if label[u] == usize::MAX {
                        label[u] = count;
                        stack.push(u);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().0
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// BFS distances from `s`, truncated at `max_depth` (`None` beyond it).
    pub fn distances_within(&self, s: Vertex, max_depth: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[s] = Some(0);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            if d == max_depth {
                continue;
            }
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = index[u];
                if j != usize::MAX && j > i {
                    b.push_unchecked(i, j);
                }
            }
        }
        b.build()
    }

    /// `Ok(())` if every edge of `self` is an edge of `host` on the same vertex set.
    pub fn check_subgraph_of(&self, host: &Graph) -> Result<()> {
        if self.n() != host.n() {
            return Err(Error::VertexCountMismatch { left: self.n(), right: host.n() });
        }
        for e in self.edges() {
            if !host.has_edge(e.u(), e.v()) {
                return Err(Error::NotSubgraph(e.u(), e.v()));
            }
        }
        Ok(())
    }

    /// Graph with the same vertices and `extra` edges added.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = Edge>) -> Graph {
        let mut b = GraphBuilder::from_graph(self);
        for e in extra {
            b.push_unchecked(e.u(), e.v());
        }
        b.build()
    }
}

/// Single-owner builder for [`Graph`]. Duplicate edges are merged.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    adj: Vec<Vec<Vertex>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> GraphBuilder {
        GraphBuilder { adj: vec![Vec::new(); n] }
    }

    pub fn from_graph(g: &Graph) -> GraphBuilder {
        GraphBuilder { adj: g.adj.clone() }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.push_unchecked(u, v);
        Ok(())
    }

    fn push_unchecked(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    pub fn build(mut self) -> Graph {
        let mut total = 0;
        for ns in &mut self.adj {
            ns.sort_unstable();
            ns.dedup();
            total += ns.len();
        }
        Graph { adj: self.adj, edge_count: total / 2 }
    }
}

/// `min d_H(v)/d_G(v)` over vertices with `d_G(v) > 0`; 1 when every degree is 0.
pub fn residual_ratio(g: &Graph, h: &Graph) -> Result<Rational> {
    h.check_subgraph_of(g)?;
    let mut best: Option<Rational> = None;
    for v in 0..g.n() {
        let dg = g.degree(v);
        if dg == 0 {
            continue;
        }
        let q = Rational::new(h.degree(v) as i64, dg as i64);
        if best.map_or(true, |b| q < b) {
            best = Some(q);
        }
    }
    Ok(best.unwrap_or_else(|| Rational::from_integer(1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_rejects_loops_and_range() {
        let mut b = GraphBuilder::new(3);
        assert_eq!(b.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert!(matches!(b.add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
        b.add_edge(0, 1).unwrap();
        b.add_edge(1, 0).unwrap();
        let g = b.build();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::from_edges(4, [(3, 1), (0, 2), (2, 1), (0, 1)]).unwrap();
        let es: Vec<_> = g.edges().map(|e| (e.u(), e.v())).collect();
        assert_eq!(es, [(0, 1), (0, 2), (1, 2), (1, 3)]);
    }

    #[test]
    fn residual_identity() {
        let g = Graph::complete(5);
        assert_eq!(residual_ratio(&g, &g).unwrap(), Rational::from_integer(1));
    }

    #[test]
    fn residual_k4_minus_perfect_matching() {
        let g = Graph::complete(4);
        let h = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(residual_ratio(&g, &h).unwrap(), Rational::new(2, 3));
    }

    #[test]
    fn residual_c5_in_k5() {
        let g = Graph::complete(5);
        let h = Graph::cycle(5);
        for v in 0..5 {
            assert_eq!((g.degree(v), h.degree(v)), (4, 2));
        }
        assert_eq!(residual_ratio(&g, &h).unwrap(), Rational::new(1, 2));
    }

    #[test]
    fn residual_edgeless_is_one() {
        let g = Graph::empty(4);
        assert_eq!(residual_ratio(&g, &g).unwrap(), Rational::from_integer(1));
    }

    #[test]
    fn residual_rejects_non_subgraph() {
        let g = Graph::path(3);
        let h = Graph::from_edges(3, [(0, 2)]).unwrap();
        assert_eq!(residual_ratio(&g, &h), Err(Error::NotSubgraph(0, 2)));
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::cycle(5);
        let h = g.induced(&[4, 0, 1]);
        assert_eq!(h.edge_count(), 2);
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2));
    }

    #[test]
    fn truncated_bfs() {
        let g = Graph::path(8);
        let d = g.distances_within(0, 5);
        assert_eq!(d[5], Some(5));
        assert_eq!(d[6], None);
    }

    #[test]
    fn vertex_set_ops() {
        let mut s = VertexSet::from_vertices(10, [1, 4, 9]);
        assert_eq!(s.len(), 3);
        assert!(!s.insert(4));
        s.remove(1);
        assert_eq!(s.complement().len(), 8);
        assert_eq!(s.to_vec(), [4, 9]);
    }
}
