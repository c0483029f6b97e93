use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::graph::{Graph, Matching, Vertex};
use crate::{Error, Result};

/// An M-respecting path `x_1..x_k` in `H + M`; `x_1` is the fixed end.
///
/// Every matching edge is either an edge of the path or disjoint from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathState<'m> {
    path: Vec<Vertex>,
    m: &'m Matching,
}

impl<'m> PathState<'m> {
    pub fn new(h: &Graph, m: &'m Matching, path: Vec<Vertex>) -> Result<PathState<'m>> {
        let s = PathState { path, m };
        s.check(h)?;
        Ok(s)
    }

    pub fn path(&self) -> &[Vertex] {
        &self.path
    }

    pub fn into_path(self) -> Vec<Vertex> {
        self.path
    }

    pub fn matching(&self) -> &'m Matching {
        self.m
    }

    pub fn fixed_end(&self) -> Vertex {
        self.path[0]
    }

    pub fn end(&self) -> Vertex {
        self.path[self.path.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    /// The same vertices traversed from the other end.
    pub fn reversed(&self) -> PathState<'m> {
        let mut path = self.path.clone();
        path.reverse();
        PathState { path, m: self.m }
    }

    /// Checks distinctness, edges of `H + M` and the M-respecting property.
    pub fn check(&self, h: &Graph) -> Result<()> {
        if self.path.is_empty() {
            return Err(Error::InvalidPath("empty path".into()));
        }
        if self.m.n() != h.n() {
            return Err(Error::VertexCountMismatch { left: self.m.n(), right: h.n() });
        }
        check_m_respecting(h, self.m, &self.path)
    }

    /// Breaks `x_i x_{i+1}` (0-based positions `i`, `i+1`) and adds the chord
    /// `x_i x_k`, giving `x_1..x_i, x_k, x_{k−1}, .., x_{i+1}`.
    pub fn rotate(&self, h: &Graph, i: usize) -> Result<PathState<'m>> {
        let k = self.path.len();
        if i + 1 >= k {
            return Err(Error::Rotation(format!("break index {i} out of range for a path on {k} vertices")));
        }
        let (xi, xi1, xk) = (self.path[i], self.path[i + 1], self.end());
        if self.m.contains(xi, xi1) {
            return Err(Error::Rotation(format!("({xi}, {xi1}) is a matching edge")));
        }
        if i + 1 < k - 1 && !h.has_edge(xi, xk) {
            return Err(Error::Rotation(format!("closing edge ({xi}, {xk}) is not in H")));
        }
        let mut path = self.path.clone();
        path[i + 1..].reverse();
        Ok(PathState { path, m: self.m })
    }
}

pub(crate) fn check_m_respecting(h: &Graph, m: &Matching, path: &[Vertex]) -> Result<()> {
    let n = h.n();
    let mut pos = vec![usize::MAX; n];
    for (j, &v) in path.iter().enumerate() {
        h.check_vertex(v)?;
        if pos[v] != usize::MAX {
            return Err(Error::RepeatedVertex(v));
        }
        pos[v] = j;
    }
    for w in path.windows(2) {
        if !m.contains(w[0], w[1]) && !h.has_edge(w[0], w[1]) {
            return Err(Error::InvalidPath(format!("({}, {}) is in neither H nor M", w[0], w[1])));
        }
    }
    for (j, &v) in path.iter().enumerate() {
        if let Some(u) = m.mate(v) {
            let p = pos[u];
            if p == usize::MAX || p.abs_diff(j) != 1 {
                return Err(Error::InvalidPath(format!("matching edge ({v}, {u}) is cut by the path")));
            }
        }
    }
    Ok(())
}

/// How rotation states are deduplicated during the closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureMode {
    /// Keep the first path found for each endpoint.
    PerEndpoint,
    /// Keep every distinct (endpoint, edge set) state, up to `max_states`.
    PerPathState { max_states: usize },
}

#[derive(Debug, Clone)]
struct Node {
    endpoint: Vertex,
    parent: usize,
    break_index: usize,
}

/// Endpoints reachable from a path by M-respecting rotations with `x_1` fixed.
#[derive(Debug, Clone)]
pub struct RotationClosure {
    initial: Vec<Vertex>,
    nodes: Vec<Node>,
    endpoints: Vec<Vertex>,
    /// False if `PerPathState` hit its state cap.
    pub complete: bool,
}

impl RotationClosure {
    pub fn fixed_end(&self) -> Vertex {
        self.initial[0]
    }

    /// Distinct endpoints in discovery order, starting with `x_k`.
    pub fn endpoints(&self) -> &[Vertex] {
        &self.endpoints
    }

    pub fn len(&self) -> usize {
        self.endpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.endpoints.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.endpoints.contains(&v)
    }

    /// Break indices that turn the initial path into a path ending at `v`.
    pub fn sequence_to(&self, v: Vertex) -> Option<Vec<usize>> {
        let mut at = self.nodes.iter().position(|nd| nd.endpoint == v)?;
        let mut seq = Vec::new();
        while at != 0 {
            seq.push(self.nodes[at].break_index);
            at = self.nodes[at].parent;
        }
        seq.reverse();
        Some(seq)
    }

    /// The path ending at `v`, replayed from the rotation sequence.
    pub fn path_to(&self, v: Vertex) -> Option<Vec<Vertex>> {
        let seq = self.sequence_to(v)?;
        let mut p = self.initial.clone();
        for i in seq {
            p[i + 1..].reverse();
        }
        Some(p)
    }
}

fn edge_key(u: Vertex, v: Vertex) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    let mut z = ((a as u64) << 32 | b as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn signature(path: &[Vertex]) -> u64 {
    path.windows(2).fold(0, |s, w| s ^ edge_key(w[0], w[1]))
}

/// Closure of `state` under M-respecting rotations that keep `x_1` fixed.
pub fn rotation_endpoint_set(h: &Graph, state: &PathState<'_>) -> RotationClosure {
    rotation_closure(h, state, ClosureMode::PerEndpoint)
}

pub fn rotation_closure(h: &Graph, state: &PathState<'_>, mode: ClosureMode) -> RotationClosure {
    let m = state.matching();
    let initial = state.path().to_vec();
    let k = initial.len();
    let mut nodes = vec![Node { endpoint: initial[k - 1], parent: 0, break_index: 0 }];
    let mut endpoints = vec![initial[k - 1]];
    let mut seen_end = vec![false; h.n()];
    seen_end[initial[k - 1]] = true;
    let mut seen_state: HashSet<(Vertex, u64)> = HashSet::new();
    seen_state.insert((initial[k - 1], signature(&initial)));
    let mut queue = VecDeque::new();
    queue.push_back((0usize, initial.clone(), signature(&initial)));
    let mut pos = vec![usize::MAX; h.n()];
    let mut complete = true;
    while let Some((id, path, sig)) = queue.pop_front() {
        for (j, &v) in path.iter().enumerate() {
            pos[v] = j;
        }
        let end = path[k - 1];
        for &x in h.neighbours(end) {
            let i = pos[x];
            if i == usize::MAX || i + 2 >= k {
                continue;
            }
            let next = path[i + 1];
            if m.contains(x, next) {
                continue;
            }
            let new_sig = sig ^ edge_key(x, next) ^ edge_key(x, end);
            let fresh = match mode {
                ClosureMode::PerEndpoint => !seen_end[next],
                ClosureMode::PerPathState { max_states } => {
                    if seen_state.contains(&(next, new_sig)) {
                        false
                    } else if nodes.len() >= max_states {
                        complete = false;
                        false
                    } else {
                        true
                    }
                }
            };
            if !fresh {
                continue;
            }
            seen_state.insert((next, new_sig));
            if !seen_end[next] {
                seen_end[next] = true;
                endpoints.push(next);
            }
            let mut p = path.clone();
            p[i + 1..].reverse();
            nodes.push(Node { endpoint: next, parent: id, break_index: i });
            queue.push_back((nodes.len() - 1, p, new_sig));
        }
        for &v in &path {
            pos[v] = usize::MAX;
        }
    }
    RotationClosure { initial, nodes, endpoints, complete }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_rotation() {
        let h = Graph::complete(3);
        let m = Matching::empty(3);
        let s = PathState::new(&h, &m, vec![0, 1, 2]).unwrap();
        assert_eq!(s.rotate(&h, 0).unwrap().path(), [0, 2, 1]);
    }

    #[test]
    fn cannot_break_matching_edge() {
        let h = Graph::complete(4);
        let m = Matching::new(4, [(1, 2)]).unwrap();
        let s = PathState::new(&h, &m, vec![0, 1, 2, 3]).unwrap();
        assert!(matches!(s.rotate(&h, 1), Err(Error::Rotation(_))));
    }

    #[test]
    fn rotation_keeps_matching_edges() {
        let h = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let m = Matching::new(4, [(2, 3)]).unwrap();
        let s = PathState::new(&h, &m, vec![0, 1, 2, 3]).unwrap();
        let t = s.rotate(&h, 0).unwrap();
        assert_eq!(t.path(), [0, 3, 2, 1]);
        t.check(&h).unwrap();
    }

    #[test]
    fn missing_chord_rejected() {
        let h = Graph::path(4);
        let m = Matching::empty(4);
        let s = PathState::new(&h, &m, vec![0, 1, 2, 3]).unwrap();
        assert!(s.rotate(&h, 0).is_err());
    }

    #[test]
    fn path_must_respect_m() {
        let h = Graph::complete(4);
        let m = Matching::new(4, [(0, 2)]).unwrap();
        assert!(PathState::new(&h, &m, vec![0, 1, 2, 3]).is_err());
        assert!(PathState::new(&h, &m, vec![1, 0]).is_err());
        assert!(PathState::new(&h, &m, vec![1, 0, 2]).is_ok());
    }

    #[test]
    fn closure_in_k5() {
        let h = Graph::complete(5);
        let m = Matching::empty(5);
        let s = PathState::new(&h, &m, vec![0, 1, 2, 3, 4]).unwrap();
        let c = rotation_endpoint_set(&h, &s);
        let mut e = c.endpoints().to_vec();
        e.sort();
        assert_eq!(e, [1, 2, 3, 4]);
        for &v in c.endpoints() {
            let p = c.path_to(v).unwrap();
            assert_eq!((p[0], p[4]), (0, v));
            PathState::new(&h, &m, p).unwrap();
        }
    }

    #[test]
    fn no_chords_no_rotation() {
        let h = Graph::path(5);
        let m = Matching::empty(5);
        let s = PathState::new(&h, &m, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(rotation_endpoint_set(&h, &s).endpoints(), [4]);
    }

    #[test]
    fn per_state_mode_finds_at_least_as_much() {
        let h = Graph::complete(6);
        let m = Matching::new(6, [(2, 3)]).unwrap();
        let s = PathState::new(&h, &m, vec![0, 1, 2, 3, 4, 5]).unwrap();
        let a = rotation_closure(&h, &s, ClosureMode::PerEndpoint);
        let b = rotation_closure(&h, &s, ClosureMode::PerPathState { max_states: 10_000 });
        assert!(b.complete);
        assert!(b.len() >= a.len());
        for &v in b.endpoints() {
            PathState::new(&h, &m, b.path_to(v).unwrap()).unwrap();
        }
    }
}
