use alloc::vec::Vec;

use super::exact::{longest_m_respecting_path, EXACT_LONGEST_LIMIT};
use super::path::{rotation_endpoint_set, PathState};
use super::search::{longest_path_heuristic, SearchOptions};
use crate::graph::{Edge, Graph, HamiltonCycle, Matching, Vertex};
use crate::{Error, Result};

/// At most two vertex pairs, none of them an edge of `H_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Booster {
    pub pairs: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoosterOutcome {
    AlreadyHamiltonian(HamiltonCycle),
    Booster(Booster),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoosterReport {
    pub outcome: BoosterOutcome,
    /// The longest M-respecting path the booster was derived from.
    pub longest_path: Vec<Vertex>,
    /// Distinct non-edges `{u, w}` closing a rotated copy of that path.
    pub candidates: usize,
}

/// Finds a booster for `H_0 + M`, or a Hamilton cycle if one already exists.
///
/// Starting from a longest M-respecting path `P` (exact for `n ≤ 20`), every
/// endpoint `u` reachable with `x_1` fixed is itself fixed and rotated again.
/// Any non-edge `{u, w}` between the two ends of such a path closes an
/// M-respecting cycle on `V(P)`, which is either Hamiltonian or, by
/// connectivity, opens into a longer path. If every such pair is already an
/// edge, that cycle exists in `H_0` and the path is extended instead.
pub fn find_booster(h0: &Graph, m: &Matching) -> Result<BoosterReport> {
    let n = h0.n();
    if n < 3 {
        return Err(Error::Precondition("need at least 3 vertices".into()));
    }
    if m.n() != n {
        return Err(Error::VertexCountMismatch { left: m.n(), right: n });
    }
    let mut path = if n <= EXACT_LONGEST_LIMIT {
        longest_m_respecting_path(h0, m).expect("n is within the exact limit")
    } else {
        longest_path_heuristic(h0, m, &SearchOptions::default())
    };
    loop {
        let state = PathState::new(h0, m, path.clone())?;
        let first = rotation_endpoint_set(h0, &state);
        let mut found: Option<Edge> = None;
        let mut closing: Option<Vec<Vertex>> = None;
        let mut seen: Vec<Edge> = Vec::new();
        for &u in first.endpoints() {
            let pu = first.path_to(u).expect("endpoint has a path");
            let rev = PathState::new(h0, m, pu.iter().rev().copied().collect())?;
            let second = rotation_endpoint_set(h0, &rev);
            for &w in second.endpoints() {
                if path.len() < 3 {
                    continue;
                }
                let e = Edge::new(u, w);
                if h0.has_edge(u, w) {
                    if closing.is_none() {
                        closing = second.path_to(w);
                    }
                } else if !seen.contains(&e) {
                    seen.push(e);
                    found.get_or_insert(e);
                }
            }
        }
        if let Some(cyc) = closing.as_ref().filter(|c| c.len() == n) {
            let c = HamiltonCycle::with_matching(h0, m, cyc.clone())?;
            return Ok(BoosterReport { outcome: BoosterOutcome::AlreadyHamiltonian(c), longest_path: path, candidates: 0 });
        }
        if let Some(e) = found {
            return Ok(BoosterReport {
                outcome: BoosterOutcome::Booster(Booster { pairs: alloc::vec![e] }),
                longest_path: path,
                candidates: seen.len(),
            });
        }
        let Some(cyc) = closing else {
            return Err(Error::Precondition("path too short to close".into()));
        };
        path = open_cycle(h0, m, &cyc).ok_or_else(|| {
            Error::Precondition("H_0 is not connected and no booster closes the longest path".into())
        })?;
    }
}

fn open_cycle(h: &Graph, m: &Matching, c: &[Vertex]) -> Option<Vec<Vertex>> {
    let len = c.len();
    let mut on = alloc::vec![false; h.n()];
    for &v in c {
        on[v] = true;
    }
    let (j, w) = c
        .iter()
        .enumerate()
        .find_map(|(j, &x)| h.neighbours(x).iter().find(|&&w| !on[w]).map(|&w| (j, w)))?;
    let x = c[j];
    let mut path = Vec::with_capacity(len + 2);
    if !m.contains(x, c[(j + 1) % len]) {
        path.extend((1..=len).map(|t| c[(j + t) % len]));
    } else {
        path.extend((1..=len).map(|t| c[(j + len - t) % len]));
    }
    path.push(w);
    if let Some(z) = m.mate(w) {
        path.push(z);
    }
    Some(path)
}
