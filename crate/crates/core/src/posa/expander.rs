use alloc::vec;
use alloc::vec::Vec;

use rand::seq::IndexedRandom;
use rand::RngExt;

use crate::graph::{Graph, Matching, Vertex};
use crate::random::rng_from_seed;

/// Graphs with at most this many vertices are checked over every small set.
pub const EXHAUSTIVE_EXPANDER_LIMIT: usize = 24;
pub const DEFAULT_EXPANDER_SAMPLES: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    Exhaustive,
    /// Randomized search that examined this many candidate sets.
    Sampled(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpanderReport {
    pub connected: bool,
    pub verified: Verification,
    /// A set `U` with `|U| ≤ |V|/8` and `|N_H(U) ∖ V(M)| < 2|U|`.
    pub violating: Option<Vec<Vertex>>,
}

impl ExpanderReport {
    pub fn is_expander(&self) -> bool {
        self.connected && self.violating.is_none()
    }
}

/// `|N_H(U) ∖ V(M)|` where `N_H(U)` excludes `U` itself.
pub fn free_neighbourhood_size(h: &Graph, m: &Matching, set: &[Vertex]) -> usize {
    let mut mark = vec![false; h.n()];
    for &u in set {
        mark[u] = true;
    }
    let mut count = 0;
    for &u in set {
        for &w in h.neighbours(u) {
            if !mark[w] {
                mark[w] = true;
                if !m.covers(w) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Checks connectivity and `|N_H(U) ∖ V(M)| ≥ 2|U|` for every `|U| ≤ |V|/8`.
pub fn is_m_respecting_expander(h: &Graph, m: &Matching) -> ExpanderReport {
    is_m_respecting_expander_with(h, m, DEFAULT_EXPANDER_SAMPLES, 0)
}

pub fn is_m_respecting_expander_with(h: &Graph, m: &Matching, samples: usize, seed: u64) -> ExpanderReport {
    let n = h.n();
    let connected = h.is_connected();
    let max_size = n / 8;
    if n <= EXHAUSTIVE_EXPANDER_LIMIT {
        let mut set = Vec::new();
        let violating = exhaustive(h, m, 0, max_size, &mut set);
        return ExpanderReport { connected, verified: Verification::Exhaustive, violating };
    }
    let violates = |s: &[Vertex]| free_neighbourhood_size(h, m, s) < 2 * s.len();
    for v in 0..n {
        if max_size >= 1 && violates(&[v]) {
            return ExpanderReport { connected, verified: Verification::Sampled(v + 1), violating: Some(vec![v]) };
        }
    }
    let mut rng = rng_from_seed(seed);
    let mut checked = n;
    // low free-degree vertices seed the greedy growth more often
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (h.neighbours(v).iter().filter(|&&w| !m.covers(w)).count(), v));
    let low = &order[..(n / 4).max(1)];
    while checked < samples.max(n) && max_size >= 2 {
        let start = if rng.random_bool(0.5) { *low.choose(&mut rng).unwrap() } else { rng.random_range(0..n) };
        let target = rng.random_range(2..=max_size);
        let mut set = vec![start];
        let mut in_set = vec![false; n];
        in_set[start] = true;
        while set.len() < target {
            let mut cands: Vec<Vertex> = set
                .iter()
                .flat_map(|&u| h.neighbours(u).iter().copied())
                .filter(|&w| !in_set[w])
                .collect();
            cands.sort_unstable();
            cands.dedup();
            if cands.is_empty() || rng.random_bool(0.1) {
                cands = (0..n).filter(|&w| !in_set[w]).collect();
            }
            let next = if rng.random_bool(0.7) {
                let sample: Vec<Vertex> = (0..cands.len().min(8)).map(|_| *cands.choose(&mut rng).unwrap()).collect();
                *sample
                    .iter()
                    .min_by_key(|&&w| {
                        set.push(w);
                        let s = free_neighbourhood_size(h, m, &set);
                        set.pop();
                        s
                    })
                    .unwrap()
            } else {
                *cands.choose(&mut rng).unwrap()
            };
            set.push(next);
            in_set[next] = true;
            checked += 1;
            if violates(&set) {
                set.sort_unstable();
                return ExpanderReport { connected, verified: Verification::Sampled(checked), violating: Some(set) };
            }
        }
    }
    ExpanderReport { connected, verified: Verification::Sampled(checked), violating: None }
}

fn exhaustive(h: &Graph, m: &Matching, from: Vertex, max_size: usize, set: &mut Vec<Vertex>) -> Option<Vec<Vertex>> {
    if set.len() == max_size {
        return None;
    }
    for v in from..h.n() {
        set.push(v);
        if free_neighbourhood_size(h, m, set) < 2 * set.len() {
            return Some(set.clone());
        }
        if let Some(found) = exhaustive(h, m, v + 1, max_size, set) {
            return Some(found);
        }
        set.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_expands() {
        let r = is_m_respecting_expander(&Graph::complete(8), &Matching::empty(8));
        assert_eq!(r.verified, Verification::Exhaustive);
        assert!(r.is_expander());
    }

    #[test]
    fn disconnected_is_not() {
        let g = Graph::from_edges(8, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_m_respecting_expander(&g, &Matching::empty(8)).is_expander());
    }

    #[test]
    fn cycle_16_fails_on_adjacent_pair() {
        let r = is_m_respecting_expander(&Graph::cycle(16), &Matching::empty(16));
        assert!(r.connected);
        let u = r.violating.unwrap();
        assert!(u.len() <= 2);
        assert!(free_neighbourhood_size(&Graph::cycle(16), &Matching::empty(16), &[0, 1]) < 4);
    }

    #[test]
    fn sampled_mode_on_large_cycle() {
        let r = is_m_respecting_expander_with(&Graph::cycle(40), &Matching::empty(40), 2000, 1);
        assert!(matches!(r.verified, Verification::Sampled(_)));
        assert!(r.violating.is_some());
    }

    #[test]
    fn matching_vertices_do_not_count() {
        // K_9: a single vertex sees 8 others, but 7 of them are matched
        let m = Matching::new(9, [(1, 2), (3, 4), (5, 6)]).unwrap();
        let r = is_m_respecting_expander(&Graph::complete(9), &m);
        assert!(r.is_expander());
        assert_eq!(free_neighbourhood_size(&Graph::complete(9), &m, &[0]), 2);
    }
}
