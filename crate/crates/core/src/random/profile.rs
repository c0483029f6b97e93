use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Degree at or below which a vertex counts as low.
    pub threshold: f64,
    pub low_degree: Vec<Vertex>,
    /// `max_degree ≤ 10np`.
    pub max_degree_bound_holds: bool,
    /// No two low-degree vertices within distance 5.
    pub separated: bool,
    pub close_pair: Option<(Vertex, Vertex, usize)>,
}

/// Degree statistics with `K = {v : d(v) ≤ np/2500}`.
pub fn degree_profile(g: &Graph, p: f64) -> DegreeProfile {
    degree_profile_with(g, p, g.n() as f64 * p / 2500.0)
}

/// As [`degree_profile`] with an explicit low-degree threshold.
pub fn degree_profile_with(g: &Graph, p: f64, threshold: f64) -> DegreeProfile {
    let n = g.n();
    let low: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) as f64 <= threshold).collect();
    let mut is_low = alloc::vec![false; n];
    for &v in &low {
        is_low[v] = true;
    }
    let mut close_pair = None;
    'outer: for &v in &low {
        let dist = g.distances_within(v, 5);
        for &u in &low {
            if u != v {
                if let Some(d) = dist[u] {
                    close_pair = Some((v.min(u), v.max(u), d));
                    break 'outer;
                }
            }
        }
    }
    DegreeProfile {
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        threshold,
        low_degree: low,
        max_degree_bound_holds: g.max_degree() as f64 <= 10.0 * n as f64 * p,
        separated: close_pair.is_none(),
        close_pair,
    }
}
