use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::search::{hamilton_with_matching, SearchOptions};
use crate::graph::{Graph, GraphBuilder, HamiltonCycle, LinearForest, Matching};
use crate::{Error, Rational, Result};

/// Hamilton cycle of `g` through every edge of `e`, given `δ(G) ≥ n/2 + t` and `e(E) ≤ 2t`.
pub fn posa_force(g: &Graph, e: &LinearForest, t: Rational) -> Result<HamiltonCycle> {
    posa_force_with(g, e, t, &SearchOptions::default())
}

pub fn posa_force_with(g: &Graph, e: &LinearForest, t: Rational, opts: &SearchOptions) -> Result<HamiltonCycle> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Precondition(format!("n = {n} < 3")));
    }
    let two = Rational::from_integer(2);
    let delta = Rational::from_integer(g.min_degree() as i64);
    if t < Rational::from_integer(0) || two * delta < Rational::from_integer(n as i64) + two * t {
        return Err(Error::Precondition(format!("minimum degree {} is below n/2 + t = {n}/2 + {t}", g.min_degree())));
    }
    if Rational::from_integer(e.size() as i64) > two * t {
        return Err(Error::Precondition(format!("forest has {} edges, more than 2t = {}", e.size(), two * t)));
    }
    cycle_through_forest(g, e, opts)
}

/// Contracts every path of `e` to a matching edge between its ends, runs the
/// rotation search on the kept vertices and expands the result. No degree
/// condition is checked, so failure is possible on any input.
pub fn cycle_through_forest(g: &Graph, e: &LinearForest, opts: &SearchOptions) -> Result<HamiltonCycle> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Precondition(format!("n = {n} < 3")));
    }
    e.check_in(g)?;

    let long: Vec<&Vec<usize>> = e.paths().iter().filter(|p| p.len() >= 2).collect();
    if long.len() == 1 && long[0].len() == n {
        let p = long[0];
        return HamiltonCycle::new(g, p.clone());
    }
    let mut interior = vec![false; n];
    for p in &long {
        for &v in &p[1..p.len() - 1] {
            interior[v] = true;
        }
    }
    let mut index = vec![usize::MAX; n];
    let mut orig = Vec::new();
    for v in 0..n {
        if !interior[v] {
            index[v] = orig.len();
            orig.push(v);
        }
    }
    let k = orig.len();
    let mut chain = vec![Vec::new(); k];
    let mut pairs = Vec::new();
    for p in &long {
        let (a, b) = (index[p[0]], index[p[p.len() - 1]]);
        pairs.push((a, b));
        chain[a] = p.to_vec();
        chain[b] = p.iter().rev().copied().collect();
    }
    let m = Matching::new(k, pairs)?;
    let mut hb = GraphBuilder::new(k);
    for (i, &v) in orig.iter().enumerate() {
        for &u in g.neighbours(v) {
            let j = index[u];
            if j != usize::MAX && j > i && !m.contains(i, j) {
                hb.add_edge(i, j)?;
            }
        }
    }
    let h = hb.build();
    let cyc = hamilton_with_matching(&h, &m, opts).map_err(|f| {
        Error::SearchFailed(format!(
            "no cycle found on the contracted instance ({:?}, best path {})",
            f.kind, f.best_path_len
        ))
    })?;
    let order = cyc.into_order();
    let mut out = Vec::with_capacity(n);
    for i in 0..k {
        let (v, w) = (order[i], order[(i + 1) % k]);
        if m.contains(v, w) {
            let c = &chain[v];
            out.extend_from_slice(&c[..c.len() - 1]);
        } else {
            out.push(orig[v]);
        }
    }
    let c = HamiltonCycle::new(g, out)?;
    let on_cycle: Vec<_> = c.edges().collect();
    for edge in e.edges() {
        if !on_cycle.contains(&edge) {
            return Err(Error::SearchFailed(format!("forest edge ({}, {}) missing from the cycle", edge.u(), edge.v())));
        }
    }
    Ok(c)
}
