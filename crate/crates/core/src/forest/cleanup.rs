use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::RngExt;

use super::hall::{bigamy_hall_matchings, demand_matching, BigamyOutcome};
use crate::graph::{Colour, Edge, Graph, LinearForest, Matching, Vertex, VertexSet};
use crate::random::rng_stream;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CleanupParams {
    pub p: f64,
    pub delta: f64,
    pub r: Colour,
    pub seed: u64,
    /// Number of `W′` samples before giving up.
    pub max_attempts: usize,
    /// Replaces `np/5000` as the low-degree cut-off.
    pub low_degree_threshold: Option<f64>,
    /// Extra lower bound on `d_H(u, U)`; the `p|U|/5000` term is below 1 at
    /// desk scale, so a floor of 2 keeps every vertex of `U` usable by a cycle.
    pub u_degree_floor: usize,
    /// Fail when no sample meets `d_H(u, W) ≤ (np)^{1/5}`. When `false` the
    /// least loaded sample is returned and the miss is reported.
    pub require_b6: bool,
}

impl CleanupParams {
    pub fn new(p: f64, delta: f64, r: Colour) -> CleanupParams {
        CleanupParams { p, delta, r, seed: 0, max_attempts: 100, low_degree_threshold: None, u_degree_floor: 0, require_b6: true }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CleanupFailure {
    #[error("invalid input: {0}")]
    Input(Error),
    #[error("vertex {0} has degree below 2 in H")]
    MinDegree(Vertex),
    #[error("low-degree vertices {u} and {v} are at distance {distance}")]
    LowDegreeClose { u: Vertex, v: Vertex, distance: usize },
    #[error("Hall condition fails while extending paths: |N(Z)| = {} < 2|Z| = {}", neighbourhood.len(), 2 * z.len())]
    Hall { z: Vec<Vertex>, neighbourhood: Vec<Vertex> },
    #[error("no endpoint set found after {attempts} samples (last q = {q})")]
    Sampling { attempts: usize, q: f64, hall_failures: usize, load_failures: usize },
    #[error("postcondition violated: {0}")]
    Postcondition(String),
}

impl From<CleanupFailure> for Error {
    fn from(f: CleanupFailure) -> Error {
        Error::Cleanup(format!("{f}"))
    }
}

/// Asymptotic bookkeeping bounds, reported rather than enforced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CleanupDiagnostics {
    /// `n − |S| − 300r/(δ²p)`.
    pub u_lower_bound: f64,
    pub b2: bool,
    /// `2000r/(δ²p)`, the bound for both dropped edges and path count.
    pub path_bound: f64,
    pub b3: bool,
    pub b4: bool,
    /// `(np)^{1/5}`.
    pub endpoint_degree_bound: f64,
    pub max_endpoint_degree: usize,
    pub b6: bool,
    /// The sampled `W′` met both concentration conditions of the proof.
    pub sample_concentrated: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CleanupResult {
    pub t: VertexSet,
    pub u: VertexSet,
    /// Vertices of `T` with high degree into `U`; endpoints before relocation.
    pub a: VertexSet,
    pub forest_star: LinearForest,
    /// Endpoints of the paths of `forest_star`.
    pub w: Vec<Vertex>,
    pub dropped_edges: usize,
    pub delta: f64,
    pub low_degree: Vec<Vertex>,
    pub attempts: usize,
    pub q: f64,
    pub diagnostics: CleanupDiagnostics,
}

fn deg_condition(dh: usize, dg: usize, comp: usize, params: &CleanupParams) -> bool {
    dh >= params.u_degree_floor && dh as f64 >= (params.p * comp as f64 / 5000.0).max((0.5 + params.delta) * dg as f64)
}

/// Splits paths wherever `keep` is false.
fn induced_paths(paths: &[Vec<Vertex>], keep: impl Fn(Vertex) -> bool) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for p in paths {
        let mut cur = Vec::new();
        for &v in p {
            if keep(v) {
                cur.push(v);
            } else if !cur.is_empty() {
                out.push(core::mem::take(&mut cur));
            }
        }
        if !cur.is_empty() {
            out.push(cur);
        }
    }
    out
}

/// Absorbs low-degree and badly connected vertices into `T ⊇ S`, re-routes the
/// forest so it covers `T`, and relocates every path end to a fresh vertex of
/// `U = V ∖ T`. `forest` must live in `H`, and `H` must be a spanning subgraph of `G`.
pub fn cleanup(g: &Graph, h: &Graph, forest: &LinearForest, params: &CleanupParams) -> core::result::Result<CleanupResult, CleanupFailure> {
    let n = h.n();
    let input = CleanupFailure::Input;
    if g.n() != n || forest.n() != n {
        return Err(input(Error::VertexCountMismatch { left: g.n(), right: n }));
    }
    h.check_subgraph_of(g).map_err(input)?;
    forest.check_in(h).map_err(input)?;
    if !(params.p > 0.0 && params.p <= 1.0) || !(params.delta > 0.0 && params.delta < 0.5) {
        return Err(input(Error::InvalidParameter(format!("p = {}, delta = {}", params.p, params.delta))));
    }
    if let Some(v) = (0..n).find(|&v| h.degree(v) < 2) {
        return Err(CleanupFailure::MinDegree(v));
    }
    let (p, delta) = (params.p, params.delta);
    let np = n as f64 * p;

    // low-degree vertices and their absorbing paths x1(v), v, x2(v)
    let threshold = params.low_degree_threshold.unwrap_or(np / 5000.0);
    let low: Vec<Vertex> = (0..n).filter(|&v| h.degree(v) as f64 <= threshold).collect();
    let low_set = VertexSet::from_vertices(n, low.iter().copied());
    for &v in &low {
        let dist = h.distances_within(v, 5);
        if let Some(&u) = low.iter().find(|&&u| u != v && dist[u].is_some()) {
            return Err(CleanupFailure::LowDegreeClose { u: v.min(u), v: v.max(u), distance: dist[u].unwrap_or(0) });
        }
    }
    let absorbers: Vec<Vec<Vertex>> = low.iter().map(|&v| vec![h.neighbours(v)[0], v, h.neighbours(v)[1]]).collect();
    let mut k_prime = VertexSet::new(n);
    for pv in &absorbers {
        k_prime.insert(pv[0]);
        k_prime.insert(pv[2]);
    }

    let s = forest.spanned();
    let mut s_prime = s.clone();
    s_prime.union_with(&low_set);
    s_prime.union_with(&k_prime);
    let mut p0 = induced_paths(forest.paths(), |v| !low_set.contains(v) && !k_prime.contains(v));
    p0.extend(absorbers);

    // grow T from S' one violating vertex at a time, lowest index first
    let mut in_t = s_prime.clone();
    let mut dh_out: Vec<usize> = (0..n).map(|v| h.neighbours(v).iter().filter(|&&w| !in_t.contains(w)).count()).collect();
    let mut dg_out: Vec<usize> = (0..n).map(|v| g.neighbours(v).iter().filter(|&&w| !in_t.contains(w)).count()).collect();
    let mut comp = n - in_t.len();
    while let Some(x) = (0..n).find(|&v| !in_t.contains(v) && !deg_condition(dh_out[v], dg_out[v], comp, params)) {
        in_t.insert(x);
        comp -= 1;
        for &w in h.neighbours(x) {
            dh_out[w] -= 1;
        }
        for &w in g.neighbours(x) {
            dg_out[w] -= 1;
        }
    }
    let t = in_t;
    let u_set = t.complement();
    let a = VertexSet::from_vertices(n, s_prime.iter().filter(|&v| deg_condition(dh_out[v], dg_out[v], comp, params)));

    // ordering of T ∖ A: greedy by degree into (A ∪ earlier) ∖ K', low-degree vertices last
    let rest: Vec<Vertex> = t.iter().filter(|&v| !a.contains(v)).collect();
    let mut weight = vec![0usize; n];
    let mut pending = VertexSet::new(n);
    for &y in rest.iter().filter(|&&y| !low_set.contains(y)) {
        pending.insert(y);
        weight[y] = h.neighbours(y).iter().filter(|&&w| a.contains(w) && !k_prime.contains(w)).count();
    }
    let mut order = Vec::with_capacity(rest.len());
    while let Some(y) = pending.iter().max_by(|&x, &y| weight[x].cmp(&weight[y]).then(y.cmp(&x))) {
        pending.remove(y);
        order.push(y);
        if !k_prime.contains(y) {
            for &w in h.neighbours(y) {
                if pending.contains(w) {
                    weight[w] += 1;
                }
            }
        }
    }
    order.extend(rest.iter().copied().filter(|&y| low_set.contains(y)));
    let mut pos = vec![usize::MAX; n];
    for (i, &y) in order.iter().enumerate() {
        pos[y] = i;
    }

    // two out-neighbours per y, into A or earlier in the order
    let adj: Vec<Vec<usize>> = order
        .iter()
        .map(|&y| h.neighbours(y).iter().copied().filter(|&x| a.contains(x) || pos[x] < pos[y]).collect())
        .collect();
    let (phi1, phi2) = match bigamy_hall_matchings(n, &adj) {
        BigamyOutcome::Matchings { first, second } => {
            let mut f1 = vec![usize::MAX; n];
            let mut f2 = vec![usize::MAX; n];
            for (i, &y) in order.iter().enumerate() {
                f1[y] = first[i];
                f2[y] = second[i];
            }
            (f1, f2)
        }
        BigamyOutcome::Violation { z, neighbourhood } => {
            return Err(CleanupFailure::Hall { z: z.into_iter().map(|i| order[i]).collect(), neighbourhood });
        }
    };

    // unfold the out-trees into paths with both ends in A; the latest remaining vertex is a root
    let mut remaining = VertexSet::from_vertices(n, order.iter().copied());
    let mut p_phi = Vec::new();
    for &x in order.iter().rev() {
        if !remaining.contains(x) {
            continue;
        }
        let chain = |phi: &[usize]| {
            let mut out = Vec::new();
            let mut c = x;
            loop {
                c = phi[c];
                out.push(c);
                if a.contains(c) {
                    break out;
                }
            }
        };
        let mut path = chain(&phi1);
        path.reverse();
        path.push(x);
        path.extend(chain(&phi2));
        for &v in &path[1..path.len() - 1] {
            remaining.remove(v);
        }
        p_phi.push(path);
    }
    let mut a_used = VertexSet::new(n);
    for path in &p_phi {
        a_used.insert(path[0]);
        a_used.insert(*path.last().expect("non-empty"));
    }
    let mut p2 = p_phi;
    p2.extend(induced_paths(&p0, |v| a.contains(v) && !a_used.contains(v)));
    let mut covered = VertexSet::new(n);
    for path in &p2 {
        for &v in path {
            covered.insert(v);
        }
    }
    p2.extend(a.iter().filter(|&v| !covered.contains(v)).map(|v| vec![v]));

    // relocate endpoints into a sampled W′ ⊆ U
    // a single-vertex path needs two partners, every other end needs one
    let ends: Vec<Vertex> = p2
        .iter()
        .flat_map(|path| if path.len() == 1 { vec![path[0]] } else { vec![path[0], path[path.len() - 1]] })
        .collect();
    let demand: Vec<usize> = p2.iter().flat_map(|path| if path.len() == 1 { vec![2] } else { vec![1, 1] }).collect();
    let u_list = u_set.to_vec();
    let bound = libm::pow(np, 0.2);
    let q0 = libm::pow(np, -5.0 / 6.0).min(1.0);
    let mut q = q0;
    let (mut hall_failures, mut load_failures) = (0, 0);
    let mut fallback: Option<(usize, f64, Vec<Vec<usize>>, bool)> = None;
    let mut chosen = None;
    for attempt in 0..params.max_attempts.max(1) {
        let mut rng = rng_stream(params.seed, attempt as u64);
        let w_prime: Vec<Vertex> = u_list.iter().copied().filter(|_| rng.random::<f64>() < q).collect();
        let in_wp = VertexSet::from_vertices(n, w_prime.iter().copied());
        let concentrated = u_list.iter().all(|&v| h.degree_into(v, &in_wp) as f64 <= 1.5 * q * dh_out[v] as f64)
            && ends.iter().all(|&z| h.degree_into(z, &in_wp) as f64 >= 0.5 * q * dh_out[z] as f64);
        let adj: Vec<Vec<usize>> = ends.iter().map(|&z| h.neighbours(z).iter().copied().filter(|&w| in_wp.contains(w)).collect()).collect();
        let this_q = q;
        q = (q * 1.25).min(1.0);
        let Ok(partners) = demand_matching(n, &adj, &demand) else {
            hall_failures += 1;
            continue;
        };
        let mut partners = partners;
        let mut load = vec![0usize; n];
        for &w in partners.iter().flatten() {
            for &x in h.neighbours(w) {
                load[x] += 1;
            }
        }
        rebalance(h, &u_set, &in_wp, &adj, &mut partners, &mut load, bound);
        let max_load = u_list.iter().map(|&v| load[v]).max().unwrap_or(0);
        if max_load as f64 <= bound {
            chosen = Some((attempt + 1, this_q, partners, concentrated));
            break;
        }
        load_failures += 1;
        if fallback.as_ref().map_or(true, |f| max_load < f.0) {
            fallback = Some((max_load, this_q, partners, concentrated));
        }
    }
    let (attempts, q_used, partners, concentrated) = match (chosen, fallback) {
        (Some(c), _) => c,
        (None, Some((_, fq, fp, conc))) if !params.require_b6 => (params.max_attempts.max(1), fq, fp, conc),
        _ => {
            return Err(CleanupFailure::Sampling { attempts: params.max_attempts.max(1), q, hall_failures, load_failures });
        }
    };

    let mut star = Vec::with_capacity(p2.len());
    let mut idx = 0;
    for path in p2 {
        if path.len() == 1 {
            star.push(vec![partners[idx][0], path[0], partners[idx][1]]);
            idx += 1;
        } else {
            let mut full = Vec::with_capacity(path.len() + 2);
            full.push(partners[idx][0]);
            full.extend_from_slice(&path);
            full.push(partners[idx + 1][0]);
            idx += 2;
            star.push(full);
        }
    }
    let forest_star = LinearForest::new(n, star).map_err(|e| CleanupFailure::Postcondition(format!("{e}")))?;
    let w: Vec<Vertex> = forest_star.paths().iter().flat_map(|p| [p[0], p[p.len() - 1]]).collect();

    // B1, B5 and the forest itself are checked exactly
    forest_star.check_in(h).map_err(|e| CleanupFailure::Postcondition(format!("{e}")))?;
    if forest_star.spanned().iter().filter(|&v| t.contains(v)).count() != t.len() {
        return Err(CleanupFailure::Postcondition("forest does not cover T".into()));
    }
    for path in forest_star.paths() {
        let ok = path.len() >= 3
            && u_set.contains(path[0])
            && u_set.contains(path[path.len() - 1])
            && path[1..path.len() - 1].iter().all(|&v| t.contains(v));
        if !ok {
            return Err(CleanupFailure::Postcondition("B5".into()));
        }
    }
    if let Some(v) = u_list.iter().find(|&&v| !deg_condition(dh_out[v], dg_out[v], comp, params)) {
        return Err(CleanupFailure::Postcondition(format!("B1 at {v}")));
    }
    let w_set = VertexSet::from_vertices(n, w.iter().copied());
    let max_endpoint_degree = u_list.iter().map(|&v| h.degree_into(v, &w_set)).max().unwrap_or(0);
    let b6 = max_endpoint_degree as f64 <= bound;
    if params.require_b6 && !b6 {
        return Err(CleanupFailure::Postcondition("B6".into()));
    }

    let star_edges: BTreeSet<Edge> = forest_star.edges().collect();
    let dropped_edges = forest.edges().filter(|e| !star_edges.contains(e)).count();
    let scale = params.r as f64 / (delta * delta * p);
    let u_lower_bound = n as f64 - s.len() as f64 - 300.0 * scale;
    let path_bound = 2000.0 * scale;
    let diagnostics = CleanupDiagnostics {
        u_lower_bound,
        b2: u_set.len() as f64 >= u_lower_bound,
        path_bound,
        b3: dropped_edges as f64 <= path_bound,
        b4: forest_star.path_count() as f64 <= path_bound,
        endpoint_degree_bound: bound,
        max_endpoint_degree,
        b6,
        sample_concentrated: concentrated,
    };
    Ok(CleanupResult {
        t,
        u: u_set,
        a,
        forest_star,
        w,
        dropped_edges,
        delta,
        low_degree: low,
        attempts,
        q: q_used,
        diagnostics,
    })
}

/// Swaps partners of overloaded vertices for unused candidates in `W′` that
/// keep every load within `bound`.
fn rebalance(h: &Graph, u_set: &VertexSet, in_wp: &VertexSet, adj: &[Vec<usize>], partners: &mut [Vec<usize>], load: &mut [usize], bound: f64) {
    let n = h.n();
    let mut used = VertexSet::from_vertices(n, partners.iter().flatten().copied());
    let over = |load: &[usize], v: Vertex| u_set.contains(v) && load[v] as f64 > bound;
    for _round in 0..4 * adj.len() + 4 {
        let Some(bad) = (0..n).find(|&v| over(load, v)) else { return };
        let mut fixed = false;
        'slots: for i in 0..adj.len() {
            for slot in 0..partners[i].len() {
                let w = partners[i][slot];
                if !h.has_edge(w, bad) {
                    continue;
                }
                for &x in &adj[i] {
                    if used.contains(x) || !in_wp.contains(x) {
                        continue;
                    }
                    let fits = h.neighbours(x).iter().all(|&y| {
                        let after = load[y] + 1 - usize::from(h.has_edge(w, y));
                        !u_set.contains(y) || after as f64 <= bound
                    });
                    if fits {
                        for &y in h.neighbours(w) {
                            load[y] -= 1;
                        }
                        for &y in h.neighbours(x) {
                            load[y] += 1;
                        }
                        used.remove(w);
                        used.insert(x);
                        partners[i][slot] = x;
                        fixed = true;
                        break 'slots;
                    }
                }
            }
        }
        if !fixed {
            return;
        }
    }
}

/// Pairs the two ends of every path of the cleaned forest.
pub fn endpoints_matching(res: &CleanupResult) -> Result<Matching> {
    let n = res.forest_star.n();
    let mut edges = Vec::with_capacity(res.forest_star.path_count());
    for path in res.forest_star.paths() {
        let (a, b) = (path[0], path[path.len() - 1]);
        if !res.u.contains(a) || !res.u.contains(b) || a == b {
            return Err(Error::InvalidPath(format!("path ends {a}, {b} are not two vertices of U")));
        }
        edges.push(Edge::new(a, b));
    }
    Matching::new(n, edges)
}
