//! Monochromatic linear forests and the clean-up that hands their endpoints to
//! the rotation engine.

mod cleanup;
mod hall;

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::RngExt;

use crate::graph::{colour_class, Colour, EdgeColouring, Graph, LinearForest, Vertex, VertexSet};
use crate::matching::max_matching;
use crate::random::{rng_stream, SeededRng};
use crate::{Error, Result};

pub use cleanup::{cleanup, endpoints_matching, CleanupDiagnostics, CleanupFailure, CleanupParams, CleanupResult};
pub use hall::{bigamy_hall_matchings, demand_matching, BigamyOutcome};

pub const DEFAULT_RESTARTS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestPlan {
    pub forest: LinearForest,
    pub colour: Colour,
    pub spanned: VertexSet,
    pub path_count: usize,
    /// Size of the colour-class matching the best forest was seeded from.
    pub seed_matching: usize,
    /// `false` when the forest is smaller than the requested target.
    pub reached_target: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForestOptions {
    pub restarts: usize,
    pub seed: u64,
}

impl Default for ForestOptions {
    fn default() -> Self {
        ForestOptions { restarts: DEFAULT_RESTARTS, seed: 0 }
    }
}

pub fn grow_mono_forest(h: &Graph, c: &EdgeColouring, target: usize, max_paths: usize) -> Result<ForestPlan> {
    grow_mono_forest_with(h, c, target, max_paths, &ForestOptions::default())
}

/// Seeds paths with a maximum matching of one colour class, grows them at both
/// ends inside the class (rotating when stuck), joins paths whose ends meet,
/// keeps the longest `max_paths` and trims to `target` edges. Restarts cycle
/// through the colours, largest matching first.
pub fn grow_mono_forest_with(
    h: &Graph,
    c: &EdgeColouring,
    target: usize,
    max_paths: usize,
    opts: &ForestOptions,
) -> Result<ForestPlan> {
    let n = h.n();
    if max_paths == 0 && target > 0 {
        return Err(Error::InvalidParameter("max_paths must be positive".into()));
    }
    let mut classes = Vec::new();
    for col in 1..=c.r() {
        let g = colour_class(h, c, col)?;
        if g.edge_count() > 0 {
            let m = max_matching(&g);
            classes.push((col, g, m));
        }
    }
    if classes.is_empty() {
        return Ok(ForestPlan {
            forest: LinearForest::empty(n),
            colour: 1,
            spanned: VertexSet::new(n),
            path_count: 0,
            seed_matching: 0,
            reached_target: target == 0,
        });
    }
    classes.sort_by(|a, b| b.2.len().cmp(&a.2.len()).then(a.0.cmp(&b.0)));

    // (size, restart, colour, class size, paths)
    #[allow(clippy::type_complexity)]
    let mut best: Option<(usize, usize, Colour, usize, Vec<Vec<Vertex>>)> = None;
    for j in 0..opts.restarts.max(1) {
        let (col, g, m) = &classes[j % classes.len()];
        let mut rng = rng_stream(opts.seed, j as u64);
        let mut paths = grow_once(g, m.edges().iter().map(|e| vec![e.u(), e.v()]).collect(), &mut rng);
        paths.sort_by_key(|p| core::cmp::Reverse(p.len()));
        paths.truncate(max_paths);
        trim(&mut paths, target);
        let size: usize = paths.iter().map(|p| p.len() - 1).sum();
        let count = paths.len();
        let better = match &best {
            None => true,
            Some((s, k, ..)) => size > *s || (size == *s && count < *k),
        };
        if better {
            best = Some((size, count, *col, m.len(), paths));
        }
        if size >= target && count <= 1 {
            break;
        }
    }
    let (size, _, colour, seed_matching, paths) = best.expect("at least one restart");
    let forest = LinearForest::new(n, paths)?;
    Ok(ForestPlan {
        spanned: forest.spanned(),
        path_count: forest.path_count(),
        forest,
        colour,
        seed_matching,
        reached_target: size >= target,
    })
}

fn grow_once(g: &Graph, mut paths: Vec<Vec<Vertex>>, rng: &mut SeededRng) -> Vec<Vec<Vertex>> {
    let n = g.n();
    paths.shuffle(rng);
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (i, p) in paths.iter().enumerate() {
        for &v in p {
            owner[v] = Some(i);
        }
    }
    let mut alive = vec![true; paths.len()];
    loop {
        let mut progress = false;
        for i in 0..paths.len() {
            if !alive[i] {
                continue;
            }
            for _side in 0..2 {
                while extend_back(g, &mut paths[i], &mut owner, i, rng) {
                    progress = true;
                }
                if let Some(j) = join_back(g, &mut paths, &mut owner, &alive, i) {
                    alive[j] = false;
                    progress = true;
                }
                paths[i].reverse();
            }
        }
        if !progress {
            progress = (0..paths.len()).filter(|&i| alive[i]).any(|i| rotate_for_room(g, &mut paths[i], &owner));
        }
        if !progress {
            break;
        }
    }
    paths.into_iter().zip(alive).filter(|(p, a)| *a && p.len() >= 2).map(|(p, _)| p).collect()
}

fn free_degree(g: &Graph, v: Vertex, owner: &[Option<usize>]) -> usize {
    g.neighbours(v).iter().filter(|&&w| owner[w].is_none()).count()
}

/// Appends the free neighbour of the last vertex with the fewest free neighbours.
fn extend_back(g: &Graph, path: &mut Vec<Vertex>, owner: &mut [Option<usize>], id: usize, rng: &mut SeededRng) -> bool {
    let end = *path.last().expect("non-empty path");
    let mut best = Vec::new();
    let mut best_deg = usize::MAX;
    for &w in g.neighbours(end) {
        if owner[w].is_none() {
            let d = free_degree(g, w, owner);
            if d < best_deg {
                best_deg = d;
                best.clear();
            }
            if d == best_deg {
                best.push(w);
            }
        }
    }
    if best.is_empty() {
        return false;
    }
    let w = best[rng.random_range(0..best.len())];
    owner[w] = Some(id);
    path.push(w);
    true
}

/// Merges another path onto the last vertex of path `i` if one of its ends is adjacent.
fn join_back(g: &Graph, paths: &mut [Vec<Vertex>], owner: &mut [Option<usize>], alive: &[bool], i: usize) -> Option<usize> {
    let end = *paths[i].last().expect("non-empty path");
    for &w in g.neighbours(end) {
        let Some(j) = owner[w] else { continue };
        if j == i || !alive[j] {
            continue;
        }
        let other = &paths[j];
        let mut other = if other[0] == w {
            other.clone()
        } else if *other.last().expect("non-empty path") == w {
            other.iter().rev().copied().collect()
        } else {
            continue;
        };
        for &v in &other {
            owner[v] = Some(i);
        }
        paths[i].append(&mut other);
        paths[j].clear();
        return Some(j);
    }
    None
}

/// A single rotation at either end that exposes a vertex with a free neighbour.
fn rotate_for_room(g: &Graph, path: &mut [Vertex], owner: &[Option<usize>]) -> bool {
    for _side in 0..2 {
        let k = path.len();
        if k >= 3 {
            let end = path[k - 1];
            for j in 0..k - 2 {
                if g.has_edge(path[j], end) && free_degree(g, path[j + 1], owner) > 0 {
                    path[j + 1..].reverse();
                    return true;
                }
            }
        }
        path.reverse();
    }
    false
}

/// Removes `size − target` edges, dropping the shortest paths first.
fn trim(paths: &mut Vec<Vec<Vertex>>, target: usize) {
    let size: usize = paths.iter().map(|p| p.len() - 1).sum();
    let mut excess = size.saturating_sub(target);
    paths.sort_by_key(|p| core::cmp::Reverse(p.len()));
    while excess > 0 {
        let last = paths.last_mut().expect("excess implies a path");
        let edges = last.len() - 1;
        if edges <= excess {
            excess -= edges;
            paths.pop();
        } else {
            last.truncate(last.len() - excess);
            excess = 0;
        }
    }
}
