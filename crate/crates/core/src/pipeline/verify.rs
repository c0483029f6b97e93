//! Re-validation of reported cycles. Deliberately written against raw edge
//! lists so it shares nothing with the search code.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Colour, EdgeColouring, Graph, LinearForest, Vertex};

fn key(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Checks that `order` is a Hamilton cycle of `h`, that it contains every
/// edge of `required`, and returns its colour counts for colours `1..=r`.
pub fn verify_cycle(
    h: &Graph,
    c: &EdgeColouring,
    order: &[Vertex],
    required: Option<&LinearForest>,
) -> core::result::Result<Vec<usize>, String> {
    let n = h.n();
    if n < 3 || order.len() != n {
        return Err(format!("cycle has {} vertices, graph has {n}", order.len()));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(format!("vertex {v} is out of range or repeated"));
        }
        seen[v] = true;
    }
    let edges: BTreeSet<(Vertex, Vertex)> = h.edges().map(|e| key(e.u(), e.v())).collect();
    let colours: BTreeMap<(Vertex, Vertex), Colour> = c.iter().map(|(e, col)| (key(e.u(), e.v()), col)).collect();
    let mut counts = vec![0usize; c.r()];
    let mut on_cycle = BTreeSet::new();
    for i in 0..n {
        let k = key(order[i], order[(i + 1) % n]);
        if !edges.contains(&k) {
            return Err(format!("({}, {}) is not an edge of H", k.0, k.1));
        }
        match colours.get(&k) {
            Some(&col) if (1..=c.r()).contains(&col) => counts[col - 1] += 1,
            _ => return Err(format!("({}, {}) has no valid colour", k.0, k.1)),
        }
        on_cycle.insert(k);
    }
    if let Some(f) = required {
        for p in f.paths() {
            for w in p.windows(2) {
                if !on_cycle.contains(&key(w[0], w[1])) {
                    return Err(format!("forest edge ({}, {}) is not on the cycle", w[0], w[1]));
                }
            }
        }
    }
    Ok(counts)
}
