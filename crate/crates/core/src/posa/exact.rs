//! Exact longest M-respecting path by subset dynamic programming.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Matching, Vertex};

/// Largest graph accepted by [`longest_m_respecting_path`].
pub const EXACT_LONGEST_LIMIT: usize = 20;

/// A longest M-respecting path of `H + M`, or `None` if `n` exceeds the limit
/// or no M-respecting path exists (every vertex matched and `n = 0`).
///
/// The state is (vertex set, end, whether the end's matching edge is already
/// on the path). An end whose partner is not yet on the path must continue
/// along its matching edge.
pub fn longest_m_respecting_path(h: &Graph, m: &Matching) -> Option<Vec<Vertex>> {
    let n = h.n();
    if n == 0 || n > EXACT_LONGEST_LIMIT {
        return None;
    }
    let bit = |v: Vertex, sat: bool| 1u64 << (2 * v + sat as usize);
    let mut reach = vec![0u64; 1 << n];
    for v in 0..n {
        reach[1 << v] |= bit(v, !m.covers(v));
    }
    let adj: Vec<u32> = (0..n).map(|v| h.neighbours(v).iter().fold(0, |a, &u| a | 1 << u)).collect();
    let mut best: Option<(u32, usize, Vertex)> = None;
    for s in 1usize..1 << n {
        let mut r = reach[s];
        while r != 0 {
            let b = r.trailing_zeros() as usize;
            r &= r - 1;
            let (x, sat) = (b / 2, b % 2 == 1);
            if sat {
                if best.map_or(true, |(c, _, _)| s.count_ones() > c) {
                    best = Some((s.count_ones(), s, x));
                }
                let mut cand = adj[x] & !(s as u32);
                while cand != 0 {
                    let y = cand.trailing_zeros() as usize;
                    cand &= cand - 1;
                    if let Some(z) = m.mate(y) {
                        if s >> z & 1 == 1 {
                            continue;
                        }
                    }
                    reach[s | 1 << y] |= bit(y, !m.covers(y));
                }
            } else {
                let y = m.mate(x).unwrap();
                if s >> y & 1 == 0 {
                    reach[s | 1 << y] |= bit(y, true);
                }
            }
        }
    }
    let (_, mut s, mut y) = best?;
    let mut path = vec![y];
    let mut sat = true;
    while s.count_ones() > 1 {
        let prev_set = s & !(1 << y);
        let x = if sat && m.covers(y) {
            // entered through the matching edge from an unsatisfied end
            let x = m.mate(y).unwrap();
            debug_assert!(reach[prev_set] & bit(x, false) != 0);
            sat = false;
            x
        } else {
            let x = (0..n)
                .find(|&x| prev_set >> x & 1 == 1 && adj[x] >> y & 1 == 1 && reach[prev_set] & bit(x, true) != 0)
                .expect("predecessor exists");
            sat = true;
            x
        };
        path.push(x);
        s = prev_set;
        y = x;
    }
    path.reverse();
    Some(path)
}
