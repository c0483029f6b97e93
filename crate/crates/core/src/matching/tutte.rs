use alloc::vec::Vec;

use super::blossom::gallai_edmonds_even_set;
use crate::graph::{Graph, Vertex, VertexSet};

/// Graphs with at most this many vertices get an exhaustive search over `U`.
pub const EXHAUSTIVE_WITNESS_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteBergeWitness {
    pub set: Vec<Vertex>,
    pub odd_components: usize,
    /// `odd(G − U) − |U|`; equals `n − 2μ(G)` for a maximizing `U`.
    pub deficiency: usize,
    /// `μ(G) = (n − deficiency)/2`.
    pub matching_number: usize,
    pub exhaustive: bool,
}

fn odd_components_without(g: &Graph, removed: &VertexSet) -> (usize, usize) {
    let n = g.n();
    let mut seen = removed.clone();
    let mut stack = Vec::new();
    let (mut odd, mut all) = (0, 0);
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        seen.insert(s);
        stack.push(s);
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for &u in g.neighbours(v) {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        all += 1;
        odd += size % 2;
    }
    (odd, all)
}

/// A set `U` maximizing `odd(G − U) − |U|`.
///
/// Exhaustive over all `U` when `n ≤ 20`; otherwise `U` is the Gallai–Edmonds
/// set `A = N(D) ∖ D`.
pub fn tutte_berge_witness(g: &Graph) -> TutteBergeWitness {
    let n = g.n();
    if n <= EXHAUSTIVE_WITNESS_LIMIT {
        exhaustive(g)
    } else {
        let (m, d) = gallai_edmonds_even_set(g);
        let mut a = VertexSet::new(n);
        for v in d.iter() {
            for &u in g.neighbours(v) {
                if !d.contains(u) {
                    a.insert(u);
                }
            }
        }
        let (odd, _) = odd_components_without(g, &a);
        let deficiency = odd - a.len();
        debug_assert_eq!(deficiency, n - 2 * m.len());
        TutteBergeWitness {
            set: a.to_vec(),
            odd_components: odd,
            deficiency,
            matching_number: (n - deficiency) / 2,
            exhaustive: false,
        }
    }
}

fn exhaustive(g: &Graph) -> TutteBergeWitness {
    let n = g.n();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbours(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = (0i64, 0u32, 0usize);
    let mut first = true;
    for u in 0..=full {
        let mut rem = full & !u;
        let mut odd = 0usize;
        while rem != 0 {
            let start = rem & rem.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= adj[v];
                }
                next &= rem & !comp;
                comp |= next;
                frontier = next;
            }
            rem &= !comp;
            odd += (comp.count_ones() % 2) as usize;
        }
        let def = odd as i64 - u.count_ones() as i64;
        if first || def > best.0 {
            best = (def, u, odd);
            first = false;
        }
        if u == full {
            break;
        }
    }
    let (def, u, odd) = best;
    let deficiency = def as usize;
    TutteBergeWitness {
        set: (0..n).filter(|&v| u >> v & 1 == 1).collect(),
        odd_components: odd,
        deficiency,
        matching_number: (n - deficiency) / 2,
        exhaustive: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::max_matching;

    #[test]
    fn k4_needs_no_set() {
        let w = tutte_berge_witness(&Graph::complete(4));
        assert!(w.set.is_empty());
        assert_eq!(w.deficiency, 0);
    }

    #[test]
    fn star_k13() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let w = tutte_berge_witness(&g);
        assert_eq!(w.set, [0]);
        assert_eq!((w.odd_components, w.deficiency, w.matching_number), (3, 2, 1));
    }

    #[test]
    fn triangle_plus_isolated() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let w = tutte_berge_witness(&g);
        assert_eq!((w.deficiency, w.matching_number), (2, 1));
    }

    #[test]
    fn empty_graph() {
        let w = tutte_berge_witness(&Graph::empty(0));
        assert_eq!(w.deficiency, 0);
        let w = tutte_berge_witness(&Graph::empty(3));
        assert_eq!(w.deficiency, 3);
    }

    #[test]
    fn large_graph_uses_gallai_edmonds() {
        // a star with 24 leaves plus a disjoint path on 5 vertices
        let mut es: Vec<(usize, usize)> = (1..25).map(|i| (0, i)).collect();
        es.extend([(25, 26), (26, 27), (27, 28), (28, 29)]);
        let g = Graph::from_edges(30, es).unwrap();
        let w = tutte_berge_witness(&g);
        assert!(!w.exhaustive);
        let mu = max_matching(&g).len();
        assert_eq!(mu, 3);
        assert_eq!(w.matching_number, mu);
        assert_eq!(w.deficiency, 30 - 2 * mu);
        assert!(w.set.contains(&0));
    }
}
