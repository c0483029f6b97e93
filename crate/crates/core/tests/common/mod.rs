//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use colourbias_core::{EdgeColouring, Graph};
use proptest::prelude::*;

/// Graphs on `1..=max_n` vertices, every pair present with probability ~`density`.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(any::<bool>(), pairs)).prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph with an `r`-colouring drawn per edge.
pub fn coloured_graph(max_n: usize, max_r: usize) -> impl Strategy<Value = (Graph, EdgeColouring)> {
    (graph(max_n), 1..=max_r).prop_flat_map(|(g, r)| {
        let m = g.edge_count();
        (Just(g), Just(r), prop::collection::vec(1..=r, m)).prop_map(|(g, r, cols)| {
            let mut it = cols.into_iter();
            let c = EdgeColouring::from_fn(&g, r, |_| it.next().unwrap()).unwrap();
            (g, c)
        })
    })
}

pub fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|v| g.neighbours(v).iter().fold(0, |a, &u| a | 1 << u)).collect()
}

/// Maximum matching size by DP over vertex subsets (n ≤ 20).
pub fn brute_matching(g: &Graph) -> usize {
    let adj = masks(g);
    let n = adj.len();
    let mut f = vec![0u8; 1 << n];
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = f[rest];
        let mut c = adj[v] as usize & rest;
        while c != 0 {
            let u = c.trailing_zeros();
            best = best.max(1 + f[rest & !(1 << u)]);
            c &= c - 1;
        }
        f[mask] = best;
    }
    f[(1 << n) - 1] as usize
}

/// Number of odd components of `g` after deleting `removed`.
pub fn odd_components_without(g: &Graph, removed: &[usize]) -> usize {
    let n = g.n();
    let mut gone = vec![false; n];
    for &v in removed {
        gone[v] = true;
    }
    let mut seen = gone.clone();
    let mut odd = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for &w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        odd += size % 2;
    }
    odd
}
