use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;

use super::{all_pairs, rng_stream};
use crate::graph::{Edge, Graph, Matching};
use crate::posa::{hamilton_with_matching, FailureKind, SearchOptions, DEFAULT_BUDGET};
use crate::{Error, Result};

/// A uniformly random ordering of all pairs; `prefix(m)` is `G_{n,m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphProcess {
    n: usize,
    order: Vec<Edge>,
}

impl GraphProcess {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_order(&self) -> &[Edge] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The graph formed by the first `m` edges (`m` is clamped to the total).
    pub fn prefix(&self, m: usize) -> Graph {
        Graph::from_edges(self.n, self.order[..m.min(self.order.len())].iter().copied()).expect("pairs are valid")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HittingTimes {
    pub tau_mindeg2: usize,
    pub tau_conn: usize,
    pub tau_ham: usize,
    /// Some probe exhausted the search budget twice and was treated as non-Hamiltonian.
    pub decider_inconclusive: bool,
    pub probes: usize,
}

impl HittingTimes {
    pub fn equal(&self) -> bool {
        self.tau_ham == self.tau_mindeg2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProcessOptions {
    pub budget: u64,
}

impl Default for ProcessOptions {
    fn default() -> Self {
        ProcessOptions { budget: DEFAULT_BUDGET }
    }
}

pub fn run_process(n: usize, seed: u64) -> Result<(GraphProcess, HittingTimes)> {
    run_process_with(n, seed, &ProcessOptions::default())
}

/// Samples the process and its hitting times. `tau_ham` is found by probing
/// `tau_mindeg2`, then galloping and bisecting upward with the rotation search
/// as the decider.
pub fn run_process_with(n: usize, seed: u64, opts: &ProcessOptions) -> Result<(GraphProcess, HittingTimes)> {
    if n < 3 {
        return Err(Error::InvalidParameter(alloc::format!("n = {n} < 3")));
    }
    let mut order = all_pairs(n);
    order.shuffle(&mut rng_stream(seed, 0));
    let process = GraphProcess { n, order };

    let mut deg = vec![0usize; n];
    let mut below2 = n;
    let mut tau_mindeg2 = 0;
    let mut dsu: Vec<usize> = (0..n).collect();
    let mut parts = n;
    let mut tau_conn = 0;
    for (i, e) in process.order.iter().enumerate() {
        for x in [e.u(), e.v()] {
            deg[x] += 1;
            if deg[x] == 2 {
                below2 -= 1;
            }
        }
        if below2 == 0 && tau_mindeg2 == 0 {
            tau_mindeg2 = i + 1;
        }
        let (a, b) = (find(&mut dsu, e.u()), find(&mut dsu, e.v()));
        if a != b {
            dsu[a] = b;
            parts -= 1;
            if parts == 1 {
                tau_conn = i + 1;
            }
        }
        if tau_mindeg2 != 0 && tau_conn != 0 {
            break;
        }
    }

    let mut probes = 0;
    let mut inconclusive = false;
    let mut decide = |m: usize| -> bool {
        probes += 1;
        let g = process.prefix(m);
        let empty = Matching::empty(n);
        let mut budget = opts.budget;
        for attempt in 0..2 {
            let so = SearchOptions { budget, seed: seed ^ (m as u64) << 20 ^ attempt };
            match hamilton_with_matching(&g, &empty, &so) {
                Ok(_) => return true,
                Err(f) if f.kind == FailureKind::BudgetExhausted => budget *= 4,
                Err(_) => return false,
            }
        }
        inconclusive = true;
        false
    };

    let total = process.len();
    let tau_ham = if decide(tau_mindeg2) {
        tau_mindeg2
    } else {
        let mut lo = tau_mindeg2;
        let mut step = 1;
        let mut hi = loop {
            let probe = (lo + step).min(total);
            if probe == total || decide(probe) {
                break probe;
            }
            lo = probe;
            step *= 2;
        };
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if decide(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };
    let times = HittingTimes { tau_mindeg2, tau_conn, tau_ham, decider_inconclusive: inconclusive, probes };
    Ok((process, times))
}

fn find(dsu: &mut [usize], mut x: usize) -> usize {
    while dsu[x] != x {
        dsu[x] = dsu[dsu[x]];
        x = dsu[x];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_process() {
        for seed in 0..10 {
            let (p, t) = run_process(3, seed).unwrap();
            assert_eq!(p.len(), 3);
            assert_eq!((t.tau_mindeg2, t.tau_ham), (3, 3));
            assert_eq!(t.tau_conn, 2);
        }
    }

    #[test]
    fn prefixes_are_monotone() {
        let (p, t) = run_process(12, 4).unwrap();
        for m in 0..p.len() {
            let a = p.prefix(m);
            let b = p.prefix(m + 1);
            assert_eq!(a.edge_count(), m);
            a.check_subgraph_of(&b).unwrap();
        }
        assert!(t.tau_ham >= t.tau_mindeg2 && t.tau_ham >= t.tau_conn);
        assert!(p.prefix(t.tau_mindeg2).min_degree() >= 2);
        assert!(p.prefix(t.tau_mindeg2 - 1).min_degree() < 2);
    }
}
