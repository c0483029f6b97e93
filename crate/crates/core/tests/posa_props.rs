mod common;

use colourbias_core::posa::{
    find_booster, hamilton_with_matching, longest_m_respecting_path, rotation_closure, rotation_endpoint_set,
    BoosterOutcome, ClosureMode, FailureKind, PathState, SearchOptions,
};
use colourbias_core::{Graph, Matching};
use proptest::prelude::*;

/// `(H, M)` with `H` on `lo..=hi` vertices and `M` a matching on up to a third of them.
fn instance(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Matching)> {
    (lo..=hi, 0.2f64..0.9).prop_flat_map(|(n, p)| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            prop::collection::vec(prop::bool::weighted(p), pairs),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            0..=n / 3,
        )
            .prop_map(|(n, bits, order, k)| {
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
                let m = Matching::new(n, order.chunks(2).take(k).map(|c| (c[0], c[1]))).unwrap();
                (Graph::from_edges(n, edges).unwrap(), m)
            })
    })
}

fn m_respecting(h: &Graph, m: &Matching, path: &[usize]) -> bool {
    let mut pos = vec![usize::MAX; h.n()];
    for (i, &v) in path.iter().enumerate() {
        if pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    let steps = path.windows(2).all(|w| h.has_edge(w[0], w[1]) || m.contains(w[0], w[1]));
    let cuts = m.edges().iter().any(|e| {
        let (a, b) = (pos[e.u()], pos[e.v()]);
        (a == usize::MAX) != (b == usize::MAX) || (a != usize::MAX && a.abs_diff(b) != 1)
    });
    steps && !cuts
}

/// Whether `H + M` has a Hamilton cycle through every edge of `M`, by enumeration.
fn brute_hamiltonian_with(h: &Graph, m: &Matching) -> bool {
    let n = h.n();
    let adj: Vec<u32> = (0..n)
        .map(|v| h.neighbours(v).iter().fold(m.mate(v).map_or(0, |w| 1 << w), |a, &u| a | 1 << u))
        .collect();
    fn go(adj: &[u32], m: &Matching, path: &mut Vec<usize>, used: u32, n: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == n {
            if adj[last] & 1 == 0 {
                return false;
            }
            let mut cyc = path.clone();
            cyc.push(path[0]);
            return m.edges().iter().all(|e| cyc.windows(2).any(|w| (w[0], w[1]) == (e.u(), e.v()) || (w[1], w[0]) == (e.u(), e.v())));
        }
        let mut c = adj[last] & !used;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            path.push(v);
            if go(adj, m, path, used | 1 << v, n) {
                return true;
            }
            path.pop();
        }
        false
    }
    n >= 3 && go(&adj, m, &mut vec![0], 1, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rotations_preserve_invariants((h, m) in instance(4, 16), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..60)) {
        let Some(path) = longest_m_respecting_path(&h, &m) else { return Ok(()) };
        prop_assume!(path.len() >= 3);
        let mut state = PathState::new(&h, &m, path).unwrap();
        let mut verts: Vec<usize> = state.path().to_vec();
        verts.sort_unstable();
        for pick in picks {
            let i = pick.index(state.len() - 1);
            if let Ok(next) = state.rotate(&h, i) {
                prop_assert!(m_respecting(&h, &m, next.path()));
                prop_assert_eq!(next.fixed_end(), state.fixed_end());
                prop_assert_eq!(next.end(), state.path()[i + 1]);
                let mut v2 = next.path().to_vec();
                v2.sort_unstable();
                prop_assert_eq!(&v2, &verts);
                state = next;
            }
        }
    }

    #[test]
    fn closure_paths_replay((h, m) in instance(4, 14)) {
        let Some(path) = longest_m_respecting_path(&h, &m) else { return Ok(()) };
        let state = PathState::new(&h, &m, path).unwrap();
        let per_end = rotation_endpoint_set(&h, &state);
        let per_state = rotation_closure(&h, &state, ClosureMode::PerPathState { max_states: 100_000 });
        for &v in per_end.endpoints() {
            let p = per_end.path_to(v).unwrap();
            prop_assert_eq!(p[0], state.fixed_end());
            prop_assert_eq!(*p.last().unwrap(), v);
            prop_assert!(m_respecting(&h, &m, &p));
        }
        // Keeping one path per endpoint can only lose endpoints, never invent them.
        for &v in per_end.endpoints() {
            prop_assert!(per_state.contains(v));
        }
        for &v in per_state.endpoints() {
            prop_assert!(m_respecting(&h, &m, &per_state.path_to(v).unwrap()));
        }
    }

    #[test]
    fn search_output_is_valid((h, m) in instance(3, 11)) {
        let exists = brute_hamiltonian_with(&h, &m);
        match hamilton_with_matching(&h, &m, &SearchOptions { budget: 200_000, seed: 1 }) {
            Ok(cyc) => {
                prop_assert!(exists);
                let mut order = cyc.order().to_vec();
                prop_assert_eq!(order.len(), h.n());
                order.push(order[0]);
                prop_assert!(m_respecting(&h, &m, &order[..h.n()]));
                prop_assert!(h.has_edge(order[0], order[h.n() - 1]) || m.contains(order[0], order[h.n() - 1]));
            }
            Err(f) => {
                if let FailureKind::NotHamiltonian(why) = &f.kind {
                    prop_assert!(!exists, "refuted a Hamiltonian instance: {}", why);
                }
                prop_assert!(!matches!(f.kind, FailureKind::InvalidInput(_)));
            }
        }
    }

    #[test]
    fn boosters_make_progress((h, m) in instance(5, 11)) {
        prop_assume!(h.is_connected());
        let rep = find_booster(&h, &m).unwrap();
        let before = rep.longest_path.len();
        prop_assert_eq!(before, longest_m_respecting_path(&h, &m).unwrap().len());
        match rep.outcome {
            BoosterOutcome::AlreadyHamiltonian(_) => prop_assert!(brute_hamiltonian_with(&h, &m)),
            BoosterOutcome::Booster(b) => {
                prop_assert!(!b.pairs.is_empty() && b.pairs.len() <= 2);
                prop_assert!(b.pairs.iter().all(|e| !h.has_edge(e.u(), e.v())));
                let h1 = h.with_edges(b.pairs.iter().copied());
                let after = longest_m_respecting_path(&h1, &m).unwrap().len();
                prop_assert!(after > before || brute_hamiltonian_with(&h1, &m));
            }
        }
    }
}
