use alloc::vec;
use alloc::vec::Vec;

/// Result of the bigamy variant of Hall's theorem on a bipartite graph with
/// sides `X = 0..x_count` and `Y = 0..adj.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BigamyOutcome {
    /// `first[y]` and `second[y]` are the partners of `y`; all `2|Y|` partners are distinct.
    Matchings { first: Vec<usize>, second: Vec<usize> },
    /// `|neighbourhood| < 2|z|`, and `neighbourhood` is exactly `N(z)`.
    Violation { z: Vec<usize>, neighbourhood: Vec<usize> },
}

impl BigamyOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, BigamyOutcome::Matchings { .. })
    }
}

const NONE: usize = usize::MAX;

/// Two matchings covering `Y` with disjoint images in `X`, found as a single
/// matching from two copies of every `y`. On failure the alternating-reachable
/// part of `Y` is a Hall violator.
pub fn bigamy_hall_matchings(x_count: usize, adj: &[Vec<usize>]) -> BigamyOutcome {
    match demand_matching(x_count, adj, &vec![2; adj.len()]) {
        Ok(partners) => {
            let first = partners.iter().map(|p| p[0]).collect();
            let second = partners.iter().map(|p| p[1]).collect();
            BigamyOutcome::Matchings { first, second }
        }
        Err((z, neighbourhood)) => BigamyOutcome::Violation { z, neighbourhood },
    }
}

/// A set `Z` together with its neighbourhood `N(Z)`.
pub type HallViolation = (Vec<usize>, Vec<usize>);

/// Gives every `y` exactly `demand[y]` distinct partners, no partner shared.
/// On failure returns `(Z, N(Z))` with `|N(Z)| < Σ_{y∈Z} demand[y]`.
pub fn demand_matching(x_count: usize, adj: &[Vec<usize>], demand: &[usize]) -> core::result::Result<Vec<Vec<usize>>, HallViolation> {
    let owner: Vec<usize> = demand.iter().enumerate().flat_map(|(y, &d)| core::iter::repeat(y).take(d)).collect();
    let copies = owner.len();
    let mut match_x = vec![NONE; x_count];
    let mut match_c = vec![NONE; copies];
    let mut stamp = vec![0usize; x_count];
    for c in 0..copies {
        augment(c, &owner, adj, &mut match_x, &mut match_c, &mut stamp, c + 1);
    }
    if match_c.iter().all(|&x| x != NONE) {
        let mut partners = vec![Vec::new(); adj.len()];
        for c in 0..copies {
            partners[owner[c]].push(match_c[c]);
        }
        return Ok(partners);
    }

    let mut seen_c = vec![false; copies];
    let mut seen_x = vec![false; x_count];
    let mut queue: Vec<usize> = (0..copies).filter(|&c| match_c[c] == NONE).collect();
    for &c in &queue {
        seen_c[c] = true;
    }
    while let Some(c) = queue.pop() {
        for &x in &adj[owner[c]] {
            if !seen_x[x] {
                seen_x[x] = true;
                let d = match_x[x];
                debug_assert!(d != NONE, "augmenting path left after maximum matching");
                if d != NONE && !seen_c[d] {
                    seen_c[d] = true;
                    queue.push(d);
                }
            }
        }
    }
    let mut z: Vec<usize> = (0..copies).filter(|&c| seen_c[c]).map(|c| owner[c]).collect();
    z.dedup();
    let neighbourhood = (0..x_count).filter(|&x| seen_x[x]).collect();
    Err((z, neighbourhood))
}

fn augment(
    c: usize,
    owner: &[usize],
    adj: &[Vec<usize>],
    match_x: &mut [usize],
    match_c: &mut [usize],
    stamp: &mut [usize],
    round: usize,
) -> bool {
    for &x in &adj[owner[c]] {
        if stamp[x] == round {
            continue;
        }
        stamp[x] = round;
        if match_x[x] == NONE || augment(match_x[x], owner, adj, match_x, match_c, stamp, round) {
            match_x[x] = c;
            match_c[c] = x;
            return true;
        }
    }
    false
}
