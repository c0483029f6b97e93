//! Seeded random graphs, the random graph process, adversarial residual
//! subgraphs and degree profiles.

mod adversary;
mod process;
mod profile;

use alloc::format;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Graph, GraphBuilder};
use crate::{Error, Result};

pub use adversary::{adversarial_residual, ResidualOutcome, ResidualStrategy};
pub use process::{run_process, run_process_with, GraphProcess, HittingTimes, ProcessOptions};
pub use profile::{degree_profile, degree_profile_with, DegreeProfile};

/// The generator behind every seeded routine: ChaCha with 8 rounds.
pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream `stream` of the generator seeded with `seed`.
pub fn rng_stream(seed: u64, stream: u64) -> SeededRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Binomial random graph: each pair, in lexicographic order, is kept with probability `p`.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("p = {p} is outside [0, 1]")));
    }
    let mut rng = rng_from_seed(seed);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// Uniform random graph with exactly `m` edges.
pub fn sample_gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(Error::InvalidParameter(format!("m = {m} exceeds binom({n}, 2) = {total}")));
    }
    let mut pairs = all_pairs(n);
    let mut rng = rng_from_seed(seed);
    let (chosen, _) = pairs.partial_shuffle(&mut rng, m);
    Graph::from_edges(n, chosen.iter().copied())
}

pub(crate) fn all_pairs(n: usize) -> Vec<Edge> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push(Edge::new(u, v));
        }
    }
    pairs
}
