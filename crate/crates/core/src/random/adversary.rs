use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::RngExt;

use super::rng_from_seed;
use crate::constructions::{build, perturbed_alpha, ConstructionSpec, Variant};
use crate::graph::{residual_ratio, Colour, Edge, EdgeColouring, Graph, GraphBuilder};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ResidualStrategy {
    /// Intersect with an extremal construction, then repair deficient vertices.
    Construction { variant: Variant, r: Colour, eps: Rational },
    /// Keep each edge independently with probability `keep`.
    RandomThinning { keep: f64 },
    /// Delete edges in random order while both endpoints stay α-residual.
    GreedyMinDegree,
}

#[derive(Debug, Clone)]
pub struct ResidualOutcome {
    pub graph: Graph,
    pub ratio: Rational,
    /// `ratio ≥ α`.
    pub reached: bool,
    /// Edges re-added by the repair step.
    pub repaired: usize,
    /// Construction colouring of the result (construction strategy only).
    pub colouring: Option<EdgeColouring>,
}

fn residual_ok(dh: usize, dg: usize, alpha: Rational) -> bool {
    Rational::from_integer(dh as i64) >= alpha * Rational::from_integer(dg as i64)
}

fn deficit(dh: usize, dg: usize, alpha: Rational) -> i64 {
    (alpha * Rational::from_integer(dg as i64)).ceil().to_integer() - dh as i64
}

/// A spanning subgraph of `g` chosen by `strategy`, with its residual ratio.
pub fn adversarial_residual(g: &Graph, alpha: Rational, strategy: ResidualStrategy, seed: u64) -> Result<ResidualOutcome> {
    if alpha <= Rational::zero() || alpha > Rational::one() {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} is outside (0, 1]")));
    }
    let n = g.n();
    if alpha == Rational::one() {
        let colouring = match strategy {
            ResidualStrategy::Construction { variant, r, .. } => Some(construction_for(n, r, variant, alpha, None)?.colour_graph(g)?),
            _ => None,
        };
        return Ok(ResidualOutcome { graph: g.clone(), ratio: Rational::one(), reached: true, repaired: 0, colouring });
    }
    match strategy {
        ResidualStrategy::RandomThinning { keep } => {
            if !(0.0..=1.0).contains(&keep) {
                return Err(Error::InvalidParameter(format!("keep = {keep} is outside [0, 1]")));
            }
            let mut rng = rng_from_seed(seed);
            let h = Graph::from_edges(n, g.edges().filter(|_| rng.random::<f64>() < keep))?;
            let ratio = residual_ratio(g, &h)?;
            Ok(ResidualOutcome { graph: h, ratio, reached: ratio >= alpha, repaired: 0, colouring: None })
        }
        ResidualStrategy::GreedyMinDegree => {
            let mut edges: Vec<Edge> = g.edges().collect();
            edges.shuffle(&mut rng_from_seed(seed));
            let mut dh: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
            let mut kept = Vec::new();
            for e in edges {
                let (u, v) = (e.u(), e.v());
                if residual_ok(dh[u] - 1, g.degree(u), alpha) && residual_ok(dh[v] - 1, g.degree(v), alpha) {
                    dh[u] -= 1;
                    dh[v] -= 1;
                } else {
                    kept.push(e);
                }
            }
            let h = Graph::from_edges(n, kept)?;
            let ratio = residual_ratio(g, &h)?;
            Ok(ResidualOutcome { graph: h, ratio, reached: ratio >= alpha, repaired: 0, colouring: None })
        }
        ResidualStrategy::Construction { variant, r, eps } => {
            let f = construction_for(n, r, variant, alpha, Some(eps))?;
            let mut b = GraphBuilder::new(n);
            let mut removed = Vec::new();
            for e in g.edges() {
                if f.is_edge(e.u(), e.v()) {
                    b.add_edge(e.u(), e.v())?;
                } else {
                    removed.push(e);
                }
            }
            let mut h = b.build();
            let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
            let mut repaired = Vec::new();
            loop {
                let pick = removed
                    .iter()
                    .enumerate()
                    .filter_map(|(i, e)| {
                        let du = deficit(dh[e.u()], g.degree(e.u()), alpha);
                        let dv = deficit(dh[e.v()], g.degree(e.v()), alpha);
                        (du > 0 || dv > 0).then_some((du.max(dv), i))
                    })
                    .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
                let Some((_, i)) = pick else { break };
                let e = removed.remove(i);
                dh[e.u()] += 1;
                dh[e.v()] += 1;
                repaired.push(e);
            }
            if !repaired.is_empty() {
                h = h.with_edges(repaired.iter().copied());
            }
            let ratio = residual_ratio(g, &h)?;
            let colouring = f.colour_graph(&h)?;
            Ok(ResidualOutcome { graph: h, ratio, reached: ratio >= alpha, repaired: repaired.len(), colouring: Some(colouring) })
        }
    }
}

fn construction_for(
    n: usize,
    r: Colour,
    variant: Variant,
    alpha: Rational,
    eps: Option<Rational>,
) -> Result<crate::constructions::Construction> {
    let spec = match variant {
        Variant::LargeAlpha => ConstructionSpec::large(n, r),
        Variant::SmallAlpha | Variant::MedAlpha => {
            let a = perturbed_alpha(n, r, alpha, eps.unwrap_or_else(|| Rational::new(1, 2)))?;
            ConstructionSpec { n, r, alpha: Some(a), variant }
        }
    };
    build(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::sample_gnp;

    #[test]
    fn alpha_one_is_identity() {
        let g = sample_gnp(30, 0.3, 1).unwrap();
        let o = adversarial_residual(&g, Rational::one(), ResidualStrategy::GreedyMinDegree, 0).unwrap();
        assert_eq!(o.graph, g);
        assert!(adversarial_residual(&g, Rational::zero(), ResidualStrategy::GreedyMinDegree, 0).is_err());
    }

    #[test]
    fn greedy_stays_residual() {
        let g = sample_gnp(60, 0.4, 2).unwrap();
        let alpha = Rational::new(2, 3);
        let o = adversarial_residual(&g, alpha, ResidualStrategy::GreedyMinDegree, 3).unwrap();
        assert!(o.reached && o.ratio >= alpha);
        assert!(o.graph.edge_count() < g.edge_count());
        o.graph.check_subgraph_of(&g).unwrap();
    }

    #[test]
    fn construction_repair_reaches_alpha() {
        let g = sample_gnp(100, 0.5, 4).unwrap();
        let alpha = Rational::new(3, 4);
        let s = ResidualStrategy::Construction { variant: Variant::MedAlpha, r: 2, eps: Rational::new(1, 2) };
        let o = adversarial_residual(&g, alpha, s, 0).unwrap();
        assert!(o.reached);
        o.colouring.unwrap().check_total(&o.graph).unwrap();
    }
}
