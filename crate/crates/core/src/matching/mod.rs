//! Maximum matchings, Tutte–Berge certificates and monochromatic matchings.

mod blossom;
mod tutte;

use alloc::vec::Vec;

use num_integer::binomial;
use num_rational::Ratio;
use num_traits::{CheckedAdd, One};

use crate::graph::{colour_class, Colour, EdgeColouring, Graph, Matching};
use crate::{Error, Rational, Result};

pub use blossom::{gallai_edmonds_even_set, max_matching};
pub use tutte::{tutte_berge_witness, TutteBergeWitness, EXHAUSTIVE_WITNESS_LIMIT};

/// Best colour class matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoMatching {
    pub colour: Colour,
    pub matching: Matching,
    /// `μ(G_i)` for `i = 1..=r`, stored at index `i − 1`.
    pub per_colour: Vec<usize>,
}

/// Largest matching inside a single colour class. Ties go to the smallest colour.
pub fn max_mono_matching(g: &Graph, c: &EdgeColouring) -> Result<MonoMatching> {
    let mut best: Option<(Colour, Matching)> = None;
    let mut per_colour = Vec::with_capacity(c.r());
    for i in 1..=c.r() {
        let m = max_matching(&colour_class(g, c, i)?);
        per_colour.push(m.len());
        if best.as_ref().map_or(true, |(_, b)| m.len() > b.len()) {
            best = Some((i, m));
        }
    }
    let (colour, matching) = best.unwrap_or((1, Matching::empty(g.n())));
    if g.n() > 0 && g.min_degree() >= 1 {
        let bound = mono_matching_bound(g.n(), c.r().max(1), g.min_degree())?;
        debug_assert!(matching.len() as i64 >= bound.ceil().to_integer());
    }
    Ok(MonoMatching { colour, matching, per_colour })
}

/// `min{d/r, (n−1)/(r+1)}`.
pub fn mono_matching_bound(n: usize, r: Colour, d: usize) -> Result<Rational> {
    if r < 1 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    if n == 0 || d > n - 1 {
        return Err(Error::InvalidParameter(alloc::format!("d = {d} is outside [0, n-1] for n = {n}")));
    }
    let r = r as i64;
    Ok(Rational::new(d as i64, r).min(Rational::new(n as i64 - 1, r + 1)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentBounds {
    pub components: usize,
    /// `Σ_v 1/(d(v)+1)`.
    pub inverse_degree_sum: f64,
    /// The same sum as an exact fraction when it fits in 128-bit integers.
    pub inverse_degree_sum_exact: Option<(i128, i128)>,
    pub edges: usize,
    /// `binom(n − c + 1, 2)`.
    pub edge_bound: usize,
    pub component_bound_holds: bool,
    pub edge_bound_holds: bool,
}

/// Evaluates `c(G) ≤ Σ 1/(d(v)+1)` and `e(G) ≤ binom(n − c(G) + 1, 2)`.
pub fn component_bounds_check(g: &Graph) -> ComponentBounds {
    let n = g.n();
    let components = g.component_count();
    let mut by_degree = alloc::vec![0i128; n.max(1)];
    for v in 0..n {
        by_degree[g.degree(v)] += 1;
    }
    let mut exact = Some(Ratio::<i128>::from_integer(0));
    let mut approx = 0.0;
    for (d, &cnt) in by_degree.iter().enumerate() {
        if cnt == 0 {
            continue;
        }
        approx += cnt as f64 / (d + 1) as f64;
        exact = exact.and_then(|s| s.checked_add(&Ratio::new(cnt, d as i128 + 1)));
    }
    let component_bound_holds = match exact {
        Some(s) => Ratio::from_integer(components as i128) <= s,
        None => components as f64 <= approx + 1e-9,
    };
    let edge_bound = if n == 0 { 0 } else { binomial(n - components + 1, 2) };
    ComponentBounds {
        components,
        inverse_degree_sum: approx,
        inverse_degree_sum_exact: exact.map(|s| (*s.numer(), *s.denom())),
        edges: g.edge_count(),
        edge_bound,
        component_bound_holds,
        edge_bound_holds: g.edge_count() <= edge_bound,
    }
}

impl ComponentBounds {
    pub fn holds(&self) -> bool {
        self.component_bound_holds && self.edge_bound_holds
    }

    pub fn inverse_degree_sum_is_integer(&self, value: i128) -> bool {
        self.inverse_degree_sum_exact == Some((value, i128::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, ConstructionSpec};

    #[test]
    fn mono_single_colour_k7() {
        let g = Graph::complete(7);
        let c = EdgeColouring::from_fn(&g, 2, |_| 1).unwrap();
        let m = max_mono_matching(&g, &c).unwrap();
        assert_eq!((m.colour, m.matching.len()), (1, 3));
        assert_eq!(m.per_colour, [3, 0]);
    }

    #[test]
    fn mono_med_alpha_n12() {
        let f = build(ConstructionSpec::med(12, 2, Rational::new(3, 4))).unwrap();
        let m = max_mono_matching(&f.graph, &f.colouring).unwrap();
        let bound = mono_matching_bound(12, 2, f.graph.min_degree()).unwrap();
        assert_eq!(bound, Rational::new(11, 3));
        assert!(m.matching.len() <= 5 && m.matching.len() >= 4);
        // colour 2 lives on V_2 ∪ V_3, only 7 vertices
        assert_eq!(m.per_colour, [5, 3]);
    }

    #[test]
    fn mono_large_alpha_n7() {
        let f = build(ConstructionSpec::large(7, 2)).unwrap();
        let m = max_mono_matching(&f.graph, &f.colouring).unwrap();
        assert!(m.matching.len() <= 2);
    }

    #[test]
    fn mono_bound_values() {
        assert_eq!(mono_matching_bound(10, 2, 6).unwrap(), Rational::from_integer(3));
        assert_eq!(mono_matching_bound(10, 3, 9).unwrap(), Rational::new(9, 4));
        assert_eq!(mono_matching_bound(2, 1, 1).unwrap(), Rational::new(1, 2));
        assert!(mono_matching_bound(5, 2, 5).is_err());
    }

    #[test]
    fn component_bounds_edgeless() {
        let r = component_bounds_check(&Graph::empty(5));
        assert_eq!(r.components, 5);
        assert!(r.inverse_degree_sum_is_integer(5));
        assert_eq!((r.edges, r.edge_bound), (0, 0));
        assert!(r.holds());
    }

    #[test]
    fn component_bounds_k4() {
        let r = component_bounds_check(&Graph::complete(4));
        assert_eq!(r.components, 1);
        assert!(r.inverse_degree_sum_is_integer(1));
        assert_eq!((r.edges, r.edge_bound), (6, 6));
        assert!(r.holds());
    }

    #[test]
    fn component_bounds_two_triangles() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let r = component_bounds_check(&g);
        assert_eq!(r.components, 2);
        assert!(r.inverse_degree_sum_is_integer(2));
        assert_eq!((r.edges, r.edge_bound), (6, 10));
    }
}
