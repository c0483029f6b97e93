//! The three extremal colourings and checks of their colour-bias upper bounds.

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::graph::{residual_ratio, Colour, Edge, EdgeColouring, Graph, GraphBuilder, HamiltonCycle, Matching, Vertex};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Parts `V_1..V_r` with `|V_r| = αn`; edges are the pairs meeting `V_r`.
    SmallAlpha,
    /// Parts `V_1..V_{r+1}` with `|V_{r+1}| = (1−α)n`; edges are the pairs meeting `V_1 ∪ … ∪ V_r`.
    MedAlpha,
    /// Complete graph split into `r+1` near-equal parts.
    LargeAlpha,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub n: usize,
    pub r: Colour,
    pub alpha: Option<Rational>,
    pub variant: Variant,
}

impl ConstructionSpec {
    pub fn small(n: usize, r: Colour, alpha: Rational) -> ConstructionSpec {
        ConstructionSpec { n, r, alpha: Some(alpha), variant: Variant::SmallAlpha }
    }

    pub fn med(n: usize, r: Colour, alpha: Rational) -> ConstructionSpec {
        ConstructionSpec { n, r, alpha: Some(alpha), variant: Variant::MedAlpha }
    }

    pub fn large(n: usize, r: Colour) -> ConstructionSpec {
        ConstructionSpec { n, r, alpha: None, variant: Variant::LargeAlpha }
    }

    /// `αn` for the variants that take α.
    fn alpha_n(&self) -> Result<usize> {
        let alpha = self
            .alpha
            .ok_or_else(|| Error::InvalidParameter("this variant needs alpha".into()))?;
        if alpha < Rational::new(1, 2) || alpha >= Rational::one() {
            return Err(Error::InvalidParameter(format!("alpha = {alpha} is outside [1/2, 1)")));
        }
        let an = alpha * Rational::from_integer(self.n as i64);
        if !an.is_integer() {
            return Err(Error::InvalidParameter(format!("alpha*n = {an} is not an integer")));
        }
        Ok(an.to_integer() as usize)
    }

    /// Part sizes `|V_1|, |V_2|, …` in index order.
    pub fn part_sizes(&self) -> Result<Vec<usize>> {
        let (n, r) = (self.n, self.r);
        if r < 2 {
            return Err(Error::InvalidParameter(format!("r = {r}, need r >= 2")));
        }
        if n < r + 1 {
            return Err(Error::InvalidParameter(format!("n = {n} < r + 1 = {}", r + 1)));
        }
        let sizes = match self.variant {
            Variant::SmallAlpha => {
                let an = self.alpha_n()?;
                let mut s = split_evenly(n - an, r - 1);
                s.push(an);
                s
            }
            Variant::MedAlpha => {
                let an = self.alpha_n()?;
                let mut s = split_evenly(an, r);
                s.push(n - an);
                s
            }
            Variant::LargeAlpha => {
                let last = n.div_ceil(r + 1);
                let mut s = split_evenly(n - last, r);
                s.push(last);
                s
            }
        };
        Ok(sizes)
    }

    /// The construction's own term of `min{(2α−1)n, 2αn/r, 2n/(r+1)}`.
    pub fn bias_term(&self) -> Result<Rational> {
        let n = Rational::from_integer(self.n as i64);
        let r = Rational::from_integer(self.r as i64);
        Ok(match self.variant {
            Variant::SmallAlpha => {
                self.alpha_n()?;
                (Rational::from_integer(2) * self.alpha.unwrap() - 1) * n
            }
            Variant::MedAlpha => {
                self.alpha_n()?;
                Rational::from_integer(2) * self.alpha.unwrap() * n / r
            }
            Variant::LargeAlpha => Rational::from_integer(2) * n / (r + 1),
        })
    }
}

/// Splits `total` into `parts` sizes differing by at most one, larger sizes first.
fn split_evenly(total: usize, parts: usize) -> Vec<usize> {
    let (q, rem) = total.div_rem(&parts);
    (0..parts).map(|i| if i < rem { q + 1 } else { q }).collect()
}

/// A built construction: the graph F, its colouring and the part of every vertex.
#[derive(Debug, Clone)]
pub struct Construction {
    pub spec: ConstructionSpec,
    pub graph: Graph,
    pub colouring: EdgeColouring,
    /// Part index (1-based) of each vertex. Parts occupy consecutive id ranges.
    pub part_of: Vec<usize>,
    pub part_sizes: Vec<usize>,
}

impl Construction {
    pub fn part(&self, i: usize) -> impl Iterator<Item = Vertex> + '_ {
        self.part_of.iter().enumerate().filter(move |&(_, &p)| p == i).map(|(v, _)| v)
    }

    /// Whether `{u, v}` is an edge of F.
    pub fn is_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && pair_in_f(&self.spec, self.part_of[u], self.part_of[v])
    }

    /// Colour of `{u, v}` under the variant's rule, extended to pairs outside F
    /// by giving them the smaller part index, capped at `r`.
    pub fn pair_colour(&self, u: Vertex, v: Vertex) -> Colour {
        pair_colour(&self.spec, self.part_of[u], self.part_of[v])
    }

    /// Colouring of an arbitrary graph on the same vertices by [`Construction::pair_colour`].
    pub fn colour_graph(&self, g: &Graph) -> Result<EdgeColouring> {
        if g.n() != self.spec.n {
            return Err(Error::VertexCountMismatch { left: g.n(), right: self.spec.n });
        }
        EdgeColouring::from_fn(g, self.spec.r, |e| self.pair_colour(e.u(), e.v()))
    }
}

fn pair_in_f(spec: &ConstructionSpec, a: usize, b: usize) -> bool {
    let r = spec.r;
    match spec.variant {
        Variant::SmallAlpha => a == r || b == r,
        Variant::MedAlpha => a <= r || b <= r,
        Variant::LargeAlpha => true,
    }
}

/// Every rule reduces to "smallest part index touched, capped at r": inside
/// `V_r` (2.1) or `V_{r+1}` (2.3) the edge gets colour r, and edges inside
/// `V_{r+1}` of 2.2 (absent from F) get colour r as well.
fn pair_colour(spec: &ConstructionSpec, a: usize, b: usize) -> Colour {
    a.min(b).min(spec.r)
}

/// Builds F, its colouring and the partition.
pub fn build(spec: ConstructionSpec) -> Result<Construction> {
    let part_sizes = spec.part_sizes()?;
    let mut part_of = Vec::with_capacity(spec.n);
    for (i, &s) in part_sizes.iter().enumerate() {
        part_of.extend(core::iter::repeat(i + 1).take(s));
    }
    let mut b = GraphBuilder::new(spec.n);
    for u in 0..spec.n {
        for v in u + 1..spec.n {
            if pair_in_f(&spec, part_of[u], part_of[v]) {
                b.add_edge(u, v)?;
            }
        }
    }
    let graph = b.build();
    let colouring = EdgeColouring::from_fn(&graph, spec.r, |e| pair_colour(&spec, part_of[e.u()], part_of[e.v()]))?;
    Ok(Construction { spec, graph, colouring, part_of, part_sizes })
}

/// `k = min{(2α−1)n, 2αn/r, 2n/(r+1)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColourBiasTarget {
    pub k: Rational,
}

impl ColourBiasTarget {
    /// `2⌈k/2⌉`, the largest same-colour count forced in a Hamilton cycle.
    pub fn cycle_bound(&self) -> usize {
        cycle_bound(self.k)
    }

    /// `⌈k/2⌉`, the perfect-matching counterpart.
    pub fn matching_bound(&self) -> usize {
        matching_bound(self.k)
    }
}

pub fn cycle_bound(k: Rational) -> usize {
    2 * matching_bound(k)
}

pub fn matching_bound(k: Rational) -> usize {
    (k / 2).ceil().to_integer().max(0) as usize
}

pub fn colour_bias_target(n: usize, r: Colour, alpha: Rational) -> Result<ColourBiasTarget> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("r = {r}, need r >= 2")));
    }
    let rr = Rational::from_integer(r as i64);
    let lo = Rational::new(1, 2) + Rational::one() / (rr * 2);
    if alpha < lo || alpha > Rational::one() {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} is outside [{lo}, 1]")));
    }
    let nn = Rational::from_integer(n as i64);
    let two = Rational::from_integer(2);
    let k = ((two * alpha - 1) * nn).min(two * alpha * nn / rr).min(two * nn / (rr + 1));
    Ok(ColourBiasTarget { k })
}

fn max_colour_count(c: &EdgeColouring, edges: impl Iterator<Item = Edge>) -> Result<usize> {
    let mut counts = alloc::vec![0usize; c.r() + 1];
    for e in edges {
        let col = c.colour_of(e.u(), e.v()).ok_or(Error::Uncoloured(e.u(), e.v()))?;
        counts[col] += 1;
    }
    Ok(counts.into_iter().max().unwrap_or(0))
}

/// Whether every colour appears at most `2⌈k/2⌉` times on `cyc`.
pub fn verify_cycle_bias_upper(f: &Graph, c: &EdgeColouring, cyc: &HamiltonCycle, k: Rational) -> Result<bool> {
    if c.r() < 2 {
        return Err(Error::Precondition(format!("r = {}, need r >= 2", c.r())));
    }
    HamiltonCycle::new(f, cyc.order().to_vec())?;
    Ok(max_colour_count(c, cyc.edges())? <= cycle_bound(k))
}

/// Whether every colour appears at most `⌈k/2⌉` times on the perfect matching `pm`.
pub fn verify_matching_bias_upper(f: &Graph, c: &EdgeColouring, pm: &Matching, k: Rational) -> Result<bool> {
    if f.n() % 2 == 1 {
        return Err(Error::Precondition(format!("n = {} is odd", f.n())));
    }
    if pm.n() != f.n() || !pm.is_perfect() {
        return Err(Error::NotPerfect);
    }
    pm.check_in(f)?;
    Ok(max_colour_count(c, pm.edges().iter().copied())? <= matching_bound(k))
}

#[derive(Debug, Clone)]
pub struct Intersection {
    pub graph: Graph,
    pub colouring: EdgeColouring,
    /// `residual_ratio(G, G ∩ F)`.
    pub ratio: Rational,
}

/// `G ∩ F` with the colouring inherited from F.
pub fn intersect_with_host(f: &Graph, c: &EdgeColouring, g: &Graph) -> Result<Intersection> {
    if f.n() != g.n() {
        return Err(Error::VertexCountMismatch { left: f.n(), right: g.n() });
    }
    let mut b = GraphBuilder::new(g.n());
    for e in g.edges() {
        if f.has_edge(e.u(), e.v()) {
            b.add_edge(e.u(), e.v())?;
        }
    }
    let graph = b.build();
    let colouring = c.restrict(&graph)?;
    let ratio = residual_ratio(g, &graph)?;
    Ok(Intersection { graph, colouring, ratio })
}

/// The α′ used to build F for an α-residual adversary: with
/// `δ = min{(1−α)/(4α), (2α−1)ε/(8α)}`, the smallest α′ with `α′n ∈ ℤ` and
/// `(1+δ)α ≤ α′ ≤ (1+2δ)α`.
pub fn perturbed_alpha(n: usize, r: Colour, alpha: Rational, eps: Rational) -> Result<Rational> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("r = {r}, need r >= 2")));
    }
    let rr = Rational::from_integer(r as i64);
    let lo = Rational::new(1, 2) + Rational::one() / (rr * 2);
    if alpha < lo || alpha >= Rational::one() {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} is outside [{lo}, 1)")));
    }
    if eps <= Rational::zero() {
        return Err(Error::InvalidParameter(format!("eps = {eps} must be positive")));
    }
    let one = Rational::one();
    let delta = ((one - alpha) / (alpha * 4)).min((alpha * 2 - 1) * eps / (alpha * 8));
    let nn = Rational::from_integer(n as i64);
    let lo_n = (one + delta) * alpha * nn;
    let hi_n = (one + delta * 2) * alpha * nn;
    let m = lo_n.ceil();
    if m > hi_n {
        return Err(Error::InvalidParameter(format!(
            "no integral alpha'*n in [{lo_n}, {hi_n}] for n = {n}"
        )));
    }
    let a = m / nn;
    if a >= one {
        return Err(Error::InvalidParameter(format!("alpha' = {a} is not below 1")));
    }
    Ok(a)
}
