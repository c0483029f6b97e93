//! Host → residual subgraph → colouring → monochromatic forest → Hamilton cycle
//! through the forest → colour-bias measurement.

mod verify;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::RngExt;

use crate::constructions::{build, colour_bias_target, cycle_bound, matching_bound, Construction, ConstructionSpec, Variant};
use crate::forest::{cleanup, grow_mono_forest_with, CleanupDiagnostics, CleanupParams, ForestOptions, DEFAULT_RESTARTS};
use crate::graph::{Colour, Edge, EdgeColouring, Graph, HamiltonCycle, LinearForest, Matching, Vertex};
use crate::posa::{cycle_through_forest, posa_force_with, SearchOptions, DEFAULT_BUDGET};
use crate::random::{adversarial_residual, rng_stream, sample_gnm, sample_gnp, ResidualStrategy};
use crate::{Error, Rational, Result};

pub use verify::verify_cycle;

#[derive(Debug, Clone, PartialEq)]
pub enum HostSpec {
    Complete,
    Gnp { p: f64 },
    /// The first `m` edges of a random graph process.
    ProcessPrefix { m: usize },
    Given(Graph),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ColouringSpec {
    /// Colour by the part rule of a construction; `alpha` is needed for 2.1 and 2.2.
    Construction { variant: Variant, alpha: Option<Rational> },
    /// Independent uniform colours.
    Random,
    /// Everything gets colour 1.
    Single,
    Given(EdgeColouring),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Adversary {
    pub alpha: Rational,
    pub strategy: ResidualStrategy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub r: Colour,
    pub host: HostSpec,
    pub adversary: Option<Adversary>,
    pub colouring: ColouringSpec,
    pub eps: Rational,
    pub seeds: Vec<u64>,
    /// Rotation budget for every Hamilton search.
    pub budget: u64,
    pub forest_restarts: usize,
    /// Path cap for the forest; `n` when unset.
    pub max_paths: Option<usize>,
    /// Clean-up margin; `ε/(8r)` when unset.
    pub delta: Option<f64>,
}

impl ExperimentConfig {
    pub fn new(n: usize, r: Colour, host: HostSpec, colouring: ColouringSpec) -> ExperimentConfig {
        ExperimentConfig {
            n,
            r,
            host,
            adversary: None,
            colouring,
            eps: Rational::new(1, 4),
            seeds: alloc::vec![0],
            budget: DEFAULT_BUDGET,
            forest_restarts: DEFAULT_RESTARTS,
            max_paths: None,
            delta: None,
        }
    }

    pub fn alpha(&self) -> Rational {
        self.adversary.map_or(Rational::one(), |a| a.alpha)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidParameter(format!("n = {} < 3", self.n)));
        }
        if self.r < 1 {
            return Err(Error::InvalidParameter("r must be at least 1".into()));
        }
        if self.eps <= Rational::zero() || self.eps > Rational::one() {
            return Err(Error::InvalidParameter(format!("eps = {} is outside (0, 1]", self.eps)));
        }
        if self.r >= 2 {
            colour_bias_target(self.n, self.r, self.alpha())?;
        }
        match &self.host {
            HostSpec::Gnp { p } if !(0.0..=1.0).contains(p) => return Err(Error::InvalidParameter(format!("p = {p}"))),
            HostSpec::Given(g) if g.n() != self.n => return Err(Error::VertexCountMismatch { left: g.n(), right: self.n }),
            _ => {}
        }
        if let ColouringSpec::Given(c) = &self.colouring {
            if c.r() != self.r {
                return Err(Error::InvalidParameter(format!("colouring uses r = {}, config says {}", c.r(), self.r)));
            }
        }
        Ok(())
    }

    /// `k = min{(2α−1)n, 2αn/r, 2n/(r+1)}` for the residual α; `n` when `r = 1`.
    pub fn target_k(&self) -> Result<Rational> {
        if self.r == 1 {
            return Ok(Rational::from_integer(self.n as i64));
        }
        Ok(colour_bias_target(self.n, self.r, self.alpha())?.k)
    }

    /// `⌈(1−ε)k⌉` edges, at most `n − 1`.
    pub fn forest_target(&self) -> Result<usize> {
        let t = ((Rational::one() - self.eps) * self.target_k()?).ceil().to_integer();
        Ok((t.max(0) as usize).min(self.n - 1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// `2δ(H) ≥ n + e(forest)`: the forest is forced directly.
    Dense,
    /// Clean-up, endpoint matching and the rotation search on `U`.
    Sparse,
    /// The uncleaned forest contracted and searched directly.
    Contraction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub seed: u64,
    pub found: bool,
    pub route: Option<Route>,
    pub cycle: Option<Vec<Vertex>>,
    /// Count of colour `i` at index `i − 1`.
    pub colour_counts: Vec<usize>,
    pub majority_colour: Option<Colour>,
    pub achieved_bias: usize,
    pub target_k: Rational,
    pub forest_target: usize,
    pub forest_size: usize,
    pub forest_colour: Colour,
    /// `2⌈k/2⌉` for the construction, when `H` lies inside it.
    pub upper_bound: Option<usize>,
    /// Colour and count of the better alternate perfect matching (even `n`).
    pub matching_bias: Option<(Colour, usize)>,
    pub cleanup: Option<CleanupDiagnostics>,
    /// Why earlier routes were abandoned.
    pub notes: Vec<String>,
    pub error: Option<String>,
    /// A checked invariant broke; this indicates a bug, not a search miss.
    pub fatal: Option<String>,
}

impl ExperimentRecord {
    fn empty(seed: u64) -> ExperimentRecord {
        ExperimentRecord {
            seed,
            found: false,
            route: None,
            cycle: None,
            colour_counts: Vec::new(),
            majority_colour: None,
            achieved_bias: 0,
            target_k: Rational::zero(),
            forest_target: 0,
            forest_size: 0,
            forest_colour: 1,
            upper_bound: None,
            matching_bias: None,
            cleanup: None,
            notes: Vec::new(),
            error: None,
            fatal: None,
        }
    }
}

/// Runs every seed; per-seed failures end up in the records.
pub fn run_discrepancy_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    Ok(cfg.seeds.iter().map(|&s| run_seed(cfg, s)).collect())
}

pub fn run_seed(cfg: &ExperimentConfig, seed: u64) -> ExperimentRecord {
    let mut rec = ExperimentRecord::empty(seed);
    if let Err(e) = run_seed_inner(cfg, seed, &mut rec) {
        rec.error = Some(format!("{e}"));
    }
    rec
}

fn host_graph(cfg: &ExperimentConfig, seed: u64) -> Result<(Graph, f64)> {
    let n = cfg.n;
    let pairs = (n * (n - 1) / 2) as f64;
    Ok(match &cfg.host {
        HostSpec::Complete => (Graph::complete(n), 1.0),
        HostSpec::Gnp { p } => (sample_gnp(n, *p, seed)?, *p),
        HostSpec::ProcessPrefix { m } => (sample_gnm(n, *m, seed)?, *m as f64 / pairs),
        HostSpec::Given(g) => (g.clone(), g.edge_count() as f64 / pairs),
    })
}

fn construction(cfg: &ExperimentConfig) -> Result<Option<Construction>> {
    let ColouringSpec::Construction { variant, alpha } = &cfg.colouring else { return Ok(None) };
    let need = || alpha.ok_or_else(|| Error::InvalidParameter("construction colouring needs alpha".into()));
    let spec = match variant {
        Variant::SmallAlpha => ConstructionSpec::small(cfg.n, cfg.r, need()?),
        Variant::MedAlpha => ConstructionSpec::med(cfg.n, cfg.r, need()?),
        Variant::LargeAlpha => ConstructionSpec::large(cfg.n, cfg.r),
    };
    build(spec).map(Some)
}

fn colouring(cfg: &ExperimentConfig, h: &Graph, con: Option<&Construction>, seed: u64) -> Result<EdgeColouring> {
    match &cfg.colouring {
        ColouringSpec::Construction { .. } => con.expect("construction built").colour_graph(h),
        ColouringSpec::Random => {
            let mut rng = rng_stream(seed, 2);
            EdgeColouring::from_fn(h, cfg.r, |_| rng.random_range(1..=cfg.r))
        }
        ColouringSpec::Single => EdgeColouring::from_fn(h, cfg.r, |_| 1),
        ColouringSpec::Given(c) => {
            let c = c.restrict(h)?;
            c.check_total(h)?;
            Ok(c)
        }
    }
}

fn run_seed_inner(cfg: &ExperimentConfig, seed: u64, rec: &mut ExperimentRecord) -> Result<()> {
    let n = cfg.n;
    rec.target_k = cfg.target_k()?;
    rec.forest_target = cfg.forest_target()?;
    let (g, p) = host_graph(cfg, seed)?;
    let h = match cfg.adversary {
        Some(a) => adversarial_residual(&g, a.alpha, a.strategy, seed)?.graph,
        None => g.clone(),
    };
    let con = construction(cfg)?;
    let c = colouring(cfg, &h, con.as_ref(), seed)?;

    let opts = ForestOptions { restarts: cfg.forest_restarts, seed };
    let plan = grow_mono_forest_with(&h, &c, rec.forest_target, cfg.max_paths.unwrap_or(n), &opts)?;
    rec.forest_size = plan.forest.size();
    rec.forest_colour = plan.colour;

    let search = SearchOptions { budget: cfg.budget, seed };
    let mut found: Option<(Route, HamiltonCycle, LinearForest)> = None;
    if 2 * h.min_degree() >= n + rec.forest_size {
        match posa_force_with(&h, &plan.forest, Rational::new(rec.forest_size as i64, 2), &search) {
            Ok(cyc) => found = Some((Route::Dense, cyc, plan.forest.clone())),
            Err(e) => rec.notes.push(format!("dense: {e}")),
        }
    } else {
        let delta = cfg.delta.unwrap_or_else(|| {
            let eps = *cfg.eps.numer() as f64 / *cfg.eps.denom() as f64;
            eps / (8.0 * cfg.r as f64)
        });
        let mut params = CleanupParams::new(p.max(f64::MIN_POSITIVE), delta.min(0.49), cfg.r);
        params.seed = seed;
        params.require_b6 = false;
        params.u_degree_floor = 2;
        match cleanup(&g, &h, &plan.forest, &params) {
            Ok(res) => {
                rec.cleanup = Some(res.diagnostics);
                match cycle_through_forest(&h, &res.forest_star, &search) {
                    Ok(cyc) => found = Some((Route::Sparse, cyc, res.forest_star)),
                    Err(e) => rec.notes.push(format!("sparse: {e}")),
                }
            }
            Err(f) => rec.notes.push(format!("cleanup: {f}")),
        }
    }
    if found.is_none() {
        match cycle_through_forest(&h, &plan.forest, &search) {
            Ok(cyc) => found = Some((Route::Contraction, cyc, plan.forest.clone())),
            Err(e) => rec.notes.push(format!("contraction: {e}")),
        }
    }
    let Some((route, cyc, used)) = found else { return Ok(()) };

    let counts = match verify_cycle(&h, &c, cyc.order(), Some(&used)) {
        Ok(counts) => counts,
        Err(msg) => {
            rec.fatal = Some(format!("reported cycle failed re-validation: {msg}"));
            return Ok(());
        }
    };
    rec.found = true;
    rec.route = Some(route);
    let (best_colour, best) = majority(&counts);
    rec.majority_colour = Some(best_colour);
    rec.achieved_bias = best;
    rec.colour_counts = counts;

    // the construction bound only speaks about subgraphs of F
    let bound_k = match &con {
        Some(f) if h.edges().all(|e| f.is_edge(e.u(), e.v())) && cfg.r >= 2 => Some(f.spec.bias_term()?),
        _ => None,
    };
    if let Some(k) = bound_k {
        let ub = cycle_bound(k);
        rec.upper_bound = Some(ub);
        if best > ub {
            rec.fatal = Some(format!("colour count {best} exceeds 2⌈k/2⌉ = {ub}"));
        }
    }
    if n % 2 == 0 {
        let (_, col, count) = perfect_matching_bias(&cyc, &c)?;
        rec.matching_bias = Some((col, count));
        if count < best.div_ceil(2) {
            rec.fatal = Some(format!("alternate matching has {count} < ⌈{best}/2⌉ majority edges"));
        }
        if let Some(k) = bound_k {
            if count > matching_bound(k) {
                rec.fatal = Some(format!("matching count {count} exceeds ⌈k/2⌉ = {}", matching_bound(k)));
            }
        }
    }
    rec.cycle = Some(cyc.into_order());
    Ok(())
}

fn majority(counts: &[usize]) -> (Colour, usize) {
    let mut best = (1, 0);
    for (i, &k) in counts.iter().enumerate() {
        if k > best.1 {
            best = (i + 1, k);
        }
    }
    best
}

/// The alternate-edge perfect matching of `cyc` holding more edges of the
/// cycle's majority colour (ties: the one through the first edge).
pub fn perfect_matching_bias(cyc: &HamiltonCycle, c: &EdgeColouring) -> Result<(Matching, Colour, usize)> {
    let order = cyc.order();
    let n = order.len();
    if n % 2 == 1 {
        return Err(Error::Precondition(format!("n = {n} is odd")));
    }
    let mut counts = alloc::vec![0usize; c.r()];
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let (u, v) = (order[i], order[(i + 1) % n]);
        let col = c.colour_of(u, v).ok_or(Error::Uncoloured(u, v))?;
        if col == 0 || col > c.r() {
            return Err(Error::ColourOutOfRange { colour: col, r: c.r() });
        }
        counts[col - 1] += 1;
        cols.push(col);
    }
    let (major, _) = majority(&counts);
    let pick = |start: usize| (start..n).step_by(2).filter(|&i| cols[i] == major).count();
    let (even, odd) = (pick(0), pick(1));
    let start = if odd > even { 1 } else { 0 };
    let edges: Vec<Edge> = (start..n).step_by(2).map(|i| Edge::new(order[i], order[(i + 1) % n])).collect();
    Ok((Matching::new(n, edges)?, major, even.max(odd)))
}
