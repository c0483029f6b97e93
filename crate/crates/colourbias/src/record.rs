//! JSON shapes written by the CLI.

use colourbias_core::pipeline::{ExperimentRecord, Route};
use colourbias_core::random::HittingTimes;
use colourbias_core::{Colour, Rational, Vertex};
use serde::{Deserialize, Serialize};

fn rational_str(q: Rational) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CleanupDto {
    pub b2: bool,
    pub b3: bool,
    pub b4: bool,
    pub b6: bool,
    pub max_endpoint_degree: usize,
    pub endpoint_degree_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordDto {
    pub seed: u64,
    pub found: bool,
    pub route: Option<String>,
    pub colour_counts: Vec<usize>,
    pub majority_colour: Option<Colour>,
    pub achieved_bias: usize,
    pub target_k: String,
    pub forest_target: usize,
    pub forest_size: usize,
    pub forest_colour: Colour,
    pub upper_bound: Option<usize>,
    pub matching_bias: Option<(Colour, usize)>,
    pub cleanup: Option<CleanupDto>,
    pub notes: Vec<String>,
    pub error: Option<String>,
    pub fatal: Option<String>,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<Vertex>>,
}

impl RecordDto {
    pub fn new(r: &ExperimentRecord, elapsed_ms: f64, with_cycle: bool) -> RecordDto {
        RecordDto {
            seed: r.seed,
            found: r.found,
            route: r.route.map(|x| {
                match x {
                    Route::Dense => "dense",
                    Route::Sparse => "sparse",
                    Route::Contraction => "contraction",
                }
                .to_string()
            }),
            colour_counts: r.colour_counts.clone(),
            majority_colour: r.majority_colour,
            achieved_bias: r.achieved_bias,
            target_k: rational_str(r.target_k),
            forest_target: r.forest_target,
            forest_size: r.forest_size,
            forest_colour: r.forest_colour,
            upper_bound: r.upper_bound,
            matching_bias: r.matching_bias,
            cleanup: r.cleanup.map(|d| CleanupDto {
                b2: d.b2,
                b3: d.b3,
                b4: d.b4,
                b6: d.b6,
                max_endpoint_degree: d.max_endpoint_degree,
                endpoint_degree_bound: d.endpoint_degree_bound,
            }),
            notes: r.notes.clone(),
            error: r.error.clone(),
            fatal: r.fatal.clone(),
            elapsed_ms,
            cycle: if with_cycle { r.cycle.clone() } else { None },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProcessDto {
    pub seed: u64,
    pub n: usize,
    pub tau_mindeg2: usize,
    pub tau_ham: usize,
    pub tau_conn: usize,
    pub equal: bool,
    pub inconclusive: bool,
    pub probes: usize,
    pub elapsed_ms: f64,
}

impl ProcessDto {
    pub fn new(seed: u64, n: usize, t: &HittingTimes, elapsed_ms: f64) -> ProcessDto {
        ProcessDto {
            seed,
            n,
            tau_mindeg2: t.tau_mindeg2,
            tau_ham: t.tau_ham,
            tau_conn: t.tau_conn,
            equal: t.equal(),
            inconclusive: t.decider_inconclusive,
            probes: t.probes,
            elapsed_ms,
        }
    }
}
