//! Seed-parallel batches that stream one JSON line per finished seed.

use std::io::Write;
use std::sync::Mutex;
use std::time::Instant;

use anyhow::Result;
use colourbias_core::pipeline::{run_seed, ExperimentConfig};
use colourbias_core::random::{run_process_with, ProcessOptions};
use rayon::prelude::*;

use crate::record::{ProcessDto, RecordDto};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub records: usize,
    pub found: usize,
    pub fatal: usize,
}

fn emit<W: Write + Send, T: serde::Serialize>(out: &Mutex<W>, value: &T) -> Result<()> {
    let line = serde_json::to_string(value)?;
    let mut w = out.lock().expect("writer poisoned");
    writeln!(w, "{line}")?;
    w.flush()?;
    Ok(())
}

/// Runs every seed of `cfg` in parallel. Each record is appended and flushed
/// as soon as it is ready, so an interrupted batch keeps its finished seeds.
pub fn run_experiment_batch<W: Write + Send>(cfg: &ExperimentConfig, out: W, with_cycle: bool) -> Result<BatchSummary> {
    cfg.validate()?;
    let out = Mutex::new(out);
    let results: Vec<Result<(bool, bool)>> = cfg
        .seeds
        .par_iter()
        .map(|&seed| {
            let start = Instant::now();
            let rec = run_seed(cfg, seed);
            let dto = RecordDto::new(&rec, start.elapsed().as_secs_f64() * 1e3, with_cycle);
            emit(&out, &dto)?;
            Ok((rec.found, rec.fatal.is_some()))
        })
        .collect();
    let mut summary = BatchSummary::default();
    for r in results {
        let (found, fatal) = r?;
        summary.records += 1;
        summary.found += usize::from(found);
        summary.fatal += usize::from(fatal);
    }
    Ok(summary)
}

/// Hitting times for every seed, streamed like [`run_experiment_batch`].
pub fn run_process_batch<W: Write + Send>(n: usize, seeds: &[u64], opts: &ProcessOptions, out: W) -> Result<Vec<ProcessDto>> {
    let out = Mutex::new(out);
    let mut rows = seeds
        .par_iter()
        .map(|&seed| {
            let start = Instant::now();
            let (_, t) = run_process_with(n, seed, opts)?;
            let dto = ProcessDto::new(seed, n, &t, start.elapsed().as_secs_f64() * 1e3);
            emit(&out, &dto)?;
            Ok(dto)
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.seed);
    Ok(rows)
}
