use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use colourbias::config::{parse_rational, parse_seed_range, ExperimentFile, VariantDto};
use colourbias::io::{format_edge_list, read_edge_list, read_matching};
use colourbias::runner::{run_experiment_batch, run_process_batch};
use colourbias_core::constructions::{build, ConstructionSpec};
use colourbias_core::forest::{grow_mono_forest_with, ForestOptions, DEFAULT_RESTARTS};
use colourbias_core::graph::colour_class;
use colourbias_core::matching::{max_mono_matching, mono_matching_bound, tutte_berge_witness};
use colourbias_core::posa::{hamilton_with_matching, SearchOptions, DEFAULT_BUDGET};
use colourbias_core::random::ProcessOptions;
use colourbias_core::{EdgeColouring, Matching};
use serde_json::json;

#[derive(Parser)]
#[command(name = "colourbias", version, about = "Colour-biased Hamilton cycles: constructions, matchings, rotation search and experiments")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Report {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write an extremal construction as a coloured edge list.
    Construct {
        #[arg(long, value_enum)]
        variant: VariantDto,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Needed for `small` and `med`, e.g. 3/4.
        #[arg(long)]
        alpha: Option<String>,
        /// Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest monochromatic matching with its Tutte–Berge certificate.
    Monomatch {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        report: Report,
    },
    /// Grow a monochromatic linear forest.
    Forest {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        target: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_paths: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_RESTARTS)]
        restarts: usize,
        #[arg(long)]
        json: bool,
    },
    /// Hamilton cycle of H + M through every edge of M.
    Hamilton {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        matching: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hitting times of random graph processes.
    Process {
        #[arg(long)]
        n: usize,
        /// `a..b`, `a..=b` or a single seed.
        #[arg(long, default_value = "0..1")]
        seeds: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run a discrepancy experiment from a TOML config.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        /// JSON lines, appended; `-` for stdout.
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Include the cycle in every record.
        #[arg(long)]
        cycles: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut stdout = io::stdout();
    match cli.cmd {
        Cmd::Construct { variant, n, r, alpha, out } => {
            let alpha = alpha.as_deref().map(parse_rational).transpose()?;
            let need = || alpha.context("--alpha is required for this variant");
            let spec = match variant {
                VariantDto::Small => ConstructionSpec::small(n, r, need()?),
                VariantDto::Med => ConstructionSpec::med(n, r, need()?),
                VariantDto::Large => ConstructionSpec::large(n, r),
            };
            let f = build(spec)?;
            let text = format_edge_list(&f.graph, Some(&f.colouring))?;
            match out {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => stdout.write_all(text.as_bytes())?,
            }
        }
        Cmd::Monomatch { input, report } => {
            let list = read_edge_list(&input)?;
            let g = list.graph;
            let c = list.colouring.unwrap_or_else(|| EdgeColouring::monochromatic(&g));
            let mm = max_mono_matching(&g, &c)?;
            let bound = if g.n() > 0 && g.min_degree() >= 1 { Some(mono_matching_bound(g.n(), c.r(), g.min_degree())?) } else { None };
            let class = colour_class(&g, &c, mm.colour)?;
            let w = tutte_berge_witness(&class);
            match report {
                Report::Json => {
                    let v = json!({
                        "per_colour": mm.per_colour,
                        "colour": mm.colour,
                        "size": mm.matching.len(),
                        "matching": mm.matching.edges().iter().map(|e| [e.u(), e.v()]).collect::<Vec<_>>(),
                        "bound": bound.map(|b| b.to_string()),
                        "bound_ceil": bound.map(|b| b.ceil().to_integer()),
                        "witness": {
                            "set": w.set.to_vec(),
                            "odd_components": w.odd_components,
                            "deficiency": w.deficiency,
                            "matching_number": w.matching_number,
                            "exhaustive": w.exhaustive,
                        },
                    });
                    writeln!(stdout, "{v}")?;
                }
                Report::Text => {
                    writeln!(stdout, "per-colour matching numbers: {:?}", mm.per_colour)?;
                    writeln!(stdout, "best colour {} with {} edges", mm.colour, mm.matching.len())?;
                    if let Some(b) = bound {
                        writeln!(stdout, "guaranteed: min{{d/r, (n-1)/(r+1)}} = {b}, so at least {}", b.ceil())?;
                    }
                    writeln!(
                        stdout,
                        "certificate: U = {:?}, odd(G_{} - U) = {}, deficiency {}, so mu = {}",
                        w.set.to_vec(),
                        mm.colour,
                        w.odd_components,
                        w.deficiency,
                        w.matching_number
                    )?;
                }
            }
        }
        Cmd::Forest { input, target, seed, max_paths, restarts, json } => {
            let list = read_edge_list(&input)?;
            let g = list.graph;
            let c = list.colouring.unwrap_or_else(|| EdgeColouring::monochromatic(&g));
            let plan = grow_mono_forest_with(&g, &c, target, max_paths.unwrap_or(g.n().max(1)), &ForestOptions { restarts, seed })?;
            if json {
                let v = json!({
                    "colour": plan.colour,
                    "size": plan.forest.size(),
                    "path_count": plan.path_count,
                    "spanned": plan.spanned.len(),
                    "seed_matching": plan.seed_matching,
                    "reached_target": plan.reached_target,
                    "paths": plan.forest.paths(),
                });
                writeln!(stdout, "{v}")?;
            } else {
                writeln!(stdout, "colour {} size {} paths {} reached {}", plan.colour, plan.forest.size(), plan.path_count, plan.reached_target)?;
                for p in plan.forest.paths() {
                    writeln!(stdout, "{}", p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))?;
                }
            }
        }
        Cmd::Hamilton { input, matching, budget, seed } => {
            let h = read_edge_list(&input)?.graph;
            let m = match matching {
                Some(path) => read_matching(&path, h.n())?,
                None => Matching::empty(h.n()),
            };
            match hamilton_with_matching(&h, &m, &SearchOptions { budget, seed }) {
                Ok(cyc) => {
                    let order = cyc.order();
                    writeln!(stdout, "cycle {}", order.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))?;
                    for i in 0..order.len() {
                        let (u, v) = (order[i], order[(i + 1) % order.len()]);
                        let source = if m.contains(u, v) { "M" } else { "H" };
                        writeln!(stdout, "{} {} {source}", u.min(v), u.max(v))?;
                    }
                }
                Err(f) => bail!("no Hamilton cycle found: {:?} after {} rotations, best path {}", f.kind, f.rotations, f.best_path_len),
            }
        }
        Cmd::Process { n, seeds, budget, json } => {
            let seeds = parse_seed_range(&seeds)?;
            let opts = ProcessOptions { budget };
            if json {
                run_process_batch(n, &seeds, &opts, io::stdout())?;
            } else {
                let rows = run_process_batch(n, &seeds, &opts, io::sink())?;
                writeln!(stdout, "seed  tau_mindeg2  tau_conn  tau_ham  equal")?;
                for r in &rows {
                    writeln!(stdout, "{:<5} {:<12} {:<9} {:<8} {}", r.seed, r.tau_mindeg2, r.tau_conn, r.tau_ham, r.equal)?;
                }
                let eq = rows.iter().filter(|r| r.equal).count();
                writeln!(stdout, "equal in {eq}/{} runs", rows.len())?;
            }
        }
        Cmd::Experiment { config, out, cycles } => {
            let file = ExperimentFile::load(&config)?;
            let base = config.parent().map(PathBuf::from).unwrap_or_default();
            let cfg = file.to_config(&base)?;
            let summary = if out.as_os_str() == "-" {
                run_experiment_batch(&cfg, io::stdout(), cycles)?
            } else {
                let f = std::fs::OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(&out)
                    .with_context(|| format!("opening {}", out.display()))?;
                run_experiment_batch(&cfg, f, cycles)?
            };
            eprintln!("{} seeds, {} cycles found, {} fatal", summary.records, summary.found, summary.fatal);
            if summary.fatal > 0 {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
