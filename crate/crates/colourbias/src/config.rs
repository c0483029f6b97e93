//! TOML schema for `experiment --config`.
//!
//! ```toml
//! n = 30
//! r = 2
//! eps = "1/4"          # rational, "a/b", integer or decimal
//! seeds = "0..10"      # half-open range, "a..=b", or a list [0, 3, 7]
//! budget = 1000000     # rotations per Hamilton search
//!
//! [host]
//! kind = "complete"    # or "gnp" with p, "process-prefix" with m, "file" with path
//!
//! [colouring]
//! kind = "construction" # or "random", "single", "file" with path
//! variant = "large"     # "small" and "med" also need alpha = "3/4"
//!
//! [adversary]           # optional; α-residual subgraph of the host
//! alpha = "3/4"
//! strategy = { kind = "greedy" } # or "random-thinning" with keep, or "construction" with variant
//! ```

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use colourbias_core::constructions::Variant;
use colourbias_core::pipeline::{Adversary, ColouringSpec, ExperimentConfig, HostSpec};
use colourbias_core::random::ResidualStrategy;
use colourbias_core::{Colour, Rational};
use serde::{Deserialize, Serialize};

use crate::io::read_edge_list;

/// Parses `a/b`, an integer, or a finite decimal exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let (a, b): (i64, i64) = (a.trim().parse()?, b.trim().parse()?);
        if b == 0 {
            bail!("zero denominator in `{s}`");
        }
        return Ok(Rational::new(a, b));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.len() > 12 || frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            bail!("`{s}` is not a decimal with at most 12 places");
        }
        let den = 10i64.pow(frac.len() as u32);
        let neg = int.trim_start().starts_with('-');
        let int: i64 = if int.is_empty() || int == "-" { 0 } else { int.parse()? };
        let f: i64 = frac.parse()?;
        let mag = int.abs() * den + f;
        return Ok(Rational::new(if neg { -mag } else { mag }, den));
    }
    Ok(Rational::from_integer(s.parse().with_context(|| format!("`{s}` is not a rational"))?))
}

/// `a..b` (half-open) or `a..=b`.
pub fn parse_seed_range(s: &str) -> Result<Vec<u64>> {
    if let Some((a, b)) = s.split_once("..=") {
        let (a, b): (u64, u64) = (a.trim().parse()?, b.trim().parse()?);
        return Ok((a..=b).collect());
    }
    if let Some((a, b)) = s.split_once("..") {
        let (a, b): (u64, u64) = (a.trim().parse()?, b.trim().parse()?);
        return Ok((a..b).collect());
    }
    Ok(vec![s.trim().parse().with_context(|| format!("`{s}` is not a seed or range"))?])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeedsDto {
    List(Vec<u64>),
    Range(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum VariantDto {
    Small,
    Med,
    Large,
}

impl From<VariantDto> for Variant {
    fn from(v: VariantDto) -> Variant {
        match v {
            VariantDto::Small => Variant::SmallAlpha,
            VariantDto::Med => Variant::MedAlpha,
            VariantDto::Large => Variant::LargeAlpha,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum HostDto {
    Complete,
    Gnp { p: f64 },
    ProcessPrefix { m: usize },
    File { path: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ColouringDto {
    Construction { variant: VariantDto, alpha: Option<String> },
    Random,
    Single,
    File { path: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum StrategyDto {
    Construction { variant: VariantDto, eps: Option<String> },
    RandomThinning { keep: f64 },
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdversaryDto {
    pub alpha: String,
    pub strategy: StrategyDto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentFile {
    pub n: usize,
    pub r: Colour,
    pub eps: Option<String>,
    pub seeds: SeedsDto,
    pub budget: Option<u64>,
    pub forest_restarts: Option<usize>,
    pub max_paths: Option<usize>,
    pub delta: Option<f64>,
    pub host: HostDto,
    pub colouring: ColouringDto,
    pub adversary: Option<AdversaryDto>,
}

impl ExperimentFile {
    pub fn parse(text: &str) -> Result<ExperimentFile> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<ExperimentFile> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        ExperimentFile::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    /// Builds the core config; relative file paths resolve against `base`.
    pub fn to_config(&self, base: &Path) -> Result<ExperimentConfig> {
        let resolve = |p: &Path| if p.is_absolute() { p.to_path_buf() } else { base.join(p) };
        let host = match &self.host {
            HostDto::Complete => HostSpec::Complete,
            HostDto::Gnp { p } => HostSpec::Gnp { p: *p },
            HostDto::ProcessPrefix { m } => HostSpec::ProcessPrefix { m: *m },
            HostDto::File { path } => HostSpec::Given(read_edge_list(&resolve(path))?.graph),
        };
        let colouring = match &self.colouring {
            ColouringDto::Construction { variant, alpha } => ColouringSpec::Construction {
                variant: (*variant).into(),
                alpha: alpha.as_deref().map(parse_rational).transpose()?,
            },
            ColouringDto::Random => ColouringSpec::Random,
            ColouringDto::Single => ColouringSpec::Single,
            ColouringDto::File { path } => {
                let list = read_edge_list(&resolve(path))?;
                ColouringSpec::Given(list.colouring.context("colouring file has no colour column")?)
            }
        };
        let mut cfg = ExperimentConfig::new(self.n, self.r, host, colouring);
        if let Some(a) = &self.adversary {
            let strategy = match &a.strategy {
                StrategyDto::Construction { variant, eps } => ResidualStrategy::Construction {
                    variant: (*variant).into(),
                    r: self.r,
                    eps: eps.as_deref().map(parse_rational).transpose()?.unwrap_or(Rational::new(1, 2)),
                },
                StrategyDto::RandomThinning { keep } => ResidualStrategy::RandomThinning { keep: *keep },
                StrategyDto::Greedy => ResidualStrategy::GreedyMinDegree,
            };
            cfg.adversary = Some(Adversary { alpha: parse_rational(&a.alpha)?, strategy });
        }
        if let Some(eps) = &self.eps {
            cfg.eps = parse_rational(eps)?;
        }
        cfg.seeds = match &self.seeds {
            SeedsDto::List(v) => v.clone(),
            SeedsDto::Range(s) => parse_seed_range(s)?,
        };
        if let Some(b) = self.budget {
            cfg.budget = b;
        }
        if let Some(k) = self.forest_restarts {
            cfg.forest_restarts = k;
        }
        cfg.max_paths = self.max_paths;
        cfg.delta = self.delta;
        cfg.validate()?;
        Ok(cfg)
    }
}
