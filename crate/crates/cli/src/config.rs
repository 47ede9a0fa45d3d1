//! Run configuration: command-line flags merged over an optional TOML or JSON
//! file, then validated.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use radon_core::padic::check_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Padic,
    Real,
    Complex,
    Support,
    MellinTable,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Flags shared by every subcommand. All are optional so that a config file
/// can supply them; flags win over the file.
#[derive(Clone, Debug, Default, Args)]
pub struct Flags {
    /// Primes q, comma separated
    #[arg(long, value_delimiter = ',')]
    pub q: Option<Vec<u64>>,
    /// Dimensions n, comma separated
    #[arg(long, value_delimiter = ',')]
    pub n: Option<Vec<usize>>,
    /// Real harmonic degrees: `a..b` (inclusive), `a..=b`, or a comma list
    #[arg(long)]
    pub k: Option<String>,
    /// Complex bidegrees: p and q both range over this set
    #[arg(long)]
    pub pq: Option<String>,
    /// Unit digits shown for p-adic points in reports
    #[arg(long)]
    pub precision: Option<u32>,
    /// Gauss–Jacobi order of the Mellin quadrature
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Mellin agreement tolerance; also caps the inverse tolerance
    #[arg(long)]
    pub rtol: Option<f64>,
    /// Polar grid spacing for the support suite
    #[arg(long)]
    pub grid_h: Option<f64>,
    /// Output path; standard output if absent
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// TOML or JSON file with the same keys as the flags
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// A list given as `"0..4"`, `"0,2"`, `[0, 2]` or `3` in a config file.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum ListSpec {
    Text(String),
    List(Vec<usize>),
    One(usize),
}

impl ListSpec {
    fn resolve(&self) -> Result<Vec<usize>> {
        match self {
            ListSpec::Text(s) => parse_list(s),
            ListSpec::List(v) => Ok(v.clone()),
            ListSpec::One(x) => Ok(vec![*x]),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub q: Option<Vec<u64>>,
    pub n: Option<Vec<usize>>,
    pub k: Option<ListSpec>,
    pub pq: Option<ListSpec>,
    pub precision: Option<u32>,
    pub order: Option<usize>,
    pub seed: Option<u64>,
    pub rtol: Option<f64>,
    pub grid_h: Option<f64>,
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display())),
            Some("toml") => toml::from_str(&text).with_context(|| format!("parsing {}", path.display())),
            _ => bail!("config file must end in .toml or .json: {}", path.display()),
        }
    }
}

/// `"a..b"` and `"a..=b"` are inclusive ranges; otherwise a comma list.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
        if a > b {
            bail!("empty range {s}");
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(|x| x.trim().parse().with_context(|| format!("bad list entry {x:?}"))).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub suite: Suite,
    pub q: Vec<u64>,
    pub n: Vec<usize>,
    pub k: Vec<usize>,
    pub pq: Vec<usize>,
    pub precision: u32,
    pub order: usize,
    pub seed: u64,
    pub rtol: Option<f64>,
    pub grid_h: f64,
    // kept out of reports so the same run written to two paths is identical
    #[serde(skip)]
    pub output: Option<PathBuf>,
    pub format: Format,
}

pub const MAX_Q: u64 = 13;

impl RunConfig {
    /// Flags over file over per-suite defaults.
    pub fn resolve(suite: Suite, flags: &Flags) -> Result<RunConfig> {
        let file = match &flags.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        let list = |flag: &Option<String>, file: &Option<ListSpec>, default: Vec<usize>| -> Result<Vec<usize>> {
            match (flag, file) {
                (Some(s), _) => parse_list(s),
                (None, Some(spec)) => spec.resolve(),
                (None, None) => Ok(default),
            }
        };
        let default_n = match suite {
            Suite::Padic | Suite::Real | Suite::MellinTable => vec![2, 3],
            Suite::Complex => vec![2],
            Suite::Support => vec![2],
        };
        let dedup = |mut v: Vec<usize>| {
            v.sort_unstable();
            v.dedup();
            v
        };
        let cfg = RunConfig {
            suite,
            q: {
                let mut q = flags.q.clone().or(file.q).unwrap_or_else(|| vec![2, 3, 5]);
                q.sort_unstable();
                q.dedup();
                q
            },
            n: dedup(flags.n.clone().or(file.n).unwrap_or(default_n)),
            k: dedup(list(&flags.k, &file.k, (0..=4).collect())?),
            pq: dedup(list(&flags.pq, &file.pq, (0..=3).collect())?),
            precision: flags.precision.or(file.precision).unwrap_or(radon_core::padic::DEFAULT_PRECISION),
            order: flags.order.or(file.order).unwrap_or(radon_core::specfun::DEFAULT_ORDER),
            seed: flags.seed.or(file.seed).unwrap_or(7),
            rtol: flags.rtol.or(file.rtol),
            grid_h: flags.grid_h.or(file.grid_h).unwrap_or(1.0 / 200.0),
            output: flags.output.clone().or(file.output),
            format: flags.format.or(file.format).unwrap_or_default(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        for &q in &self.q {
            if check_prime(q).is_err() || q > MAX_Q {
                bail!("unsupported q = {q}: q must be a prime ≤ {MAX_Q}");
            }
        }
        let n_range = match self.suite {
            Suite::Padic => 2..=3,
            Suite::Real | Suite::MellinTable => 2..=8,
            Suite::Complex => 2..=4,
            Suite::Support => 2..=2,
        };
        if self.n.is_empty() || self.n.iter().any(|n| !n_range.contains(n)) {
            bail!("unsupported n = {:?} for this suite: each n must lie in {n_range:?}", self.n);
        }
        if self.k.iter().any(|&k| k > 12) {
            bail!("harmonic degree k must be ≤ 12");
        }
        if self.pq.iter().any(|&p| p > 6) {
            bail!("bidegree entries must be ≤ 6");
        }
        if !(1..=40).contains(&self.precision) {
            bail!("precision must lie in 1..=40");
        }
        if !(8..=2000).contains(&self.order) {
            bail!("quadrature order must lie in 8..=2000");
        }
        if let Some(r) = self.rtol {
            if !(r > 0.0 && r < 1.0) {
                bail!("rtol must lie in (0, 1)");
            }
        }
        if !(self.grid_h > 0.0 && self.grid_h <= 0.1) {
            bail!("grid_h must lie in (0, 0.1]");
        }
        Ok(())
    }
}
