//! Suite execution: expands a [`RunConfig`] into verification cases.

use anyhow::Result;

use radon_core::verify::arch::{self, ArchParams, MellinRow};
use radon_core::verify::padic::{self, PadicParams};
use radon_core::verify::{self, sort_checks, Check};

use crate::config::{RunConfig, Suite};

/// What a run produces.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Checks(Vec<Check>),
    Table(Vec<MellinRow>),
}

pub fn arch_params(cfg: &RunConfig) -> ArchParams {
    let p = ArchParams { order: cfg.order, ..ArchParams::default() };
    match cfg.rtol {
        Some(r) => p.with_rtol(r),
        None => p,
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let mut checks = match cfg.suite {
        Suite::Padic => run_padic(cfg)?,
        Suite::Real => run_real(cfg),
        Suite::Complex => run_complex(cfg),
        Suite::Support => run_support(cfg),
        Suite::MellinTable => return Ok(Outcome::Table(mellin_table(cfg)?)),
    };
    sort_checks(&mut checks);
    Ok(Outcome::Checks(checks))
}

fn run_padic(cfg: &RunConfig) -> Result<Vec<Check>> {
    let params = PadicParams { digits: Some(cfg.precision as usize), ..PadicParams::default() };
    let mut out = Vec::new();
    for &q in &cfg.q {
        for &n in &cfg.n {
            out.extend(padic::run(q, n, &params, cfg.seed)?);
        }
    }
    Ok(out)
}

fn run_real(cfg: &RunConfig) -> Vec<Check> {
    let p = arch_params(cfg);
    let mut out = vec![arch::real_mellin_spot(&p)];
    for &n in &cfg.n {
        for &k in &cfg.k {
            out.push(arch::real_mellin(n, k, &p));
            out.push(arch::real_reciprocity(n, k, &p));
            out.extend(arch::real_round_trip(n, k, &p, cfg.seed));
            // direct slice averages exist for S¹ and S²
            if n <= 3 {
                out.push(arch::real_zonal(n, k));
            }
        }
    }
    out
}

fn run_complex(cfg: &RunConfig) -> Vec<Check> {
    let params = arch_params(cfg);
    let mut out = vec![arch::complex_mellin_spot(&params)];
    for &n in &cfg.n {
        for &p in &cfg.pq {
            for &q in &cfg.pq {
                out.push(arch::complex_mellin(n, p, q, &params));
                out.push(arch::complex_reciprocity(n, p, q, &params));
                out.extend(arch::complex_round_trip(n, p, q, &params, cfg.seed));
                if n == 2 {
                    out.push(arch::complex_zonal(p, q));
                }
            }
        }
    }
    out
}

fn run_support(cfg: &RunConfig) -> Vec<Check> {
    let mut out: Vec<Check> = verify::support::standard_families()
        .iter()
        .map(|(name, f)| verify::support::zero_component(name, f, cfg.grid_h).0)
        .collect();
    out.push(verify::support::duality(20, cfg.seed));
    out
}

/// Real rows at `s ∈ {n, n+1/2, n+1, n+2, n+4}` for each `(n, k)` and complex
/// rows at `s ∈ {2n, 2n+1/2, 2n+1, 2n+2, 2n+4}` for each `(n, p, q)`.
pub fn mellin_table(cfg: &RunConfig) -> Result<Vec<MellinRow>> {
    const OFFSETS: [f64; 5] = [0.0, 0.5, 1.0, 2.0, 4.0];
    let mut rows = Vec::new();
    for &n in &cfg.n {
        for &k in &cfg.k {
            for d in OFFSETS {
                rows.push(arch::mellin_row_real(n, k, n as f64 + d, cfg.order)?);
            }
        }
        for &p in &cfg.pq {
            for &q in &cfg.pq {
                for d in OFFSETS {
                    rows.push(arch::mellin_row_complex(n, p, q, 2.0 * n as f64 + d, cfg.order)?);
                }
            }
        }
    }
    Ok(rows)
}
