//! Library side of the `radon` binary: configuration, suite dispatch and
//! report writing.

pub mod config;
pub mod report;
pub mod suites;

use std::io::{self, BufWriter, Write};

use anyhow::{Context, Result};

use config::RunConfig;
use suites::Outcome;

/// Mellin table rows must agree to this relative error unless `--rtol` is set.
pub const TABLE_RTOL: f64 = 1e-8;

/// The first failing row as `identity case: detail`, if any.
pub fn first_failure(cfg: &RunConfig, outcome: &Outcome) -> Option<String> {
    match outcome {
        Outcome::Checks(c) => radon_core::verify::first_failure(c).map(|f| format!("{} {}: {}", f.identity, f.case, f.detail)),
        Outcome::Table(rows) => {
            let tol = cfg.rtol.unwrap_or(TABLE_RTOL);
            report::table_rows(rows).into_iter().find(|r| !(r.rel_err <= tol)).map(|r| {
                format!(
                    "mellin_{} n={} k={:?} p={:?} q={:?} s={}: relative error {:.3e} > {tol:.0e}",
                    r.field, r.n, r.k, r.p, r.q, r.s, r.rel_err
                )
            })
        }
    }
}

/// Runs the configured suite and writes its report. Returns the first failure.
pub fn run(cfg: &RunConfig) -> Result<Option<String>> {
    let outcome = suites::run(cfg)?;
    let bytes = report::render(cfg, &outcome)?;
    match &cfg.output {
        Some(path) => std::fs::write(path, &bytes).with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut out = BufWriter::new(io::stdout().lock());
            out.write_all(&bytes)?;
            out.flush()?;
        }
    }
    Ok(first_failure(cfg, &outcome))
}

