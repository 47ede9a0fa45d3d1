//! CSV and JSON writers. Output carries no timestamps so that equal seeds give
//! byte-identical reports.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;

use radon_core::verify::arch::MellinRow;

use crate::config::{Format, RunConfig, Suite};
use crate::suites::Outcome;

/// A Mellin table row with its relative disagreement.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub field: String,
    pub n: usize,
    pub k: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub s: f64,
    pub formula: f64,
    pub quadrature: f64,
    pub rel_err: f64,
}

impl From<&MellinRow> for TableRow {
    fn from(r: &MellinRow) -> Self {
        let scale = r.formula.abs();
        let diff = (r.quadrature - r.formula).abs();
        TableRow {
            field: r.field.clone(),
            n: r.n,
            k: r.k,
            p: r.p,
            q: r.q,
            s: r.s,
            formula: r.formula,
            quadrature: r.quadrature,
            rel_err: if scale > 0.0 { diff / scale } else { diff },
        }
    }
}

#[derive(Serialize)]
struct Document<'a, T> {
    suite: Suite,
    seed: u64,
    config: &'a RunConfig,
    rows: &'a [T],
}

pub fn table_rows(rows: &[MellinRow]) -> Vec<TableRow> {
    rows.iter().map(TableRow::from).collect()
}

pub fn write(cfg: &RunConfig, outcome: &Outcome, out: impl Write) -> Result<()> {
    match outcome {
        Outcome::Checks(c) => write_rows(cfg, c, out),
        Outcome::Table(t) => write_rows(cfg, &table_rows(t), out),
    }
}

fn write_rows<T: Serialize>(cfg: &RunConfig, rows: &[T], mut out: impl Write) -> Result<()> {
    match cfg.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let doc = Document { suite: cfg.suite, seed: cfg.seed, config: cfg, rows };
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Renders to bytes; used by `run` and by tests that compare reports.
pub fn render(cfg: &RunConfig, outcome: &Outcome) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    write(cfg, outcome, &mut buf)?;
    Ok(buf)
}
