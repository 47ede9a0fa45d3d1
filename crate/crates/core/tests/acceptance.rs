//! Acceptance run: one line per criterion with its tolerance, worst error and
//! time against budget. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use radon_core::verify::arch::{self, ArchParams};
use radon_core::verify::padic::{self, PadicParams};
use radon_core::verify::{self, Check};

const SEED: u64 = 20240611;
const PADIC_GRID: [(u64, usize); 6] = [(2, 2), (3, 2), (5, 2), (2, 3), (3, 3), (5, 3)];

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Vec<Check>,
}

fn padic_all(f: fn(u64, usize, &PadicParams, u64) -> radon_core::Result<Vec<Check>>) -> Vec<Check> {
    let params = PadicParams::default();
    PADIC_GRID.iter().flat_map(|&(q, n)| f(q, n, &params, SEED).expect("prime q")).collect()
}

fn c1() -> Vec<Check> {
    padic_all(padic::round_trip)
}

fn c2() -> Vec<Check> {
    padic_all(padic::fourier_inversion)
}

fn c3() -> Vec<Check> {
    padic_all(padic::chernov)
}

fn c4() -> Vec<Check> {
    padic_all(padic::structural)
}

fn c5() -> Vec<Check> {
    let p = ArchParams::default();
    let mut out = vec![arch::real_mellin_spot(&p)];
    for n in 2..=4 {
        out.extend((0..=6).map(|k| arch::real_mellin(n, k, &p)));
    }
    out
}

fn c6() -> Vec<Check> {
    let p = ArchParams::default();
    let mut out = Vec::new();
    for n in 2..=3 {
        for k in 0..=4 {
            out.push(arch::real_reciprocity(n, k, &p));
            out.extend(arch::real_round_trip(n, k, &p, SEED));
        }
    }
    out
}

fn c7() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 2..=3 {
        out.extend((0..=8).map(|k| arch::real_zonal(n, k)));
    }
    for p in 0..=2 {
        out.extend((0..=2).map(|q| arch::complex_zonal(p, q)));
    }
    out
}

fn c8() -> Vec<Check> {
    let params = ArchParams::default();
    let mut out = vec![arch::complex_mellin_spot(&params)];
    for n in 2..=3 {
        for p in 0..=3 {
            for q in 0..=3 {
                out.push(arch::complex_mellin(n, p, q, &params));
                out.push(arch::complex_reciprocity(n, p, q, &params));
            }
        }
    }
    for n in 2..=3 {
        for p in 0..=3 {
            for q in 0..=3 {
                out.extend(arch::complex_round_trip(n, p, q, &params, SEED));
            }
        }
    }
    out
}

fn c9() -> Vec<Check> {
    let mut out: Vec<Check> = verify::support::standard_families()
        .iter()
        .map(|(name, f)| verify::support::zero_component(name, f, 1.0 / 200.0).0)
        .collect();
    out.push(verify::support::duality(20, SEED));
    out
}

fn summarize(checks: &[Check]) -> String {
    let exact = checks.iter().filter(|c| c.error.is_none()).map(|c| c.samples).sum::<usize>();
    let worst = checks
        .iter()
        .filter_map(|c| Some((c.error? / c.tolerance?, c)))
        .max_by(|a, b| a.0.total_cmp(&b.0));
    let mut parts = vec![format!("{} rows", checks.len())];
    if exact > 0 {
        parts.push(format!("{exact} exact comparisons"));
    }
    if let Some((_, c)) = worst {
        parts.push(format!(
            "worst {:.2e} (tol {:.1e}) at {} {}",
            c.error.unwrap(),
            c.tolerance.unwrap(),
            c.identity,
            c.case
        ));
    }
    if let Some(f) = verify::first_failure(checks) {
        parts.push(format!("first failure: {} {} {}", f.identity, f.case, f.detail));
    }
    parts.join("; ")
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "p-adic round trip A_β M = id", budget: Duration::from_secs(300), run: c1 },
        Criterion { id: 2, name: "p-adic Fourier inversion", budget: Duration::from_secs(300), run: c2 },
        Criterion { id: 3, name: "Černov formula", budget: Duration::from_secs(300), run: c3 },
        Criterion { id: 4, name: "p-adic structural identities", budget: Duration::from_secs(300), run: c4 },
        Criterion { id: 5, name: "real Mellin transform of α_k", budget: Duration::from_secs(60), run: c5 },
        Criterion { id: 6, name: "real reciprocity and round trip", budget: Duration::from_secs(120), run: c6 },
        Criterion { id: 7, name: "zonal kernels vs slice averages", budget: Duration::from_secs(120), run: c7 },
        Criterion { id: 8, name: "complex Mellin, reciprocity, round trip", budget: Duration::from_secs(180), run: c8 },
        Criterion { id: 9, name: "convexity of the zero component", budget: Duration::from_secs(120), run: c9 },
    ];
    let mut all = true;
    for c in &criteria {
        let start = Instant::now();
        let checks = (c.run)();
        let elapsed = start.elapsed();
        let ok = checks.iter().all(|r| r.passed) && elapsed <= c.budget;
        all &= ok;
        println!(
            "criterion {} {} {}: {} [{:.1}s / {}s]",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.name,
            summarize(&checks),
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
