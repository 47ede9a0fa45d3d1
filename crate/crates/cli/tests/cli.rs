use std::path::Path;
use std::process::{Command, Output};

use radon_cli::config::{parse_list, Flags, RunConfig, Suite};

fn radon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radon")).args(args).output().expect("binary runs")
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn padic_small_run_passes_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let o = radon(&["padic", "--q", "2", "--n", "2", "--format", "json", "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let doc: serde_json::Value = serde_json::from_str(&read(&out)).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["passed"] == true));
    for id in ["round_trip", "fourier_F_Fprime", "chernov_vs_f", "m_equivariance"] {
        assert!(rows.iter().any(|r| r["identity"] == id), "missing {id}");
    }
}

#[test]
fn composite_q_is_a_validation_error() {
    let o = radon(&["padic", "--q", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported q = 4"));
    assert!(o.stdout.is_empty());
}

#[test]
fn out_of_range_n_is_rejected() {
    assert_eq!(radon(&["support", "--n", "3"]).status.code(), Some(2));
    assert_eq!(radon(&["padic", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn same_seed_gives_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for p in [&a, &b] {
        let o = radon(&["padic", "--q", "3", "--n", "2", "--seed", "11", "-o", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(read(&a), read(&b));
    let c = dir.path().join("c.csv");
    radon(&["padic", "--q", "3", "--n", "2", "--seed", "12", "-o", c.to_str().unwrap()]);
    assert_ne!(read(&a), read(&c), "the seed should change the sampled points");
}

#[test]
fn mellin_table_has_pi_rows_and_stable_header() {
    let o = radon(&["mellin-table", "--n", "2", "--k", "0", "--pq", "0"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("field,n,k,p,q,s,formula,quadrature,rel_err"));
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    let pi = |field: &str, s: &str| {
        let r = rows.iter().find(|r| &r[0] == field && &r[5] == s).unwrap();
        let v: f64 = r[7].parse().unwrap();
        assert!((v - std::f64::consts::PI).abs() < 1e-10, "{field} s={s}: {v}");
    };
    pi("real", "2.0");
    pi("complex", "4.0");
}

#[test]
fn complex_suite_covers_unequal_bidegrees() {
    let o = radon(&["complex", "--pq", "0..1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    for case in ["n=2 p=0 q=1", "n=2 p=1 q=0", "n=2 p=1 q=1"] {
        assert!(text.lines().any(|l| l.starts_with("complex,mellin") && l.contains(case)), "no Mellin row for {case}");
    }
}

#[test]
fn impossible_rtol_fails_with_first_identity() {
    let o = radon(&["real", "--n", "2", "--k", "0", "--rtol", "1e-300"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.starts_with("FAIL "), "{err}");
}

#[test]
fn rtol_tightens_both_tolerances() {
    let base = RunConfig::resolve(Suite::Real, &Flags::default()).unwrap();
    let tight = RunConfig::resolve(Suite::Real, &Flags { rtol: Some(1e-10), ..Flags::default() }).unwrap();
    let (b, t) = (radon_cli::suites::arch_params(&base), radon_cli::suites::arch_params(&tight));
    assert_eq!(t.mellin_rtol, 1e-10);
    assert!(t.inverse_tol <= 1e-10 && t.inverse_tol < b.inverse_tol);
}

#[test]
fn config_file_merges_under_flags() {
    let dir = tempfile::tempdir().unwrap();
    let toml = dir.path().join("run.toml");
    std::fs::write(&toml, "q = [3, 5]\nn = [3]\nk = \"1..2\"\nseed = 99\nformat = \"json\"\n").unwrap();
    let flags = Flags { config: Some(toml.clone()), seed: Some(5), ..Flags::default() };
    let cfg = RunConfig::resolve(Suite::Padic, &flags).unwrap();
    assert_eq!(cfg.q, vec![3, 5]);
    assert_eq!(cfg.n, vec![3]);
    assert_eq!(cfg.k, vec![1, 2]);
    assert_eq!(cfg.seed, 5);
    assert_eq!(cfg.format, radon_cli::config::Format::Json);

    let json = dir.path().join("run.json");
    std::fs::write(&json, r#"{"pq": [0, 2], "grid_h": 0.01}"#).unwrap();
    let cfg = RunConfig::resolve(Suite::Complex, &Flags { config: Some(json), ..Flags::default() }).unwrap();
    assert_eq!(cfg.pq, vec![0, 2]);
    assert_eq!(cfg.grid_h, 0.01);

    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "qq = [2]\n").unwrap();
    assert!(RunConfig::resolve(Suite::Padic, &Flags { config: Some(bad), ..Flags::default() }).is_err());
}

#[test]
fn list_syntax() {
    assert_eq!(parse_list("0..4").unwrap(), vec![0, 1, 2, 3, 4]);
    assert_eq!(parse_list("1..=3").unwrap(), vec![1, 2, 3]);
    assert_eq!(parse_list("2, 0,5").unwrap(), vec![2, 0, 5]);
    assert_eq!(parse_list("7").unwrap(), vec![7]);
    assert!(parse_list("3..1").is_err());
    assert!(parse_list("a").is_err());
}
