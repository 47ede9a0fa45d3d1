//! Tolerance checks over `R` and `C`: Mellin transforms against their Gamma
//! formulas, reciprocity of `α` and `β`, the round trip `β ∗ (α ∗ u) = u`,
//! and the zonal kernels against direct slice averages.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::complex::{a_pq, a_pq_direct, mellin_alpha_pq_formula, AlphaImageComplex, AlphaKernelComplex, BetaKernelComplex};
use crate::real::{a_k, a_k_direct, mellin_alpha_formula, AlphaImage, AlphaKernelReal, BetaKernelReal, BumpProfile, RadialProfile};
use crate::specfun::DEFAULT_ORDER;

use super::{case_rng, Check, ToleranceTally};

/// Tolerances and sample sizes for the Archimedean suites.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArchParams {
    /// Gauss–Jacobi order of the Mellin quadrature.
    pub order: usize,
    /// Relative tolerance of quadrature against formula.
    pub mellin_rtol: f64,
    /// Tolerance of reciprocity `⟨β, t^s⟩·Mα(s) = 1` and of the round trip,
    /// the latter relative to `sup |u|`.
    pub inverse_tol: f64,
    pub functions: usize,
    pub radii: usize,
}

impl Default for ArchParams {
    fn default() -> Self {
        ArchParams { order: DEFAULT_ORDER, mellin_rtol: 1e-8, inverse_tol: 1e-6, functions: 5, radii: 20 }
    }
}

impl ArchParams {
    /// Applies a tolerance override: the Mellin tolerance is replaced and the
    /// inverse tolerance can only tighten.
    pub fn with_rtol(mut self, rtol: f64) -> Self {
        self.mellin_rtol = rtol;
        self.inverse_tol = self.inverse_tol.min(rtol);
        self
    }
}

/// Relative error, or absolute where the formula vanishes.
fn rel_err(quad: Complex64, exact: Complex64) -> f64 {
    let scale = exact.norm();
    if scale > 0.0 {
        (quad - exact).norm() / scale
    } else {
        quad.norm()
    }
}

/// Real-dimension `s` grid: five values with `Re s > n − 1`.
pub fn real_s_grid(n: usize) -> Vec<Complex64> {
    let nf = n as f64;
    vec![
        Complex64::new(nf - 0.5, 0.0),
        Complex64::new(nf + 0.5, 0.3),
        Complex64::new(nf + 1.7, 0.0),
        Complex64::new(nf + 3.2, -1.1),
        Complex64::new(nf + 6.5, 0.0),
    ]
}

/// Complex-dimension `s` grid `{2n − 1.5, 2n, 2n + 2, 2n + 4.5}`; `2n` and
/// `2n + 2` sit on zeros of the transform for some `(p, q)`.
pub fn complex_s_grid(n: usize) -> Vec<Complex64> {
    let nf = 2.0 * n as f64;
    [nf - 1.5, nf, nf + 2.0, nf + 4.5].into_iter().map(Complex64::from).collect()
}

pub fn real_mellin(n: usize, k: usize, params: &ArchParams) -> Check {
    let kernel = AlphaKernelReal::new(n, k);
    let mut t = ToleranceTally::new();
    for s in real_s_grid(n) {
        match (kernel.mellin_quadrature(s, params.order), mellin_alpha_formula(n, k, s)) {
            (Ok(a), Ok(b)) => t.record(rel_err(a, b), format_args!("s={s}")),
            (Err(e), _) | (_, Err(e)) => t.error(e, format_args!("s={s}")),
        }
    }
    t.finish("real", "mellin_alpha", format!("n={n} k={k}"), params.mellin_rtol)
}

/// Reference values `(n, k, s) → π, π/2, 2π`.
pub fn real_mellin_spot(params: &ArchParams) -> Check {
    let mut t = ToleranceTally::new();
    for (n, k, s, v) in [(2, 0, 2.0, PI), (2, 1, 3.0, PI / 2.0), (3, 0, 3.0, 2.0 * PI)] {
        let s = Complex64::from(s);
        let at = format_args!("n={n} k={k} s={s}");
        match (AlphaKernelReal::new(n, k).mellin_quadrature(s, params.order), mellin_alpha_formula(n, k, s)) {
            (Ok(a), Ok(b)) => t.record(rel_err(a, Complex64::from(v)).max(rel_err(b, Complex64::from(v))), at),
            (Err(e), _) | (_, Err(e)) => t.error(e, at),
        }
    }
    t.finish("real", "mellin_spot_values", "reference".into(), params.mellin_rtol)
}

/// `⟨β_k, t^s⟩ · Mα_k(s) = 1` on the real part of the `s` grid; points where
/// the transform vanishes are skipped.
pub fn real_reciprocity(n: usize, k: usize, params: &ArchParams) -> Check {
    let beta = BetaKernelReal::new(n, k);
    let mut t = ToleranceTally::new();
    for s in real_s_grid(n).into_iter().map(|s| s.re) {
        match (mellin_alpha_formula(n, k, Complex64::from(s)), beta.pair_power(s)) {
            (Ok(m), _) if m.norm() == 0.0 => t.skip(),
            (Ok(m), Ok(b)) => t.record((m.re * b - 1.0).abs(), format_args!("s={s}")),
            (_, Err(_)) | (Err(_), _) => t.skip(),
        }
    }
    t.finish("real", "reciprocity", format!("n={n} k={k}"), params.inverse_tol)
}

/// `count` radii spread over `(from·lo, 1.1·hi)`.
fn radii(u: &BumpProfile, count: usize, from: f64) -> Vec<f64> {
    let (a, b) = (from * u.lo, 1.1 * u.hi);
    (0..count).map(|i| a + (b - a) * (i as f64 + 0.5) / count as f64).collect()
}

/// Radii start at `from · inf supp u`. Below the support the β pairing cancels
/// terms of size `(sup supp u / r)^{p+q+2n−1}` to produce 0, so the complex
/// suite starts at the support.
fn round_trip_check<F: Fn(&BumpProfile, f64) -> crate::Result<f64>>(
    suite: &str,
    case: String,
    u: &BumpProfile,
    from: f64,
    params: &ArchParams,
    apply: F,
) -> Check {
    let sup = u.sup_estimate();
    let mut t = ToleranceTally::new();
    for r in radii(u, params.radii, from) {
        match apply(u, r) {
            Ok(v) => t.record((v - u.eval(r)).abs() / sup, format_args!("r={r:.4}")),
            Err(e) => t.error(e, format_args!("r={r:.4}")),
        }
    }
    t.finish(suite, "round_trip", case, params.inverse_tol)
}

/// `β_k ∗ (α_k ∗ u) = u` for seeded random bumps `u`.
pub fn real_round_trip(n: usize, k: usize, params: &ArchParams, seed: u64) -> Vec<Check> {
    let alpha = AlphaKernelReal::new(n, k);
    let beta = BetaKernelReal::new(n, k);
    (0..params.functions)
        .map(|i| {
            let u = BumpProfile::random(&mut case_rng(seed, &[10, n as u64, k as u64, i as u64]));
            round_trip_check("real", format!("n={n} k={k} u={i}"), &u, 0.5, params, |u, r| {
                beta.convolve(&AlphaImage { kernel: alpha, u }, r)
            })
        })
        .collect()
}

/// `a_k` against averages of `Re((x₁ + i x₂)^k)` over slices of `S^{n−1}`.
pub fn real_zonal(n: usize, k: usize) -> Check {
    let mut t = ToleranceTally::new();
    for i in 0..=10 {
        let x = -0.95 + 0.19 * i as f64;
        t.record((a_k(n, k, x) - a_k_direct(n, k, x, 64)).abs(), format_args!("t={x:.2}"));
    }
    t.finish("real", "zonal_kernel", format!("n={n} k={k}"), 1e-10)
}

pub fn complex_mellin(n: usize, p: usize, q: usize, params: &ArchParams) -> Check {
    let kernel = AlphaKernelComplex::new(n, p, q);
    let mut t = ToleranceTally::new();
    for s in complex_s_grid(n) {
        match (kernel.mellin_quadrature(s, params.order), mellin_alpha_pq_formula(n, p, q, s)) {
            (Ok(a), Ok(b)) => t.record(rel_err(a, b), format_args!("s={s}")),
            (Err(e), _) | (_, Err(e)) => t.error(e, format_args!("s={s}")),
        }
    }
    t.finish("complex", "mellin_alpha", format!("n={n} p={p} q={q}"), params.mellin_rtol)
}

/// Reference values `(n, p, q, s) → π, π/2`.
pub fn complex_mellin_spot(params: &ArchParams) -> Check {
    let mut t = ToleranceTally::new();
    for (n, p, q, s, v) in [(2, 0, 0, 4.0, PI), (2, 1, 0, 5.0, PI / 2.0)] {
        let s = Complex64::from(s);
        let at = format_args!("n={n} p={p} q={q} s={s}");
        let quad = AlphaKernelComplex::new(n, p, q).mellin_quadrature(s, params.order);
        match (quad, mellin_alpha_pq_formula(n, p, q, s)) {
            (Ok(a), Ok(b)) => t.record(rel_err(a, Complex64::from(v)).max(rel_err(b, Complex64::from(v))), at),
            (Err(e), _) | (_, Err(e)) => t.error(e, at),
        }
    }
    t.finish("complex", "mellin_spot_values", "reference".into(), params.mellin_rtol)
}

pub fn complex_reciprocity(n: usize, p: usize, q: usize, params: &ArchParams) -> Check {
    let beta = BetaKernelComplex::new(n, p, q);
    let mut t = ToleranceTally::new();
    for s in complex_s_grid(n).into_iter().map(|s| s.re) {
        match (mellin_alpha_pq_formula(n, p, q, Complex64::from(s)), beta.pair_power(s)) {
            (Ok(m), _) if m.norm() == 0.0 => t.skip(),
            (Ok(m), Ok(b)) => t.record((m.re * b - 1.0).abs(), format_args!("s={s}")),
            (_, Err(_)) | (Err(_), _) => t.skip(),
        }
    }
    t.finish("complex", "reciprocity", format!("n={n} p={p} q={q}"), params.inverse_tol)
}

/// `β_{p,q} ∗ (α_{p,q} ∗ u) = u` for seeded random bumps `u`.
pub fn complex_round_trip(n: usize, p: usize, q: usize, params: &ArchParams, seed: u64) -> Vec<Check> {
    let alpha = AlphaKernelComplex::new(n, p, q);
    let beta = BetaKernelComplex::new(n, p, q);
    (0..params.functions)
        .map(|i| {
            let u = BumpProfile::random(&mut case_rng(seed, &[11, n as u64, p as u64, q as u64, i as u64]));
            round_trip_check("complex", format!("n={n} p={p} q={q} u={i}"), &u, 1.0, params, |u, r| {
                beta.convolve(&AlphaImageComplex { kernel: alpha, u }, r)
            })
        })
        .collect()
}

/// `a_{p,q}` against averages of `z₁^p z̄₂^q` over slices of `S³`.
pub fn complex_zonal(p: usize, q: usize) -> Check {
    let mut t = ToleranceTally::new();
    for i in 0..=10 {
        let x = 0.05 + 0.09 * i as f64;
        t.record((a_pq(2, p, q, x) - a_pq_direct(p, q, x, 32)).abs(), format_args!("t={x:.2}"));
    }
    t.finish("complex", "zonal_kernel", format!("n=2 p={p} q={q}"), 1e-8)
}

/// One row of the Mellin table: quadrature and formula at a real `s`.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct MellinRow {
    pub field: String,
    pub n: usize,
    pub k: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub s: f64,
    pub formula: f64,
    pub quadrature: f64,
}

pub fn mellin_row_real(n: usize, k: usize, s: f64, order: usize) -> crate::Result<MellinRow> {
    let z = Complex64::from(s);
    Ok(MellinRow {
        field: "real".into(),
        n,
        k: Some(k),
        p: None,
        q: None,
        s,
        formula: mellin_alpha_formula(n, k, z)?.re,
        quadrature: AlphaKernelReal::new(n, k).mellin_quadrature(z, order)?.re,
    })
}

pub fn mellin_row_complex(n: usize, p: usize, q: usize, s: f64, order: usize) -> crate::Result<MellinRow> {
    let z = Complex64::from(s);
    Ok(MellinRow {
        field: "complex".into(),
        n,
        k: None,
        p: Some(p),
        q: Some(q),
        s,
        formula: mellin_alpha_pq_formula(n, p, q, z)?.re,
        quadrature: AlphaKernelComplex::new(n, p, q).mellin_quadrature(z, order)?.re,
    })
}
