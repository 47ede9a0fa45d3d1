//! Exact identities over `Q_p`: inversion, Fourier duality, the Černov
//! formula and the structural lemmas behind them.

use rand::Rng;

use crate::cyclotomic::Cyclotomic;
use crate::error::Result;
use crate::funcspace::{LazyShellFunction, MultKernel};
use crate::nonarch::chernov::chernov_invert;
use crate::nonarch::fourier::{pair_sigma_alpha_psi, psi_minus_one_kernel};
use crate::nonarch::{
    apply_a_beta, cavalieri_integral, fourier_f, fourier_f_cells, fourier_fprime, fourier_fprime_as_function,
    kochubei_integral, radon_m, radon_m_as_function, BetaDistribution, Character, LinearMap, RegularizedPower,
};
use crate::padic::random::{random_cc, random_coeff, random_point_in_shell, random_point_off_support, random_schwartz, RandomCcConfig};
use crate::padic::{check_prime, Cell, CellFunction, PAdic, PVec};
use crate::rational::Rational;
use crate::value::Value;

use super::{case_rng, Check, ExactTally};

const SUITE: &str = "padic";

/// Sizes of the randomized p-adic cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicParams {
    /// Random `f` per `(q, n)` for the round trip and Fourier inversion.
    pub functions: usize,
    /// Points outside the support checked per function.
    pub off_points: usize,
    pub chernov_functions: usize,
    pub chernov_points: usize,
    /// Test functions for the pairing and structural identities.
    pub test_functions: usize,
    /// Unit digits shown for points in mismatch details; exact rationals if `None`.
    pub digits: Option<usize>,
}

impl Default for PadicParams {
    fn default() -> Self {
        PadicParams { functions: 25, off_points: 20, chernov_functions: 10, chernov_points: 10, test_functions: 10, digits: None }
    }
}

/// A point as shown in mismatch details, formatted only on failure.
struct Shown<'a>(&'a PVec, Option<usize>);

impl std::fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.1 {
            Some(p) => write!(f, "{:.p$}", self.0),
            None => write!(f, "{}", self.0),
        }
    }
}

fn case(q: u64, n: usize, i: usize) -> String {
    format!("q={q} n={n} case={i:02}")
}

/// Cell representatives of `f` followed by `extra` points off its support,
/// in the shell window widened by one on each side.
fn sample_points<R: Rng>(rng: &mut R, f: &CellFunction, extra: usize) -> Vec<PVec> {
    let (lo, hi) = f.shell_range().unwrap_or((0, 0));
    let depth = f.entries().iter().map(|(c, _)| c.level() - c.center().val_or_inf().min(c.level())).max().unwrap_or(1);
    let mut pts: Vec<PVec> = f.entries().iter().map(|(c, _)| c.center().clone()).filter(|x| !x.is_zero()).collect();
    pts.extend((0..extra).map(|_| random_point_off_support(rng, f, lo - 1, hi + 1, depth as u32 + 1)));
    pts
}

fn random_point<R: Rng>(rng: &mut R, q: u64, n: usize, lo: i32, hi: i32) -> PVec {
    let w = rng.gen_range(lo..=hi);
    let depth = rng.gen_range(1..=3);
    random_point_in_shell(rng, q, n, w, depth)
}

fn to_cyclotomic(f: &CellFunction) -> CellFunction<Cyclotomic> {
    f.map(Cyclotomic::from_rational)
}

/// `A_β(Mf)(x) = f(x)` for random `f ∈ C_c(F^n ∖ 0)`.
pub fn round_trip(q: u64, n: usize, params: &PadicParams, seed: u64) -> Result<Vec<Check>> {
    check_prime(q)?;
    let cfg = RandomCcConfig::default();
    Ok((0..params.functions)
        .map(|i| {
            let mut rng = case_rng(seed, &[1, q, n as u64, i as u64]);
            let f = random_cc(&mut rng, q, n, &cfg);
            let phi = radon_m_as_function(&f);
            let mut tally = ExactTally::new();
            for x in sample_points(&mut rng, &f, params.off_points) {
                tally.compare(apply_a_beta(&phi, &x), Ok(f.eval(&x)), Shown(&x, params.digits));
            }
            tally.finish(SUITE, "round_trip", case(q, n, i))
        })
        .collect())
}

/// `F ∘ F′ = id` and `F′ ∘ F = id` on random `f ∈ C_c`, in the cyclotomic ring.
pub fn fourier_inversion(q: u64, n: usize, params: &PadicParams, seed: u64) -> Result<Vec<Check>> {
    check_prime(q)?;
    let cfg = RandomCcConfig::default();
    let psi = Character::new(q);
    let mut out = Vec::new();
    for i in 0..params.functions {
        let mut rng = case_rng(seed, &[2, q, n as u64, i as u64]);
        let f = random_cc(&mut rng, q, n, &cfg);
        let pts = sample_points(&mut rng, &f, params.off_points);
        let fc = to_cyclotomic(&f);

        let lazy = fourier_fprime_as_function(&psi, &fc);
        let mut tally = ExactTally::new();
        for x in &pts {
            tally.compare(fourier_f(&psi, &lazy, x), Ok(fc.eval(x)), Shown(x, params.digits));
        }
        out.push(tally.finish(SUITE, "fourier_F_Fprime", case(q, n, i)));

        let mut tally = ExactTally::new();
        match fourier_f_cells(&psi, &fc) {
            Ok(ff) => {
                for x in &pts {
                    tally.compare(fourier_fprime(&psi, &ff, x), Ok(fc.eval(x)), Shown(x, params.digits));
                }
            }
            Err(e) => tally.compare(Err::<Cyclotomic, _>(e), Ok(Cyclotomic::zero()), "F f"),
        }
        out.push(tally.finish(SUITE, "fourier_Fprime_F", case(q, n, i)));
    }
    Ok(out)
}

/// The Černov formula on Schwartz–Bruhat `f` (nonzero at 0 allowed): equal to
/// `f(x)` and to `A_β(Mf)(x)`.
pub fn chernov(q: u64, n: usize, params: &PadicParams, seed: u64) -> Result<Vec<Check>> {
    check_prime(q)?;
    let cfg = RandomCcConfig::default();
    let mut out = Vec::new();
    for i in 0..params.chernov_functions {
        let mut rng = case_rng(seed, &[3, q, n as u64, i as u64]);
        let f = random_schwartz(&mut rng, q, n, &cfg);
        let (lo, hi) = f.shell_range().unwrap_or((0, 0));
        let mut pts: Vec<PVec> = f
            .entries()
            .iter()
            .map(|(c, _)| c.center().clone())
            .filter(|x| !x.is_zero())
            .take(params.chernov_points / 2)
            .collect();
        while pts.len() < params.chernov_points {
            pts.push(random_point(&mut rng, q, n, lo - 1, hi + 1));
        }
        let phi = radon_m_as_function(&f);
        let (mut vs_f, mut vs_a) = (ExactTally::new(), ExactTally::new());
        for x in &pts {
            vs_f.compare(chernov_invert(&f, x), Ok(f.eval(x)), Shown(x, params.digits));
            vs_a.compare(chernov_invert(&f, x), apply_a_beta(&phi, x), Shown(x, params.digits));
        }
        out.push(vs_f.finish(SUITE, "chernov_vs_f", case(q, n, i)));
        out.push(vs_a.finish(SUITE, "chernov_vs_a_beta", case(q, n, i)));
    }
    Ok(out)
}

/// A kernel on two or three shells in `[−1, 1]`, with one finer cell.
fn random_kernel<R: Rng>(rng: &mut R, q: u64) -> MultKernel {
    let mut k = MultKernel::shell_indicator(q, rng.gen_range(-1..=1)).scale(&random_coeff(rng));
    k = k.add(&MultKernel::shell_indicator(q, rng.gen_range(-1..=1)).scale(&random_coeff(rng)));
    let a = rng.gen_range(-1..=1);
    let u = rng.gen_range(1..q as i128 * q as i128);
    let u = if u % q as i128 == 0 { u + 1 } else { u };
    let cell = Cell::new(PVec::new(q, vec![PAdic::from_parts(q, a, u)]), a + 2);
    let fine = MultKernel::new(CellFunction::from_combination(q, 1, vec![(cell, random_coeff(rng))])).expect("cell avoids 0");
    k.add(&fine)
}

/// `g = L·U·diag(π^{a_i})` with unit lower and upper triangular integer `L`, `U`.
fn random_linear_map<R: Rng>(rng: &mut R, n: usize) -> LinearMap {
    let tri = |rng: &mut R, upper: bool| -> Vec<Vec<i128>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1 } else if (j > i) == upper { rng.gen_range(-3..=3) } else { 0 }).collect())
            .collect()
    };
    let (l, u) = (tri(rng, false), tri(rng, true));
    let prod = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| l[i][k] * u[k][j]).sum()).collect()).collect();
    LinearMap { unimodular: prod, exponents: (0..n).map(|_| rng.gen_range(-1..=1)).collect() }
}

/// Structural identities: the key pairing `β = σ(α) ∗ ψ`, `M(σ(α)∗f) = α∗Mf`,
/// `A_β(α∗φ) = σ(α)∗A_βφ`, `F′f = (ψ(−t)−1) ∗ Mf`, equivariance of `M`,
/// ξ-independence of `∫ Rf(ξ, s) ds`, the vanishing sphere integral and the
/// support and mass of `β_U`.
pub fn structural(q: u64, n: usize, params: &PadicParams, seed: u64) -> Result<Vec<Check>> {
    check_prime(q)?;
    let cfg = RandomCcConfig::default();
    let psi = Character::new(q);
    let beta = BetaDistribution::new(q, n);
    let mut out = Vec::new();
    let mut rng = case_rng(seed, &[4, q, n as u64]);

    let mut key = ExactTally::new();
    for i in 0..params.test_functions {
        let h = random_schwartz(&mut rng, q, 1, &cfg);
        let rhs = pair_sigma_alpha_psi(&psi, n, &h);
        key.compare(Ok(Cyclotomic::from_rational(&beta.pair(&h))), rhs, format_args!("h{i}"));
    }
    out.push(key.finish(SUITE, "key_beta_pairing", format!("q={q} n={n}")));

    let functions = params.test_functions.div_ceil(3);
    let xi_count = params.test_functions;
    for i in 0..functions {
        let mut rng = case_rng(seed, &[5, q, n as u64, i as u64]);
        let f = random_cc(&mut rng, q, n, &cfg);
        let (lo, hi) = f.shell_range().unwrap();
        let alpha = random_kernel(&mut rng, q);
        let sigma = alpha.sigma(n);
        let mf = radon_m_as_function(&f);
        let xis: Vec<PVec> = (0..xi_count).map(|_| random_point(&mut rng, q, n, -hi - 1, -lo + 1)).collect();
        let xs: Vec<PVec> = (0..xi_count).map(|_| random_point(&mut rng, q, n, lo - 1, hi + 1)).collect();

        let lhs = sigma.convolve_cells(&f);
        let rhs = alpha.convolve_lazy(&mf);
        let mut t = ExactTally::new();
        for xi in &xis {
            t.compare(radon_m(&lhs, xi), Ok(rhs.eval(xi)), Shown(xi, params.digits));
        }
        out.push(t.finish(SUITE, "m_star", case(q, n, i)));

        let conv = alpha.convolve_lazy(&mf);
        let inner = mf.clone();
        let a_phi = LazyShellFunction::new(q, n, mf.certificate(), i32::MAX / 4, move |x| {
            apply_a_beta(&inner, x).expect("x is nonzero")
        });
        let rhs = sigma.convolve_lazy(&a_phi);
        let mut t = ExactTally::new();
        for x in &xs {
            t.compare(apply_a_beta(&conv, x), Ok(rhs.eval(x)), Shown(x, params.digits));
        }
        out.push(t.finish(SUITE, "a_star", case(q, n, i)));

        // Mf(ξ/t) vanishes unless v(t) ≥ v(ξ) + min v(supp f), so the kernel
        // ψ(−t) − 1, which is 0 on O, is only needed on shells [v(ξ) + lo, −1]
        let fc = to_cyclotomic(&f);
        let mfc = radon_m_as_function(&fc);
        let mut t = ExactTally::new();
        for xi in xis.iter().filter(|xi| xi.val_or_inf() + lo >= -3) {
            let kernel = psi_minus_one_kernel(&psi, (xi.val_or_inf() + lo).min(-1), 1);
            let rhs = kernel.map(|k| k.convolve_lazy(&mfc).eval(xi));
            t.compare(fourier_fprime(&psi, &fc, xi), rhs, Shown(xi, params.digits));
        }
        out.push(t.finish(SUITE, "fprime_equals_alpha_m", case(q, n, i)));

        let g = random_linear_map(&mut rng, n);
        let gf = g.push_function(&f);
        let det = g.abs_det(q);
        let mut t = ExactTally::new();
        for xi in &xis {
            t.compare(radon_m(&gf, xi), radon_m(&f, &g.apply_transpose(xi)).map(|v| v * &det), Shown(xi, params.digits));
        }
        out.push(t.finish(SUITE, "m_equivariance", case(q, n, i)));

        let mut t = ExactTally::new();
        for xi in &xis {
            t.compare(cavalieri_integral(&f, xi), Ok(f.integrate()), Shown(xi, params.digits));
        }
        out.push(t.finish(SUITE, "cavalieri", case(q, n, i)));
    }

    let mut t = ExactTally::new();
    for _ in 0..params.test_functions {
        let x = random_point(&mut rng, q, n, -2, 2);
        t.compare(kochubei_integral(&x, n), Ok(Rational::zero()), Shown(&x, params.digits));
    }
    out.push(t.finish(SUITE, "kochubei", format!("q={q} n={n}")));

    // ⟨β_U, 1_{π^{-m}O}⟩ = 0 and the U-average of β vanishes on balls off O
    let mut t = ExactTally::new();
    for m in 0..3 {
        t.compare(Ok(beta.pair_ball(&PAdic::zero(q), -m)), Ok(Rational::zero()), format_args!("m={m}"));
    }
    for r in 1..=3u32 {
        for _ in 0..4 {
            let b = PAdic::from_parts(q, rng.gen_range(-3..=-1), rng.gen_range(1..q as i128));
            let j = b.val_or_inf() + rng.gen_range(1..=3);
            let (cell, _) = BetaDistribution::u_average_ball(&b, j, r);
            let g = CellFunction::<Rational>::indicator(cell);
            let direct = RegularizedPower { n, shift: 1 }.pair(&g) - RegularizedPower { n, shift: 0 }.pair(&g);
            t.compare(Ok(direct), Ok(Rational::zero()), format_args!("r={r} b={b} j={j}"));
        }
    }
    out.push(t.finish(SUITE, "beta_u_support", format!("q={q} n={n}")));
    Ok(out)
}

/// All p-adic identities for one `(q, n)`.
pub fn run(q: u64, n: usize, params: &PadicParams, seed: u64) -> Result<Vec<Check>> {
    let mut out = round_trip(q, n, params, seed)?;
    out.extend(fourier_inversion(q, n, params, seed)?);
    out.extend(chernov(q, n, params, seed)?);
    out.extend(structural(q, n, params, seed)?);
    Ok(out)
}
