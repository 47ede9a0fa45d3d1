//! Gauss–Jacobi quadrature.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::gamma::ln_gamma_real;
use super::poly::{jacobi_derivative, jacobi_pair};

pub const DEFAULT_ORDER: usize = 200;

/// Nodes and weights for `∫_{-1}^{1} f(t) (1−t)^a (1+t)^b dt ≈ Σ w_i f(t_i)`.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub a: f64,
    pub b: f64,
    pub order: usize,
}

impl QuadratureRule {
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(t, w)| w * f(*t)).sum()
    }

    /// `∫_{-1}^{1} (1−t)^a (1+t)^b dt`.
    pub fn total_mass(&self) -> f64 {
        jacobi_mass(self.a, self.b)
    }
}

fn jacobi_mass(a: f64, b: f64) -> f64 {
    let ln = (a + b + 1.0) * std::f64::consts::LN_2 + ln_gamma_real(a + 1.0).unwrap() + ln_gamma_real(b + 1.0).unwrap()
        - ln_gamma_real(a + b + 2.0).unwrap();
    ln.exp()
}

/// Golub–Welsch eigenvalues for the nodes, polished by Newton steps on
/// `P_N^{(a,b)}`; weights from the closed formula
/// `w_i = 2^{a+b+1} Γ(N+a+1) Γ(N+b+1) / (Γ(N+a+b+1) N! (1−t_i²) P_N'(t_i)²)`.
/// Rules are cached per `(order, a, b)`.
///
/// # Panics
/// If `a ≤ −1`, `b ≤ −1` or `order = 0`.
pub fn gauss_jacobi(order: usize, a: f64, b: f64) -> Arc<QuadratureRule> {
    assert!(order > 0 && a > -1.0 && b > -1.0, "Gauss–Jacobi needs order ≥ 1 and a, b > −1");
    static CACHE: OnceLock<Mutex<HashMap<(usize, u64, u64), Arc<QuadratureRule>>>> = OnceLock::new();
    let key = (order, a.to_bits(), b.to_bits());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(rule) = cache.lock().unwrap().get(&key) {
        return rule.clone();
    }
    let rule = Arc::new(build_rule(order, a, b));
    cache.lock().unwrap().insert(key, rule.clone());
    rule
}

pub fn gauss_legendre(order: usize) -> Arc<QuadratureRule> {
    gauss_jacobi(order, 0.0, 0.0)
}

fn build_rule(n: usize, a: f64, b: f64) -> QuadratureRule {
    let mut jm = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        let kf = k as f64;
        let c = 2.0 * kf + a + b;
        jm[(k, k)] = if k == 0 { (b - a) / (a + b + 2.0) } else { (b * b - a * a) / (c * (c + 2.0)) };
        if k + 1 < n {
            let j = kf + 1.0;
            let c = 2.0 * j + a + b;
            let beta = if k == 0 {
                4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b).powi(2) * (3.0 + a + b))
            } else {
                4.0 * j * (j + a) * (j + b) * (j + a + b) / (c * c * (c + 1.0) * (c - 1.0))
            };
            jm[(k, k + 1)] = beta.sqrt();
            jm[(k + 1, k)] = beta.sqrt();
        }
    }
    let mut nodes: Vec<f64> = SymmetricEigen::new(jm).eigenvalues.iter().copied().collect();
    nodes.sort_by(|x, y| x.partial_cmp(y).unwrap());
    for t in nodes.iter_mut() {
        for _ in 0..3 {
            let (p, _) = jacobi_pair(n, a, b, *t);
            let dp = jacobi_derivative(n, a, b, *t);
            if dp == 0.0 {
                break;
            }
            let step = p / dp;
            *t -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
    }
    let nf = n as f64;
    let ln_c = (a + b + 1.0) * std::f64::consts::LN_2 + ln_gamma_real(nf + a + 1.0).unwrap()
        + ln_gamma_real(nf + b + 1.0).unwrap()
        - ln_gamma_real(nf + a + b + 1.0).unwrap()
        - ln_gamma_real(nf + 1.0).unwrap();
    let weights = nodes
        .iter()
        .map(|t| {
            let dp = jacobi_derivative(n, a, b, *t);
            (ln_c - (1.0 - t * t).ln() - 2.0 * dp.abs().ln()).exp()
        })
        .collect();
    QuadratureRule { nodes, weights, a, b, order: n }
}

/// `∫_lo^hi f(t) dt` by Gauss–Legendre on `panels` equal panels.
pub fn composite_legendre<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, order: usize, panels: usize) -> f64 {
    let rule = gauss_legendre(order);
    let h = (hi - lo) / panels as f64;
    (0..panels)
        .map(|p| {
            let a = lo + p as f64 * h;
            0.5 * h * rule.integrate(|t| f(a + 0.5 * h * (t + 1.0)))
        })
        .sum()
}

/// `∫_lo^hi f(t) (hi − t)^λ dt`, the endpoint singularity carried by the weight.
pub fn integrate_right_endpoint<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, lambda: f64, order: usize) -> f64 {
    let rule = gauss_jacobi(order, lambda, 0.0);
    let half = 0.5 * (hi - lo);
    half.powf(lambda + 1.0) * rule.integrate(|t| f(lo + half * (t + 1.0)))
}

/// `∫_0^1 t^s g(t) (1 − t)^λ dt` for `g` smooth on `[0, 1]`, `Re s > −1`.
///
/// For real `s` one Gauss–Jacobi rule carries both endpoint factors. For
/// complex `s` the phase `t^{i Im s}` has a branch point at 0 that no
/// polynomial rule resolves, so `[0, 1]` is cut into dyadic panels
/// `[2^{−j−1}, 2^{−j}]` on which the integrand is analytic; the innermost
/// panel `[0, ε]` keeps the phase but only carries a share `≈ ε^{Re s + 1}`
/// of the integral, and `ε` is chosen to make that share below `1e−8`.
pub fn mellin_moment<G: Fn(f64) -> f64>(g: G, s: Complex64, lambda: f64, order: usize) -> Complex64 {
    let b = s.re;
    if s.im == 0.0 {
        let rule = gauss_jacobi(order, lambda, b);
        let sum: f64 = rule.nodes.iter().zip(&rule.weights).map(|(x, w)| w * g(0.5 * (1.0 + x))).sum();
        return Complex64::from(sum * 0.5f64.powf(lambda + b + 1.0));
    }
    let f = |t: f64| Complex64::new(0.0, s.im * t.ln()).exp() * (t.powf(b) * g(t));
    let mut acc = Complex64::from(0.0);

    let top = gauss_jacobi(order, lambda, 0.0);
    for (x, w) in top.nodes.iter().zip(&top.weights) {
        acc += f(0.75 + 0.25 * x) * *w;
    }
    acc *= 0.25f64.powf(lambda + 1.0);

    let panels = ((8.0 * std::f64::consts::LOG2_10 / (b + 1.0)).ceil() as i32).clamp(2, 400);
    let mid = gauss_legendre(30);
    for j in 1..panels {
        let (lo, hi) = (0.5f64.powi(j + 1), 0.5f64.powi(j));
        let half = 0.5 * (hi - lo);
        for (x, w) in mid.nodes.iter().zip(&mid.weights) {
            let t = lo + half * (x + 1.0);
            acc += f(t) * (1.0 - t).powf(lambda) * (w * half);
        }
    }

    let eps = 0.5f64.powi(panels);
    let inner = gauss_jacobi(order, 0.0, b);
    let mut tail = Complex64::from(0.0);
    for (x, w) in inner.nodes.iter().zip(&inner.weights) {
        let t = 0.5 * eps * (1.0 + x);
        tail += Complex64::new(0.0, s.im * t.ln()).exp() * (w * g(t) * (1.0 - t).powf(lambda));
    }
    acc + tail * (0.5 * eps).powf(b + 1.0)
}

/// Composite rule on `[lo, hi] ⊂ (0, 1]` for integrands carrying a factor
/// `(1 − t)^λ`; when `hi = 1` the last panel takes the factor into a
/// Gauss–Jacobi weight.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PanelQuadrature {
    pub order: usize,
    pub panels: usize,
}

impl Default for PanelQuadrature {
    fn default() -> Self {
        PanelQuadrature { order: 40, panels: 12 }
    }
}

impl PanelQuadrature {
    /// Nodes and weights for `∫_lo^hi f(t) (1−t)^λ dt ≈ Σ w_i f(t_i)`.
    pub fn nodes(&self, lo: f64, hi: f64, lambda: f64) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(self.order * self.panels);
        if hi <= lo {
            return out;
        }
        let legendre = gauss_legendre(self.order);
        let edges = self.edges(lo, hi);
        let singular = hi >= 1.0 && lambda != 0.0;
        let plain = if singular { self.panels - 1 } else { self.panels };
        for p in 0..plain {
            let (a, h) = (edges[p], edges[p + 1] - edges[p]);
            for (x, w) in legendre.nodes.iter().zip(&legendre.weights) {
                let t = a + 0.5 * h * (x + 1.0);
                out.push((t, 0.5 * h * w * (1.0 - t).powf(lambda)));
            }
        }
        if singular {
            let a = edges[self.panels - 1];
            let jac = gauss_jacobi(self.order, lambda, 0.0);
            let half = 0.5 * (1.0 - a);
            let scale = half.powf(lambda + 1.0);
            for (x, w) in jac.nodes.iter().zip(&jac.weights) {
                out.push((a + half * (x + 1.0), scale * w));
            }
        }
        out
    }

    /// Panel boundaries, geometric when `lo > 0` (the integrands are
    /// multiplicative convolutions) and uniform otherwise.
    fn edges(&self, lo: f64, hi: f64) -> Vec<f64> {
        let p = self.panels as f64;
        (0..=self.panels)
            .map(|i| {
                let f = i as f64 / p;
                if i == self.panels {
                    hi
                } else if lo > 0.0 {
                    lo * (hi / lo).powf(f)
                } else {
                    lo + (hi - lo) * f
                }
            })
            .collect()
    }

    /// `∫_lo^hi f(t) (1−t)^λ dt` for `hi ≤ 1`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, lo: f64, hi: f64, lambda: f64) -> f64 {
        self.nodes(lo, hi, lambda).into_iter().map(|(t, w)| w * f(t)).sum()
    }
}

/// Tanh–sinh rule `t = m + h·tanh(π/2 · sinh z)` on `2·half_nodes + 1`
/// equispaced `z ∈ [−span, span]`. Endpoint singularities and
/// flat-to-all-orders edges are both integrated at an exponential rate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TanhSinh {
    pub half_nodes: usize,
    pub span: f64,
}

impl Default for TanhSinh {
    fn default() -> Self {
        TanhSinh { half_nodes: 192, span: 5.0 }
    }
}

impl TanhSinh {
    /// Nodes and weights for `∫_lo^hi f(t) (1−t)^λ dt ≈ Σ w_i f(t_i)`,
    /// `hi ≤ 1`; the distance `1 − t` is formed without cancellation.
    pub fn nodes(&self, lo: f64, hi: f64, lambda: f64) -> Vec<(f64, f64)> {
        if hi <= lo {
            return Vec::new();
        }
        let step = self.span / self.half_nodes as f64;
        let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
        let k = self.half_nodes as i64;
        (-k..=k)
            .map(|i| {
                let z = i as f64 * step;
                let u = std::f64::consts::FRAC_PI_2 * z.sinh();
                let sech = 1.0 / u.cosh();
                let w = step * half * std::f64::consts::FRAC_PI_2 * z.cosh() * sech * sech;
                // hi − t = 2·half / (1 + e^{2u})
                let to_hi = 2.0 * half / (1.0 + (2.0 * u).exp());
                let t = if u > 0.0 { hi - to_hi } else { mid + half * u.tanh() };
                let to_one = (1.0 - hi) + to_hi;
                (t, w * to_one.powf(lambda))
            })
            .filter(|(_, w)| *w != 0.0 && w.is_finite())
            .collect()
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, lo: f64, hi: f64, lambda: f64) -> f64 {
        self.nodes(lo, hi, lambda).into_iter().map(|(t, w)| w * f(t)).sum()
    }
}

/// `∫_0^1 t^a (1 − t²)^λ dt` for `λ > −1`, continued analytically in `a`
/// below `−1` by subtracting the Taylor terms of `(1 − t²)^λ` at 0 (the
/// finite part). Equals `B((a+1)/2, λ+1)/2` away from poles.
pub fn regularized_beta_integral(a: f64, lambda: f64, order: usize) -> crate::error::Result<f64> {
    let mut acc = 0.0;
    let mut c = 1.0;
    for j in 0..120 {
        if c == 0.0 {
            break;
        }
        let e = a + 2.0 * j as f64 + 1.0;
        if e == 0.0 {
            return Err(crate::error::RadonError::Pole(format!("t^{a} (1-t^2)^{lambda}")));
        }
        acc += c * 0.5f64.powf(e) / e;
        c *= -(lambda - j as f64) / (j as f64 + 1.0);
    }
    let tail = integrate_right_endpoint(|t| t.powf(a) * (1.0 + t).powf(lambda), 0.5, 1.0, lambda, order);
    Ok(acc + tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn chebyshev_weight_quarter_circle() {
        // ∫_0^1 (1−t²)^{-1/2} dt = π/2 with the singular factor (1−t)^{-1/2} in the weight
        let v = integrate_right_endpoint(|t| (1.0 + t).powf(-0.5), 0.0, 1.0, -0.5, 40);
        assert!((v - PI / 2.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn beta_moment() {
        // ∫_{-1}^1 (1−t)^{1/2} t² dt via u = 1 − t: ∫_0^2 u^{1/2}(1−u)² du
        let exact = 2f64.powf(1.5) / 1.5 - 2.0 * 2f64.powf(2.5) / 2.5 + 2f64.powf(3.5) / 3.5;
        let rule = gauss_jacobi(8, 0.5, 0.0);
        assert!((rule.integrate(|t| t * t) - exact).abs() < 1e-12);
    }

    #[test]
    fn weights_positive_and_sum_to_mass() {
        for (n, a, b) in [(5, 0.0, 0.0), (200, 0.5, 0.0), (60, -0.5, -0.5), (200, 2.0, 1.0)] {
            let rule = gauss_jacobi(n, a, b);
            assert!(rule.weights.iter().all(|w| *w > 0.0));
            let s: f64 = rule.weights.iter().sum();
            assert!((s - rule.total_mass()).abs() < 1e-12 * rule.total_mass(), "{n} {a} {b}");
        }
    }

    #[test]
    fn exact_to_degree_2n_minus_1() {
        let rule = gauss_jacobi(6, 1.0, 2.0);
        // ∫ t^k (1−t)(1+t)² dt against a fine Legendre reference
        for k in 0..12 {
            let exact = composite_legendre(|t| t.powi(k) * (1.0 - t) * (1.0 + t).powi(2), -1.0, 1.0, 20, 1);
            assert!((rule.integrate(|t| t.powi(k)) - exact).abs() < 1e-13, "k={k}");
        }
    }

    fn half_beta(a: f64, lambda: f64) -> f64 {
        use crate::specfun::gamma_real;
        0.5 * gamma_real((a + 1.0) / 2.0).unwrap() * gamma_real(lambda + 1.0).unwrap()
            / gamma_real((a + 1.0) / 2.0 + lambda + 1.0).unwrap()
    }

    #[test]
    fn finite_part_matches_beta_continuation() {
        for (a, lambda) in [(0.5, -0.5), (-0.5, 1.5), (-2.5, -0.5), (-4.3, 0.5), (-3.5, 2.0), (1.0, 0.0)] {
            let v = regularized_beta_integral(a, lambda, 60).unwrap();
            let e = half_beta(a, lambda);
            assert!((v - e).abs() < 1e-12 * e.abs().max(1.0), "{a} {lambda}: {v} vs {e}");
        }
        assert!(regularized_beta_integral(-3.0, 0.5, 60).is_err());
        // c_j vanishes past j = λ, so no pole
        assert!(regularized_beta_integral(-5.0, 1.0, 60).is_ok());
    }

    #[test]
    fn panel_rule_with_endpoint_factor() {
        let pq = PanelQuadrature::default();
        // ∫_0^1 t (1−t)^{-1/2} dt = 4/3
        assert!((pq.integrate(|t| t, 0.0, 1.0, -0.5) - 4.0 / 3.0).abs() < 1e-13);
        assert!((pq.integrate(|t| t, 0.0, 0.5, 0.0) - 0.125).abs() < 1e-15);
    }

    #[test]
    fn doubling_order_is_stable() {
        let f = |t: f64| (3.0 * t).cos() * (1.0 + t * t).recip();
        let r1 = gauss_jacobi(100, 0.5, 0.0).integrate(f);
        let r2 = gauss_jacobi(200, 0.5, 0.0).integrate(f);
        assert!((r1 - r2).abs() < 1e-12);
    }
}
