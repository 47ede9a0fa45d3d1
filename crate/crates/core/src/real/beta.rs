use std::f64::consts::PI;

use crate::error::{RadonError, Result};
use crate::specfun::{gamma_real, regularized_beta_integral, Jet, TanhSinh, DEFAULT_ORDER};

use super::profile::{InvertedProfile, RadialProfile};

/// The distribution
/// `β_k = C_{n,k} t^{k−1} (−d/dt)^{n+k−1} (t^{1−k} (1 − t²)_+^λ) dt`,
/// `λ = (n + 2k − 3)/2`, inverse to `α_k` under convolution.
#[derive(Clone, Copy, Debug)]
pub struct BetaKernelReal {
    pub n: usize,
    pub k: usize,
    pub quad: TanhSinh,
}

impl BetaKernelReal {
    pub fn new(n: usize, k: usize) -> BetaKernelReal {
        assert!(n >= 2, "dimension must be at least 2");
        BetaKernelReal { n, k, quad: TanhSinh::default() }
    }

    pub fn with_quadrature(mut self, quad: TanhSinh) -> BetaKernelReal {
        self.quad = quad;
        self
    }

    /// `1 / (2^{n+k−2} π^{(n−1)/2} Γ((n+2k−1)/2))`.
    pub fn constant(&self) -> f64 {
        let (n, k) = (self.n as f64, self.k as f64);
        1.0 / (2f64.powf(n + k - 2.0) * PI.powf((n - 1.0) / 2.0) * gamma_real((n + 2.0 * k - 1.0) / 2.0).unwrap())
    }

    /// Number of derivatives, `n + k − 1`.
    pub fn derivative_order(&self) -> usize {
        self.n + self.k - 1
    }

    pub fn lambda(&self) -> f64 {
        (self.n as f64 + 2.0 * self.k as f64 - 3.0) / 2.0
    }

    /// Derivatives taken classically on the density: the largest `J` with
    /// `J < λ + 1`, for which `(d/dt)^J` of `t^{1−k}(1 − t²)_+^λ` is locally
    /// integrable and carries no mass at `t = 1`.
    pub fn density_derivatives(&self) -> usize {
        ((self.lambda() + 1.0).ceil() as usize - 1).min(self.derivative_order())
    }

    /// `⟨β_k, h⟩ = C ∫_0^1 t^{1−k} (1 − t²)^λ (d/dt)^{n+k−1}[t^{k−1} h(t)] dt`
    /// for `h` vanishing outside `[lo, hi]`, `lo > 0`. `h` maps the jet of the
    /// variable `t` to the jet of `h(t)`.
    ///
    /// Of the `n + k − 1` derivatives, `J` (see [`Self::density_derivatives`])
    /// are applied to the density by jet arithmetic and the rest to
    /// `t^{k−1} h`, which keeps the integrand well conditioned.
    pub fn pair<H: Fn(&Jet) -> Jet>(&self, h: H, lo: f64, hi: f64) -> Result<f64> {
        if lo <= 0.0 {
            return Err(RadonError::InvalidArgument("test function must vanish near 0".into()));
        }
        let total = self.derivative_order();
        let dens_order = self.density_derivatives();
        let order = total - dens_order;
        let lambda = self.lambda();
        let k = self.k as f64;
        let sign = if dens_order % 2 == 0 { 1.0 } else { -1.0 };
        let mut acc = 0.0;
        for (t, w) in self.quad.nodes(lo, hi.min(1.0), lambda - dens_order as f64) {
            let x = Jet::variable(t, order);
            let hv = h(&x);
            if hv.order() < order {
                return Err(RadonError::InsufficientJetOrder { required: order, available: hv.order() });
            }
            let d = (&x.powf(k - 1.0) * &hv).derivative(order).unwrap();
            acc += w * self.density_derivative(t, dens_order) * d;
        }
        Ok(sign * acc * self.constant())
    }

    /// `(d/dt)^J [t^{1−k}(1 − t²)^λ] / (1 − t)^{λ−J}` at `t ≤ 1`, expanded by
    /// Leibniz over `g(t)(1 − t)^λ` with `g = t^{1−k}(1 + t)^λ`:
    /// `Σ_i C(J,i) g^{(J−i)}(t) (−1)^i λ(λ−1)⋯(λ−i+1) (1 − t)^{J−i}`.
    fn density_derivative(&self, t: f64, order: usize) -> f64 {
        let lambda = self.lambda();
        let x = Jet::variable(t, order);
        let g = &x.powf(1.0 - self.k as f64) * &x.add_scalar(1.0).powf(lambda);
        let gap = (1.0 - t).max(0.0);
        let (mut binom, mut falling, mut acc) = (1.0, 1.0, 0.0);
        for i in 0..=order {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            acc += binom * g.derivative(order - i).unwrap() * sign * falling * gap.powi((order - i) as i32);
            binom = binom * (order - i) as f64 / (i + 1) as f64;
            falling *= lambda - i as f64;
        }
        acc
    }

    /// `⟨β_k, t^s⟩`, continued analytically where the integral diverges at 0:
    /// `C · (s+k−1)⋯(s−n+1) · ∫_0^1 t^{s−n−k+1}(1 − t²)^λ dt`.
    pub fn pair_power(&self, s: f64) -> Result<f64> {
        let order = self.derivative_order();
        let falling = Jet::variable(1.0, order).powf(s + self.k as f64 - 1.0).derivative(order).unwrap();
        let integral = regularized_beta_integral(s - order as f64, self.lambda(), DEFAULT_ORDER)?;
        Ok(self.constant() * falling * integral)
    }

    /// `(β_k ∗ g)(r) = ⟨β_k(t), g(r/t)⟩` for `g` of bounded support.
    pub fn convolve<P: RadialProfile>(&self, g: &P, r: f64) -> Result<f64> {
        let (lo, hi) = g.support();
        if !hi.is_finite() {
            return Err(RadonError::InvalidArgument("β_k ∗ g needs g with bounded support".into()));
        }
        let t_hi = if lo > 0.0 { (r / lo).min(1.0) } else { 1.0 };
        let h = |x: &Jet| g.jet(&x.recip().scale(r));
        split_window(r / hi, t_hi, g.breakpoints().iter().map(|b| r / b))
            .windows(2)
            .map(|w| self.pair(&h, w[0], w[1]))
            .sum()
    }
}

/// `[lo, hi]` cut at the given interior points, as sorted edges.
pub(crate) fn split_window<I: Iterator<Item = f64>>(lo: f64, hi: f64, cuts: I) -> Vec<f64> {
    let mut edges = vec![lo, hi];
    edges.extend(cuts.filter(|c| *c > lo && *c < hi));
    edges.sort_by(|a, b| a.partial_cmp(b).unwrap());
    edges
}

/// Radial part of `Inv φ`: `r ↦ r^{−n} φ(1/r)`.
pub fn inv_radial<P: RadialProfile>(n: usize, phi: P) -> InvertedProfile<P> {
    InvertedProfile { inner: phi, exponent: n as u32, conjugate: false }
}

/// `M^{−1} φ = β_k ∗ Inv φ` on the radial part of `φ ∈ C_−(R_{>0}) ⊗ H^k`.
pub fn minv_apply<P: RadialProfile>(n: usize, k: usize, phi: &P, r: f64) -> Result<f64> {
    BetaKernelReal::new(n, k).convolve(&inv_radial(n, phi), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::alpha::mellin_alpha_formula;
    use num_complex::Complex64;

    #[test]
    fn beta_constant_and_power_pairing() {
        let b = BetaKernelReal::new(2, 0);
        assert!((b.constant() - 1.0 / PI).abs() < 1e-15);
        assert!((b.pair_power(2.0).unwrap() - 1.0 / PI).abs() < 1e-13);
    }

    #[test]
    fn reciprocity_with_continuation() {
        for (n, k, s) in [(2, 3, 1.5), (3, 4, 2.5), (4, 2, 4.5), (3, 0, 2.5)] {
            let m = mellin_alpha_formula(n, k, Complex64::from(s)).unwrap().re;
            let b = BetaKernelReal::new(n, k).pair_power(s).unwrap();
            assert!((b * m - 1.0).abs() < 1e-10, "{n} {k} {s}: {}", b * m);
        }
        // Mα vanishes at (4, 2, 4), where ⟨β, t^s⟩ has a pole
        assert!(BetaKernelReal::new(4, 2).pair_power(4.0).is_err());
    }

    #[test]
    fn derivative_split_does_not_change_pairing() {
        // h(t) = t^4 e^{-1/(t - 0.3)} near (0.3, ∞): compare against the pairing with all
        // derivatives on h
        let h = |x: &Jet| &x.add_scalar(-0.3).recip().scale(-1.0).exp() * &x.powf(4.0);
        for (n, k) in [(2, 3), (3, 2), (4, 1)] {
            let b = BetaKernelReal::new(n, k);
            let split = b.pair(&h, 0.3, 1.0).unwrap();
            let lambda = b.lambda();
            let kf = k as f64;
            let order = b.derivative_order();
            let all_on_h = b.constant()
                * b.quad.integrate(
                    |t| {
                        let x = Jet::variable(t, order);
                        t.powf(1.0 - kf) * (1.0 + t).powf(lambda) * (&x.powf(kf - 1.0) * &h(&x)).derivative(order).unwrap()
                    },
                    0.3,
                    1.0,
                    lambda,
                );
            assert!((split - all_on_h).abs() < 1e-9 * all_on_h.abs().max(1.0), "{n} {k}: {split} {all_on_h}");
        }
    }

    #[test]
    fn pairing_vanishes_for_zero_test_function() {
        let b = BetaKernelReal::new(3, 1);
        let v = b.pair(|x| Jet::constant(x.t0, 0.0, x.order()), 0.2, 1.0).unwrap();
        assert_eq!(v, 0.0);
        let short = b.pair(|x| Jet::constant(x.t0, 1.0, 0), 0.2, 1.0);
        assert_eq!(b.density_derivatives(), 1);
        assert_eq!(short, Err(RadonError::InsufficientJetOrder { required: 2, available: 0 }));
    }
}
