use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{RadonError, Result};
use crate::specfun::{gamma_ratio, mellin_moment, sphere_area, Jet, TanhSinh, DEFAULT_ORDER};

use super::profile::RadialProfile;
use super::zonal::a_k;

/// The measure `α_k = mes(S^{n−2}) t^{−n} a_k(t) (1 − t²)^{(n−3)/2} dt` on `(0, 1)`.
/// Convolution `(α_k ∗ u)(r) = ∫ u(r/t) dα_k(t)` is `Inv ∘ M` on `u ⊗ Y`.
#[derive(Clone, Copy, Debug)]
pub struct AlphaKernelReal {
    pub n: usize,
    pub k: usize,
    pub quad: TanhSinh,
}

impl AlphaKernelReal {
    pub fn new(n: usize, k: usize) -> AlphaKernelReal {
        assert!(n >= 2, "dimension must be at least 2");
        AlphaKernelReal { n, k, quad: TanhSinh::default() }
    }

    pub fn with_quadrature(mut self, quad: TanhSinh) -> AlphaKernelReal {
        self.quad = quad;
        self
    }

    /// Exponent of the `(1 − t)` factor.
    pub fn endpoint_exponent(&self) -> f64 {
        (self.n as f64 - 3.0) / 2.0
    }

    /// The density divided by `(1 − t)^{(n−3)/2}`.
    fn regular_density(&self, t: f64) -> f64 {
        let lambda = self.endpoint_exponent();
        sphere_area(self.n - 2) * t.powi(-(self.n as i32)) * a_k(self.n, self.k, t) * (1.0 + t).powf(lambda)
    }

    /// `(α_k ∗ u)(r)`.
    pub fn convolve<P: RadialProfile>(&self, u: &P, r: f64) -> f64 {
        self.convolve_jet(u, &Jet::constant(r, r, 0)).value()
    }

    /// The jet of `t ↦ (α_k ∗ u)(ρ(t))`. Only `τ` with `u(ρ/τ) ≠ 0` are
    /// visited, so the `τ^{−n}` singularity never enters.
    ///
    /// # Panics
    /// If `u` does not have bounded support.
    pub fn convolve_jet<P: RadialProfile>(&self, u: &P, rho: &Jet) -> Jet {
        let (lo, hi) = u.support();
        assert!(hi.is_finite(), "α_k ∗ u needs u with bounded support");
        let r = rho.value();
        let t_lo = r / hi;
        let t_hi = if lo > 0.0 { (r / lo).min(1.0) } else { 1.0 };
        let mut acc = Jet::constant(rho.t0, 0.0, rho.order());
        for (t, w) in self.quad.nodes(t_lo, t_hi, self.endpoint_exponent()) {
            let v = u.jet(&rho.scale(1.0 / t));
            acc = &acc + &v.scale(w * self.regular_density(t));
        }
        acc
    }

    /// `∫ t^s dα_k(t) = mes(S^{n−2}) ∫_0^1 t^{s−n} a_k(t) (1 + t)^λ (1 − t)^λ dt`,
    /// `λ = (n−3)/2`; needs `Re s > n − 1`.
    pub fn mellin_quadrature(&self, s: Complex64, order: usize) -> Result<Complex64> {
        if s.re - self.n as f64 <= -1.0 {
            return Err(RadonError::InvalidArgument(format!("Mellin integral of α_k diverges at s = {s}")));
        }
        let lambda = self.endpoint_exponent();
        let g = |t: f64| a_k(self.n, self.k, t) * (1.0 + t).powf(lambda);
        Ok(mellin_moment(g, s - self.n as f64, lambda, order) * sphere_area(self.n - 2))
    }

    pub fn mellin(&self, s: Complex64) -> Result<Complex64> {
        self.mellin_quadrature(s, DEFAULT_ORDER)
    }
}

/// `2^{n+k−1} π^{(n−1)/2} Γ(s−n+1)/Γ(s+k) · Γ((s+k+1)/2)/Γ((s−n−k)/2+1)`.
pub fn mellin_alpha_formula(n: usize, k: usize, s: Complex64) -> Result<Complex64> {
    let (nf, kf) = (n as f64, k as f64);
    let ratio = gamma_ratio(&[s - nf + 1.0, (s + kf + 1.0) / 2.0], &[s + kf, (s - nf - kf) / 2.0 + 1.0])?;
    Ok(ratio * (2f64.powf(nf + kf - 1.0) * PI.powf((nf - 1.0) / 2.0)))
}

/// `α_k ∗ u` as a radial profile, supported in `(0, sup supp u]`.
pub struct AlphaImage<'a, P> {
    pub kernel: AlphaKernelReal,
    pub u: &'a P,
}

impl<P: RadialProfile> RadialProfile for AlphaImage<'_, P> {
    fn jet(&self, rho: &Jet) -> Jet {
        self.kernel.convolve_jet(self.u, rho)
    }
    fn support(&self) -> (f64, f64) {
        (0.0, self.u.support().1)
    }

    /// Below `inf supp u` the window of `τ` stops short of 1.
    fn breakpoints(&self) -> Vec<f64> {
        let lo = self.u.support().0;
        if lo > 0.0 {
            vec![lo]
        } else {
            Vec::new()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::profile::BumpProfile;

    #[test]
    fn mellin_spot_values() {
        let cases = [(2, 0, 2.0, PI), (2, 1, 3.0, PI / 2.0), (3, 0, 3.0, 2.0 * PI)];
        for (n, k, s, expect) in cases {
            let q = AlphaKernelReal::new(n, k).mellin(Complex64::from(s)).unwrap();
            let f = mellin_alpha_formula(n, k, Complex64::from(s)).unwrap();
            assert!((q.re - expect).abs() < 1e-12 && q.im.abs() < 1e-14, "{n} {k}: {q}");
            assert!((f.re - expect).abs() < 1e-12, "{n} {k}: {f}");
        }
    }

    #[test]
    fn mellin_rejects_divergent_s() {
        assert!(AlphaKernelReal::new(3, 1).mellin(Complex64::from(1.9)).is_err());
    }

    #[test]
    fn convolution_vanishes_beyond_support_and_is_linear() {
        let u = BumpProfile::new(0.5, 2.0, vec![1.0]);
        let v = BumpProfile::new(0.5, 2.0, vec![2.0]);
        let a = AlphaKernelReal::new(3, 2);
        assert_eq!(a.convolve(&u, 2.0), 0.0);
        assert_eq!(a.convolve(&u, 3.1), 0.0);
        let (x, y) = (a.convolve(&u, 1.1), a.convolve(&v, 1.1));
        assert!(x != 0.0 && (2.0 * x - y).abs() < 1e-14 * y.abs());
    }
}
