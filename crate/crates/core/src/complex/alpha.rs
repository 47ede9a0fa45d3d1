use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{RadonError, Result};
use crate::real::RadialProfile;
use crate::specfun::{mellin_moment, sphere_area, Jet, TanhSinh, DEFAULT_ORDER};

use super::zonal::ZonalKernelComplex;

/// The measure `α_{p,q} = mes(S^{2n−3}) t^{1−2n} a_{p,q}(t) (1 − t²)^{n−2} dt`
/// on `(0, 1)`; `Inv ∘ M = α_{p,q} ∗` on `u ⊗ Y`, `Y ∈ H^{p,q}`.
#[derive(Clone, Copy, Debug)]
pub struct AlphaKernelComplex {
    pub zonal: ZonalKernelComplex,
    pub quad: TanhSinh,
}

impl AlphaKernelComplex {
    pub fn new(n: usize, p: usize, q: usize) -> AlphaKernelComplex {
        AlphaKernelComplex { zonal: ZonalKernelComplex::new(n, p, q), quad: TanhSinh::default() }
    }

    pub fn with_quadrature(mut self, quad: TanhSinh) -> AlphaKernelComplex {
        self.quad = quad;
        self
    }

    fn n(&self) -> usize {
        self.zonal.n
    }

    fn regular_density(&self, t: f64) -> f64 {
        let n = self.n();
        sphere_area(2 * n - 3) * t.powi(1 - 2 * n as i32) * self.zonal.eval(t) * (1.0 + t).powi(n as i32 - 2)
    }

    pub fn convolve<P: RadialProfile>(&self, u: &P, r: f64) -> f64 {
        self.convolve_jet(u, &Jet::constant(r, r, 0)).value()
    }

    /// The jet of `t ↦ (α_{p,q} ∗ u)(ρ(t))`, `(α ∗ u)(r) = ∫ u(r/τ) dα(τ)`.
    ///
    /// # Panics
    /// If `u` does not have bounded support.
    pub fn convolve_jet<P: RadialProfile>(&self, u: &P, rho: &Jet) -> Jet {
        let (lo, hi) = u.support();
        assert!(hi.is_finite(), "α_{{p,q}} ∗ u needs u with bounded support");
        let r = rho.value();
        let t_hi = if lo > 0.0 { (r / lo).min(1.0) } else { 1.0 };
        let mut acc = Jet::constant(rho.t0, 0.0, rho.order());
        for (t, w) in self.quad.nodes(r / hi, t_hi, self.n() as f64 - 2.0) {
            let v = u.jet(&rho.scale(1.0 / t));
            acc = &acc + &v.scale(w * self.regular_density(t));
        }
        acc
    }

    /// `∫ t^s dα_{p,q}(t) = mes(S^{2n−3}) ∫_0^1 t^{s+1−2n} a_{p,q}(t) (1 + t)^{n−2} (1 − t)^{n−2} dt`;
    /// needs `Re s > 2n − 2`.
    pub fn mellin_quadrature(&self, s: Complex64, order: usize) -> Result<Complex64> {
        let n = self.n();
        let shift = 1.0 - 2.0 * n as f64;
        if s.re + shift <= -1.0 {
            return Err(RadonError::InvalidArgument(format!("Mellin integral of α_{{p,q}} diverges at s = {s}")));
        }
        let lambda = n as f64 - 2.0;
        let g = |t: f64| self.zonal.eval(t) * (1.0 + t).powf(lambda);
        Ok(mellin_moment(g, s + shift, lambda, order) * sphere_area(2 * n - 3))
    }

    pub fn mellin(&self, s: Complex64) -> Result<Complex64> {
        self.mellin_quadrature(s, DEFAULT_ORDER)
    }
}

/// `π^{n−1} Γ((s+d)/2−n+1) Γ((s−d)/2−n+1) / (Γ((s+p+q)/2) Γ((s−p−q)/2−n+1))`,
/// `d = |p − q|`. Both quotients have integer shifts, `m` and `n + m − 1`,
/// and are evaluated as Pochhammer symbols; this continues the expression
/// through the paired Γ poles at integer `s`. Zeros of the denominator
/// symbol are poles.
pub fn mellin_alpha_pq_formula(n: usize, p: usize, q: usize, s: Complex64) -> Result<Complex64> {
    let (m, d) = (p.min(q), p.abs_diff(q));
    let x = (s - (p + q) as f64) / 2.0 - n as f64 + 1.0;
    let y = (s + d as f64) / 2.0 - n as f64 + 1.0;
    let num: Complex64 = (0..m).map(|i| x + i as f64).product();
    let den: Complex64 = (0..n + m - 1).map(|i| y + i as f64).product();
    if den == Complex64::from(0.0) {
        return Err(RadonError::Pole(format!("Mellin transform of α_{{{p},{q}}} at s = {s}")));
    }
    Ok(num / den * PI.powi(n as i32 - 1))
}

/// `α_{p,q} ∗ u` as a radial profile, supported in `(0, sup supp u]`.
pub struct AlphaImageComplex<'a, P> {
    pub kernel: AlphaKernelComplex,
    pub u: &'a P,
}

impl<P: RadialProfile> RadialProfile for AlphaImageComplex<'_, P> {
    fn jet(&self, rho: &Jet) -> Jet {
        self.kernel.convolve_jet(self.u, rho)
    }
    fn support(&self) -> (f64, f64) {
        (0.0, self.u.support().1)
    }
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
    use crate::specfun::gamma_ratio;

    #[test]
    fn spot_values() {
        for (n, p, q, s, expect) in [(2, 0, 0, 4.0, PI), (2, 1, 0, 5.0, PI / 2.0)] {
            let s = Complex64::from(s);
            let quad = AlphaKernelComplex::new(n, p, q).mellin(s).unwrap();
            let formula = mellin_alpha_pq_formula(n, p, q, s).unwrap();
            assert!((quad.re - expect).abs() < 1e-12 && quad.im.abs() < 1e-14);
            assert!((formula.re - expect).abs() < 1e-13);
        }
    }

    #[test]
    fn pochhammer_form_matches_gamma_form() {
        let s = Complex64::new(7.3, 0.4);
        for (n, p, q) in [(2usize, 1usize, 1usize), (3, 2, 0), (3, 3, 1), (2, 0, 3)] {
            let (pq, d, nf) = ((p + q) as f64, p.abs_diff(q) as f64, n as f64);
            let g = gamma_ratio(
                &[(s + d) / 2.0 - nf + 1.0, (s - d) / 2.0 - nf + 1.0],
                &[(s + pq) / 2.0, (s - pq) / 2.0 - nf + 1.0],
            )
            .unwrap()
                * PI.powf(nf - 1.0);
            let f = mellin_alpha_pq_formula(n, p, q, s).unwrap();
            assert!((g - f).norm() < 1e-12 * f.norm(), "{n} {p} {q}: {g} {f}");
        }
    }

    #[test]
    fn quadrature_matches_formula_off_axis() {
        let s = Complex64::new(6.5, 1.2);
        for (n, p, q) in [(2, 1, 1), (3, 2, 1), (3, 0, 3)] {
            let a = AlphaKernelComplex::new(n, p, q).mellin(s).unwrap();
            let f = mellin_alpha_pq_formula(n, p, q, s).unwrap();
            assert!((a - f).norm() < 1e-10 * f.norm(), "{n} {p} {q}: {a} {f}");
        }
    }
}
