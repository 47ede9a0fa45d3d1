use std::f64::consts::PI;

use crate::error::{RadonError, Result};
use crate::real::beta::split_window;
use crate::real::{InvertedProfile, RadialProfile};
use crate::specfun::{gamma_real, regularized_beta_integral, Jet, TanhSinh, DEFAULT_ORDER};

/// `(θ + c) f = t f' + c f` for `θ = t d/dt`, one jet order shorter.
fn theta_shift(f: &Jet, c: f64) -> Jet {
    let x = Jet::variable(f.t0, f.order());
    &(&x * &f.differentiate()) + &f.scale(c)
}

/// The distribution inverse to `α_{p,q}`:
/// `β_{p,q} = K t^{−p−q−2n+1}`-weighted `∏_{j=1}^{n+m−1} (−d/dt·t + p+q−2j)`
/// applied to `(1 − t²)_+^{m−1}`, `K = 1/(2^{n+m−2} π^{n−1} Γ(m))`. At `m = 0`
/// the regularized `(1 − t²)_+^{m−1}/Γ(m)` is `δ(1 − t)/2`.
#[derive(Clone, Copy, Debug)]
pub struct BetaKernelComplex {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub quad: TanhSinh,
}

impl BetaKernelComplex {
    pub fn new(n: usize, p: usize, q: usize) -> BetaKernelComplex {
        assert!(n >= 2, "complex dimension must be at least 2");
        BetaKernelComplex { n, p, q, quad: TanhSinh::default() }
    }

    pub fn with_quadrature(mut self, quad: TanhSinh) -> BetaKernelComplex {
        self.quad = quad;
        self
    }

    pub fn m(&self) -> usize {
        self.p.min(self.q)
    }

    /// `K` for `m ≥ 1`, and `(2π)^{1−n}` for the delta at `m = 0`.
    pub fn constant(&self) -> f64 {
        let (n, m) = (self.n as f64, self.m());
        if m == 0 {
            (2.0 * PI).powf(1.0 - n)
        } else {
            1.0 / (2f64.powf(n + m as f64 - 2.0) * PI.powf(n - 1.0) * gamma_real(m as f64).unwrap())
        }
    }

    /// The shifts `p + q − 2j`, `j = 1..n+m−1`.
    pub fn shifts(&self) -> Vec<f64> {
        let pq = (self.p + self.q) as f64;
        (1..self.n + self.m()).map(|j| pq - 2.0 * j as f64).collect()
    }

    /// Operator factors applied to the test function; the first `m − 1`
    /// are moved onto the density by their adjoints `−θ + c − 1`.
    fn test_side_shifts(&self) -> Vec<f64> {
        let s = self.shifts();
        s[self.m().saturating_sub(1)..].to_vec()
    }

    /// `⟨β_{p,q}, h⟩` for `h` vanishing outside `[lo, hi]`; `h` maps the jet
    /// of the variable `t` to the jet of `h(t)`. For `m ≥ 1`:
    /// `K ∫_0^1 t^{−p−q−2n+1}(1 − t²)^{m−1} ∏_j (θ + p+q−2j) h dt` with `lo > 0`;
    /// for `m = 0`: `(2π)^{1−n} [∏_j (θ + p+q−2j) h](1)`.
    pub fn pair<H: Fn(&Jet) -> Jet>(&self, h: H, lo: f64, hi: f64) -> Result<f64> {
        if self.m() == 0 {
            if lo > 1.0 || hi < 1.0 {
                return Ok(0.0);
            }
            return Ok(self.constant() * self.apply_test_side(&h, 1.0)?);
        }
        if lo <= 0.0 {
            return Err(RadonError::InvalidArgument("test function must vanish near 0".into()));
        }
        let mut acc = 0.0;
        for (t, w) in self.quad.nodes(lo, hi.min(1.0), 0.0) {
            acc += w * self.density(t) * self.apply_test_side(&h, t)?;
        }
        Ok(acc * self.constant())
    }

    fn apply_test_side<H: Fn(&Jet) -> Jet>(&self, h: &H, t: f64) -> Result<f64> {
        let shifts = self.test_side_shifts();
        let mut f = h(&Jet::variable(t, shifts.len()));
        if f.order() < shifts.len() {
            return Err(RadonError::InsufficientJetOrder { required: shifts.len(), available: f.order() });
        }
        for c in shifts {
            f = theta_shift(&f, c);
        }
        Ok(f.value())
    }

    /// `∏_{j < m} (−θ + p+q−2j − 1)` applied to `t^{−p−q−2n+1}(1 − t²)^{m−1}`.
    fn density(&self, t: f64) -> f64 {
        let moved = &self.shifts()[..self.m() - 1];
        let x = Jet::variable(t, moved.len());
        let gap = (&x * &x).scale(-1.0).add_scalar(1.0);
        let mut w = x.powf(1.0 - (self.p + self.q + 2 * self.n) as f64);
        for _ in 1..self.m() {
            w = &w * &gap;
        }
        for c in moved {
            w = theta_shift(&w, 1.0 - c).scale(-1.0);
        }
        w.value()
    }

    /// `⟨β_{p,q}, t^s⟩ = K ∏_j (s + p+q−2j) ∫_0^1 t^{s−p−q−2n+1}(1 − t²)^{m−1} dt`,
    /// the integral continued below its abscissa of convergence; at `m = 0`
    /// `(2π)^{1−n} ∏_j (s + p+q−2j)`.
    pub fn pair_power(&self, s: f64) -> Result<f64> {
        let poly: f64 = self.shifts().iter().map(|c| s + c).product();
        if self.m() == 0 {
            return Ok(self.constant() * poly);
        }
        let a = s + 1.0 - (self.p + self.q + 2 * self.n) as f64;
        let integral = regularized_beta_integral(a, self.m() as f64 - 1.0, DEFAULT_ORDER)?;
        Ok(self.constant() * poly * integral)
    }

    /// `(β_{p,q} ∗ g)(r) = ⟨β_{p,q}(t), g(r/t)⟩` for `g` of bounded support.
    pub fn convolve<P: RadialProfile>(&self, g: &P, r: f64) -> Result<f64> {
        let (lo, hi) = g.support();
        if !hi.is_finite() {
            return Err(RadonError::InvalidArgument("β_{p,q} ∗ g needs g with bounded support".into()));
        }
        let h = |x: &Jet| g.jet(&x.recip().scale(r));
        if self.m() == 0 {
            return self.pair(h, 1.0, 1.0);
        }
        let t_hi = if lo > 0.0 { (r / lo).min(1.0) } else { 1.0 };
        split_window(r / hi, t_hi, g.breakpoints().iter().map(|b| r / b))
            .windows(2)
            .map(|w| self.pair(&h, w[0], w[1]))
            .sum()
    }
}

/// Radial part of `(Inv φ)(x) = ‖x‖^{−2n} φ(x̄/‖x‖²)`: `r ↦ r^{−2n} φ(1/r)`,
/// flagged as reading the harmonic factor at the conjugate direction.
pub fn inv_radial_complex<P: RadialProfile>(n: usize, phi: P) -> InvertedProfile<P> {
    InvertedProfile { inner: phi, exponent: 2 * n as u32, conjugate: true }
}

/// `M^{−1} φ = β_{p,q} ∗ Inv φ` on radial parts.
pub fn minv_apply_complex<P: RadialProfile>(n: usize, p: usize, q: usize, phi: &P, r: f64) -> Result<f64> {
    BetaKernelComplex::new(n, p, q).convolve(&inv_radial_complex(n, phi), r)
}
