use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::specfun::jacobi;

/// The scalar `a_{p,q}(t)` by which slice averaging over
/// `{ω ∈ S^{2n−1} : ⟨ω, x⟩ = t}` acts on `H^{p,q}`:
/// `t^{|p−q|} P_m^{(n−2, |p−q|)}(2t² − 1) / P_m^{(n−2, |p−q|)}(1)`, `m = min(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZonalKernelComplex {
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

impl ZonalKernelComplex {
    pub fn new(n: usize, p: usize, q: usize) -> ZonalKernelComplex {
        assert!(n >= 2, "complex dimension must be at least 2");
        ZonalKernelComplex { n, p, q }
    }

    pub fn m(&self) -> usize {
        self.p.min(self.q)
    }

    pub fn d(&self) -> usize {
        self.p.abs_diff(self.q)
    }

    pub fn eval(&self, t: f64) -> f64 {
        let (a, b) = (self.n as f64 - 2.0, self.d() as f64);
        t.powi(self.d() as i32) * jacobi(self.m(), a, b, 2.0 * t * t - 1.0) / jacobi(self.m(), a, b, 1.0)
    }
}

pub fn a_pq(n: usize, p: usize, q: usize, t: f64) -> f64 {
    ZonalKernelComplex::new(n, p, q).eval(t)
}

/// The harmonic `Y(z) = z₁^p z̄₂^q ∈ H^{p,q}` on `C²`.
pub fn harmonic_pq(p: usize, q: usize, z: [Complex64; 2]) -> Complex64 {
    z[0].powu(p as u32) * z[1].conj().powu(q as u32)
}

/// `a_{p,q}(t)` for `n = 2` by averaging `Y = z₁^p z̄₂^q` over the slice
/// `{ω ∈ S³ : ⟨ω, x⟩ = t}`, `x = (1, 1)/√2`. The slice is the circle
/// `t x + √(1 − t²) e^{iφ} u`, `u = (1, −1)/√2`, averaged by the trapezoid
/// rule with `points` nodes (exact for `points > p + q`).
pub fn a_pq_direct(p: usize, q: usize, t: f64, points: usize) -> f64 {
    let x = [Complex64::from(FRAC_1_SQRT_2), Complex64::from(FRAC_1_SQRT_2)];
    let u = [Complex64::from(FRAC_1_SQRT_2), Complex64::from(-FRAC_1_SQRT_2)];
    let c = (1.0 - t * t).sqrt();
    let sum: Complex64 = (0..points)
        .map(|i| {
            let e = Complex64::from_polar(c, 2.0 * PI * i as f64 / points as f64);
            harmonic_pq(p, q, [x[0] * t + u[0] * e, x[1] * t + u[1] * e])
        })
        .sum();
    (sum / (points as f64 * harmonic_pq(p, q, x))).re
}
