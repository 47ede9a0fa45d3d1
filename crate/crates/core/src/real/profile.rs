//! Radial parts `u` of functions `u ⊗ Y` on `R_{>0}`, evaluated through jets.

use rand::Rng;

use crate::specfun::Jet;

/// A smooth function on `R_{>0}` whose jet can be taken along any smooth
/// path `ρ(t)` given as a jet.
pub trait RadialProfile: Sync {
    /// The jet of `t ↦ u(ρ(t))`.
    fn jet(&self, rho: &Jet) -> Jet;

    /// `(lo, hi)` with `u = 0` outside `[lo, hi]`; `lo = 0` and `hi = ∞` allowed.
    fn support(&self) -> (f64, f64);

    fn eval(&self, r: f64) -> f64 {
        self.jet(&Jet::constant(r, r, 0)).value()
    }

    /// Interior points where the profile is only finitely smooth.
    fn breakpoints(&self) -> Vec<f64> {
        Vec::new()
    }
}

impl<P: RadialProfile + ?Sized> RadialProfile for &P {
    fn jet(&self, rho: &Jet) -> Jet {
        (**self).jet(rho)
    }
    fn support(&self) -> (f64, f64) {
        (**self).support()
    }
    fn breakpoints(&self) -> Vec<f64> {
        (**self).breakpoints()
    }
}

/// `u(ρ) = P(y) · exp(1 − 1/(1 − y²))` with `y` the affine image of `ρ`
/// taking `[lo, hi]` to `[−1, 1]`, and `u = 0` off `(lo, hi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BumpProfile {
    pub lo: f64,
    pub hi: f64,
    /// Coefficients of `P`, constant term first.
    pub poly: Vec<f64>,
}

impl BumpProfile {
    pub fn new(lo: f64, hi: f64, poly: Vec<f64>) -> BumpProfile {
        assert!(0.0 < lo && lo < hi, "bump support must satisfy 0 < lo < hi");
        BumpProfile { lo, hi, poly }
    }

    /// A seeded random member with support inside `[0.3, 4.5]`.
    pub fn random<R: Rng>(rng: &mut R) -> BumpProfile {
        let lo = rng.gen_range(0.3..0.9);
        let hi = lo + rng.gen_range(1.5..3.5);
        let deg = rng.gen_range(0..=3);
        let poly = (0..=deg).map(|_| rng.gen_range(-1.0..1.0)).collect();
        BumpProfile::new(lo, hi, poly)
    }

    /// `max |u|` sampled on a fine grid.
    pub fn sup_estimate(&self) -> f64 {
        (0..=2000)
            .map(|i| self.eval(self.lo + (self.hi - self.lo) * i as f64 / 2000.0).abs())
            .fold(0.0, f64::max)
    }
}

impl RadialProfile for BumpProfile {
    fn jet(&self, rho: &Jet) -> Jet {
        let y = rho.scale(2.0 / (self.hi - self.lo)).add_scalar(-(self.hi + self.lo) / (self.hi - self.lo));
        let gap = (&y * &y).scale(-1.0).add_scalar(1.0);
        // exp(1 − 1/gap) < 1e-300 long before the jet recurrences lose range
        if gap.value() <= 1.5e-3 {
            return Jet::constant(rho.t0, 0.0, rho.order());
        }
        let bump = gap.recip().scale(-1.0).add_scalar(1.0).exp();
        &bump * &y.poly(&self.poly)
    }

    fn support(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }
}

/// `ρ ↦ c · ρ^{−s}`, the radial part of a homogeneous function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerProfile {
    pub s: f64,
    pub scale: f64,
}

impl RadialProfile for PowerProfile {
    fn jet(&self, rho: &Jet) -> Jet {
        rho.powf(-self.s).scale(self.scale)
    }
    fn support(&self) -> (f64, f64) {
        (0.0, f64::INFINITY)
    }
}

/// `g(r) = r^{−d} φ(1/r)`: the radial part of `Inv φ` in real dimension `d`.
/// `conjugate` records that the harmonic factor is read at the conjugate
/// direction (complex case); the radial part does not depend on it.
#[derive(Clone, Debug, PartialEq)]
pub struct InvertedProfile<P> {
    pub inner: P,
    pub exponent: u32,
    pub conjugate: bool,
}

impl<P: RadialProfile> RadialProfile for InvertedProfile<P> {
    fn jet(&self, rho: &Jet) -> Jet {
        let inv = rho.recip();
        &rho.powf(-(self.exponent as f64)) * &self.inner.jet(&inv)
    }

    fn support(&self) -> (f64, f64) {
        let (lo, hi) = self.inner.support();
        (if hi.is_finite() { 1.0 / hi } else { 0.0 }, if lo > 0.0 { 1.0 / lo } else { f64::INFINITY })
    }

    fn breakpoints(&self) -> Vec<f64> {
        self.inner.breakpoints().iter().map(|b| 1.0 / b).collect()
    }
}

/// The profile `t ↦ h(t)` given by a closure on jets, with declared support.
pub struct FnProfile<F> {
    pub f: F,
    pub support: (f64, f64),
}

impl<F: Fn(&Jet) -> Jet + Sync> RadialProfile for FnProfile<F> {
    fn jet(&self, rho: &Jet) -> Jet {
        (self.f)(rho)
    }
    fn support(&self) -> (f64, f64) {
        self.support
    }
}
