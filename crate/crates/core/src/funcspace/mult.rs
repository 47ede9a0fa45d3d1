use crate::error::{RadonError, Result};
use crate::padic::{Cell, CellFunction, PAdic, PVec};
use crate::rational::Rational;
use crate::value::Value;

use super::lazy::LazyShellFunction;

/// A density on `F^×` with respect to `d^×t = dt/|t|`, supported on finitely
/// many shells `v(t) ∈ [a_min, a_max]`, stored as a 1-D cell function.
#[derive(Clone, Debug)]
pub struct MultKernel<V: Value = Rational> {
    density: CellFunction<V>,
}

impl<V: Value> MultKernel<V> {
    pub fn new(density: CellFunction<V>) -> Result<Self> {
        if density.dim() != 1 {
            return Err(RadonError::DimensionMismatch { expected: 1, found: density.dim() });
        }
        if let Some((c, _)) = density.entries().iter().find(|(c, _)| c.contains_zero()) {
            return Err(RadonError::ZeroInSupport(c.to_string()));
        }
        Ok(MultKernel { density })
    }

    pub fn zero(q: u64) -> Self {
        MultKernel { density: CellFunction::zero(q, 1) }
    }

    /// The indicator of the shell `π^a O^×`.
    pub fn shell_indicator(q: u64, a: i32) -> Self {
        let entries = (1..q as i128)
            .map(|u| (Cell::new(PVec::new(q, vec![PAdic::from_parts(q, a, u)]), a + 1), V::one()))
            .collect();
        MultKernel { density: CellFunction::from_combination(q, 1, entries) }
    }

    pub fn density(&self) -> &CellFunction<V> {
        &self.density
    }

    pub fn prime(&self) -> u64 {
        self.density.prime()
    }

    /// `[a_min, a_max]`, or `None` for the zero kernel.
    pub fn shell_range(&self) -> Option<(i32, i32)> {
        self.density.shell_range()
    }

    pub fn eval(&self, t: &PAdic) -> V {
        self.density.eval(&PVec::new(t.prime(), vec![*t]))
    }

    pub fn add(&self, other: &Self) -> Self {
        MultKernel { density: self.density.add(&other.density) }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        MultKernel { density: self.density.scale(r) }
    }

    /// Cells `t0 + π^{v(t0)+ρ} O` with their coefficients, refined so that each
    /// has relative level at least `ρ`.
    fn relative_cells(&self, rho: u32) -> Vec<(PAdic, Cell, V)> {
        let mut out = Vec::new();
        for (cell, a) in self.density.entries() {
            let w = cell.point_valuation().expect("kernel cells avoid 0");
            let level = cell.level().max(w + rho as i32);
            for sub in cell.descendants(level) {
                out.push((*sub.center().coord(0), sub, a.clone()));
            }
        }
        out
    }

    /// `σ(α)(t) = α(t^{-1}) |t|^{-n}`: the cell `b + π^j O` with `v(b) = a`
    /// inverts to `b^{-1} + π^{j-2a} O`, where `|t|^{-n} = q^{-na}`.
    pub fn sigma(&self, n: usize) -> Self {
        let q = self.prime();
        let entries = self
            .density
            .entries()
            .iter()
            .map(|(cell, coeff)| {
                let b = *cell.center().coord(0);
                let a = b.valuation().expect("kernel cells avoid 0");
                let inv = b.inverse_approx((cell.level() - a) as u32).unwrap();
                let image = Cell::new(PVec::new(q, vec![inv]), cell.level() - 2 * a);
                (image, coeff.scale(&Rational::pow_int(q as i128, -(n as i32) * a)))
            })
            .collect();
        MultKernel { density: CellFunction::from_combination(q, 1, entries) }
    }

    /// `(α∗φ)(ξ) = ∫ α(t) φ(t^{-1}ξ) d^×t` for compactly supported `φ`:
    /// `α ∗ 1_C = Σ a·mes/|t0| · 1_{t0·C}` over kernel cells fine enough that
    /// `t·C` does not move inside each of them.
    pub fn convolve_cells(&self, phi: &CellFunction<V>) -> CellFunction<V> {
        let q = self.prime();
        let phi = if phi.avoids_zero() { phi.clone() } else { phi.disjoint_form() };
        let mut entries = Vec::new();
        for (cell, b) in phi.entries() {
            let vc = cell.point_valuation().expect("convolution needs functions vanishing near 0");
            let rho = (cell.level() - vc).max(1) as u32;
            for (t0, kcell, a) in self.relative_cells(rho) {
                let weight = kcell.measure() * t0.abs().recip();
                let image = Cell::new(cell.center().scale(&t0), cell.level() + t0.valuation().unwrap());
                entries.push((image, a.mul(b).scale(&weight)));
            }
        }
        CellFunction::from_combination(q, phi.dim(), entries)
    }

    /// Kernel product `α ∗ β` in the convolution algebra.
    pub fn convolve_kernel(&self, other: &Self) -> Self {
        MultKernel { density: self.convolve_cells(&other.density) }
    }

    /// Lazy convolution: the kernel is refined to relative level `max(r, 1)`
    /// and `t^{-1}` replaced by an approximate inverse of the cell center.
    /// The support bound moves from `R` to `R + a_max`; the certificate is kept
    /// because scalar multiplication commutes with `GL_n(O)`.
    pub fn convolve_lazy(&self, phi: &LazyShellFunction<V>) -> LazyShellFunction<V> {
        let rho = phi.level().max(1);
        let terms: Vec<(PAdic, V)> = self
            .relative_cells(rho)
            .into_iter()
            .map(|(t0, cell, a)| {
                let weight = cell.measure() * t0.abs().recip();
                (t0.inverse_approx(rho).unwrap(), a.scale(&weight))
            })
            .collect();
        let bound = match self.shell_range() {
            Some((_, hi)) => phi.support_bound() + hi,
            None => i32::MIN / 2,
        };
        let inner = phi.clone();
        LazyShellFunction::new(phi.prime(), phi.dim(), phi.certificate(), bound, move |xi| {
            let mut acc = V::zero();
            for (s0, w) in &terms {
                let val = inner.eval(&xi.scale(s0));
                if !val.is_zero() {
                    acc.add_assign(&w.mul(&val));
                }
            }
            acc
        })
    }
}
