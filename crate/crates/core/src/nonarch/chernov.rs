use crate::error::{RadonError, Result};
use crate::padic::{CellFunction, PAdic, PVec};
use crate::rational::Rational;
use crate::value::Value;

use super::pairing::{pair_power_ball, RegularizedPower};
use super::radon::radon_fiber;

/// `(1 − q^{n−1}) / ((1 − q^{-1})(1 − q^{-n}))`.
pub fn chernov_constant(q: u64, n: usize) -> Rational {
    let qi = q as i128;
    let n = n as i32;
    (Rational::one() - Rational::pow_int(qi, n - 1))
        / ((Rational::one() - Rational::pow_int(qi, -1)) * (Rational::one() - Rational::pow_int(qi, -n)))
}

/// `mes{η ∈ O^n : v(η·d) ≥ k}`: the map `η ↦ η·d` sends Haar measure on
/// `O^n` to `q^{v(d)}` times Haar measure on `π^{v(d)} O`.
fn lattice_mass_ge(q: u64, vd: i32, k: i32) -> Rational {
    if k <= vd {
        Rational::one()
    } else {
        Rational::pow_int(q as i128, vd - k)
    }
}

/// `mes{‖η‖ = 1 : v(η·d) ≥ k}`, the unit sphere being `O^n ∖ πO^n`.
fn sphere_mass_ge(q: u64, n: usize, vd: i32, k: i32) -> Rational {
    if vd == i32::MAX {
        return Rational::one() - Rational::pow_int(q as i128, -(n as i32));
    }
    lattice_mass_ge(q, vd, k) - Rational::pow_int(q as i128, -(n as i32)) * lattice_mass_ge(q, vd, k - 1)
}

/// `∫_{‖η‖=1} ⟨|s|^{-n}, 1_{η·d + π^m O}⟩ dη`, grouping `η` by `v(η·d)`.
fn sphere_power_integral(q: u64, n: usize, d: &PVec, m: i32) -> Rational {
    let vd = d.val_or_inf();
    let zero = PAdic::zero(q);
    let inside = pair_power_ball(q, n, &zero, &zero, m);
    let mut acc = inside * sphere_mass_ge(q, n, vd, m);
    if vd != i32::MAX {
        for w in vd..m {
            let shell = sphere_mass_ge(q, n, vd, w) - sphere_mass_ge(q, n, vd, w + 1);
            acc += &(shell * Rational::pow_int(q as i128, n as i32 * w - m));
        }
    }
    acc
}

/// Inversion by the formula
/// `f(x) = C ∫_{‖η‖=1} ⟨|s|^{-n}, Rf(η, s + η·x)⟩ dη` with
/// `C = (1 − q^{n−1}) / ((1 − q^{-1})(1 − q^{-n}))`.
///
/// For `f = 1_{c + π^m O^n}` and `‖η‖ = 1` the inner function is
/// `q^{-mn+m} 1_{η·(c−x) + π^m O}`, whose pairing depends on `η` only
/// through `v(η·(c − x))`; the sphere integral is then a finite sum.
pub fn chernov_invert<V: Value>(f: &CellFunction<V>, x: &PVec) -> Result<V> {
    if x.is_zero() {
        return Err(RadonError::ZeroPoint);
    }
    let (q, n) = (f.prime(), f.dim());
    let c = chernov_constant(q, n);
    let mut acc = V::zero();
    for (cell, a) in f.entries() {
        let m = cell.level();
        let dens = Rational::pow_int(q as i128, -m * n as i32 + m);
        let d = cell.center().sub(x);
        let val = sphere_power_integral(q, n, &d, m) * dens * &c;
        acc.add_assign(&a.scale(&val));
    }
    Ok(acc)
}

/// The same formula evaluated by brute force: the unit sphere is cut into
/// cells on which `η ↦ ⟨|s|^{-n}, Rf(η, s + η·x)⟩` is constant, and each inner
/// pairing is taken of an explicitly assembled fiber function.
pub fn chernov_invert_by_cells<V: Value>(f: &CellFunction<V>, x: &PVec) -> Result<V> {
    if x.is_zero() {
        return Err(RadonError::ZeroPoint);
    }
    let (q, n) = (f.prime(), f.dim());
    let c = chernov_constant(q, n);
    let level = f
        .entries()
        .iter()
        .map(|(cell, _)| cell.level() - cell.center().sub(x).val_or_inf().min(cell.level()))
        .max()
        .unwrap_or(0)
        .max(1);
    let power = RegularizedPower { n, shift: 0 };
    let mut acc = V::zero();
    for eta in super::radon::shell_cells(q, n, 0, level) {
        let e = eta.center();
        let fiber = radon_fiber(f, e)?;
        // s ↦ Rf(η, s + η·x): translate the fiber by −η·x
        let shift = e.dot(x);
        let moved = CellFunction::from_combination(
            q,
            1,
            fiber
                .entries()
                .iter()
                .map(|(cell, a)| {
                    let b = cell.center().coord(0).sub(&shift);
                    (crate::padic::Cell::new(PVec::new(q, vec![b]), cell.level()), a.clone())
                })
                .collect(),
        );
        acc.add_assign(&power.pair(&moved).scale(&(eta.measure() * &c)));
    }
    Ok(acc)
}

/// `∫_F Rf(ξ, s) ds`, computed from the fiber function.
pub fn cavalieri_integral<V: Value>(f: &CellFunction<V>, xi: &PVec) -> Result<V> {
    Ok(radon_fiber(f, xi)?.integrate())
}

/// `∫_{‖η‖=1} |η·x|^{-n} dη`, regularized: the pushforward of the sphere
/// along `η ↦ η·x` is `q^{v} 1_{π^{v} O} − q^{-n} q^{v+1} 1_{π^{v+1} O}`,
/// `v = v(x)`, paired with `|s|^{-n}`.
pub fn kochubei_integral(x: &PVec, n: usize) -> Result<Rational> {
    let v = x.valuation().map_err(|_| RadonError::ZeroPoint)?;
    let q = x.prime();
    let qi = q as i128;
    let zero = PAdic::zero(q);
    let outer = Rational::pow_int(qi, v) * pair_power_ball(q, n, &zero, &zero, v);
    let inner = Rational::pow_int(qi, v + 1 - n as i32) * pair_power_ball(q, n, &zero, &zero, v + 1);
    Ok(outer - inner)
}
