use crate::cyclotomic::{CycloAccumulator, Cyclotomic};
use crate::error::{RadonError, Result};
use crate::funcspace::{invariance_level, LazyShellFunction, MultKernel};
use crate::padic::{Cell, CellFunction, PAdic, PVec};
use crate::rational::Rational;
use crate::value::Value;

use super::radon::shell_cells;

/// The additive character `ψ(a/q^e) = ζ_{q^e}^a`, trivial on `O` and
/// nontrivial on `π^{-1} O`, with values in `Q(ζ_{q^N})` for `N ≤ max_level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Character {
    pub q: u64,
    pub max_level: u32,
}

impl Character {
    pub fn new(q: u64) -> Self {
        // q^N must fit the exponent arithmetic of the cyclotomic ring
        let max_level = (1..).take_while(|e| (q as u128).pow(*e) < (1u128 << 62)).last().unwrap();
        Character { q, max_level }
    }

    pub fn with_max_level(q: u64, max_level: u32) -> Self {
        Character { q, max_level }
    }

    /// `(e, a)` with `ψ(y) = ζ_{q^e}^a`.
    pub fn exponent(&self, y: &PAdic) -> Result<(u32, u64)> {
        let (e, a) = y.principal_part();
        if e > self.max_level {
            return Err(RadonError::InsufficientConductor { required: e, available: self.max_level });
        }
        Ok((e, a))
    }

    pub fn eval(&self, y: &PAdic) -> Result<Cyclotomic> {
        let (e, a) = self.exponent(y)?;
        Ok(Cyclotomic::root_of_unity(self.q, e, a))
    }
}

/// Collects `value · ζ_{q^e}^a · weight` terms and sums them at one level.
struct CharSum {
    q: u64,
    terms: Vec<(Cyclotomic, u32, u64, Rational)>,
}

impl CharSum {
    fn new(q: u64) -> Self {
        CharSum { q, terms: Vec::new() }
    }

    fn push(&mut self, value: Cyclotomic, (e, a): (u32, u64), weight: Rational) {
        if !value.is_zero() && !weight.is_zero() {
            self.terms.push((value, e, a, weight));
        }
    }

    fn finish(self) -> Cyclotomic {
        let level = self.terms.iter().map(|(v, e, _, _)| v.level().max(*e)).max().unwrap_or(0);
        let mut acc = CycloAccumulator::new(self.q, level);
        for (v, e, a, w) in &self.terms {
            let shift = a * self.q.pow(level - e);
            acc.add_shifted(v, shift, w);
        }
        acc.finish()
    }
}

/// `F′f(ξ) = ∫ f(x)(ψ(−ξ·x) − 1) dx`: the cell `c + π^m O^n` contributes
/// `q^{-mn}(ψ(−ξ·c)[v(ξ)+m ≥ 0] − 1)`, since the character sum over a ball
/// vanishes unless the frequency is trivial on it.
pub fn fourier_fprime(psi: &Character, f: &CellFunction<Cyclotomic>, xi: &PVec) -> Result<Cyclotomic> {
    let v = xi.val_or_inf();
    let q = f.prime();
    let n = f.dim() as i32;
    let mut sum = CharSum::new(q);
    for (cell, a) in f.entries() {
        let m = cell.level();
        let mes = Rational::pow_int(q as i128, -m * n);
        if v == i32::MAX || v + m >= 0 {
            sum.push(a.clone(), psi.exponent(&xi.dot(cell.center()).neg())?, mes.clone());
        }
        sum.push(a.clone(), (0, 0), -mes);
    }
    Ok(sum.finish())
}

/// `F′f` as an element of `C_{≤-R_f-1}` for `f ∈ C_c` supported in `v ≥ R_f`,
/// certified at the invariance level of `f`.
pub fn fourier_fprime_as_function(psi: &Character, f: &CellFunction<Cyclotomic>) -> LazyShellFunction<Cyclotomic> {
    let cert = invariance_level(f);
    let bound = f.shell_range().map_or(i32::MIN / 2, |(lo, _)| -lo - 1);
    let (g, psi) = (f.clone(), *psi);
    LazyShellFunction::new(f.prime(), f.dim(), cert, bound, move |xi| {
        fourier_fprime(&psi, &g, xi).expect("conductor too small for F′")
    })
}

/// Support of the `U`-average of `ψ` for `U = 1 + π^r O`, derived from the
/// character sums `Σ_{y ∈ π^r O / π^e O} ψ(π^{-e} y)`: returns the smallest
/// `i` with `ψ_U(s) = 0` whenever `v(s) < i`.
pub fn psi_average_support(psi: &Character, r: u32) -> i32 {
    let q = psi.q;
    let mut e = 0u32;
    loop {
        let s = PAdic::pi_pow(q, -(e as i32));
        let count = if e > r { q.pow(e - r) } else { 1 };
        let mut total = Cyclotomic::zero();
        for k in 0..count {
            let y = PAdic::from_parts(q, r as i32, k as i128);
            total = total.add(&psi.eval(&s.mul(&y)).expect("conductor"));
        }
        if total.is_zero() {
            return -(e as i32) + 1;
        }
        e += 1;
    }
}

/// `(Fφ)(x) = (A_ψ φ)(x) = ∫ ψ(ξ·x) φ(ξ) dξ`, stabilized like `A_β`.
///
/// `ψ_U` is supported in `π^i O` with `i = −r'`, so the stabilization ball is
/// `π^{-v(x)-2r'} O^n`. A cell `c + π^k O^n` contributes
/// `φ(c) ψ(c·x) q^{-kn}` when `k + v(x) ≥ 0` and nothing otherwise, so only
/// shells `w ≥ −v(x) − r'` are visited.
pub fn fourier_f(psi: &Character, phi: &LazyShellFunction<Cyclotomic>, x: &PVec) -> Result<Cyclotomic> {
    let vx = x.valuation().map_err(|_| RadonError::ZeroPoint)?;
    let (q, n) = (phi.prime(), phi.dim());
    let rel = phi.level().max(1) as i32;
    let i = psi_average_support(psi, rel as u32);
    let lo = -vx - rel + i;
    let mut sum = CharSum::new(q);
    for w in lo..=phi.support_bound() {
        let k = w + rel;
        if k + vx < 0 {
            continue;
        }
        let mes = Rational::pow_int(q as i128, -k * n as i32);
        for cell in shell_cells(q, n, w, k) {
            let val = phi.eval(cell.center());
            if !val.is_zero() {
                sum.push(val, psi.exponent(&cell.center().dot(x))?, mes.clone());
            }
        }
    }
    Ok(sum.finish())
}

/// `F` on a compactly supported cell function, as a cell function:
/// `F(1_{c+π^k O^n}) = q^{-kn} ψ(c·x) 1_{π^{-k} O^n}(x)`, split into cells of
/// level `−v(c)` on which `ψ(c·x)` is constant.
pub fn fourier_f_cells(psi: &Character, phi: &CellFunction<Cyclotomic>) -> Result<CellFunction<Cyclotomic>> {
    let (q, n) = (phi.prime(), phi.dim());
    let mut entries = Vec::new();
    for (cell, a) in phi.entries() {
        let k = cell.level();
        let vc = cell.point_valuation().ok_or_else(|| RadonError::ZeroInSupport(cell.to_string()))?;
        let mes = Rational::pow_int(q as i128, -k * n as i32);
        for sub in Cell::ball(q, n, -k).descendants(-vc) {
            let chi = psi.eval(&cell.center().dot(sub.center()))?;
            entries.push((sub, a.mul(&chi).scale(&mes)));
        }
    }
    Ok(CellFunction::from_combination(q, n, entries))
}

/// The kernel `α(t) = ψ(−t) − 1` restricted to the shells `v(t) ∈ [lo, −1]`
/// (it vanishes on `O`), on cells of relative level at least `rho`.
pub fn psi_minus_one_kernel(psi: &Character, lo: i32, rho: u32) -> Result<MultKernel<Cyclotomic>> {
    let q = psi.q;
    let mut entries = Vec::new();
    for w in lo..=-1 {
        let level = (w + rho as i32).max(0);
        for cell in shell_cells(q, 1, w, level) {
            let t = *cell.center().coord(0);
            let val = psi.eval(&t.neg())?.sub(&Cyclotomic::one());
            entries.push((cell, val));
        }
    }
    MultKernel::new(CellFunction::from_combination(q, 1, entries))
}

/// `⟨σ(α) ∗ ψ, h⟩ = ∫ σ(α)(t) ∫ ψ(t^{-1}s) h(s) ds d^×t` for
/// `σ(α)(t) = (ψ(−t^{-1}) − 1)|t|^{-n}`.
///
/// `σ(α)` vanishes for `v(t) ≤ 0` and the inner integral vanishes for
/// `v(t)` above the finest level of `h`, so only finitely many shells
/// contribute; each is cut into cells of relative level
/// `ρ = w − min(0, min v(c_i))` on which the integrand is constant.
pub fn pair_sigma_alpha_psi(psi: &Character, n: usize, h: &CellFunction<Rational>) -> Result<Cyclotomic> {
    let q = h.prime();
    let Some(top) = h.max_level() else { return Ok(Cyclotomic::zero()) };
    let vmin = h.entries().iter().map(|(c, _)| c.center().val_or_inf()).min().unwrap().min(0);
    let mut sum = CharSum::new(q);
    for w in 1..=top {
        let rho = (w - vmin) as u32;
        let tn = Rational::pow_int(q as i128, n as i32 * w);
        for tcell in shell_cells(q, 1, w, w + rho as i32) {
            let t0 = *tcell.center().coord(0);
            let tinv = t0.inverse_approx(rho)?;
            let weight = tcell.measure() * t0.abs().recip() * &tn;
            let sigma = psi.eval(&tinv.neg())?.sub(&Cyclotomic::one());
            for (cell, a) in h.entries() {
                let j = cell.level();
                if j - w < 0 {
                    continue;
                }
                let inner = Rational::pow_int(q as i128, -j) * a;
                let chi = psi.exponent(&tinv.mul(cell.center().coord(0)))?;
                sum.push(sigma.clone(), chi, &weight * &inner);
            }
        }
    }
    Ok(sum.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(q: u64, n: usize) -> CellFunction<Cyclotomic> {
        CellFunction::from_combination(
            q,
            n,
            vec![(Cell::ball(q, n, 0), Cyclotomic::one()), (Cell::ball(q, n, 1), Cyclotomic::one().neg())],
        )
        .disjoint_form()
    }

    fn rat(c: &Cyclotomic) -> Rational {
        c.to_rational().expect("rational value")
    }

    #[test]
    fn character_is_additive_and_trivial_on_o() {
        let psi = Character::new(3);
        let a = PAdic::from_parts(3, -2, 5);
        let b = PAdic::from_parts(3, -1, 2);
        assert_eq!(psi.eval(&a.add(&b)).unwrap(), psi.eval(&a).unwrap().mul(&psi.eval(&b).unwrap()));
        assert_eq!(psi.eval(&PAdic::from_int(3, 7)).unwrap(), Cyclotomic::one());
        assert_ne!(psi.eval(&PAdic::from_parts(3, -1, 1)).unwrap(), Cyclotomic::one());
        let small = Character::with_max_level(3, 1);
        assert_eq!(
            small.eval(&a),
            Err(RadonError::InsufficientConductor { required: 2, available: 1 })
        );
    }

    #[test]
    fn fprime_of_unit_sphere() {
        let psi = Character::new(2);
        let f = sphere(2, 2);
        assert_eq!(rat(&fourier_fprime(&psi, &f, &PVec::from_ints(2, &[1, 2])).unwrap()), Rational::zero());
        let v1 = PVec::new(2, vec![PAdic::from_parts(2, -1, 1), PAdic::zero(2)]);
        assert_eq!(rat(&fourier_fprime(&psi, &f, &v1).unwrap()), Rational::from_int(-1));
        let v2 = PVec::new(2, vec![PAdic::from_parts(2, -3, 3), PAdic::from_int(2, 1)]);
        assert_eq!(rat(&fourier_fprime(&psi, &f, &v2).unwrap()), Rational::new(-3, 4));
    }

    #[test]
    fn psi_average_support_is_minus_r() {
        let psi = Character::new(3);
        for r in 0..4 {
            assert_eq!(psi_average_support(&psi, r), -(r as i32));
        }
    }

    #[test]
    fn fourier_round_trips_on_unit_sphere() {
        let q = 2;
        let psi = Character::new(q);
        let f = sphere(q, 2);
        let lazy = fourier_fprime_as_function(&psi, &f);
        for cell in Cell::ball(q, 2, -1).descendants(2) {
            let x = cell.center();
            if x.is_zero() {
                continue;
            }
            assert_eq!(fourier_f(&psi, &lazy, x).unwrap(), f.eval(x), "x={x}");
        }
        let ff = fourier_f_cells(&psi, &f).unwrap();
        for cell in Cell::ball(q, 2, -2).descendants(1) {
            let xi = cell.center();
            if xi.is_zero() {
                continue;
            }
            assert_eq!(fourier_fprime(&psi, &ff, xi).unwrap(), f.eval(xi), "xi={xi}");
        }
    }
}
