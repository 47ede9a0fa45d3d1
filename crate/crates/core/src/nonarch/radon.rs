use crate::error::{RadonError, Result};
use crate::funcspace::{invariance_level, LazyShellFunction};
use crate::padic::{Cell, CellFunction, PAdic, PVec};
use crate::rational::Rational;
use crate::value::Value;

use super::pairing::BetaDistribution;

/// Pushforward of `1_C`, `C = c + π^k O^n`, along `ξ ↦ ξ·x`: the ball
/// `c·x + π^{k+v(x)} O` carrying the density `q^{-kn+k+v(x)}`, fixed by
/// `dμ_x · dt = dx`.
pub fn pushforward_cell(cell: &Cell, x: &PVec, vx: i32) -> (PAdic, i32, Rational) {
    let q = cell.prime();
    let k = cell.level();
    let n = cell.dim() as i32;
    let b = cell.center().dot(x);
    (b, k + vx, Rational::pow_int(q as i128, -k * n + k + vx))
}

/// `s ↦ Rf(ξ, s) = ∫_{ξ·x = s} f dμ_ξ` as a 1-D cell function.
pub fn radon_fiber<V: Value>(f: &CellFunction<V>, xi: &PVec) -> Result<CellFunction<V>> {
    let v = xi.valuation().map_err(|_| RadonError::ZeroPoint)?;
    let q = f.prime();
    let entries = f
        .entries()
        .iter()
        .map(|(cell, a)| {
            let (b, j, dens) = pushforward_cell(cell, xi, v);
            (Cell::new(PVec::new(q, vec![b]), j), a.scale(&dens))
        })
        .collect();
    Ok(CellFunction::from_combination(q, 1, entries))
}

/// `Mf(ξ) = ∫_{ξ·x=1} f dμ_ξ`: each cell `c + π^m O^n` contributes
/// `q^{-mn+m+v(ξ)}` when `v(1 − ξ·c) ≥ m + v(ξ)`.
pub fn radon_m<V: Value>(f: &CellFunction<V>, xi: &PVec) -> Result<V> {
    let v = xi.valuation().map_err(|_| RadonError::ZeroPoint)?;
    let one = PAdic::one(f.prime());
    let mut acc = V::zero();
    for (cell, a) in f.entries() {
        let (b, j, dens) = pushforward_cell(cell, xi, v);
        if one.sub(&b).val_or_inf() >= j {
            acc.add_assign(&a.scale(&dens));
        }
    }
    Ok(acc)
}

/// `Mf` as an element of `C_{≤-R}` for `f ∈ C_{≥R}`, certified at the
/// invariance level of `f` (the transform intertwines `g` with `g^{-T}`).
///
/// Cells containing 0 are balls `π^m O^n`; their transforms are radial and
/// vanish for `v(ξ) > −m`, so they only enter the support bound.
pub fn radon_m_as_function<V: Value>(f: &CellFunction<V>) -> LazyShellFunction<V> {
    let (balls, rest): (Vec<_>, Vec<_>) = f.entries().iter().cloned().partition(|(c, _)| c.contains_zero());
    let rest = CellFunction::from_combination(f.prime(), f.dim(), rest);
    let cert = invariance_level(&rest);
    let bound = balls
        .iter()
        .map(|(c, _)| -c.level())
        .chain(rest.shell_range().map(|(lo, _)| -lo))
        .max()
        .unwrap_or(i32::MIN / 2);
    let g = f.clone();
    LazyShellFunction::new(f.prime(), f.dim(), cert, bound, move |xi| radon_m(&g, xi).unwrap_or_else(|_| V::zero()))
}

/// Cells of level `level` covering the shell `v(ξ) = w`.
pub fn shell_cells(q: u64, n: usize, w: i32, level: i32) -> impl Iterator<Item = Cell> {
    Cell::ball(q, n, w).descendants(level).into_iter().filter(move |c| c.center().val_or_inf() == w)
}

/// Knobs that must not change the stabilized value of `A_β φ(x)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StabilizationOptions {
    /// Extra shells added below the integration ball.
    pub enlarge: u32,
    /// Extra refinement of the cells on which `φ` is sampled.
    pub refine: u32,
}

/// `(A_β φ)(x) = ∫_Λ β(ξ·x) φ(ξ) dξ` for any compact open `Λ` beyond the
/// stabilization point.
///
/// With `r' = max(r, 1)` the ball `Λ = π^{-v(x)-r'} O^n` contains the
/// subgroup of the stabilization lemma (the `U`-average of `β` is supported
/// in `O`), so `I(Λ)` is the stabilized value. It is computed by splitting
/// each shell `w ∈ [−v(x)−r', R]` into cells of level `w + r'`, where `φ` is
/// constant, and pairing `β` with the pushforward of each cell along `ξ ↦ ξ·x`.
pub fn apply_a_beta<V: Value>(phi: &LazyShellFunction<V>, x: &PVec) -> Result<V> {
    apply_a_beta_with(phi, x, StabilizationOptions::default())
}

pub fn apply_a_beta_with<V: Value>(phi: &LazyShellFunction<V>, x: &PVec, opts: StabilizationOptions) -> Result<V> {
    let vx = x.valuation().map_err(|_| RadonError::ZeroPoint)?;
    let (q, n) = (phi.prime(), phi.dim());
    let beta = BetaDistribution::new(q, n);
    let rel = phi.level().max(1) as i32 + opts.refine as i32;
    let lo = -vx - phi.level().max(1) as i32 - opts.enlarge as i32;
    let mut acc = V::zero();
    for w in lo..=phi.support_bound() {
        for cell in shell_cells(q, n, w, w + rel) {
            let (b, j, dens) = pushforward_cell(&cell, x, vx);
            let p = beta.pair_ball(&b, j);
            if p.is_zero() {
                continue;
            }
            let val = phi.eval(cell.center());
            if !val.is_zero() {
                acc.add_assign(&val.scale(&(p * dens)));
            }
        }
    }
    Ok(acc)
}

/// Lower support bound of `A_β φ` for `φ ∈ C_{≤-R}`: `A_β φ ∈ C_{≥R-a}` with
/// `a = max(r, 1)`.
pub fn a_beta_support_shift(phi: &LazyShellFunction<impl Value>) -> i32 {
    phi.level().max(1) as i32
}

/// `x ↦ g·x` for `g = U·diag(q^{a_1}, …, q^{a_n})`, `U` an integer matrix
/// with unit determinant in `Z_q`.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub unimodular: Vec<Vec<i128>>,
    pub exponents: Vec<i32>,
}

impl LinearMap {
    fn matrix(&self, q: u64) -> Vec<Vec<PAdic>> {
        self.unimodular.iter().map(|row| row.iter().map(|e| PAdic::from_int(q, *e)).collect()).collect()
    }

    pub fn apply(&self, x: &PVec) -> PVec {
        let q = x.prime();
        let scaled: Vec<PAdic> = x.coords().iter().zip(&self.exponents).map(|(c, a)| c.shift(*a)).collect();
        PVec::apply(&self.matrix(q), &PVec::new(q, scaled))
    }

    /// `g^T ξ = diag(q^a) U^T ξ`.
    pub fn apply_transpose(&self, xi: &PVec) -> PVec {
        let q = xi.prime();
        let n = xi.dim();
        let ut: Vec<Vec<PAdic>> =
            (0..n).map(|i| (0..n).map(|j| PAdic::from_int(q, self.unimodular[j][i])).collect()).collect();
        let y = PVec::apply(&ut, xi);
        PVec::new(q, y.coords().iter().zip(&self.exponents).map(|(c, a)| c.shift(*a)).collect())
    }

    /// `|det g| = q^{-Σ a_i}`.
    pub fn abs_det(&self, q: u64) -> Rational {
        Rational::pow_int(q as i128, -self.exponents.iter().sum::<i32>())
    }

    /// `(g·f)(x) = f(g^{-1}x)`: each cell is split so that its image under the
    /// diagonal part is a union of cells, then moved by `U`, which preserves
    /// `O^n`.
    pub fn push_function<V: Value>(&self, f: &CellFunction<V>) -> CellFunction<V> {
        let q = f.prime();
        let amax = *self.exponents.iter().max().unwrap();
        let mut entries = Vec::new();
        for (cell, a) in f.entries() {
            let m = cell.level();
            let target = m + amax;
            let image_center = self.apply(cell.center());
            // the box ⊕ π^{m+a_i} O, mapped by U, as cells of level m + a_max
            let steps: Vec<i128> = self.exponents.iter().map(|ai| crate::padic::scalar::ipow(q, (amax - ai) as u32)).collect();
            let total: i128 = steps.iter().product();
            let mut digits = vec![0i128; steps.len()];
            let mat = self.matrix(q);
            for _ in 0..total {
                let offset: Vec<PAdic> =
                    digits.iter().zip(&self.exponents).map(|(d, ai)| PAdic::from_parts(q, m + ai, *d)).collect();
                let moved = PVec::apply(&mat, &PVec::new(q, offset));
                entries.push((Cell::new(image_center.add(&moved), target), a.clone()));
                for (d, s) in digits.iter_mut().zip(&steps) {
                    *d += 1;
                    if *d < *s {
                        break;
                    }
                    *d = 0;
                }
            }
        }
        CellFunction::from_combination(q, f.dim(), entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(q: u64, n: usize) -> CellFunction {
        CellFunction::from_combination(
            q,
            n,
            vec![(Cell::ball(q, n, 0), Rational::one()), (Cell::ball(q, n, 1), Rational::from_int(-1))],
        )
    }

    #[test]
    fn radon_of_unit_sphere() {
        let f = sphere(3, 2);
        let unit = PVec::from_ints(3, &[1, 3]);
        assert_eq!(radon_m(&f, &unit).unwrap(), Rational::one());
        let big = PVec::new(3, vec![PAdic::from_parts(3, -1, 2), PAdic::from_int(3, 1)]);
        assert_eq!(radon_m(&f, &big).unwrap(), Rational::new(2, 9));
        assert_eq!(radon_m(&f, &PVec::from_ints(3, &[3, 6])).unwrap(), Rational::zero());
        assert!(radon_m(&f, &PVec::zero(3, 2)).is_err());
    }

    /// Fiber measure by brute force: count the cells of a fine grid on the
    /// fiber `x_j = (1 − Σ_{i≠j} ξ_i x_i)/ξ_j` with `|ξ_j| = ‖ξ‖`.
    #[test]
    fn radon_matches_fiber_enumeration() {
        let q = 2;
        let f = CellFunction::from_combination(
            q,
            2,
            vec![
                (Cell::new(PVec::from_ints(q, &[1, 2]), 2), Rational::from_int(3)),
                (Cell::new(PVec::from_ints(q, &[0, 1]), 1), Rational::new(-1, 2)),
                (Cell::ball(q, 2, -1), Rational::one()),
            ],
        );
        for xi in [PVec::from_ints(q, &[1, 2]), PVec::from_ints(q, &[3, 1]), PVec::from_ints(q, &[2, 4])] {
            let v = xi.valuation().unwrap();
            let j = xi.dominant_index().unwrap();
            let other = 1 - j;
            let inv = xi.coord(j).inverse_approx(20).unwrap();
            let depth = 6;
            let mut acc = Rational::zero();
            // x_other ranges over π^{-3}O in steps of π^depth
            for cell in Cell::ball(q, 1, -3).descendants(depth) {
                let t = *cell.center().coord(0);
                let xj = PAdic::one(q).sub(&xi.coord(other).mul(&t)).mul(&inv);
                let mut coords = vec![PAdic::zero(q); 2];
                coords[j] = xj;
                coords[other] = t;
                acc += &(f.eval(&PVec::new(q, coords)) * cell.measure());
            }
            // dμ_ξ = |ξ_j|^{-1} d x_other on the fiber
            let expect = acc * Rational::pow_int(q as i128, v);
            assert_eq!(radon_m(&f, &xi).unwrap(), expect, "xi={xi}");
        }
    }

    #[test]
    fn shell_cells_partition_the_shell() {
        let cells: Vec<Cell> = shell_cells(3, 2, -1, 1).collect();
        let total: Rational = cells.iter().map(Cell::measure).sum();
        assert_eq!(total, Rational::from_int(9) * Rational::new(8, 9));
    }

    #[test]
    fn a_beta_inverts_on_unit_sphere() {
        for (q, n) in [(2u64, 2usize), (3, 2), (2, 3)] {
            let f = sphere(q, n).disjoint_form();
            let phi = radon_m_as_function(&f);
            for x in [PVec::basis(q, n, 0), PVec::from_ints(q, &vec![1; n]), PVec::basis(q, n, n - 1).shift(1)] {
                assert_eq!(apply_a_beta(&phi, &x).unwrap(), f.eval(&x), "q={q} n={n} x={x}");
            }
        }
    }

    #[test]
    fn push_function_moves_cells() {
        let q = 3;
        let g = LinearMap { unimodular: vec![vec![1, 1], vec![0, 1]], exponents: vec![1, 0] };
        let f = CellFunction::from_combination(q, 2, vec![(Cell::new(PVec::from_ints(q, &[1, 2]), 1), Rational::one())]);
        let gf = g.push_function(&f);
        assert_eq!(gf.integrate(), f.integrate() * g.abs_det(q));
        let x = PVec::from_ints(q, &[4, 5]);
        assert_eq!(gf.eval(&g.apply(&x)), f.eval(&x));
    }
}
