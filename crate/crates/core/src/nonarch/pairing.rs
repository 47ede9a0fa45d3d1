use crate::padic::{Cell, CellFunction, PAdic};
use crate::rational::Rational;
use crate::value::Value;

/// The distribution `|s − c|^{-n}` on `F`, `c ∈ {0, 1}`, regularized by
/// `⟨|s−c|^{-n}, f⟩ = ∫ |s−c|^{-n} (f(s) − f(c)) ds`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegularizedPower {
    pub n: usize,
    pub shift: u8,
}

/// `Σ_{w ≤ j−1} (1 − q^{-1}) q^{w(n−1)}`, the mass of `|s|^{-n} ds` outside `π^j O`.
fn outer_tail(q: u64, n: usize, j: i32) -> Rational {
    let e = (n - 1) as i32;
    let num = (Rational::one() - Rational::new(1, q as i128)) * Rational::pow_int(q as i128, (j - 1) * e);
    num / (Rational::one() - Rational::pow_int(q as i128, -e))
}

/// `⟨|s − c|^{-n}, 1_{b + π^j O}⟩` in closed form: `q^{-j} |b − c|^{-n}` when
/// the ball misses `c`, and `−Σ_{w<j}(1−q^{-1})q^{w(n−1)}` when it contains `c`.
pub fn pair_power_ball(q: u64, n: usize, c: &PAdic, b: &PAdic, j: i32) -> Rational {
    let d = b.sub(c).val_or_inf();
    if d >= j {
        -outer_tail(q, n, j)
    } else {
        Rational::pow_int(q as i128, n as i32 * d - j)
    }
}

impl RegularizedPower {
    pub fn pair<V: Value>(&self, f: &CellFunction<V>) -> V {
        let q = f.prime();
        let c = PAdic::from_int(q, self.shift as i128);
        let mut acc = V::zero();
        for (cell, a) in f.entries() {
            let p = pair_power_ball(q, self.n, &c, cell.center().coord(0), cell.level());
            acc.add_assign(&a.scale(&p));
        }
        acc
    }
}

/// `β = c·(|s−1|^{-n} − |s|^{-n})` with `c = (1 − q^{n−1}) / (1 − q^{-n})`.
#[derive(Clone, Debug)]
pub struct BetaDistribution {
    q: u64,
    n: usize,
    constant: Rational,
}

impl BetaDistribution {
    pub fn new(q: u64, n: usize) -> Self {
        let qi = q as i128;
        let constant =
            (Rational::one() - Rational::pow_int(qi, n as i32 - 1)) / (Rational::one() - Rational::pow_int(qi, -(n as i32)));
        BetaDistribution { q, n, constant }
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    /// `⟨β, 1_{b + π^j O}⟩`.
    pub fn pair_ball(&self, b: &PAdic, j: i32) -> Rational {
        let vb = b.val_or_inf();
        if vb < 0 && vb < j {
            // |b − 1| = |b| and the ball misses 0 and 1: the two powers cancel
            return Rational::zero();
        }
        let one = PAdic::one(self.q);
        let zero = PAdic::zero(self.q);
        let diff = pair_power_ball(self.q, self.n, &one, b, j) - pair_power_ball(self.q, self.n, &zero, b, j);
        &self.constant * &diff
    }

    pub fn pair<V: Value>(&self, f: &CellFunction<V>) -> V {
        let mut acc = V::zero();
        for (cell, a) in f.entries() {
            let p = self.pair_ball(cell.center().coord(0), cell.level());
            if !p.is_zero() {
                acc.add_assign(&a.scale(&p));
            }
        }
        acc
    }

    /// Multiplicative average of `1_{b+π^j O}` over `U = 1 + π^r O`:
    /// unchanged when `U` preserves the ball, else spread over the orbit
    /// `b + π^{v(b)+r} O`.
    pub fn u_average_ball(b: &PAdic, j: i32, r: u32) -> (Cell, Rational) {
        let q = b.prime();
        let vb = b.val_or_inf();
        let cell = |level| Cell::new(crate::padic::PVec::new(q, vec![*b]), level);
        if vb == i32::MAX || vb + r as i32 >= j {
            (cell(j), Rational::one())
        } else {
            let orbit = vb + r as i32;
            (cell(orbit), Rational::pow_int(q as i128, orbit - j))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::PVec;

    fn ball(q: u64, c: i128, j: i32) -> CellFunction {
        CellFunction::indicator(Cell::new(PVec::from_ints(q, &[c]), j))
    }

    /// `∫ |s|^{-n}(f(s) − f(0)) ds` summed shell by shell over a window wide
    /// enough that `f − f(0)` vanishes beyond it.
    fn shell_sum(q: u64, n: usize, f: &CellFunction, lo: i32, hi: i32) -> Rational {
        let f0 = f.eval(&PVec::zero(q, 1));
        let mut acc = Rational::zero();
        for w in lo..=hi {
            for u in 1..q as i128 {
                let cells = Cell::new(PVec::new(q, vec![PAdic::from_parts(q, w, u)]), w + 1).descendants(hi + 2);
                for c in cells {
                    let val = f.eval(c.center()) - f0.clone();
                    acc += &(val * c.measure() * Rational::pow_int(q as i128, n as i32 * w));
                }
            }
        }
        acc
    }

    #[test]
    fn closed_forms_match_examples() {
        let p = RegularizedPower { n: 2, shift: 0 };
        assert_eq!(p.pair(&ball(2, 0, 0)), Rational::new(-1, 2));
        assert_eq!(p.pair(&ball(2, 0, 1)), Rational::from_int(-1));
    }

    #[test]
    fn closed_forms_match_shell_sums() {
        for (q, n) in [(2u64, 2usize), (3, 2), (2, 3)] {
            let f = ball(q, 0, 0)
                .scale(&Rational::from_int(2))
                .add(&ball(q, 1, 2).scale(&Rational::new(-1, 3)))
                .add(&ball(q, 0, 2))
                .add(&CellFunction::indicator(Cell::new(PVec::new(q, vec![PAdic::from_parts(q, -1, 1)]), 1)));
            let p = RegularizedPower { n, shift: 0 };
            let window = shell_sum(q, n, &f, -1, 2) - Rational::from_int(3) * outer_tail(q, n, -1);
            assert_eq!(p.pair(&f), window, "q={q} n={n}");
        }
    }

    #[test]
    fn beta_average_is_supported_in_o_and_kills_constants() {
        for q in [2u64, 3, 5] {
            for n in [2usize, 3] {
                let beta = BetaDistribution::new(q, n);
                for m in 0..3 {
                    assert!(beta.pair_ball(&PAdic::zero(q), -m).is_zero());
                }
                for r in 1..=3u32 {
                    for j in -2..=3 {
                        for v in -3..0 {
                            if v >= j {
                                continue;
                            }
                            let b = PAdic::from_parts(q, v, 1 + q as i128);
                            let (cell, w) = BetaDistribution::u_average_ball(&b, j, r);
                            let g = CellFunction::<Rational>::indicator(cell.clone());
                            let direct = RegularizedPower { n, shift: 1 }.pair(&g) - RegularizedPower { n, shift: 0 }.pair(&g);
                            assert!(direct.is_zero());
                            assert!(beta.pair_ball(cell.center().coord(0), cell.level()).is_zero());
                            assert_eq!(w * cell.measure(), Rational::pow_int(q as i128, -j));
                        }
                    }
                }
            }
        }
    }
}
