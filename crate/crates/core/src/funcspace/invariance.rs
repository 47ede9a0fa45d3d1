use std::collections::HashSet;

use crate::padic::{Cell, CellFunction, CellRelation};
use crate::value::Value;

/// Certifies `φ(ξ') = φ(ξ)` whenever `v(ξ' − ξ) ≥ v(ξ) + level`, which is
/// equivalent to invariance under the congruence subgroup `K_level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct InvarianceCertificate {
    pub level: u32,
}

/// Smallest `r ≥ 0` for which `f` (avoiding 0) is constant on every ball
/// `ξ + π^{v(ξ)+r} O^n`.
///
/// Every cell of the disjoint form lies in one shell `v = w`; only the balls
/// of level `w + r` that strictly contain a cell need checking, and
/// `r = max(level − v(center))` always passes.
pub fn invariance_level<V: Value>(f: &CellFunction<V>) -> InvarianceCertificate {
    let d = f.disjoint_form();
    if d.is_empty() {
        return InvarianceCertificate { level: 0 };
    }
    assert!(d.avoids_zero(), "invariance level is defined for functions vanishing near 0");
    let depth = |c: &Cell| (c.level() - c.point_valuation().unwrap()) as u32;
    let upper = d.entries().iter().map(|(c, _)| depth(c)).max().unwrap().max(1);
    for r in 1..upper {
        if balls_constant(&d, r) {
            return InvarianceCertificate { level: r };
        }
    }
    InvarianceCertificate { level: upper }
}

fn balls_constant<V: Value>(d: &CellFunction<V>, r: u32) -> bool {
    let mut seen = HashSet::new();
    for (cell, _) in d.entries() {
        let w = cell.point_valuation().unwrap();
        let ball_level = w + r as i32;
        if cell.level() <= ball_level {
            continue;
        }
        let ball = Cell::new(cell.center().clone(), ball_level);
        if !seen.insert(ball.clone()) {
            continue;
        }
        let mut first: Option<&V> = None;
        let mut mass = crate::rational::Rational::zero();
        for (c, a) in d.entries() {
            if ball.relation(c) == CellRelation::Contains {
                if first.is_some_and(|v| v != a) {
                    return false;
                }
                first.get_or_insert(a);
                mass += &c.measure();
            }
        }
        if mass != ball.measure() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::PVec;
    use crate::rational::Rational;

    fn sphere(q: u64, n: usize) -> CellFunction {
        CellFunction::from_combination(
            q,
            n,
            vec![(Cell::ball(q, n, 0), Rational::one()), (Cell::ball(q, n, 1), Rational::from_int(-1))],
        )
    }

    #[test]
    fn known_levels() {
        assert_eq!(invariance_level(&sphere(2, 2)).level, 1);
        assert_eq!(invariance_level(&sphere(2, 2).refine(3)).level, 1);
        let annulus = CellFunction::from_combination(
            2,
            2,
            vec![(Cell::ball(2, 2, 0), Rational::new(5, 3)), (Cell::ball(2, 2, 2), Rational::new(-5, 3))],
        );
        assert_eq!(invariance_level(&annulus).level, 1);
        let point = CellFunction::<Rational>::indicator(Cell::new(PVec::from_ints(3, &[1, 4]), 3));
        assert_eq!(invariance_level(&point).level, 3);
        assert_eq!(invariance_level(&CellFunction::<Rational>::zero(3, 2)).level, 0);
    }
}
