use std::fmt;

use rand::Rng;

use crate::padic::scalar::{ipow, PAdic};
use crate::padic::vector::PVec;
use crate::rational::Rational;

/// The coset `center + π^level O^n`, center kept in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cell {
    center: PVec,
    level: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellRelation {
    Disjoint,
    Equal,
    /// The first cell strictly contains the second.
    Contains,
    /// The first cell lies strictly inside the second.
    Within,
}

impl Cell {
    pub fn new(center: PVec, level: i32) -> Self {
        Cell { center: center.reduce(level), level }
    }

    /// The ball `π^level O^n` around the origin.
    pub fn ball(q: u64, n: usize, level: i32) -> Self {
        Cell { center: PVec::zero(q, n), level }
    }

    pub fn center(&self) -> &PVec {
        &self.center
    }

    pub fn level(&self) -> i32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    pub fn prime(&self) -> u64 {
        self.center.prime()
    }

    /// Haar measure `q^{-level·n}` with `mes(O) = 1`.
    pub fn measure(&self) -> Rational {
        Rational::pow_int(self.prime() as i128, -self.level * self.dim() as i32)
    }

    pub fn contains(&self, x: &PVec) -> bool {
        x.sub(&self.center).val_or_inf() >= self.level
    }

    pub fn contains_zero(&self) -> bool {
        self.center.is_zero()
    }

    /// Common valuation of all points, defined when the cell avoids 0.
    pub fn point_valuation(&self) -> Option<i32> {
        (!self.contains_zero()).then(|| self.center.val_or_inf())
    }

    /// Ultrametric law: two cells are disjoint or one contains the other.
    pub fn relation(&self, other: &Cell) -> CellRelation {
        let (outer, inner, flipped) =
            if self.level <= other.level { (self, other, false) } else { (other, self, true) };
        if !outer.contains(&inner.center) {
            return CellRelation::Disjoint;
        }
        match (self.level == other.level, flipped) {
            (true, _) => CellRelation::Equal,
            (false, false) => CellRelation::Contains,
            (false, true) => CellRelation::Within,
        }
    }

    pub fn children(&self) -> Vec<Cell> {
        self.descendants(self.level + 1)
    }

    /// All `q^{n·(level'-level)}` subcells at `level' ≥ level`.
    pub fn descendants(&self, level: i32) -> Vec<Cell> {
        assert!(level >= self.level, "refinement level below cell level");
        let q = self.prime();
        let n = self.dim();
        let depth = (level - self.level) as u32;
        let per_coord = ipow(q, depth);
        let total = per_coord.checked_pow(n as u32).expect("too many subcells");
        let mut out = Vec::with_capacity(total as usize);
        let mut digits = vec![0i128; n];
        for _ in 0..total {
            let offset: Vec<PAdic> = digits.iter().map(|d| PAdic::from_parts(q, self.level, *d)).collect();
            out.push(Cell { center: self.center.add(&PVec::new(q, offset)), level });
            for d in digits.iter_mut() {
                *d += 1;
                if *d < per_coord {
                    break;
                }
                *d = 0;
            }
        }
        out
    }

    /// The point `center + π^level·y` for random digits `y` of the given depth.
    pub fn random_point<R: Rng>(&self, rng: &mut R, depth: u32) -> PVec {
        let q = self.prime();
        let m = ipow(q, depth);
        let offset: Vec<PAdic> =
            (0..self.dim()).map(|_| PAdic::from_parts(q, self.level, rng.gen_range(0..m))).collect();
        self.center.add(&PVec::new(q, offset))
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + π^{} O^{}", self.center, self.level, self.dim())
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn measures() {
        assert_eq!(Cell::ball(2, 1, 0).measure(), Rational::one());
        assert_eq!(Cell::ball(2, 2, 2).measure(), Rational::new(1, 16));
        let shell = Cell::ball(3, 2, 0).measure() - Cell::ball(3, 2, 1).measure();
        assert_eq!(shell, Rational::new(8, 9));
    }

    #[test]
    fn children_partition_the_cell() {
        let c = Cell::new(PVec::from_ints(3, &[1, 5]), 1);
        let kids = c.children();
        assert_eq!(kids.len(), 9);
        let total: Rational = kids.iter().map(Cell::measure).sum();
        assert_eq!(total, c.measure());
        for (i, a) in kids.iter().enumerate() {
            assert_eq!(c.relation(a), CellRelation::Contains);
            assert_eq!(a.relation(&c), CellRelation::Within);
            for b in &kids[i + 1..] {
                assert_eq!(a.relation(b), CellRelation::Disjoint);
            }
        }
    }

    #[test]
    fn random_points_stay_inside() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c = Cell::new(PVec::from_ints(5, &[7, 3, 11]), 2);
        for _ in 0..20 {
            assert!(c.contains(&c.random_point(&mut rng, 4)));
        }
        assert_eq!(c.point_valuation(), Some(0));
        assert!(Cell::new(PVec::from_ints(5, &[25, 0, 50]), 2).contains_zero());
    }
}
