//! Seeded generators of random cells, points and cell functions.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::padic::scalar::ipow;
use crate::padic::{Cell, CellFunction, CellRelation, PAdic, PVec};
use crate::rational::Rational;

/// Shape of randomly generated compactly supported functions.
#[derive(Clone, Copy, Debug)]
pub struct RandomCcConfig {
    pub max_cells: usize,
    pub shell_lo: i32,
    pub shell_hi: i32,
    /// Largest relative depth `level − v(center)`, hence largest invariance level.
    pub max_depth: u32,
    /// Depth is further capped so that `q^{depth·n}` stays below this.
    pub max_cells_per_ball: u64,
}

impl Default for RandomCcConfig {
    fn default() -> Self {
        RandomCcConfig { max_cells: 8, shell_lo: -2, shell_hi: 2, max_depth: 2, max_cells_per_ball: 729 }
    }
}

impl RandomCcConfig {
    pub fn depth_cap(&self, q: u64, n: usize) -> u32 {
        (1..=self.max_depth)
            .take_while(|d| (q as u128).pow(d * n as u32) <= self.max_cells_per_ball as u128)
            .last()
            .unwrap_or(1)
    }
}

const COEFFS: [(i128, i128); 8] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 3), (3, 1), (2, 3)];

pub fn random_coeff<R: Rng>(rng: &mut R) -> Rational {
    let (a, b) = *COEFFS.choose(rng).unwrap();
    Rational::new(a, b)
}

/// A point with `v(x) = w` whose unit digits go `depth` places deep.
pub fn random_point_in_shell<R: Rng>(rng: &mut R, q: u64, n: usize, w: i32, depth: u32) -> PVec {
    let m = ipow(q, depth);
    let lead = rng.gen_range(0..n);
    let coords = (0..n)
        .map(|i| {
            let mut d = rng.gen_range(0..m);
            if i == lead && d % q as i128 == 0 {
                d += rng.gen_range(1..q as i128);
            }
            PAdic::from_parts(q, w, d)
        })
        .collect();
    PVec::new(q, coords)
}

/// Up to `max_cells` pairwise disjoint cells avoiding 0, each of relative
/// depth at most the configured cap, with small rational coefficients.
pub fn random_cc<R: Rng>(rng: &mut R, q: u64, n: usize, cfg: &RandomCcConfig) -> CellFunction {
    let cap = cfg.depth_cap(q, n);
    let count = rng.gen_range(1..=cfg.max_cells);
    let mut cells: Vec<(Cell, Rational)> = Vec::new();
    let mut attempts = 0;
    while cells.len() < count && attempts < 50 * cfg.max_cells {
        attempts += 1;
        let w = rng.gen_range(cfg.shell_lo..=cfg.shell_hi);
        let depth = rng.gen_range(1..=cap);
        let center = random_point_in_shell(rng, q, n, w, depth);
        let cell = Cell::new(center, w + depth as i32);
        if cells.iter().all(|(c, _)| c.relation(&cell) == CellRelation::Disjoint) {
            cells.push((cell, random_coeff(rng)));
        }
    }
    CellFunction::new(q, n, cells, true).expect("generated cells are disjoint and avoid 0")
}

/// A compactly supported function that may be nonzero at 0: a random
/// `C_c` part plus a multiple of a ball around the origin.
pub fn random_schwartz<R: Rng>(rng: &mut R, q: u64, n: usize, cfg: &RandomCcConfig) -> CellFunction {
    let base = random_cc(rng, q, n, cfg);
    let m = rng.gen_range(cfg.shell_lo..=cfg.shell_hi);
    let ball = CellFunction::from_combination(q, n, vec![(Cell::ball(q, n, m), random_coeff(rng))]);
    base.add(&ball)
}

/// A point in the shell window `[lo, hi]` lying in no cell of `f`.
pub fn random_point_off_support<R: Rng>(rng: &mut R, f: &CellFunction, lo: i32, hi: i32, depth: u32) -> PVec {
    loop {
        let w = rng.gen_range(lo..=hi);
        let x = random_point_in_shell(rng, f.prime(), f.dim(), w, depth);
        if f.entries().iter().all(|(c, _)| !c.contains(&x)) {
            return x;
        }
    }
}
