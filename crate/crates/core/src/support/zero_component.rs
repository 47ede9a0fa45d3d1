use std::collections::VecDeque;
use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::specfun::composite_legendre;

use super::polygon::{convex_hull, support_function, Point};

/// Relative threshold below which `|sMf|` counts as zero.
pub const ZERO_THRESHOLD: f64 = 1e-9;

/// Nonnegative smooth bumps on `R² ∖ {0}` built from `e^{1 − 1/(1 − y²)}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum PlanarBump {
    /// Radial bump on `inner < |x| < outer`.
    Annulus { inner: f64, outer: f64 },
    /// Bump on the disk `|x − center| < radius`, away from 0.
    OffAxis { center: [f64; 2], radius: f64 },
}

fn bump(y: f64) -> f64 {
    let gap = 1.0 - y * y;
    if gap <= 0.0 {
        0.0
    } else {
        (1.0 - 1.0 / gap).exp()
    }
}

impl PlanarBump {
    pub fn eval(&self, x: Point<f64>) -> f64 {
        match *self {
            PlanarBump::Annulus { inner, outer } => bump((2.0 * x[0].hypot(x[1]) - inner - outer) / (outer - inner)),
            PlanarBump::OffAxis { center, radius } => bump((x[0] - center[0]).hypot(x[1] - center[1]) / radius),
        }
    }

    /// A disk containing the support.
    fn bounding_disk(&self) -> (Point<f64>, f64) {
        match *self {
            PlanarBump::Annulus { outer, .. } => ([0.0, 0.0], outer),
            PlanarBump::OffAxis { center, radius } => (center, radius),
        }
    }

    /// `min |x|` over the support.
    pub fn distance_to_origin(&self) -> f64 {
        match *self {
            PlanarBump::Annulus { inner, .. } => inner,
            PlanarBump::OffAxis { center, radius } => center[0].hypot(center[1]) - radius,
        }
    }

    /// `supp f ∪ {0}` discretized for its hull: the origin and `m` points on
    /// the outer boundary circle.
    pub fn generators(&self, m: usize) -> Vec<Point<f64>> {
        let (c, r) = self.bounding_disk();
        let mut pts: Vec<Point<f64>> =
            (0..m).map(|i| (TAU * i as f64 / m as f64).sin_cos()).map(|(s, co)| [c[0] + r * co, c[1] + r * s]).collect();
        pts.push([0.0, 0.0]);
        pts
    }

    /// `sMf(ξ) = ∫_{⟨ξ,x⟩ = 1} f ds` with arc length `ds`, by Gauss–Legendre
    /// on the chord cut from the line by the bounding disk.
    pub fn line_integral(&self, xi: Point<f64>) -> f64 {
        let norm2 = xi[0] * xi[0] + xi[1] * xi[1];
        let norm = norm2.sqrt();
        let foot = [xi[0] / norm2, xi[1] / norm2];
        let dir = [-xi[1] / norm, xi[0] / norm];
        let (c, r) = self.bounding_disk();
        let off = [foot[0] - c[0], foot[1] - c[1]];
        let b = dir[0] * off[0] + dir[1] * off[1];
        let disc = b * b - (off[0] * off[0] + off[1] * off[1] - r * r);
        if disc <= 0.0 {
            return 0.0;
        }
        let half = disc.sqrt();
        composite_legendre(|s| self.eval([foot[0] + s * dir[0], foot[1] + s * dir[1]]), -b - half, -b + half, 20, 8)
    }
}

/// Outcome of comparing the zero component of `sMf` with `(Ĉ_f)^*`, both
/// clipped to the disk of radius `window`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroComponentReport {
    /// Boundary of the computed component, one vertex per grid ray.
    pub component_polygon: Vec<Point<f64>>,
    /// Boundary of the dual of the hull, at the same angles.
    pub dual_polygon: Vec<Point<f64>>,
    /// Hausdorff distance between the two boundaries.
    pub hausdorff: f64,
    pub grid_h: f64,
    /// Absolute zero threshold, `ZERO_THRESHOLD · max |sMf|` over the grid.
    pub threshold: f64,
    pub window: f64,
}

/// Evaluates `sMf` on the polar grid `ρ = i h`, `θ = 2πj/N` with `N ≈ 2π·window/h`,
/// flood-fills `{|sMf| ≤ ε}` from the innermost ring, and compares the
/// outermost component radius on each ray with `1/H(e_θ)`, `H` the support
/// function of the hull of `supp f ∪ {0}`. The window is `1.25 / dist(0, supp f)`.
pub fn zero_component_check(f: &PlanarBump, h: f64) -> ZeroComponentReport {
    let rings = (1.25 / f.distance_to_origin() / h).ceil() as usize;
    let window = rings as f64 * h;
    let rays = (TAU * window / h).ceil() as usize;
    let dirs: Vec<Point<f64>> = (0..rays).map(|j| (TAU * j as f64 / rays as f64).sin_cos()).map(|(s, c)| [c, s]).collect();
    let values: Vec<Vec<f64>> = (1..=rings)
        .map(|i| dirs.iter().map(|d| f.line_integral([i as f64 * h * d[0], i as f64 * h * d[1]]).abs()).collect())
        .collect();
    let max = values.iter().flatten().fold(0.0f64, |m, v| m.max(*v));
    let threshold = ZERO_THRESHOLD * max;

    let mut seen = vec![vec![false; rays]; rings];
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 0..rays {
        if values[0][j] <= threshold {
            seen[0][j] = true;
            queue.push_back((0, j));
        }
    }
    let mut reach = vec![None::<usize>; rays];
    while let Some((i, j)) = queue.pop_front() {
        reach[j] = Some(reach[j].map_or(i, |r: usize| r.max(i)));
        let mut next = vec![(i, (j + 1) % rays), (i, (j + rays - 1) % rays)];
        if i > 0 {
            next.push((i - 1, j));
        }
        if i + 1 < rings {
            next.push((i + 1, j));
        }
        for (a, b) in next {
            if !seen[a][b] && values[a][b] <= threshold {
                seen[a][b] = true;
                queue.push_back((a, b));
            }
        }
    }

    let radius = |i: Option<usize>| match i {
        None => 0.5 * h,
        Some(i) if i + 1 == rings => window,
        Some(i) => (i as f64 + 1.5) * h,
    };
    let hull = convex_hull(&f.generators(4096)).map(|p| p.vertices().to_vec()).unwrap_or_else(|_| f.generators(4096));
    let component_polygon: Vec<Point<f64>> =
        dirs.iter().zip(&reach).map(|(d, i)| [radius(*i) * d[0], radius(*i) * d[1]]).collect();
    let dual_polygon: Vec<Point<f64>> = dirs
        .iter()
        .map(|d| {
            let hv = support_function(&hull, d);
            let r = if hv > 0.0 { (1.0 / hv).min(window) } else { window };
            [r * d[0], r * d[1]]
        })
        .collect();
    let hausdorff = hausdorff_closed_polylines(&component_polygon, &dual_polygon, 4);
    ZeroComponentReport { component_polygon, dual_polygon, hausdorff, grid_h: h, threshold, window }
}

fn segment_distance(p: Point<f64>, a: Point<f64>, b: Point<f64>) -> f64 {
    let (ab, ap) = ([b[0] - a[0], b[1] - a[1]], [p[0] - a[0], p[1] - a[1]]);
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = if len2 == 0.0 { 0.0 } else { ((ap[0] * ab[0] + ap[1] * ab[1]) / len2).clamp(0.0, 1.0) };
    (ap[0] - t * ab[0]).hypot(ap[1] - t * ab[1])
}

fn directed(a: &[Point<f64>], b: &[Point<f64>], subdivide: usize) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..a.len() {
        let (p, q) = (a[i], a[(i + 1) % a.len()]);
        for k in 0..subdivide {
            let t = k as f64 / subdivide as f64;
            let x = [p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])];
            let d = (0..b.len()).map(|j| segment_distance(x, b[j], b[(j + 1) % b.len()])).fold(f64::INFINITY, f64::min);
            worst = worst.max(d);
        }
    }
    worst
}

/// Hausdorff distance between two closed polylines, sampling each edge of
/// one at `subdivide` points against every edge of the other.
pub fn hausdorff_closed_polylines(a: &[Point<f64>], b: &[Point<f64>], subdivide: usize) -> f64 {
    directed(a, b, subdivide).max(directed(b, a, subdivide))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_integral_of_annulus_is_radial() {
        let f = PlanarBump::Annulus { inner: 1.0, outer: 2.0 };
        let a = f.line_integral([0.7, 0.0]);
        let b = f.line_integral([0.0, -0.7]);
        assert!(a > 0.0 && (a - b).abs() < 1e-12 * a);
        assert_eq!(f.line_integral([0.45, 0.1]), 0.0);
    }

    #[test]
    fn hausdorff_of_concentric_squares() {
        let sq = |r: f64| vec![[r, -r], [r, r], [-r, r], [-r, -r]];
        assert!((hausdorff_closed_polylines(&sq(1.0), &sq(1.5), 4) - 0.5 * std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn refinement_shrinks_the_distance() {
        let f = PlanarBump::Annulus { inner: 1.0, outer: 2.0 };
        let coarse = zero_component_check(&f, 1.0 / 30.0);
        let fine = zero_component_check(&f, 1.0 / 70.0);
        assert!(fine.hausdorff < coarse.hausdorff, "{} {}", fine.hausdorff, coarse.hausdorff);
        assert!(fine.hausdorff <= 3.0 * fine.grid_h);
    }
}
