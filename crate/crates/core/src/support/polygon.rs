use std::ops::{Add, Div, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{RadonError, Result};
use crate::rational::Rational;

/// Coordinates a polygon can be built over: exact `Rational` or `f64`.
pub trait Coord:
    Clone + PartialOrd + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn to_f64(&self) -> f64;
}

impl Coord for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Coord for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
}

pub type Point<T> = [T; 2];

fn sub<T: Coord>(a: &Point<T>, b: &Point<T>) -> Point<T> {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone()]
}

fn cross<T: Coord>(a: &Point<T>, b: &Point<T>) -> T {
    a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
}

pub fn dot<T: Coord>(a: &Point<T>, b: &Point<T>) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone()
}

/// `H(ξ) = max_{x ∈ S} ⟨ξ, x⟩`.
///
/// # Panics
/// If `points` is empty.
pub fn support_function<T: Coord>(points: &[Point<T>], xi: &Point<T>) -> T {
    let mut it = points.iter().map(|x| dot(xi, x));
    let first = it.next().expect("support function of an empty set");
    it.fold(first, |m, v| if v > m { v } else { m })
}

/// A convex polygon with vertices in counterclockwise order and no three
/// consecutive vertices collinear.
#[derive(Clone, Debug)]
pub struct ConvexPolygon<T> {
    vertices: Vec<Point<T>>,
    contains_origin: bool,
}

impl<T: Coord> ConvexPolygon<T> {
    pub fn new(vertices: Vec<Point<T>>) -> Result<ConvexPolygon<T>> {
        let n = vertices.len();
        if n < 3 {
            return Err(RadonError::InvalidArgument(format!("a polygon needs 3 vertices, got {n}")));
        }
        for i in 0..n {
            let (a, b, c) = (&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if cross(&sub(b, a), &sub(c, b)) <= T::zero() {
                return Err(RadonError::InvalidArgument("vertices are not strictly convex and counterclockwise".into()));
            }
        }
        let origin = [T::zero(), T::zero()];
        let contains_origin =
            (0..n).all(|i| cross(&sub(&vertices[(i + 1) % n], &vertices[i]), &sub(&origin, &vertices[i])) > T::zero());
        Ok(ConvexPolygon { vertices, contains_origin })
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    /// Whether 0 lies in the interior.
    pub fn contains_origin(&self) -> bool {
        self.contains_origin
    }

    /// Strict interior membership.
    pub fn contains(&self, x: &Point<T>) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| cross(&sub(&self.vertices[(i + 1) % n], &self.vertices[i]), &sub(x, &self.vertices[i])) > T::zero())
    }

    /// `P^* = {ξ : ⟨ξ, x⟩ < 1 for all x ∈ P}`. The edge through `v_i, v_{i+1}`
    /// lies on `⟨a_i, x⟩ = 1` with `a_i = J(v_{i+1} − v_i) / (v_i × v_{i+1})`,
    /// and the `a_i` are the vertices of the dual in counterclockwise order.
    pub fn polar_dual(&self) -> Result<ConvexPolygon<T>> {
        if !self.contains_origin {
            return Err(RadonError::UnboundedDual);
        }
        let n = self.vertices.len();
        let dual = (0..n)
            .map(|i| {
                let (v, w) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
                let c = cross(v, w);
                [(w[1].clone() - v[1].clone()) / c.clone(), (v[0].clone() - w[0].clone()) / c]
            })
            .collect();
        ConvexPolygon::new(dual)
    }

    /// The same polygon listed from its lexicographically least vertex.
    pub fn canonical(&self) -> ConvexPolygon<T> {
        let start = (0..self.vertices.len())
            .min_by(|&i, &j| {
                let (a, b) = (&self.vertices[i], &self.vertices[j]);
                (&a[0], &a[1]).partial_cmp(&(&b[0], &b[1])).unwrap()
            })
            .unwrap();
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(start);
        ConvexPolygon { vertices, contains_origin: self.contains_origin }
    }

    pub fn to_f64(&self) -> ConvexPolygon<f64> {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|v| [v[0].to_f64(), v[1].to_f64()]).collect(),
            contains_origin: self.contains_origin,
        }
    }
}

impl<T: Coord> PartialEq for ConvexPolygon<T> {
    fn eq(&self, other: &Self) -> bool {
        self.canonical().vertices == other.canonical().vertices
    }
}

/// Convex hull by Andrew's monotone chain; collinear boundary points are dropped.
pub fn convex_hull<T: Coord>(points: &[Point<T>]) -> Result<ConvexPolygon<T>> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| (&a[0], &a[1]).partial_cmp(&(&b[0], &b[1])).unwrap());
    pts.dedup_by(|a, b| a == b);
    let chain = |it: &mut dyn Iterator<Item = &Point<T>>| {
        let mut out: Vec<Point<T>> = Vec::new();
        for p in it {
            while out.len() >= 2 && cross(&sub(&out[out.len() - 1], &out[out.len() - 2]), &sub(p, &out[out.len() - 2])) <= T::zero() {
                out.pop();
            }
            out.push(p.clone());
        }
        out.pop();
        out
    };
    let mut hull = chain(&mut pts.iter());
    hull.extend(chain(&mut pts.iter().rev()));
    ConvexPolygon::new(hull)
}

/// A seeded polygon with small-denominator rational vertices and 0 in its
/// interior: hull of 3–12 points at jittered angles and radii in `[1/2, 3]`.
pub fn random_origin_polygon<R: Rng>(rng: &mut R) -> ConvexPolygon<Rational> {
    loop {
        let k = rng.gen_range(3..=12);
        let pts: Vec<Point<Rational>> = (0..k)
            .map(|i| {
                let theta = std::f64::consts::TAU * (i as f64 + rng.gen_range(0.0..0.8)) / k as f64;
                let r = rng.gen_range(0.5..3.0);
                let den = rng.gen_range(1..=12) as i128;
                let q = |x: f64| Rational::new((x * den as f64).round() as i128, den);
                [q(r * theta.cos()), q(r * theta.sin())]
            })
            .collect();
        if let Ok(p) = convex_hull(&pts) {
            if p.contains_origin() {
                return p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r(n: i128) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn square_and_cross_polytope() {
        let square = ConvexPolygon::new(vec![[r(1), r(-1)], [r(1), r(1)], [r(-1), r(1)], [r(-1), r(-1)]]).unwrap();
        let cross = ConvexPolygon::new(vec![[r(1), r(0)], [r(0), r(1)], [r(-1), r(0)], [r(0), r(-1)]]).unwrap();
        assert_eq!(square.polar_dual().unwrap(), cross);
        assert_eq!(cross.polar_dual().unwrap(), square);
    }

    #[test]
    fn triangle_dual_by_facet_inversion() {
        let tri = ConvexPolygon::new(vec![[r(1), r(0)], [r(0), r(1)], [r(-1), r(-1)]]).unwrap();
        let dual = tri.polar_dual().unwrap();
        // facets x + y = 1, −2x + y = 1, x − 2y = 1
        let expect = ConvexPolygon::new(vec![[r(1), r(1)], [r(-2), r(1)], [r(1), r(-2)]]).unwrap();
        assert_eq!(dual, expect);
        assert_eq!(dual.polar_dual().unwrap(), tri);
    }

    #[test]
    fn unbounded_dual_is_an_error() {
        let tri = ConvexPolygon::new(vec![[r(0), r(0)], [r(1), r(0)], [r(0), r(1)]]).unwrap();
        assert!(!tri.contains_origin());
        assert_eq!(tri.polar_dual().unwrap_err(), RadonError::UnboundedDual);
    }

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let pts = [[0.0, 0.0], [2.0, 0.0], [1.0, 0.0], [2.0, 2.0], [0.0, 2.0], [1.0, 1.0], [0.0, 1.0]];
        let h = convex_hull(&pts).unwrap();
        let expect = ConvexPolygon::new(vec![[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]).unwrap();
        assert_eq!(h, expect);
    }

    #[test]
    fn support_function_basics() {
        let sq = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        assert_eq!(support_function(&sq, &[1.0, 1.0]), 2.0);
        assert_eq!(support_function(&[[0.0, 0.0]], &[3.0, -2.0]), 0.0);
        assert_eq!(support_function(&sq, &[2.5, 2.5]), 2.5 * support_function(&sq, &[1.0, 1.0]));
    }

    #[test]
    fn random_polygons_dualize_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let p = random_origin_polygon(&mut rng);
            assert_eq!(p.polar_dual().unwrap().polar_dual().unwrap(), p);
        }
    }
}
