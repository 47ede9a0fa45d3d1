//! Property tests for the exact arithmetic, polygon duality and the real
//! Mellin formula.

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use radon_core::padic::PAdic;
use radon_core::real::{mellin_alpha_formula, AlphaKernelReal};
use radon_core::support::{random_origin_polygon, ConvexPolygon};
use radon_core::Rational;

fn rational() -> impl Strategy<Value = Rational> {
    (-500i128..500, 1i128..60).prop_map(|(a, b)| Rational::new(a, b))
}

fn padic_pair() -> impl Strategy<Value = (PAdic, PAdic)> {
    prop::sample::select(vec![2u64, 3, 5, 7]).prop_flat_map(|q| {
        let one = move || (-4i32..4, -2000i128..2000).prop_map(move |(v, m)| PAdic::from_parts(q, v, m));
        (one(), one())
    })
}

proptest! {
    #[test]
    fn rational_field_ops(a in rational(), b in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
        // distinct values differ by at least 1/3600, far above f64 rounding
        prop_assert_eq!(a < b, a.to_f64() < b.to_f64());
    }

    #[test]
    fn padic_norm_is_multiplicative_and_ultrametric((x, y) in padic_pair()) {
        prop_assert_eq!(x.mul(&y).abs(), &x.abs() * &y.abs());
        prop_assert!(x.add(&y).abs() <= x.abs().max(y.abs()));
        prop_assert_eq!(x.add(&y).to_rational(), &x.to_rational() + &y.to_rational());
        prop_assert_eq!(x.mul(&y).to_rational(), &x.to_rational() * &y.to_rational());
    }

    #[test]
    fn polar_duality_is_an_involution(seed in any::<u64>()) {
        let p = random_origin_polygon(&mut ChaCha8Rng::seed_from_u64(seed));
        let back = p.polar_dual().unwrap().polar_dual().unwrap();
        prop_assert!(back == p);
    }

    #[test]
    fn polar_duality_reverses_inclusion(seed in any::<u64>(), t in 2i128..6) {
        let p = random_origin_polygon(&mut ChaCha8Rng::seed_from_u64(seed));
        let t = Rational::new(t, 1);
        let bigger = ConvexPolygon::new(p.vertices().iter().map(|v| [&v[0] * &t, &v[1] * &t]).collect()).unwrap();
        let (small_dual, big_dual) = (p.polar_dual().unwrap(), bigger.polar_dual().unwrap());
        for v in big_dual.vertices() {
            prop_assert!(small_dual.contains(v));
        }
    }

    #[test]
    fn real_mellin_matches_formula(n in 2usize..6, k in 0usize..6, ds in -0.45f64..8.0, im in -2.0f64..2.0) {
        let s = Complex64::new(n as f64 + ds, im);
        let formula = mellin_alpha_formula(n, k, s).unwrap();
        let quad = AlphaKernelReal::new(n, k).mellin_quadrature(s, 200).unwrap();
        let err = (quad - formula).norm() / formula.norm().max(1e-300);
        prop_assert!(err < 1e-8, "n={} k={} s={}: {:e}", n, k, s, err);
    }
}
