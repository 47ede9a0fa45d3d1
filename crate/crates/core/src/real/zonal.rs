use std::f64::consts::PI;

use num_complex::Complex64;

use crate::specfun::gegenbauer;

/// `a_k(t)`: the normalized Gegenbauer polynomial `C_k^{(n−2)/2}(t) / C_k^{(n−2)/2}(1)`,
/// which is `T_k(t)` for `n = 2`. Scalar by which slice averaging acts on
/// degree-`k` spherical harmonics.
pub fn a_k(n: usize, k: usize, t: f64) -> f64 {
    assert!(n >= 2, "dimension must be at least 2");
    let lambda = (n as f64 - 2.0) / 2.0;
    gegenbauer(k, lambda, t) / gegenbauer(k, lambda, 1.0)
}

/// The degree-`k` harmonic `Y(x) = Re((x₁ + i x₂)^k)` on the unit sphere.
pub fn harmonic_y(k: usize, x: &[f64]) -> f64 {
    Complex64::new(x[0], x[1]).powu(k as u32).re
}

/// `a_k(t)` by averaging `Y = Re((x₁ + i x₂)^k)` over the slice
/// `{ω ∈ S^{n−1} : ω·e₁ = t}` and dividing by `Y(e₁) = 1`. For `n = 2` the
/// slice is two points; for `n = 3` it is a circle, averaged by the
/// trapezoid rule with `points` nodes (exact for `points > k`).
pub fn a_k_direct(n: usize, k: usize, t: f64, points: usize) -> f64 {
    let c = (1.0 - t * t).sqrt();
    match n {
        2 => 0.5 * (harmonic_y(k, &[t, c]) + harmonic_y(k, &[t, -c])),
        3 => {
            let s: f64 = (0..points)
                .map(|i| {
                    let phi = 2.0 * PI * i as f64 / points as f64;
                    harmonic_y(k, &[t, c * phi.cos(), c * phi.sin()])
                })
                .sum();
            s / points as f64
        }
        _ => panic!("direct slice averaging is implemented for n = 2, 3"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::legendre;

    #[test]
    fn low_degree_values() {
        for n in 2..6 {
            assert_eq!(a_k(n, 0, 0.3), 1.0);
            assert!((a_k(n, 1, 0.3) - 0.3).abs() < 1e-15);
            assert!((a_k(n, 5, 1.0) - 1.0).abs() < 1e-14);
        }
        assert!((a_k(3, 2, 0.5) + 0.125).abs() < 1e-15);
        assert!((a_k(3, 4, 0.2) - legendre(4, 0.2)).abs() < 1e-15);
    }

    #[test]
    fn direct_averages() {
        assert!((a_k_direct(2, 3, 0.4, 0) - (3.0 * 0.4f64.acos()).cos()).abs() < 1e-14);
        assert!((a_k_direct(3, 2, 0.3, 16) - legendre(2, 0.3)).abs() < 1e-14);
        assert!((a_k_direct(3, 0, 0.7, 16) - 1.0).abs() < 1e-15);
    }
}
