use std::f64::consts::PI;

use crate::specfun::composite_legendre;

use super::profile::RadialProfile;
use super::zonal::harmonic_y;

/// Hyperplane integral `Rf(ω, t) = ∫_{ω·x = t} f dσ` of
/// `f = u ⊗ Y`, `Y = Re((x₁ + i x₂)^k)`, by direct quadrature on the
/// hyperplane: a line integral for `n = 2` and polar coordinates
/// (trapezoid in the angle, Gauss–Legendre in the radius) for `n = 3`.
pub fn radon_direct<P: RadialProfile>(n: usize, u: &P, k: usize, omega: &[f64], t: f64) -> f64 {
    let (_, hi) = u.support();
    assert!(hi.is_finite(), "direct Radon quadrature needs bounded support");
    if t.abs() >= hi {
        return 0.0;
    }
    let reach = (hi * hi - t * t).sqrt();
    let f = |x: &[f64]| {
        let r = x.iter().map(|c| c * c).sum::<f64>().sqrt();
        let unit: Vec<f64> = x.iter().map(|c| c / r).collect();
        u.eval(r) * harmonic_y(k, &unit)
    };
    match n {
        2 => {
            let perp = [-omega[1], omega[0]];
            composite_legendre(
                |s| f(&[t * omega[0] + s * perp[0], t * omega[1] + s * perp[1]]),
                -reach,
                reach,
                24,
                40,
            )
        }
        3 => {
            let (e, g) = orthonormal_complement(omega);
            let angles = 2 * k + 8;
            composite_legendre(
                |rho| {
                    let ring: f64 = (0..angles)
                        .map(|i| {
                            let phi = 2.0 * PI * i as f64 / angles as f64;
                            let (c, s) = (phi.cos(), phi.sin());
                            let x: Vec<f64> =
                                (0..3).map(|j| t * omega[j] + rho * (c * e[j] + s * g[j])).collect();
                            f(&x)
                        })
                        .sum();
                    rho * ring * 2.0 * PI / angles as f64
                },
                0.0,
                reach,
                24,
                40,
            )
        }
        _ => panic!("direct Radon quadrature is implemented for n = 2, 3"),
    }
}

fn orthonormal_complement(w: &[f64]) -> ([f64; 3], [f64; 3]) {
    let pick = if w[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let d: f64 = (0..3).map(|i| pick[i] * w[i]).sum();
    let mut e = [pick[0] - d * w[0], pick[1] - d * w[1], pick[2] - d * w[2]];
    let ne = e.iter().map(|c| c * c).sum::<f64>().sqrt();
    e.iter_mut().for_each(|c| *c /= ne);
    let g = [w[1] * e[2] - w[2] * e[1], w[2] * e[0] - w[0] * e[2], w[0] * e[1] - w[1] * e[0]];
    (e, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::alpha::AlphaKernelReal;
    use crate::real::profile::BumpProfile;

    #[test]
    fn direct_matches_alpha_convolution() {
        let u = BumpProfile::new(0.6, 2.4, vec![0.5, -0.3, 0.2]);
        for (n, k, omega) in [(2, 3, vec![0.6, 0.8]), (3, 2, vec![2.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0])] {
            let alpha = AlphaKernelReal::new(n, k);
            let y = harmonic_y(k, &omega);
            for t in [0.4, 0.9, 1.7] {
                let direct = radon_direct(n, &u, k, &omega, t);
                let conv = t.powi(n as i32 - 1) * alpha.convolve(&u, t) * y;
                assert!((direct - conv).abs() < 1e-8, "n={n} t={t}: {direct} vs {conv}");
                let flipped = radon_direct(n, &u, k, &omega, -t);
                assert!((flipped - (-1f64).powi(k as i32) * direct).abs() < 1e-10);
            }
            assert_eq!(radon_direct(n, &u, k, &omega, 2.5), 0.0);
        }
    }
}
