//! The non-Archimedean Radon calculus over `Q_q^n`, all exact: the transform
//! `M`, the regularized power distributions and `β`, the inverse `A_β`, the
//! Fourier pair `F`, `F′` over a cyclotomic value ring, and the Černov
//! inversion formula.

pub mod chernov;
pub mod fourier;
pub mod pairing;
pub mod radon;

pub use chernov::{cavalieri_integral, chernov_invert, kochubei_integral};
pub use fourier::{fourier_f, fourier_f_cells, fourier_fprime, fourier_fprime_as_function, Character};
pub use pairing::{BetaDistribution, RegularizedPower};
pub use radon::{apply_a_beta, apply_a_beta_with, radon_fiber, radon_m, radon_m_as_function, LinearMap, StabilizationOptions};
