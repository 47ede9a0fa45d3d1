//! The complex Radon transform on `u ⊗ Y`, `Y ∈ H^{p,q}`: `Inv ∘ M` is the
//! multiplicative convolution `α_{p,q} ∗`, inverted by `β_{p,q}`.

pub mod alpha;
pub mod beta;
pub mod zonal;

pub use alpha::{mellin_alpha_pq_formula, AlphaImageComplex, AlphaKernelComplex};
pub use beta::{inv_radial_complex, minv_apply_complex, BetaKernelComplex};
pub use zonal::{a_pq, a_pq_direct, harmonic_pq, ZonalKernelComplex};
