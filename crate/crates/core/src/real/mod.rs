//! The real Radon transform on `u ⊗ Y`, `Y ∈ H^k`: `Inv ∘ M` is the
//! multiplicative convolution `α_k ∗`, inverted by the distribution `β_k`.

pub mod alpha;
pub mod beta;
pub mod direct;
pub mod profile;
pub mod zonal;

pub use alpha::{mellin_alpha_formula, AlphaImage, AlphaKernelReal};
pub use beta::{inv_radial, minv_apply, BetaKernelReal};
pub use direct::radon_direct;
pub use profile::{BumpProfile, FnProfile, InvertedProfile, PowerProfile, RadialProfile};
pub use zonal::{a_k, a_k_direct, harmonic_y};
