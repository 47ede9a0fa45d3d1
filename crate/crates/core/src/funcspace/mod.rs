//! Function spaces on `F^n ∖ {0}`: certified invariance levels, lazy
//! elements of `C_-`, and the multiplicative convolution algebra with its
//! involution `σ`.

pub mod invariance;
pub mod lazy;
pub mod mult;

pub use invariance::{invariance_level, InvarianceCertificate};
pub use lazy::LazyShellFunction;
pub use mult::MultKernel;
