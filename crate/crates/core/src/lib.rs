//! Radon transform over local fields and its explicit inverses.
//!
//! The non-Archimedean half (`padic`, `funcspace`, `nonarch`) works over
//! `Q_p` with exact rational or cyclotomic values: every identity is checked
//! by equality, not by tolerance. The Archimedean half (`specfun`, `real`,
//! `complex`) works on K-isotypic components through multiplicative
//! convolution on `R_{>0}`, with Mellin transforms evaluated both by
//! quadrature and by closed Gamma-function formulas. `support` holds the
//! planar convexity demonstration for non-K-finite functions.

pub mod complex;
pub mod cyclotomic;
pub mod error;
pub mod funcspace;
pub mod nonarch;
pub mod padic;
pub mod rational;
pub mod real;
pub mod specfun;
pub mod support;
pub mod value;
pub mod verify;

pub use cyclotomic::Cyclotomic;
pub use error::{RadonError, Result};
pub use rational::Rational;
pub use value::Value;
