//! Special functions and numerical kernels for the Archimedean transforms.

pub mod gamma;
pub mod jet;
pub mod poly;
pub mod quadrature;

pub use gamma::{gamma, gamma_ratio, gamma_real, ln_gamma, ln_gamma_real, sphere_area};
pub use jet::Jet;
pub use poly::{chebyshev_t, gegenbauer, jacobi, jacobi_derivative, legendre};
pub use quadrature::{
    composite_legendre, gauss_jacobi, gauss_legendre, integrate_right_endpoint, mellin_moment, regularized_beta_integral, PanelQuadrature, TanhSinh,
    QuadratureRule, DEFAULT_ORDER,
};
