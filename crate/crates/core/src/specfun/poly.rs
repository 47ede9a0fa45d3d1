//! Classical orthogonal polynomials by three-term recurrence.

/// Chebyshev `T_k(t)`.
pub fn chebyshev_t(k: usize, t: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, t);
    if k == 0 {
        return p0;
    }
    for _ in 1..k {
        let p2 = 2.0 * t * p1 - p0;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Gegenbauer `C_k^λ(t)`; for `λ = 0` the normalized limit `T_k(t)` is
/// returned instead of the identically vanishing polynomial.
pub fn gegenbauer(k: usize, lambda: f64, t: f64) -> f64 {
    if lambda == 0.0 {
        return chebyshev_t(k, t);
    }
    let (mut p0, mut p1) = (1.0, 2.0 * lambda * t);
    if k == 0 {
        return p0;
    }
    for j in 1..k {
        let j = j as f64;
        let p2 = (2.0 * (j + lambda) * t * p1 - (j + 2.0 * lambda - 1.0) * p0) / (j + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Legendre `P_k(t) = C_k^{1/2}(t)`.
pub fn legendre(k: usize, t: f64) -> f64 {
    gegenbauer(k, 0.5, t)
}

/// Jacobi `P_m^{(a,b)}(x)`.
pub fn jacobi(m: usize, a: f64, b: f64, x: f64) -> f64 {
    jacobi_pair(m, a, b, x).0
}

/// `(P_m^{(a,b)}(x), P_{m-1}^{(a,b)}(x))`, the second being 0 for `m = 0`.
pub fn jacobi_pair(m: usize, a: f64, b: f64, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    if m == 0 {
        return (p0, 0.0);
    }
    let mut p1 = 0.5 * ((a + b + 2.0) * x + a - b);
    for j in 2..=m {
        let j = j as f64;
        let c = 2.0 * j + a + b;
        let a1 = 2.0 * j * (j + a + b) * (c - 2.0);
        let a2 = (c - 1.0) * (a * a - b * b);
        let a3 = (c - 2.0) * (c - 1.0) * c;
        let a4 = 2.0 * (j + a - 1.0) * (j + b - 1.0) * c;
        let p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    (p1, p0)
}

/// `d/dx P_m^{(a,b)}(x) = (m + a + b + 1)/2 · P_{m-1}^{(a+1,b+1)}(x)`.
pub fn jacobi_derivative(m: usize, a: f64, b: f64, x: f64) -> f64 {
    if m == 0 {
        return 0.0;
    }
    0.5 * (m as f64 + a + b + 1.0) * jacobi(m - 1, a + 1.0, b + 1.0, x)
}
