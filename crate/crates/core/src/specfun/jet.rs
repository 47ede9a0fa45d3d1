//! Truncated Taylor series at a point.

use std::ops::{Add, Mul, Neg, Sub};

use smallvec::{smallvec, SmallVec};

pub type Coeffs = SmallVec<[f64; 8]>;

/// `Σ_{k ≤ N} c_k (t − t₀)^k`; `c_k = f^{(k)}(t₀) / k!`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    pub t0: f64,
    pub coeffs: Coeffs,
}

impl Jet {
    pub fn constant(t0: f64, value: f64, order: usize) -> Jet {
        let mut coeffs: Coeffs = smallvec![0.0; order + 1];
        coeffs[0] = value;
        Jet { t0, coeffs }
    }

    /// The identity function `t`.
    pub fn variable(t0: f64, order: usize) -> Jet {
        let mut j = Jet::constant(t0, t0, order);
        if order > 0 {
            j.coeffs[1] = 1.0;
        }
        j
    }

    /// `t ↦ r / t` at `t₀ ≠ 0`.
    pub fn reciprocal_map(r: f64, t0: f64, order: usize) -> Jet {
        let coeffs = (0..=order).map(|k| r * (-1f64).powi(k as i32) * t0.powi(-(k as i32) - 1)).collect();
        Jet { t0, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// `f^{(k)}(t₀)`, or `None` past the stored order.
    pub fn derivative(&self, k: usize) -> Option<f64> {
        let fact: f64 = (1..=k).map(|j| j as f64).product();
        self.coeffs.get(k).map(|c| c * fact)
    }

    /// The jet of `f'`, one order shorter.
    pub fn differentiate(&self) -> Jet {
        let coeffs = if self.order() == 0 {
            smallvec![0.0]
        } else {
            (1..self.coeffs.len()).map(|k| k as f64 * self.coeffs[k]).collect()
        };
        Jet { t0: self.t0, coeffs }
    }

    pub fn scale(&self, s: f64) -> Jet {
        Jet { t0: self.t0, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn add_scalar(&self, s: f64) -> Jet {
        let mut j = self.clone();
        j.coeffs[0] += s;
        j
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0.0)
    }

    pub fn recip(&self) -> Jet {
        let a = &self.coeffs;
        let mut b: Coeffs = smallvec![0.0; a.len()];
        b[0] = 1.0 / a[0];
        for k in 1..a.len() {
            let s: f64 = (1..=k).map(|j| a[j] * b[k - j]).sum();
            b[k] = -s / a[0];
        }
        Jet { t0: self.t0, coeffs: b }
    }

    pub fn exp(&self) -> Jet {
        let a = &self.coeffs;
        let mut b: Coeffs = smallvec![0.0; a.len()];
        b[0] = a[0].exp();
        for k in 1..a.len() {
            let s: f64 = (1..=k).map(|j| j as f64 * a[j] * b[k - j]).sum();
            b[k] = s / k as f64;
        }
        Jet { t0: self.t0, coeffs: b }
    }

    /// Requires a positive value at `t₀`.
    pub fn ln(&self) -> Jet {
        let a = &self.coeffs;
        let mut b: Coeffs = smallvec![0.0; a.len()];
        b[0] = a[0].ln();
        for k in 1..a.len() {
            let s: f64 = (1..k).map(|j| j as f64 * b[j] * a[k - j]).sum();
            b[k] = (a[k] - s / k as f64) / a[0];
        }
        Jet { t0: self.t0, coeffs: b }
    }

    /// `f^p`, requiring a positive value at `t₀`.
    pub fn powf(&self, p: f64) -> Jet {
        let a = &self.coeffs;
        let mut b: Coeffs = smallvec![0.0; a.len()];
        b[0] = a[0].powf(p);
        for k in 1..a.len() {
            let s: f64 = (1..=k).map(|j| (p * j as f64 - (k - j) as f64) * a[j] * b[k - j]).sum();
            b[k] = s / (k as f64 * a[0]);
        }
        Jet { t0: self.t0, coeffs: b }
    }

    /// `Σ p_i f^i` by Horner's rule.
    pub fn poly(&self, p: &[f64]) -> Jet {
        let mut acc = Jet::constant(self.t0, 0.0, self.order());
        for c in p.iter().rev() {
            acc = (&acc * self).add_scalar(*c);
        }
        acc
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, o: &Jet) -> Jet {
        Jet { t0: self.t0, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, o: &Jet) -> Jet {
        Jet { t0: self.t0, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, o: &Jet) -> Jet {
        let n = self.coeffs.len().min(o.coeffs.len());
        let coeffs = (0..n).map(|k| (0..=k).map(|j| self.coeffs[j] * o.coeffs[k - j]).sum()).collect();
        Jet { t0: self.t0, coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bump(x: &Jet) -> Jet {
        let one_minus = (x * x).scale(-1.0).add_scalar(1.0);
        one_minus.recip().scale(-1.0).exp()
    }

    #[test]
    fn elementary_functions() {
        let x = Jet::variable(0.3, 6);
        let e = x.exp();
        for k in 0..=6 {
            assert!((e.derivative(k).unwrap() - 0.3f64.exp()).abs() < 1e-14);
        }
        let l = x.add_scalar(1.0).ln();
        // d³/dt³ ln(1+t) = 2/(1+t)³
        assert!((l.derivative(3).unwrap() - 2.0 / 1.3f64.powi(3)).abs() < 1e-13);
        let p = x.add_scalar(1.0).powf(-0.5);
        let r = x.add_scalar(1.0).ln().scale(-0.5).exp();
        for (a, b) in p.coeffs.iter().zip(&r.coeffs) {
            assert!((a - b).abs() < 1e-14);
        }
        let inv = &x.recip() * &x;
        assert!((inv.value() - 1.0).abs() < 1e-15 && inv.coeffs[1..].iter().all(|c| c.abs() < 1e-13));
    }

    #[test]
    fn chain_rule_through_reciprocal_map() {
        let (r, t0, h) = (0.7, 1.3, 1e-3);
        let g = |s: f64| bump(&Jet::constant(0.0, s, 0)).value() * (1.0 + s);
        let j = Jet::reciprocal_map(r, t0, 4);
        let jet = &bump(&j) * &j.add_scalar(1.0);
        let f = |t: f64| g(r / t);
        let d1 = (f(t0 + h) - f(t0 - h)) / (2.0 * h);
        let d2 = (f(t0 + h) - 2.0 * f(t0) + f(t0 - h)) / (h * h);
        assert!((jet.value() - f(t0)).abs() < 1e-15);
        assert!((jet.derivative(1).unwrap() - d1).abs() < 1e-5);
        assert!((jet.derivative(2).unwrap() - d2).abs() < 1e-4);
    }

    #[test]
    fn differentiate_shifts() {
        let x = Jet::variable(2.0, 4);
        let cube = x.poly(&[0.0, 0.0, 0.0, 1.0]);
        let d = cube.differentiate();
        assert_eq!(d.order(), 3);
        assert!((d.value() - 12.0).abs() < 1e-14);
        assert!((d.derivative(1).unwrap() - 12.0).abs() < 1e-14);
    }
}
