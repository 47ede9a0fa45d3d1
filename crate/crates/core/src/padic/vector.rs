use std::fmt;

use crate::error::{RadonError, Result};
use crate::padic::scalar::PAdic;
use crate::rational::Rational;

/// A point of `Q_q^n` with coordinates in `Z[1/q]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PVec {
    q: u64,
    coords: Vec<PAdic>,
}

impl PVec {
    pub fn new(q: u64, coords: Vec<PAdic>) -> Self {
        debug_assert!(coords.iter().all(|c| c.prime() == q));
        PVec { q, coords }
    }

    pub fn zero(q: u64, n: usize) -> Self {
        PVec { q, coords: vec![PAdic::zero(q); n] }
    }

    pub fn from_ints(q: u64, xs: &[i128]) -> Self {
        PVec { q, coords: xs.iter().map(|x| PAdic::from_int(q, *x)).collect() }
    }

    /// Standard basis vector `e_j` of `Q_q^n`.
    pub fn basis(q: u64, n: usize, j: usize) -> Self {
        let mut v = PVec::zero(q, n);
        v.coords[j] = PAdic::one(q);
        v
    }

    pub fn prime(&self) -> u64 {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[PAdic] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &PAdic {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(PAdic::is_zero)
    }

    /// `v(x) = min_i v(x_i)`, so that `‖x‖ = q^{-v(x)}`.
    pub fn valuation(&self) -> Result<i32> {
        if self.is_zero() {
            return Err(RadonError::IndeterminateValuation);
        }
        Ok(self.val_or_inf())
    }

    pub fn val_or_inf(&self) -> i32 {
        self.coords.iter().map(PAdic::val_or_inf).min().unwrap_or(i32::MAX)
    }

    pub fn norm(&self) -> Rational {
        if self.is_zero() {
            Rational::zero()
        } else {
            Rational::pow_int(self.q as i128, -self.val_or_inf())
        }
    }

    /// Smallest coordinate index of maximal norm.
    pub fn dominant_index(&self) -> Option<usize> {
        let v = self.val_or_inf();
        if v == i32::MAX {
            return None;
        }
        self.coords.iter().position(|c| c.val_or_inf() == v)
    }

    pub fn add(&self, other: &PVec) -> PVec {
        self.zip(other, PAdic::add)
    }

    pub fn sub(&self, other: &PVec) -> PVec {
        self.zip(other, PAdic::sub)
    }

    fn zip(&self, other: &PVec, f: impl Fn(&PAdic, &PAdic) -> PAdic) -> PVec {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        PVec { q: self.q, coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn scale(&self, t: &PAdic) -> PVec {
        PVec { q: self.q, coords: self.coords.iter().map(|c| c.mul(t)).collect() }
    }

    /// `π^k · x`.
    pub fn shift(&self, k: i32) -> PVec {
        PVec { q: self.q, coords: self.coords.iter().map(|c| c.shift(k)).collect() }
    }

    pub fn neg(&self) -> PVec {
        PVec { q: self.q, coords: self.coords.iter().map(PAdic::neg).collect() }
    }

    /// The bilinear pairing `ξ·x = Σ ξ_i x_i`.
    pub fn dot(&self, other: &PVec) -> PAdic {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.coords.iter().zip(&other.coords).fold(PAdic::zero(self.q), |acc, (a, b)| acc.add(&a.mul(b)))
    }

    /// Coordinatewise canonical representative modulo `π^m O^n`.
    pub fn reduce(&self, m: i32) -> PVec {
        PVec { q: self.q, coords: self.coords.iter().map(|c| c.reduce(m)).collect() }
    }

    /// Matrix-vector product `g·x` for a matrix with entries in `Z[1/q]`.
    pub fn apply(g: &[Vec<PAdic>], x: &PVec) -> PVec {
        PVec {
            q: x.q,
            coords: g
                .iter()
                .map(|row| row.iter().zip(&x.coords).fold(PAdic::zero(x.q), |acc, (a, b)| acc.add(&a.mul(b))))
                .collect(),
        }
    }
}

impl fmt::Debug for PVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coords).finish()
    }
}

impl fmt::Display for PVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = match f.precision() {
            Some(p) => self.coords.iter().map(|c| format!("{c:.p$}")).collect(),
            None => self.coords.iter().map(|c| c.to_string()).collect(),
        };
        write!(f, "({})", parts.join(", "))
    }
}
