//! The abstract value ring for p-adic function spaces.
//!
//! Two realizations: [`Rational`] (default) and [`crate::Cyclotomic`], the
//! latter needed only once an additive character enters.

use std::fmt::Debug;

use crate::rational::Rational;

pub trait Value: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Short tag used in serialized cell functions.
    fn ring_name() -> &'static str;

    fn one() -> Self {
        Self::from_rational(&Rational::one())
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn add_assign(&mut self, other: &Self) {
        *self = Value::add(self, other);
    }
}

impl Value for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn ring_name() -> &'static str {
        "rational"
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
}
