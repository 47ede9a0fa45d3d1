//! Exact rationals with an `i128` fast path.
//!
//! Most values met in the p-adic computations are small powers of `q`
//! with short numerators, so arithmetic stays on `Ratio<i128>` and only
//! promotes to `BigRational` when a checked operation overflows.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::RadonError;

#[derive(Clone)]
enum Repr {
    Small(Ratio<i128>),
    Big(BigRational),
}

/// An exact rational number.
#[derive(Clone)]
pub struct Rational(Repr);

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(Ratio::zero()))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(Ratio::one()))
    }

    pub fn from_int(n: i128) -> Self {
        Rational(Repr::Small(Ratio::from_integer(n)))
    }

    /// `num / den`; panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(Repr::Small(Ratio::new(num, den)))
    }

    /// `base^exp` for any integer exponent; `base` must be nonzero when `exp < 0`.
    pub fn pow_int(base: i128, exp: i32) -> Self {
        let b = Rational::from_int(base);
        let mut acc = Rational::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &b;
        }
        if exp < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Repr::Big(b) => b.clone(),
        }
    }

    fn from_big(b: BigRational) -> Self {
        match (b.numer().to_i128(), b.denom().to_i128()) {
            (Some(n), Some(d)) => Rational(Repr::Small(Ratio::new_raw(n, d))),
            _ => Rational(Repr::Big(b)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(b) => b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_one(),
            Repr::Big(b) => b.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_negative(),
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        match &self.0 {
            Repr::Small(r) => Rational(Repr::Small(r.recip())),
            Repr::Big(b) => Rational::from_big(b.recip()),
        }
    }

    pub fn numer_denom(&self) -> (BigInt, BigInt) {
        let b = self.to_big();
        (b.numer().clone(), b.denom().clone())
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(r) => *r.numer() as f64 / *r.denom() as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    fn binop(
        &self,
        other: &Self,
        small: impl Fn(&Ratio<i128>, &Ratio<i128>) -> Option<Ratio<i128>>,
        big: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Self {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &other.0) {
            if let Some(r) = small(a, b) {
                return Rational(Repr::Small(r));
            }
        }
        Rational::from_big(big(&self.to_big(), &other.to_big()))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a == b,
            _ => self.to_big() == other.to_big(),
        }
    }
}

impl Eq for Rational {}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => {
                // cross multiplication may overflow; fall back to big ints
                match (i128::checked_mul(*a.numer(), *b.denom()), i128::checked_mul(*b.numer(), *a.denom())) {
                    (Some(x), Some(y)) => x.cmp(&y),
                    _ => self.to_big().cmp(&other.to_big()),
                }
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl std::hash::Hash for Rational {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        let (n, d) = self.numer_denom();
        n.hash(state);
        d.hash(state);
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Always `num/den`, also for integers, so serialized coefficients are uniform.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.numer_denom();
        write!(f, "{n}/{d}")
    }
}

impl FromStr for Rational {
    type Err = RadonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|e| RadonError::Parse(format!("rational {s:?}: {e}")))
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (parse(n)?, parse(d)?),
            None => (parse(s)?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(RadonError::Parse(format!("rational {s:?}: zero denominator")));
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n as i128)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident, $op:tt) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                self.binop(rhs, |a, b| a.$checked(b), |a, b| a $op b)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add, +);
forward_binop!(Sub, sub, checked_sub, -);
forward_binop!(Mul, mul, checked_mul, *);

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        self.binop(rhs, |a, b| a.checked_div(b), |a, b| a / b)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(r) => match r.numer().checked_neg() {
                Some(n) => Rational(Repr::Small(Ratio::new_raw(n, *r.denom()))),
                None => Rational::from_big(-Rational(Repr::Small(r)).to_big()),
            },
            Repr::Big(b) => Rational::from_big(-b),
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -self.clone()
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_to_big() {
        let big = Rational::pow_int(5, 50);
        let back = &big * &Rational::pow_int(5, -50);
        assert!(back.is_one());
        assert_eq!(Rational::pow_int(2, 130).to_string(), format!("{}/1", BigInt::from(2).pow(130)));
    }

    #[test]
    fn display_and_parse() {
        let r = Rational::new(-6, 8);
        assert_eq!(r.to_string(), "-3/4");
        assert_eq!("-3/4".parse::<Rational>().unwrap(), r);
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_int(7));
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn ordering_mixed_repr() {
        let a = Rational::pow_int(3, 90);
        let b = Rational::from_int(1);
        assert!(a > b);
        assert!(-a.clone() < b);
        assert_eq!(a.cmp(&a.clone()), Ordering::Equal);
    }
}
