use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{RadonError, Result};
use crate::rational::Rational;

/// Digits shown when a scalar with infinite expansion is rendered.
pub const DEFAULT_PRECISION: u32 = 12;

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rejects non-primes and primes too large for single-character digits.
pub fn check_prime(q: u64) -> Result<()> {
    if is_prime(q) && q <= 36 {
        Ok(())
    } else {
        Err(RadonError::UnsupportedPrime(q))
    }
}

pub(crate) fn ipow(q: u64, e: u32) -> i128 {
    (q as i128).checked_pow(e).expect("p-adic mantissa overflow")
}

/// An element `q^val · unit` of `Z[1/q] ⊂ Q_q`, `unit` coprime to `q`.
///
/// Arithmetic is exact. Inputs with denominators prime to `q` are truncated
/// to a unit window of the requested precision when constructed from a
/// rational; nothing downstream truncates.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PAdic {
    q: u64,
    val: i32,
    unit: i128,
}

impl PAdic {
    pub fn zero(q: u64) -> Self {
        PAdic { q, val: 0, unit: 0 }
    }

    pub fn one(q: u64) -> Self {
        PAdic { q, val: 0, unit: 1 }
    }

    /// `q^val · m`, normalized so that the mantissa is prime to `q`.
    pub fn from_parts(q: u64, val: i32, m: i128) -> Self {
        if m == 0 {
            return PAdic::zero(q);
        }
        let qi = q as i128;
        let (mut val, mut m) = (val, m);
        while m % qi == 0 {
            m /= qi;
            val += 1;
        }
        PAdic { q, val, unit: m }
    }

    pub fn from_int(q: u64, m: i128) -> Self {
        PAdic::from_parts(q, 0, m)
    }

    /// The uniformizer power `π^k = q^k`.
    pub fn pi_pow(q: u64, k: i32) -> Self {
        PAdic { q, val: k, unit: 1 }
    }

    /// Embeds a rational; the part of the denominator prime to `q` is
    /// inverted modulo `q^precision`.
    pub fn from_rational(q: u64, r: &Rational, precision: u32) -> Result<Self> {
        let (n, d) = r.numer_denom();
        let to_i = |b: num_bigint::BigInt| {
            i128::try_from(b).map_err(|_| RadonError::PrecisionExceeded(format!("{r} does not fit the mantissa window")))
        };
        let n = PAdic::from_int(q, to_i(n)?);
        let d = PAdic::from_int(q, to_i(d)?);
        if n.is_zero() {
            return Ok(PAdic::zero(q));
        }
        Ok(n.mul(&d.inverse_approx(precision)?))
    }

    pub fn prime(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.unit == 0
    }

    pub fn valuation(&self) -> Result<i32> {
        if self.is_zero() {
            Err(RadonError::IndeterminateValuation)
        } else {
            Ok(self.val)
        }
    }

    /// Valuation with `v(0) = +∞` represented by `i32::MAX`.
    pub fn val_or_inf(&self) -> i32 {
        if self.is_zero() {
            i32::MAX
        } else {
            self.val
        }
    }

    pub fn unit(&self) -> i128 {
        self.unit
    }

    /// `|x| = q^{-v(x)}` as an exact rational.
    pub fn abs(&self) -> Rational {
        if self.is_zero() {
            Rational::zero()
        } else {
            Rational::pow_int(self.q as i128, -self.val)
        }
    }

    fn align(a: &PAdic, b: &PAdic) -> (i32, i128, i128) {
        let v = a.val.min(b.val);
        let sa = a.unit.checked_mul(ipow(a.q, (a.val - v) as u32)).expect("p-adic mantissa overflow");
        let sb = b.unit.checked_mul(ipow(a.q, (b.val - v) as u32)).expect("p-adic mantissa overflow");
        (v, sa, sb)
    }

    pub fn add(&self, other: &PAdic) -> PAdic {
        debug_assert_eq!(self.q, other.q);
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (v, a, b) = PAdic::align(self, other);
        PAdic::from_parts(self.q, v, a.checked_add(b).expect("p-adic mantissa overflow"))
    }

    pub fn neg(&self) -> PAdic {
        PAdic { unit: -self.unit, ..*self }
    }

    pub fn sub(&self, other: &PAdic) -> PAdic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PAdic) -> PAdic {
        debug_assert_eq!(self.q, other.q);
        if self.is_zero() || other.is_zero() {
            return PAdic::zero(self.q);
        }
        let unit = self.unit.checked_mul(other.unit).expect("p-adic mantissa overflow");
        PAdic { q: self.q, val: self.val + other.val, unit }
    }

    /// `π^k · x`.
    pub fn shift(&self, k: i32) -> PAdic {
        if self.is_zero() {
            *self
        } else {
            PAdic { val: self.val + k, ..*self }
        }
    }

    /// An element `y` with `v(x·y − 1) ≥ rel_precision`, namely
    /// `q^{-v} · (unit^{-1} mod q^{rel_precision})`.
    pub fn inverse_approx(&self, rel_precision: u32) -> Result<PAdic> {
        if self.is_zero() {
            return Err(RadonError::ZeroPoint);
        }
        let m = ipow(self.q, rel_precision);
        let u = self.unit.mod_floor(&m);
        let g = u.extended_gcd(&m);
        debug_assert_eq!(g.gcd, 1);
        Ok(PAdic::from_parts(self.q, -self.val, g.x.mod_floor(&m)))
    }

    /// Canonical representative of `x mod π^m O`: zero if `v(x) ≥ m`, else
    /// `q^v · (unit mod q^{m-v})` with a nonnegative residue.
    pub fn reduce(&self, m: i32) -> PAdic {
        if self.is_zero() || self.val >= m {
            return PAdic::zero(self.q);
        }
        let modulus = ipow(self.q, (m - self.val) as u32);
        PAdic::from_parts(self.q, self.val, self.unit.mod_floor(&modulus))
    }

    /// The principal part `x mod O` as `(e, a)` with `x ≡ a / q^e`,
    /// `0 ≤ a < q^e`; `(0, 0)` when `x ∈ O`.
    pub fn principal_part(&self) -> (u32, u64) {
        if self.is_zero() || self.val >= 0 {
            return (0, 0);
        }
        let e = (-self.val) as u32;
        let a = self.unit.mod_floor(&ipow(self.q, e));
        (e, a as u64)
    }

    /// Base-`q` digits of the unit part, least significant first. Nonnegative
    /// mantissas terminate; negative ones are cut at `precision` digits.
    pub fn unit_digits(&self, precision: u32) -> Vec<u32> {
        if self.is_zero() {
            return Vec::new();
        }
        let qi = self.q as i128;
        let mut out = Vec::new();
        if self.unit > 0 {
            let mut m = self.unit;
            while m > 0 {
                out.push((m % qi) as u32);
                m /= qi;
            }
        } else {
            let mut m = self.unit.mod_floor(&ipow(self.q, precision));
            for _ in 0..precision {
                out.push((m % qi) as u32);
                m /= qi;
            }
        }
        out
    }

    /// `"v:d0d1…"`, digits least significant first; `"0"` for zero.
    pub fn to_digit_string(&self, precision: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let digits: String =
            self.unit_digits(precision).iter().map(|d| std::char::from_digit(*d, 36).unwrap()).collect();
        format!("{}:{}", self.val, digits)
    }

    pub fn parse_digit_string(q: u64, s: &str) -> Result<PAdic> {
        let s = s.trim();
        if s == "0" {
            return Ok(PAdic::zero(q));
        }
        let (v, digits) = s.split_once(':').ok_or_else(|| RadonError::Parse(format!("digit string {s:?}")))?;
        let val: i32 = v.parse().map_err(|_| RadonError::Parse(format!("valuation in {s:?}")))?;
        let mut m: i128 = 0;
        for ch in digits.chars().rev() {
            let d = ch
                .to_digit(36)
                .filter(|d| (*d as u64) < q)
                .ok_or_else(|| RadonError::Parse(format!("digit {ch:?} in {s:?}")))?;
            m = m
                .checked_mul(q as i128)
                .and_then(|m| m.checked_add(d as i128))
                .ok_or_else(|| RadonError::PrecisionExceeded(s.to_string()))?;
        }
        if digits.is_empty() || m % q as i128 == 0 {
            return Err(RadonError::Parse(format!("leading digit of {s:?} must be nonzero")));
        }
        Ok(PAdic { q, val, unit: m })
    }

    /// The exact rational value.
    pub fn to_rational(&self) -> Rational {
        Rational::from_int(self.unit) * Rational::pow_int(self.q as i128, self.val)
    }
}

/// Order by valuation only, larger valuation first being "smaller" in norm.
pub fn cmp_norm(a: &PAdic, b: &PAdic) -> Ordering {
    b.val_or_inf().cmp(&a.val_or_inf())
}

impl fmt::Debug for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_digit_string(DEFAULT_PRECISION))
    }
}

/// The exact rational value; with a precision (`{:.8}`), the digit string
/// with that many unit digits.
impl fmt::Display for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = f.precision() {
            return write!(f, "{}", self.to_digit_string(p as u32));
        }
        write!(f, "{}", self.to_rational())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_and_abs() {
        let x = PAdic::from_int(3, 18);
        assert_eq!(x.valuation().unwrap(), 2);
        assert_eq!(x.abs(), Rational::new(1, 9));
        assert!(PAdic::zero(3).valuation().is_err());
        let h = PAdic::from_rational(2, &Rational::new(1, 2), 12).unwrap();
        assert_eq!(h.valuation().unwrap(), -1);
    }

    #[test]
    fn inverse_approx_is_close() {
        for q in [2u64, 3, 5] {
            let x = PAdic::from_parts(q, -2, 7 * q as i128 + 1);
            let y = x.inverse_approx(6).unwrap();
            let err = x.mul(&y).sub(&PAdic::one(q));
            assert!(err.val_or_inf() >= 6);
        }
    }

    #[test]
    fn reduce_is_canonical() {
        let x = PAdic::from_int(2, -1);
        let r = x.reduce(3);
        assert_eq!(r, PAdic::from_int(2, 7));
        assert!(PAdic::from_int(5, 25).reduce(2).is_zero());
        assert_eq!(PAdic::from_parts(3, -1, 5).principal_part(), (1, 2));
    }

    #[test]
    fn digit_strings_round_trip() {
        let x = PAdic::from_parts(3, -2, 1 + 2 * 3 + 9);
        let s = x.to_digit_string(12);
        assert_eq!(s, "-2:121");
        assert_eq!(PAdic::parse_digit_string(3, &s).unwrap(), x);
        assert!(PAdic::parse_digit_string(3, "0:01").is_err());
        assert_eq!(PAdic::from_int(2, -1).unit_digits(4), vec![1, 1, 1, 1]);
    }

    #[test]
    fn primes_only() {
        assert!(check_prime(4).is_err());
        assert!(check_prime(5).is_ok());
    }
}
