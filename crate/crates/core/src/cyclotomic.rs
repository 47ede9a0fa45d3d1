//! Exact arithmetic in the cyclotomic fields `Q(ζ_{q^N})`, `q` prime.
//!
//! Elements are sparse rational coefficient vectors in the power basis
//! `ζ^e`, `e = a + b·q^{N-1}` with `a < q^{N-1}` and `b ≤ q-2`. The single
//! relation `Φ_{q^N}(ζ) = Σ_{b<q} ζ^{b·q^{N-1}} = 0` rewrites any exponent
//! with `b = q-1` into that basis, so the representation is canonical and
//! equality is structural. Elements of different levels are compared and
//! combined after lifting along `ζ_{q^N} = ζ_{q^{N+d}}^{q^d}`, which maps
//! canonical exponents to canonical exponents.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_complex::Complex64;

use crate::rational::Rational;
use crate::value::Value;

#[derive(Clone)]
pub struct Cyclotomic {
    /// Residue characteristic; `0` marks an element of `Q` (level 0).
    q: u64,
    level: u32,
    terms: BTreeMap<u64, Rational>,
}

fn modulus(q: u64, level: u32) -> u64 {
    q.pow(level)
}

/// Adds `coeff·ζ^e` to a canonical term map at the given level.
fn insert_canonical(terms: &mut BTreeMap<u64, Rational>, q: u64, level: u32, e: u64, coeff: &Rational) {
    if coeff.is_zero() {
        return;
    }
    let mut push = |e: u64, c: &Rational| {
        let entry = terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            terms.remove(&e);
        }
    };
    if level == 0 {
        push(0, coeff);
        return;
    }
    let block = modulus(q, level - 1);
    let e = e % (block * q);
    if e / block == q - 1 {
        let a = e % block;
        let neg = -coeff;
        for b in 0..q - 1 {
            push(a + b * block, &neg);
        }
    } else {
        push(e, coeff);
    }
}

impl Cyclotomic {
    pub fn from_rational(r: &Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(0, r.clone());
        }
        Cyclotomic { q: 0, level: 0, terms }
    }

    /// `ζ_{q^level}^k`, stored at the smallest level that holds it.
    pub fn root_of_unity(q: u64, level: u32, k: u64) -> Self {
        let mut level = level;
        let mut k = k % modulus(q, level);
        while level > 0 && k % q == 0 {
            k /= q;
            level -= 1;
        }
        if level == 0 {
            return Cyclotomic::from_rational(&Rational::one());
        }
        let mut terms = BTreeMap::new();
        insert_canonical(&mut terms, q, level, k, &Rational::one());
        Cyclotomic { q, level, terms }
    }

    pub fn prime(&self) -> Option<u64> {
        (self.q != 0).then_some(self.q)
    }

    /// Level `N` of the field `Q(ζ_{q^N})` the element is stored in.
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn lift(&self, q: u64, level: u32) -> Self {
        assert!(level >= self.level, "cannot lower the level of a cyclotomic element");
        if self.q != 0 {
            assert_eq!(self.q, q, "mixing cyclotomic fields of different primes");
        }
        if level == self.level {
            return Cyclotomic { q: if level == 0 { self.q } else { q }, ..self.clone() };
        }
        let factor = modulus(q, level - self.level);
        let terms = self.terms.iter().map(|(e, c)| (e * factor, c.clone())).collect();
        Cyclotomic { q, level, terms }
    }

    fn common(&self, other: &Self) -> (u64, u32) {
        let q = match (self.q, other.q) {
            (0, q) | (q, 0) => q,
            (a, b) => {
                assert_eq!(a, b, "mixing cyclotomic fields of different primes");
                a
            }
        };
        (q, self.level.max(other.level))
    }

    /// The element as a rational, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplication by `ζ_{q^level}^k`.
    pub fn mul_root(&self, q: u64, level: u32, k: u64) -> Self {
        let root = Cyclotomic::root_of_unity(q, level, k);
        Value::mul(self, &root)
    }

    /// Complex embedding `ζ ↦ exp(2πi/q^N)`.
    pub fn to_complex(&self) -> Complex64 {
        if self.level == 0 {
            return Complex64::new(self.terms.get(&0).map_or(0.0, |c| c.to_f64()), 0.0);
        }
        let m = modulus(self.q, self.level) as f64;
        self.terms
            .iter()
            .map(|(e, c)| Complex64::from_polar(c.to_f64(), std::f64::consts::TAU * (*e as f64) / m))
            .sum()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level && (self.q == other.q || self.level == 0) {
            return self.terms == other.terms;
        }
        let (q, level) = self.common(other);
        self.lift(q, level).terms == other.lift(q, level).terms
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| if *e == 0 { format!("{c}") } else { format!("{c}*z^{e}") })
            .collect();
        if self.level == 0 {
            write!(f, "{}", parts.join(" + "))
        } else {
            write!(f, "[{}] in Q(z_{}^{})", parts.join(" + "), self.q, self.level)
        }
    }
}

impl Value for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic { q: 0, level: 0, terms: BTreeMap::new() }
    }

    fn from_rational(r: &Rational) -> Self {
        Cyclotomic::from_rational(r)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let (q, level) = self.common(other);
        let mut out = self.lift(q, level);
        let factor = modulus(q, level - other.level);
        for (e, c) in &other.terms {
            let e = e * factor;
            let entry = out.terms.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(&e);
            }
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let (q, level) = self.common(other);
        let a = self.lift(q, level);
        let b = other.lift(q, level);
        let m = modulus(q, level);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                insert_canonical(&mut terms, q, level, (ea + eb) % m, &(ca * cb));
            }
        }
        Cyclotomic { q, level, terms }
    }

    fn neg(&self) -> Self {
        Cyclotomic { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(), ..self.clone() }
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Value::zero();
        }
        Cyclotomic { terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(), ..self.clone() }
    }

    fn ring_name() -> &'static str {
        "cyclotomic"
    }
}

/// Unreduced accumulator for long sums of scaled roots of unity at a fixed
/// level; reduction to the canonical basis happens once, in [`finish`].
///
/// [`finish`]: CycloAccumulator::finish
pub struct CycloAccumulator {
    q: u64,
    level: u32,
    raw: HashMap<u64, Rational>,
}

impl CycloAccumulator {
    pub fn new(q: u64, level: u32) -> Self {
        CycloAccumulator { q, level, raw: HashMap::new() }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Adds `coeff·ζ_{q^level}^e` with `e` given at the accumulator level.
    pub fn add_term(&mut self, e: u64, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        let e = e % modulus(self.q, self.level);
        *self.raw.entry(e).or_insert_with(Rational::zero) += coeff;
    }

    /// Adds `scale·x·ζ^shift` (`shift` at the accumulator level).
    pub fn add_shifted(&mut self, x: &Cyclotomic, shift: u64, scale: &Rational) {
        assert!(x.level <= self.level, "accumulator level too small");
        let factor = modulus(self.q, self.level - x.level);
        for (e, c) in &x.terms {
            self.add_term(e * factor + shift, &(c * scale));
        }
    }

    pub fn finish(self) -> Cyclotomic {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.raw {
            insert_canonical(&mut terms, self.q, self.level, *e, c);
        }
        Cyclotomic { q: if self.level == 0 { 0 } else { self.q }, level: self.level, terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(q: u64, level: u32, k: u64) -> Cyclotomic {
        Cyclotomic::root_of_unity(q, level, k)
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for q in [2u64, 3, 5] {
            for level in 1..=3 {
                let m = q.pow(level);
                let s = (0..m).fold(Cyclotomic::zero(), |acc, k| acc.add(&z(q, level, k)));
                assert!(s.is_zero(), "q={q} level={level}: {s}");
            }
        }
    }

    #[test]
    fn roots_multiply_by_adding_exponents() {
        let a = z(5, 2, 7);
        let b = z(5, 2, 20);
        assert_eq!(a.mul(&b), z(5, 2, 2));
        assert_eq!(z(3, 3, 9), z(3, 1, 1));
        assert_eq!(z(2, 1, 1), Cyclotomic::from_rational(&Rational::from_int(-1)));
    }

    #[test]
    fn accumulator_matches_direct_sum() {
        let q = 3;
        let mut acc = CycloAccumulator::new(q, 3);
        let mut direct = Cyclotomic::zero();
        for k in 0..40u64 {
            let c = Rational::new(k as i128 % 7 - 3, 1 + k as i128 % 4);
            acc.add_term(k * 5, &c);
            direct = direct.add(&z(q, 3, k * 5).scale(&c));
        }
        assert_eq!(acc.finish(), direct);
    }

    #[test]
    fn complex_embedding_is_a_ring_map() {
        let a = z(5, 2, 3).add(&z(5, 1, 2).scale(&Rational::new(1, 3)));
        let b = z(5, 2, 11).neg();
        let lhs = a.mul(&b).to_complex();
        let rhs = a.to_complex() * b.to_complex();
        assert!((lhs - rhs).norm() < 1e-12);
    }
}
