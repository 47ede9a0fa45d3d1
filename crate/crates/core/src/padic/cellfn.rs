use std::collections::HashMap;

use serde_json::{json, Value as Json};

use crate::error::{RadonError, Result};
use crate::padic::cell::{Cell, CellRelation};
use crate::padic::scalar::{check_prime, PAdic, DEFAULT_PRECISION};
use crate::padic::vector::PVec;
use crate::rational::Rational;
use crate::value::Value;

/// A finite linear combination `Σ a_i 1_{C_i}` of cell indicators on `Q_q^n`.
///
/// Built through [`CellFunction::new`] the cells are pairwise disjoint; the
/// unchecked [`CellFunction::from_combination`] admits nested cells, which
/// every linear operation handles unchanged.
#[derive(Clone, Debug)]
pub struct CellFunction<V: Value = Rational> {
    q: u64,
    n: usize,
    entries: Vec<(Cell, V)>,
}

impl<V: Value> CellFunction<V> {
    pub fn zero(q: u64, n: usize) -> Self {
        CellFunction { q, n, entries: Vec::new() }
    }

    /// Validated constructor: cells must be pairwise disjoint and, with
    /// `require_cc`, avoid the origin.
    pub fn new(q: u64, n: usize, entries: Vec<(Cell, V)>, require_cc: bool) -> Result<Self> {
        check_prime(q)?;
        for (cell, _) in &entries {
            if cell.dim() != n {
                return Err(RadonError::DimensionMismatch { expected: n, found: cell.dim() });
            }
            if cell.prime() != q {
                return Err(RadonError::InvalidArgument(format!("cell {cell} is not over Q_{q}")));
            }
            if require_cc && cell.contains_zero() {
                return Err(RadonError::ZeroInSupport(cell.to_string()));
            }
        }
        for (i, (a, _)) in entries.iter().enumerate() {
            for (b, _) in &entries[i + 1..] {
                if a.relation(b) != CellRelation::Disjoint {
                    return Err(RadonError::Overlap(a.to_string(), b.to_string()));
                }
            }
        }
        Ok(CellFunction { q, n, entries })
    }

    /// Linear combination of possibly overlapping cells.
    pub fn from_combination(q: u64, n: usize, entries: Vec<(Cell, V)>) -> Self {
        debug_assert!(entries.iter().all(|(c, _)| c.dim() == n && c.prime() == q));
        CellFunction { q, n, entries: entries.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn indicator(cell: Cell) -> Self {
        CellFunction { q: cell.prime(), n: cell.dim(), entries: vec![(cell, V::one())] }
    }

    pub fn prime(&self) -> u64 {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(Cell, V)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn eval(&self, x: &PVec) -> V {
        let mut acc = V::zero();
        for (cell, a) in &self.entries {
            if cell.contains(x) {
                acc.add_assign(a);
            }
        }
        acc
    }

    /// `∫ f dx = Σ a_i mes(C_i)`.
    pub fn integrate(&self) -> V {
        let mut acc = V::zero();
        for (cell, a) in &self.entries {
            acc.add_assign(&a.scale(&cell.measure()));
        }
        acc
    }

    pub fn max_level(&self) -> Option<i32> {
        self.entries.iter().map(|(c, _)| c.level()).max()
    }

    pub fn min_level(&self) -> Option<i32> {
        self.entries.iter().map(|(c, _)| c.level()).min()
    }

    /// True when no cell meets the origin, i.e. the function lies in `C_c`.
    pub fn avoids_zero(&self) -> bool {
        self.entries.iter().all(|(c, _)| !c.contains_zero())
    }

    /// Range `[lo, hi]` of point valuations over the support (cells must avoid 0).
    pub fn shell_range(&self) -> Option<(i32, i32)> {
        let vals: Vec<i32> = self.entries.iter().filter_map(|(c, _)| c.point_valuation()).collect();
        Some((*vals.iter().min()?, *vals.iter().max()?))
    }

    /// The same function with every cell split to `level`; equal cells merged.
    pub fn refine(&self, level: i32) -> Self {
        let mut map: HashMap<Cell, V> = HashMap::new();
        let mut order = Vec::new();
        for (cell, a) in &self.entries {
            for sub in cell.descendants(level) {
                match map.get_mut(&sub) {
                    Some(v) => v.add_assign(a),
                    None => {
                        order.push(sub.clone());
                        map.insert(sub, a.clone());
                    }
                }
            }
        }
        let entries = order
            .into_iter()
            .filter_map(|c| {
                let v = map.remove(&c)?;
                (!v.is_zero()).then_some((c, v))
            })
            .collect();
        CellFunction { q: self.q, n: self.n, entries }
    }

    /// Equivalent function on pairwise disjoint cells, splitting only the
    /// cells that contain other cells of the combination.
    pub fn disjoint_form(&self) -> Self {
        let mut sorted: Vec<&(Cell, V)> = self.entries.iter().collect();
        sorted.sort_by_key(|(c, _)| c.level());
        let mut groups: Vec<(Cell, Vec<(Cell, V)>)> = Vec::new();
        for (cell, a) in sorted {
            match groups.iter_mut().find(|(top, _)| top.relation(cell) != CellRelation::Disjoint) {
                Some((_, members)) => members.push((cell.clone(), a.clone())),
                None => groups.push((cell.clone(), vec![(cell.clone(), a.clone())])),
            }
        }
        let mut out = Vec::new();
        for (top, members) in groups {
            emit_disjoint(&top, V::zero(), members, &mut out);
        }
        CellFunction { q: self.q, n: self.n, entries: out }
    }

    pub fn is_zero_function(&self) -> bool {
        self.disjoint_form().entries.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        CellFunction { q: self.q, n: self.n, entries }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|v| v.scale(r))
    }

    pub fn mul_value(&self, c: &V) -> Self {
        self.map(|v| v.mul(c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.map(V::neg))
    }

    pub fn map<W: Value>(&self, f: impl Fn(&V) -> W) -> CellFunction<W> {
        CellFunction {
            q: self.q,
            n: self.n,
            entries: self.entries.iter().map(|(c, v)| (c.clone(), f(v))).filter(|(_, w)| !w.is_zero()).collect(),
        }
    }

    /// Pointwise equality as functions.
    pub fn same_function(&self, other: &Self) -> bool {
        self.sub(other).is_zero_function()
    }
}

fn emit_disjoint<V: Value>(cell: &Cell, base: V, members: Vec<(Cell, V)>, out: &mut Vec<(Cell, V)>) {
    let mut base = base;
    let mut inner = Vec::new();
    for (c, a) in members {
        if c.level() == cell.level() {
            base.add_assign(&a);
        } else {
            inner.push((c, a));
        }
    }
    if inner.is_empty() {
        if !base.is_zero() {
            out.push((cell.clone(), base));
        }
        return;
    }
    for child in cell.children() {
        let (sub, rest): (Vec<_>, Vec<_>) = inner.into_iter().partition(|(c, _)| child.contains(c.center()));
        inner = rest;
        if sub.is_empty() {
            if !base.is_zero() {
                out.push((child, base.clone()));
            }
        } else {
            emit_disjoint(&child, base.clone(), sub, out);
        }
    }
}

impl CellFunction<Rational> {
    /// `{q, n, value_ring, cells: [{center, level, coeff}]}` with centers as
    /// digit strings `"v:d0d1…"`.
    pub fn to_json(&self) -> Json {
        let cells: Vec<Json> = self
            .entries
            .iter()
            .map(|(c, a)| {
                let center: Vec<String> =
                    c.center().coords().iter().map(|x| x.to_digit_string(DEFAULT_PRECISION)).collect();
                json!({ "center": center, "level": c.level(), "coeff": a.to_string() })
            })
            .collect();
        json!({ "q": self.q, "n": self.n, "value_ring": Rational::ring_name(), "cells": cells })
    }

    pub fn from_json(j: &Json) -> Result<Self> {
        let bad = |what: &str| RadonError::Parse(format!("cell function JSON: {what}"));
        let q = j["q"].as_u64().ok_or_else(|| bad("q"))?;
        let n = j["n"].as_u64().ok_or_else(|| bad("n"))? as usize;
        if j["value_ring"].as_str() != Some(Rational::ring_name()) {
            return Err(bad("value_ring"));
        }
        let mut entries = Vec::new();
        for c in j["cells"].as_array().ok_or_else(|| bad("cells"))? {
            let coords = c["center"]
                .as_array()
                .ok_or_else(|| bad("center"))?
                .iter()
                .map(|d| PAdic::parse_digit_string(q, d.as_str().unwrap_or("")))
                .collect::<Result<Vec<_>>>()?;
            let level = c["level"].as_i64().ok_or_else(|| bad("level"))? as i32;
            let coeff: Rational = c["coeff"].as_str().ok_or_else(|| bad("coeff"))?.parse()?;
            entries.push((Cell::new(PVec::new(q, coords), level), coeff));
        }
        CellFunction::new(q, n, entries, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shell(q: u64, n: usize) -> CellFunction {
        CellFunction::from_combination(
            q,
            n,
            vec![(Cell::ball(q, n, 0), Rational::one()), (Cell::ball(q, n, 1), Rational::from_int(-1))],
        )
    }

    #[test]
    fn integrals() {
        assert_eq!(CellFunction::<Rational>::indicator(Cell::ball(2, 1, 0)).integrate(), Rational::one());
        assert_eq!(shell(2, 1).integrate(), Rational::new(1, 2));
        let f = CellFunction::from_combination(
            2,
            2,
            vec![(Cell::ball(2, 2, 0), Rational::from_int(3)), (Cell::ball(2, 2, 1), Rational::from_int(-1))],
        );
        assert_eq!(f.integrate(), Rational::new(11, 4));
    }

    #[test]
    fn sphere_is_twelve_cells() {
        let d = shell(2, 2).disjoint_form();
        let fine = d.refine(2);
        assert_eq!(fine.entries().len(), 12);
        assert_eq!(d.refine(1).entries().len(), 3);
        assert!(CellFunction::new(2, 2, fine.entries().to_vec(), true).is_ok());
        assert!(CellFunction::new(2, 2, vec![(Cell::ball(2, 2, 3), Rational::one())], true).is_err());
        assert!(CellFunction::<Rational>::new(2, 2, vec![], true).unwrap().is_empty());
    }

    #[test]
    fn refine_preserves_function() {
        let f = shell(3, 2);
        let r = f.refine(2);
        assert_eq!(r.integrate(), f.integrate());
        assert_eq!(r.refine(2).entries().len(), r.entries().len());
        assert!(r.same_function(&f));
        let left: Vec<Cell> = CellFunction::<Rational>::indicator(Cell::ball(2, 1, 0))
            .refine(1)
            .entries()
            .iter()
            .map(|(c, _)| c.clone())
            .collect();
        assert_eq!(left, vec![Cell::ball(2, 1, 1), Cell::new(PVec::from_ints(2, &[1]), 1)]);
    }

    #[test]
    fn overlap_rejected() {
        let e = vec![(Cell::ball(3, 2, 0), Rational::one()), (Cell::ball(3, 2, 2), Rational::one())];
        assert!(matches!(CellFunction::new(3, 2, e, false), Err(RadonError::Overlap(..))));
    }

    #[test]
    fn json_round_trip() {
        let f = shell(5, 2).disjoint_form();
        let j = f.to_json();
        let back = CellFunction::from_json(&j).unwrap();
        assert_eq!(back.to_json().to_string(), j.to_string());
        assert!(back.same_function(&f));
    }
}
