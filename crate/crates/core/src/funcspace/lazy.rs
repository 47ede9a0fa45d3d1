use std::fmt;
use std::sync::Arc;

use crate::padic::{CellFunction, PVec};
use crate::rational::Rational;
use crate::value::Value;

use super::invariance::{invariance_level, InvarianceCertificate};

pub type Evaluator<V> = Arc<dyn Fn(&PVec) -> V + Send + Sync>;

/// An element of `C_{≤R}`: an exact evaluator on `F^n ∖ {0}` that vanishes
/// for `v(ξ) > R` and is constant on every `ξ + π^{v(ξ)+r} O^n`.
#[derive(Clone)]
pub struct LazyShellFunction<V: Value = Rational> {
    q: u64,
    n: usize,
    certificate: InvarianceCertificate,
    support_bound: i32,
    eval: Evaluator<V>,
}

impl<V: Value> LazyShellFunction<V> {
    pub fn new(
        q: u64,
        n: usize,
        certificate: InvarianceCertificate,
        support_bound: i32,
        eval: impl Fn(&PVec) -> V + Send + Sync + 'static,
    ) -> Self {
        LazyShellFunction { q, n, certificate, support_bound, eval: Arc::new(eval) }
    }

    /// A compactly supported function viewed in `C_-`, with its minimal
    /// certificate and support bound `max v` over its cells.
    pub fn from_cell_function(f: &CellFunction<V>) -> Self {
        let certificate = invariance_level(f);
        let bound = f.shell_range().map_or(i32::MIN / 2, |(_, hi)| hi);
        let g = f.clone();
        LazyShellFunction::new(f.prime(), f.dim(), certificate, bound, move |x| g.eval(x))
    }

    pub fn prime(&self) -> u64 {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn certificate(&self) -> InvarianceCertificate {
        self.certificate
    }

    pub fn level(&self) -> u32 {
        self.certificate.level
    }

    pub fn support_bound(&self) -> i32 {
        self.support_bound
    }

    pub fn eval(&self, x: &PVec) -> V {
        let v = x.val_or_inf();
        if v == i32::MAX || v > self.support_bound {
            return V::zero();
        }
        (self.eval)(x)
    }

    pub fn map<W: Value>(&self, f: impl Fn(V) -> W + Send + Sync + 'static) -> LazyShellFunction<W> {
        let inner = self.clone();
        LazyShellFunction::new(self.q, self.n, self.certificate, self.support_bound, move |x| f(inner.eval(x)))
    }

    /// `a·self + b·other`, certified at the larger of the two levels.
    pub fn combine(&self, a: &Rational, other: &Self, b: &Rational) -> Self {
        let (f, g) = (self.clone(), other.clone());
        let (a, b) = (a.clone(), b.clone());
        let cert = InvarianceCertificate { level: self.level().max(other.level()) };
        LazyShellFunction::new(self.q, self.n, cert, self.support_bound.max(other.support_bound), move |x| {
            f.eval(x).scale(&a).add(&g.eval(x).scale(&b))
        })
    }
}

impl<V: Value> fmt::Debug for LazyShellFunction<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LazyShellFunction")
            .field("q", &self.q)
            .field("n", &self.n)
            .field("r", &self.certificate.level)
            .field("support_bound", &self.support_bound)
            .finish()
    }
}
