//! Exact integer-coefficient Laurent polynomials in the four symbols
//! `a, b, c, Q`.
//!
//! `Q` is kept formal. Numeric evaluation ties it to `Q = sqrt(b/a)`, and
//! [`LaurentValue::eliminate_b`] gives the canonical form modulo `b = a Q^2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::rmatrix::RParams;
use crate::C64;

/// Exponents of `(a, b, c, Q)`.
pub type Exponents = [i32; 4];

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentValue {
    // no zero coefficients stored
    terms: BTreeMap<Exponents, i64>,
}

impl LaurentValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, [0; 4])
    }

    pub fn constant(k: i64) -> Self {
        Self::monomial(k, [0; 4])
    }

    pub fn monomial(coef: i64, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if coef != 0 {
            terms.insert(exps, coef);
        }
        Self { terms }
    }

    pub fn a(e: i32) -> Self {
        Self::monomial(1, [e, 0, 0, 0])
    }

    pub fn b(e: i32) -> Self {
        Self::monomial(1, [0, e, 0, 0])
    }

    pub fn c(e: i32) -> Self {
        Self::monomial(1, [0, 0, e, 0])
    }

    pub fn q(e: i32) -> Self {
        Self::monomial(1, [0, 0, 0, e])
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, i64)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (e, k) in terms {
            v.add_term(e, k);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &i64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: Exponents) -> i64 {
        self.terms.get(&exps).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Exponents, coef: i64) {
        if coef == 0 {
            return;
        }
        let slot = self.terms.entry(exps).or_insert(0);
        *slot += coef;
        if *slot == 0 {
            self.terms.remove(&exps);
        }
    }

    /// Multiplies every term by the monomial `a^e0 b^e1 c^e2 Q^e3`.
    pub fn shift(&self, exps: Exponents) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, &k)| ([e[0] + exps[0], e[1] + exps[1], e[2] + exps[2], e[3] + exps[3]], k))
            .collect();
        Self { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Rewrites every `b^k` as `a^k Q^{2k}`: the canonical form modulo `b = a Q^2`.
    pub fn eliminate_b(&self) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(e, &k)| ([e[0] + e[1], 0, e[2], e[3] + 2 * e[1]], k)),
        )
    }

    /// Substitutes `a -> 1/a, b -> 1/b, c -> 1/c`, leaving `Q` alone.
    pub fn invert_weights(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, &k)| ([-e[0], -e[1], -e[2], e[3]], k)))
    }

    /// Substitutes `a -> 1/a, b -> 1/b, c -> 1/c, Q -> 1/Q`.
    pub fn invert_all(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, &k)| ([-e[0], -e[1], -e[2], -e[3]], k)))
    }

    /// Evaluates at explicit values of all four symbols.
    pub fn eval_at(&self, a: C64, b: C64, c: C64, q: C64) -> C64 {
        self.terms
            .iter()
            .map(|(e, &k)| {
                k as f64 * a.powi(e[0]) * b.powi(e[1]) * c.powi(e[2]) * q.powi(e[3])
            })
            .sum()
    }

    /// Evaluates with `a, b, c` from the parameters and `Q = sqrt(b/a)`.
    pub fn eval(&self, p: &RParams) -> C64 {
        self.eval_at(p.a, p.b, p.c, p.q())
    }
}

impl fmt::Display for LaurentValue {
    /// Terms in descending lexicographic order of `(e_a, e_b, e_c, e_Q)`,
    /// each written `coef a^e b^e c^e Q^e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, &k)) in self.terms.iter().rev().enumerate() {
            let mag = k.unsigned_abs();
            match (n, k < 0) {
                (0, false) => write!(f, "{mag}")?,
                (0, true) => write!(f, "-{mag}")?,
                (_, false) => write!(f, " + {mag}")?,
                (_, true) => write!(f, " - {mag}")?,
            }
            write!(f, " a^{} b^{} c^{} Q^{}", e[0], e[1], e[2], e[3])?;
        }
        Ok(())
    }
}

impl AddAssign<&LaurentValue> for LaurentValue {
    fn add_assign(&mut self, rhs: &LaurentValue) {
        for (e, &k) in &rhs.terms {
            self.add_term(*e, k);
        }
    }
}

impl Add for &LaurentValue {
    type Output = LaurentValue;
    fn add(self, rhs: &LaurentValue) -> LaurentValue {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentValue {
    type Output = LaurentValue;
    fn add(mut self, rhs: LaurentValue) -> LaurentValue {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentValue {
    type Output = LaurentValue;
    fn neg(self) -> LaurentValue {
        LaurentValue { terms: self.terms.iter().map(|(e, &k)| (*e, -k)).collect() }
    }
}

impl Sub for &LaurentValue {
    type Output = LaurentValue;
    fn sub(self, rhs: &LaurentValue) -> LaurentValue {
        self + &(-rhs)
    }
}

impl Mul for &LaurentValue {
    type Output = LaurentValue;
    fn mul(self, rhs: &LaurentValue) -> LaurentValue {
        let mut out = LaurentValue::zero();
        for (x, &k) in &self.terms {
            for (y, &l) in &rhs.terms {
                out.add_term([x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]], k * l);
            }
        }
        out
    }
}

impl Mul for LaurentValue {
    type Output = LaurentValue;
    fn mul(self, rhs: LaurentValue) -> LaurentValue {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentValue {
    fn sum<I: Iterator<Item = LaurentValue>>(iter: I) -> Self {
        iter.fold(LaurentValue::zero(), |acc, v| acc + v)
    }
}
