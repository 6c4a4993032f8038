//! Truncated Laurent series in `λ^{-1}` with a finite principal part.
//!
//! A series stores the coefficients of `λ^e` for `e` in a contiguous range
//! and a precision `known_from`: coefficients of exponents below it are
//! unknown (never assumed zero). `known_from == None` marks an exact series
//! (a Laurent polynomial).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::Ring;
use crate::error::{Error, Result};

pub const DEFAULT_VAR: &str = "λ";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, PartialEq)]
pub struct LaurentSeries<C> {
    var: &'static str,
    lo: i64,
    coeffs: Vec<C>,
    known_from: Option<i64>,
}

fn max_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(x.max(y)),
    }
}

impl<C: Ring> LaurentSeries<C> {
    /// Series with `coeffs[k]` the coefficient of `λ^(lo + k)`.
    pub fn new(var: &'static str, lo: i64, coeffs: Vec<C>, known_from: Option<i64>) -> Self {
        let mut s = LaurentSeries { var, lo, coeffs, known_from };
        s.normalize();
        s
    }

    pub fn exact(lo: i64, coeffs: Vec<C>) -> Self {
        Self::new(DEFAULT_VAR, lo, coeffs, None)
    }

    pub fn zero_in(var: &'static str) -> Self {
        LaurentSeries { var, lo: 0, coeffs: Vec::new(), known_from: None }
    }

    pub fn zero() -> Self {
        Self::zero_in(DEFAULT_VAR)
    }

    pub fn constant(c: C) -> Self {
        Self::exact(0, vec![c])
    }

    pub fn monomial(c: C, exponent: i64) -> Self {
        Self::exact(exponent, vec![c])
    }

    /// Coefficients `f(e)` for `known_from <= e <= top`, unknown below `known_from`.
    pub fn from_fn(known_from: i64, top: i64, f: impl Fn(i64) -> C) -> Self {
        let coeffs = (known_from..=top).map(f).collect();
        Self::new(DEFAULT_VAR, known_from, coeffs, Some(known_from))
    }

    /// Same series relabelled to another variable.
    pub fn with_var(mut self, var: &'static str) -> Self {
        self.var = var;
        self
    }

    fn normalize(&mut self) {
        if let Some(k) = self.known_from {
            if self.lo < k {
                let drop = ((k - self.lo) as usize).min(self.coeffs.len());
                self.coeffs.drain(..drop);
                self.lo = k;
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    pub fn known_from(&self) -> Option<i64> {
        self.known_from
    }

    pub fn is_exact(&self) -> bool {
        self.known_from.is_none()
    }

    /// Highest exponent with a nonzero stored coefficient.
    pub fn top(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    /// Lowest exponent with a nonzero stored coefficient.
    pub fn bottom(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.lo)
    }

    /// Highest exponent that may carry a nonzero coefficient, known or not.
    pub fn support_top(&self) -> Option<i64> {
        match (self.top(), self.known_from) {
            (Some(t), _) => Some(t),
            (None, Some(k)) => Some(k - 1),
            (None, None) => None,
        }
    }

    /// Coefficient of `λ^e`, or `None` when it lies beyond the truncation.
    pub fn get(&self, e: i64) -> Option<C> {
        if self.known_from.is_some_and(|k| e < k) {
            return None;
        }
        Some(self.stored(e))
    }

    pub fn coeff(&self, e: i64) -> Result<C> {
        self.get(e).ok_or(Error::Truncated { exponent: e, known_from: self.known_from.unwrap_or(e) })
    }

    fn stored(&self, e: i64) -> C {
        if e < self.lo {
            return C::zero();
        }
        self.coeffs.get((e - self.lo) as usize).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero stored terms `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        let lo = self.lo;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (lo + k as i64, c))
    }

    /// Forget everything below `known_from` (no-op if already less precise).
    pub fn truncate(&self, known_from: i64) -> Self {
        Self::new(self.var, self.lo, self.coeffs.clone(), max_prec(self.known_from, Some(known_from)))
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::new(self.var, self.lo, self.coeffs.iter().map(|c| c.mul_ref(k)).collect(), self.known_from)
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentSeries<D> {
        LaurentSeries::new(self.var, self.lo, self.coeffs.iter().map(f).collect(), self.known_from)
    }

    /// Multiplication by `λ^b`.
    pub fn shift(&self, b: i64) -> Self {
        LaurentSeries {
            var: self.var,
            lo: if self.coeffs.is_empty() { 0 } else { self.lo + b },
            coeffs: self.coeffs.clone(),
            known_from: self.known_from.map(|k| k + b),
        }
    }

    /// The polynomial part (exponents `>= 0`); exact whenever the input is known there.
    pub fn positive_part(&self) -> Result<Self> {
        if let Some(k) = self.known_from {
            if k > 0 {
                return Err(Error::Truncated { exponent: 0, known_from: k });
            }
        }
        let coeffs = (0..=self.top().unwrap_or(-1).max(-1)).map(|e| self.stored(e)).collect();
        Ok(Self::new(self.var, 0, coeffs, None))
    }

    /// True when every coefficient known in both series agrees.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let k = max_prec(self.known_from, other.known_from);
        let lo = [self.bottom(), other.bottom(), k].into_iter().flatten().min().unwrap_or(0);
        let lo = k.map_or(lo, |k| lo.max(k));
        let hi = self.top().into_iter().chain(other.top()).max().unwrap_or(lo);
        (lo..=hi).all(|e| self.stored(e) == other.stored(e))
    }

    /// Every known coefficient is zero.
    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::IncompatibleVariables(self.var.to_string(), other.var.to_string()))
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let known_from = max_prec(self.known_from, other.known_from);
        if other.coeffs.is_empty() {
            return self.truncate_opt(known_from);
        }
        if self.coeffs.is_empty() {
            let o = if negate { other.neg_ref() } else { other.clone() };
            return o.truncate_opt(known_from);
        }
        let lo = self.lo.min(other.lo);
        let hi = self.top().unwrap().max(other.top().unwrap());
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + k] = c.clone();
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.lo - lo) as usize + k];
            if negate {
                slot.sub_assign_ref(c);
            } else {
                slot.add_assign_ref(c);
            }
        }
        Self::new(self.var, lo, coeffs, known_from)
    }

    fn truncate_opt(&self, known_from: Option<i64>) -> Self {
        match known_from {
            Some(k) => self.truncate(k),
            None => self.clone(),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        // Coefficients of the product are reliable from max(kA + topB, kB + topA) on.
        let bound_a = self.known_from.zip(other.support_top()).map(|(k, t)| k + t);
        let bound_b = other.known_from.zip(self.support_top()).map(|(k, t)| k + t);
        let known_from = max_prec(bound_a, bound_b);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return LaurentSeries { var: self.var, lo: 0, coeffs: Vec::new(), known_from };
        }
        let lo = self.lo + other.lo;
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        let skip = known_from.map_or(0, |k| (k - lo).max(0)) as usize;
        if skip >= len {
            return LaurentSeries { var: self.var, lo: 0, coeffs: Vec::new(), known_from };
        }
        let mut coeffs = vec![C::zero(); len - skip];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let j0 = skip.saturating_sub(i);
            for (j, b) in other.coeffs.iter().enumerate().skip(j0) {
                coeffs[i + j - skip].add_mul_assign(a, b);
            }
        }
        Self::new(self.var, lo + skip as i64, coeffs, known_from)
    }

    pub fn neg_ref(&self) -> Self {
        LaurentSeries {
            var: self.var,
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
            known_from: self.known_from,
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.check_var(other).expect("series arithmetic");
        self.add_impl(other, false)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.check_var(other).expect("series arithmetic");
        self.add_impl(other, true)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check_var(other).expect("series arithmetic");
        self.mul_impl(other)
    }
}

/// Checked series arithmetic: errors instead of panicking on mismatched variables.
pub fn series_arith<C: Ring>(a: &LaurentSeries<C>, b: &LaurentSeries<C>, op: SeriesOp) -> Result<LaurentSeries<C>> {
    a.check_var(b)?;
    Ok(match op {
        SeriesOp::Add => a.add_impl(b, false),
        SeriesOp::Sub => a.add_impl(b, true),
        SeriesOp::Mul => a.mul_impl(b),
    })
}

impl<'a, C: Ring> Add<&'a LaurentSeries<C>> for &'a LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn add(self, rhs: &'a LaurentSeries<C>) -> LaurentSeries<C> {
        self.add_ref(rhs)
    }
}

impl<'a, C: Ring> Sub<&'a LaurentSeries<C>> for &'a LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn sub(self, rhs: &'a LaurentSeries<C>) -> LaurentSeries<C> {
        self.sub_ref(rhs)
    }
}

impl<'a, C: Ring> Mul<&'a LaurentSeries<C>> for &'a LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn mul(self, rhs: &'a LaurentSeries<C>) -> LaurentSeries<C> {
        self.mul_ref(rhs)
    }
}

impl<'a, C: Ring> Neg for &'a LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn neg(self) -> LaurentSeries<C> {
        self.neg_ref()
    }
}

impl<C: Ring> fmt::Debug for LaurentSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (e, c) in self.terms() {
            m.entry(&e, c);
        }
        m.finish()?;
        if let Some(k) = self.known_from {
            write!(f, " + O({}^{})", self.var, k - 1)?;
        }
        Ok(())
    }
}
