//! Sparse multivariate polynomials in indexed lattice symbols `v_i`, `w_i`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::forward_ops;
use super::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymKind {
    V,
    W,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub kind: SymKind,
    pub index: i64,
}

impl Symbol {
    pub fn v(index: i64) -> Self {
        Symbol { kind: SymKind::V, index }
    }
    pub fn w(index: i64) -> Self {
        Symbol { kind: SymKind::W, index }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            SymKind::V => "v",
            SymKind::W => "w",
        };
        write!(f, "{k}[{}]", self.index)
    }
}

/// Monomial as a sorted list of `(symbol, exponent)` with positive exponents.
pub type Monomial = Vec<(Symbol, u32)>;

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymPoly<T = BigInt> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Ring> SymPoly<T> {
    pub fn symbol(s: Symbol) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(s, 1)], T::one());
        SymPoly { terms }
    }

    pub fn v(i: i64) -> Self {
        Self::symbol(Symbol::v(i))
    }

    pub fn w(i: i64) -> Self {
        Self::symbol(Symbol::w(i))
    }

    pub fn constant(c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        SymPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the given monomial (exponents in any order).
    pub fn coeff_of(&self, mono: &[(Symbol, u32)]) -> T {
        let mut m: Monomial = mono.to_vec();
        m.sort();
        self.terms.get(&m).cloned().unwrap_or_else(T::zero)
    }

    /// Translate every symbol index by `k` (`v_i -> v_{i+k}`, `w_i -> w_{i+k}`).
    pub fn shift(&self, k: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let m = m
                    .iter()
                    .map(|(s, e)| (Symbol { kind: s.kind, index: s.index + k }, *e))
                    .collect();
                (m, c.clone())
            })
            .collect();
        SymPoly { terms }
    }

    /// Substitute every symbol by a ring element.
    pub fn eval<R: Ring>(&self, value: impl Fn(Symbol) -> R, coeff: impl Fn(&T) -> R) -> R {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (s, e) in m {
                t = t.mul_ref(&value(*s).pow_u32(*e));
            }
            acc.add_assign_ref(&t);
        }
        acc
    }

    fn insert(terms: &mut BTreeMap<Monomial, T>, m: Monomial, c: T) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl<T: Ring> Zero for SymPoly<T> {
    fn zero() -> Self {
        SymPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Ring> One for SymPoly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Ring for SymPoly<T> {
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            Self::insert(&mut out.terms, m.clone(), c.neg_ref());
        }
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::insert(&mut terms, mono_mul(ma, mb), ca.mul_ref(cb));
            }
        }
        SymPoly { terms }
    }
    fn neg_ref(&self) -> Self {
        SymPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect() }
    }
    fn from_i64(value: i64) -> Self {
        Self::constant(T::from_i64(value))
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            Self::insert(&mut self.terms, m.clone(), c.clone());
        }
    }
}

forward_ops!(SymPoly);

impl<T: Ring + fmt::Display> fmt::Display for SymPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut s = c.to_string();
                for (sym, e) in m {
                    if *e == 1 {
                        s.push_str(&format!("*{sym}"));
                    } else {
                        s.push_str(&format!("*{sym}^{e}"));
                    }
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<T: Ring> fmt::Debug for SymPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
