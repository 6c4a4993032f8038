//! Dense univariate polynomials over an exact ring.
//!
//! `Poly<BigInt>` is the correlator output type (polynomials in the matrix
//! size `N`) and the site ring `Z[n]` of the symbolic GUE resolvent.
//! Coefficients are stored low degree first and trimmed so the leading
//! coefficient is nonzero; the zero polynomial has no coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{binomial, exact_div, rational_to_integer, Field, Ring};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn var() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x + shift`, the site variable translated by an integer.
    pub fn var_plus(shift: i64) -> Self {
        Self::new(vec![T::from_i64(shift), T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^d`, zero beyond the degree.
    pub fn coeff(&self, d: usize) -> T {
        self.coeffs.get(d).cloned().unwrap_or_else(T::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Iterator over `(degree, coefficient)` for nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, k: &T) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|c| c.mul_ref(k)).collect())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    /// Substitution `p(x) -> p(x + k)`, realizing the site shift `n -> n + k`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 || self.coeffs.len() < 2 {
            return self.clone();
        }
        // Horner with the linear polynomial (x + k).
        let lin = Self::var_plus(k);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    /// Composition `p(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale_i64(i as i64))
                .collect(),
        )
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_degree(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    fn add_impl(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }

    fn sub_impl(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg_ref(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul_assign(a, b);
            }
        }
        Self::new(out)
    }
}

impl<T: Field> Poly<T> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead_inv = divisor
            .leading()
            .and_then(|l| l.inv())
            .expect("division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul_ref(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let p = c.mul_ref(d);
                rem[k + j].sub_assign_ref(&p);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Poly<BigInt> {
    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Exact division of every coefficient, `None` if some coefficient is not divisible.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| exact_div(c, d))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(coeffs))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Poly<BigRational> {
    /// `Some` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<Poly<BigInt>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(rational_to_integer)
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::new(coeffs))
    }

    /// Binomial polynomial `C(x + shift, k)` as an element of `Q[x]`.
    pub fn binomial_in(shift: i64, k: u64) -> Self {
        let mut acc = Self::one();
        for i in 0..k {
            acc = &acc * &Self::var_plus(shift - i as i64);
        }
        let kf: BigInt = (1..=k).fold(BigInt::one(), |a, b| a * b);
        acc.scale(&BigRational::new(BigInt::one(), kf))
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }
}

impl<T: Ring> Ring for Poly<T> {
    fn add_ref(&self, other: &Self) -> Self {
        self.add_impl(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub_impl(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
    fn neg_ref(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect() }
    }
    fn from_i64(value: i64) -> Self {
        Self::constant(T::from_i64(value))
    }
    fn add_assign_ref(&mut self, other: &Self) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), T::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign_ref(b);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let need = a.coeffs.len() + b.coeffs.len() - 1;
        if need > self.coeffs.len() {
            self.coeffs.resize(need, T::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                self.coeffs[i + j].add_mul_assign(x, y);
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

macro_rules! forward_ops {
    ($ty:ident) => {
        impl<'a, T: Ring> std::ops::Add<&'a $ty<T>> for &'a $ty<T> {
            type Output = $ty<T>;
            fn add(self, rhs: &'a $ty<T>) -> $ty<T> {
                self.add_ref(rhs)
            }
        }
        impl<'a, T: Ring> std::ops::Sub<&'a $ty<T>> for &'a $ty<T> {
            type Output = $ty<T>;
            fn sub(self, rhs: &'a $ty<T>) -> $ty<T> {
                self.sub_ref(rhs)
            }
        }
        impl<'a, T: Ring> std::ops::Mul<&'a $ty<T>> for &'a $ty<T> {
            type Output = $ty<T>;
            fn mul(self, rhs: &'a $ty<T>) -> $ty<T> {
                self.mul_ref(rhs)
            }
        }
        impl<T: Ring> std::ops::Add for $ty<T> {
            type Output = $ty<T>;
            fn add(self, rhs: $ty<T>) -> $ty<T> {
                self.add_ref(&rhs)
            }
        }
        impl<T: Ring> std::ops::Sub for $ty<T> {
            type Output = $ty<T>;
            fn sub(self, rhs: $ty<T>) -> $ty<T> {
                self.sub_ref(&rhs)
            }
        }
        impl<T: Ring> std::ops::Mul for $ty<T> {
            type Output = $ty<T>;
            fn mul(self, rhs: $ty<T>) -> $ty<T> {
                self.mul_ref(&rhs)
            }
        }
        impl<T: Ring> std::ops::Neg for $ty<T> {
            type Output = $ty<T>;
            fn neg(self) -> $ty<T> {
                self.neg_ref()
            }
        }
        impl<'a, T: Ring> std::ops::Neg for &'a $ty<T> {
            type Output = $ty<T>;
            fn neg(self) -> $ty<T> {
                self.neg_ref()
            }
        }
    };
}
pub(crate) use forward_ops;

forward_ops!(Poly);

impl<T: Ring + fmt::Display> Poly<T> {
    /// Human-readable form in the given variable, highest degree first.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (d, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let c = c.to_string();
            let term = match d {
                0 => c,
                1 if c == "1" => var.to_string(),
                1 => format!("{c}*{var}"),
                _ if c == "1" => format!("{var}^{d}"),
                _ => format!("{c}*{var}^{d}"),
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("N"))
    }
}

impl<T: Ring> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

/// `C(n, k)` as an integer polynomial in `n` scaled by `k!` is not integral in
/// general, so callers that need `Z[n]` go through `Q[n]` and convert back.
pub fn binomial_int(n: u64, k: u64) -> BigInt {
    binomial(n, k)
}
