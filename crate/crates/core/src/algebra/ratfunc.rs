//! The field `Q(t)` of univariate rational functions.
//!
//! Stored as `num / den` with `den` monic and `gcd(num, den) = 1`. Quotients
//! whose denominators are powers of `t` (the common case for series in `x = t^2`)
//! skip the polynomial gcd.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

type PolyQ = Poly<BigRational>;

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: PolyQ,
    den: PolyQ,
}

fn is_monomial(p: &PolyQ) -> bool {
    p.terms().count() == 1
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RatFunc {
    pub fn new(num: PolyQ, den: PolyQ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if is_monomial(&den) {
            // den = c t^k: cancel the common power of t and make den monic.
            let k = den.degree().unwrap();
            let c = den.leading().unwrap().clone();
            let v = num.valuation().unwrap().min(k);
            let num = Poly::new(num.coeffs()[v..].to_vec()).scale(&c.recip());
            return RatFunc { num, den: Poly::monomial(q(1), k - v) };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().unwrap().recip();
        RatFunc { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn from_poly(p: PolyQ) -> Self {
        RatFunc { num: p, den: PolyQ::one() }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// `c t^k` for any integer `k`.
    pub fn monomial(c: BigRational, k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::monomial(c, k as usize))
        } else {
            Self::new(Poly::constant(c), Poly::monomial(q(1), (-k) as usize))
        }
    }

    pub fn t() -> Self {
        Self::monomial(q(1), 1)
    }

    /// `x = t^2`.
    pub fn x() -> Self {
        Self::monomial(q(1), 2)
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }

    /// Laurent form `Σ c_k t^k` when the denominator is a power of `t`.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, BigRational)>> {
        if !is_monomial(&self.den) {
            return None;
        }
        let k = self.den.degree().unwrap() as i64;
        Some(self.num.terms().map(|(d, c)| (d as i64 - k, c.clone())).collect())
    }

    pub fn d_dt(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        if let Some(terms) = self.laurent_terms() {
            return terms
                .into_iter()
                .filter(|(k, _)| *k != 0)
                .map(|(k, c)| Self::monomial(c * q(k), k - 1))
                .fold(Self::zero(), |a, b| a.add_ref(&b));
        }
        let n = self.num.derivative().mul_ref(&self.den).sub_ref(&self.num.mul_ref(&self.den.derivative()));
        Self::new(n, self.den.mul_ref(&self.den))
    }

    /// `d/dx = (1/(2t)) d/dt` with `x = t^2`.
    pub fn d_dx(&self) -> Self {
        self.d_dt().mul_ref(&Self::monomial(BigRational::new(1.into(), 2.into()), -1))
    }

    pub fn eval(&self, t: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::Pole(format!("t = {t}")));
        }
        Ok(self.num.eval(t) / d)
    }

    /// `f(-t) = f(t)`, i.e. `f` is a rational function of `x = t^2`.
    pub fn is_even(&self) -> bool {
        let flip = |p: &PolyQ| p.compose(&Poly::new(vec![q(0), q(-1)]));
        flip(&self.num).mul_ref(&self.den) == self.num.mul_ref(&flip(&self.den))
    }

    fn add_impl(&self, o: &Self, negate: bool) -> Self {
        let on = if negate { o.num.neg_ref() } else { o.num.clone() };
        if self.den == o.den {
            return Self::new(self.num.add_ref(&on), self.den.clone());
        }
        if is_monomial(&self.den) && is_monomial(&o.den) {
            let (a, b) = (self.den.degree().unwrap(), o.den.degree().unwrap());
            let k = a.max(b);
            let n = self.num.shift_degree(k - a).add_ref(&on.shift_degree(k - b));
            return Self::new(n, Poly::monomial(q(1), k));
        }
        Self::new(self.num.mul_ref(&o.den).add_ref(&on.mul_ref(&self.den)), self.den.mul_ref(&o.den))
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: PolyQ::zero(), den: PolyQ::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc { num: PolyQ::one(), den: PolyQ::one() }
    }
}

impl Ring for RatFunc {
    fn add_ref(&self, o: &Self) -> Self {
        self.add_impl(o, false)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_impl(o, true)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul_ref(&o.num), self.den.mul_ref(&o.den))
    }
    fn neg_ref(&self) -> Self {
        RatFunc { num: self.num.neg_ref(), den: self.den.clone() }
    }
    fn from_i64(value: i64) -> Self {
        Self::from_rational(q(value))
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl std::ops::Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self.add_ref(&rhs)
    }
}

impl std::ops::Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self.mul_ref(&rhs)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.display("t"))
        } else {
            write!(f, "({})/({})", self.num.display("t"), self.den.display("t"))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
