//! Coefficient ring abstraction.
//!
//! Every series, matrix and polynomial in the crate is generic over [`Ring`].
//! The trait is deliberately small: by-reference arithmetic (so big integers
//! are not cloned on every product) plus integer embedding. [`Field`] adds
//! exact division.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_i64(value: i64) -> Self;

    fn from_bigint(value: &BigInt) -> Self {
        // Horner in base 2^32 keeps this generic over any ring.
        let (sign, digits) = value.to_u32_digits();
        let base = Self::from_i64(1 << 32);
        let mut acc = Self::zero();
        for d in digits.iter().rev() {
            acc = acc.mul_ref(&base).add_ref(&Self::from_i64(i64::from(*d)));
        }
        if sign == num_bigint::Sign::Minus {
            acc.neg_ref()
        } else {
            acc
        }
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self = self.sub_ref(other);
    }

    /// `self += a * b`, skipping the product when either factor is zero.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }

    fn scale_i64(&self, k: i64) -> Self {
        self.mul_ref(&Self::from_i64(k))
    }

    fn pow_u32(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul_ref(&i))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num)
            .div_ref(&Self::from_i64(den))
            .expect("nonzero denominator")
    }
}

impl Ring for BigInt {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }
    fn from_bigint(value: &BigInt) -> Self {
        value.clone()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += a * b;
    }
}

impl Ring for BigRational {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
    fn from_bigint(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

macro_rules! checked_machine_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn add_ref(&self, other: &Self) -> Self {
                self.checked_add(*other).expect(concat!(stringify!($t), " overflow"))
            }
            fn sub_ref(&self, other: &Self) -> Self {
                self.checked_sub(*other).expect(concat!(stringify!($t), " overflow"))
            }
            fn mul_ref(&self, other: &Self) -> Self {
                self.checked_mul(*other).expect(concat!(stringify!($t), " overflow"))
            }
            fn neg_ref(&self) -> Self {
                self.checked_neg().expect(concat!(stringify!($t), " overflow"))
            }
            fn from_i64(value: i64) -> Self {
                <$t>::try_from(value).expect(concat!(stringify!($t), " overflow"))
            }
        }
    };
}

// Machine integers panic instead of wrapping; handy for fast small tests.
checked_machine_ring!(i64);
checked_machine_ring!(i128);

/// Exact conversion of a rational to an integer, `None` if the denominator is not 1.
pub fn rational_to_integer(q: &BigRational) -> Option<BigInt> {
    if q.denom().is_one() {
        Some(q.numer().clone())
    } else {
        None
    }
}

/// Exact integer division, `None` when `d` does not divide `n`.
pub fn exact_div(n: &BigInt, d: &BigInt) -> Option<BigInt> {
    if d.is_zero() {
        return None;
    }
    let (q, r) = n.div_rem(d);
    r.is_zero().then_some(q)
}

/// Double factorial with the convention `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> BigInt {
    assert!(n >= -1, "double factorial undefined for {n}");
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient C(n, k) for non-negative n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn is_nonneg(x: &BigInt) -> bool {
    !x.is_negative()
}
