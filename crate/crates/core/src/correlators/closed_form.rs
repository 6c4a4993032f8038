//! Hypergeometric closed forms for one- and two-point correlators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::ring::{double_factorial, Ring};
use crate::error::{Error, Result};
use crate::resolvent::hypergeometric::{hyp2f1_terminating, minus_n, one_minus_n};
use crate::{PolyN, PolyQ};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn df(n: i64) -> BigRational {
    BigRational::from_integer(double_factorial(n))
}

/// `2F1(-j, b; c; 2)` with `b` one of `-N`, `1 - N`.
fn f(j: i64, b: &PolyQ, c: i64) -> PolyQ {
    hyp2f1_terminating(j as u64, b, c, &q(2))
}

fn to_int(p: PolyQ) -> Result<PolyN> {
    p.to_integer().ok_or_else(|| Error::Consistency("closed form is not integral".into()))
}

/// `<tr M^i>_c` from the Harer-Zagier type closed form.
pub fn one_point(i: u32) -> Result<PolyN> {
    if i == 0 {
        return Err(Error::InvalidInput("exponents must be positive".into()));
    }
    if i % 2 == 1 {
        return Ok(PolyN::zero());
    }
    let j = i as i64 / 2;
    let (mn, omn) = (minus_n(), one_minus_n());
    let bracket = f(j, &mn, 2).sub_ref(&f(j - 1, &omn, 3).scale(&q(j)));
    to_int(bracket.mul_ref(&PolyQ::var()).scale(&df(2 * j - 1)))
}

/// `<tr M^i tr M^j>_c` from the double-hypergeometric finite sums.
pub fn two_point_closed_form(i: u32, j: u32) -> Result<PolyN> {
    if i == 0 || j == 0 {
        return Err(Error::InvalidInput("exponents must be positive".into()));
    }
    if (i + j) % 2 == 1 {
        return Ok(PolyN::zero());
    }
    let (a, b) = (i as i64 - 1, j as i64 - 1);
    let (mn, omn) = (minus_n(), one_minus_n());
    let n = PolyQ::var();
    let mut acc = f((a + b) / 2, &omn, 2).scale(&(df(a + b + 1) * q(1 + b))).mul_ref(&n);
    let n2 = n.mul_ref(&n).scale(&q(2));
    let mut s = b % 2;
    while s <= b - 2 {
        let t = f((a + s) / 2, &omn, 2).mul_ref(&f((b - s - 2) / 2, &omn, 2));
        acc.add_assign_ref(&t.scale(&(df(a + s + 1) * df(b - s - 1) * q(1 + s))).mul_ref(&n2));
        s += 2;
    }
    let mut s = (b - 1).rem_euclid(2);
    while s <= b - 1 {
        let (p, r) = ((a + 1 + s) / 2, (b - s - 1) / 2);
        let t = f(p, &mn, 1).mul_ref(&f(r, &omn, 1)).add_ref(&f(r, &mn, 1).mul_ref(&f(p, &omn, 1)));
        acc.sub_assign_ref(&t.scale(&(df(a + s) * df(b - s - 2) * q(1 + s))).mul_ref(&n));
        s += 2;
    }
    to_int(acc)
}
