//! Terminating Gauss hypergeometric sums with polynomial parameters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::ring::{binomial, Ring};
use crate::algebra::Poly;
use crate::PolyQ;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `2F1(-j, b; c; z)` for a non-negative integer `j`, a polynomial parameter `b`
/// and a positive integer `c`; the sum stops after `j + 1` terms.
pub fn hyp2f1_terminating(j: u64, b: &PolyQ, c: i64, z: &BigRational) -> PolyQ {
    assert!(c > 0, "lower parameter must be positive");
    let mut term = PolyQ::one();
    let mut sum = PolyQ::one();
    for i in 0..j as i64 {
        // ratio t_{i+1}/t_i = (-j + i)(b + i) z / ((c + i)(i + 1))
        let scalar = q(-(j as i64) + i) * z / (q(c + i) * q(i + 1));
        let bi = b.add_ref(&PolyQ::constant(q(i)));
        term = term.mul_ref(&bi).scale(&scalar);
        sum.add_assign_ref(&term);
    }
    sum
}

/// Same sum with the second upper parameter an integer.
pub fn hyp2f1_at(j: u64, b: i64, c: i64, z: &BigRational) -> BigRational {
    hyp2f1_terminating(j, &PolyQ::constant(q(b)), c, z).coeff(0)
}

/// `A_{n,j} = (1/n) Σ_i 2^i C(j,i) C(n,i+1)` as a polynomial in `n`.
///
/// The `1/n` cancels against `C(n, i+1)`; coefficients are rational in general.
pub fn hyp_a(j: u64) -> PolyQ {
    let mut sum = PolyQ::zero();
    for i in 0..=j {
        // C(n, i+1)/n = C(n-1, i)/(i+1)
        let c = PolyQ::binomial_in(-1, i).scale(&BigRational::new(binomial(j, i) << i as usize, BigInt::from(i + 1)));
        sum.add_assign_ref(&c);
    }
    sum
}

/// `B_{n,j} = Σ_i 2^i C(j,i) C(n-1,i)` as a polynomial in `n`.
pub fn hyp_b(j: u64) -> PolyQ {
    let mut sum = PolyQ::zero();
    for i in 0..=j {
        let c = PolyQ::binomial_in(-1, i).scale(&BigRational::from_integer(binomial(j, i) << i as usize));
        sum.add_assign_ref(&c);
    }
    sum
}

/// `A_{n,j}` at an integer `n`.
pub fn hyp_a_at(n: i64, j: u64) -> BigRational {
    hyp_a(j).eval(&q(n))
}

/// `B_{n,j}` at an integer `n`.
pub fn hyp_b_at(n: i64, j: u64) -> BigRational {
    hyp_b(j).eval(&q(n))
}

/// `1 - n` as an element of `Q[n]`.
pub fn one_minus_n() -> PolyQ {
    Poly::new(vec![q(1), q(-1)])
}

/// `-n` as an element of `Q[n]`.
pub fn minus_n() -> PolyQ {
    Poly::new(vec![q(0), q(-1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_matches_hypergeometric_form() {
        let two = q(2);
        for j in 0..8 {
            assert_eq!(hyp_a(j), hyp2f1_terminating(j, &one_minus_n(), 2, &two), "j = {j}");
        }
    }

    #[test]
    fn b_matches_hypergeometric_form() {
        let two = q(2);
        for j in 0..8 {
            assert_eq!(hyp_b(j), hyp2f1_terminating(j, &one_minus_n(), 1, &two), "j = {j}");
        }
    }

    #[test]
    fn a_small_values() {
        for j in 0..6 {
            assert_eq!(hyp_a_at(1, j), q(1));
        }
        assert_eq!(hyp_a(0), PolyQ::one());
        assert_eq!(hyp_a(1), Poly::new(vec![q(0), q(1)]));
        // A_{3,2} = 19/3: the polynomial family is not integral.
        assert_eq!(hyp_a_at(3, 2), BigRational::new(19.into(), 3.into()));
    }

    #[test]
    fn b_boundary_values() {
        for j in 0..8u64 {
            assert_eq!(hyp_b(0), PolyQ::one());
            let sign = if j % 2 == 0 { 1 } else { -1 };
            assert_eq!(hyp_b_at(0, j), q(sign));
            assert_eq!(hyp_b_at(1, j), q(1));
        }
    }
}
