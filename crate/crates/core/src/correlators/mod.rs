//! Connected GUE correlators `<tr M^{i_1} ... tr M^{i_k}>_c` as polynomials in `N`.

pub mod closed_form;
pub mod kpoint;
pub mod mixed;

pub use closed_form::{one_point, two_point_closed_form};
pub use kpoint::{k_point, k_point_with, KPointMethod, KPointOptions};
pub use mixed::{general_mixed, mixed_correlator, rk_family, subset_family, traces, two_point};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::PolyN;

/// Matrix size: a polynomial in `N`, or its value at a fixed integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NMode {
    Symbolic,
    Fixed(i64),
}

/// `<tr M^{i_1} ... tr M^{i_k}>_c` by the cheapest route: closed forms for `k <= 2`,
/// the commutator family with the two largest exponents free for `k >= 3`.
pub fn correlator(exps: &[u32]) -> Result<PolyN> {
    if exps.contains(&0) {
        return Err(Error::InvalidInput("exponents must be positive".into()));
    }
    match exps.len() {
        0 => Err(Error::InvalidInput("at least one exponent is required".into())),
        1 => one_point(exps[0]),
        2 => two_point(exps[0], exps[1]),
        _ => {
            let mut v = exps.to_vec();
            v.sort_unstable();
            let j = v.pop().unwrap();
            let i = v.pop().unwrap();
            general_mixed(&v, i, j)
        }
    }
}

/// Value of a correlator polynomial at an integer matrix size.
pub fn evaluate_at(p: &PolyN, n: i64) -> BigInt {
    p.eval(&BigInt::from(n))
}
